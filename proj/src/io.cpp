#include "tevs/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>

#include <json.hpp>

namespace tevs::io {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::ParseError, where + ": " + what);
}

TimeSeries build_series(std::vector<Sample> samples, const LoadOptions& options,
                        const std::string& label) {
    try {
        return options.sanitize ? sanitize(std::move(samples), options.epsilon)
                                : validate(std::move(samples));
    } catch (const Error& e) {
        throw Error(e.code(), "series '" + label + "': " + e.what());
    }
}

double to_real(const json& node, const std::string& where) {
    if (!node.is_number()) parse_fail(where, "expected a number");
    return node.get<double>();
}

Dataset read_json(std::istream& in, const LoadOptions& options) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};

    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail("byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.is_object()) parse_fail("document", "expected an object");
    if (!doc.contains("series") || !doc["series"].is_array()) {
        parse_fail("document", "missing \"series\" array");
    }
    std::size_t d = 0;
    if (doc.contains("d")) {
        if (!doc["d"].is_number_integer() || doc["d"].get<long long>() < 0) {
            parse_fail("document", "\"d\" must be a non-negative integer");
        }
        d = doc["d"].get<std::size_t>();
    }

    Dataset data;
    const json& series = doc["series"];
    for (std::size_t i = 0; i < series.size(); ++i) {
        const json& rec = series[i];
        const std::string where = "series " + std::to_string(i);
        if (!rec.is_object()) parse_fail(where, "expected an object");
        std::string label = "s" + std::to_string(i);
        if (rec.contains("label")) {
            if (!rec["label"].is_string()) parse_fail(where, "label must be a string");
            label = rec["label"].get<std::string>();
        }
        if (!rec.contains("samples") || !rec["samples"].is_array()) {
            parse_fail(where, "missing \"samples\" array");
        }
        std::vector<Sample> samples;
        const json& arr = rec["samples"];
        samples.reserve(arr.size());
        for (std::size_t j = 0; j < arr.size(); ++j) {
            const std::string at = where + " sample " + std::to_string(j);
            const json& s = arr[j];
            if (!s.is_object() || !s.contains("t") || !s.contains("v")) {
                parse_fail(at, "expected {\"t\": ..., \"v\": [...]}");
            }
            Sample sample;
            sample.t = to_real(s["t"], at);
            const json& v = s["v"];
            if (v.is_number()) {
                sample.value.push_back(v.get<double>());
            } else if (v.is_array()) {
                for (const json& x : v) sample.value.push_back(to_real(x, at));
            } else {
                parse_fail(at, "\"v\" must be a number or an array");
            }
            if (d != 0 && sample.value.size() != d) {
                throw Error(ErrorCode::DimensionMismatch,
                            at + " has dimension " + std::to_string(sample.value.size()) +
                                ", expected " + std::to_string(d));
            }
            samples.push_back(std::move(sample));
        }
        data.series.push_back(build_series(std::move(samples), options, label));
        data.labels.push_back(std::move(label));
    }
    check_dataset(data);
    return data;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_csv_real(std::string_view field, const std::string& where) {
    field = trim(field);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), x);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
        parse_fail(where, "cannot parse '" + std::string(field) + "' as a number");
    }
    return x;
}

Dataset read_csv(std::istream& in, const LoadOptions& options) {
    std::string line;
    std::size_t row = 0;
    bool header_seen = false;
    std::vector<std::string> order;
    std::map<std::string, std::vector<Sample>> groups;

    while (std::getline(in, line)) {
        ++row;
        const std::string_view view = trim(line);
        if (view.empty()) continue;
        const std::string where = "row " + std::to_string(row);
        if (!header_seen) {
            if (view != "label,t,v") parse_fail(where, "expected header \"label,t,v\"");
            header_seen = true;
            continue;
        }
        const auto c1 = view.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : view.find(',', c1 + 1);
        if (c2 == std::string_view::npos || view.find(',', c2 + 1) != std::string_view::npos) {
            parse_fail(where, "expected 3 fields");
        }
        std::string label(trim(view.substr(0, c1)));
        Sample s;
        s.t = parse_csv_real(view.substr(c1 + 1, c2 - c1 - 1), where);
        s.value.push_back(parse_csv_real(view.substr(c2 + 1), where));
        auto [it, inserted] = groups.try_emplace(label);
        if (inserted) order.push_back(label);
        it->second.push_back(std::move(s));
    }

    Dataset data;
    for (const std::string& label : order) {
        data.series.push_back(build_series(std::move(groups[label]), options, label));
        data.labels.push_back(label);
    }
    return data;
}

void write_json(std::ostream& out, const Dataset& data) {
    check_dataset(data);
    json doc;
    doc["d"] = data.dim() == 0 ? 1 : data.dim();
    json series = json::array();
    for (std::size_t i = 0; i < data.series.size(); ++i) {
        json samples = json::array();
        for (const Sample& s : data.series[i]) {
            samples.push_back({{"t", s.t}, {"v", s.value}});
        }
        series.push_back({{"label", data.label(i)}, {"samples", std::move(samples)}});
    }
    doc["series"] = std::move(series);
    out << doc.dump() << '\n';
}

void write_csv(std::ostream& out, const Dataset& data) {
    check_dataset(data);
    if (data.dim() > 1) {
        throw Error(ErrorCode::InvalidArgument, "CSV output supports d = 1 only");
    }
    out << "label,t,v\n";
    for (std::size_t i = 0; i < data.series.size(); ++i) {
        const std::string label = data.label(i);
        if (label.find_first_of(",\r\n") != std::string::npos) {
            throw Error(ErrorCode::InvalidArgument, "CSV label may not contain ',' or newlines");
        }
        for (const Sample& s : data.series[i]) {
            out << label << ',' << format_real(s.t) << ',' << format_real(s.value[0]) << '\n';
        }
    }
}

}  // namespace

Format format_for(const std::filesystem::path& path) {
    return path.extension() == ".csv" ? Format::Csv : Format::Json;
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw Error(ErrorCode::InvalidArgument, "unknown format '" + name + "'");
}

Dataset read(std::istream& in, Format format, const LoadOptions& options) {
    return format == Format::Json ? read_json(in, options) : read_csv(in, options);
}

void write(std::ostream& out, const Dataset& data, Format format) {
    if (format == Format::Json) {
        write_json(out, data);
    } else {
        write_csv(out, data);
    }
}

Dataset load(const std::filesystem::path& path, Format format, const LoadOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    return read(in, format, options);
}

Dataset load(const std::filesystem::path& path, const LoadOptions& options) {
    return load(path, format_for(path), options);
}

void store(const Dataset& data, const std::filesystem::path& path, Format format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path.string());
    write(out, data, format);
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace tevs::io
