#include "tevs/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tevs/algebra.hpp"
#include "tevs/io.hpp"
#include "tevs/kernel.hpp"
#include "tevs/ortho.hpp"
#include "tevs/tep.hpp"
#include "tevs/textsim.hpp"

namespace tevs::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Globals {
    bool sanitize = false;
    double eps = kDefaultEpsilon;
    std::string format = "json";
    std::uint64_t seed = 0;
};

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return kUsage;
        case ErrorCode::NegativeSquare:
        case ErrorCode::NonFiniteScalar:
        case ErrorCode::SizeLimitExceeded:
            return kNumericError;
        default:
            return kDataError;
    }
}

io::LoadOptions load_options(const Globals& g) { return {g.sanitize, g.eps}; }

Dataset load_dataset(const std::string& path, const Globals& g) {
    return io::load(path, load_options(g));
}

TimeSeries load_single(const std::string& path, const Globals& g) {
    Dataset d = load_dataset(path, g);
    if (d.series.size() != 1) {
        throw Error(ErrorCode::ParseError,
                    path + ": expected exactly one series, found " + std::to_string(d.series.size()));
    }
    return d.series.front();
}

void emit_dataset(const Dataset& data, const std::string& out_path, const Globals& g,
                  std::ostream& out) {
    const io::Format format = io::parse_format(g.format);
    if (out_path.empty()) {
        io::write(out, data, format);
    } else {
        io::store(data, out_path, format);
    }
}

// Reads a query given either inline or as a path to a text file.
std::string read_query(const std::string& query) {
    std::error_code ec;
    if (fs::is_regular_file(query, ec)) {
        std::ifstream in(query, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    return query;
}

struct Corpus {
    std::vector<json> ids;
    std::vector<text::TokenSeries> docs;
};

// A directory (one document per regular file, sorted by name) or a JSONL
// file whose lines are strings or {"id": ..., "text": ...} objects.
Corpus read_corpus(const std::string& path) {
    Corpus c;
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path)) {
            if (entry.is_regular_file()) files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const fs::path& f : files) {
            std::ifstream in(f, std::ios::binary);
            const std::string body{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
            c.ids.emplace_back(f.filename().string());
            c.docs.push_back(text::tokenize(body));
        }
        return c;
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open corpus " + path);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec;
        try {
            rec = json::parse(line);
        } catch (const json::parse_error& e) {
            throw Error(ErrorCode::ParseError, path + " line " + std::to_string(row) + ": " + e.what());
        }
        if (rec.is_string()) {
            c.ids.emplace_back(c.docs.size());
            c.docs.push_back(text::tokenize(rec.get<std::string>()));
        } else if (rec.is_object() && rec.contains("text") && rec["text"].is_string()) {
            c.ids.push_back(rec.contains("id") ? rec["id"] : json(c.docs.size()));
            c.docs.push_back(text::tokenize(rec["text"].get<std::string>()));
        } else {
            throw Error(ErrorCode::ParseError,
                        path + " line " + std::to_string(row) + ": expected a string or {\"text\": ...}");
        }
    }
    return c;
}

Dataset random_dataset(std::size_t count, std::size_t max_len, std::size_t dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(max_len, 1));
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    std::uniform_real_distribution<double> gap(0.01, 0.2);
    Dataset data;
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<Sample> samples(length(rng));
        double t = 0.0;
        for (Sample& s : samples) {
            t += gap(rng);
            s.t = t;
            s.value.resize(dim);
            for (double& x : s.value) x = value(rng);
        }
        data.series.push_back(sanitize(std::move(samples), 1e-12));
        data.labels.push_back("r" + std::to_string(k));
    }
    return data;
}

void require_nu(double nu) {
    if (!std::isfinite(nu) || nu < 0.0) throw Error(ErrorCode::InvalidArgument, "--nu must be >= 0");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Time elastic inner products, distances, kernels and bases for time series", "tevs"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_flag("--sanitize", g.sanitize, "Replace exact zero values with --eps instead of rejecting");
    app.add_option("--eps", g.eps, "Replacement for zero values (default 2^-1074)");
    app.add_option("--format", g.format, "Dataset output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "Seed for randomized data generation");

    double nu = 0.01;

    // ip
    std::string ip_a, ip_b, variant = "teip";
    auto* ip = app.add_subcommand("ip", "Time elastic product of two single-series files");
    ip->add_option("A", ip_a)->required();
    ip->add_option("B", ip_b)->required();
    ip->add_option("--nu", nu, "Time stiffness");
    ip->add_option("--variant", variant)->check(CLI::IsMember({"teip", "twip1", "twip2"}));

    // dist
    std::string dist_a, dist_b;
    auto* dist = app.add_subcommand("dist", "Elastic distance between two single-series files");
    dist->add_option("A", dist_a)->required();
    dist->add_option("B", dist_b)->required();
    dist->add_option("--nu", nu, "Time stiffness");

    // gram
    std::string gram_in, kernel_name = "teip", gram_out;
    double gamma = 1.0, gram_tol = 1e-8;
    bool psd = false;
    unsigned threads = 1;
    auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of a dataset");
    gram_cmd->add_option("data", gram_in)->required();
    gram_cmd->add_option("--nu", nu, "Time stiffness");
    gram_cmd->add_option("--kernel", kernel_name)->check(CLI::IsMember({"teip", "gauss"}));
    gram_cmd->add_option("--gamma", gamma, "Bandwidth of the Gaussian kernel");
    gram_cmd->add_flag("--psd-check", psd, "Report the smallest eigenvalue");
    gram_cmd->add_option("--tol", gram_tol, "PSD tolerance relative to max(1, ||K||_2)");
    gram_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    gram_cmd->add_option("-o,--out", gram_out, "Write the matrix to this file instead of stdout");

    // gs
    std::string gs_in, gs_out;
    bool normalize = false;
    double gs_tol = 1e-10;
    auto* gs = app.add_subcommand("gs", "Gram-Schmidt orthogonalization of a family");
    gs->add_option("family", gs_in)->required();
    gs->add_option("--nu", nu, "Time stiffness");
    gs->add_flag("--normalize", normalize, "Scale basis elements to unit norm");
    gs->add_option("--tol", gs_tol, "Relative tolerance for dropping and re-projection");
    gs->add_option("-o,--out", gs_out, "Write the basis to this file instead of stdout");

    // gen
    std::string gen_out;
    std::size_t spikes_n = 11, sincos_len = 128, rnd_count = 10, rnd_len = 30, rnd_dim = 1;
    auto* gen = app.add_subcommand("gen", "Generate a basis family or random data");
    gen->require_subcommand(1);
    gen->add_option("-o,--out", gen_out, "Write to this file instead of stdout");
    auto* spikes = gen->add_subcommand("spikes", "Spikes of increasing length");
    spikes->add_option("--n", spikes_n)->check(CLI::PositiveNumber);
    auto* sincos = gen->add_subcommand("sincos", "Discrete sine-cosine basis");
    sincos->add_option("--len", sincos_len)->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    auto* random = gen->add_subcommand("random", "Random non-uniformly sampled series");
    random->add_option("--count", rnd_count);
    random->add_option("--max-len", rnd_len)->check(CLI::PositiveNumber);
    random->add_option("--dim", rnd_dim)->check(CLI::PositiveNumber);

    // textsim
    std::string corpus_path, query, weights_name = "binary";
    auto* ts = app.add_subcommand("textsim", "Rank documents by elastic cosine to a query");
    ts->add_option("--corpus", corpus_path, "Directory of text files or JSONL")->required();
    ts->add_option("--query", query, "Query text or a path to a text file")->required();
    ts->add_option("--nu", nu, "Time stiffness");
    ts->add_option("--weights", weights_name)->check(CLI::IsMember({"binary", "idf"}));

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    if (!(g.eps > 0.0)) {
        err << "error: --eps must be positive\n";
        return kUsage;
    }

    try {
        if (*ip) {
            require_nu(nu);
            const TimeSeries a = load_single(ip_a, g);
            const TimeSeries b = load_single(ip_b, g);
            TepConfig cfg = TepConfig::teip(nu);
            cfg.variant = parse_variant(variant);
            const ProductResult r = evaluate(a, b, cfg);
            if (r.outside_inner_product_domain) {
                err << "warning: " << variant
                    << " is an inner product only on uniformly sampled series of equal length\n";
            }
            out << io::format_real(r.value) << '\n';
        } else if (*dist) {
            require_nu(nu);
            out << io::format_real(distance(load_single(dist_a, g), load_single(dist_b, g), nu)) << '\n';
        } else if (*gram_cmd) {
            const Dataset data = load_dataset(gram_in, g);
            GramOptions opt;
            opt.kind = parse_kernel(kernel_name);
            opt.nu = nu;
            opt.gamma = gamma;
            opt.threads = threads;
            GramMatrix k = gram(data, opt);

            std::ofstream file;
            if (!gram_out.empty()) {
                file.open(gram_out, std::ios::binary);
                if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + gram_out);
            }
            std::ostream& sink = gram_out.empty() ? out : file;
            if (g.format == "csv") {
                for (std::size_t i = 0; i < k.n; ++i) sink << (i ? "," : "") << k.labels[i];
                sink << '\n';
                for (std::size_t i = 0; i < k.n; ++i) {
                    for (std::size_t j = 0; j < k.n; ++j) sink << (j ? "," : "") << io::format_real(k(i, j));
                    sink << '\n';
                }
            } else {
                json rows = json::array();
                for (std::size_t i = 0; i < k.n; ++i) {
                    rows.push_back(std::vector<double>(k.values.begin() + i * k.n,
                                                       k.values.begin() + (i + 1) * k.n));
                }
                json doc{{"kernel", to_string(k.kind)}, {"nu", k.nu}, {"labels", k.labels}, {"values", rows}};
                if (k.kind == KernelKind::GaussianDistance) doc["gamma"] = k.gamma;
                sink << doc.dump() << '\n';
            }
            if (psd) {
                const PsdReport r = psd_check(k, gram_tol);
                out << json{{"psd", r.psd}, {"min_eigenvalue", r.min_eigenvalue}, {"tol", r.tol}}.dump()
                    << '\n';
            }
        } else if (*gs) {
            require_nu(nu);
            const Dataset data = load_dataset(gs_in, g);
            OrthoOptions opt;
            opt.nu = nu;
            opt.tol = gs_tol;
            opt.normalize = normalize;
            const OrthoResult r = gram_schmidt(data.series, opt);
            Dataset basis;
            basis.series = r.basis;
            for (std::size_t src : r.source) basis.labels.push_back("e:" + data.label(src));
            emit_dataset(basis, gs_out, g, out);
            out << json{{"gram_residual", r.gram_residual},
                        {"basis_size", r.basis.size()},
                        {"dropped", r.dropped}}
                       .dump()
                << '\n';
        } else if (*gen) {
            Dataset data;
            if (*spikes) {
                data.series = spike_family(spikes_n, g.eps);
                for (std::size_t k = 1; k <= spikes_n; ++k) data.labels.push_back("spike" + std::to_string(k));
            } else if (*sincos) {
                data.series = sincos_family(sincos_len, g.eps);
                data.labels.push_back("const");
                for (std::size_t k = 1; 2 * k < sincos_len; ++k) {
                    data.labels.push_back("sin" + std::to_string(k));
                    data.labels.push_back("cos" + std::to_string(k));
                }
                if (sincos_len % 2 == 0) data.labels.push_back("nyquist");
            } else {
                data = random_dataset(rnd_count, rnd_len, rnd_dim, g.seed);
            }
            emit_dataset(data, gen_out, g, out);
        } else if (*ts) {
            require_nu(nu);
            const Corpus corpus = read_corpus(corpus_path);
            const text::TokenSeries q = text::tokenize(read_query(query));
            const text::IdfTable table(corpus.docs);
            const text::Weights w = weights_name == "idf" ? text::Weights::inverse_document_frequency(table)
                                                          : text::Weights::binary();
            for (const text::RankedDoc& r : text::rank(q, corpus.docs, nu, w)) {
                out << json{{"doc", corpus.ids[r.doc]}, {"score", r.score}}.dump() << '\n';
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kOk;
}

}  // namespace tevs::cli
