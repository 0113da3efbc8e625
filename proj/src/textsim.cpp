#include "tevs/textsim.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "tevs/tep.hpp"

namespace tevs::text {

namespace {

// Decodes one UTF-8 code point starting at s[i]; malformed bytes decode as
// themselves with length 1.
char32_t decode(std::string_view s, std::size_t i, std::size_t& len) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    auto cont = [&](std::size_t k) {
        return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    auto bits = [&](std::size_t k) { return static_cast<char32_t>(s[i + k] & 0x3F); };
    if (b0 < 0x80) {
        len = 1;
        return b0;
    }
    if ((b0 & 0xE0) == 0xC0 && cont(1)) {
        len = 2;
        return (static_cast<char32_t>(b0 & 0x1F) << 6) | bits(1);
    }
    if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        len = 3;
        return (static_cast<char32_t>(b0 & 0x0F) << 12) | (bits(1) << 6) | bits(2);
    }
    if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        len = 4;
        return (static_cast<char32_t>(b0 & 0x07) << 18) | (bits(1) << 12) | (bits(2) << 6) | bits(3);
    }
    len = 1;
    return b0;
}

void encode(char32_t c, std::string& out) {
    if (c < 0x80) {
        out += static_cast<char>(c);
    } else if (c < 0x800) {
        out += static_cast<char>(0xC0 | (c >> 6));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
        out += static_cast<char>(0xE0 | (c >> 12));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (c >> 18));
        out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (c & 0x3F));
    }
}

bool is_separator(char32_t c) {
    if (c < 0x80) {
        return c <= 0x20 || c == 0x7F || (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
               (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
    }
    return c == 0x85 || (c >= 0xA0 && c <= 0xBF) || c == 0xD7 || c == 0xF7 || c == 0x1680 ||
           (c >= 0x2000 && c <= 0x206F) || (c >= 0x2E00 && c <= 0x2E7F) ||
           (c >= 0x3000 && c <= 0x3003) || c == 0xFEFF;
}

char32_t to_lower(char32_t c) {
    if (c >= 'A' && c <= 'Z') return c + 0x20;
    if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
    if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 0x20;
    if (c >= 0x410 && c <= 0x42F) return c + 0x20;
    if (c >= 0x400 && c <= 0x40F) return c + 0x50;
    return c;
}

}  // namespace

TokenSeries tokenize(std::string_view text) {
    TokenSeries out;
    std::string current;
    for (std::size_t i = 0; i < text.size();) {
        std::size_t len = 1;
        const char32_t c = decode(text, i, len);
        if (is_separator(c)) {
            if (!current.empty()) out.tokens.push_back(std::move(current));
            current.clear();
        } else if (len == 1 && c >= 0x80) {
            current += text[i];  // stray byte, kept verbatim
        } else {
            encode(to_lower(c), current);
        }
        i += len;
    }
    if (!current.empty()) out.tokens.push_back(std::move(current));
    return out;
}

IdfTable::IdfTable(std::span<const TokenSeries> corpus) : doc_count_(corpus.size()) {
    std::unordered_map<std::string, std::size_t> df;
    for (const TokenSeries& doc : corpus) {
        std::unordered_set<std::string> seen(doc.tokens.begin(), doc.tokens.end());
        for (const std::string& t : seen) ++df[t];
    }
    const double n = static_cast<double>(doc_count_);
    for (const auto& [token, count] : df) idf_[token] = std::log(n / static_cast<double>(count));
}

double IdfTable::weight(const std::string& token) const {
    const auto it = idf_.find(token);
    if (it != idf_.end()) return it->second;
    return doc_count_ == 0 ? 0.0 : std::log(static_cast<double>(doc_count_));
}

IdfTable idf(std::span<const TokenSeries> corpus) { return IdfTable(corpus); }

double teip_tm(const TokenSeries& a, const TokenSeries& b, double nu, Weights weights) {
    if (!std::isfinite(nu) || nu < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "nu must be finite and non-negative");
    }
    // Weights looked up once per token of A; matches are exact string equality.
    std::vector<double> w(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) w[i] = weights.of(a.tokens[i]);

    const Recurrence r{1.0, -1.0, 1.0, 0.0};
    return elastic_recursion(a.size(), b.size(), r, [&](std::size_t i, std::size_t j) {
        if (a.tokens[i] != b.tokens[j]) return 0.0;
        const double gap = std::abs(TokenSeries::position(i) - TokenSeries::position(j));
        return w[i] * std::exp(-nu * gap);
    });
}

std::vector<RankedDoc> rank(const TokenSeries& query, std::span<const TokenSeries> corpus,
                            double nu, Weights weights) {
    if (query.empty()) throw Error(ErrorCode::EmptySeries, "query has no tokens");
    const double qq = teip_tm(query, query, nu, weights);

    std::vector<RankedDoc> out(corpus.size());
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        out[k].doc = k;
        const TokenSeries& doc = corpus[k];
        if (doc.empty()) continue;
        const double dd = teip_tm(doc, doc, nu, weights);
        const double denom = std::sqrt(qq * dd);
        if (denom > 0.0) out[k].score = teip_tm(query, doc, nu, weights) / denom;
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const RankedDoc& x, const RankedDoc& y) { return x.score > y.score; });
    return out;
}

TimeSeries embed(const TokenSeries& doc,
                 const std::function<std::vector<double>(const std::string&)>& concepts) {
    std::vector<Sample> samples;
    samples.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        samples.push_back(Sample{concepts(doc.tokens[i]), TokenSeries::position(i)});
    }
    return validate(std::move(samples));
}

}  // namespace tevs::text
