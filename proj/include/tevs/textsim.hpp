#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tevs/core.hpp"

namespace tevs::text {

/// Words of a text; word i sits at time i.
struct TokenSeries {
    std::vector<std::string> tokens;

    std::size_t size() const noexcept { return tokens.size(); }
    bool empty() const noexcept { return tokens.empty(); }
    static double position(std::size_t i) noexcept { return static_cast<double>(i); }
    bool operator==(const TokenSeries&) const = default;
};

/// Lowercases and splits on whitespace and punctuation. Input is UTF-8;
/// case folding covers ASCII, Latin-1, basic Greek and Cyrillic.
TokenSeries tokenize(std::string_view text);

class IdfTable {
public:
    IdfTable() = default;
    explicit IdfTable(std::span<const TokenSeries> corpus);

    /// ln(N / df); a token never seen in the corpus counts as df = 1.
    double weight(const std::string& token) const;
    std::size_t doc_count() const noexcept { return doc_count_; }
    const std::unordered_map<std::string, double>& entries() const noexcept { return idf_; }

private:
    std::unordered_map<std::string, double> idf_;
    std::size_t doc_count_ = 0;
};

IdfTable idf(std::span<const TokenSeries> corpus);

/// Matching weights: binary when no table is given, IDF otherwise.
struct Weights {
    const IdfTable* idf = nullptr;

    static Weights binary() { return {}; }
    static Weights inverse_document_frequency(const IdfTable& table) { return {&table}; }
    double of(const std::string& token) const { return idf ? idf->weight(token) : 1.0; }
};

/// Elastic inner product over word positions: the teip recursion with
/// local term w(a_i) [a_i == b_j] exp(-nu |i - j|).
double teip_tm(const TokenSeries& a, const TokenSeries& b, double nu, Weights weights = {});

struct RankedDoc {
    std::size_t doc = 0;
    double score = 0.0;
};

/// Elastic cosine of the query against each document, best first, ties by
/// ascending index. Documents with zero self-product score 0.
std::vector<RankedDoc> rank(const TokenSeries& query, std::span<const TokenSeries> corpus,
                            double nu, Weights weights = {});

/// Maps each word to a concept vector and places it at its word index, so
/// the generic time elastic products apply to richer word representations.
TimeSeries embed(const TokenSeries& doc,
                 const std::function<std::vector<double>(const std::string&)>& concepts);

}  // namespace tevs::text
