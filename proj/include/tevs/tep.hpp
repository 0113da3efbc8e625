#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tevs/core.hpp"

namespace tevs {

enum class Variant { Teip, Twip1, Twip2, Custom };
enum class TimeDistance { Absolute, Squared };

const char* to_string(Variant v) noexcept;
Variant parse_variant(const std::string& name);

/// Coefficients of one step of the elastic recursion:
///
///   M[i][j] = scale * ( side * (M[i-1][j] + M[i][j-1])
///                     + diag * M[i-1][j-1] + local(i, j) )
///
/// with M[0][*] = M[*][0] = init.
struct Recurrence {
    double side = 1.0;
    double diag = -1.0;
    double scale = 1.0;
    double init = 0.0;
};

/// Parameters of a time elastic product. Use the named constructors; the
/// inner-product variant pins side = 1, diag = -1, init = 0.
struct TepConfig {
    Variant variant = Variant::Teip;
    double nu = 0.01;  // time stiffness
    TimeDistance time_distance = TimeDistance::Absolute;
    // Only read for Variant::Custom.
    double alpha = 1.0;
    double beta = -1.0;
    double xi = 0.0;

    static TepConfig teip(double nu) { return {Variant::Teip, nu}; }
    static TepConfig twip1(double nu) { return {Variant::Twip1, nu}; }
    static TepConfig twip2(double nu) { return {Variant::Twip2, nu}; }
    static TepConfig custom(double alpha, double beta, double xi, double nu) {
        return {Variant::Custom, nu, TimeDistance::Absolute, alpha, beta, xi};
    }

    /// Throws InvalidArgument for a negative or non-finite nu, or a teip
    /// config carrying coefficients other than (1, -1, 0).
    void check() const;
    Recurrence recurrence() const;
    /// g(t, t') = exp(-nu * d(t, t')).
    double time_kernel(double t, double u) const;
};

/// Runs the recursion over a p x q grid. `local(i, j)` gives the
/// f * g term for the 0-based sample pair (i, j). Memory is one row of
/// length min(p, q) + 1.
///
/// The two side terms are added before scaling, so evaluating the
/// transposed grid reproduces every cell bit for bit; this makes the
/// product exactly symmetric whenever local is.
template <class Local>
double elastic_recursion(std::size_t p, std::size_t q, const Recurrence& r, Local&& local) {
    if (p == 0 || q == 0) return r.init;
    const bool transpose = q > p;
    const std::size_t rows = transpose ? q : p;
    const std::size_t cols = transpose ? p : q;

    std::vector<double> row(cols + 1, r.init);
    for (std::size_t i = 1; i <= rows; ++i) {
        double diag = row[0];
        double left = r.init;
        row[0] = r.init;
        for (std::size_t j = 1; j <= cols; ++j) {
            const double up = row[j];
            const double term = transpose ? local(j - 1, i - 1) : local(i - 1, j - 1);
            const double cell = r.scale * (r.side * (up + left) + r.diag * diag + term);
            diag = up;
            row[j] = cell;
            left = cell;
        }
    }
    return row[cols];
}

/// Euclidean dot product of two sample values of equal length.
double dot(std::span<const double> a, std::span<const double> b) noexcept;

/// Time elastic product by dynamic programming in O(|A| |B|) time.
double tep(const TimeSeries& a, const TimeSeries& b, const TepConfig& cfg);

/// Top-down evaluation of the same recursion, memoized on prefix lengths.
/// Test oracle; refuses |A| + |B| > kNaiveLimit.
inline constexpr std::size_t kNaiveLimit = 24;
double tep_naive(const TimeSeries& a, const TimeSeries& b, const TepConfig& cfg);

/// Time elastic inner product with g = exp(-nu |t - t'|).
double teip(const TimeSeries& a, const TimeSeries& b, double nu);

// The twip products are inner products only on uniformly sampled series of
// equal length with identical timestamps; elsewhere they are plain products.
double twip1(const TimeSeries& a, const TimeSeries& b, double nu);
double twip2(const TimeSeries& a, const TimeSeries& b, double nu);

/// True when both series have the same length and identical, evenly spaced
/// timestamps: the domain on which the twip variants are inner products.
bool uniform_equal_length(const TimeSeries& a, const TimeSeries& b);

struct ProductResult {
    double value = 0.0;
    // Set for twip variants evaluated outside uniform_equal_length inputs.
    bool outside_inner_product_domain = false;
};

ProductResult evaluate(const TimeSeries& a, const TimeSeries& b, const TepConfig& cfg);

/// sqrt(teip(A, A)). Round-off negatives within 1e-12 of the magnitude bound
/// clamp to zero; anything larger throws NegativeSquare.
double norm(const TimeSeries& a, double nu);

/// norm(A ⊖ B). A metric for nu > 0; a pseudometric for nu == 0.
double distance(const TimeSeries& a, const TimeSeries& b, double nu);

/// teip(A, B) / (norm(A) norm(B)). Throws EmptySeries for an empty operand.
double elastic_cosine(const TimeSeries& a, const TimeSeries& b, double nu);

}  // namespace tevs
