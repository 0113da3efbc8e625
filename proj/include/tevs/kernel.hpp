#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tevs/core.hpp"

namespace tevs {

enum class KernelKind { Teip, GaussianDistance };

const char* to_string(KernelKind k) noexcept;
KernelKind parse_kernel(const std::string& name);

struct GramMatrix {
    std::size_t n = 0;
    std::vector<double> values;  // row-major n x n
    std::vector<std::string> labels;
    KernelKind kind = KernelKind::Teip;
    double nu = 0.0;
    double gamma = 0.0;
    std::optional<double> min_eigenvalue;  // filled by psd_check

    double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

struct GramOptions {
    KernelKind kind = KernelKind::Teip;
    double nu = 0.01;
    double gamma = 1.0;      // bandwidth of exp(-gamma * distance^2)
    unsigned threads = 1;    // 0 = hardware concurrency
};

/// Pairwise kernel values. Each unordered pair is evaluated once and mirrored,
/// so the result is exactly symmetric; the output does not depend on the
/// number of threads.
GramMatrix gram(const Dataset& data, const GramOptions& options = {});

struct PsdReport {
    bool psd = false;
    double min_eigenvalue = 0.0;
    double spectral_norm = 0.0;  // max |eigenvalue|
    double tol = 0.0;
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Iterates until the off-diagonal Frobenius norm falls below
/// 1e-12 * ||A||_F.
std::vector<double> symmetric_eigenvalues(std::size_t n, std::span<const double> values);

/// psd <=> min eigenvalue >= -tol * max(1, ||K||_2). Throws AsymmetricInput
/// unless values are exactly symmetric.
PsdReport psd_check(std::size_t n, std::span<const double> values, double tol);
PsdReport psd_check(GramMatrix& k, double tol);

}  // namespace tevs
