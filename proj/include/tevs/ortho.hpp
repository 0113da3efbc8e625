#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tevs/core.hpp"

namespace tevs {

struct OrthoOptions {
    double nu = 0.01;
    /// Relative tolerance, used both to drop numerically dependent inputs and
    /// as the orthogonality target that triggers a re-projection pass.
    double tol = 1e-10;
    bool normalize = false;
    /// Projection passes per input (1 = plain classical Gram-Schmidt).
    int max_passes = 3;
};

struct OrthoResult {
    std::vector<TimeSeries> basis;
    std::vector<std::size_t> source;   // input index of each basis element
    std::vector<std::size_t> dropped;  // inputs rejected as dependent
    /// max |teip(e_i, e_j)| / (|e_i| |e_j|) over i != j.
    double gram_residual = 0.0;
};

/// Classical Gram-Schmidt under teip, built from the oplus/otimes algebra:
/// e_k = A_k ⊖ (⊕_i c_i ⊗ e_i) with c_i = teip(A_k, e_i) / teip(e_i, e_i).
/// The projection is repeated on the remainder while its normalized overlap
/// with the current basis exceeds tol. Inputs whose remainder has
/// norm <= tol * norm(A_k) are dropped.
OrthoResult gram_schmidt(std::span<const TimeSeries> family, const OrthoOptions& options = {});

/// Largest normalized off-diagonal teip over a family. Zero for fewer than
/// two members.
double orthogonality_residual(std::span<const TimeSeries> family, double nu);

/// Spikes of increasing length: member k (1-based) has k samples at
/// t = 0, 1/10, ..., (k-1)/10, value epsilon everywhere except a final 1.
std::vector<TimeSeries> spike_family(std::size_t n, double epsilon = kDefaultEpsilon);

/// Discrete Fourier basis sampled at t = i / length, i = 0..length-1:
/// the constant, then sin(2 pi k t), cos(2 pi k t) for k = 1, 2, ..., and the
/// alternating Nyquist member when length is even. Every member has unit
/// Euclidean norm. Exact zeros are replaced by epsilon.
std::vector<TimeSeries> sincos_family(std::size_t length, double epsilon = kDefaultEpsilon);

}  // namespace tevs
