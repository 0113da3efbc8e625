#pragma once

#include "tevs/core.hpp"

namespace tevs {

// Vector-space operations on non-zero time series. Both are closed: results
// never contain a zero sample, which is dropped as the null element.
//
// Cancellation is exact. A sum that is tiny but non-zero after rounding is
// kept, so associativity of oplus holds only where the sums are exact.

/// Scales every sample value by lambda. lambda == 0 yields the empty series;
/// products that underflow to zero are dropped like any other zero sample.
TimeSeries otimes(double lambda, const TimeSeries& a);

/// Timestamp-merging addition. Samples at equal timestamps are added and
/// dropped when the sum is exactly the zero vector; the tail of the longer
/// input is appended once the other is exhausted.
TimeSeries oplus(const TimeSeries& a, const TimeSeries& b);

/// a ⊕ ((-1) ⊗ b).
TimeSeries ominus(const TimeSeries& a, const TimeSeries& b);

inline TimeSeries operator+(const TimeSeries& a, const TimeSeries& b) { return oplus(a, b); }
inline TimeSeries operator-(const TimeSeries& a, const TimeSeries& b) { return ominus(a, b); }
inline TimeSeries operator*(double lambda, const TimeSeries& a) { return otimes(lambda, a); }

/// Throws DimensionMismatch unless both series are empty or share dimension.
std::size_t common_dim(const TimeSeries& a, const TimeSeries& b);

}  // namespace tevs
