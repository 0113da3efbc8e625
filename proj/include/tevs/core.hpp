#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tevs/error.hpp"

namespace tevs {

/// Smallest positive subnormal double, 2^-1074.
inline constexpr double kDefaultEpsilon = 4.9406564584124654e-324;

/// One (value, timestamp) pair. The value is a point of R^d.
struct Sample {
    std::vector<double> value;
    double t = 0.0;

    std::size_t dim() const noexcept { return value.size(); }
    bool operator==(const Sample&) const = default;
};

/// True when every coordinate is +0.0 or -0.0.
bool is_zero_vector(std::span<const double> v) noexcept;

/// A finite, strictly time-ordered series of non-zero samples. The empty
/// series is the zero vector of the space and has dimension 0 until it is
/// combined with something else.
///
/// Instances are only produced through validate()/sanitize() or by the
/// algebra operations, so the invariants hold for every live object.
class TimeSeries {
public:
    TimeSeries() = default;

    std::size_t size() const noexcept { return samples_.size(); }
    bool empty() const noexcept { return samples_.empty(); }
    std::size_t dim() const noexcept { return dim_; }

    const Sample& operator[](std::size_t i) const { return samples_[i]; }
    std::span<const Sample> samples() const noexcept { return samples_; }
    auto begin() const noexcept { return samples_.begin(); }
    auto end() const noexcept { return samples_.end(); }

    /// Samplewise bit-level equality. Dimension of the empty series is ignored.
    bool operator==(const TimeSeries& other) const;

    /// Builds a series after checking ordering, dimension and non-zero values.
    static TimeSeries validate(std::vector<Sample> samples);

    /// Constructs without checks. Callers must already guarantee the invariants.
    static TimeSeries from_trusted(std::vector<Sample> samples, std::size_t dim);

private:
    std::vector<Sample> samples_;
    std::size_t dim_ = 0;
};

/// Shorthand for validate().
TimeSeries validate(std::vector<Sample> samples);

/// Replaces every coordinate equal to zero with epsilon, then validates.
/// Never reorders samples.
TimeSeries sanitize(std::vector<Sample> samples, double epsilon = kDefaultEpsilon);

/// Convenience for scalar-valued series: pairs of (value, t).
std::vector<Sample> scalar_samples(std::initializer_list<std::pair<double, double>> vt);

struct Dataset {
    std::vector<TimeSeries> series;
    std::vector<std::string> labels;  // empty, or one per series

    std::size_t dim() const noexcept;
    std::string label(std::size_t i) const;
    bool operator==(const Dataset&) const = default;
};

/// Checks that every series shares one dimension and that labels line up.
void check_dataset(const Dataset& data);

}  // namespace tevs
