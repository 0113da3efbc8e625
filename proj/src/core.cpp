#include "tevs/core.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

namespace tevs {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonMonotoneTimestamps: return "NonMonotoneTimestamps";
        case ErrorCode::ZeroSpatialValue: return "ZeroSpatialValue";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::NonFiniteScalar: return "NonFiniteScalar";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorCode::NegativeSquare: return "NegativeSquare";
        case ErrorCode::EmptySeries: return "EmptySeries";
        case ErrorCode::EmptyFamily: return "EmptyFamily";
        case ErrorCode::AsymmetricInput: return "AsymmetricInput";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_zero_vector(std::span<const double> v) noexcept {
    for (double x : v) {
        if (x != 0.0) return false;  // -0.0 == 0.0 compares true
    }
    return true;
}

namespace {

bool same_bits(double a, double b) noexcept {
    return std::memcmp(&a, &b, sizeof(double)) == 0;
}

}  // namespace

bool TimeSeries::operator==(const TimeSeries& other) const {
    if (samples_.size() != other.samples_.size()) return false;
    if (!samples_.empty() && dim_ != other.dim_) return false;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const Sample& a = samples_[i];
        const Sample& b = other.samples_[i];
        if (!same_bits(a.t, b.t) || a.value.size() != b.value.size()) return false;
        for (std::size_t k = 0; k < a.value.size(); ++k) {
            if (!same_bits(a.value[k], b.value[k])) return false;
        }
    }
    return true;
}

TimeSeries TimeSeries::validate(std::vector<Sample> samples) {
    if (samples.empty()) return {};
    const std::size_t d = samples.front().dim();
    if (d == 0) throw Error(ErrorCode::DimensionMismatch, "sample 0 has no coordinates");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Sample& s = samples[i];
        if (s.dim() != d) {
            std::ostringstream os;
            os << "sample " << i << " has dimension " << s.dim() << ", expected " << d;
            throw Error(ErrorCode::DimensionMismatch, os.str());
        }
        if (!std::isfinite(s.t)) {
            throw Error(ErrorCode::NonFiniteValue, "sample " + std::to_string(i) + " timestamp");
        }
        for (double x : s.value) {
            if (!std::isfinite(x)) {
                throw Error(ErrorCode::NonFiniteValue, "sample " + std::to_string(i) + " value");
            }
        }
        if (is_zero_vector(s.value)) {
            throw Error(ErrorCode::ZeroSpatialValue, "sample " + std::to_string(i) + " is the zero vector");
        }
        if (i > 0 && !(s.t > samples[i - 1].t)) {
            std::ostringstream os;
            os << "sample " << i << " timestamp " << s.t << " does not exceed " << samples[i - 1].t;
            throw Error(ErrorCode::NonMonotoneTimestamps, os.str());
        }
    }
    return from_trusted(std::move(samples), d);
}

TimeSeries TimeSeries::from_trusted(std::vector<Sample> samples, std::size_t dim) {
    TimeSeries s;
    s.samples_ = std::move(samples);
    s.dim_ = s.samples_.empty() ? 0 : dim;
    return s;
}

TimeSeries validate(std::vector<Sample> samples) {
    return TimeSeries::validate(std::move(samples));
}

TimeSeries sanitize(std::vector<Sample> samples, double epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw Error(ErrorCode::InvalidArgument, "sanitize epsilon must be positive and finite");
    }
    for (Sample& s : samples) {
        for (double& x : s.value) {
            if (x == 0.0) x = epsilon;
        }
    }
    return TimeSeries::validate(std::move(samples));
}

std::vector<Sample> scalar_samples(std::initializer_list<std::pair<double, double>> vt) {
    std::vector<Sample> out;
    out.reserve(vt.size());
    for (const auto& [v, t] : vt) out.push_back(Sample{{v}, t});
    return out;
}

std::size_t Dataset::dim() const noexcept {
    for (const TimeSeries& s : series) {
        if (!s.empty()) return s.dim();
    }
    return 0;
}

std::string Dataset::label(std::size_t i) const {
    if (i < labels.size()) return labels[i];
    return "s" + std::to_string(i);
}

void check_dataset(const Dataset& data) {
    if (!data.labels.empty() && data.labels.size() != data.series.size()) {
        throw Error(ErrorCode::InvalidArgument, "label count does not match series count");
    }
    const std::size_t d = data.dim();
    for (std::size_t i = 0; i < data.series.size(); ++i) {
        const TimeSeries& s = data.series[i];
        if (!s.empty() && s.dim() != d) {
            throw Error(ErrorCode::DimensionMismatch,
                        "series '" + data.label(i) + "' has dimension " + std::to_string(s.dim()) +
                            ", expected " + std::to_string(d));
        }
    }
}

}  // namespace tevs
