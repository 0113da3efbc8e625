#include "tevs/algebra.hpp"

#include <cmath>

namespace tevs {

std::size_t common_dim(const TimeSeries& a, const TimeSeries& b) {
    if (a.empty()) return b.dim();
    if (b.empty() || a.dim() == b.dim()) return a.dim();
    throw Error(ErrorCode::DimensionMismatch,
                "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
}

TimeSeries otimes(double lambda, const TimeSeries& a) {
    if (!std::isfinite(lambda)) throw Error(ErrorCode::NonFiniteScalar, "scalar is not finite");
    if (lambda == 0.0 || a.empty()) return {};

    std::vector<Sample> out;
    out.reserve(a.size());
    for (const Sample& s : a) {
        Sample c{s.value, s.t};
        for (double& x : c.value) x *= lambda;
        for (double x : c.value) {
            if (!std::isfinite(x)) throw Error(ErrorCode::NonFiniteValue, "scaled value overflowed");
        }
        if (!is_zero_vector(c.value)) out.push_back(std::move(c));
    }
    return TimeSeries::from_trusted(std::move(out), a.dim());
}

TimeSeries oplus(const TimeSeries& a, const TimeSeries& b) {
    const std::size_t d = common_dim(a, b);
    std::vector<Sample> out;
    out.reserve(a.size() + b.size());

    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const Sample& x = a[i];
        const Sample& y = b[j];
        if (x.t < y.t) {
            out.push_back(x);
            ++i;
        } else if (x.t > y.t) {
            out.push_back(y);
            ++j;
        } else {
            Sample sum{x.value, x.t};
            for (std::size_t k = 0; k < d; ++k) sum.value[k] += y.value[k];
            for (double v : sum.value) {
                if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, "sum overflowed");
            }
            if (!is_zero_vector(sum.value)) out.push_back(std::move(sum));
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);

    return TimeSeries::from_trusted(std::move(out), d);
}

TimeSeries ominus(const TimeSeries& a, const TimeSeries& b) {
    return oplus(a, otimes(-1.0, b));
}

}  // namespace tevs
