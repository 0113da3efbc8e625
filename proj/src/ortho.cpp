#include "tevs/ortho.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tevs/algebra.hpp"
#include "tevs/tep.hpp"

namespace tevs {

namespace {

// Normalized overlap of v with the current basis.
double max_overlap(const TimeSeries& v, std::span<const TimeSeries> basis,
                   std::span<const double> self, double nu) {
    const double vv = teip(v, v, nu);
    if (!(vv > 0.0)) return 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        worst = std::max(worst, std::abs(teip(v, basis[i], nu)) / std::sqrt(vv * self[i]));
    }
    return worst;
}

}  // namespace

OrthoResult gram_schmidt(std::span<const TimeSeries> family, const OrthoOptions& options) {
    if (family.empty()) throw Error(ErrorCode::EmptyFamily, "nothing to orthogonalize");
    if (!(options.tol >= 0.0) || options.max_passes < 1) {
        throw Error(ErrorCode::InvalidArgument, "tol must be >= 0 and max_passes >= 1");
    }
    for (const TimeSeries& s : family) common_dim(family.front(), s);

    const double nu = options.nu;
    OrthoResult out;
    std::vector<double> self;  // teip(e_i, e_i)

    for (std::size_t k = 0; k < family.size(); ++k) {
        const TimeSeries& input = family[k];
        const double input_norm = norm(input, nu);
        TimeSeries v = input;

        for (int pass = 0; pass < options.max_passes && !out.basis.empty() && !v.empty(); ++pass) {
            if (pass > 0 && max_overlap(v, out.basis, self, nu) <= options.tol) break;
            // Classical: every coefficient comes from the same remainder.
            TimeSeries projection;
            for (std::size_t i = 0; i < out.basis.size(); ++i) {
                const double c = teip(v, out.basis[i], nu) / self[i];
                projection = oplus(projection, otimes(c, out.basis[i]));
            }
            v = ominus(v, projection);
        }

        const double v_norm = norm(v, nu);
        if (v.empty() || !(v_norm > options.tol * input_norm)) {
            out.dropped.push_back(k);
            continue;
        }
        if (options.normalize) v = otimes(1.0 / v_norm, v);
        self.push_back(teip(v, v, nu));
        out.basis.push_back(std::move(v));
        out.source.push_back(k);
    }

    out.gram_residual = orthogonality_residual(out.basis, nu);
    return out;
}

double orthogonality_residual(std::span<const TimeSeries> family, double nu) {
    std::vector<double> self(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) self[i] = teip(family[i], family[i], nu);
    double worst = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            const double denom = std::sqrt(self[i] * self[j]);
            if (denom > 0.0) worst = std::max(worst, std::abs(teip(family[i], family[j], nu)) / denom);
        }
    }
    return worst;
}

std::vector<TimeSeries> spike_family(std::size_t n, double epsilon) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "spike family needs n >= 1");
    std::vector<TimeSeries> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<Sample> samples;
        samples.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            const double v = i + 1 == k ? 1.0 : 0.0;
            samples.push_back(Sample{{v}, static_cast<double>(i) / 10.0});
        }
        out.push_back(sanitize(std::move(samples), epsilon));
    }
    return out;
}

std::vector<TimeSeries> sincos_family(std::size_t length, double epsilon) {
    if (length < 2) throw Error(ErrorCode::InvalidArgument, "sine-cosine family needs length >= 2");
    const double n = static_cast<double>(length);
    const double unit = 1.0 / std::sqrt(n);
    const double wave = std::sqrt(2.0 / n);

    auto make = [&](auto&& value_at) {
        std::vector<Sample> samples;
        samples.reserve(length);
        for (std::size_t i = 0; i < length; ++i) {
            const double t = static_cast<double>(i) / n;
            samples.push_back(Sample{{value_at(i, t)}, t});
        }
        return sanitize(std::move(samples), epsilon);
    };

    std::vector<TimeSeries> out;
    out.reserve(length);
    out.push_back(make([&](std::size_t, double) { return unit; }));
    for (std::size_t k = 1; 2 * k < length; ++k) {
        const double w = 2.0 * std::numbers::pi * static_cast<double>(k);
        out.push_back(make([&](std::size_t, double t) { return wave * std::sin(w * t); }));
        out.push_back(make([&](std::size_t, double t) { return wave * std::cos(w * t); }));
    }
    if (length % 2 == 0) {
        out.push_back(make([&](std::size_t i, double) { return i % 2 == 0 ? unit : -unit; }));
    }
    return out;
}

}  // namespace tevs
