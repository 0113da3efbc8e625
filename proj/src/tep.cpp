#include "tevs/tep.hpp"

#include <cmath>
#include <optional>

#include "tevs/algebra.hpp"

namespace tevs {

const char* to_string(Variant v) noexcept {
    switch (v) {
        case Variant::Teip: return "teip";
        case Variant::Twip1: return "twip1";
        case Variant::Twip2: return "twip2";
        case Variant::Custom: return "custom";
    }
    return "unknown";
}

Variant parse_variant(const std::string& name) {
    if (name == "teip") return Variant::Teip;
    if (name == "twip1") return Variant::Twip1;
    if (name == "twip2") return Variant::Twip2;
    if (name == "custom") return Variant::Custom;
    throw Error(ErrorCode::InvalidArgument, "unknown variant '" + name + "'");
}

void TepConfig::check() const {
    if (!std::isfinite(nu) || nu < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "nu must be finite and non-negative");
    }
    if (variant == Variant::Teip && (alpha != 1.0 || beta != -1.0 || xi != 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "teip requires alpha = 1, beta = -1, xi = 0");
    }
    if (variant == Variant::Custom &&
        !(std::isfinite(alpha) && std::isfinite(beta) && std::isfinite(xi))) {
        throw Error(ErrorCode::InvalidArgument, "custom coefficients must be finite");
    }
}

Recurrence TepConfig::recurrence() const {
    switch (variant) {
        case Variant::Teip:
            return {1.0, -1.0, 1.0, 0.0};
        case Variant::Twip1:
            return {1.0, 1.0, 1.0 / 3.0, 0.0};
        case Variant::Twip2: {
            const double w = std::exp(-nu);
            return {w, 1.0, 1.0 / (1.0 + 2.0 * w), 0.0};
        }
        case Variant::Custom:
            return {alpha, beta, 1.0, xi};
    }
    return {};
}

double TepConfig::time_kernel(double t, double u) const {
    const double d = time_distance == TimeDistance::Absolute ? std::abs(t - u) : (t - u) * (t - u);
    return std::exp(-nu * d);
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

namespace {

auto make_local(const TimeSeries& a, const TimeSeries& b, const TepConfig& cfg) {
    return [&a, &b, &cfg](std::size_t i, std::size_t j) {
        return dot(a[i].value, b[j].value) * cfg.time_kernel(a[i].t, b[j].t);
    };
}

}  // namespace

double tep(const TimeSeries& a, const TimeSeries& b, const TepConfig& cfg) {
    cfg.check();
    common_dim(a, b);
    return elastic_recursion(a.size(), b.size(), cfg.recurrence(), make_local(a, b, cfg));
}

double tep_naive(const TimeSeries& a, const TimeSeries& b, const TepConfig& cfg) {
    cfg.check();
    common_dim(a, b);
    if (a.size() + b.size() > kNaiveLimit) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "naive recursion limited to |A| + |B| <= " + std::to_string(kNaiveLimit));
    }
    const Recurrence r = cfg.recurrence();
    const auto local = make_local(a, b, cfg);
    const std::size_t q = b.size();
    std::vector<std::optional<double>> memo((a.size() + 1) * (q + 1));

    // <A_1^p, B_1^q> in terms of the three shorter prefix pairs.
    auto product = [&](auto&& self, std::size_t p, std::size_t qq) -> double {
        if (p == 0 || qq == 0) return r.init;
        auto& slot = memo[p * (q + 1) + qq];
        if (slot) return *slot;
        const double drop_a = r.side * self(self, p - 1, qq);
        const double drop_both = r.diag * self(self, p - 1, qq - 1) + local(p - 1, qq - 1);
        const double drop_b = r.side * self(self, p, qq - 1);
        slot = r.scale * (drop_a + drop_both + drop_b);
        return *slot;
    };
    return product(product, a.size(), b.size());
}

double teip(const TimeSeries& a, const TimeSeries& b, double nu) {
    return tep(a, b, TepConfig::teip(nu));
}

double twip1(const TimeSeries& a, const TimeSeries& b, double nu) {
    return tep(a, b, TepConfig::twip1(nu));
}

double twip2(const TimeSeries& a, const TimeSeries& b, double nu) {
    return tep(a, b, TepConfig::twip2(nu));
}

bool uniform_equal_length(const TimeSeries& a, const TimeSeries& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].t != b[i].t) return false;
    }
    if (a.size() < 3) return true;
    const double step = a[1].t - a[0].t;
    for (std::size_t i = 2; i < a.size(); ++i) {
        const double gap = a[i].t - a[i - 1].t;
        if (std::abs(gap - step) > 1e-9 * std::abs(step)) return false;
    }
    return true;
}

ProductResult evaluate(const TimeSeries& a, const TimeSeries& b, const TepConfig& cfg) {
    ProductResult r;
    r.value = tep(a, b, cfg);
    if (cfg.variant == Variant::Twip1 || cfg.variant == Variant::Twip2) {
        r.outside_inner_product_domain = !uniform_equal_length(a, b);
    }
    return r;
}

double norm(const TimeSeries& a, double nu) {
    const double sq = teip(a, a, nu);
    if (sq >= 0.0) return std::sqrt(sq);
    // |teip(A, A)| <= (sum_i |a_i|)^2 since |g| <= 1.
    double bound = 0.0;
    for (const Sample& s : a) bound += std::sqrt(dot(s.value, s.value));
    bound *= bound;
    if (sq >= -1e-12 * bound) return 0.0;
    throw Error(ErrorCode::NegativeSquare, "teip(A, A) = " + std::to_string(sq));
}

double distance(const TimeSeries& a, const TimeSeries& b, double nu) {
    return norm(ominus(a, b), nu);
}

double elastic_cosine(const TimeSeries& a, const TimeSeries& b, double nu) {
    if (a.empty() || b.empty()) {
        throw Error(ErrorCode::EmptySeries, "elastic cosine needs two non-empty series");
    }
    const double denom = norm(a, nu) * norm(b, nu);
    if (denom == 0.0) {
        throw Error(ErrorCode::NegativeSquare, "zero norm for a non-empty series");
    }
    return teip(a, b, nu) / denom;
}

}  // namespace tevs
