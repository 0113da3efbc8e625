#include "tevs/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "tevs/tep.hpp"

namespace tevs {

const char* to_string(KernelKind k) noexcept {
    return k == KernelKind::Teip ? "teip" : "gauss";
}

KernelKind parse_kernel(const std::string& name) {
    if (name == "teip") return KernelKind::Teip;
    if (name == "gauss" || name == "gaussian_distance") return KernelKind::GaussianDistance;
    throw Error(ErrorCode::InvalidArgument, "unknown kernel '" + name + "'");
}

GramMatrix gram(const Dataset& data, const GramOptions& options) {
    check_dataset(data);
    if (!std::isfinite(options.nu) || options.nu < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "nu must be finite and non-negative");
    }
    if (options.kind == KernelKind::GaussianDistance &&
        (!std::isfinite(options.gamma) || options.gamma < 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "gamma must be finite and non-negative");
    }

    GramMatrix k;
    k.n = data.series.size();
    k.values.assign(k.n * k.n, 0.0);
    k.kind = options.kind;
    k.nu = options.nu;
    k.gamma = options.kind == KernelKind::GaussianDistance ? options.gamma : 0.0;
    for (std::size_t i = 0; i < k.n; ++i) k.labels.push_back(data.label(i));

    auto entry = [&](std::size_t i, std::size_t j) {
        const TimeSeries& a = data.series[i];
        const TimeSeries& b = data.series[j];
        if (options.kind == KernelKind::Teip) return teip(a, b, options.nu);
        const double d = distance(a, b, options.nu);
        return std::exp(-options.gamma * d * d);
    };
    auto fill_rows = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < k.n; i += stride) {
            for (std::size_t j = i; j < k.n; ++j) {
                const double v = entry(i, j);
                k.values[i * k.n + j] = v;
                k.values[j * k.n + i] = v;
            }
        }
    };

    std::size_t workers = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(k.n, 1));
    if (workers == 1) {
        fill_rows(0, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w, workers);
    }
    return k;
}

std::vector<double> symmetric_eigenvalues(std::size_t n, std::span<const double> values) {
    if (values.size() != n * n) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
    std::vector<double> a(values.begin(), values.end());
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    double frob = 0.0;
    for (double x : a) frob += x * x;
    frob = std::sqrt(frob);
    const double target = 1e-12 * frob;

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                // Rotation angle zeroing a[p][q] (Golub & Van Loan, sym.schur2).
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(1.0, theta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = t * c;
                for (std::size_t r = 0; r < n; ++r) {
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    at(r, p) = c * arp - s * arq;
                    at(r, q) = s * arp + c * arq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const double apr = at(p, r);
                    const double aqr = at(q, r);
                    at(p, r) = c * apr - s * aqr;
                    at(q, r) = s * apr + c * aqr;
                }
                at(p, q) = 0.0;
                at(q, p) = 0.0;
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

PsdReport psd_check(std::size_t n, std::span<const double> values, double tol) {
    if (values.size() != n * n) throw Error(ErrorCode::InvalidArgument, "matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (values[i * n + j] != values[j * n + i]) {
                throw Error(ErrorCode::AsymmetricInput,
                            "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") differs from its transpose");
            }
        }
    }
    PsdReport r;
    r.tol = tol;
    if (n == 0) {
        r.psd = true;
        return r;
    }
    const std::vector<double> eig = symmetric_eigenvalues(n, values);
    r.min_eigenvalue = eig.front();
    r.spectral_norm = std::max(std::abs(eig.front()), std::abs(eig.back()));
    r.psd = r.min_eigenvalue >= -tol * std::max(1.0, r.spectral_norm);
    return r;
}

PsdReport psd_check(GramMatrix& k, double tol) {
    PsdReport r = psd_check(k.n, k.values, tol);
    k.min_eigenvalue = r.min_eigenvalue;
    return r;
}

}  // namespace tevs
