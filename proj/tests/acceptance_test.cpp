// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tevs/algebra.hpp"
#include "tevs/kernel.hpp"
#include "tevs/ortho.hpp"
#include "tevs/tep.hpp"
#include "tevs/textsim.hpp"

using namespace tevs;
using oracle::rel_err;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

// Integer values in [-5, 5] \ {0} at irregular real timestamps.
TimeSeries integer_series_random_times(std::mt19937_64& rng, std::size_t max_len, std::size_t dim) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<int> val(-5, 4);
    std::uniform_real_distribution<double> gap(0.05, 1.0);
    std::vector<Sample> samples(len(rng));
    double t = 0.0;
    for (Sample& s : samples) {
        t += gap(rng);
        s.t = t;
        for (std::size_t k = 0; k < dim; ++k) {
            const int v = val(rng);
            s.value.push_back(v >= 0 ? v + 1 : v);
        }
    }
    return validate(std::move(samples));
}

TimeSeries uniform_series(std::mt19937_64& rng, std::size_t length, std::size_t dim) {
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    std::vector<Sample> samples(length);
    for (std::size_t i = 0; i < length; ++i) {
        samples[i].t = static_cast<double>(i);
        for (std::size_t k = 0; k < dim; ++k) {
            double x;
            do x = val(rng);
            while (x == 0.0);
            samples[i].value.push_back(x);
        }
    }
    return validate(std::move(samples));
}

// 1. DP == memoized recursion == closed-form double sum.
Outcome oracle_equivalence() {
    const auto start = Clock::now();
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> nu_dist(0.0, 2.0);
    double worst = 0.0;
    const int pairs = 500;
    for (int trial = 0; trial < pairs; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const TimeSeries a = integer_series_random_times(rng, 8, d);
        const TimeSeries b = integer_series_random_times(rng, 8, d);
        const double nu = nu_dist(rng);
        const double dp = teip(a, b, nu);
        const double naive = tep_naive(a, b, TepConfig::teip(nu));
        const double closed = oracle::closed_form_teip(a, b, nu);
        worst = std::max({worst, rel_err(dp, naive), rel_err(dp, closed), rel_err(naive, closed)});
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-9 && elapsed < 10.0,
            fmt("%d pairs, max rel err %.3g (tol 1e-9), %.2f s (limit 10 s)", pairs, worst, elapsed)};
}

// 2. Symmetry, additivity, homogeneity, positivity.
Outcome inner_product_axioms() {
    std::mt19937_64 rng(202);
    std::uniform_int_distribution<int> lam(-7, 7);
    const double nus[] = {0.01, 0.5, 2.0};
    double worst_add = 0.0, worst_hom = 0.0;
    int asym = 0, nonpositive = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const double nu = nus[trial % 3];
        const TimeSeries a = oracle::random_lattice_series(rng, 10, d);
        const TimeSeries b = oracle::random_lattice_series(rng, 10, d);
        const TimeSeries c = oracle::random_lattice_series(rng, 10, d);
        const double l = lam(rng);
        if (teip(a, c, nu) != teip(c, a, nu) || teip(a, b, nu) != teip(b, a, nu)) ++asym;
        worst_add = std::max(worst_add, rel_err(teip(oplus(a, b), c, nu), teip(a, c, nu) + teip(b, c, nu)));
        worst_hom = std::max(worst_hom, rel_err(teip(otimes(l, a), c, nu), l * teip(a, c, nu)));
        for (const TimeSeries* s : {&a, &b, &c}) {
            if (!s->empty() && !(teip(*s, *s, nu) > 0.0)) ++nonpositive;
        }
    }
    const double null = teip({}, {}, 0.5);
    const bool pass = asym == 0 && worst_add <= 1e-9 && worst_hom <= 1e-9 && nonpositive == 0 && null == 0.0;
    return {pass, fmt("500 triples: asymmetric %d, additivity %.3g, homogeneity %.3g, "
                      "non-positive self products %d, <null,null> = %g",
                      asym, worst_add, worst_hom, nonpositive, null)};
}

// 3. Additivity breaks as soon as (alpha, beta) leaves (1, -1).
Outcome uniqueness_falsification() {
    const TimeSeries a = validate(scalar_samples({{1, 0.0}, {2, 1.0}}));
    const TimeSeries b = validate(scalar_samples({{1, 0.5}, {3, 1.5}}));
    const TimeSeries c = validate(scalar_samples({{1, 0.25}, {2, 0.75}, {1, 1.25}}));
    const TimeSeries ab = oplus(a, b);
    auto gap = [&](double alpha, double beta) {
        const TepConfig cfg = TepConfig::custom(alpha, beta, 0.0, 0.5);
        return std::abs(tep(ab, c, cfg) - tep(a, c, cfg) - tep(b, c, cfg));
    };
    const double control = gap(1.0, -1.0);
    const double g1 = gap(1.1, -1.0);
    const double g2 = gap(1.0, -0.9);
    return {g1 > 1e-3 && g2 > 1e-3 && control <= 1e-12,
            fmt("additivity gap: (1.1,-1) %.4g, (1,-0.9) %.4g (need > 1e-3); control (1,-1) %.3g", g1, g2,
                control)};
}

// 4. Rigid alignment limit on uniform equal-length series.
Outcome euclidean_limit() {
    std::mt19937_64 rng(404);
    double worst_teip = 0.0, worst_twip = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const TimeSeries a = uniform_series(rng, 16, d);
        const TimeSeries b = uniform_series(rng, 16, d);
        const double dot = oracle::euclidean_dot(a, b);
        const double scale = 1.0 + std::abs(dot);
        worst_teip = std::max(worst_teip, std::abs(teip(a, b, 40) - dot) / scale);
        worst_twip = std::max(worst_twip, std::abs(twip2(a, b, 40) - dot) / scale);
    }
    return {worst_teip <= 1e-9 && worst_twip <= 1e-9,
            fmt("100 pairs at nu=40: teip %.3g, twip2 %.3g (tol 1e-9 relative)", worst_teip, worst_twip)};
}

// 5. Metric axioms of the induced distance.
Outcome distance_axioms() {
    std::mt19937_64 rng(505);
    const double nu = 0.5;
    int negative = 0, asym = 0, indiscernible = 0, triangle = 0;
    double worst_slack = -INFINITY;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t d = 1 + trial % 2;
        const TimeSeries a = oracle::random_lattice_series(rng, 8, d);
        const TimeSeries b = trial % 10 == 0 ? a : oracle::random_lattice_series(rng, 8, d);
        const TimeSeries c = oracle::random_lattice_series(rng, 8, d);
        const double ab = distance(a, b, nu), ba = distance(b, a, nu);
        const double bc = distance(b, c, nu), ac = distance(a, c, nu);
        negative += ab < 0 || bc < 0 || ac < 0;
        asym += ab != ba;
        indiscernible += (ab == 0.0) != (a == b);
        const double slack = ac - (ab + bc);
        worst_slack = std::max(worst_slack, slack);
        triangle += slack > 1e-9;
    }
    return {negative == 0 && asym == 0 && indiscernible == 0 && triangle == 0,
            fmt("500 triples: negative %d, asymmetric %d, indiscernibility violations %d, "
                "triangle violations %d (max d(a,c) - d(a,b) - d(b,c) = %.3g, slack 1e-9)",
                negative, asym, indiscernible, triangle, worst_slack)};
}

// 6. teip Gram matrices are positive semidefinite.
Outcome gram_psd() {
    const auto start = Clock::now();
    std::mt19937_64 rng(606);
    const double nus[] = {0.0, 0.01, 1.0, 100.0};
    int failures = 0;
    double worst_ratio = INFINITY;
    for (int trial = 0; trial < 20; ++trial) {
        Dataset data;
        for (int i = 0; i < 50; ++i) {
            data.series.push_back(oracle::random_real_series(rng, 1, 30, 1 + trial % 3));
        }
        GramMatrix k = gram(data, {.nu = nus[trial % 4], .threads = 0});
        const PsdReport r = psd_check(k, 1e-8);
        failures += !r.psd;
        worst_ratio = std::min(worst_ratio, r.min_eigenvalue / std::max(1.0, r.spectral_norm));
    }
    const double elapsed = seconds_since(start);
    return {failures == 0 && elapsed < 60.0,
            fmt("20 datasets x 50 series: %d not PSD, min lambda_min / max(1,||K||) = %.3g (tol -1e-8), %.2f s",
                failures, worst_ratio, elapsed)};
}

// 7. Orthogonalized spikes become (negative, positive) spike pairs.
Outcome spike_orthogonalization() {
    const OrthoResult r = gram_schmidt(spike_family(11, 1e-6), {.nu = 0.01});
    int bad = 0;
    for (std::size_t k = 1; k < r.basis.size(); ++k) {
        const TimeSeries& e = r.basis[k];
        double peak = 0.0;
        for (const Sample& s : e) peak = std::max(peak, std::abs(s.value[0]));
        std::vector<double> dominant;
        for (const Sample& s : e) {
            if (std::abs(s.value[0]) >= 1e-3 * peak) dominant.push_back(s.value[0]);
        }
        if (!(dominant.size() == 2 && dominant[0] < 0 && dominant[1] > 0)) ++bad;
    }
    return {r.basis.size() == 11 && r.gram_residual <= 1e-8 && bad == 0,
            fmt("basis %zu/11, gram residual %.3g (tol 1e-8), elements without (-,+) spike pair: %d",
                r.basis.size(), r.gram_residual, bad)};
}

// 8. Fourier basis: orthogonal rigidly, not elastically.
Outcome sincos_precondition() {
    const auto fam = sincos_family(128);
    const double rigid = orthogonality_residual(fam, 1e6);
    const double elastic = orthogonality_residual(fam, 0.01);
    return {fam.size() == 128 && rigid <= 1e-6 && elastic > 1e-3,
            fmt("128 members of length 128: residual at nu=1e6 %.3g (<= 1e-6), at nu=0.01 %.3g (> 1e-3)", rigid,
                elastic)};
}

// 9. Zero stiffness text product is the bag-of-words product.
Outcome text_coincidence() {
    std::mt19937_64 rng(909);
    std::vector<text::TokenSeries> corpus;
    for (int i = 0; i < 200; ++i) corpus.push_back(oracle::random_tokens(rng, 60, 25));
    const text::IdfTable table(corpus);
    const auto idf_w = text::Weights::inverse_document_frequency(table);

    int binary_mismatch = 0;
    double worst_idf = 0.0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& a = corpus[i];
        const auto& b = corpus[(i * 7 + 3) % corpus.size()];
        binary_mismatch += text::teip_tm(a, b, 0) != oracle::bag_of_words(a, b, text::Weights::binary());
        worst_idf = std::max(worst_idf, rel_err(text::teip_tm(a, b, 0, idf_w), oracle::bag_of_words(a, b, idf_w)));
    }

    // Ranking against the vector-model cosine, ties allowed to permute.
    int order_mismatch = 0;
    for (int q = 0; q < 20; ++q) {
        text::TokenSeries query = oracle::random_tokens(rng, 15, 25);
        if (query.empty()) query.tokens.push_back("w1");
        std::vector<double> cosine(corpus.size(), 0.0);
        const double qq = oracle::bag_of_words(query, query, text::Weights::binary());
        for (std::size_t k = 0; k < corpus.size(); ++k) {
            const double dd = oracle::bag_of_words(corpus[k], corpus[k], text::Weights::binary());
            if (dd > 0) cosine[k] = oracle::bag_of_words(query, corpus[k], text::Weights::binary()) / std::sqrt(qq * dd);
        }
        std::vector<double> sorted = cosine;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        const auto ranked = text::rank(query, corpus, 0.0);
        for (std::size_t k = 0; k < ranked.size(); ++k) {
            order_mismatch += std::abs(cosine[ranked[k].doc] - sorted[k]) > 1e-12;
        }
    }
    return {binary_mismatch == 0 && worst_idf <= 1e-12 && order_mismatch == 0,
            fmt("200 pairs: binary exact mismatches %d; idf max rel err %.3g (tol 1e-12); "
                "rank positions out of cosine order %d",
                binary_mismatch, worst_idf, order_mismatch)};
}

// 10. (A ⊕ B) ⊖ B == A.
Outcome reversibility() {
    std::mt19937_64 rng(1010);
    int failures = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t d = 1 + trial % 3;
        const TimeSeries a = oracle::random_lattice_series(rng, 10, d);
        const TimeSeries b = oracle::random_lattice_series(rng, 10, d);
        failures += !(ominus(oplus(a, b), b) == a);
    }
    return {failures == 0, fmt("500 pairs, %d samplewise mismatches", failures)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"AC1 oracle equivalence", oracle_equivalence},
        {"AC2 inner-product axioms", inner_product_axioms},
        {"AC3 uniqueness falsification", uniqueness_falsification},
        {"AC4 Euclidean limit", euclidean_limit},
        {"AC5 distance axioms", distance_axioms},
        {"AC6 PSD of teip Grams", gram_psd},
        {"AC7 spike orthogonalization", spike_orthogonalization},
        {"AC8 sine-cosine orthogonality", sincos_precondition},
        {"AC9 text coincidence at nu=0", text_coincidence},
        {"AC10 reversibility of oplus", reversibility},
    };
    int failed = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
