#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fqesr/fft.hpp"
#include "fqesr/fit.hpp"
#include "fqesr/hermitian.hpp"
#include "fqesr/rng.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace fqesr;

namespace {

HermitianMatrix random_hermitian(std::size_t n, Rng& rng) {
    std::vector<cplx> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = cplx(2.0 * rng.uniform() - 1.0, 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
            a[i * n + j] = v;
            a[j * n + i] = std::conj(v);
        }
    }
    return HermitianMatrix(n, std::move(a));
}

// Direct multiplication oracle: max_k ||H v_k - lambda_k v_k||_2.
double max_eigenpair_residual(const HermitianMatrix& h, const EigenSystem& es) {
    const std::size_t n = h.dim();
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cplx acc(0.0, 0.0);
            for (std::size_t j = 0; j < n; ++j) acc += h(i, j) * es.vector(j, k);
            acc -= es.values[k] * es.vector(i, k);
            sum += std::norm(acc);
        }
        worst = std::max(worst, std::sqrt(sum));
    }
    return worst;
}

// O(N^2) reference DFT.
std::vector<cplx> direct_dft(const std::vector<cplx>& x) {
    const std::size_t n = x.size();
    std::vector<cplx> out(n, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
            const double ang = -2.0 * M_PI * static_cast<double>(k) * static_cast<double>(j) /
                               static_cast<double>(n);
            out[k] += x[j] * cplx(std::cos(ang), std::sin(ang));
        }
    return out;
}

} // namespace

TEST_CASE("eigensolve: already-diagonal matrix") {
    std::vector<cplx> a = {3.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0};
    const auto es = eigensolve(HermitianMatrix(3, a));
    CHECK(es.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(es.values[1] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(es.values[2] == doctest::Approx(3.0).epsilon(1e-14));
    // columns are (permuted) unit basis vectors
    for (std::size_t k = 0; k < 3; ++k) {
        double colnorm = 0.0;
        for (std::size_t r = 0; r < 3; ++r) colnorm += std::norm(es.vector(r, k));
        CHECK(colnorm == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(std::abs(es.vector(1, 0)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigensolve: 2x2 off-diagonal") {
    std::vector<cplx> a = {0.0, 1.0, 1.0, 0.0};
    const auto es = eigensolve(HermitianMatrix(2, a));
    CHECK(es.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(es.values[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigensolve: random 16x16, residual oracle") {
    Rng rng(42);
    const auto h = random_hermitian(16, rng);
    const auto es = eigensolve(h);
    CHECK(max_eigenpair_residual(h, es) < 1e-12 * h.frobenius_norm());
}

TEST_CASE("eigensolve: reconstruction, trace, orthonormality over random sizes") {
    Rng rng(1234);
    for (std::size_t n : {1, 2, 3, 5, 8, 16, 24, 33, 64}) {
        const auto h = random_hermitian(n, rng);
        const auto es = eigensolve(h);

        double trace = 0.0, lsum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            trace += h(i, i).real();
            lsum += es.values[i];
        }
        CHECK(std::abs(trace - lsum) <= 1e-10 * std::max(1.0, std::abs(trace)));

        // ascending order
        for (std::size_t k = 1; k < n; ++k) CHECK(es.values[k] >= es.values[k - 1]);

        // orthonormality to 1e-10
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p; q < n; ++q) {
                cplx dot(0.0, 0.0);
                for (std::size_t r = 0; r < n; ++r)
                    dot += std::conj(es.vector(r, p)) * es.vector(r, q);
                const double want = (p == q) ? 1.0 : 0.0;
                CHECK(std::abs(dot - want) < 1e-10);
            }

        // reconstruction ||V diag V^dag - H|| <= 1e-10 ||H||
        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                cplx acc(0.0, 0.0);
                for (std::size_t k = 0; k < n; ++k)
                    acc += es.vector(i, k) * es.values[k] * std::conj(es.vector(j, k));
                err += std::norm(acc - h(i, j));
            }
        CHECK(std::sqrt(err) <= 1e-10 * h.frobenius_norm());
    }
}

TEST_CASE("eigensolve: non-Hermitian input rejected with indices") {
    std::vector<cplx> a = {1.0, cplx(0.0, 2.0), cplx(0.0, 2.0), 1.0}; // a01 != conj(a10)
    CHECK_THROWS_WITH_AS(HermitianMatrix(2, a), doctest::Contains("(0,1)"), std::invalid_argument);
}

TEST_CASE("linear_fit: exact line and constant data") {
    FitResult r = linear_fit({0.0, 1.0, 2.0}, {1.0, 4.0, 7.0});
    CHECK(r.params[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.params[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.residual_norm < 1e-12);

    r = linear_fit({0.0, 1.0, 2.0, 5.0}, {5.0, 5.0, 5.0, 5.0});
    CHECK(r.params[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.params[1] == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("linear_fit: noisy synthetic line recovers slope within 3 standard errors") {
    Rng rng(99);
    std::vector<double> x(1000), y(1000);
    const double slope = 1.75, icpt = -0.4, sigma = 0.1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = static_cast<double>(i) / 999.0;
        y[i] = slope * x[i] + icpt + sigma * rng.normal();
    }
    const FitResult r = linear_fit(x, y);
    REQUIRE(r.covariance.has_value());
    const double se_slope = std::sqrt((*r.covariance)[0]);
    CHECK(std::abs(r.params[0] - slope) < 3.0 * se_slope);
}

TEST_CASE("linear_fit: degenerate abscissa rejected") {
    CHECK_THROWS_AS(linear_fit({2.0, 2.0, 2.0}, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(linear_fit({1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("nlls_fit: quadratic amplitude, exact data") {
    auto model = [](const std::vector<double>& p, const std::vector<double>& xs) {
        std::vector<double> out(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = p[0] * xs[i] * xs[i];
        return out;
    };
    std::vector<double> xs, ys;
    for (int i = 0; i <= 10; ++i) {
        xs.push_back(0.1 * i);
        ys.push_back(2.0 * xs.back() * xs.back());
    }
    const FitResult r = nlls_fit(model, xs, ys, {1.0});
    CHECK(r.converged);
    CHECK(r.params[0] == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("nlls_fit: Lorentzian self-consistency") {
    auto model = [](const std::vector<double>& p, const std::vector<double>& xs) {
        // p = {amplitude, center, fwhm, baseline}
        std::vector<double> out(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double u = 2.0 * (xs[i] - p[1]) / p[2];
            out[i] = p[3] + p[0] / (1.0 + u * u);
        }
        return out;
    };
    const std::vector<double> truth = {0.8, 3.2, 0.9, 0.1};
    std::vector<double> xs, ys;
    for (int i = 0; i < 200; ++i) xs.push_back(0.05 * i);
    ys = model(truth, xs);
    const FitResult r = nlls_fit(model, xs, ys, {0.5, 3.0, 0.5, 0.0});
    CHECK(r.converged);
    for (std::size_t k = 0; k < truth.size(); ++k)
        CHECK(std::abs(r.params[k] - truth[k]) < 1e-6 * std::max(1.0, std::abs(truth[k])));
}

TEST_CASE("nlls_fit: synthetic qubit dispersion, noisy, persistent current within 1%") {
    // f(phi) = sqrt(d^2 + (2 ip (phi - c))^2), working units GHz / nA / mPhi0
    // flux-to-frequency: 2 Ip Phi0 / h = 0.62419 GHz per mPhi0 at Ip = 1 nA... folded
    // into the scaled slope parameter s = ip in these units below.
    const double phi0_over_h = 2.067833848e-15 / 6.62607015e-34; // Wb / (J s) = Hz/ (A)
    auto model = [&](const std::vector<double>& p, const std::vector<double>& phis) {
        // p = {delta_GHz, ip_nA, center_mPhi0}
        std::vector<double> out(phis.size());
        for (std::size_t i = 0; i < phis.size(); ++i) {
            const double eps_GHz =
                2.0 * p[1] * 1e-9 * (phis[i] - p[2]) * 1e-3 * phi0_over_h * 1e-9;
            out[i] = std::sqrt(p[0] * p[0] + eps_GHz * eps_GHz);
        }
        return out;
    };
    const std::vector<double> truth = {5.0, 330.0, 0.0};
    std::vector<double> phis, fq;
    Rng rng(7);
    for (int i = -20; i <= 20; ++i) phis.push_back(0.25 * i); // mPhi0
    fq = model(truth, phis);
    for (double& f : fq) f += 1e-3 * rng.normal(); // 1 MHz noise on GHz scale
    const FitResult r = nlls_fit(model, phis, fq, {4.0, 250.0, 0.3});
    CHECK(r.converged);
    CHECK(std::abs(r.params[1] - truth[1]) / truth[1] < 0.01);
}

TEST_CASE("nlls_fit: non-finite model output is an error") {
    auto model = [](const std::vector<double>& p, const std::vector<double>& xs) {
        std::vector<double> out(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) out[i] = std::sqrt(p[0]) * xs[i];
        return out;
    };
    CHECK_THROWS_AS(nlls_fit(model, {1.0, 2.0}, {1.0, 2.0}, {-1.0}), std::runtime_error);
}

TEST_CASE("fft_real: constant series concentrates in DC bin") {
    const std::vector<double> x(64, 2.5);
    const auto spec = fft_real(x, 10.0);
    CHECK(std::abs(spec.bins[0] - cplx(64.0 * 2.5, 0.0)) < 1e-10 * 64.0 * 2.5);
    for (std::size_t k = 1; k < spec.bins.size(); ++k) CHECK(std::abs(spec.bins[k]) < 1e-9);
}

TEST_CASE("fft_real: unit sine concentrates at bins +-k") {
    const std::size_t n = 128, kbin = 9;
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = std::sin(2.0 * M_PI * static_cast<double>(kbin * i) / static_cast<double>(n));
    const auto spec = fft_real(x, 1.0);
    double inside = std::norm(spec.bins[kbin]) + std::norm(spec.bins[n - kbin]);
    double total = 0.0;
    for (const auto& b : spec.bins) total += std::norm(b);
    CHECK(inside / total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("fft_real: Parseval identity on white noise") {
    Rng rng(7);
    const std::size_t n = 4096;
    std::vector<double> x(n);
    for (auto& v : x) v = rng.normal();
    const auto spec = fft_real(x, 1.0);
    double time_sum = 0.0, freq_sum = 0.0;
    for (double v : x) time_sum += v * v;
    for (const auto& b : spec.bins) freq_sum += std::norm(b);
    freq_sum /= static_cast<double>(n);
    CHECK(std::abs(time_sum - freq_sum) <= 1e-10 * time_sum);
}

TEST_CASE("fft round trip recovers the input") {
    Rng rng(21);
    for (std::size_t n : {2, 16, 1024}) {
        std::vector<double> x(n);
        for (auto& v : x) v = rng.normal();
        const auto spec = fft_real(x, 1.0);
        const auto back = inverse_fft_real(spec.bins);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            num += (back[i] - x[i]) * (back[i] - x[i]);
            den += x[i] * x[i];
        }
        CHECK(std::sqrt(num) <= 1e-10 * std::sqrt(den));
    }
}

TEST_CASE("fft: arbitrary lengths agree with the direct DFT") {
    Rng rng(5);
    for (std::size_t n : {3, 5, 7, 12, 100, 129, 257}) {
        std::vector<cplx> x(n);
        for (auto& v : x) v = cplx(rng.normal(), rng.normal());
        std::vector<cplx> fast = x;
        fft(fast);
        const auto slow = direct_dft(x);
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            num += std::norm(fast[k] - slow[k]);
            den += std::norm(slow[k]);
        }
        CHECK(std::sqrt(num / den) < 1e-11);
    }
}

TEST_CASE("fft: empty input rejected") {
    std::vector<cplx> e;
    CHECK_THROWS_AS(fft(e), std::invalid_argument);
    CHECK_THROWS_AS(fft_real({}, 1.0), std::invalid_argument);
}

TEST_CASE("rng: deterministic per seed, distinct across split streams") {
    Rng a(17), b(17), c(18);
    for (int i = 0; i < 8; ++i) CHECK(a.next_u64() == b.next_u64());
    bool differs = false;
    Rng a2(17);
    for (int i = 0; i < 8; ++i) differs |= (a2.next_u64() != c.next_u64());
    CHECK(differs);

    Rng s0 = Rng::split(17, 0), s1 = Rng::split(17, 1), s0b = Rng::split(17, 0);
    bool stream_differs = false;
    for (int i = 0; i < 8; ++i) {
        const auto v0 = s0.next_u64();
        CHECK(v0 == s0b.next_u64());
        stream_differs |= (v0 != s1.next_u64());
    }
    CHECK(stream_differs);
}

TEST_CASE("rng: normal moments sanity") {
    Rng rng(3);
    const int n = 200000;
    double mean = 0.0, var = 0.0;
    std::vector<double> vs(n);
    for (auto& v : vs) v = rng.normal();
    for (double v : vs) mean += v;
    mean /= n;
    for (double v : vs) var += (v - mean) * (v - mean);
    var /= n - 1;
    CHECK(std::abs(mean) < 0.01);
    CHECK(std::abs(var - 1.0) < 0.02);
}
