#include "aao/retro.hpp"
#include "aao/presets.hpp"

#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

using namespace aao;
using namespace aao::retro;
using testsupport::thrown_code;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> theta_grid(int points, double from = 0.0, double to = 2.0 * pi) {
    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) {
        grid[static_cast<std::size_t>(k)] = from + (to - from) * k / points;
    }
    return grid;
}

} // namespace

TEST_SUITE("retro") {

TEST_CASE("ansatz parameters and angles are validated") {
    CHECK(thrown_code([] { AnsatzParams(0.0); }) == ErrorCode::invalid_argument);
    CHECK(thrown_code([] { AnsatzParams(-0.5); }) == ErrorCode::invalid_argument);
    CHECK(thrown_code([] { AnsatzParams(std::nan("")); }) == ErrorCode::invalid_argument);
    CHECK(thrown_code([] { AnsatzParams(1.0 / 0.0); }) == ErrorCode::invalid_argument);
    CHECK(thrown_code([] { MeasurementSettings(std::nan(""), 0.0); }) ==
          ErrorCode::invalid_argument);
    CHECK(thrown_code([] { wrapped_sum(1.0, AnsatzParams(1.0), 0.0); }) ==
          ErrorCode::invalid_argument);
    CHECK(thrown_code([] { wrapped_sum_truncated(1.0, AnsatzParams(1.0), 0); }) ==
          ErrorCode::invalid_argument);
    CHECK(thrown_code([] { lorentzian_weight(1.0 / 0.0, AnsatzParams(1.0)); }) ==
          ErrorCode::invalid_argument);

    const MeasurementSettings s(-pi / 2.0, 2.0 * pi + 0.25);
    CHECK(s.alice() == doctest::Approx(1.5 * pi).epsilon(1e-15));
    CHECK(s.bob() == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("Lorentzian weight basics") {
    const AnsatzParams unit(1.0);
    CHECK(lorentzian_weight(0.0, unit) == 1.0);
    CHECK(lorentzian_weight(1.0, unit) == 0.5);
    std::mt19937 rng(3);
    double previous = lorentzian_weight(0.0, unit);
    for (int k = 1; k <= 30; ++k) {
        const double alpha = 0.4 * k;
        CHECK(lorentzian_weight(alpha, unit) == lorentzian_weight(-alpha, unit));
        CHECK(lorentzian_weight(alpha, unit) < previous);
        previous = lorentzian_weight(alpha, unit);
    }
}

TEST_CASE("closed form for S is validated against the literal truncated sum") {
    // The sinh/cosh expression is an implementer-derived identity; prove it
    // against plain truncation before any other test leans on it.
    struct Point {
        double theta, gamma;
    };
    for (const Point p : {Point{1.0, 1.0}, Point{pi, 0.5}, Point{0.3, 0.05}, Point{5.9, 2.0}}) {
        const long long radius = 2'000'000;
        const double pure = static_cast<double>(oracle::pure_truncated_sum(p.theta, p.gamma, radius));
        const double bound = oracle::pure_truncation_tail_bound(p.theta, radius);
        const double closed = oracle::wrapped_sum_closed_form(p.theta, p.gamma);
        CHECK(std::abs(pure - closed) <= bound + 1e-12);
        // and the production sum agrees with the literal one too
        CHECK(std::abs(wrapped_sum(p.theta, AnsatzParams(p.gamma)) - pure) <= bound + 1e-12);
    }
}

TEST_CASE("wrapped sum matches the validated closed form everywhere") {
    for (double gamma : {0.01, 0.1, 0.5, 1.0, 2.0}) {
        const AnsatzParams params(gamma);
        for (double theta : theta_grid(64)) {
            const double sum = wrapped_sum(theta, params);
            const double closed = oracle::wrapped_sum_closed_form(theta, gamma);
            CHECK(std::abs(sum - closed) <= 1e-12 * std::max(1.0, closed));
        }
    }
}

TEST_CASE("frozen wrapped-sum value at (pi, 1)") {
    CHECK(std::abs(wrapped_sum(pi, AnsatzParams(1.0)) - 0.23105857863000488) < 1e-15);
}

TEST_CASE("wrapped sum is periodic and even up to the summation tolerance") {
    for (double gamma : {0.1, 0.5, 1.0, 2.0}) {
        const AnsatzParams params(gamma);
        for (double theta : theta_grid(40)) {
            CHECK(std::abs(wrapped_sum(theta, params) - wrapped_sum(theta + 2.0 * pi, params)) <=
                  1e-12);
            CHECK(std::abs(wrapped_sum(theta, params) - wrapped_sum(-theta, params)) <= 1e-12);
        }
    }
    // near the sharp peak the same holds relative to the sum's size
    const AnsatzParams narrow(0.01);
    for (double theta : theta_grid(40)) {
        const double s = wrapped_sum(theta, narrow);
        CHECK(std::abs(s - wrapped_sum(theta + 2.0 * pi, narrow)) <= 1e-12 * std::max(1.0, s));
        CHECK(std::abs(s - wrapped_sum(-theta, narrow)) <= 1e-12 * std::max(1.0, s));
    }
}

TEST_CASE("doubling the truncation radius moves nothing beyond the tolerance") {
    for (double gamma : {0.01, 1.0}) {
        const AnsatzParams params(gamma);
        const std::int64_t radius = truncation_radius(params, 1e-12);
        for (double theta : {0.0, 0.7, pi, 4.4}) {
            const double base = wrapped_sum_truncated(theta, params, radius);
            const double doubled = wrapped_sum_truncated(theta, params, 2 * radius);
            CHECK(std::abs(base - doubled) < 1e-12);
        }
    }
    CHECK(truncation_radius(AnsatzParams(1.0), 1e-12) >= 1024);
    // the sum through the public entry point equals the explicit-radius one
    const AnsatzParams params(0.3);
    CHECK(wrapped_sum(1.1, params) ==
          wrapped_sum_truncated(1.1, params, truncation_radius(params, 1e-12)));
}

TEST_CASE("outcome ratio obeys the closed form on the full grid") {
    for (double gamma : {0.01, 0.1, 0.5, 1.0, 2.0}) {
        const AnsatzParams params(gamma);
        double worst = 0.0;
        for (double theta : theta_grid(200)) {
            worst = std::max(worst, std::abs(outcome_ratio(theta, params) -
                                             outcome_ratio_closed_form(theta, params)));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("frozen outcome-ratio values at gamma = 1") {
    const AnsatzParams unit(1.0);
    CHECK(std::abs(outcome_ratio(0.0, unit) - 4.6826943768311693) < 1e-12);  // coth^2(1/2)
    CHECK(std::abs(outcome_ratio(pi, unit) - 0.21355226703407259) < 1e-13); // tanh^2(1/2)
    // both sums fold to the same quarter-turn class; equal up to rounding
    CHECK(std::abs(outcome_ratio(pi / 2.0, unit) - 1.0) <= 1e-14);
    CHECK(std::abs(outcome_ratio(pi / 2.0, AnsatzParams(0.017)) - 1.0) <= 1e-14);
}

TEST_CASE("aligned probability: worked values and complementarity") {
    CHECK(std::abs(aligned_probability(pi / 2.0, AnsatzParams(0.8)) - 0.5) <= 1e-14);
    CHECK(std::abs(aligned_probability(pi / 3.0, AnsatzParams(1e-3)) - 0.75) < 1e-6);
    CHECK(std::abs(aligned_probability(pi / 3.0, AnsatzParams(1e-3)) - 0.74999987500005208) <
          1e-13);
    std::mt19937 rng(11);
    for (int k = 0; k < 50; ++k) {
        const double theta = 2.0 * pi * static_cast<double>(rng() >> 8) * 0x1.0p-24;
        const AnsatzParams params(0.05 + 0.1 * (k % 9));
        const double p = aligned_probability(theta, params);
        CHECK(p > 0.0);
        CHECK(p < 1.0);
        CHECK(std::abs(p + aligned_probability(theta + pi, params) - 1.0) <= 1e-15);
    }
}

TEST_CASE("entangled correlation: limits, zeros, and the validated closed form") {
    // equal settings, tiny gamma: perfect correlation up to O(gamma^2)
    CHECK(std::abs(entangled_correlation({1.3, 1.3}, AnsatzParams(1e-6)) - 1.0) < 1e-6);
    // quarter-turn separation: S(pi/2) and S(3*pi/2) fold to the same class
    CHECK(std::abs(entangled_correlation({pi / 2.0, 0.0}, AnsatzParams(0.37))) <= 1e-14);
    CHECK(std::abs(entangled_correlation({pi / 3.0, 0.0}, AnsatzParams(1e-3)) - 0.5) < 1e-6);

    for (double gamma : {0.05, 0.3, 1.0, 2.5}) {
        const AnsatzParams params(gamma);
        for (double alpha : theta_grid(12)) {
            for (double beta : theta_grid(7)) {
                const double e = entangled_correlation({alpha, beta}, params);
                CHECK(e <= 1.0);
                CHECK(e >= -1.0);
                CHECK(std::abs(e - oracle::correlation_closed_form(alpha - beta, gamma)) <=
                      1e-12);
            }
        }
    }
}

TEST_CASE("CHSH: frozen values, monotonicity, and the violation window") {
    const auto [a, ap, b, bp] = presets::chsh_standard_angles();
    CHECK(std::abs(chsh_value(a, ap, b, bp, AnsatzParams(1e-6)) - 2.8284271247461901) < 1e-5);
    CHECK(std::abs(chsh_value(a, ap, b, bp, AnsatzParams(1.0)) - 1.8329742859386240) < 1e-12);

    double previous = 10.0;
    for (double gamma : {0.05, 0.2, 0.4, 0.5, 0.6, 0.8, 0.88, 0.89, 1.2, 2.0}) {
        const double value = chsh_value(a, ap, b, bp, AnsatzParams(gamma));
        CHECK(value < previous); // strictly decreasing in gamma
        previous = value;
        if (gamma <= 0.88) {
            CHECK(value > 2.0);
        }
    }
    CHECK(chsh_value(a, ap, b, bp, AnsatzParams(0.89)) < 2.0);

    // degenerate settings collapse to |2 E(a, b)|
    const AnsatzParams params(0.4);
    CHECK(std::abs(chsh_value(a, a, b, b, params) -
                   2.0 * std::abs(entangled_correlation({a, b}, params))) < 1e-15);
}

TEST_CASE("duality residuals vanish") {
    CHECK(duality_check({0.3, 1.1}, AnsatzParams(0.2), 1e-12).within_tolerance);
    CHECK(duality_check({0.3, 1.1}, AnsatzParams(0.2)).residual <= 1e-12);
    CHECK(duality_check({0.77, 0.77}, AnsatzParams(1.4)).residual <= 1e-15);

    std::mt19937_64 rng(20260808);
    auto uniform01 = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const double alpha = 2.0 * pi * uniform01();
        const double beta = 2.0 * pi * uniform01();
        const double gamma = 1e-3 * std::pow(2.0 / 1e-3, uniform01());
        worst = std::max(worst,
                         duality_check({alpha, beta}, AnsatzParams(gamma)).residual);
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("Born-limit scan: quadratic shrink and the symmetry point") {
    const std::vector<double> thetas = theta_grid(256);
    const std::vector<double> gammas{0.1, 0.05, 0.01};
    const auto rows = born_limit_scan(thetas, gammas);
    REQUIRE(rows.size() == thetas.size() * gammas.size());

    std::vector<double> max_dev(gammas.size(), 0.0);
    for (std::size_t g = 0; g < gammas.size(); ++g) {
        for (std::size_t k = 0; k < thetas.size(); ++k) {
            const auto& row = rows[g * thetas.size() + k];
            CHECK(row.gamma == gammas[g]);
            max_dev[g] = std::max(max_dev[g], row.deviation);
        }
        CHECK(max_dev[g] <= gammas[g] * gammas[g]);
    }
    // theta = pi/2 sits at index 64: both outcomes equally likely
    CHECK(rows[64].deviation <= 1e-15);
    // frozen worst deviation at gamma = 0.1 (attained at theta = 0)
    CHECK(std::abs(rows[0].deviation - 0.0024896255233868) < 1e-13);
    // halving gamma shrinks the worst deviation about 4x (frozen 3.98755...)
    CHECK(std::abs(max_dev[0] / max_dev[1] - 3.9875503170152245) < 1e-9);

    // at gamma = 1e-3 the whole scan sits below 1e-6
    const std::vector<double> tiny_gamma{1e-3};
    double worst = 0.0;
    for (const auto& row : born_limit_scan(thetas, tiny_gamma)) {
        worst = std::max(worst, row.deviation);
    }
    CHECK(worst < 1e-6);
}

TEST_CASE("wrapped-sum evaluations are deterministic") {
    const AnsatzParams params(0.23);
    CHECK(wrapped_sum(2.6, params) == wrapped_sum(2.6, params));
    const std::vector<double> thetas = theta_grid(16);
    const std::vector<double> gammas{0.4};
    const auto a = born_limit_scan(thetas, gammas);
    const auto b = born_limit_scan(thetas, gammas);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].deviation == b[i].deviation);
}

} // TEST_SUITE("retro")
