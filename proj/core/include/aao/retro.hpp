#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace aao::retro {

/// Width gamma (radians) of the anomalous-rotation weight W(a) = 1/(a^2 + g^2).
/// Strictly positive: gamma = 0 makes W singular at a = 0 and is reachable
/// only as a limit (probe it with small gamma, e.g. 1e-6).
class AnsatzParams {
public:
    explicit AnsatzParams(double gamma);
    double gamma() const { return gamma_; }

private:
    double gamma_;
};

/// Alice's and Bob's x-z-plane measurement angles, normalized to [0, 2*pi).
class MeasurementSettings {
public:
    MeasurementSettings(double alice_angle, double bob_angle);
    double alice() const { return alice_; }
    double bob() const { return bob_; }
    double relative_angle() const { return alice_ - bob_; }

private:
    double alice_;
    double bob_;
};

/// W(alpha) = 1/(alpha^2 + gamma^2). Even in alpha, strictly decreasing in
/// |alpha|.
double lorentzian_weight(double alpha, const AnsatzParams& params);

/// Truncation radius N certified to keep the wrapped-sum remainder below
/// `tolerance` (see wrapped_sum).
std::int64_t truncation_radius(const AnsatzParams& params, double tolerance);

/// S(theta, gamma) = sum over all integers n of W(2*pi*n + theta): the total
/// weight of every net rotation congruent to theta mod 2*pi. 2*pi-periodic
/// and even in theta.
///
/// Computed as a symmetric truncated sum over n in [-N, N] plus the exact
/// integral of both tails and the leading Euler-Maclaurin midpoint
/// correction; N is chosen so the certified remainder bound stays below
/// `tolerance`. Accumulation is in long double with a fixed term order, so
/// results are deterministic.
double wrapped_sum(double theta, const AnsatzParams& params, double tolerance = 1e-12);

/// Same computation with an explicit truncation radius, for convergence
/// studies (doubling the radius must move the result by less than the
/// certified tolerance).
double wrapped_sum_truncated(double theta, const AnsatzParams& params, std::int64_t radius);

/// P(theta)/P(pi + theta) = S(theta)/S(pi + theta): the relative probability
/// of Bob's two possible outcomes at relative angle theta.
double outcome_ratio(double theta, const AnsatzParams& params);

/// The same ratio in closed form,
/// [cos^2(theta/2) + sin^2(theta/2) tanh^2(gamma/2)] /
/// [sin^2(theta/2) + cos^2(theta/2) tanh^2(gamma/2)].
double outcome_ratio_closed_form(double theta, const AnsatzParams& params);

/// P_aligned = S(theta) / (S(theta) + S(pi + theta)). Approaches the Born
/// value cos^2(theta/2) as gamma -> 0.
double aligned_probability(double theta, const AnsatzParams& params);

/// E = P(a = b) - P(a != b) for an entangled pair measured at the two
/// settings: [S(d) - S(pi + d)] / [S(d) + S(pi + d)] with d = alice - bob.
/// Approaches cos(alice - bob) as gamma -> 0.
double entangled_correlation(const MeasurementSettings& settings, const AnsatzParams& params);

/// |E(a,b) + E(a,b') + E(a',b) - E(a',b')|. Values above 2 violate the Bell
/// inequality.
double chsh_value(double a, double a_prime, double b, double b_prime,
                  const AnsatzParams& params);

struct DualityResult {
    double residual = 0.0;
    bool within_tolerance = false;
};

/// Checks the entangled-vs-sequential duality at matched settings:
/// entangled_correlation(a, b) must equal 2 * aligned_probability(a - b) - 1.
DualityResult duality_check(const MeasurementSettings& settings, const AnsatzParams& params,
                            double tolerance = 1e-10);

struct BornDeviation {
    double theta = 0.0;
    double gamma = 0.0;
    double deviation = 0.0; // |aligned_probability - cos^2(theta/2)|
};

/// Deviation from the Born value over a (gamma, theta) grid, gamma-major.
/// Deviations shrink quadratically as gamma decreases (about 4x per halving),
/// bounded by gamma^2 for gamma <= 0.1.
std::vector<BornDeviation> born_limit_scan(std::span<const double> thetas,
                                           std::span<const double> gammas);

} // namespace aao::retro
