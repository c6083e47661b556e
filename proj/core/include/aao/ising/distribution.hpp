#pragma once

#include "aao/ising/types.hpp"
#include "aao/rational.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace aao::ising {

enum class ValueMode { floating, exact_rational };

/// A normalized probability table over all 2^n configurations of an ordered
/// site subset (the scope, ascending by label). Zero-probability entries are
/// explicit.
///
/// Entry indexing: bit k of an index is the spin of scope[k], with bit 0 the
/// lowest site label, spin -1 encoded as bit 0 and +1 as bit 1. Entries are in
/// ascending index order; this is the enumeration order used everywhere.
///
/// In exact-rational mode every entry is an exact fraction and the table sums
/// to exactly 1; the floating view is derived from the fractions.
class Distribution {
public:
    static Distribution floating(std::vector<SiteId> scope, std::vector<double> probabilities);
    static Distribution exact(std::vector<SiteId> scope, std::vector<Rational> probabilities);

    const std::vector<SiteId>& scope() const { return scope_; }
    std::size_t size() const { return probabilities_.size(); }
    ValueMode value_mode() const { return mode_; }
    bool is_exact() const { return mode_ == ValueMode::exact_rational; }

    double probability(std::size_t index) const;
    double probability(const Configuration& config) const;
    const Rational& exact_probability(std::size_t index) const; // exact mode only
    const std::vector<Rational>& exact_entries() const;         // exact mode only

    /// Decode an entry index into a total configuration of the scope.
    Configuration configuration_at(std::size_t index) const;
    /// Inverse of configuration_at: config must assign exactly the scope.
    std::size_t index_of(const Configuration& config) const;

    bool operator==(const Distribution&) const = default;

private:
    Distribution(std::vector<SiteId> scope, std::vector<double> probs,
                 std::vector<Rational> exact, ValueMode mode);

    std::vector<SiteId> scope_;
    std::vector<double> probabilities_;
    std::vector<Rational> exact_;
    ValueMode mode_;
};

/// Sum out every scope site not in `subset`. The result scope is `subset` in
/// ascending order; marginalizing onto the full scope returns the input
/// unchanged.
Distribution marginal(const Distribution& dist, std::span<const SiteId> subset);
Distribution marginal(const Distribution& dist, std::initializer_list<SiteId> subset);

using ConfigurationPredicate = std::function<bool(const Configuration&)>;

/// Total probability of the entries whose configuration satisfies the
/// predicate.
double event_probability(const Distribution& dist, const ConfigurationPredicate& predicate);

/// Exact-rational event probability; empty in floating mode.
std::optional<Rational> event_probability_exact(const Distribution& dist,
                                                const ConfigurationPredicate& predicate);

} // namespace aao::ising
