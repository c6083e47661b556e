#include "aao/ising/distribution.hpp"

#include "aao/detail/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace aao::ising {

namespace {

void check_scope(const std::vector<SiteId>& scope) {
    if (scope.empty()) raise(ErrorCode::empty_scope, "distribution scope must not be empty");
    if (scope.size() >= 8 * sizeof(std::size_t) - 1) {
        raise(ErrorCode::capacity_exceeded,
              "distribution scope of " + std::to_string(scope.size()) + " sites is too large");
    }
    if (!std::is_sorted(scope.begin(), scope.end()) ||
        std::adjacent_find(scope.begin(), scope.end()) != scope.end()) {
        raise(ErrorCode::validation_error, "distribution scope must be ascending and distinct");
    }
}

} // namespace

Distribution::Distribution(std::vector<SiteId> scope, std::vector<double> probs,
                           std::vector<Rational> exact, ValueMode mode)
    : scope_(std::move(scope)), probabilities_(std::move(probs)), exact_(std::move(exact)),
      mode_(mode) {}

Distribution Distribution::floating(std::vector<SiteId> scope, std::vector<double> probabilities) {
    check_scope(scope);
    const std::size_t expect = std::size_t{1} << scope.size();
    if (probabilities.size() != expect) {
        raise(ErrorCode::validation_error,
              "distribution over " + std::to_string(scope.size()) + " sites needs " +
                  std::to_string(expect) + " entries, got " + std::to_string(probabilities.size()));
    }
    for (double p : probabilities) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            raise(ErrorCode::validation_error, "probabilities must be finite and nonnegative");
        }
    }
    const double total = detail::pairwise_sum<double>(
        probabilities.size(), [&](std::uint64_t i) { return probabilities[i]; }, 1);
    if (std::abs(total - 1.0) > 1e-12) {
        raise(ErrorCode::validation_error,
              "probabilities sum to " + std::to_string(total) + ", expected 1");
    }
    return Distribution(std::move(scope), std::move(probabilities), {}, ValueMode::floating);
}

Distribution Distribution::exact(std::vector<SiteId> scope, std::vector<Rational> probabilities) {
    check_scope(scope);
    const std::size_t expect = std::size_t{1} << scope.size();
    if (probabilities.size() != expect) {
        raise(ErrorCode::validation_error,
              "distribution over " + std::to_string(scope.size()) + " sites needs " +
                  std::to_string(expect) + " entries, got " + std::to_string(probabilities.size()));
    }
    Rational total = 0;
    for (const Rational& p : probabilities) {
        if (p < 0) raise(ErrorCode::validation_error, "probabilities must be nonnegative");
        total += p;
    }
    if (total != 1) {
        raise(ErrorCode::validation_error, "exact probabilities must sum to exactly 1");
    }
    std::vector<double> floats(probabilities.size());
    for (std::size_t i = 0; i < probabilities.size(); ++i) floats[i] = to_double(probabilities[i]);
    return Distribution(std::move(scope), std::move(floats), std::move(probabilities),
                        ValueMode::exact_rational);
}

double Distribution::probability(std::size_t index) const { return probabilities_.at(index); }

double Distribution::probability(const Configuration& config) const {
    return probabilities_[index_of(config)];
}

const Rational& Distribution::exact_probability(std::size_t index) const {
    if (!is_exact()) {
        raise(ErrorCode::invalid_argument, "distribution is in floating mode");
    }
    return exact_.at(index);
}

const std::vector<Rational>& Distribution::exact_entries() const {
    if (!is_exact()) {
        raise(ErrorCode::invalid_argument, "distribution is in floating mode");
    }
    return exact_;
}

Configuration Distribution::configuration_at(std::size_t index) const {
    if (index >= size()) {
        raise(ErrorCode::invalid_argument, "configuration index out of range");
    }
    std::vector<std::pair<SiteId, int>> items;
    items.reserve(scope_.size());
    for (std::size_t k = 0; k < scope_.size(); ++k) {
        items.emplace_back(scope_[k], (index >> k) & 1 ? +1 : -1);
    }
    return Configuration(std::move(items));
}

std::size_t Distribution::index_of(const Configuration& config) const {
    if (config.size() != scope_.size()) {
        raise(ErrorCode::scope_mismatch, "configuration does not match the distribution scope");
    }
    std::size_t index = 0;
    for (std::size_t k = 0; k < scope_.size(); ++k) {
        const int spin = config.spin(scope_[k]); // throws unknown_site on mismatch
        if (spin == +1) index |= std::size_t{1} << k;
    }
    return index;
}

Distribution marginal(const Distribution& dist, std::span<const SiteId> subset) {
    if (subset.empty()) raise(ErrorCode::empty_scope, "marginal subset must not be empty");
    std::vector<SiteId> target(subset.begin(), subset.end());
    std::sort(target.begin(), target.end());
    if (std::adjacent_find(target.begin(), target.end()) != target.end()) {
        raise(ErrorCode::scope_mismatch, "marginal subset contains a duplicate site");
    }

    // Position of each target site within the scope.
    const auto& scope = dist.scope();
    std::vector<std::size_t> source_bit(target.size());
    for (std::size_t k = 0; k < target.size(); ++k) {
        auto it = std::lower_bound(scope.begin(), scope.end(), target[k]);
        if (it == scope.end() || *it != target[k]) {
            raise(ErrorCode::scope_mismatch,
                  "site " + std::to_string(target[k]) + " is not in the distribution scope");
        }
        source_bit[k] = static_cast<std::size_t>(it - scope.begin());
    }
    if (target.size() == scope.size()) return dist; // identity

    const std::size_t out_size = std::size_t{1} << target.size();
    auto project = [&](std::size_t full) {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < source_bit.size(); ++k) {
            if ((full >> source_bit[k]) & 1) idx |= std::size_t{1} << k;
        }
        return idx;
    };

    if (dist.is_exact()) {
        std::vector<Rational> sums(out_size, Rational(0));
        for (std::size_t i = 0; i < dist.size(); ++i) {
            sums[project(i)] += dist.exact_probability(i);
        }
        return Distribution::exact(std::move(target), std::move(sums));
    }
    std::vector<double> sums(out_size, 0.0);
    for (std::size_t i = 0; i < dist.size(); ++i) {
        sums[project(i)] += dist.probability(i);
    }
    return Distribution::floating(std::move(target), std::move(sums));
}

Distribution marginal(const Distribution& dist, std::initializer_list<SiteId> subset) {
    return marginal(dist, std::span<const SiteId>(subset.begin(), subset.size()));
}

double event_probability(const Distribution& dist, const ConfigurationPredicate& predicate) {
    if (dist.is_exact()) {
        return to_double(*event_probability_exact(dist, predicate));
    }
    return detail::pairwise_sum<double>(
        dist.size(),
        [&](std::uint64_t i) {
            return predicate(dist.configuration_at(static_cast<std::size_t>(i)))
                       ? dist.probability(static_cast<std::size_t>(i))
                       : 0.0;
        },
        1);
}

std::optional<Rational> event_probability_exact(const Distribution& dist,
                                                const ConfigurationPredicate& predicate) {
    if (!dist.is_exact()) return std::nullopt;
    Rational total = 0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (predicate(dist.configuration_at(i))) total += dist.exact_probability(i);
    }
    return total;
}

} // namespace aao::ising
