#include "aao/ising/engine.hpp"

#include "aao/detail/pairwise.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>

namespace aao::ising {

int energy(const SpinGraph& graph, const Configuration& config) {
    if (config.size() != graph.site_count()) {
        raise(ErrorCode::incomplete_configuration,
              "configuration must assign exactly the graph's " +
                  std::to_string(graph.site_count()) + " sites");
    }
    for (SiteId site : graph.sites()) {
        if (!config.contains(site)) {
            raise(ErrorCode::incomplete_configuration,
                  "configuration does not assign site " + std::to_string(site));
        }
    }
    int h = 0;
    for (const auto& [a, b] : graph.edges()) h -= config.spin(a) * config.spin(b);
    return h;
}

double boltzmann_weight(InverseTemperature beta, int energy) {
    // 2^(-H/2) at the ln(sqrt(2)) constant: ratios of weights whose energies
    // differ by 2 are then exact powers of two.
    if (beta.is_ln_sqrt2()) return std::exp2(-0.5 * energy);
    return std::exp(-beta.value() * energy);
}

ConfigurationSpace::ConfigurationSpace(const SpinGraph& graph, const Evidence& evidence,
                                       const EnumerationOptions& options)
    : graph_(&graph), evidence_(evidence) {
    for (const auto& [site, value] : evidence.clamps()) {
        (void)value;
        if (!graph.has_site(site)) {
            raise(ErrorCode::unknown_site,
                  "evidence clamps site " + std::to_string(site) + " which is not in the graph");
        }
    }
    for (SiteId site : graph.sites()) {
        if (!evidence.contains(site)) free_sites_.push_back(site);
    }
    // 32 is the hard limit of the bitmask kernel; the default cap of 24 is
    // the practical one.
    if (free_sites_.size() > options.free_site_cap || free_sites_.size() > 32) {
        raise(ErrorCode::capacity_exceeded,
              std::to_string(free_sites_.size()) + " free sites exceed the enumeration cap of " +
                  std::to_string(std::min<std::size_t>(options.free_site_cap, 32)));
    }

    auto free_index = [&](SiteId site) -> int {
        auto it = std::lower_bound(free_sites_.begin(), free_sites_.end(), site);
        if (it == free_sites_.end() || *it != site) return -1;
        return static_cast<int>(it - free_sites_.begin());
    };

    clamp_field_.assign(free_sites_.size(), 0);
    for (const auto& [a, b] : graph.edges()) {
        const int ia = free_index(a);
        const int ib = free_index(b);
        if (ia >= 0 && ib >= 0) {
            free_edge_masks_.push_back((std::uint32_t{1} << ia) | (std::uint32_t{1} << ib));
        } else if (ia >= 0) {
            clamp_field_[static_cast<std::size_t>(ia)] += *evidence.value(b);
        } else if (ib >= 0) {
            clamp_field_[static_cast<std::size_t>(ib)] += *evidence.value(a);
        } else {
            clamped_energy_ -= *evidence.value(a) * *evidence.value(b);
        }
    }
    free_edge_count_ = static_cast<int>(free_edge_masks_.size());
    for (int h : clamp_field_) clamp_field_total_ += h;
}

int ConfigurationSpace::energy_at(std::uint64_t index) const {
    // Free-free edges: each term sigma_i*sigma_j is +1 minus twice the XOR of
    // the two bits, so H accumulates 2 * (number of unequal pairs) - count.
    int unequal = 0;
    const auto mask32 = static_cast<std::uint32_t>(index);
    for (std::uint32_t edge : free_edge_masks_) {
        unequal += std::popcount(mask32 & edge) & 1;
    }
    int field = 0;
    std::uint64_t bits = index;
    while (bits != 0) {
        field += clamp_field_[static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
    }
    return 2 * unequal - free_edge_count_ + clamp_field_total_ - 2 * field + clamped_energy_;
}

Configuration ConfigurationSpace::configuration_at(std::uint64_t index) const {
    std::vector<std::pair<SiteId, int>> items;
    items.reserve(graph_->site_count());
    for (std::size_t k = 0; k < free_sites_.size(); ++k) {
        items.emplace_back(free_sites_[k], (index >> k) & 1 ? +1 : -1);
    }
    for (const auto& clamp : evidence_.clamps()) items.push_back(clamp);
    return Configuration(std::move(items));
}

std::vector<Configuration> enumerate_configurations(const SpinGraph& graph,
                                                    const Evidence& evidence,
                                                    const EnumerationOptions& options) {
    ConfigurationSpace space(graph, evidence, options);
    std::vector<Configuration> out;
    out.reserve(space.count());
    for (std::uint64_t i = 0; i < space.count(); ++i) out.push_back(space.configuration_at(i));
    return out;
}

namespace {

// Scaled integer weights at beta = ln(sqrt(2)): H always has the parity of
// the edge count E, so 2^((E - H)/2) is integral for either parity and the
// common factor 2^(-E/2) cancels under normalization.
int dyadic_exponent(int edge_count, int energy) { return (edge_count - energy) / 2; }

double exact_z_to_double(const BigInt& scaled_z, int edge_count) {
    const int half = (edge_count - (edge_count & 1)) / 2;
    const Rational z(scaled_z, BigInt(1) << half);
    double value = to_double(z);
    if (edge_count & 1) value *= std::sqrt(0.5);
    return value;
}

int minimum_energy(const ConfigurationSpace& space) {
    int lowest = space.energy_at(0);
    for (std::uint64_t i = 1; i < space.count(); ++i) {
        lowest = std::min(lowest, space.energy_at(i));
    }
    return lowest;
}

} // namespace

double partition_function(const SpinGraph& graph, InverseTemperature beta,
                          const Evidence& evidence, const EnumerationOptions& options) {
    ConfigurationSpace space(graph, evidence, options);
    const int edge_count = static_cast<int>(graph.edge_count());
    if (beta.is_ln_sqrt2()) {
        const BigInt z = detail::pairwise_sum<BigInt>(
            space.count(),
            [&](std::uint64_t i) {
                return BigInt(1) << dyadic_exponent(edge_count, space.energy_at(i));
            },
            options.max_threads);
        return exact_z_to_double(z, edge_count);
    }
    // Shift energies to the ground state so the weights stay representable
    // even when beta * |H| would overflow exp; scale back at the end.
    const double b = beta.value();
    const int ground = minimum_energy(space);
    const double shifted = detail::pairwise_sum<double>(
        space.count(),
        [&](std::uint64_t i) { return std::exp(-b * (space.energy_at(i) - ground)); },
        options.max_threads);
    return std::exp(-b * ground) * shifted;
}

Distribution joint_distribution(const SpinGraph& graph, InverseTemperature beta,
                                const Evidence& evidence, const EnumerationOptions& options) {
    ConfigurationSpace space(graph, evidence, options);
    if (space.free_site_count() == 0) {
        raise(ErrorCode::no_free_sites,
              "joint distribution needs at least one free site; everything is clamped");
    }
    const std::size_t n = static_cast<std::size_t>(space.count());
    const int edge_count = static_cast<int>(graph.edge_count());

    if (beta.is_ln_sqrt2()) {
        std::vector<int> exponents(n);
        for (std::size_t i = 0; i < n; ++i) {
            exponents[i] = dyadic_exponent(edge_count, space.energy_at(i));
        }
        const BigInt z = detail::pairwise_sum<BigInt>(
            n, [&](std::uint64_t i) { return BigInt(1) << exponents[i]; }, options.max_threads);
        std::vector<Rational> entries;
        entries.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            entries.emplace_back(BigInt(1) << exponents[i], z);
        }
        return Distribution::exact(space.free_sites(), std::move(entries));
    }

    // Ground-state shift: probabilities are invariant under it and the
    // weights stay representable for any finite nonnegative beta.
    const double b = beta.value();
    const int ground = minimum_energy(space);
    std::vector<double> weights(n);
    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            weights[i] = std::exp(-b * (space.energy_at(i) - ground));
        }
    };
    if (options.max_threads != 1 && n >= (std::size_t{1} << 18)) {
        auto upper = std::async(std::launch::async, fill, n / 2, n);
        fill(0, n / 2);
        upper.get();
    } else {
        fill(0, n);
    }
    const double z = detail::pairwise_sum<double>(
        n, [&](std::uint64_t i) { return weights[i]; }, options.max_threads);
    for (double& w : weights) w /= z;
    return Distribution::floating(space.free_sites(), std::move(weights));
}

} // namespace aao::ising
