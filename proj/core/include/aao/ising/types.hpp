#pragma once

#include "aao/errors.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace aao::ising {

/// Lattice site label. 1-based positive integers, matching the usual
/// s1..s4 naming of small spin systems.
using SiteId = int;

/// A total spin assignment: every site of some graph mapped to +1 or -1.
/// Items are kept sorted by site label.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<std::pair<SiteId, int>> assignment);
    Configuration(std::initializer_list<std::pair<SiteId, int>> assignment);

    int spin(SiteId site) const; // throws unknown_site
    bool contains(SiteId site) const;
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }

    /// Assignment in ascending site order.
    const std::vector<std::pair<SiteId, int>>& items() const { return items_; }

    bool operator==(const Configuration&) const = default;

private:
    std::vector<std::pair<SiteId, int>> items_;
};

/// Known, fixed site values restricting the configuration sum.
/// Contradictory clamps are rejected at construction; repeating an existing
/// clamp with the same value is a no-op.
class Evidence {
public:
    Evidence() = default;
    explicit Evidence(std::vector<std::pair<SiteId, int>> clamps);
    Evidence(std::initializer_list<std::pair<SiteId, int>> clamps);

    /// Copy of this evidence extended by one clamp.
    Evidence with(SiteId site, int value) const;
    /// Union of two consistent evidence sets.
    Evidence merged(const Evidence& other) const;

    bool contains(SiteId site) const;
    std::optional<int> value(SiteId site) const;
    std::size_t size() const { return clamps_.size(); }
    bool empty() const { return clamps_.empty(); }

    /// Clamps in ascending site order.
    const std::vector<std::pair<SiteId, int>>& clamps() const { return clamps_; }

    bool operator==(const Evidence&) const = default;

private:
    void insert(SiteId site, int value);

    std::vector<std::pair<SiteId, int>> clamps_;
};

/// Inverse temperature. Dimensionless here, since the energy is.
///
/// The default is ln(sqrt(2)), the working point at which every Boltzmann
/// weight is a power of sqrt(2) and normalized probabilities become exact
/// rationals. That constant is tracked so the engine can switch to
/// exact-rational arithmetic.
class InverseTemperature {
public:
    static constexpr double ln_sqrt2_value = std::numbers::ln2 / 2.0;

    InverseTemperature() : beta_(ln_sqrt2_value) {}
    explicit InverseTemperature(double beta); // finite and >= 0, else invalid_argument

    static InverseTemperature ln_sqrt2() { return InverseTemperature{}; }

    double value() const { return beta_; }
    bool is_ln_sqrt2() const { return beta_ == ln_sqrt2_value; }

    bool operator==(const InverseTemperature&) const = default;

private:
    double beta_;
};

inline int opposite(int spin) { return -spin; }

/// Validates a +1/-1 spin value; the `what` string names the offending field.
void require_spin(int value, const char* what);

} // namespace aao::ising
