#include "aao/presets.hpp"

#include <numbers>

namespace aao::presets {

ising::SpinGraph fig1a_graph() { return {{1, 2, 3}, {{1, 2}, {1, 3}}}; }

ising::SpinGraph fig1b_graph() {
    return {{1, 2, 3, 4}, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}};
}

ising::Evidence fig1_evidence() { return {{1, +1}}; }

knowledge::GeometryEnsemble fig1_ensemble() {
    return {{{"1a", fig1a_graph()}, {"1b", fig1b_graph()}}, {2, 3}, fig1_evidence()};
}

ChshAngles chsh_standard_angles() {
    constexpr double pi = std::numbers::pi;
    return {0.0, pi / 2.0, pi / 4.0, -pi / 4.0};
}

} // namespace aao::presets
