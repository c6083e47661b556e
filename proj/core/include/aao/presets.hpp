#pragma once

#include "aao/ising.hpp"
#include "aao/knowledge.hpp"

namespace aao::presets {

/// Three sites in a V: edges 1-2 and 1-3.
ising::SpinGraph fig1a_graph();

/// Four sites in a diamond: edges 1-2, 1-3, 2-4, 3-4.
ising::SpinGraph fig1b_graph();

/// The shared knowledge in both setups: s1 = +1.
ising::Evidence fig1_evidence();

/// Labels "1a"/"1b", shared subsystem (s2, s3), shared evidence s1 = +1.
knowledge::GeometryEnsemble fig1_ensemble();

/// The standard maximal-violation settings a=0, a'=pi/2, b=pi/4, b'=-pi/4.
struct ChshAngles {
    double a;
    double a_prime;
    double b;
    double b_prime;
};
ChshAngles chsh_standard_angles();

} // namespace aao::presets
