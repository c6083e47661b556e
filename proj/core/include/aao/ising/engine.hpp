#pragma once

#include "aao/ising/distribution.hpp"
#include "aao/ising/spin_graph.hpp"
#include "aao/ising/types.hpp"
#include "aao/rational.hpp"

#include <cstdint>
#include <vector>

namespace aao::ising {

/// Default cap on free sites: 2^24 configurations. Exact enumeration beyond
/// this raises capacity_exceeded instead of silently grinding.
inline constexpr std::size_t default_free_site_cap = 24;

struct EnumerationOptions {
    std::size_t free_site_cap = default_free_site_cap;
    /// 0 = automatic. Any value yields bit-identical results; the reduction
    /// tree is fixed and only its subtrees are farmed out.
    unsigned max_threads = 0;
};

/// H(sigma) = -sum over edges <ij> of sigma_i * sigma_j.
/// Always an integer whose parity equals the edge count's parity.
int energy(const SpinGraph& graph, const Configuration& config);

/// exp(-beta * H). At beta = ln(sqrt(2)) this is computed as 2^(-H/2), which
/// keeps power-of-two ratios between weights exact.
double boltzmann_weight(InverseTemperature beta, int energy);

/// The evidence-consistent configuration space of a graph: the clamped/free
/// site split, the enumeration order, and fast per-index energies. Views the
/// graph; the graph must outlive the space.
///
/// Enumeration order: free sites ascending by label, free site k on bit k of
/// the index (lowest label = least significant bit), spin -1 as bit 0 and +1
/// as bit 1, indices ascending.
class ConfigurationSpace {
public:
    ConfigurationSpace(const SpinGraph& graph, const Evidence& evidence,
                       const EnumerationOptions& options = {});

    std::uint64_t count() const { return std::uint64_t{1} << free_sites_.size(); }
    std::size_t free_site_count() const { return free_sites_.size(); }
    const std::vector<SiteId>& free_sites() const { return free_sites_; }
    const SpinGraph& graph() const { return *graph_; }
    const Evidence& evidence() const { return evidence_; }

    int energy_at(std::uint64_t index) const;
    Configuration configuration_at(std::uint64_t index) const;

private:
    const SpinGraph* graph_;
    Evidence evidence_;
    std::vector<SiteId> free_sites_;
    std::vector<std::uint32_t> free_edge_masks_; // free-free edges as bit pairs
    std::vector<int> clamp_field_;               // per free site: sum of clamped neighbor spins
    int clamp_field_total_ = 0;
    int clamped_energy_ = 0;                     // clamped-clamped edge contribution
    int free_edge_count_ = 0;
};

/// All evidence-consistent total configurations, in enumeration order.
/// Materializes 2^(free sites) configurations; meant for small spaces.
std::vector<Configuration> enumerate_configurations(const SpinGraph& graph,
                                                    const Evidence& evidence = {},
                                                    const EnumerationOptions& options = {});

/// Z = sum of exp(-beta * H) over evidence-consistent configurations.
/// Clamping shrinks the sum. Floating sums use a fixed pairwise tree, so
/// parallel and serial runs agree bit for bit.
double partition_function(const SpinGraph& graph, InverseTemperature beta,
                          const Evidence& evidence = {},
                          const EnumerationOptions& options = {});

/// Normalized distribution over the free sites: P = exp(-beta*H)/Z.
/// At beta = ln(sqrt(2)) the table is computed in exact rationals: every H
/// has the parity of the edge count, so all weights share one global
/// sqrt(2)^(E mod 2) factor that cancels under normalization, leaving exact
/// dyadic-integer ratios for either parity.
Distribution joint_distribution(const SpinGraph& graph, InverseTemperature beta,
                                const Evidence& evidence = {},
                                const EnumerationOptions& options = {});

} // namespace aao::ising
