#pragma once

#include "aao/ising/types.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace aao::ising {

/// A finite set of +-1 sites plus undirected adjacency. Immutable after
/// construction. Sites are stored in ascending label order; edges are stored
/// as (low, high) pairs in ascending order.
///
/// A graph may optionally carry per-site time ticks (one coordinate axis
/// reinterpreted as time). The ticks are pure metadata: no probability
/// computation reads them.
class SpinGraph {
public:
    SpinGraph(std::vector<SiteId> sites,
              std::vector<std::pair<SiteId, SiteId>> edges);

    const std::vector<SiteId>& sites() const { return sites_; }
    const std::vector<std::pair<SiteId, SiteId>>& edges() const { return edges_; }
    std::size_t site_count() const { return sites_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_site(SiteId site) const;

    bool has_time_ticks() const { return time_ticks_.has_value(); }
    /// Tick map when tagged; throws missing_time_tick when untagged.
    const std::map<SiteId, int>& time_ticks() const;

    /// Same graph with every site assigned a time tick.
    SpinGraph with_time_ticks(std::map<SiteId, int> ticks) const;
    /// Same graph with the tick metadata removed.
    SpinGraph without_time_ticks() const;

    bool operator==(const SpinGraph&) const = default;

private:
    std::vector<SiteId> sites_;
    std::vector<std::pair<SiteId, SiteId>> edges_;
    std::optional<std::map<SiteId, int>> time_ticks_;
};

} // namespace aao::ising
