#include "aao/ising/spin_graph.hpp"

#include <algorithm>

namespace aao::ising {

SpinGraph::SpinGraph(std::vector<SiteId> sites, std::vector<std::pair<SiteId, SiteId>> edges)
    : sites_(std::move(sites)), edges_(std::move(edges)) {
    if (sites_.empty()) raise(ErrorCode::validation_error, "graph needs at least one site");
    for (SiteId site : sites_) {
        if (site < 1) {
            raise(ErrorCode::validation_error,
                  "site labels are 1-based positive integers, got " + std::to_string(site));
        }
    }
    std::sort(sites_.begin(), sites_.end());
    if (std::adjacent_find(sites_.begin(), sites_.end()) != sites_.end()) {
        raise(ErrorCode::validation_error, "duplicate site label in graph");
    }
    for (auto& [a, b] : edges_) {
        if (a == b) {
            raise(ErrorCode::validation_error, "self-edge at site " + std::to_string(a));
        }
        if (a > b) std::swap(a, b);
        if (!has_site(a) || !has_site(b)) {
            raise(ErrorCode::unknown_site, "edge (" + std::to_string(a) + "," +
                                               std::to_string(b) + ") uses an undeclared site");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        raise(ErrorCode::validation_error, "duplicate edge in graph");
    }
}

bool SpinGraph::has_site(SiteId site) const {
    return std::binary_search(sites_.begin(), sites_.end(), site);
}

const std::map<SiteId, int>& SpinGraph::time_ticks() const {
    if (!time_ticks_) raise(ErrorCode::missing_time_tick, "graph carries no time ticks");
    return *time_ticks_;
}

SpinGraph SpinGraph::with_time_ticks(std::map<SiteId, int> ticks) const {
    for (const auto& [site, tick] : ticks) {
        (void)tick;
        if (!has_site(site)) {
            raise(ErrorCode::unknown_site,
                  "time tick for undeclared site " + std::to_string(site));
        }
    }
    for (SiteId site : sites_) {
        if (!ticks.contains(site)) {
            raise(ErrorCode::missing_time_tick,
                  "no time tick for site " + std::to_string(site));
        }
    }
    SpinGraph out = *this;
    out.time_ticks_ = std::move(ticks);
    return out;
}

SpinGraph SpinGraph::without_time_ticks() const {
    SpinGraph out = *this;
    out.time_ticks_.reset();
    return out;
}

} // namespace aao::ising
