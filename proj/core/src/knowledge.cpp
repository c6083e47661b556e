#include "aao/knowledge.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace aao::knowledge {

GeometryEnsemble::GeometryEnsemble(std::map<std::string, SpinGraph> geometries,
                                   std::vector<SiteId> shared_subsystem,
                                   Evidence shared_evidence)
    : geometries_(std::move(geometries)), shared_subsystem_(std::move(shared_subsystem)),
      shared_evidence_(std::move(shared_evidence)) {
    if (geometries_.empty()) {
        raise(ErrorCode::validation_error, "ensemble needs at least one geometry");
    }
    if (shared_subsystem_.empty()) {
        raise(ErrorCode::empty_scope, "shared subsystem must not be empty");
    }
    std::sort(shared_subsystem_.begin(), shared_subsystem_.end());
    if (std::adjacent_find(shared_subsystem_.begin(), shared_subsystem_.end()) !=
        shared_subsystem_.end()) {
        raise(ErrorCode::validation_error, "shared subsystem contains a duplicate site");
    }
    for (const auto& [label, graph] : geometries_) {
        for (SiteId site : shared_subsystem_) {
            if (!graph.has_site(site)) {
                raise(ErrorCode::unknown_site, "geometry \"" + label +
                                                   "\" is missing shared subsystem site " +
                                                   std::to_string(site));
            }
        }
        for (const auto& [site, value] : shared_evidence_.clamps()) {
            (void)value;
            if (!graph.has_site(site)) {
                raise(ErrorCode::unknown_site, "geometry \"" + label +
                                                   "\" is missing shared evidence site " +
                                                   std::to_string(site));
            }
        }
    }
}

std::vector<std::string> GeometryEnsemble::labels() const {
    std::vector<std::string> out;
    out.reserve(geometries_.size());
    for (const auto& [label, graph] : geometries_) out.push_back(label);
    return out;
}

bool GeometryEnsemble::has_geometry(const std::string& label) const {
    return geometries_.contains(label);
}

const SpinGraph& GeometryEnsemble::graph(const std::string& label) const {
    auto it = geometries_.find(label);
    if (it == geometries_.end()) {
        raise(ErrorCode::unknown_geometry, "no geometry labeled \"" + label + "\"");
    }
    return it->second;
}

KnowledgeState::KnowledgeState(GeometryEnsemble ensemble, InverseTemperature beta)
    : ensemble_(std::make_shared<const GeometryEnsemble>(std::move(ensemble))), beta_(beta),
      evidence_(ensemble_->shared_evidence()) {}

std::vector<std::string> KnowledgeState::live_geometries() const {
    if (revealed_) return {*revealed_};
    return ensemble_->labels();
}

bool KnowledgeState::operator==(const KnowledgeState& other) const {
    return (ensemble_ == other.ensemble_ || *ensemble_ == *other.ensemble_) &&
           beta_ == other.beta_ && revealed_ == other.revealed_ && evidence_ == other.evidence_;
}

namespace {

/// A point table over `scope` fixed at the clamped values.
Distribution point_distribution(std::vector<SiteId> scope, const Evidence& evidence, bool exact) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < scope.size(); ++k) {
        if (*evidence.value(scope[k]) == +1) index |= std::size_t{1} << k;
    }
    const std::size_t n = std::size_t{1} << scope.size();
    if (exact) {
        std::vector<Rational> entries(n, Rational(0));
        entries[index] = 1;
        return Distribution::exact(std::move(scope), std::move(entries));
    }
    std::vector<double> entries(n, 0.0);
    entries[index] = 1.0;
    return Distribution::floating(std::move(scope), std::move(entries));
}

/// Expand a table over the free part of the subsystem to the full subsystem,
/// with explicit zeros for entries inconsistent with the clamps.
Distribution embed_clamped_sites(const Distribution& reduced, std::vector<SiteId> scope,
                                 const Evidence& evidence) {
    const auto& inner = reduced.scope();
    std::vector<int> inner_pos(scope.size(), -1); // -1: clamped site
    for (std::size_t k = 0; k < scope.size(); ++k) {
        auto it = std::lower_bound(inner.begin(), inner.end(), scope[k]);
        if (it != inner.end() && *it == scope[k]) {
            inner_pos[k] = static_cast<int>(it - inner.begin());
        }
    }
    const std::size_t n = std::size_t{1} << scope.size();
    auto decompose = [&](std::size_t index, std::size_t& inner_index) {
        inner_index = 0;
        for (std::size_t k = 0; k < scope.size(); ++k) {
            const bool bit = (index >> k) & 1;
            if (inner_pos[k] >= 0) {
                if (bit) inner_index |= std::size_t{1} << inner_pos[k];
            } else if ((*evidence.value(scope[k]) == +1) != bit) {
                return false; // contradicts a clamp
            }
        }
        return true;
    };
    if (reduced.is_exact()) {
        std::vector<Rational> entries(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t inner_index = 0;
            if (decompose(i, inner_index)) entries[i] = reduced.exact_probability(inner_index);
        }
        return Distribution::exact(std::move(scope), std::move(entries));
    }
    std::vector<double> entries(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t inner_index = 0;
        if (decompose(i, inner_index)) entries[i] = reduced.probability(inner_index);
    }
    return Distribution::floating(std::move(scope), std::move(entries));
}

} // namespace

Distribution conditional_distribution(const KnowledgeState& state, const std::string& geometry) {
    const GeometryEnsemble& ensemble = state.ensemble();
    if (!ensemble.has_geometry(geometry)) {
        raise(ErrorCode::unknown_geometry, "no geometry labeled \"" + geometry + "\"");
    }
    if (state.revealed_geometry() && *state.revealed_geometry() != geometry) {
        raise(ErrorCode::unknown_geometry,
              "geometry \"" + geometry + "\" is a counterfactual; \"" +
                  *state.revealed_geometry() + "\" has been revealed");
    }
    const SpinGraph& graph = ensemble.graph(geometry);
    const Evidence& evidence = state.accumulated_evidence();
    const auto& subsystem = ensemble.shared_subsystem();

    std::vector<SiteId> free_part;
    for (SiteId site : subsystem) {
        if (!evidence.contains(site)) free_part.push_back(site);
    }
    if (free_part.empty()) {
        return point_distribution(subsystem, evidence, state.beta().is_ln_sqrt2());
    }
    const Distribution joint = ising::joint_distribution(graph, state.beta(), evidence);
    Distribution reduced = ising::marginal(joint, free_part);
    if (free_part.size() == subsystem.size()) return reduced;
    return embed_clamped_sites(reduced, subsystem, evidence);
}

KnowledgeState reveal_geometry(const KnowledgeState& state, const std::string& geometry) {
    if (state.revealed_geometry()) {
        raise(ErrorCode::already_revealed,
              "geometry \"" + *state.revealed_geometry() + "\" was already revealed");
    }
    if (!state.ensemble().has_geometry(geometry)) {
        raise(ErrorCode::unknown_geometry, "no geometry labeled \"" + geometry + "\"");
    }
    KnowledgeState out = state;
    out.revealed_ = geometry;
    return out;
}

KnowledgeState reveal_site(const KnowledgeState& state, SiteId site, int value) {
    ising::require_spin(value, "reveal_site");
    for (const std::string& label : state.live_geometries()) {
        if (!state.ensemble().graph(label).has_site(site)) {
            raise(ErrorCode::unknown_site, "site " + std::to_string(site) +
                                               " does not exist in live geometry \"" + label +
                                               "\"");
        }
    }
    KnowledgeState out = state;
    out.evidence_ = state.accumulated_evidence().with(site, value); // may throw inconsistent_evidence
    return out;
}

Configuration AuditReport::argmax_configuration() const {
    const std::size_t index = worst().argmax_index;
    std::vector<std::pair<SiteId, int>> items;
    items.reserve(scope.size());
    for (std::size_t k = 0; k < scope.size(); ++k) {
        items.emplace_back(scope[k], (index >> k) & 1 ? +1 : -1);
    }
    return Configuration(std::move(items));
}

AuditReport independence_audit(const GeometryEnsemble& ensemble, InverseTemperature beta,
                               double tolerance) {
    if (ensemble.geometry_count() < 2) {
        raise(ErrorCode::audit_undefined,
              "independence audit needs at least two geometries, got " +
                  std::to_string(ensemble.geometry_count()));
    }
    if (!(tolerance >= 0.0)) {
        raise(ErrorCode::invalid_argument, "audit tolerance must be nonnegative");
    }
    const KnowledgeState state(ensemble, beta);
    const std::vector<std::string> labels = ensemble.labels();
    std::vector<Distribution> tables;
    tables.reserve(labels.size());
    for (const std::string& label : labels) {
        tables.push_back(conditional_distribution(state, label));
    }
    bool exact = true;
    for (const Distribution& t : tables) exact = exact && t.is_exact();

    AuditReport report;
    report.scope = ensemble.shared_subsystem();
    report.exact = exact;
    report.tolerance = tolerance;

    for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
            AuditPair pair;
            pair.label_a = labels[a];
            pair.label_b = labels[b];
            if (exact) {
                Rational max_diff = 0;
                Rational total = 0;
                for (std::size_t i = 0; i < tables[a].size(); ++i) {
                    const Rational diff =
                        abs(tables[a].exact_probability(i) - tables[b].exact_probability(i));
                    total += diff;
                    if (diff > max_diff) {
                        max_diff = diff;
                        pair.argmax_index = i;
                    }
                }
                pair.max_diff_exact = max_diff;
                pair.tv_distance_exact = total / 2;
                pair.max_diff = to_double(max_diff);
                pair.tv_distance = to_double(*pair.tv_distance_exact);
            } else {
                double max_diff = 0.0;
                double total = 0.0;
                for (std::size_t i = 0; i < tables[a].size(); ++i) {
                    const double diff =
                        std::abs(tables[a].probability(i) - tables[b].probability(i));
                    total += diff;
                    if (diff > max_diff) {
                        max_diff = diff;
                        pair.argmax_index = i;
                    }
                }
                pair.max_diff = max_diff;
                pair.tv_distance = total / 2;
            }
            report.pairs.push_back(std::move(pair));
        }
    }

    report.max_pair = 0;
    for (std::size_t p = 1; p < report.pairs.size(); ++p) {
        const bool larger =
            exact ? *report.pairs[p].max_diff_exact > *report.pairs[report.max_pair].max_diff_exact
                  : report.pairs[p].max_diff > report.pairs[report.max_pair].max_diff;
        if (larger) report.max_pair = p;
    }
    const AuditPair& worst = report.pairs[report.max_pair];
    report.geometry_dependent =
        exact ? *worst.max_diff_exact > 0 : worst.max_diff > tolerance;
    return report;
}

SlitDistribution double_slit_demo(SlitGeometry geometry) {
    // The future geometry pins N: imaging the slits is only consistent with
    // one-slit histories, the interference screen only with two-slit ones.
    switch (geometry) {
    case SlitGeometry::which_path:
        return {1.0, 0.0};
    case SlitGeometry::interference:
        return {0.0, 1.0};
    }
    raise(ErrorCode::invalid_argument, "unknown slit geometry");
}

SpinGraph as_spacetime(const SpinGraph& graph, const std::map<SiteId, int>& ticks) {
    return graph.with_time_ticks(ticks);
}

SpinGraph as_spatial(const SpinGraph& graph) { return graph.without_time_ticks(); }

} // namespace aao::knowledge
