#pragma once

#include "aao/ising.hpp"
#include "aao/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace aao::knowledge {

using ising::Configuration;
using ising::Distribution;
using ising::Evidence;
using ising::InverseTemperature;
using ising::SiteId;
using ising::SpinGraph;

/// A labeled family of spin graphs sharing a common subsystem and common
/// evidence: the model of an externally controlled but unknown geometry.
///
/// Deliberately, no prior probability over the labels exists anywhere in this
/// module; only conditional tables P(subsystem | G) are ever produced.
class GeometryEnsemble {
public:
    GeometryEnsemble(std::map<std::string, SpinGraph> geometries,
                     std::vector<SiteId> shared_subsystem,
                     Evidence shared_evidence);

    /// Labels in ascending order.
    std::vector<std::string> labels() const;
    std::size_t geometry_count() const { return geometries_.size(); }
    bool has_geometry(const std::string& label) const;
    const SpinGraph& graph(const std::string& label) const; // throws unknown_geometry

    const std::vector<SiteId>& shared_subsystem() const { return shared_subsystem_; }
    const Evidence& shared_evidence() const { return shared_evidence_; }

    bool operator==(const GeometryEnsemble&) const = default;

private:
    std::map<std::string, SpinGraph> geometries_;
    std::vector<SiteId> shared_subsystem_;
    Evidence shared_evidence_;
};

/// An agent's epistemic state over an ensemble: which geometry (if any) has
/// been revealed, and every site value learned so far. Immutable; updates
/// return new states.
class KnowledgeState {
public:
    KnowledgeState(GeometryEnsemble ensemble, InverseTemperature beta);

    const GeometryEnsemble& ensemble() const { return *ensemble_; }
    InverseTemperature beta() const { return beta_; }
    const std::optional<std::string>& revealed_geometry() const { return revealed_; }
    const Evidence& accumulated_evidence() const { return evidence_; }

    /// All labels still on the table: every label, or just the revealed one.
    std::vector<std::string> live_geometries() const;

    bool operator==(const KnowledgeState& other) const;

private:
    friend KnowledgeState reveal_geometry(const KnowledgeState&, const std::string&);
    friend KnowledgeState reveal_site(const KnowledgeState&, SiteId, int);

    std::shared_ptr<const GeometryEnsemble> ensemble_;
    InverseTemperature beta_;
    std::optional<std::string> revealed_;
    Evidence evidence_;
};

/// P(shared subsystem | G): the joint distribution of graph_G under the
/// accumulated evidence, marginalized onto the shared subsystem. Subsystem
/// sites that are themselves clamped appear as explicit point factors.
/// After a reveal, only the revealed label may be queried; the others are
/// counterfactuals and raise unknown_geometry.
Distribution conditional_distribution(const KnowledgeState& state, const std::string& geometry);

/// Bayesian update on learning the geometry: discards the alternatives,
/// never changes the table of the revealed label.
KnowledgeState reveal_geometry(const KnowledgeState& state, const std::string& geometry);

/// Bayesian update on learning a site value: extends the evidence, which
/// renormalizes every conditional over the restricted configuration set.
/// Re-revealing an already-known value is a no-op.
KnowledgeState reveal_site(const KnowledgeState& state, SiteId site, int value);

struct AuditPair {
    std::string label_a;
    std::string label_b;
    double max_diff = 0.0;
    std::optional<Rational> max_diff_exact;
    double tv_distance = 0.0;
    std::optional<Rational> tv_distance_exact;
    std::size_t argmax_index = 0; // entry index within the shared-subsystem scope
};

/// Result of checking whether P(subsystem | G) actually depends on G.
/// geometry_dependent == true means assuming independence is a mistake.
struct AuditReport {
    std::vector<SiteId> scope;
    std::vector<AuditPair> pairs;     // all unordered label pairs, lexicographic
    std::size_t max_pair = 0;         // index into pairs of the worst offender
    bool geometry_dependent = false;
    bool exact = false;
    double tolerance = 0.0;

    const AuditPair& worst() const { return pairs[max_pair]; }
    Configuration argmax_configuration() const;
};

/// Compares the conditional tables of every geometry pair entrywise.
/// Dependence triggers above `tolerance` in floating mode and above exactly
/// zero in exact-rational mode. Requires at least two geometries.
AuditReport independence_audit(const GeometryEnsemble& ensemble, InverseTemperature beta,
                               double tolerance = 1e-12);

/// The two future geometries of the delayed-choice double-slit setup.
enum class SlitGeometry { which_path, interference };

/// P(N | G) for N = number of slits the beables pass through.
struct SlitDistribution {
    double one_slit = 0.0; // P(N = 1)
    double two_slits = 0.0; // P(N = 2)
};

/// Degenerate conditionals of the double-slit setup: imaging the slits forces
/// N = 1, recording the interference pattern forces N = 2. The two tables
/// differ; P(N) is not geometry-independent.
SlitDistribution double_slit_demo(SlitGeometry geometry);

/// Relabel one axis as time by assigning every site an integer tick.
/// Metadata only: every probability computed from the result is identical to
/// the untagged graph.
SpinGraph as_spacetime(const SpinGraph& graph, const std::map<SiteId, int>& ticks);

/// Drop the time relabeling again.
SpinGraph as_spatial(const SpinGraph& graph);

} // namespace aao::knowledge
