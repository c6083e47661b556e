#pragma once

#include "aao/ising.hpp"
#include "aao/knowledge.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace aao::io {

/// The on-disk graph document: sites, edges, optional clamps, optional beta
/// ("ln_sqrt2" or a decimal). JSON on the wire.
struct GraphDocument {
    ising::SpinGraph graph;
    ising::Evidence clamps;
    std::optional<ising::InverseTemperature> beta;
};

GraphDocument parse_graph_document(const std::string& text);
GraphDocument load_graph_document(const std::filesystem::path& path);
std::string write_graph_document(const GraphDocument& doc);

/// The on-disk ensemble document: a label -> graph-document map plus
/// shared_subsystem and shared_evidence. Member graphs carry sites/edges
/// only; clamps and beta live at the top level.
struct EnsembleDocument {
    knowledge::GeometryEnsemble ensemble;
    std::optional<ising::InverseTemperature> beta;
};

EnsembleDocument parse_ensemble_document(const std::string& text);
EnsembleDocument load_ensemble_document(const std::filesystem::path& path);
std::string write_ensemble_document(const EnsembleDocument& doc);

/// Floats render with 12 significant digits everywhere.
std::string format_double(double value);

/// A +-1 tuple like "+1 -1", in scope order.
std::string format_config(const ising::Configuration& config);

/// CSV with header `config,probability`, rows in enumeration order.
std::string distribution_to_csv(const ising::Distribution& dist);

/// Structured text (JSON): scope, value mode, and one entry per
/// configuration; probabilities as exact fractions in exact-rational mode.
std::string distribution_to_json(const ising::Distribution& dist);

/// One-line CSV record for the maximizing pair:
/// `labelA,labelB,max_diff,tv_distance,entry` (plus header).
std::string audit_report_to_csv(const knowledge::AuditReport& report);

/// Structured text (JSON) with per-pair details.
std::string audit_report_to_json(const knowledge::AuditReport& report);

} // namespace aao::io
