#include "aao/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace aao::io {

using nlohmann::ordered_json;
using ising::SiteId;

namespace {

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        raise(ErrorCode::parse_error, std::string("invalid document: ") + e.what());
    }
}

void check_known_fields(const ordered_json& object, std::initializer_list<const char*> known,
                        const std::string& where) {
    for (const auto& [key, value] : object.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) {
            raise(ErrorCode::parse_error, where + ": unexpected field \"" + key + "\"");
        }
    }
}

std::vector<SiteId> parse_sites(const ordered_json& doc, const std::string& where) {
    if (!doc.contains("sites")) raise(ErrorCode::parse_error, where + ": missing field \"sites\"");
    const auto& sites = doc["sites"];
    if (!sites.is_array()) raise(ErrorCode::parse_error, where + ": field \"sites\" must be a list of integers");
    std::vector<SiteId> out;
    out.reserve(sites.size());
    for (const auto& s : sites) {
        if (!s.is_number_integer()) {
            raise(ErrorCode::parse_error, where + ": field \"sites\" must be a list of integers");
        }
        out.push_back(s.get<SiteId>());
    }
    return out;
}

std::vector<std::pair<SiteId, SiteId>> parse_edges(const ordered_json& doc,
                                                   const std::string& where) {
    if (!doc.contains("edges")) raise(ErrorCode::parse_error, where + ": missing field \"edges\"");
    const auto& edges = doc["edges"];
    if (!edges.is_array()) {
        raise(ErrorCode::parse_error,
              where + ": field \"edges\" must be a list of 2-element integer lists");
    }
    std::vector<std::pair<SiteId, SiteId>> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer()) {
            raise(ErrorCode::parse_error,
                  where + ": field \"edges\" must be a list of 2-element integer lists");
        }
        out.emplace_back(e[0].get<SiteId>(), e[1].get<SiteId>());
    }
    return out;
}

ising::Evidence parse_clamps(const ordered_json& doc, const char* field,
                             const std::string& where) {
    if (!doc.contains(field)) return {};
    const auto& clamps = doc[field];
    if (!clamps.is_object()) {
        raise(ErrorCode::parse_error,
              where + ": field \"" + field + "\" must map site labels to +1/-1");
    }
    std::vector<std::pair<SiteId, int>> items;
    items.reserve(clamps.size());
    for (const auto& [key, value] : clamps.items()) {
        std::size_t consumed = 0;
        SiteId site = 0;
        try {
            site = std::stoi(key, &consumed);
        } catch (const std::exception&) {
            consumed = 0;
        }
        if (consumed != key.size()) {
            raise(ErrorCode::parse_error,
                  where + ": field \"" + field + "\" has non-integer site key \"" + key + "\"");
        }
        if (!value.is_number_integer() ||
            (value.get<int>() != 1 && value.get<int>() != -1)) {
            raise(ErrorCode::validation_error, where + ": field \"" + field + "\": value for site " +
                                                   key + " must be +1 or -1");
        }
        items.emplace_back(site, value.get<int>());
    }
    return ising::Evidence(std::move(items));
}

std::optional<ising::InverseTemperature> parse_beta(const ordered_json& doc,
                                                    const std::string& where) {
    if (!doc.contains("beta")) return std::nullopt;
    const auto& beta = doc["beta"];
    auto checked = [&](double value) {
        try {
            return ising::InverseTemperature(value); // validates >= 0, finite
        } catch (const Error& e) {
            raise(e.code(), where + ": field \"beta\": " + e.what());
        }
    };
    if (beta.is_string()) {
        const auto text = beta.get<std::string>();
        if (text == "ln_sqrt2") return ising::InverseTemperature::ln_sqrt2();
        char* end = nullptr;
        const double value = std::strtod(text.c_str(), &end);
        if (end == nullptr || *end != '\0' || end == text.c_str()) {
            raise(ErrorCode::parse_error,
                  where + ": field \"beta\" must be \"ln_sqrt2\" or a decimal, got \"" + text +
                      "\"");
        }
        return checked(value);
    }
    if (beta.is_number()) return checked(beta.get<double>());
    raise(ErrorCode::parse_error, where + ": field \"beta\" must be \"ln_sqrt2\" or a decimal");
}

GraphDocument graph_from_json(const ordered_json& doc, const std::string& where) {
    if (!doc.is_object()) raise(ErrorCode::parse_error, where + ": document must be an object");
    check_known_fields(doc, {"sites", "edges", "clamps", "beta"}, where);
    ising::SpinGraph graph(parse_sites(doc, where), parse_edges(doc, where));
    ising::Evidence clamps = parse_clamps(doc, "clamps", where);
    for (const auto& [site, value] : clamps.clamps()) {
        (void)value;
        if (!graph.has_site(site)) {
            raise(ErrorCode::validation_error,
                  where + ": field \"clamps\" clamps undeclared site " + std::to_string(site));
        }
    }
    // everything that can throw runs before the aggregate is assembled
    std::optional<ising::InverseTemperature> beta = parse_beta(doc, where);
    return GraphDocument{std::move(graph), std::move(clamps), beta};
}

ordered_json beta_to_json(const ising::InverseTemperature& beta) {
    if (beta.is_ln_sqrt2()) return "ln_sqrt2";
    return beta.value();
}

ordered_json graph_to_json(const ising::SpinGraph& graph, const ising::Evidence& clamps,
                           const std::optional<ising::InverseTemperature>& beta) {
    ordered_json doc;
    doc["sites"] = graph.sites();
    auto edges = ordered_json::array();
    for (const auto& [a, b] : graph.edges()) edges.push_back({a, b});
    doc["edges"] = std::move(edges);
    if (!clamps.empty()) {
        ordered_json object = ordered_json::object();
        for (const auto& [site, value] : clamps.clamps()) object[std::to_string(site)] = value;
        doc["clamps"] = std::move(object);
    }
    if (beta) doc["beta"] = beta_to_json(*beta);
    return doc;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::io_error, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof()) raise(ErrorCode::io_error, "cannot read " + path.string());
    return buffer.str();
}

} // namespace

GraphDocument parse_graph_document(const std::string& text) {
    return graph_from_json(parse_json(text), "graph document");
}

GraphDocument load_graph_document(const std::filesystem::path& path) {
    return parse_graph_document(read_file(path));
}

std::string write_graph_document(const GraphDocument& doc) {
    return graph_to_json(doc.graph, doc.clamps, doc.beta).dump(2) + "\n";
}

EnsembleDocument parse_ensemble_document(const std::string& text) {
    const ordered_json doc = parse_json(text);
    const std::string where = "ensemble document";
    if (!doc.is_object()) raise(ErrorCode::parse_error, where + ": document must be an object");
    check_known_fields(doc, {"geometries", "shared_subsystem", "shared_evidence", "beta"}, where);
    if (!doc.contains("geometries") || !doc["geometries"].is_object()) {
        raise(ErrorCode::parse_error, where + ": missing or non-object field \"geometries\"");
    }
    std::map<std::string, ising::SpinGraph> geometries;
    for (const auto& [label, member] : doc["geometries"].items()) {
        const std::string member_where = "geometry \"" + label + "\"";
        if (!member.is_object()) {
            raise(ErrorCode::parse_error, member_where + ": must be a graph document");
        }
        if (member.contains("clamps") || member.contains("beta")) {
            raise(ErrorCode::validation_error,
                  member_where + ": member graphs must not carry \"clamps\" or \"beta\"; use "
                                 "\"shared_evidence\" and the top-level \"beta\"");
        }
        check_known_fields(member, {"sites", "edges"}, member_where);
        geometries.emplace(label, ising::SpinGraph(parse_sites(member, member_where),
                                                   parse_edges(member, member_where)));
    }
    if (!doc.contains("shared_subsystem") || !doc["shared_subsystem"].is_array()) {
        raise(ErrorCode::parse_error, where + ": missing field \"shared_subsystem\"");
    }
    std::vector<SiteId> subsystem;
    for (const auto& s : doc["shared_subsystem"]) {
        if (!s.is_number_integer()) {
            raise(ErrorCode::parse_error,
                  where + ": field \"shared_subsystem\" must be a list of integers");
        }
        subsystem.push_back(s.get<SiteId>());
    }
    ising::Evidence evidence = parse_clamps(doc, "shared_evidence", where);
    std::optional<ising::InverseTemperature> beta = parse_beta(doc, where);
    knowledge::GeometryEnsemble ensemble(std::move(geometries), std::move(subsystem),
                                         std::move(evidence));
    return EnsembleDocument{std::move(ensemble), beta};
}

EnsembleDocument load_ensemble_document(const std::filesystem::path& path) {
    return parse_ensemble_document(read_file(path));
}

std::string write_ensemble_document(const EnsembleDocument& doc) {
    ordered_json out;
    ordered_json geometries = ordered_json::object();
    for (const std::string& label : doc.ensemble.labels()) {
        geometries[label] = graph_to_json(doc.ensemble.graph(label), {}, std::nullopt);
    }
    out["geometries"] = std::move(geometries);
    out["shared_subsystem"] = doc.ensemble.shared_subsystem();
    if (!doc.ensemble.shared_evidence().empty()) {
        ordered_json clamps = ordered_json::object();
        for (const auto& [site, value] : doc.ensemble.shared_evidence().clamps()) {
            clamps[std::to_string(site)] = value;
        }
        out["shared_evidence"] = std::move(clamps);
    }
    if (doc.beta) out["beta"] = beta_to_json(*doc.beta);
    return out.dump(2) + "\n";
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string format_config(const ising::Configuration& config) {
    std::string out;
    for (const auto& [site, spin] : config.items()) {
        (void)site;
        if (!out.empty()) out += ' ';
        out += spin > 0 ? "+1" : "-1";
    }
    return out;
}

std::string distribution_to_csv(const ising::Distribution& dist) {
    std::string out = "config,probability\n";
    for (std::size_t i = 0; i < dist.size(); ++i) {
        out += format_config(dist.configuration_at(i));
        out += ',';
        out += format_double(dist.probability(i));
        out += '\n';
    }
    return out;
}

std::string distribution_to_json(const ising::Distribution& dist) {
    ordered_json doc;
    doc["scope"] = dist.scope();
    doc["value_mode"] = dist.is_exact() ? "exact-rational" : "floating";
    auto entries = ordered_json::array();
    for (std::size_t i = 0; i < dist.size(); ++i) {
        ordered_json entry;
        auto config = ordered_json::array();
        const ising::Configuration assignment = dist.configuration_at(i);
        for (const auto& [site, spin] : assignment.items()) {
            (void)site;
            config.push_back(spin);
        }
        entry["config"] = std::move(config);
        if (dist.is_exact()) {
            entry["probability"] = to_fraction_string(dist.exact_probability(i));
        } else {
            entry["probability"] = dist.probability(i);
        }
        entries.push_back(std::move(entry));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

namespace {

std::string audit_value(double value, const std::optional<Rational>& exact) {
    return exact ? to_fraction_string(*exact) : format_double(value);
}

} // namespace

std::string audit_report_to_csv(const knowledge::AuditReport& report) {
    const knowledge::AuditPair& worst = report.worst();
    std::string out = "labelA,labelB,max_diff,tv_distance,entry\n";
    out += worst.label_a + ',' + worst.label_b + ',';
    out += audit_value(worst.max_diff, worst.max_diff_exact) + ',';
    out += audit_value(worst.tv_distance, worst.tv_distance_exact) + ',';
    out += format_config(report.argmax_configuration());
    out += '\n';
    return out;
}

std::string audit_report_to_json(const knowledge::AuditReport& report) {
    ordered_json doc;
    doc["scope"] = report.scope;
    doc["value_mode"] = report.exact ? "exact-rational" : "floating";
    doc["tolerance"] = report.tolerance;
    doc["geometry_dependent"] = report.geometry_dependent;
    auto pairs = ordered_json::array();
    for (const auto& pair : report.pairs) {
        ordered_json p;
        p["label_a"] = pair.label_a;
        p["label_b"] = pair.label_b;
        p["max_diff"] = audit_value(pair.max_diff, pair.max_diff_exact);
        p["max_diff_value"] = pair.max_diff;
        p["tv_distance"] = audit_value(pair.tv_distance, pair.tv_distance_exact);
        p["tv_distance_value"] = pair.tv_distance;
        p["argmax_index"] = pair.argmax_index;
        pairs.push_back(std::move(p));
    }
    doc["pairs"] = std::move(pairs);
    doc["max_pair"] = report.max_pair;
    doc["max_entry"] = format_config(report.argmax_configuration());
    return doc.dump(2) + "\n";
}

} // namespace aao::io
