#pragma once

#include <stdexcept>
#include <string>

namespace aao {

/// Machine-readable classification of every error the library raises.
/// The CLI maps these onto its documented exit codes.
enum class ErrorCode {
    incomplete_configuration, // a configuration misses (or adds) sites vs. the graph
    unknown_site,             // a site label that does not exist where it is used
    inconsistent_evidence,    // contradictory clamps for the same site
    capacity_exceeded,        // free-site count above the enumeration cap
    empty_scope,              // a distribution over zero sites
    no_free_sites,            // joint distribution requested with everything clamped
    scope_mismatch,           // marginal subset not contained in the scope
    unknown_geometry,         // geometry label not in the ensemble (or counterfactual)
    already_revealed,         // second reveal_geometry on the same state
    audit_undefined,          // independence audit on fewer than two geometries
    missing_time_tick,        // spacetime relabeling without a tick for every site
    invalid_argument,         // out-of-domain scalar (negative beta, gamma <= 0, ...)
    parse_error,              // malformed input document
    validation_error,         // well-formed document with invalid content
    io_error,                 // filesystem failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace aao
