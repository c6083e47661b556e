#pragma once

#include "aao/errors.hpp"

#include <optional>
#include <utility>

namespace testsupport {

/// Runs f and reports the aao error code it throws, if any.
template <class F>
std::optional<aao::ErrorCode> thrown_code(F&& f) {
    try {
        std::forward<F>(f)();
        return std::nullopt;
    } catch (const aao::Error& e) {
        return e.code();
    }
}

} // namespace testsupport
