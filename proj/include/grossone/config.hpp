#pragma once

#include <cstddef>

namespace grossone {

/// Knobs shared by canonicalization, ordering and arithmetic. Passed by
/// value/reference on every call; there is no process-wide setting.
struct Config {
    /// Deepest grosspower nesting accepted (level of a numeral).
    unsigned max_level = 3;
    /// Highest order of the log-series expansion tried by the sign engine.
    unsigned expansion_budget = 8;
    /// Quotient terms produced by long division before giving up.
    std::size_t division_budget = 64;
};

} // namespace grossone
