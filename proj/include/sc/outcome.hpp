#pragma once

namespace sc {

/// Result of an inequality probe whose statement carries hypotheses.
enum class CheckOutcome { Holds, Violated, PreconditionFails };

inline const char* to_string(CheckOutcome c)
{
    switch (c) {
    case CheckOutcome::Holds: return "holds";
    case CheckOutcome::Violated: return "violated";
    case CheckOutcome::PreconditionFails: return "precondition_fails";
    }
    return "?";
}

} // namespace sc
