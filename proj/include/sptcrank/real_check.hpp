#pragma once

#include <string>

namespace sptcrank {

/// Relative slack for asserting inequalities between double-precision bound values.
inline constexpr double near_tie_slack = 1e-9;

enum class Relation { Less, LessEqual, Greater, GreaterEqual };

/// Outcome of checking `lhs <relation> rhs` in double precision.
///
/// Strict relations fail with near_tie set when |lhs - rhs| is within
/// slack * max(1, |lhs|, |rhs|). Non-strict relations accept exact equality
/// and flag a near tie only when the relation is violated by less than the slack.
struct RealCheck {
    double lhs = 0;
    double rhs = 0;
    Relation relation = Relation::Less;
    bool holds = false;
    bool near_tie = false;

    std::string describe() const;
};

RealCheck compare(double lhs, Relation relation, double rhs, double slack = near_tie_slack);

std::string relation_symbol(Relation r);

/// Shortest round-trip decimal rendering of a double.
std::string format_real(double v);

} // namespace sptcrank
