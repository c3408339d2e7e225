#include "sptcrank/real_check.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace sptcrank {

RealCheck compare(double lhs, Relation relation, double rhs, double slack)
{
    RealCheck r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.relation = relation;

    // margin > 0 means the relation holds with room to spare
    const bool less = relation == Relation::Less || relation == Relation::LessEqual;
    const double margin = less ? rhs - lhs : lhs - rhs;
    const double tolerance = slack * std::max({1.0, std::abs(lhs), std::abs(rhs)});

    if (relation == Relation::Less || relation == Relation::Greater) {
        r.near_tie = std::abs(margin) <= tolerance;
        r.holds = margin > tolerance;
    } else {
        r.holds = margin >= 0;
        r.near_tie = margin < 0 && -margin <= tolerance;
    }
    return r;
}

std::string relation_symbol(Relation r)
{
    switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
    }
    return "?";
}

std::string format_real(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string RealCheck::describe() const
{
    std::string s = format_real(lhs) + " " + relation_symbol(relation) + " " + format_real(rhs);
    if (near_tie)
        s += " (near-tie)";
    return s;
}

} // namespace sptcrank
