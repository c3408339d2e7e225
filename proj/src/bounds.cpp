#include "sptcrank/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sptcrank/lattice.hpp"

namespace sptcrank::bounds {

namespace {

void require_even(std::int64_t n)
{
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("theorem 2 bound: n must be even and at least 2");
}

} // namespace

double f_of_m(long m)
{
    constexpr double ln2 = std::numbers::ln2;
    const double root = 2.0 * (6.0 + std::sqrt(36.0 + (static_cast<double>(m) + 2.0) * ln2)) / ln2;
    return root * root;
}

ThresholdProfile threshold_profile(long m)
{
    ThresholdProfile p;
    p.m = m;
    p.f_value = f_of_m(m);
    p.twenty_m = 20 * static_cast<std::int64_t>(m);
    const auto check = compare(p.f_value, Relation::Greater, static_cast<double>(p.twenty_m));
    p.f_exceeds_20m = check.holds;
    p.near_tie = check.near_tie;
    return p;
}

std::vector<ThresholdProfile> threshold_table(long m_max)
{
    std::vector<ThresholdProfile> table;
    for (long m = 0; m <= m_max; ++m)
        table.push_back(threshold_profile(m));
    return table;
}

double theorem2_lower_bound(long m, std::int64_t n)
{
    require_even(n);
    const double np1 = static_cast<double>(n) + 1.0;
    return std::numbers::ln2 / 4.0 * np1 - 6.0 * std::sqrt(np1) - static_cast<double>(m) - 2.0;
}

RealCheck m2_minus_m1_bound(long m, std::int64_t n)
{
    require_even(n);
    const double combined = lattice::m2_lower_bound(m, n) - lattice::m1_upper_bound(m, n);
    const double target = theorem2_lower_bound(m, n);
    // accept a shortfall within the slack
    auto check = compare(combined, Relation::GreaterEqual, target);
    if (check.near_tie)
        check.holds = true;
    return check;
}

bool m2_minus_m1_bound_check(long m, std::int64_t n)
{
    return m2_minus_m1_bound(m, n).holds;
}

} // namespace sptcrank::bounds
