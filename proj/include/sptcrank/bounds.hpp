#pragma once

#include <cstdint>
#include <vector>

#include "sptcrank/real_check.hpp"

namespace sptcrank::bounds {

/// f(m) = (2 (6 + sqrt(36 + (m+2) ln 2)) / ln 2)^2. For u = sqrt(n+1),
/// (ln2/4) u^2 - 6u - (m+2) >= 0 exactly when n + 1 >= f(m).
double f_of_m(long m);

struct ThresholdProfile {
    long m = 0;
    double f_value = 0;
    std::int64_t twenty_m = 0;
    bool f_exceeds_20m = false;
    /// f(m) within near-tie slack of 20m.
    bool near_tie = false;
};

ThresholdProfile threshold_profile(long m);
std::vector<ThresholdProfile> threshold_table(long m_max);

/// (ln2/4)(n+1) - 6 sqrt(n+1) - m - 2, the lower bound on X^(m)(n) for even n.
/// Throws std::invalid_argument for odd n or n < 2.
double theorem2_lower_bound(long m, std::int64_t n);

/// m2_lower_bound - m1_upper_bound >= theorem2_lower_bound (up to near-tie slack).
RealCheck m2_minus_m1_bound(long m, std::int64_t n);
bool m2_minus_m1_bound_check(long m, std::int64_t n);

} // namespace sptcrank::bounds
