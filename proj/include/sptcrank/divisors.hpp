#pragma once

#include <cstdint>
#include <vector>

namespace sptcrank::divisors {

/// n = 2^e * odd_part with odd_part odd.
struct OddPartDecomposition {
    unsigned e = 0;
    std::int64_t odd_part = 1;
};

OddPartDecomposition decompose(std::int64_t n);

/// Positive divisors of n in increasing order, by trial division up to sqrt(n).
std::vector<std::int64_t> divisors_of(std::int64_t n);

/// Cardinalities of the four factor-pair sets of the odd part N of n = 2^e N:
///   A1: d2 - 2^e d1,     A2: d2 - 2^{e+1} d1,
///   B1: 2^{e+1} d2 - d1, B2: 2^e d2 - d1,
/// each counting pairs d1 d2 = N whose combination is odd and at least 2m + 1.
struct DivisorPairCensus {
    std::int64_t a1 = 0, a2 = 0, b1 = 0, b2 = 0;
    OddPartDecomposition decomposition;

    /// e = 0: A1 and B2 are empty and #A2 <= #B1; e >= 1: #A2 <= #A1 and #B2 <= #B1.
    bool containments_hold() const;
};

/// Throws std::invalid_argument for n < 1 or m < 0.
DivisorPairCensus census(long m, std::int64_t n);

/// Census over the pairs of `decomposition.odd_part` using the 2-power `decomposition.e`.
DivisorPairCensus census(long m, const OddPartDecomposition& decomposition);

/// #A1 + #B1 - #A2 - #B2
std::int64_t y_direct(long m, std::int64_t n);

/// #B1 - #A2
std::int64_t z_direct(long m, std::int64_t n);

/// Odd n: sum of z_direct(m, k) over odd k <= n. Even n >= 2: M2 - M1, the odd-y lattice
/// counts of Omega' and Omega. n = 0: 0.
std::int64_t x_direct(long m, std::int64_t n);

} // namespace sptcrank::divisors
