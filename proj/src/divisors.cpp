#include "sptcrank/divisors.hpp"

#include <stdexcept>

#include "sptcrank/lattice.hpp"

namespace sptcrank::divisors {

namespace {

void require_shift(long m)
{
    if (m < 0)
        throw std::invalid_argument("divisor census: m must be nonnegative");
}

} // namespace

OddPartDecomposition decompose(std::int64_t n)
{
    if (n < 1)
        throw std::invalid_argument("decompose: n must be positive");
    OddPartDecomposition d;
    while (n % 2 == 0) {
        n /= 2;
        ++d.e;
    }
    d.odd_part = n;
    return d;
}

std::vector<std::int64_t> divisors_of(std::int64_t n)
{
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d != n / d)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool DivisorPairCensus::containments_hold() const
{
    if (decomposition.e == 0)
        return a1 == 0 && b2 == 0 && a2 <= b1;
    return a2 <= a1 && b2 <= b1;
}

DivisorPairCensus census(long m, const OddPartDecomposition& decomposition)
{
    require_shift(m);
    if (decomposition.odd_part < 1)
        throw std::invalid_argument("divisor census: odd part must be positive");

    const std::int64_t threshold = 2 * static_cast<std::int64_t>(m) + 1;
    auto member = [threshold](std::int64_t v) { return v >= threshold && v % 2 != 0; };

    const std::int64_t p = std::int64_t{1} << decomposition.e;
    DivisorPairCensus c;
    c.decomposition = decomposition;
    for (std::int64_t d1 : divisors_of(decomposition.odd_part)) {
        const std::int64_t d2 = decomposition.odd_part / d1;
        c.a1 += member(d2 - p * d1);
        c.a2 += member(d2 - 2 * p * d1);
        c.b1 += member(2 * p * d2 - d1);
        c.b2 += member(p * d2 - d1);
    }
    return c;
}

DivisorPairCensus census(long m, std::int64_t n)
{
    require_shift(m);
    if (n < 1)
        throw std::invalid_argument("divisor census: n must be positive");
    return census(m, decompose(n));
}

std::int64_t y_direct(long m, std::int64_t n)
{
    const auto c = census(m, n);
    return c.a1 + c.b1 - c.a2 - c.b2;
}

std::int64_t z_direct(long m, std::int64_t n)
{
    const auto c = census(m, n);
    return c.b1 - c.a2;
}

std::int64_t x_direct(long m, std::int64_t n)
{
    require_shift(m);
    if (n < 0)
        throw std::invalid_argument("x_direct: n must be nonnegative");
    if (n == 0)
        return 0;
    if (n % 2 != 0) {
        std::int64_t sum = 0;
        for (std::int64_t k = 1; k <= n; k += 2)
            sum += z_direct(m, k);
        return sum;
    }
    using lattice::Region;
    const auto omega = lattice::count_region({Region::Omega, m, n});
    const auto omega_prime = lattice::count_region({Region::OmegaPrime, m, n});
    return omega_prime.odd_y - omega.odd_y;
}

} // namespace sptcrank::divisors
