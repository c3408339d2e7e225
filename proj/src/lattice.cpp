#include "sptcrank/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sptcrank::lattice {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

/// Odd integers in [lo, hi], lo >= 1.
std::int64_t odd_in_range(std::int64_t lo, std::int64_t hi)
{
    return hi < lo ? 0 : (hi + 1) / 2 - lo / 2;
}

void validate(const RegionSpec& spec)
{
    if (spec.m < 0 || spec.n < 0)
        throw std::invalid_argument("region: m and n must be nonnegative");
}

double dist(Vertex a, Vertex b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// sqrt((2m)^2 + 8(n+1)) and sqrt((2m)^2 + 12(n+1)).
struct Radicals {
    double two_m;
    double np1;
    double s8;
    double s12;
};

Radicals radicals(long m, std::int64_t n)
{
    const double two_m = 2.0 * static_cast<double>(m);
    const double np1 = static_cast<double>(n) + 1.0;
    return {two_m, np1, std::sqrt(two_m * two_m + 8.0 * np1), std::sqrt(two_m * two_m + 12.0 * np1)};
}

} // namespace

LatticeCount count_region(const RegionSpec& spec)
{
    validate(spec);
    const std::int64_t n = spec.n;
    const std::int64_t two_m = 2 * static_cast<std::int64_t>(spec.m);
    LatticeCount c;

    // xy < (n+1)/2 over the integers is 2xy <= n, i.e. y <= floor(n / 2x).
    for (std::int64_t x = 1; 2 * x <= n; ++x) {
        const std::int64_t hyperbola = n / (2 * x);
        std::int64_t lo = 0;
        std::int64_t hi = 0;
        if (spec.kind == Region::Omega) {
            lo = 4 * x + two_m + 1; // y - 4x > 2m
            hi = std::min(6 * x + two_m - 1, hyperbola); // y - 6x < 2m
        } else {
            lo = std::max<std::int64_t>(1, floor_div(2 * x - two_m, 3) + 1); // 3y > 2x - 2m
            hi = std::min(4 * x - two_m - 1, hyperbola); // y < 4x - 2m
        }
        // lo is nondecreasing and the hyperbola bound nonincreasing in x
        if (lo > hyperbola)
            break;
        if (hi < lo)
            continue;
        c.total += hi - lo + 1;
        c.odd_y += odd_in_range(lo, hi);
    }
    return c;
}

double omega_area(long m, std::int64_t n)
{
    const auto r = radicals(m, n);
    // (1/2)(n+1) log(3 (s8 - 2m) / (2 (s12 - 2m))) - (m/24)(3 s8 - 2 s12 - 2m), with both
    // differences s - 2m rewritten as c(n+1)/(s + 2m).
    const double log_term = 0.5 * r.np1 * std::log((r.s12 + r.two_m) / (r.s8 + r.two_m));
    const double line_term = static_cast<double>(m) * r.np1 * (1.0 / (r.s8 + r.two_m) - 1.0 / (r.s12 + r.two_m));
    return log_term - line_term;
}

double omega_prime_area(long m, std::int64_t n)
{
    const auto r = radicals(m, n);
    return 0.5 * r.np1 *
           (r.two_m / (r.s12 + r.two_m) - r.two_m / (r.s8 + r.two_m) +
            std::log(2.0 * (r.s12 + r.two_m) / (r.s8 + r.two_m)));
}

GeometryFigures geometry_figures(const RegionSpec& spec)
{
    validate(spec);
    const auto r = radicals(spec.m, spec.n);
    const double m = static_cast<double>(spec.m);
    GeometryFigures g;

    if (spec.kind == Region::Omega) {
        const Vertex p1{0.0, r.two_m};
        const double x2 = r.np1 / (r.s8 + r.two_m); // (-2m + s8) / 8
        const double x3 = r.np1 / (r.s12 + r.two_m); // (s12 - 2m) / 12
        const Vertex p2{x2, r.np1 / (2.0 * x2)};
        const Vertex p3{x3, r.np1 / (2.0 * x3)};
        if (!(p3.y > p2.y) || !(p2.y > p1.y))
            throw std::domain_error("geometry_figures: degenerate Omega (vertex ordering collapsed)");
        g.vertices = {p1, p2, p3};
        g.area = omega_area(spec.m, spec.n);
        g.length_bound = 3.6 * std::sqrt(r.np1);
        g.x_extent_bound = std::sqrt(2.0 * r.np1) / 4.0;
        g.x_extent = x2 - p1.x;
        g.chord_perimeter = dist(p1, p2) + dist(p2, p3) + dist(p3, p1);
    } else {
        const Vertex p4{m / 2.0, 0.0};
        const Vertex p5{m, 0.0};
        const double x6 = (r.s8 + r.two_m) / 8.0;
        const double x7 = (r.s12 + r.two_m) / 4.0;
        const Vertex p6{x6, r.np1 / (2.0 * x6)};
        const Vertex p7{x7, r.np1 / (2.0 * x7)};
        if (!(x7 > x6) || !(x7 > p5.x) || !(x6 > p4.x))
            throw std::domain_error("geometry_figures: degenerate Omega' (vertex ordering collapsed)");
        g.vertices = {p4, p5, p6, p7};
        g.area = omega_prime_area(spec.m, spec.n);
        g.length_bound = 5.5 * std::sqrt(r.np1) + m;
        g.x_extent_bound = std::sqrt(3.0 * r.np1) / 2.0 + m / 2.0;
        g.x_extent = r.s12 / 4.0;
        g.chord_perimeter = dist(p4, p5) + dist(p5, p7) + dist(p7, p6) + dist(p6, p4);
    }
    return g;
}

double m1_upper_bound(long m, std::int64_t n)
{
    return omega_area(m, n) / 2.0 + 2.2 * std::sqrt(static_cast<double>(n) + 1.0) + 1.0;
}

double m2_lower_bound(long m, std::int64_t n)
{
    return omega_prime_area(m, n) / 2.0 - 3.7 * std::sqrt(static_cast<double>(n) + 1.0) - static_cast<double>(m) - 1.0;
}

RealCheck parity_lemma(const RegionSpec& spec)
{
    const auto count = count_region(spec);
    const auto figures = geometry_figures(spec);
    // |N/2 - M| = |N - 2M| / 2 is a half-integer, exact in double
    const double lhs = static_cast<double>(std::abs(count.total - 2 * count.odd_y)) / 2.0;
    return compare(lhs, Relation::LessEqual, figures.x_extent_bound + 1.0);
}

bool parity_lemma_check(const RegionSpec& spec)
{
    return parity_lemma(spec).holds;
}

JarnikOutcome jarnik_check(const RegionSpec& spec)
{
    const auto count = count_region(spec);
    const auto figures = geometry_figures(spec);
    JarnikOutcome out;
    out.applicable = figures.chord_perimeter >= 1.0;
    out.check = compare(std::abs(static_cast<double>(count.total) - figures.area), Relation::Less, figures.length_bound);
    return out;
}

} // namespace sptcrank::lattice
