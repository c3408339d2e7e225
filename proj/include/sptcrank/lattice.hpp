#pragma once

#include <cstdint>
#include <vector>

#include "sptcrank/real_check.hpp"

namespace sptcrank::lattice {

/// Omega:  xy < (n+1)/2, y - 6x < 2m, y - 4x > 2m, x > 0, y > 0
/// Omega': xy < (n+1)/2, 2x - 3y < 2m, 4x - y > 2m, x > 0, y > 0
enum class Region { Omega, OmegaPrime };

struct RegionSpec {
    Region kind;
    long m;
    std::int64_t n;
};

/// Interior lattice points of a region and those among them with odd y.
struct LatticeCount {
    std::int64_t total = 0;
    std::int64_t odd_y = 0;

    friend bool operator==(const LatticeCount&, const LatticeCount&) = default;
};

struct Vertex {
    double x;
    double y;
};

struct GeometryFigures {
    double area = 0;
    /// Explicit upper bound on the boundary length: 3.6 sqrt(n+1) for Omega, 5.5 sqrt(n+1) + m for Omega'.
    double length_bound = 0;
    /// Upper bound on the x-extent: sqrt(2(n+1))/4 for Omega, sqrt(3(n+1))/2 + m/2 for Omega'.
    double x_extent_bound = 0;
    /// Exact x-extent, x2 - x1 or x7 - x4.
    double x_extent = 0;
    /// Perimeter of the polygon through the vertices, chords in place of the hyperbola
    /// arc. Never exceeds the true boundary length.
    double chord_perimeter = 0;
    /// (x1,y1), (x2,y2), (x3,y3) for Omega; (x4,y4) ... (x7,y7) for Omega'.
    std::vector<Vertex> vertices;
};

/// Exact count in integer arithmetic. Throws std::invalid_argument for m < 0 or n < 0.
LatticeCount count_region(const RegionSpec& spec);

/// Throws std::domain_error when the vertex ordering collapses in double precision.
GeometryFigures geometry_figures(const RegionSpec& spec);

/// Closed-form areas written in (m, n); finite at m = 0.
double omega_area(long m, std::int64_t n);
double omega_prime_area(long m, std::int64_t n);

/// A(Omega)/2 + 2.2 sqrt(n+1) + 1, the upper bound on M1.
double m1_upper_bound(long m, std::int64_t n);

/// A(Omega')/2 - 3.7 sqrt(n+1) - m - 1, the lower bound on M2.
double m2_lower_bound(long m, std::int64_t n);

/// |total/2 - odd_y| <= x_extent_bound + 1.
RealCheck parity_lemma(const RegionSpec& spec);
bool parity_lemma_check(const RegionSpec& spec);

struct JarnikOutcome {
    /// False when the chord perimeter is below 1, so the length >= 1 hypothesis is not certified.
    bool applicable = false;
    /// |total - area| < length_bound, meaningful only when applicable.
    RealCheck check;
};

JarnikOutcome jarnik_check(const RegionSpec& spec);

} // namespace sptcrank::lattice
