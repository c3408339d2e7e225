#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "sptcrank/series.hpp"

namespace sptcrank::qseries {

// Every builder below normalizes its shift to |m| on entry.

/// Truncated expansion of (q^offset; q^step)_inf = prod_{j>=0} (1 - q^{offset + j*step}).
TruncatedSeries euler_product(std::size_t offset, std::size_t step, std::size_t order);

/// 1 / (q^2; q^2)_inf, the partitions-into-even-parts series shared by M_C1 and M_C5.
TruncatedSeries even_partition_series(std::size_t order);

/// sum_{n>=1} (-1)^n q^{n(n+1)+2mn} / (1-q^{2n}) - sum_{n>=1} (-1)^n q^{n(n+1)/2+mn} / (1-q^n)
TruncatedSeries y_series(long m, std::size_t order);

/// -sum_{n>=1} (-1)^n q^{n(n+1)/2+mn} / (1-q^n)
TruncatedSeries z_series(long m, std::size_t order);

/// The bracketed difference of the X generating function, before division by 1 - q^2:
/// sum (-1)^n q^{n(3n+1)+2mn} / (1-q^{2n}) - sum (-1)^n q^{n(n+1)/2+mn} / (1-q^n).
TruncatedSeries x_inner_series(long m, std::size_t order);

/// x_inner_series / (1 - q^2).
TruncatedSeries x_series(long m, std::size_t order);

/// Generating functions of M_C1(m, n) and M_C5(m, n) in n.
TruncatedSeries mc1_series(long m, std::size_t order);
TruncatedSeries mc5_series(long m, std::size_t order);

/// Same as above with a precomputed even_partition_series of at least `order`.
TruncatedSeries mc1_series(long m, std::size_t order, const TruncatedSeries& even_partitions);
TruncatedSeries mc5_series(long m, std::size_t order, const TruncatedSeries& even_partitions);

// ---------------------------------------------------------------------------
// The truncated X series used for n <= 20m and its decomposition.
// ---------------------------------------------------------------------------

/// sign * q^{base + per_m*m} / (1 - q^step)
struct GeometricSummand {
    int sign;
    long base;
    long per_m;
    long step;

    std::size_t exponent(long m) const { return static_cast<std::size_t>(base + per_m * m); }
};

/// Summand tables of T1, T3, T5, T7, T9 and T'. Each component is
/// (1 / (1 - q^2)) * sum of its summands.
struct TDecomposition {
    std::vector<GeometricSummand> t1, t3, t5, t7, t9, tprime;
};

const TDecomposition& standard_t_decomposition();

/// (1 / (1 - q^2)) * sum of the given summands.
TruncatedSeries t_component(const std::vector<GeometricSummand>& summands, long m, std::size_t order);

/// (1/(1-q^2)) (sum_{n=1}^{9} (-1)^n q^{n(3n+1)+2mn}/(1-q^{2n}) - sum_{n=1}^{19} (-1)^n q^{n(n+1)/2+mn}/(1-q^n))
TruncatedSeries t_series(long m, std::size_t order);

TruncatedSeries t1_series(long m, std::size_t order);
TruncatedSeries t3_series(long m, std::size_t order);
TruncatedSeries t5_series(long m, std::size_t order);
TruncatedSeries t7_series(long m, std::size_t order);
TruncatedSeries t9_series(long m, std::size_t order);
TruncatedSeries tprime_series(long m, std::size_t order);

/// R1 = T7 + T9 + T'.
TruncatedSeries r1_series(long m, std::size_t order, const TDecomposition& d = standard_t_decomposition());

/// R1 plus the nonnegative leftover monomials over (1 - q^2) from the
/// rearrangement of T into ten bracketed differences.
TruncatedSeries r2_series(long m, std::size_t order, const TDecomposition& d = standard_t_decomposition());

/// The ten (lower, upper) exponent pairs q^lower - q^upper of the rearranged T.
std::vector<std::pair<std::size_t, std::size_t>> t_bracket_pairs(long m);

/// (q^lower - q^upper) / (1 - q^2) for one bracket.
TruncatedSeries t_bracket_series(std::pair<std::size_t, std::size_t> bracket, std::size_t order);

// ---------------------------------------------------------------------------

enum class SeriesTag { X, Y, Z, InnerC1, MC1, MC5, T, T1, T3, T5, T7, T9, Tprime, R1, R2 };

struct SeriesId {
    SeriesTag tag;
    long shift;
};

std::string_view tag_name(SeriesTag tag);

/// Throws std::invalid_argument for an unknown name. Names are lower case: "x", "mc1", "tprime", ...
SeriesTag parse_tag(std::string_view name);

TruncatedSeries build(SeriesId id, std::size_t order);

} // namespace sptcrank::qseries
