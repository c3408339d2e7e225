#include "sptcrank/qproducts.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace sptcrank::qseries {

namespace {

using Coeffs = std::vector<Integer>;

std::size_t abs_shift(long m)
{
    return static_cast<std::size_t>(m < 0 ? -m : m);
}

/// c += sign * q^a / (1 - q^b), truncated at the length of c.
void accumulate_geometric(Coeffs& c, int sign, std::size_t a, std::size_t b)
{
    const std::size_t order = c.size() - 1;
    for (std::size_t e = a; e <= order; e += b) {
        if (sign > 0)
            ++c[e];
        else
            --c[e];
    }
}

TruncatedSeries over_one_minus_q2(const TruncatedSeries& s)
{
    const std::size_t order = s.order();
    return mul(invert_unit(TruncatedSeries::one(order) - TruncatedSeries::monomial(2, 1, order)), s);
}

// sum_{n>=1} (-1)^n q^{n*(n+1)/2 + m*n} / (1 - q^n), added with the given overall sign.
void accumulate_triangular_sum(Coeffs& c, int sign, std::size_t m, std::size_t n_limit)
{
    const std::size_t order = c.size() - 1;
    for (std::size_t n = 1; n <= n_limit; ++n) {
        const std::size_t lead = n * (n + 1) / 2 + m * n;
        if (lead > order)
            break;
        accumulate_geometric(c, (n % 2 ? -1 : 1) * sign, lead, n);
    }
}

// sum_{n>=1} (-1)^n q^{n*(k*n+1) + 2mn} / (1 - q^{2n}) for k = 1 (Y) or k = 3 (X).
void accumulate_quadratic_sum(Coeffs& c, std::size_t k, std::size_t m, std::size_t n_limit)
{
    const std::size_t order = c.size() - 1;
    for (std::size_t n = 1; n <= n_limit; ++n) {
        const std::size_t lead = n * (k * n + 1) + 2 * m * n;
        if (lead > order)
            break;
        accumulate_geometric(c, n % 2 ? -1 : 1, lead, 2 * n);
    }
}

constexpr std::size_t unbounded = static_cast<std::size_t>(-1);

} // namespace

TruncatedSeries euler_product(std::size_t offset, std::size_t step, std::size_t order)
{
    if (offset == 0)
        throw std::invalid_argument("euler_product: offset must be positive");
    if (step == 0)
        throw std::invalid_argument("euler_product: step must be positive");

    Coeffs c(order + 1);
    c[0] = 1;
    for (std::size_t e = offset; e <= order; e += step)
        for (std::size_t n = order; n >= e; --n)
            c[n] -= c[n - e];
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries even_partition_series(std::size_t order)
{
    if (order < 2)
        return TruncatedSeries::one(order);
    return invert_unit(euler_product(2, 2, order));
}

TruncatedSeries y_series(long m, std::size_t order)
{
    const std::size_t s = abs_shift(m);
    Coeffs c(order + 1);
    accumulate_quadratic_sum(c, 1, s, unbounded);
    accumulate_triangular_sum(c, -1, s, unbounded);
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries z_series(long m, std::size_t order)
{
    Coeffs c(order + 1);
    accumulate_triangular_sum(c, -1, abs_shift(m), unbounded);
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries x_inner_series(long m, std::size_t order)
{
    const std::size_t s = abs_shift(m);
    Coeffs c(order + 1);
    accumulate_quadratic_sum(c, 3, s, unbounded);
    accumulate_triangular_sum(c, -1, s, unbounded);
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries x_series(long m, std::size_t order)
{
    return over_one_minus_q2(x_inner_series(m, order));
}

TruncatedSeries mc1_series(long m, std::size_t order, const TruncatedSeries& even_partitions)
{
    return mul(even_partitions.truncated(order), x_inner_series(m, order));
}

TruncatedSeries mc5_series(long m, std::size_t order, const TruncatedSeries& even_partitions)
{
    return mul(even_partitions.truncated(order), y_series(m, order));
}

TruncatedSeries mc1_series(long m, std::size_t order)
{
    return mc1_series(m, order, even_partition_series(order));
}

TruncatedSeries mc5_series(long m, std::size_t order)
{
    return mc5_series(m, order, even_partition_series(order));
}

const TDecomposition& standard_t_decomposition()
{
    static const TDecomposition table = [] {
        TDecomposition d;
        d.t1 = {{+1, 1, 1, 1},      {-1, 3, 2, 2},      {-1, 4, 2, 2},     {-1, 10, 4, 4},   {+1, 14, 4, 4},
                {+1, 52, 8, 8},     {+1, 200, 16, 16},  {-1, 136, 16, 16}, {-1, 36, 8, 8}};
        d.t3 = {{+1, 6, 3, 3}, {-1, 21, 6, 6}, {-1, 30, 6, 6}, {-1, 78, 12, 12}, {+1, 114, 12, 12}};
        d.t5 = {{+1, 15, 5, 5}, {-1, 55, 10, 10}, {-1, 80, 10, 10}};
        d.t7 = {{+1, 28, 7, 7}, {-1, 154, 14, 14}, {-1, 105, 14, 14}};
        d.t9 = {{+1, 45, 9, 9}, {-1, 171, 18, 18}, {-1, 252, 18, 18}};
        for (long k : {11, 13, 15, 17, 19})
            d.tprime.push_back({+1, k * (k + 1) / 2, k, k});
        return d;
    }();
    return table;
}

TruncatedSeries t_component(const std::vector<GeometricSummand>& summands, long m, std::size_t order)
{
    const long s = static_cast<long>(abs_shift(m));
    Coeffs c(order + 1);
    for (const auto& g : summands) {
        if (g.step <= 0 || g.base + g.per_m * s < 0)
            throw std::invalid_argument("t_component: summand needs a positive step and nonnegative exponent");
        accumulate_geometric(c, g.sign, g.exponent(s), static_cast<std::size_t>(g.step));
    }
    return over_one_minus_q2(TruncatedSeries(order, std::move(c)));
}

TruncatedSeries t_series(long m, std::size_t order)
{
    const std::size_t s = abs_shift(m);
    Coeffs c(order + 1);
    accumulate_quadratic_sum(c, 3, s, 9);
    accumulate_triangular_sum(c, -1, s, 19);
    return over_one_minus_q2(TruncatedSeries(order, std::move(c)));
}

TruncatedSeries t1_series(long m, std::size_t order) { return t_component(standard_t_decomposition().t1, m, order); }
TruncatedSeries t3_series(long m, std::size_t order) { return t_component(standard_t_decomposition().t3, m, order); }
TruncatedSeries t5_series(long m, std::size_t order) { return t_component(standard_t_decomposition().t5, m, order); }
TruncatedSeries t7_series(long m, std::size_t order) { return t_component(standard_t_decomposition().t7, m, order); }
TruncatedSeries t9_series(long m, std::size_t order) { return t_component(standard_t_decomposition().t9, m, order); }
TruncatedSeries tprime_series(long m, std::size_t order) { return t_component(standard_t_decomposition().tprime, m, order); }

TruncatedSeries r1_series(long m, std::size_t order, const TDecomposition& d)
{
    return t_component(d.t7, m, order) + t_component(d.t9, m, order) + t_component(d.tprime, m, order);
}

TruncatedSeries r2_series(long m, std::size_t order, const TDecomposition& d)
{
    const std::size_t s = abs_shift(m);
    Coeffs c(order + 1);
    auto bump = [&c, order](std::size_t e) {
        if (e <= order)
            ++c[e];
    };

    bump(70 + 10 * s);
    for (std::size_t k = 1 + s; k <= 1 + 2 * s; ++k)
        bump(k);
    for (std::size_t k = 2 + s; k <= 6 + 2 * s; ++k)
        if (k != 2 + 2 * s && k != 4 + 2 * s && k != 6 + 2 * s)
            bump(3 * k);
    for (std::size_t k = 3 + s; k <= 10 + 2 * s; ++k)
        if (k != 2 + 2 * s && k != 4 + 2 * s && k != 6 + 2 * s && k != 8 + 2 * s)
            bump(5 * k);

    return r1_series(m, order, d) + over_one_minus_q2(TruncatedSeries(order, std::move(c)));
}

std::vector<std::pair<std::size_t, std::size_t>> t_bracket_pairs(long m)
{
    const std::size_t s = abs_shift(m);
    return {{2 + 2 * s, 10 + 4 * s},   {6 + 6 * s, 36 + 8 * s},    {12 + 6 * s, 44 + 8 * s},
            {18 + 6 * s, 78 + 12 * s}, {24 + 6 * s, 90 + 12 * s},  {60 + 10 * s, 102 + 12 * s},
            {20 + 10 * s, 136 + 16 * s}, {10 + 10 * s, 152 + 16 * s}, {30 + 10 * s, 168 + 16 * s},
            {40 + 10 * s, 184 + 16 * s}};
}

TruncatedSeries t_bracket_series(std::pair<std::size_t, std::size_t> bracket, std::size_t order)
{
    return over_one_minus_q2(TruncatedSeries::monomial(bracket.first, 1, order) -
                             TruncatedSeries::monomial(bracket.second, 1, order));
}

namespace {

struct TagName {
    SeriesTag tag;
    std::string_view name;
};

constexpr std::array<TagName, 15> tag_names{{
    {SeriesTag::X, "x"},       {SeriesTag::Y, "y"},   {SeriesTag::Z, "z"},   {SeriesTag::InnerC1, "inner-c1"},
    {SeriesTag::MC1, "mc1"},   {SeriesTag::MC5, "mc5"}, {SeriesTag::T, "t"},  {SeriesTag::T1, "t1"},
    {SeriesTag::T3, "t3"},     {SeriesTag::T5, "t5"}, {SeriesTag::T7, "t7"}, {SeriesTag::T9, "t9"},
    {SeriesTag::Tprime, "tprime"}, {SeriesTag::R1, "r1"}, {SeriesTag::R2, "r2"},
}};

} // namespace

std::string_view tag_name(SeriesTag tag)
{
    for (const auto& t : tag_names)
        if (t.tag == tag)
            return t.name;
    return "?";
}

SeriesTag parse_tag(std::string_view name)
{
    for (const auto& t : tag_names)
        if (t.name == name)
            return t.tag;
    throw std::invalid_argument("unknown series '" + std::string(name) + "'");
}

TruncatedSeries build(SeriesId id, std::size_t order)
{
    const long m = id.shift;
    switch (id.tag) {
    case SeriesTag::X: return x_series(m, order);
    case SeriesTag::Y: return y_series(m, order);
    case SeriesTag::Z: return z_series(m, order);
    case SeriesTag::InnerC1: return x_inner_series(m, order);
    case SeriesTag::MC1: return mc1_series(m, order);
    case SeriesTag::MC5: return mc5_series(m, order);
    case SeriesTag::T: return t_series(m, order);
    case SeriesTag::T1: return t1_series(m, order);
    case SeriesTag::T3: return t3_series(m, order);
    case SeriesTag::T5: return t5_series(m, order);
    case SeriesTag::T7: return t7_series(m, order);
    case SeriesTag::T9: return t9_series(m, order);
    case SeriesTag::Tprime: return tprime_series(m, order);
    case SeriesTag::R1: return r1_series(m, order);
    case SeriesTag::R2: return r2_series(m, order);
    }
    throw std::logic_error("unreachable series tag");
}

} // namespace sptcrank::qseries
