#include "sptcrank/bivariate.hpp"

#include <stdexcept>

#include "sptcrank/qproducts.hpp"

namespace sptcrank::bivariate {

Integer LaurentPoly::coeff(long degree) const
{
    if (is_zero() || degree < min_degree || degree > max_degree())
        return 0;
    return coeffs[static_cast<std::size_t>(degree - min_degree)];
}

LaurentSeries::LaurentSeries(std::size_t order, std::vector<LaurentPoly> qcoeffs) : qcoeffs_(std::move(qcoeffs))
{
    if (qcoeffs_.size() != order + 1)
        throw std::invalid_argument("LaurentSeries: need exactly order + 1 coefficients");
    for (std::size_t n = 0; n <= order; ++n) {
        const auto& p = qcoeffs_[n];
        if (p.is_zero())
            continue;
        const long bound = static_cast<long>(n);
        if (p.min_degree < -bound || p.max_degree() > bound)
            throw std::invalid_argument("LaurentSeries: z-degree exceeds q-degree");
        if (sgn(p.coeffs.front()) == 0 || sgn(p.coeffs.back()) == 0)
            throw std::invalid_argument("LaurentSeries: z-polynomial carries zero padding");
    }
}

std::string_view family_name(Family f)
{
    switch (f) {
    case Family::A1: return "A1";
    case Family::A3: return "A3";
    case Family::A5: return "A5";
    case Family::A7: return "A7";
    case Family::C1: return "C1";
    case Family::C5: return "C5";
    case Family::E2: return "E2";
    case Family::E4: return "E4";
    }
    return "?";
}

namespace {

/// Dense (q, z) grid with z-degrees -order..order.
class Grid {
public:
    explicit Grid(std::size_t order) : order_(order), width_(2 * order + 1), cells_((order + 1) * width_) {}

    Integer& at(std::size_t q, long d) { return cells_[q * width_ + static_cast<std::size_t>(d + static_cast<long>(order_))]; }

    void clear()
    {
        for (auto& c : cells_)
            c = 0;
    }

    /// Multiply by 1 / (1 - z^dz q^j), dz = +1 or -1, using c[q][d] += c[q-j][d-dz] in increasing q.
    void divide_by_geometric(std::size_t j, long dz)
    {
        for (std::size_t q = j; q <= order_; ++q) {
            const long src_bound = static_cast<long>(q - j);
            const long bound = static_cast<long>(q);
            for (long d = -bound; d <= bound; ++d) {
                const long src = d - dz;
                if (src < -src_bound || src > src_bound)
                    continue;
                Integer& from = at(q - j, src);
                if (sgn(from) != 0)
                    mpz_add(at(q, d).get_mpz_t(), at(q, d).get_mpz_t(), from.get_mpz_t());
            }
        }
    }

    void add_into(Grid& total)
    {
        for (std::size_t i = 0; i < cells_.size(); ++i)
            if (sgn(cells_[i]) != 0)
                total.cells_[i] += cells_[i];
    }

    LaurentPoly row(std::size_t q)
    {
        const long bound = static_cast<long>(q);
        long lo = -bound;
        long hi = bound;
        while (lo <= hi && sgn(at(q, lo)) == 0)
            ++lo;
        while (hi >= lo && sgn(at(q, hi)) == 0)
            --hi;
        LaurentPoly p;
        if (lo > hi)
            return p;
        p.min_degree = lo;
        for (long d = lo; d <= hi; ++d)
            p.coeffs.push_back(at(q, d));
        return p;
    }

private:
    std::size_t order_;
    std::size_t width_;
    std::vector<Integer> cells_;
};

struct OuterTerm {
    int sign;
    std::size_t lead;
};

OuterTerm outer_term(Family f, std::size_t n)
{
    switch (f) {
    case Family::A1: return {1, n};
    case Family::A3: return {1, 2 * n};
    case Family::A5: return {1, n * n + n};
    case Family::A7: return {1, n * n};
    case Family::C1: return {1, n};
    case Family::C5: return {1, n * (n + 1) / 2};
    case Family::E2: return {n % 2 ? -1 : 1, n};
    case Family::E4: return {1, 2 * n};
    }
    throw std::logic_error("unreachable family");
}

TruncatedSeries numerator(Family f, std::size_t n, std::size_t order)
{
    using qseries::euler_product;
    switch (f) {
    case Family::A1:
    case Family::A3:
    case Family::A5:
    case Family::A7:
        return euler_product(2 * n + 1, 1, order);
    case Family::C1:
    case Family::C5:
        return mul(euler_product(2 * n + 1, 2, order), euler_product(n + 1, 1, order));
    case Family::E2:
    case Family::E4:
        return euler_product(2 * n + 2, 2, order);
    }
    throw std::logic_error("unreachable family");
}

} // namespace

LaurentSeries spt_crank_bivariate(Family family, std::size_t order)
{
    if (order == 0)
        throw std::invalid_argument("spt_crank_bivariate: order must be at least 1");

    Grid total(order);
    Grid term(order);
    for (std::size_t n = 1;; ++n) {
        const auto [sign, lead] = outer_term(family, n);
        if (lead > order)
            break;

        term.clear();
        const TruncatedSeries num = numerator(family, n, order - lead);
        for (std::size_t k = 0; k + lead <= order; ++k)
            term.at(k + lead, 0) = sign > 0 ? num[k] : Integer(-num[k]);

        // 1 / (z q^n, z^{-1} q^n; q)_inf, factors with q-exponent beyond the order pruned.
        for (std::size_t j = n; j <= order; ++j) {
            term.divide_by_geometric(j, +1);
            term.divide_by_geometric(j, -1);
        }
        term.add_into(total);
    }

    std::vector<LaurentPoly> rows;
    rows.reserve(order + 1);
    for (std::size_t q = 0; q <= order; ++q)
        rows.push_back(total.row(q));
    return LaurentSeries(order, std::move(rows));
}

TruncatedSeries extract_m(const LaurentSeries& s, long m)
{
    std::vector<Integer> c(s.order() + 1);
    for (std::size_t n = 0; n <= s.order(); ++n)
        c[n] = s[n].coeff(m);
    return TruncatedSeries(s.order(), std::move(c));
}

} // namespace sptcrank::bivariate
