#include "sptcrank/series.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sptcrank {

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.size() > order + 1)
        throw std::invalid_argument("TruncatedSeries: more coefficients than order + 1");
    coeffs_.resize(order + 1);
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<long> coeffs) : coeffs_(order + 1)
{
    if (coeffs.size() > order + 1)
        throw std::invalid_argument("TruncatedSeries: more coefficients than order + 1");
    std::size_t i = 0;
    for (long c : coeffs)
        coeffs_[i++] = c;
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    return monomial(0, 1, order);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t exponent, long coeff, std::size_t order)
{
    TruncatedSeries s(order);
    if (exponent <= order)
        s.coeffs_[exponent] = coeff;
    return s;
}

Integer TruncatedSeries::coeff(std::size_t n) const
{
    return n < coeffs_.size() ? coeffs_[n] : Integer(0);
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    if (order > this->order())
        throw std::invalid_argument("TruncatedSeries::truncated: cannot extend a truncated series");
    return TruncatedSeries(order, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) == 0; });
}

bool TruncatedSeries::has_nonnegative_coeffs() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) >= 0; });
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Integer> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        mpz_add(out[n].get_mpz_t(), a[n].get_mpz_t(), b[n].get_mpz_t());
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<Integer> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        mpz_sub(out[n].get_mpz_t(), a[n].get_mpz_t(), b[n].get_mpz_t());
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries negate(const TruncatedSeries& a)
{
    return scale(a, -1);
}

TruncatedSeries scale(const TruncatedSeries& a, long factor)
{
    std::vector<Integer> out(a.order() + 1);
    for (std::size_t n = 0; n <= a.order(); ++n)
        mpz_mul_si(out[n].get_mpz_t(), a[n].get_mpz_t(), factor);
    return TruncatedSeries(a.order(), std::move(out));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());

    auto nonzeros = [order](const TruncatedSeries& s) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i <= order; ++i)
            if (sgn(s[i]) != 0)
                idx.push_back(i);
        return idx;
    };
    auto ia = nonzeros(a);
    auto ib = nonzeros(b);
    const bool swap = ib.size() < ia.size();
    const TruncatedSeries& sparse = swap ? b : a;
    const TruncatedSeries& dense = swap ? a : b;
    const auto& idx = swap ? ib : ia;

    std::vector<Integer> out(order + 1);
    for (std::size_t i : idx) {
        const mpz_srcptr ci = sparse[i].get_mpz_t();
        for (std::size_t j = 0; i + j <= order; ++j)
            mpz_addmul(out[i + j].get_mpz_t(), ci, dense[j].get_mpz_t());
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries invert_unit(const TruncatedSeries& a)
{
    const int lead = a[0] == 1 ? 1 : (a[0] == -1 ? -1 : 0);
    if (lead == 0)
        throw std::domain_error("invert_unit: constant term must be +1 or -1, got " + to_decimal(a[0]));

    const std::size_t order = a.order();
    std::vector<std::size_t> tail;
    for (std::size_t k = 1; k <= order; ++k)
        if (sgn(a[k]) != 0)
            tail.push_back(k);

    // b_n = -lead * sum_{k>=1} a_k b_{n-k}
    std::vector<Integer> b(order + 1);
    b[0] = lead;
    Integer acc;
    for (std::size_t n = 1; n <= order; ++n) {
        acc = 0;
        for (std::size_t k : tail) {
            if (k > n)
                break;
            mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[n - k].get_mpz_t());
        }
        if (lead == 1)
            mpz_neg(b[n].get_mpz_t(), acc.get_mpz_t());
        else
            b[n] = acc;
    }
    return TruncatedSeries(order, std::move(b));
}

TruncatedSeries geometric_term(std::size_t a, std::size_t b, std::size_t order)
{
    if (b == 0)
        throw std::invalid_argument("geometric_term: step must be positive");
    std::vector<Integer> out(order + 1);
    for (std::size_t e = a; e <= order; e += b)
        out[e] = 1;
    return TruncatedSeries(order, std::move(out));
}

std::string to_decimal(const Integer& v)
{
    return v.get_str(10);
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s)
{
    os << '[';
    for (std::size_t n = 0; n <= s.order(); ++n)
        os << (n ? ", " : "") << s[n];
    return os << "] + O(q^" << s.order() + 1 << ')';
}

} // namespace sptcrank
