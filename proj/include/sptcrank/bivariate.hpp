#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "sptcrank/series.hpp"

namespace sptcrank::bivariate {

/// Laurent polynomial in z with integer coefficients, stored without zero padding:
/// coeffs[i] is the coefficient of z^{min_degree + i}. The zero polynomial has no coefficients.
struct LaurentPoly {
    long min_degree = 0;
    std::vector<Integer> coeffs;

    bool is_zero() const noexcept { return coeffs.empty(); }
    long max_degree() const noexcept { return min_degree + static_cast<long>(coeffs.size()) - 1; }
    Integer coeff(long degree) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

/// Series in q truncated at `order` whose q^n coefficient is a Laurent polynomial
/// in z. Every nonzero z-degree d at q^n satisfies |d| <= n.
class LaurentSeries {
public:
    LaurentSeries(std::size_t order, std::vector<LaurentPoly> qcoeffs);

    std::size_t order() const noexcept { return qcoeffs_.size() - 1; }
    const LaurentPoly& operator[](std::size_t n) const { return qcoeffs_[n]; }
    std::span<const LaurentPoly> qcoeffs() const noexcept { return qcoeffs_; }

private:
    std::vector<LaurentPoly> qcoeffs_;
};

enum class Family { A1, A3, A5, A7, C1, C5, E2, E4 };

inline constexpr Family all_families[] = {Family::A1, Family::A3, Family::A5, Family::A7,
                                          Family::C1, Family::C5, Family::E2, Family::E4};

std::string_view family_name(Family f);

/// Expands S_X(z, q) = sum_{n>=1} c_n q^{a_n} P_n(q) / (z q^n, z^{-1} q^n; q)_inf from its product
/// form, truncated at q^order. Throws std::invalid_argument when order == 0.
LaurentSeries spt_crank_bivariate(Family family, std::size_t order);

/// The univariate series sum_n [z^m q^n] s.
TruncatedSeries extract_m(const LaurentSeries& s, long m);

} // namespace sptcrank::bivariate
