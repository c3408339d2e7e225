#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sptcrank {

using Integer = mpz_class;

/// Prefix c_0 + c_1 q + ... + c_N q^N of a formal power series in q with
/// arbitrary-precision integer coefficients.
///
/// The order N is part of the value: every coefficient up to N is valid and
/// nothing beyond N is known. Binary operations truncate to the smaller
/// order of their operands.
class TruncatedSeries {
public:
    /// The zero series of the given order.
    explicit TruncatedSeries(std::size_t order);
    TruncatedSeries(std::size_t order, std::vector<Integer> coeffs);
    TruncatedSeries(std::size_t order, std::initializer_list<long> coeffs);

    static TruncatedSeries one(std::size_t order);
    static TruncatedSeries monomial(std::size_t exponent, long coeff, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }
    const Integer& operator[](std::size_t n) const { return coeffs_[n]; }

    /// Coefficient of q^n, or zero when n is beyond the order.
    Integer coeff(std::size_t n) const;

    /// Same series at a smaller order. Throws when `order` exceeds this one.
    TruncatedSeries truncated(std::size_t order) const;

    bool is_zero() const;
    bool has_nonnegative_coeffs() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Integer> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);
TruncatedSeries scale(const TruncatedSeries& a, long factor);

/// Cauchy product truncated at min(order(a), order(b)). Plain O(N^2)
/// convolution that skips zero coefficients of the sparser operand.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse of a series whose constant term is +1 or -1.
/// Throws std::domain_error for any other constant term.
TruncatedSeries invert_unit(const TruncatedSeries& a);

/// q^a / (1 - q^b) = q^a + q^{a+b} + q^{a+2b} + ... truncated at `order`.
/// Throws std::invalid_argument when b == 0.
TruncatedSeries geometric_term(std::size_t a, std::size_t b, std::size_t order);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a) { return negate(a); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

std::string to_decimal(const Integer& v);

} // namespace sptcrank
