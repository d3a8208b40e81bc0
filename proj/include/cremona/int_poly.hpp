#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cremona {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Z, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    static IntPoly monomial(const Integer& c, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    const Integer& leading() const { return coeffs_.back(); }

    Integer evaluate(const Integer& t) const;
    IntPoly derivative() const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form such as "t^3 - 3*t^2 - t - 1".
    std::string to_string(char var = 't') const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// Quotient of num by a monic divisor when the division is exact.
std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& monic_divisor);

/// The m-th cyclotomic polynomial.
IntPoly cyclotomic(unsigned m);

unsigned euler_phi(unsigned m);

/// Indices m (with multiplicity, ascending) such that p is the product of the
/// cyclotomic polynomials Phi_m, or nullopt when p has a root off the unit
/// circle or is not monic.
std::optional<std::vector<unsigned>> cyclotomic_factorization(const IntPoly& p);

} // namespace cremona
