#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cremona/int_matrix.hpp"

namespace cremona {

/// Univariate polynomial over Q, lowest degree first, no trailing zeros.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coefficients);
    explicit RatPoly(const IntPoly& p);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<Rational>& coefficients() const noexcept { return c_; }
    Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    RatPoly monic() const;
    RatPoly derivative() const;

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws DomainError on a zero divisor.
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& quot, RatPoly& rem);

private:
    void normalize();
    std::vector<Rational> c_;
};

RatPoly operator/(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
/// Monic gcd (zero only if both are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly lcm(const RatPoly& a, const RatPoly& b);

/// Square-free decomposition: result[i] is the product of the irreducible
/// factors of multiplicity i + 1 (monic). Trailing entries are nonconstant.
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);

/// Dense rectangular matrix over Q.
class RatMatrix {
public:
    RatMatrix(std::size_t rows, std::size_t cols);
    explicit RatMatrix(const IntMatrix& m);
    static RatMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    std::vector<Rational> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Rational>& v);

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    std::size_t rank() const;
    /// Basis of {x : A x = 0} as column vectors.
    std::vector<std::vector<Rational>> nullspace() const;
    /// Some x with A x = b, or nullopt when inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
    std::optional<RatMatrix> inverse() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// p(A) v, evaluated by Horner's rule on vectors.
std::vector<Rational> apply_poly(const RatPoly& p, const RatMatrix& a, const std::vector<Rational>& v);

/// Minimal polynomial of v under A (monic).
RatPoly local_minimal_polynomial(const RatMatrix& a, const std::vector<Rational>& v);

struct FrobeniusForm {
    /// Invariant factors, largest first; each divides its predecessor.
    std::vector<RatPoly> invariant_factors;
    /// Columns form a basis in which A is block-diagonal with companion
    /// blocks (ones on the subdiagonal, last column = -coefficients).
    RatMatrix basis;
};

FrobeniusForm frobenius_form(const RatMatrix& a);

} // namespace cremona
