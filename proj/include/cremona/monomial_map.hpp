#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cremona/int_matrix.hpp"

namespace cremona {

/// The monomial birational map f_M of P^n: coordinate i is the Laurent
/// monomial prod_j x_j^{m_ij}, so composition is matrix multiplication,
/// f_M o f_N = f_{MN}. Only pure monomial maps (no torus coefficients).
class MonomialMap {
public:
    /// Throws DomainError unless M is unimodular of dimension >= 2.
    explicit MonomialMap(IntMatrix m);

    static MonomialMap identity(std::size_t n) { return MonomialMap(IntMatrix::identity(n)); }

    const IntMatrix& matrix() const noexcept { return m_; }
    std::size_t dimension() const noexcept { return m_.dim(); }
    MonomialMap inverse() const { return MonomialMap(inverse_unimodular(m_)); }

    friend bool operator==(const MonomialMap& a, const MonomialMap& b) { return a.m_ == b.m_; }

private:
    IntMatrix m_;
};

/// Parses e.g. "x*y, 1/x" or "x1*x2^-3, x2, 1/(x1*x3)". Throws ParseError on
/// bad syntax or inconsistent variables and DomainError when the exponent
/// matrix is not unimodular.
MonomialMap parse_map(std::string_view text);

/// Canonical text; parse_map(print_map(f)) == f.
std::string print_map(const MonomialMap& f);

MonomialMap compose(const MonomialMap& f, const MonomialMap& g);

/// Least k >= 1 with M^k = I, or nullopt when M has infinite order.
std::optional<unsigned long> matrix_order(const IntMatrix& m);
std::optional<unsigned long> order(const MonomialMap& f);

/// Degree of f_M as a rational self-map of P^n. The homogeneous exponent
/// vectors are v_0 = 0 and v_i = (-sum_j m_ij, m_i1, ..., m_in); after
/// subtracting their componentwise minimum they all share one coordinate sum.
Integer projective_degree(const IntMatrix& m);
Integer projective_degree(const MonomialMap& f);

} // namespace cremona
