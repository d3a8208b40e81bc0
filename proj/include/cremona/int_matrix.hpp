#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/int_poly.hpp"

namespace cremona {

/// Square matrix of arbitrary-precision integers. Entry (i, j) is row i,
/// column j. All arithmetic is exact.
class IntMatrix {
public:
    /// Zero matrix of dimension n (n >= 1).
    explicit IntMatrix(std::size_t n);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    /// Throws DomainError unless rows form a nonempty square array.
    static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t dim() const noexcept { return n_; }

    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

    std::vector<std::vector<Integer>> rows() const;

    Integer trace() const;
    IntMatrix transpose() const;
    IntMatrix power(unsigned long k) const;
    bool is_identity() const;
    /// gcd of all entries (0 for the zero matrix).
    Integer content() const;

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const Integer& c, const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

    /// JSON array-of-arrays text, e.g. "[[7,18],[5,13]]".
    std::string to_string() const;

private:
    std::size_t n_;
    std::vector<Integer> a_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& a);

/// Monic det(tI - A), computed by Faddeev-LeVerrier with exact integer division.
IntPoly char_poly(const IntMatrix& a);

/// k-th exterior power: the C(n,k) x C(n,k) matrix of k x k minors. Row and
/// column index subsets are sorted and ordered lexicographically.
IntMatrix exterior_power(const IntMatrix& a, std::size_t k);

/// Sorted k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k);

struct SmithForm {
    /// d_1 | d_2 | ... | d_n, nonnegative, zeros last.
    std::vector<Integer> diagonal;
    /// Unimodular transforms with left * A * right == diag(diagonal).
    IntMatrix left;
    IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& a);

bool is_unimodular(const IntMatrix& a);

/// Inverse of a unimodular matrix (adjugate times det). Throws DomainError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Parses the JSON matrix format. Integers may be written bare or as quoted
/// decimal strings; any precision is accepted.
IntMatrix parse_matrix(std::string_view text);

/// Integer as a JSON token: a bare number when it fits in int64, else a quoted string.
std::string integer_json(const Integer& v);

} // namespace cremona
