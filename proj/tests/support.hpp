#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "cremona/int_matrix.hpp"

namespace testing {

using cremona::Integer;
using cremona::IntMatrix;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20261016);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// Leibniz expansion over all permutations.
inline Integer leibniz_det(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Integer total = 0;
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) sign = -sign;
        Integer term = sign;
        for (std::size_t i = 0; i < n; ++i) term *= a(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline IntMatrix submatrix(const IntMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    IntMatrix s(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
    return s;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(k), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

// Coefficients of det(tI - A), lowest first: c_{n-k} = (-1)^k * sum of principal k-minors.
inline std::vector<Integer> minors_char_poly(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Integer s = 0;
        for (const auto& rows : subsets(n, k)) s += leibniz_det(submatrix(a, rows, rows));
        c[n - k] = (k % 2 ? -1 : 1) * s;
    }
    return c;
}

// Smith diagonal from determinantal divisors d_k = gcd of all k x k minors.
inline std::vector<Integer> determinantal_smith(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Integer> dk(n + 1);
    dk[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Integer g = 0;
        for (const auto& r : subsets(n, k))
            for (const auto& c : subsets(n, k)) g = gcd(g, leibniz_det(submatrix(a, r, c)));
        dk[k] = g;
    }
    std::vector<Integer> out;
    for (std::size_t k = 1; k <= n; ++k) out.push_back(dk[k] == 0 ? Integer(0) : Integer(dk[k] / dk[k - 1]));
    return out;
}

inline IntMatrix random_matrix(std::size_t n, long lo, long hi) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(lo, hi);
    return m;
}

// Word of length <= len in the SL(2,Z) generators.
inline IntMatrix random_sl2_word(int len) {
    static const IntMatrix gens[] = {{{1, 1}, {0, 1}}, {{1, -1}, {0, 1}}, {{0, -1}, {1, 0}}, {{1, 0}, {1, 1}}};
    IntMatrix p = IntMatrix::identity(2);
    const long steps = uniform(0, len);
    for (long i = 0; i < steps; ++i) p = p * gens[uniform(0, 3)];
    return p;
}

// Product of <= count elementary transvections I + c E_ij, c in {-1, 1}, with
// an occasional sign flip of a row.
inline IntMatrix random_unimodular(std::size_t n, int count, bool allow_det_minus_one = true) {
    IntMatrix p = IntMatrix::identity(n);
    const long steps = uniform(1, count);
    for (long s = 0; s < steps; ++s) {
        std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
        std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        IntMatrix e = IntMatrix::identity(n);
        e(i, j) = uniform(0, 1) ? 1 : -1;
        p = p * e;
    }
    if (allow_det_minus_one && uniform(0, 3) == 0) {
        IntMatrix f = IntMatrix::identity(n);
        f(0, 0) = -1;
        p = f * p;
    }
    return p;
}

inline IntMatrix random_hyperbolic(int len) {
    for (;;) {
        IntMatrix m = random_sl2_word(len);
        if (abs(m.trace()) > 2) return m;
    }
}

// Every unimodular P with entries in [-r, r] and P M = N P.
inline std::vector<IntMatrix> brute_conjugators(const IntMatrix& m, const IntMatrix& n, long r) {
    std::vector<IntMatrix> out;
    for (long a = -r; a <= r; ++a)
        for (long b = -r; b <= r; ++b)
            for (long c = -r; c <= r; ++c)
                for (long d = -r; d <= r; ++d) {
                    const long dt = a * d - b * c;
                    if (dt != 1 && dt != -1) continue;
                    IntMatrix p{{a, b}, {c, d}};
                    if (p * m == n * p) out.push_back(p);
                }
    return out;
}

} // namespace testing
