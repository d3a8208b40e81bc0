#include "cremona/lattice.hpp"

#include <utility>

namespace cremona {

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
    const std::size_t n = a.dim();
    SmithForm snf = smith_normal_form(a);
    std::size_t rank = 0;
    while (rank < n && snf.diagonal[rank] != 0) ++rank;
    std::vector<IntVector> basis;
    for (std::size_t j = rank; j < n; ++j) {
        IntVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = snf.right(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

void lll_reduce(std::vector<IntVector>& basis) {
    const std::size_t k = basis.size();
    if (k < 2) return;
    const std::size_t dim = basis[0].size();
    const Rational delta(3, 4);

    std::vector<std::vector<Rational>> b(k, std::vector<Rational>(dim));
    std::vector<std::vector<Rational>> gs(k);
    std::vector<std::vector<Rational>> mu(k, std::vector<Rational>(k, 0));
    std::vector<Rational> norm(k);

    auto to_rat = [&](std::size_t i) {
        for (std::size_t j = 0; j < dim; ++j) b[i][j] = basis[i][j];
    };
    auto gram_schmidt = [&]() {
        for (std::size_t i = 0; i < k; ++i) {
            gs[i] = b[i];
            for (std::size_t j = 0; j < i; ++j) {
                mu[i][j] = dot(b[i], gs[j]) / norm[j];
                for (std::size_t t = 0; t < dim; ++t) gs[i][t] -= mu[i][j] * gs[j][t];
            }
            norm[i] = dot(gs[i], gs[i]);
        }
    };
    for (std::size_t i = 0; i < k; ++i) to_rat(i);
    gram_schmidt();

    std::size_t i = 1;
    while (i < k) {
        for (std::size_t jj = i; jj-- > 0;) {
            Rational m = mu[i][jj];
            // round to nearest integer
            Integer q = m.get_num() * 2 + m.get_den();
            Integer den = m.get_den() * 2;
            mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), den.get_mpz_t());
            if (q == 0) continue;
            for (std::size_t t = 0; t < dim; ++t) basis[i][t] -= q * basis[jj][t];
            to_rat(i);
            for (std::size_t t = 0; t < jj; ++t) mu[i][t] -= q * mu[jj][t];
            mu[i][jj] -= q;
        }
        if (norm[i] >= (delta - mu[i][i - 1] * mu[i][i - 1]) * norm[i - 1]) {
            ++i;
        } else {
            std::swap(basis[i], basis[i - 1]);
            to_rat(i);
            to_rat(i - 1);
            gram_schmidt();
            i = i > 1 ? i - 1 : 1;
        }
    }
}

} // namespace cremona
