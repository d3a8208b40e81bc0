#include "cremona/rational.hpp"

#include <utility>

#include "cremona/errors.hpp"

namespace cremona {

RatPoly::RatPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { normalize(); }

RatPoly::RatPoly(const IntPoly& p) {
    for (const auto& c : p.coefficients()) c_.emplace_back(c);
    normalize();
}

void RatPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::monic() const {
    if (c_.empty()) return {};
    std::vector<Rational> r = c_;
    Rational lead = c_.back();
    for (auto& v : r) v /= lead;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return RatPoly(std::move(d));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(r));
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& quot, RatPoly& rem) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rational> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) {
        quot = {};
        rem = a;
        return;
    }
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
    const Rational& lead = b.c_.back();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rational c = r[static_cast<std::size_t>(k + db)] / lead;
        q[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= c * b.c_[static_cast<std::size_t>(j)];
    }
    quot = RatPoly(std::move(q));
    rem = RatPoly(std::move(r));
}

RatPoly operator/(const RatPoly& a, const RatPoly& b) {
    RatPoly q, r;
    RatPoly::divmod(a, b, q, r);
    return q;
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) {
    RatPoly q, r;
    RatPoly::divmod(a, b, q, r);
    return r;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

RatPoly lcm(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return (a * b / gcd(a, b)).monic();
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
    // Yun's algorithm
    std::vector<RatPoly> out;
    if (p.degree() <= 0) return out;
    RatPoly f = p.monic();
    RatPoly fp = f.derivative();
    RatPoly a = gcd(f, fp);
    RatPoly b = f / a;
    RatPoly c = fp / a;
    RatPoly d = c - b.derivative();
    while (b.degree() > 0) {
        RatPoly g = gcd(b, d);
        out.push_back(g);
        b = b / g;
        c = d / g;
        d = c - b.derivative();
    }
    while (!out.empty() && out.back().degree() == 0) out.pop_back();
    return out;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.dim(), m.dim()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Rational> RatMatrix::column(std::size_t j) const {
    std::vector<Rational> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void RatMatrix::set_column(std::size_t j, const std::vector<Rational>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("dimension mismatch in rational matrix product");
    RatMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    std::vector<Rational> r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t col_limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Rational inv = 1 / m(row, col);
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0) continue;
            Rational f = m(i, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t RatMatrix::rank() const {
    RatMatrix m = *this;
    return rref(m, cols_).size();
}

std::vector<std::vector<Rational>> RatMatrix::nullspace() const {
    RatMatrix m = *this;
    auto pivots = rref(m, cols_);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols_, 0);
        x[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -m(i, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> RatMatrix::solve(const std::vector<Rational>& b) const {
    RatMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[i];
    }
    auto pivots = rref(aug, cols_ + 1);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Rational> x(cols_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
    return x;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug, n);
    if (pivots.size() != n) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<Rational> apply_poly(const RatPoly& p, const RatMatrix& a, const std::vector<Rational>& v) {
    std::vector<Rational> acc(v.size(), 0);
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = a.apply(acc);
        for (std::size_t i = 0; i < v.size(); ++i) acc[i] += *it * v[i];
    }
    return acc;
}

RatPoly local_minimal_polynomial(const RatMatrix& a, const std::vector<Rational>& v) {
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> krylov{v};
    while (true) {
        std::vector<Rational> next = a.apply(krylov.back());
        RatMatrix k(n, krylov.size());
        for (std::size_t j = 0; j < krylov.size(); ++j) k.set_column(j, krylov[j]);
        if (auto coeffs = k.solve(next)) {
            // A^d v = sum c_i A^i v  =>  t^d - sum c_i t^i
            std::vector<Rational> p(krylov.size() + 1, 0);
            for (std::size_t i = 0; i < krylov.size(); ++i) p[i] = -(*coeffs)[i];
            p.back() = 1;
            return RatPoly(std::move(p));
        }
        krylov.push_back(std::move(next));
    }
}

namespace {

std::vector<Rational> unit_vector(std::size_t n, std::size_t i) {
    std::vector<Rational> e(n, 0);
    e[i] = 1;
    return e;
}

// A vector whose local minimal polynomial equals the minimal polynomial of A.
std::pair<std::vector<Rational>, RatPoly> maximal_vector(const RatMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rational> v = unit_vector(n, 0);
    RatPoly f = local_minimal_polynomial(a, v);
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<Rational> e = unit_vector(n, i);
        RatPoly g = local_minimal_polynomial(a, e);
        if ((f % g).is_zero()) continue;
        // split lcm(f, g) = f1 * g1 with f1 | f, g1 | g, gcd(f1, g1) = 1
        RatPoly f1 = f;
        RatPoly g1 = g / gcd(f, g);
        while (true) {
            RatPoly h = gcd(f1, g1);
            if (h.degree() == 0) break;
            f1 = f1 / h;
            g1 = g1 * h;
        }
        std::vector<Rational> u = apply_poly(f / f1, a, v);
        std::vector<Rational> w = apply_poly(g / g1, a, e);
        for (std::size_t j = 0; j < n; ++j) u[j] += w[j];
        v = std::move(u);
        f = (f1 * g1).monic();
    }
    return {v, f};
}

} // namespace

FrobeniusForm frobenius_form(const RatMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0) return {{}, RatMatrix(0, 0)};
    auto [v, f] = maximal_vector(a);
    const std::size_t d = static_cast<std::size_t>(f.degree());

    RatMatrix krylov(n, d);
    std::vector<Rational> cur = v;
    for (std::size_t j = 0; j < d; ++j) {
        krylov.set_column(j, cur);
        cur = a.apply(cur);
    }
    if (d == n) return {{f}, krylov};

    // Covector w with w A^i v = 0 (i < d-1) and w A^{d-1} v = 1; the common
    // kernel of w, wA, ..., wA^{d-1} is an A-invariant complement.
    RatMatrix kt(d, n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < n; ++j) kt(i, j) = krylov(j, i);
    std::vector<Rational> rhs(d, 0);
    rhs[d - 1] = 1;
    auto w = kt.solve(rhs);
    if (!w) throw DomainError("internal: Krylov basis is not of full rank");

    RatMatrix phi(d, n);
    std::vector<Rational> row = *w;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < n; ++j) phi(i, j) = row[j];
        // row <- row * A
        std::vector<Rational> next(n, 0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) next[j] += row[k] * a(k, j);
        row = std::move(next);
    }
    auto comp = phi.nullspace();
    const std::size_t m = comp.size();
    RatMatrix c(n, m);
    for (std::size_t j = 0; j < m; ++j) c.set_column(j, comp[j]);

    RatMatrix restricted(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        auto x = c.solve(a.apply(comp[j]));
        if (!x) throw DomainError("internal: complement is not invariant");
        for (std::size_t i = 0; i < m; ++i) restricted(i, j) = (*x)[i];
    }
    FrobeniusForm sub = frobenius_form(restricted);
    RatMatrix lifted = c * sub.basis;

    FrobeniusForm out{{f}, RatMatrix(n, n)};
    for (std::size_t j = 0; j < d; ++j) out.basis.set_column(j, krylov.column(j));
    for (std::size_t j = 0; j < m; ++j) out.basis.set_column(d + j, lifted.column(j));
    for (auto& g : sub.invariant_factors) out.invariant_factors.push_back(std::move(g));
    return out;
}

} // namespace cremona
