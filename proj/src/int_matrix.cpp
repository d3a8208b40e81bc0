#include "cremona/int_matrix.hpp"

#include <cctype>
#include <sstream>
#include <utility>

#include "cremona/errors.hpp"

namespace cremona {

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {
    if (n == 0) throw DomainError("matrix dimension must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) : IntMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_) throw DomainError("matrix literal is not square");
        std::size_t j = 0;
        for (long v : row) (*this)(i, j++) = v;
        ++i;
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    if (rows.empty()) throw DomainError("matrix must have at least one row");
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw DomainError("matrix is not square: row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " + std::to_string(rows.size()));
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<std::vector<Integer>> IntMatrix::rows() const {
    std::vector<std::vector<Integer>> r(n_, std::vector<Integer>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r[i][j] = (*this)(i, j);
    return r;
}

Integer IntMatrix::trace() const {
    Integer t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::power(unsigned long k) const {
    IntMatrix result = identity(n_);
    IntMatrix base = *this;
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

bool IntMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Integer IntMatrix::content() const {
    Integer g = 0;
    for (const auto& v : a_) g = gcd(g, v);
    return g;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw DomainError("dimension mismatch in matrix sum");
    IntMatrix r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw DomainError("dimension mismatch in matrix difference");
    IntMatrix r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
}

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = -a.a_[i];
    return r;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw DomainError("dimension mismatch in matrix product");
    const std::size_t n = a.n_;
    IntMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

IntMatrix operator*(const Integer& c, const IntMatrix& a) {
    IntMatrix r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = c * a.a_[i];
    return r;
}

std::string integer_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_str();
    return "\"" + v.get_str() + "\"";
}

std::string IntMatrix::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += "[";
        for (std::size_t j = 0; j < n_; ++j) {
            if (j) s += ",";
            s += integer_json((*this)(i, j));
        }
        s += "]";
    }
    return s + "]";
}

Integer det(const IntMatrix& a) {
    const std::size_t n = a.dim();
    IntMatrix m = a;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(v);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

IntPoly char_poly(const IntMatrix& a) {
    const std::size_t n = a.dim();
    std::vector<Integer> c(n + 1, 0);
    c[n] = 1;
    IntMatrix mk = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = a * mk;
        Integer tr = am.trace();
        // exact: tr(A M_k) is divisible by k
        mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), k);
        c[n - k] = -tr;
        if (k < n) {
            for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
            mk = std::move(am);
        }
    }
    return IntPoly(std::move(c));
}

std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return out;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

IntMatrix exterior_power(const IntMatrix& a, std::size_t k) {
    const std::size_t n = a.dim();
    if (k < 1 || k > n)
        throw DomainError("exterior power degree " + std::to_string(k) + " out of range 1.." + std::to_string(n));
    auto subsets = index_subsets(n, k);
    IntMatrix out(subsets.size());
    IntMatrix minor(k);
    for (std::size_t r = 0; r < subsets.size(); ++r)
        for (std::size_t c = 0; c < subsets.size(); ++c) {
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) minor(i, j) = a(subsets[r][i], subsets[c][j]);
            out(r, c) = det(minor);
        }
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < m.dim(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m.dim(); ++r) std::swap(m(r, i), m(r, j));
}

// rows (i, j) <- [[x, y], [u, v]] * rows (i, j)
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& x, const Integer& y, const Integer& u,
                  const Integer& v) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
        Integer ri = x * m(i, c) + y * m(j, c);
        Integer rj = u * m(i, c) + v * m(j, c);
        m(i, c) = std::move(ri);
        m(j, c) = std::move(rj);
    }
}

// cols (i, j) <- cols (i, j) * [[x, u], [y, v]]
void combine_cols(IntMatrix& m, std::size_t i, std::size_t j, const Integer& x, const Integer& y, const Integer& u,
                  const Integer& v) {
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Integer ci = x * m(r, i) + y * m(r, j);
        Integer cj = u * m(r, i) + v * m(r, j);
        m(r, i) = std::move(ci);
        m(r, j) = std::move(cj);
    }
}

struct Bezout {
    Integer g, x, y;
};

Bezout bezout(const Integer& a, const Integer& b) {
    Bezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t n = a.dim();
    IntMatrix d = a;
    IntMatrix left = IntMatrix::identity(n);
    IntMatrix right = IntMatrix::identity(n);

    for (std::size_t t = 0; t < n; ++t) {
        std::size_t pi = n, pj = n;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (d(i, j) != 0 && (pi == n || abs(d(i, j)) < abs(d(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == n) break;
        swap_rows(d, t, pi);
        swap_rows(left, t, pi);
        swap_cols(d, t, pj);
        swap_cols(right, t, pj);

        while (true) {
            for (std::size_t i = t + 1; i < n; ++i) {
                if (d(i, t) == 0) continue;
                Integer a0 = d(t, t), b0 = d(i, t);
                if (b0 % a0 == 0) {
                    Integer q = b0 / a0;
                    combine_rows(d, t, i, 1, 0, -q, 1);
                    combine_rows(left, t, i, 1, 0, -q, 1);
                } else {
                    auto [g, x, y] = bezout(a0, b0);
                    Integer u = -b0 / g, v = a0 / g;
                    combine_rows(d, t, i, x, y, u, v);
                    combine_rows(left, t, i, x, y, u, v);
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Integer a0 = d(t, t), b0 = d(t, j);
                if (b0 % a0 == 0) {
                    Integer q = b0 / a0;
                    combine_cols(d, t, j, 1, 0, -q, 1);
                    combine_cols(right, t, j, 1, 0, -q, 1);
                } else {
                    auto [g, x, y] = bezout(a0, b0);
                    Integer u = -b0 / g, v = a0 / g;
                    combine_cols(d, t, j, x, y, u, v);
                    combine_cols(right, t, j, x, y, u, v);
                }
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < n && clean; ++i)
                if (d(i, t) != 0) clean = false;
            if (!clean) continue;
            // divisibility chain: fold an offending row into the pivot row
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            combine_rows(d, t, bad, 1, 1, 0, 1);
            combine_rows(left, t, bad, 1, 1, 0, 1);
        }
        if (d(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c) {
                d(t, c) = -d(t, c);
                left(t, c) = -left(t, c);
            }
        }
    }

    SmithForm out{{}, std::move(left), std::move(right)};
    out.diagonal.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.diagonal.push_back(d(i, i));
    return out;
}

bool is_unimodular(const IntMatrix& a) {
    Integer d = det(a);
    return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    const std::size_t n = a.dim();
    Integer d = det(a);
    if (d != 1 && d != -1) throw DomainError("matrix is not unimodular (det " + d.get_str() + ")");
    if (n == 1) return IntMatrix{{d.get_si()}};
    IntMatrix inv(n);
    IntMatrix minor(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc++) = a(r, c);
                }
                ++mr;
            }
            Integer cof = det(minor);
            if ((i + j) % 2) cof = -cof;
            inv(j, i) = cof * d;
        }
    return inv;
}

namespace {

class MatrixParser {
public:
    explicit MatrixParser(std::string_view s) : s_(s) {}

    IntMatrix parse() {
        std::vector<std::vector<Integer>> rows;
        expect('[');
        skip_ws();
        if (peek() == ']') throw ParseError("empty matrix", pos_);
        while (true) {
            rows.push_back(parse_row());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            break;
        }
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("trailing characters after matrix", pos_);
        try {
            return IntMatrix::from_rows(rows);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }

private:
    std::vector<Integer> parse_row() {
        std::vector<Integer> row;
        expect('[');
        skip_ws();
        if (peek() == ']') throw ParseError("empty matrix row", pos_);
        while (true) {
            row.push_back(parse_integer());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            return row;
        }
    }

    Integer parse_integer() {
        skip_ws();
        bool quoted = false;
        if (peek() == '"') {
            quoted = true;
            ++pos_;
        }
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError("expected integer", start);
        Integer v(std::string(s_.substr(start, pos_ - start)));
        if (quoted) expect_raw('"');
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void expect(char c) {
        skip_ws();
        expect_raw(c);
    }
    void expect_raw(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

IntMatrix parse_matrix(std::string_view text) { return MatrixParser(text).parse(); }

} // namespace cremona
