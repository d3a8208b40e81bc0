#include "cremona/sl2.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "cremona/errors.hpp"
#include "cremona/gln.hpp"
#include "cremona/monomial_map.hpp"

namespace cremona::sl2 {

namespace {

IntMatrix mat2(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    IntMatrix m(2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

Integer det2(const IntMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// Inverse of a 2x2 matrix with det +-1.
IntMatrix inv2(const IntMatrix& m) {
    Integer d = det2(m);
    return mat2(m(1, 1) * d, -m(0, 1) * d, -m(1, 0) * d, m(0, 0) * d);
}

IntMatrix conj(const IntMatrix& t, const IntMatrix& x) { return t * x * inv2(t); }

IntMatrix a_block(const Integer& a) { return mat2(0, 1, 1, a); }

IntMatrix a_block_inv(const Integer& a) { return mat2(-a, 1, 1, 0); }

void require_2x2(const IntMatrix& m) {
    if (m.dim() != 2) throw DomainError("expected a 2x2 matrix");
}

void require_unimodular(const IntMatrix& m) {
    require_2x2(m);
    Integer d = det2(m);
    if (d != 1 && d != -1) throw DomainError("matrix is not unimodular");
}

bool is_one_lambda(const LLSPeriod& s) { return s.size() == 2 && s.entries()[0] == 1; }

// W with W * realize(s) * W^{-1} == A(a_1) ... A(a_2n).
IntMatrix product_form(const LLSPeriod& s) {
    return is_one_lambda(s) ? mat2(1, 1, 0, 1) : IntMatrix::identity(2);
}

std::size_t bit_size(const IntMatrix& m) {
    std::size_t bits = 1;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            bits = std::max(bits, mpz_sizeinbase(m(i, j).get_mpz_t(), 2));
    return bits;
}

int trace_sign(const IntMatrix& m) { return sgn(m.trace()); }

// G with G * M * G^{-1} equal to the representative for its trace.
IntMatrix elliptic_normalizer(const IntMatrix& m) {
    IntMatrix x = m;
    IntMatrix c = IntMatrix::identity(2);
    const IntMatrix s = mat2(0, -1, 1, 0);
    for (;;) {
        const Integer q = x(1, 0);
        if (q == 0) throw std::logic_error("elliptic matrix became triangular");
        Integer k;
        mpz_fdiv_q(k.get_mpz_t(), Integer(-x(0, 0)).get_mpz_t(), q.get_mpz_t());
        if (abs(x(0, 0) + (k + 1) * q) < abs(x(0, 0) + k * q)) k += 1;
        const IntMatrix u = mat2(1, k, 0, 1);
        x = conj(u, x);
        c = u * c;
        if (abs(x(0, 1)) >= abs(x(1, 0))) break;
        x = conj(s, x);
        c = s * c;
    }
    const IntMatrix rep = complex_representative(static_cast<int>(x.trace().get_si()));
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long cc = -2; cc <= 2; ++cc)
                for (long d = -2; d <= 2; ++d) {
                    long dt = a * d - b * cc;
                    if (dt != 1 && dt != -1) continue;
                    IntMatrix g = mat2(a, b, cc, d);
                    if (g * x == rep * g) return g * c;
                }
    throw std::logic_error("no small conjugator to the elliptic representative");
}

// G with G * M * G^{-1} == eps*I + n*E12, n >= 0.
IntMatrix parabolic_normalizer(const IntMatrix& m, int eps) {
    IntMatrix u = m - Integer(eps) * IntMatrix::identity(2);
    if (u.content() == 0) return IntMatrix::identity(2);
    Integer a1 = u(0, 0), a2 = u(1, 0);
    if (a1 == 0 && a2 == 0) {
        a1 = u(0, 1);
        a2 = u(1, 1);
    }
    Integer g = gcd(a1, a2);
    a1 /= g;
    a2 /= g;
    Integer gg, x, y;
    mpz_gcdext(gg.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a1.get_mpz_t(), a2.get_mpz_t());
    if (gg < 0) {
        x = -x;
        y = -y;
    }
    IntMatrix t = mat2(x, y, -a2, a1);
    IntMatrix w = conj(t, m);
    if (w(0, 1) < 0) t = mat2(1, 0, 0, -1) * t;
    return t;
}

std::string seq_text(const std::vector<Integer>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

} // namespace

LLSPeriod::LLSPeriod(std::vector<Integer> entries) : entries_(std::move(entries)) {
    if (entries_.empty() || entries_.size() % 2 != 0)
        throw DomainError("LLS period must have positive even length");
    for (const auto& e : entries_)
        if (e < 1) throw DomainError("LLS period entries must be positive");
}

LLSPeriod::LLSPeriod(std::initializer_list<long> entries)
    : LLSPeriod(std::vector<Integer>(entries.begin(), entries.end())) {}

LLSPeriod LLSPeriod::rotated(std::size_t k) const {
    std::vector<Integer> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = entries_[(i + k) % entries_.size()];
    return LLSPeriod(std::move(out));
}

LLSPeriod LLSPeriod::minimal_period() const {
    const std::size_t n = entries_.size();
    for (std::size_t d = 2; d < n; d += 2) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = entries_[i] == entries_[i - d];
        if (ok) return LLSPeriod(std::vector<Integer>(entries_.begin(), entries_.begin() + d));
    }
    return *this;
}

long LLSPeriod::rotation_to(const LLSPeriod& other) const {
    const std::size_t n = entries_.size();
    if (other.entries_.size() != n) return -1;
    for (std::size_t k = 0; k < n; ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = entries_[(i + k) % n] == other.entries_[i];
        if (ok) return static_cast<long>(k);
    }
    return -1;
}

std::string LLSPeriod::to_string() const { return seq_text(entries_); }

std::string class_name(const SpectrumClass& c) {
    switch (c.index()) {
    case 0: return "complex_spectrum";
    case 1: return "double_root";
    case 2: return "real_spectrum";
    default: return "det_minus_one";
    }
}

Rational cf_eval(const CFExpansion& e) {
    if (e.terms.empty()) throw DomainError("empty continued fraction");
    Rational v = e.terms.back();
    for (std::size_t i = e.terms.size() - 1; i-- > 0;) {
        if (v == 0) throw DomainError("zero denominator in continued fraction");
        v = Rational(e.terms[i]) + 1 / v;
    }
    return v;
}

std::vector<Integer> cf_expand_odd(const Rational& value) {
    Integer q = value.get_num(), p = value.get_den();
    if (!(q > p)) throw DomainError("cf_expand_odd needs q > p >= 1");
    std::vector<Integer> t;
    while (p != 0) {
        Integer a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        t.push_back(a);
        q = p;
        p = r;
    }
    if (t.size() % 2 == 0) {
        if (t.back() >= 2) {
            t.back() -= 1;
            t.push_back(1);
        } else {
            t.pop_back();
            t.back() += 1;
        }
    }
    return t;
}

bool is_reduced(const IntMatrix& m) {
    if (m.dim() != 2 || det2(m) != 1) return false;
    return m(1, 1) > m(1, 0) && m(1, 0) > m(0, 0) && m(0, 0) >= 0;
}

IntMatrix complex_representative(int trace) {
    switch (trace) {
    case 1: return IntMatrix{{1, 1}, {-1, 0}};
    case 0: return IntMatrix{{0, 1}, {-1, 0}};
    case -1: return IntMatrix{{0, 1}, {-1, -1}};
    default: throw DomainError("no complex-spectrum representative for this trace");
    }
}

SpectrumClass classify(const IntMatrix& m) {
    require_unimodular(m);
    if (det2(m) == -1) return DetMinusOne{char_poly(m)};
    const Integer t = m.trace();
    const Integer disc = t * t - 4;
    if (disc < 0) {
        const int tr = static_cast<int>(t.get_si());
        const unsigned ord = tr == 1 ? 6 : tr == 0 ? 4 : 3;
        return ComplexSpectrum{complex_representative(tr), ord};
    }
    if (disc == 0) {
        const int eps = t > 0 ? 1 : -1;
        return DoubleRoot{eps, (m - Integer(eps) * IntMatrix::identity(2)).content()};
    }
    return RealSpectrum{trace_sign(m), lls_period(m)};
}

ReducedForm reduce(const IntMatrix& m) {
    require_2x2(m);
    if (det2(m) != 1) throw DomainError("reduce needs det 1");
    const Integer t = m.trace();
    if (t * t - 4 < 0) throw DomainError("reduce needs a real spectrum (matrix has complex eigenvalues)");
    if (t * t - 4 == 0) throw DomainError("reduce needs an irreducible characteristic polynomial (double root)");

    IntMatrix x = m;
    IntMatrix c = IntMatrix::identity(2);
    int sign = 1;
    const std::size_t cap = 64 * bit_size(m);
    std::size_t iterations = 0;

    for (bool finished = false; !finished;) {
        if (++iterations > cap) throw CapExceeded("reduction exceeded its iteration cap");
        // Step 1
        if (x(1, 0) == 0) throw std::logic_error("reduction reached a triangular matrix");
        if (x(1, 0) < 0) {
            x = -x;
            sign = -sign;
        }
        // Step 2
        Integer k;
        mpz_fdiv_q(k.get_mpz_t(), x(0, 0).get_mpz_t(), x(1, 0).get_mpz_t());
        const IntMatrix u = mat2(1, -k, 0, 1);
        x = conj(u, x);
        c = u * c;
        for (;;) {
            const Integer q = x(1, 0);
            const Integer s = x(1, 1);
            if (q == 1) {
                // Step 3.1
                if (s < 0) {
                    const IntMatrix j = mat2(1, 0, 0, -1);
                    x = -conj(j, x);
                    sign = -sign;
                    c = j * c;
                }
                finished = true;
                break;
            }
            if (s > q) { // Step 3.2.1
                finished = true;
                break;
            }
            if (s < -q) { // Step 3.2.2
                const IntMatrix tt = mat2(-1, 1, 0, 1);
                x = -conj(tt, x);
                sign = -sign;
                c = tt * c;
                continue;
            }
            // Step 3.2.3
            const IntMatrix w = mat2(0, -1, -1, 0);
            x = conj(w, x);
            c = w * c;
            break;
        }
    }
    if (det2(c) == -1) {
        const LLSPeriod a = lls_of_reduced(x);
        const IntMatrix g = rotation_conjugator(a, 1);
        x = conj(g, x);
        c = g * c;
    }
    const IntMatrix sm = Integer(sign) * m;
    if (det2(c) != 1 || c * sm != x * c || !is_reduced(x))
        throw std::logic_error("reduction certificate failed verification");
    if (sign != trace_sign(m)) throw std::logic_error("reduction sign disagrees with the trace");
    return ReducedForm{x, sign, c};
}

LLSPeriod lls_of_reduced(const IntMatrix& r) {
    if (!is_reduced(r)) throw DomainError("matrix is not reduced");
    const Integer& p = r(0, 0);
    const Integer& q = r(1, 0);
    const Integer& s = r(1, 1);
    if (p == 0) return LLSPeriod(std::vector<Integer>{1, s - 2});
    std::vector<Integer> seq = cf_expand_odd(Rational(q, p));
    Integer lambda;
    mpz_fdiv_q(lambda.get_mpz_t(), Integer(s - 1).get_mpz_t(), q.get_mpz_t());
    seq.push_back(lambda);
    return LLSPeriod(std::move(seq));
}

LLSPeriod lls_period(const IntMatrix& m) { return lls_of_reduced(reduce(m).reduced); }

IntMatrix realize(const LLSPeriod& seq) {
    if (is_one_lambda(seq)) return mat2(0, -1, 1, seq.entries()[1] + 2);
    IntMatrix p = IntMatrix::identity(2);
    for (const auto& a : seq.entries()) p = p * a_block(a);
    return p;
}

IntMatrix rotation_conjugator(const LLSPeriod& seq, std::size_t k) {
    k %= seq.size();
    const LLSPeriod rot = seq.rotated(k);
    IntMatrix head_inv = IntMatrix::identity(2);
    for (std::size_t i = 0; i < k; ++i) head_inv = a_block_inv(seq.entries()[i]) * head_inv;
    return inv2(product_form(rot)) * head_inv * product_form(seq);
}

std::vector<IntMatrix> enumerate_reduced(const IntMatrix& m) {
    const LLSPeriod lls = lls_period(m);
    const std::size_t d = lls.minimal_period().size();
    std::vector<IntMatrix> out;
    out.reserve(d);
    for (std::size_t k = 0; k < d; ++k) out.push_back(realize(lls.rotated(k)));
    return out;
}

namespace {

// Certificate for sign-matched real-spectrum det-1 matrices, if SL-conjugate
// after the reduced forms are aligned by a rotation.
std::optional<IntMatrix> real_certificate(const ReducedForm& rm, const ReducedForm& rn) {
    const LLSPeriod lm = lls_of_reduced(rm.reduced);
    const LLSPeriod ln = lls_of_reduced(rn.reduced);
    const long k = lm.rotation_to(ln);
    if (k < 0) return std::nullopt;
    const IntMatrix g = rotation_conjugator(lm, static_cast<std::size_t>(k));
    return inv2(rn.conjugator) * g * rm.conjugator;
}

} // namespace

ConjugacyVerdict conjugate_2x2(const IntMatrix& m, const IntMatrix& n) {
    require_unimodular(m);
    require_unimodular(n);
    const Integer dm = det2(m), dn = det2(n);
    if (dm != dn) return NotConjugate{"det " + dm.get_str() + " vs " + dn.get_str()};
    if (dm == -1) return gln::generic_conjugacy(m, n, 30);

    const SpectrumClass cm = classify(m);
    const SpectrumClass cn = classify(n);
    if (cm.index() != cn.index())
        return NotConjugate{"class " + class_name(cm) + " vs " + class_name(cn)};

    std::optional<IntMatrix> cert;
    if (const auto* a = std::get_if<ComplexSpectrum>(&cm)) {
        const auto& b = std::get<ComplexSpectrum>(cn);
        if (!(a->representative == b.representative))
            return NotConjugate{"complex-spectrum representative " + a->representative.to_string() + " vs " +
                                b.representative.to_string()};
        cert = inv2(elliptic_normalizer(n)) * elliptic_normalizer(m);
    } else if (const auto* a = std::get_if<DoubleRoot>(&cm)) {
        const auto& b = std::get<DoubleRoot>(cn);
        if (a->root_sign != b.root_sign)
            return NotConjugate{"double root " + std::to_string(a->root_sign) + " vs " + std::to_string(b.root_sign)};
        if (a->n != b.n) return NotConjugate{"double-root index n " + a->n.get_str() + " vs " + b.n.get_str()};
        cert = inv2(parabolic_normalizer(n, b.root_sign)) * parabolic_normalizer(m, a->root_sign);
    } else {
        const auto& ra = std::get<RealSpectrum>(cm);
        const auto& rb = std::get<RealSpectrum>(cn);
        if (ra.eig_sign != rb.eig_sign)
            return NotConjugate{"eigenvalue sign " + std::to_string(ra.eig_sign) + " vs " + std::to_string(rb.eig_sign)};
        const ReducedForm rm = reduce(m);
        const ReducedForm rn = reduce(n);
        cert = real_certificate(rm, rn);
        if (!cert) {
            const IntMatrix j = mat2(1, 0, 0, -1);
            const IntMatrix mt = conj(j, m);
            const ReducedForm rt = reduce(mt);
            if (auto c = real_certificate(rt, rn)) cert = *c * j;
            else
                return NotConjugate{"lls " + ra.lls.to_string() + " vs " + rb.lls.to_string() + "; twisted lls " +
                                    lls_of_reduced(rt.reduced).to_string() + " vs " + rb.lls.to_string()};
        }
    }
    if (!verify_certificate(m, n, *cert)) throw std::logic_error("2x2 certificate failed verification");
    return Conjugate{*cert};
}

} // namespace cremona::sl2
