#include "cremona/gln.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "cremona/errors.hpp"
#include "cremona/lattice.hpp"
#include "cremona/sl2.hpp"

namespace cremona::gln {

namespace {

void require_pair(const IntMatrix& m, const IntMatrix& n) {
    if (m.dim() != n.dim()) throw DomainError("matrices have different dimensions");
    if (!is_unimodular(m) || !is_unimodular(n)) throw DomainError("matrix is not unimodular");
}

std::string diag_text(const std::vector<Integer>& d) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i].get_str();
    os << ')';
    return os.str();
}

std::string factors_text(const std::vector<RatPoly>& fs) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<Integer> c;
        for (const auto& q : fs[i].coefficients()) c.push_back(q.get_num());
        os << (i ? ", " : "") << IntPoly(c).to_string();
    }
    os << ']';
    return os.str();
}

IntMatrix shifted(const IntMatrix& m, long k) { return m - Integer(k) * IntMatrix::identity(m.dim()); }

} // namespace

SolutionLattice solution_lattice(const IntMatrix& m, const IntMatrix& n) {
    if (m.dim() != n.dim()) throw DomainError("matrices have different dimensions");
    const std::size_t d = m.dim();
    IntMatrix rel(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                rel(i * d + j, i * d + k) += m(k, j);
                rel(i * d + j, k * d + j) -= n(i, k);
            }
    std::vector<IntVector> kernel = integer_kernel(rel);
    if (!kernel.empty()) lll_reduce(kernel);
    SolutionLattice out;
    out.rank = kernel.size();
    for (const auto& v : kernel) {
        IntMatrix x(d);
        for (std::size_t i = 0; i < d * d; ++i) x(i / d, i % d) = v[i];
        out.basis.push_back(std::move(x));
    }
    return out;
}

std::optional<RatMatrix> rational_conjugacy(const IntMatrix& m, const IntMatrix& n) {
    if (m.dim() != n.dim()) return std::nullopt;
    if (!(char_poly(m) == char_poly(n))) return std::nullopt;
    const FrobeniusForm fm = frobenius_form(RatMatrix(m));
    const FrobeniusForm fn = frobenius_form(RatMatrix(n));
    if (!(fm.invariant_factors == fn.invariant_factors)) return std::nullopt;
    auto inv = fm.basis.inverse();
    if (!inv) throw std::logic_error("Frobenius basis is singular");
    RatMatrix p = fn.basis * *inv;
    if (!(p * RatMatrix(m) == RatMatrix(n) * p)) throw std::logic_error("rational conjugator failed verification");
    return p;
}

std::optional<std::string> invariant_filter(const IntMatrix& m, const IntMatrix& n) {
    if (m.dim() != n.dim()) return "dimension " + std::to_string(m.dim()) + " vs " + std::to_string(n.dim());
    const IntPoly pm = char_poly(m), pn = char_poly(n);
    if (!(pm == pn)) return "char_poly " + pm.to_string() + " vs " + pn.to_string();
    const Integer dm = det(m), dn = det(n);
    if (dm != dn) return "det " + dm.get_str() + " vs " + dn.get_str();
    const Integer tm = m.trace(), tn = n.trace();
    if (tm != tn) return "trace " + tm.get_str() + " vs " + tn.get_str();
    for (long k = -3; k <= 3; ++k) {
        const auto sm = smith_normal_form(shifted(m, k)).diagonal;
        const auto sn = smith_normal_form(shifted(n, k)).diagonal;
        if (sm != sn)
            return "SNF(M - k*I) at k = " + std::to_string(k) + ": " + diag_text(sm) + " vs " + diag_text(sn);
    }
    return std::nullopt;
}

std::uint64_t effective_bound(std::size_t rank, std::uint64_t bound) {
    if (rank == 0) return bound;
    auto count = [&](std::uint64_t b) {
        // (2b+1)^rank, saturating just above the budget
        std::uint64_t c = 1;
        for (std::size_t i = 0; i < rank; ++i) {
            if (c > kSearchBudget / (2 * b + 1)) return kSearchBudget + 1;
            c *= 2 * b + 1;
        }
        return c;
    };
    if (count(bound) <= kSearchBudget) return bound;
    std::uint64_t lo = 0, hi = bound;
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (count(mid) <= kSearchBudget) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

ConjugacyVerdict lattice_search(const IntMatrix& m, const IntMatrix& n, std::uint64_t bound) {
    if (m.dim() != n.dim()) throw DomainError("matrices have different dimensions");
    const SolutionLattice lat = solution_lattice(m, n);
    const std::size_t r = lat.rank;
    if (r == 0) return Undecided{bound};
    const long b = static_cast<long>(effective_bound(r, bound));
    const std::size_t d = m.dim();

    std::vector<long> c(r, 0);
    std::optional<IntMatrix> found;
    // Coefficient vectors with sum |c_i| == rem over positions i.., in lex order.
    std::function<bool(std::size_t, long)> visit = [&](std::size_t i, long rem) -> bool {
        if (i + 1 == r) {
            for (long v : {-rem, rem}) {
                if (std::abs(v) > b) continue;
                c[i] = v;
                IntMatrix x(d);
                for (std::size_t t = 0; t < r; ++t)
                    if (c[t] != 0) x = x + Integer(c[t]) * lat.basis[t];
                const Integer dx = det(x);
                if (dx == 1 || dx == -1) {
                    found = x;
                    return true;
                }
                if (rem == 0) break;
            }
            return false;
        }
        const long tail = static_cast<long>(r - i - 1) * b;
        for (long v = -std::min(rem, b); v <= std::min(rem, b); ++v) {
            if (rem - std::abs(v) > tail) continue;
            c[i] = v;
            if (visit(i + 1, rem - std::abs(v))) return true;
        }
        return false;
    };
    for (long s = 1; s <= static_cast<long>(r) * b; ++s)
        if (visit(0, s)) break;

    if (!found) return Undecided{bound};
    if (!verify_certificate(m, n, *found)) throw std::logic_error("lattice certificate failed verification");
    return Conjugate{*found};
}

namespace {

ConjugacyVerdict pipeline(const IntMatrix& m, const IntMatrix& n, std::uint64_t bound, bool exact_2x2) {
    require_pair(m, n);
    if (auto w = invariant_filter(m, n)) return NotConjugate{*w};
    if (!rational_conjugacy(m, n)) {
        return NotConjugate{"rational canonical forms differ: " +
                            factors_text(frobenius_form(RatMatrix(m)).invariant_factors) + " vs " +
                            factors_text(frobenius_form(RatMatrix(n)).invariant_factors)};
    }
    if (exact_2x2 && m.dim() == 2 && det(m) == 1) return sl2::conjugate_2x2(m, n);
    if (m.dim() > kMaxDimension) return Undecided{bound};
    return lattice_search(m, n, bound);
}

} // namespace

ConjugacyVerdict generic_conjugacy(const IntMatrix& m, const IntMatrix& n, std::uint64_t bound) {
    return pipeline(m, n, bound, false);
}

ConjugacyVerdict integral_conjugacy(const IntMatrix& m, const IntMatrix& n, std::uint64_t bound) {
    return pipeline(m, n, bound, true);
}

} // namespace cremona::gln
