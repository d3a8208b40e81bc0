#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "cremona/errors.hpp"
#include "cremona/sl2.hpp"

namespace cremona::sl2 {

namespace {

using Point = std::array<long, 2>;

long cross(const Point& a, const Point& b) { return a[0] * b[1] - a[1] * b[0]; }

Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1]}; }

Integer lattice_length(const Point& e) { return std::gcd(std::labs(e[0]), std::labs(e[1])); }

// Open eigen-cone spanned by (a + sqrt D, 2q) and (a - sqrt D, 2q), a = p - s.
struct Cone {
    Integer q, a, disc;
    int sigma;
    long double ax, sq, qf;

    bool contains(long x, long y) const {
        if (sigma * y <= 0) return false;
        const Integer u = 2 * q * x - a * y;
        return disc * y * y > u * u;
    }

    // Approximate y-range of the cone on the vertical line x, clipped to [-b, b].
    std::optional<std::pair<long double, long double>> range(long x, long b) const {
        const long double e1 = ax + sq, e2 = ax - sq;
        const long double inf = static_cast<long double>(b) + 1;
        long double lo, hi;
        if (x == 0) {
            if (e1 * e2 >= 0) return std::nullopt;
            lo = sigma > 0 ? 0 : -inf;
            hi = sigma > 0 ? inf : 0;
        } else {
            std::vector<long double> ys;
            if (x * e1 > 0) ys.push_back(2 * qf * x / e1);
            if (x * e2 > 0) ys.push_back(2 * qf * x / e2);
            if (ys.empty()) return std::nullopt;
            if (ys.size() == 2) {
                lo = std::min(ys[0], ys[1]);
                hi = std::max(ys[0], ys[1]);
            } else if (sigma > 0) {
                lo = ys[0];
                hi = inf;
            } else {
                lo = -inf;
                hi = ys[0];
            }
        }
        lo = std::max(lo, -inf);
        hi = std::min(hi, inf);
        if (lo > hi) return std::nullopt;
        return std::make_pair(lo, hi);
    }
};

std::optional<long> as_ll(const Integer& v) {
    if (!v.fits_slong_p()) return std::nullopt;
    return v.get_si();
}

std::optional<Point> act(const IntMatrix& m, const Point& v) {
    auto x = as_ll(m(0, 0) * v[0] + m(0, 1) * v[1]);
    auto y = as_ll(m(1, 0) * v[0] + m(1, 1) * v[1]);
    if (!x || !y) return std::nullopt;
    return Point{*x, *y};
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(sub(h[k - 1], h[k - 2]), sub(p, h[k - 2])) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(sub(h[k - 1], h[k - 2]), sub(pts[i], h[k - 2])) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

} // namespace

Sail2D sail_period(const IntMatrix& m, long bound) {
    if (m.dim() != 2) throw DomainError("expected a 2x2 matrix");
    if (det(m) != 1 || m.trace() <= 2)
        throw DomainError("sail needs det 1 and positive real eigenvalues (trace > 2)");
    if (bound < 1) throw DomainError("sail bound must be positive");

    Cone cone;
    cone.q = m(1, 0);
    cone.a = m(0, 0) - m(1, 1);
    cone.disc = m.trace() * m.trace() - 4;
    cone.sigma = sgn(cone.q);
    cone.ax = static_cast<long double>(cone.a.get_d());
    cone.sq = std::sqrt(static_cast<long double>(cone.disc.get_d()));
    cone.qf = static_cast<long double>(cone.q.get_d());

    std::vector<Point> pts;
    for (long x = -bound; x <= bound; ++x) {
        auto r = cone.range(x, bound);
        if (!r) continue;
        const long lo = std::max(-bound, static_cast<long>(std::ceil(r->first)) - 1);
        const long hi = std::min(bound, static_cast<long>(std::floor(r->second)) + 1);
        long y0 = lo;
        while (y0 <= hi && !cone.contains(x, y0)) ++y0;
        if (y0 > hi) continue;
        while (y0 - 1 >= -bound && cone.contains(x, y0 - 1)) --y0;
        long y1 = hi;
        while (y1 >= y0 && !cone.contains(x, y1)) --y1;
        while (y1 + 1 <= bound && cone.contains(x, y1 + 1)) ++y1;
        pts.push_back({x, y0});
        pts.push_back({x, y1});
    }

    const std::vector<Point> hull = convex_hull(pts);
    const std::size_t n = hull.size();
    auto facing = [&](std::size_t i) {
        const Point& a = hull[i];
        const Point& b = hull[(i + 1) % n];
        return cross(sub(b, a), Point{-a[0], -a[1]}) < 0;
    };
    auto too_small = [&] { return SailBoundTooSmall("sail bound " + std::to_string(bound) + " too small"); };
    if (n < 3) throw too_small();

    std::size_t start = n;
    for (std::size_t i = 0; i < n; ++i)
        if (facing(i) && !facing((i + n - 1) % n)) {
            start = i;
            break;
        }
    if (start == n) throw too_small();
    std::vector<Point> chain{hull[start]};
    for (std::size_t i = start; facing(i) && chain.size() <= n; i = (i + 1) % n) chain.push_back(hull[(i + 1) % n]);

    auto norm = [](const Point& p) { return std::max(std::labs(p[0]), std::labs(p[1])); };
    std::size_t iv = 0;
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (norm(chain[i]) < norm(chain[iv])) iv = i;
    auto index_of = [&](const std::optional<Point>& p) -> std::optional<std::size_t> {
        if (!p) return std::nullopt;
        auto it = std::find(chain.begin(), chain.end(), *p);
        if (it == chain.end()) return std::nullopt;
        return static_cast<std::size_t>(it - chain.begin());
    };
    const Point v = chain[iv];
    const auto mv = act(m, v);
    const auto im = index_of(mv);
    const auto im2 = index_of(mv ? act(m, *mv) : std::nullopt);
    if (!im || !im2) throw too_small();

    std::vector<Point> seg;
    if (*im > iv) seg.assign(chain.begin() + iv, chain.begin() + *im + 1);
    else {
        seg.assign(chain.begin() + *im, chain.begin() + iv + 1);
        std::reverse(seg.begin(), seg.end());
    }
    if (seg.size() < 2) throw std::logic_error("degenerate sail period");

    Sail2D out;
    const auto next_after = act(m, seg[1]);
    if (!next_after) throw too_small();
    for (std::size_t k = 0; k + 1 < seg.size(); ++k) {
        const Point e = sub(seg[k + 1], seg[k]);
        const Point far = k + 2 < seg.size() ? seg[k + 2] : *next_after;
        const Point e2 = sub(far, seg[k + 1]);
        const Integer l1 = lattice_length(e), l2 = lattice_length(e2);
        out.vertices.push_back(seg[k]);
        out.edge_lengths.push_back(l1);
        out.vertex_sines.push_back(abs(Integer(cross(e, e2))) / (l1 * l2));
    }
    return out;
}

LLSPeriod sail_lls_oracle(const IntMatrix& m, long bound) {
    const Sail2D s = sail_period(m, bound);
    std::vector<Integer> seq;
    for (std::size_t i = 0; i < s.edge_lengths.size(); ++i) {
        seq.push_back(s.edge_lengths[i]);
        seq.push_back(s.vertex_sines[i]);
    }
    return LLSPeriod(std::move(seq));
}

} // namespace cremona::sl2
