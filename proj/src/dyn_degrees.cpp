#include "cremona/dyn_degrees.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cremona/errors.hpp"

namespace cremona {

namespace {

using Complex = std::complex<long double>;

// Rational -> long double keeping more than double precision.
long double to_long_double(const Rational& q) {
    mpf_class x(0, 192);
    x = q;
    double hi = x.get_d();
    mpf_class rest(0, 192);
    rest = x - hi;
    return static_cast<long double>(hi) + static_cast<long double>(rest.get_d());
}

struct Evaluation {
    Complex value, deriv;
};

Evaluation horner(const std::vector<long double>& c, Complex z) {
    Complex p = 0, dp = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
    return {p, dp};
}

} // namespace

double fujiwara_bound(const RatPoly& p) {
    const int n = p.degree();
    if (n < 1) throw DomainError("root bound of a constant polynomial");
    RatPoly m = p.monic();
    double best = 0;
    for (int k = 1; k <= n; ++k) {
        double c = std::fabs(m.coefficient(static_cast<std::size_t>(n - k)).get_d());
        if (k == n) c /= 2;
        best = std::max(best, std::pow(c, 1.0 / k));
    }
    return 2 * best;
}

std::vector<Complex> squarefree_roots(const RatPoly& p, long double* error) {
    const int n = p.degree();
    if (n < 1) {
        if (error) *error = 0;
        return {};
    }
    RatPoly m = p.monic();
    std::vector<long double> c;
    for (const auto& q : m.coefficients()) c.push_back(to_long_double(q));
    if (n == 1) {
        if (error) *error = 0;
        return {Complex(-c[0], 0)};
    }

    const long double radius = std::max<long double>(fujiwara_bound(m), 1e-3L);
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        long double angle = 2 * std::numbers::pi_v<long double> * k / n + 0.4L;
        z[static_cast<std::size_t>(k)] = std::polar(radius * 0.5L, angle);
    }
    for (int iter = 0; iter < 2000; ++iter) {
        long double biggest = 0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            auto [v, d] = horner(c, z[k]);
            if (v == Complex(0)) continue;
            Complex ratio = v / d;
            Complex sum = 0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) sum += 1.0L / (z[k] - z[j]);
            Complex step = ratio / (1.0L - ratio * sum);
            z[k] -= step;
            biggest = std::max(biggest, std::abs(step) / std::max<long double>(1, std::abs(z[k])));
        }
        if (biggest < 1e-19L) break;
    }
    long double worst = 0;
    for (auto& root : z) {
        for (int polish = 0; polish < 3; ++polish) {
            auto [v, d] = horner(c, root);
            if (d == Complex(0)) break;
            root -= v / d;
        }
        auto [v, d] = horner(c, root);
        long double est = d == Complex(0) ? 1.0L : n * std::abs(v / d);
        est = std::max(est, 8 * std::numeric_limits<long double>::epsilon() * std::max<long double>(1, std::abs(root)));
        worst = std::max(worst, est);
    }
    if (error) *error = worst;
    return z;
}

std::vector<double> root_moduli(const IntPoly& p, double* error) {
    std::vector<double> out;
    if (auto cyc = cyclotomic_factorization(p)) {
        out.assign(static_cast<std::size_t>(p.degree()), 1.0);
        if (error) *error = 0;
        return out;
    }
    long double worst = 0;
    auto parts = squarefree_decomposition(RatPoly(p));
    for (std::size_t mult = 0; mult < parts.size(); ++mult) {
        long double err = 0;
        for (const auto& z : squarefree_roots(parts[mult], &err))
            for (std::size_t r = 0; r <= mult; ++r) out.push_back(static_cast<double>(std::abs(z)));
        worst = std::max(worst, err);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    if (error) *error = static_cast<double>(worst);
    return out;
}

SpectralRadius spectral_radius(const IntMatrix& a) {
    IntPoly cp = char_poly(a);
    if (cyclotomic_factorization(cp)) return {1.0, 0.0, true};
    double err = 0;
    auto moduli = root_moduli(cp, &err);
    return {moduli.empty() ? 0.0 : moduli.front(), err, false};
}

DegreeProfile dynamical_degrees(const MonomialMap& f, double tolerance) {
    if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
    const IntMatrix& m = f.matrix();
    const std::size_t n = m.dim();
    DegreeProfile profile;
    double achieved = 0;
    profile.moduli = root_moduli(char_poly(m), &achieved);
    for (std::size_t k = 1; k <= n; ++k) {
        SpectralRadius r = spectral_radius(exterior_power(m, k));
        profile.lambdas.push_back(r.value);
        achieved = std::max(achieved, r.error * std::max(1.0, r.value));
    }
    profile.tolerance = std::max(tolerance, achieved);
    return profile;
}

DegreeGrowth degree_growth(const MonomialMap& f, unsigned length) {
    if (length == 0) throw DomainError("degree growth length must be at least 1");
    DegreeGrowth out;
    IntMatrix power = f.matrix();
    for (unsigned l = 1; l <= length; ++l) {
        out.degrees.push_back(projective_degree(power));
        if (l < length) power = power * f.matrix();
    }
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, out.degrees.back().get_mpz_t());
    // (mant * 2^exp)^(1/L) computed in log space
    out.growth_rate = std::exp((std::log(mant) + static_cast<double>(exp) * std::numbers::ln2) / length);
    return out;
}

} // namespace cremona
