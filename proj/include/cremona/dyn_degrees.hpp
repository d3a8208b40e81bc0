#pragma once

#include <complex>
#include <vector>

#include "cremona/monomial_map.hpp"
#include "cremona/rational.hpp"

namespace cremona {

inline constexpr double kDefaultTolerance = 1e-9;

/// Dynamical degrees lambda_1..lambda_n of a monomial map together with the
/// sorted eigenvalue moduli |mu_1| >= ... >= |mu_n| of its matrix.
/// lambda_k = |mu_1 ... mu_k|; lambda_0 = 1 is implicit.
struct DegreeProfile {
    std::vector<double> lambdas;
    std::vector<double> moduli;
    /// Achieved accuracy: the requested tolerance, or the root-finder error
    /// estimate when that is larger.
    double tolerance;
};

DegreeProfile dynamical_degrees(const MonomialMap& f, double tolerance = kDefaultTolerance);

struct SpectralRadius {
    double value;
    double error;
    /// Set when every root is a root of unity; value is then exactly 1.
    bool on_unit_circle;
};

/// Largest root modulus of char_poly(a).
SpectralRadius spectral_radius(const IntMatrix& a);

/// Fujiwara's bound: every root z of p satisfies |z| <= bound. p nonconstant.
double fujiwara_bound(const RatPoly& p);

/// Complex roots of a square-free polynomial (Aberth-Ehrlich iteration with
/// Newton polishing). error receives the largest per-root error estimate.
std::vector<std::complex<long double>> squarefree_roots(const RatPoly& p, long double* error = nullptr);

/// Root moduli of p with multiplicity, sorted descending.
std::vector<double> root_moduli(const IntPoly& p, double* error = nullptr);

struct DegreeGrowth {
    /// deg(f), deg(f^2), ..., deg(f^L)
    std::vector<Integer> degrees;
    /// deg(f^L)^(1/L)
    double growth_rate;
};

/// Throws DomainError when length is 0.
DegreeGrowth degree_growth(const MonomialMap& f, unsigned length);

} // namespace cremona
