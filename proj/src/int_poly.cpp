#include "cremona/int_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace cremona {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1, 0);
    v[degree] = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::evaluate(const Integer& t) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
    return IntPoly(std::move(r));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string(char var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& monic_divisor) {
    if (!monic_divisor.is_monic()) return std::nullopt;
    if (num.is_zero()) return IntPoly{};
    int dn = num.degree(), dd = monic_divisor.degree();
    if (dn < dd) return std::nullopt;
    std::vector<Integer> rem = num.coefficients();
    std::vector<Integer> quot(static_cast<std::size_t>(dn - dd + 1), 0);
    const auto& d = monic_divisor.coefficients();
    for (int k = dn - dd; k >= 0; --k) {
        Integer c = rem[static_cast<std::size_t>(k + dd)];
        quot[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * d[static_cast<std::size_t>(j)];
    }
    for (const auto& r : rem)
        if (r != 0) return std::nullopt;
    return IntPoly(std::move(quot));
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

IntPoly cyclotomic(unsigned m) {
    static std::mutex mu;
    static std::map<unsigned, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    // Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d
    IntPoly result = IntPoly::monomial(1, m) - IntPoly{1};
    for (unsigned d = 1; d < m; ++d) {
        if (m % d) continue;
        result = *divide_exact(result, cyclotomic(d));
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(m, result);
    return result;
}

std::optional<std::vector<unsigned>> cyclotomic_factorization(const IntPoly& p) {
    if (!p.is_monic()) return std::nullopt;
    if (p.degree() == 0) return std::vector<unsigned>{};
    if (abs(p.coefficient(0)) != 1) return std::nullopt;
    std::vector<unsigned> factors;
    IntPoly rest = p;
    // phi(m) >= sqrt(m / 2), so phi(m) <= n forces m <= 2 n^2.
    const unsigned limit = 2u * static_cast<unsigned>(p.degree()) * static_cast<unsigned>(p.degree()) + 2u;
    for (unsigned m = 1; m <= limit && rest.degree() > 0; ++m) {
        if (static_cast<int>(euler_phi(m)) > rest.degree()) continue;
        IntPoly phi = cyclotomic(m);
        while (rest.degree() >= phi.degree()) {
            auto q = divide_exact(rest, phi);
            if (!q) break;
            rest = std::move(*q);
            factors.push_back(m);
        }
    }
    if (rest.degree() != 0) return std::nullopt;
    return factors;
}

} // namespace cremona
