#include "cremona/monomial_map.hpp"

#include <cctype>
#include <numeric>
#include <vector>

#include "cremona/errors.hpp"

namespace cremona {

MonomialMap::MonomialMap(IntMatrix m) : m_(std::move(m)) {
    if (m_.dim() < 2) throw DomainError("monomial maps need dimension at least 2");
    if (!is_unimodular(m_))
        throw DomainError("exponent matrix " + m_.to_string() + " is not invertible over Z (det " +
                          det(m_).get_str() + ")");
}

namespace {

struct VarRef {
    bool indexed;  // x1, x2, ...
    unsigned long index;  // letter position for x,y,z,w; 1-based for indexed
    std::size_t position;
};

struct Term {
    VarRef var;
    Integer exponent;
};

class MapParser {
public:
    explicit MapParser(std::string_view s) : s_(s) {}

    MonomialMap parse() {
        std::vector<std::vector<Term>> coords;
        coords.push_back(parse_coord());
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            coords.push_back(parse_coord());
            skip_ws();
        }
        if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        if (coords.size() < 2) throw ParseError("a map needs at least two coordinates", pos_);
        return build(coords);
    }

private:
    std::vector<Term> parse_coord() {
        skip_ws();
        if (peek() == '1') {
            std::size_t at = pos_;
            ++pos_;
            skip_ws();
            if (peek() != '/') throw ParseError("constant coordinates and coefficients are not supported", at);
            ++pos_;
            skip_ws();
            std::vector<Term> inner;
            if (peek() == '(') {
                ++pos_;
                inner = parse_coord();
                skip_ws();
                if (peek() != ')') throw ParseError("expected ')'", pos_);
                ++pos_;
            } else {
                inner.push_back(parse_term());
            }
            for (auto& t : inner) t.exponent = -t.exponent;
            return inner;
        }
        std::vector<Term> terms{parse_term()};
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            terms.push_back(parse_term());
            skip_ws();
        }
        return terms;
    }

    Term parse_term() {
        skip_ws();
        Term t{parse_var(), 1};
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            if (peek() == '-') ++pos_;
            std::size_t digits = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == digits) throw ParseError("expected integer exponent", at);
            t.exponent = Integer(std::string(s_.substr(at, pos_ - at)));
            if (t.exponent == 0) throw ParseError("exponent must be nonzero", at);
        }
        return t;
    }

    VarRef parse_var() {
        std::size_t at = pos_;
        char c = peek();
        if (c == 'x') {
            ++pos_;
            std::size_t digits = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ > digits) {
                std::string num(s_.substr(digits, pos_ - digits));
                if (num.size() > 9) throw ParseError("variable index too large", at);
                unsigned long idx = std::stoul(num);
                if (idx == 0) throw ParseError("variable indices start at 1", at);
                return {true, idx, at};
            }
            return {false, 0, at};
        }
        static constexpr std::string_view letters = "xyzw";
        if (auto p = letters.find(c); p != std::string_view::npos && c != '\0') {
            ++pos_;
            return {false, p, at};
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("constant coordinates and coefficients are not supported", at);
        if (c == '\0') throw ParseError("unexpected end of input, expected a variable", at);
        throw ParseError(std::string("unexpected '") + c + "', expected a variable", at);
    }

    MonomialMap build(const std::vector<std::vector<Term>>& coords) {
        const std::size_t n = coords.size();
        bool any_indexed = false, any_letter_other_than_x = false, any_plain_x = false;
        for (const auto& c : coords)
            for (const auto& t : c) {
                if (t.var.indexed)
                    any_indexed = true;
                else if (t.var.index == 0)
                    any_plain_x = true;
                else
                    any_letter_other_than_x = true;
            }
        if (any_indexed && (any_plain_x || any_letter_other_than_x))
            throw ParseError("inconsistent variable naming: mix of x,y,z,w and indexed x1..xn");
        if (!any_indexed && n > 4)
            throw ParseError("maps with more than 4 coordinates must use variables x1..x" + std::to_string(n));

        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& t : coords[i]) {
                std::size_t col = t.var.indexed ? t.var.index - 1 : t.var.index;
                if (col >= n)
                    throw ParseError("variable out of range for a map with " + std::to_string(n) + " coordinates",
                                     t.var.position);
                m(i, col) += t.exponent;
            }
        return MonomialMap(std::move(m));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string variable_name(std::size_t j, std::size_t n) {
    if (n <= 4) return std::string(1, "xyzw"[j]);
    return "x" + std::to_string(j + 1);
}

std::string power(const std::string& name, const Integer& e) {
    return e == 1 ? name : name + "^" + e.get_str();
}

} // namespace

MonomialMap parse_map(std::string_view text) { return MapParser(text).parse(); }

std::string print_map(const MonomialMap& f) {
    const IntMatrix& m = f.matrix();
    const std::size_t n = m.dim();
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ", ";
        std::vector<std::string> pos, neg, all;
        for (std::size_t j = 0; j < n; ++j) {
            const Integer& e = m(i, j);
            if (e == 0) continue;
            std::string name = variable_name(j, n);
            if (e > 0)
                pos.push_back(power(name, e));
            else
                neg.push_back(power(name, -e));
            all.push_back(power(name, e));
        }
        auto join = [](const std::vector<std::string>& v) {
            std::string s;
            for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "*" : "") + v[k];
            return s;
        };
        if (neg.empty())
            out += join(pos);
        else if (pos.empty())
            out += neg.size() == 1 ? "1/" + neg[0] : "1/(" + join(neg) + ")";
        else
            out += join(all);
    }
    return out;
}

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
    if (f.dimension() != g.dimension())
        throw DomainError("cannot compose maps of dimensions " + std::to_string(f.dimension()) + " and " +
                          std::to_string(g.dimension()));
    return MonomialMap(f.matrix() * g.matrix());
}

std::optional<unsigned long> matrix_order(const IntMatrix& m) {
    auto factors = cyclotomic_factorization(char_poly(m));
    if (!factors) return std::nullopt;
    // A finite-order matrix is semisimple, so its order is the lcm of the
    // orders of its eigenvalues.
    unsigned long bound = 1;
    for (unsigned k : *factors) bound = std::lcm(bound, static_cast<unsigned long>(k));
    IntMatrix p = IntMatrix::identity(m.dim());
    for (unsigned long k = 1; k <= bound; ++k) {
        p = p * m;
        if (p.is_identity()) return k;
    }
    return std::nullopt;
}

std::optional<unsigned long> order(const MonomialMap& f) { return matrix_order(f.matrix()); }

Integer projective_degree(const IntMatrix& m) {
    const std::size_t n = m.dim();
    // Minimum over v_0 = 0 and the v_i, coordinate by coordinate.
    std::vector<Integer> lo(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        Integer row_sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            row_sum += m(i, j);
            if (m(i, j) < lo[j + 1]) lo[j + 1] = m(i, j);
        }
        if (-row_sum < lo[0]) lo[0] = -row_sum;
    }
    // Every v_i has coordinate sum 0, so the common sum after the shift is -sum(lo).
    Integer deg = 0;
    for (const auto& v : lo) deg -= v;
    return deg;
}

Integer projective_degree(const MonomialMap& f) { return projective_degree(f.matrix()); }

} // namespace cremona
