#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "cremona/int_matrix.hpp"
#include "cremona/verdict.hpp"

namespace cremona::sl2 {

/// Even-length sequence of positive integers, compared cyclically: two
/// periods are equal iff one is a rotation (by any offset) of the other.
class LLSPeriod {
public:
    /// Throws DomainError for empty, odd-length or nonpositive input.
    explicit LLSPeriod(std::vector<Integer> entries);
    LLSPeriod(std::initializer_list<long> entries);

    const std::vector<Integer>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }

    /// Sequence starting at entries()[k].
    LLSPeriod rotated(std::size_t k) const;
    /// Shortest even-length block whose repetition gives the sequence.
    LLSPeriod minimal_period() const;
    /// Exact sequence equality, no rotation.
    bool same_sequence(const LLSPeriod& other) const { return entries_ == other.entries_; }
    /// Smallest k with rotated(k) == other as sequences, or -1.
    long rotation_to(const LLSPeriod& other) const;

    friend bool operator==(const LLSPeriod& a, const LLSPeriod& b) { return a.rotation_to(b) >= 0; }

    /// "(2,1,1,3)"
    std::string to_string() const;

private:
    std::vector<Integer> entries_;
};

/// conjugator * (sign * M) * conjugator^{-1} == reduced, det conjugator == 1.
struct ReducedForm {
    IntMatrix reduced;
    int sign;
    IntMatrix conjugator;
};

struct ComplexSpectrum {
    IntMatrix representative;
    unsigned order;
};

/// Class of root_sign * I + [[0, n], [0, 0]].
struct DoubleRoot {
    int root_sign;
    Integer n;
};

struct RealSpectrum {
    int eig_sign;
    LLSPeriod lls;
};

struct DetMinusOne {
    IntPoly char_poly;
};

using SpectrumClass = std::variant<ComplexSpectrum, DoubleRoot, RealSpectrum, DetMinusOne>;

/// "complex_spectrum", "double_root", "real_spectrum" or "det_minus_one".
std::string class_name(const SpectrumClass& c);

/// [a_0; a_1 : ... : a_m]
struct CFExpansion {
    std::vector<Integer> terms;
};

/// Throws DomainError if a zero denominator appears while nesting.
Rational cf_eval(const CFExpansion& e);

/// Odd-length positive expansion of q/p (q > p >= 1, coprime).
std::vector<Integer> cf_expand_odd(const Rational& value);

/// s > q > p >= 0 for [[p, r], [q, s]], det 1.
bool is_reduced(const IntMatrix& m);

/// The three complex-spectrum representatives, keyed by trace 1, 0, -1.
IntMatrix complex_representative(int trace);

SpectrumClass classify(const IntMatrix& m);

/// Reduction of a real-spectrum SL(2,Z) matrix with irreducible
/// characteristic polynomial to a reduced matrix conjugate to +-M.
ReducedForm reduce(const IntMatrix& m);

/// LLS period read off a reduced matrix.
LLSPeriod lls_of_reduced(const IntMatrix& reduced);

LLSPeriod lls_period(const IntMatrix& m);

/// The reduced matrix with the given LLS period.
IntMatrix realize(const LLSPeriod& seq);

/// G with G * realize(seq) * G^{-1} == realize(seq.rotated(k)); det G = (-1)^k.
IntMatrix rotation_conjugator(const LLSPeriod& seq, std::size_t k);

/// Realizations of the first |minimal period| rotations of lls_period(m).
std::vector<IntMatrix> enumerate_reduced(const IntMatrix& m);

/// Decides GL(2,Z)-conjugacy. det -1 pairs go to the generic pipeline.
ConjugacyVerdict conjugate_2x2(const IntMatrix& m, const IntMatrix& n);

/// One period of the sail of a hyperbolic matrix, starting at vertex v and
/// ending just before M v.
struct Sail2D {
    std::vector<std::array<long, 2>> vertices;
    std::vector<Integer> edge_lengths;
    /// vertex_sines[i] is the integer sine at the far end of edge i.
    std::vector<Integer> vertex_sines;
};

inline constexpr long kDefaultSailBound = 10000;

/// Throws SailBoundTooSmall if the box does not show two full periods.
Sail2D sail_period(const IntMatrix& m, long bound = kDefaultSailBound);

/// Alternating edge lengths and vertex sines over one sail period.
LLSPeriod sail_lls_oracle(const IntMatrix& m, long bound = kDefaultSailBound);

} // namespace cremona::sl2
