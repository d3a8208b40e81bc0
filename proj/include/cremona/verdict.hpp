#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "cremona/int_matrix.hpp"

namespace cremona {

/// certificate * M * certificate^{-1} == N, |det certificate| == 1.
struct Conjugate {
    IntMatrix certificate;
};

/// Names the invariant that differs; recomputing it re-validates the verdict.
struct NotConjugate {
    std::string witness;
};

/// The bounded search found nothing; integral conjugacy remains open.
struct Undecided {
    std::uint64_t bound_used;
};

using ConjugacyVerdict = std::variant<Conjugate, NotConjugate, Undecided>;

inline bool is_conjugate(const ConjugacyVerdict& v) { return std::holds_alternative<Conjugate>(v); }
inline bool is_not_conjugate(const ConjugacyVerdict& v) { return std::holds_alternative<NotConjugate>(v); }
inline bool is_undecided(const ConjugacyVerdict& v) { return std::holds_alternative<Undecided>(v); }

/// {"verdict": ..., "certificate"?: ..., "witness"?: ..., "bound"?: ...}
std::string verdict_json(const ConjugacyVerdict& v);

/// True iff |det P| = 1 and P M = N P.
bool verify_certificate(const IntMatrix& m, const IntMatrix& n, const IntMatrix& p);

} // namespace cremona
