#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/int_matrix.hpp"
#include "cremona/rational.hpp"
#include "cremona/verdict.hpp"

namespace cremona::gln {

inline constexpr std::size_t kMaxDimension = 8;
/// Largest number of coefficient vectors a lattice search may visit.
inline constexpr std::uint64_t kSearchBudget = 10'000'000;

/// Integer solutions of X M = N X, LLL-reduced.
struct SolutionLattice {
    std::vector<IntMatrix> basis;
    std::size_t rank = 0;
};

SolutionLattice solution_lattice(const IntMatrix& m, const IntMatrix& n);

/// P over Q with P M P^{-1} == N, from the Frobenius forms.
std::optional<RatMatrix> rational_conjugacy(const IntMatrix& m, const IntMatrix& n);

/// Witness naming the first similarity invariant that differs, or nullopt.
std::optional<std::string> invariant_filter(const IntMatrix& m, const IntMatrix& n);

/// Coefficient radius actually searched for a lattice of this rank.
std::uint64_t effective_bound(std::size_t rank, std::uint64_t bound);

/// Graded-lex search of the solution lattice for a unimodular X.
/// Never returns NotConjugate.
ConjugacyVerdict lattice_search(const IntMatrix& m, const IntMatrix& n, std::uint64_t bound);

/// Filters, rational conjugacy, then lattice search, in any dimension.
ConjugacyVerdict generic_conjugacy(const IntMatrix& m, const IntMatrix& n, std::uint64_t bound);

/// Full pipeline; 2x2 det-1 pairs are decided exactly.
ConjugacyVerdict integral_conjugacy(const IntMatrix& m, const IntMatrix& n, std::uint64_t bound);

} // namespace cremona::gln
