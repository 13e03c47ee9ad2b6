#pragma once

/**
 * Exact graded Betti numbers of monomial ideals, computed from simplicial
 * homology of the Stanley-Reisner complex of the polarization. Polarization
 * preserves graded Betti numbers, so one squarefree engine serves every
 * ideal. All ranks are over the rationals via fraction-free integer
 * elimination; no floating point is involved anywhere.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vcover/complex.hpp"
#include "vcover/ideal.hpp"

namespace vcover {

/// Graded Betti numbers: (homological index i, internal degree j) -> count.
/// Absent entries are zero.
struct BettiTable {
    std::map<std::pair<int, int>, long long> beta;

    long long at(int i, int j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }

    bool operator==(const BettiTable&) const = default;
};

/// Ranks of reduced rational homology, dimension -1 through dim of the
/// complex. A void complex has an empty profile.
using HomologyProfile = std::map<int, long long>;

/// Per-degree componentwise-linearity verdicts: `degrees` pairs each checked
/// degree with whether that component has a linear resolution, ascending.
struct ComponentwiseReport {
    bool componentwise_linear = true;
    std::vector<std::pair<int, bool>> degrees;
};

/// Stanley-Reisner complex of a squarefree ideal: faces are the variable
/// subsets whose product lies outside the ideal. The zero ideal gives the
/// full simplex, the unit ideal the void complex. At most 20 variables.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

/// Reduced homology ranks over the rationals. Collapsible face pairs are
/// cancelled first, then ranks are settled exactly: by fraction-free integer
/// elimination, shortcut when homology provably vanishes mod 2 or is pinned
/// in a single dimension by the Euler count. At most 20 vertices.
HomologyProfile reduced_homology(const SimplicialComplex& complex);

/**
 * Graded Betti numbers of an ideal. The ideal is polarized (16 variables at
 * most afterwards) and each beta_{i,j} is the sum over the size-j variable
 * subsets sigma of the rank of the (j-i-2)-nd reduced homology of the
 * Stanley-Reisner complex restricted to sigma. Row i = 0 is cross-checked
 * against the generator degrees.
 */
BettiTable betti_table(const MonomialIdeal& ideal);

/// Castelnuovo-Mumford regularity: the largest j - i over the nonzero Betti
/// numbers. The zero ideal has none.
int regularity(const MonomialIdeal& ideal);

/// Whether an ideal generated in a single degree d has a linear resolution,
/// i.e. every nonzero Betti number sits at j - i = d.
bool has_linear_resolution(const MonomialIdeal& ideal);

/**
 * Componentwise linearity, decided on the polarization: a squarefree ideal
 * is componentwise linear exactly when each of its squarefree components
 * (the ideal of its degree-j squarefree members) has a linear resolution,
 * and polarization carries the property back and forth. Only the generator
 * degrees are checked: every other component is a maximal-ideal multiple of
 * a lower one, which keeps a linear resolution linear. The zero ideal
 * passes vacuously.
 */
ComponentwiseReport is_componentwise_linear(const MonomialIdeal& ideal);

}  // namespace vcover
