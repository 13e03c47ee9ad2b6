#pragma once

/**
 * Monomial-ideal arithmetic over ordered variable registries: cover and edge
 * ideals of graphs, Alexander duality, ordinary and symbolic powers,
 * intersections, polarization, graded components, and a complete
 * linear-quotients order search.
 */

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vcover/graph.hpp"

namespace vcover {

/// Monomial as variable -> exponent; only positive exponents are stored.
using Monomial = std::map<std::string, int>;

int monomial_degree(const Monomial& m);

/**
 * Monomial ideal: an ordered variable registry plus the antichain of minimal
 * generators. Construction strips zero exponents, discards generators that
 * another generator divides, and sorts by degree then variable-wise order,
 * so equal generator sets compare equal regardless of registry order. No
 * generators is the zero ideal; the sole generator 1 is the unit ideal.
 */
class MonomialIdeal {
  public:
    MonomialIdeal() = default;
    MonomialIdeal(std::vector<std::string> vars, const std::vector<Monomial>& gens);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    int generator_count() const { return static_cast<int>(gens_.size()); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].empty(); }
    bool is_squarefree() const;

    /// Monomial membership: some generator divides m.
    bool contains(const Monomial& m) const;
    /// Ideal containment: every generator of `other` is a member.
    bool contains(const MonomialIdeal& other) const;

    /// Generator-set equality; registries may differ.
    bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }

  private:
    std::vector<std::string> vars_;
    std::vector<Monomial> gens_;
};

/// All inclusion-minimal vertex covers, smallest first, each re-verified by
/// single-vertex removal. The edgeless graph has the empty cover.
std::vector<std::vector<std::string>> minimal_vertex_covers(const Graph& g);

/// Cover ideal J(G): one squarefree generator per minimal vertex cover.
/// Cross-checked against the Alexander dual of the edge ideal.
MonomialIdeal cover_ideal(const Graph& g);

/// Edge ideal I(G): x_i x_j over the edges.
MonomialIdeal edge_ideal(const Graph& g);

/// Alexander dual of a squarefree ideal: intersect, over each generator, the
/// ideal of its variables. An involution; dual of zero is the unit ideal.
MonomialIdeal alexander_dual(const MonomialIdeal& i);

/// s-th ordinary power: products of s generators, minimalized. Requires s >= 1.
MonomialIdeal power(const MonomialIdeal& i, int s);

/// s-th symbolic power of the cover ideal: the intersection over edges of
/// <x_i,x_j>^s. A monomial lies in <x_i,x_j>^s exactly when its x_i and x_j
/// exponents sum to at least s. Requires s >= 1.
MonomialIdeal symbolic_power_cover(const Graph& g, int s);

/// Intersection, generated by pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Polarization: x^m becomes the product of the first m layered variables
/// x@1..x@m; the result is squarefree over the layered registry.
MonomialIdeal polarize(const MonomialIdeal& i);

/// Ideal generated by the degree-j monomials of i. Requires j >= 0.
MonomialIdeal component(const MonomialIdeal& i, int j);

/// Largest degree among the minimal generators; the zero ideal has none.
int max_gen_degree(const MonomialIdeal& i);

/**
 * Search for a linear-quotients order: u_1..u_r such that each colon ideal
 * <u_1..u_{i-1}> : u_i is generated by variables. Candidates are taken in
 * degree-ascending order with full backtracking; failed prefix sets are
 * memoized, so `nullopt` means no order exists at all.
 */
std::optional<std::vector<Monomial>> linear_quotients_order(const MonomialIdeal& i);

/// Check a claimed linear-quotients order: a permutation of the minimal
/// generators whose successive colons are all variable-generated.
bool verify_linear_quotients(const MonomialIdeal& i, const std::vector<Monomial>& order);

}  // namespace vcover
