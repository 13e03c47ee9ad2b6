#pragma once

// Independent reference implementations used only by tests: Betti numbers
// from the Taylor complex, Koszul numbers of complete intersections, and
// Prüfer decoding of labeled trees. Deliberately separate code paths from
// the library so the two sides can check each other.

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vcover/betti.hpp"
#include "vcover/graph.hpp"
#include "vcover/ideal.hpp"

namespace oracle {

/// Rank over the rationals by textbook elimination on dense rows.
inline int rational_rank(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

/// Graded Betti numbers from the Taylor complex tensored with the residue
/// field: one basis element per nonempty subset of the generators, graded
/// by the subset's lcm; the differential keeps a face exactly when dropping
/// its generator leaves the lcm unchanged. Feasible to ~12 generators.
inline vcover::BettiTable taylor_betti(const vcover::MonomialIdeal& ideal) {
    using vcover::Monomial;
    const std::vector<Monomial>& gens = ideal.generators();
    int r = static_cast<int>(gens.size());
    if (r > 16) throw std::length_error("taylor_betti: too many generators");

    std::vector<Monomial> lcm(std::size_t(1) << r);
    std::map<Monomial, std::vector<uint32_t>> by_lcm;
    for (uint32_t s = 1; s < (1u << r); ++s) {
        uint32_t low = s & (s - 1);
        uint32_t bit = s ^ low;
        const Monomial& g = gens[std::countr_zero(bit)];
        Monomial& out = lcm[s];
        out = lcm[low];
        for (const auto& [v, e] : g) {
            auto [it, inserted] = out.emplace(v, e);
            if (!inserted && it->second < e) it->second = e;
        }
        by_lcm[out].push_back(s);
    }

    vcover::BettiTable table;
    for (const auto& [degree, subsets] : by_lcm) {
        int total = vcover::monomial_degree(degree);
        // Bases per homological index p (subsets of size p + 1).
        std::map<int, std::vector<uint32_t>> basis;
        std::map<uint32_t, int> row;
        for (uint32_t s : subsets) {
            basis[std::popcount(s) - 1].push_back(s);
            row[s] = 0;
        }
        for (auto& [p, list] : basis)
            for (std::size_t i = 0; i < list.size(); ++i) row[list[i]] = static_cast<int>(i);

        // ∂_p maps size-(p+1) subsets to size-p subsets of the same lcm.
        std::map<int, int> rank;
        for (const auto& [p, list] : basis) {
            if (p == 0 || !basis.count(p - 1)) {
                rank[p] = 0;
                continue;
            }
            const std::vector<uint32_t>& below = basis.at(p - 1);
            std::vector<std::vector<mpq_class>> mat(
                list.size(), std::vector<mpq_class>(below.size(), mpq_class(0)));
            for (std::size_t i = 0; i < list.size(); ++i) {
                int sign = 1;
                for (uint32_t rest = list[i]; rest; rest &= rest - 1) {
                    uint32_t bit = rest & ~(rest - 1);
                    uint32_t face = list[i] ^ bit;
                    if (lcm[face] == degree) mat[i][row.at(face)] = sign;
                    sign = -sign;
                }
            }
            rank[p] = rational_rank(std::move(mat));
        }

        for (const auto& [p, list] : basis) {
            long long h = static_cast<long long>(list.size()) - rank[p] -
                          (rank.count(p + 1) ? rank[p + 1] : 0);
            if (h != 0) table.beta[{p, total}] += h;
        }
    }
    for (auto it = table.beta.begin(); it != table.beta.end();)
        it = it->second == 0 ? table.beta.erase(it) : std::next(it);
    return table;
}

/// Betti numbers of an ideal generated by a regular sequence with the given
/// degrees: the Koszul complex is the minimal resolution, so β_{i,j} counts
/// (i+1)-subsets with degree sum j.
inline vcover::BettiTable koszul_ci_betti(const std::vector<int>& degrees) {
    vcover::BettiTable t;
    int r = static_cast<int>(degrees.size());
    for (uint32_t s = 1; s < (1u << r); ++s) {
        int sum = 0;
        for (uint32_t rest = s; rest; rest &= rest - 1) sum += degrees[std::countr_zero(rest)];
        t.beta[{std::popcount(s) - 1, sum}] += 1;
    }
    return t;
}

/// Labeled tree on vertices x1..xn from a Prüfer sequence (entries 0..n-1,
/// length n-2); every labeled tree arises from exactly one sequence.
inline vcover::Graph prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 2 || static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("prufer_decode: need n >= 2 and n-2 entries");
    auto name = [](int v) { return "x" + std::to_string(v + 1); };
    std::vector<int> degree(n, 1);
    for (int v : seq) ++degree[v];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    std::vector<std::pair<std::string, std::string>> edges;
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(name(leaf), name(v));
        if (--degree[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *leaves.rbegin();
    edges.emplace_back(name(a), name(b));
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back(name(v));
    return vcover::Graph(labels, edges);
}

}  // namespace oracle
