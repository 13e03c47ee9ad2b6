#include "vcover/betti.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace vcover {

namespace {

// Exact quotient with a tripwire: fraction-free elimination only ever
// produces divisible pairs, so a remainder is an internal error.
mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("betti: fraction-free division left a remainder");
    return q;
}

// Rank of the boundary map over F_2: incidence bits, eliminated with packed
// 64-bit rows. Mod-2 homology bounds rational homology from above, so a
// vanishing mod-2 rank certifies rational vanishing exactly.
long long boundary_rank_mod2(const std::vector<uint32_t>& lo, const std::vector<uint32_t>& hi) {
    if (lo.empty() || hi.empty()) return 0;
    const int rows = static_cast<int>(lo.size());
    const int cols = static_cast<int>(hi.size());
    const int words = (cols + 63) / 64;
    std::vector<uint64_t> m(static_cast<size_t>(rows) * words, 0);
    for (int j = 0; j < cols; ++j)
        for (uint32_t rest = hi[j]; rest; rest &= rest - 1) {
            uint32_t bit = rest & ~(rest - 1);
            auto it = std::lower_bound(lo.begin(), lo.end(), hi[j] ^ bit);
            m[static_cast<size_t>(it - lo.begin()) * words + j / 64] ^= uint64_t{1} << (j % 64);
        }

    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        const int w = col / 64;
        const uint64_t bit = uint64_t{1} << (col % 64);
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<size_t>(r) * words + w] & bit) {
                piv = r;
                break;
            }
        if (piv == -1) continue;
        if (piv != rank)
            std::swap_ranges(m.begin() + static_cast<size_t>(piv) * words,
                             m.begin() + static_cast<size_t>(piv + 1) * words,
                             m.begin() + static_cast<size_t>(rank) * words);
        for (int r = rank + 1; r < rows; ++r)
            if (m[static_cast<size_t>(r) * words + w] & bit)
                for (int k = w; k < words; ++k)
                    m[static_cast<size_t>(r) * words + k] ^=
                        m[static_cast<size_t>(rank) * words + k];
        ++rank;
    }
    return rank;
}

// Rank of the boundary map from the `hi` faces to the `lo` faces (`lo`
// sorted ascending). Entries are the usual alternating signs; the rank is
// computed by fraction-free Gaussian elimination, preferring small pivots
// to keep intermediate minors short.
long long boundary_rank(const std::vector<uint32_t>& lo, const std::vector<uint32_t>& hi) {
    if (lo.empty() || hi.empty()) return 0;
    const int rows = static_cast<int>(lo.size());
    const int cols = static_cast<int>(hi.size());
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (int j = 0; j < cols; ++j) {
        int sign = 1;
        for (uint32_t rest = hi[j]; rest; rest &= rest - 1) {
            uint32_t bit = rest & ~(rest - 1);
            auto it = std::lower_bound(lo.begin(), lo.end(), hi[j] ^ bit);
            a[it - lo.begin()][j] = sign;
            sign = -sign;
        }
    }

    int rank = 0;
    mpz_class prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            if (piv == -1 || mpz_cmpabs(a[r][col].get_mpz_t(), a[piv][col].get_mpz_t()) < 0)
                piv = r;
        }
        if (piv == -1) continue;
        std::swap(a[rank], a[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int j = col + 1; j < cols; ++j)
                a[r][j] = exact_div(a[rank][col] * a[r][j] - a[r][col] * a[rank][j], prev);
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

// Cancel collapsible pairs: a face contained in exactly one face of the
// next size up is removed together with that coface. Each cancellation
// preserves the homotopy type (the empty face pairs with a lone vertex,
// matching the augmented chain complex), so contractible complexes usually
// vanish outright and the boundary matrices stay small.
void collapse_faces(std::vector<uint32_t>& faces, uint32_t vertex_mask) {
    std::unordered_map<uint32_t, int> pos;
    pos.reserve(faces.size() * 2);
    for (size_t i = 0; i < faces.size(); ++i) pos.emplace(faces[i], static_cast<int>(i));

    auto alive_index = [&](uint32_t m) {
        auto it = pos.find(m);
        return it == pos.end() ? -1 : it->second;
    };

    std::vector<char> alive(faces.size(), 1);
    std::vector<int> cofaces(faces.size(), 0);
    for (size_t i = 0; i < faces.size(); ++i)
        for (uint32_t rest = vertex_mask & ~faces[i]; rest; rest &= rest - 1)
            if (alive_index(faces[i] | (rest & ~(rest - 1))) >= 0) ++cofaces[i];

    std::vector<int> queue;
    for (size_t i = 0; i < faces.size(); ++i)
        if (cofaces[i] == 1) queue.push_back(static_cast<int>(i));

    auto drop = [&](int idx) {
        alive[idx] = 0;
        for (uint32_t rest = faces[idx]; rest; rest &= rest - 1) {
            int sub = alive_index(faces[idx] ^ (rest & ~(rest - 1)));
            if (sub < 0 || !alive[sub]) continue;
            if (--cofaces[sub] == 1) queue.push_back(sub);
        }
    };

    while (!queue.empty()) {
        int f = queue.back();
        queue.pop_back();
        if (!alive[f] || cofaces[f] != 1) continue;
        int g = -1;
        for (uint32_t rest = vertex_mask & ~faces[f]; rest; rest &= rest - 1) {
            int c = alive_index(faces[f] | (rest & ~(rest - 1)));
            if (c >= 0 && alive[c]) {
                g = c;
                break;
            }
        }
        if (g < 0) throw std::logic_error("betti: collapse lost track of a coface");
        drop(f);
        drop(g);
    }

    std::vector<uint32_t> kept;
    kept.reserve(faces.size());
    for (size_t i = 0; i < faces.size(); ++i)
        if (alive[i]) kept.push_back(faces[i]);
    faces = std::move(kept);
}

// Reduced homology ranks of a downward-closed face list (empty face
// included) over the given vertices. Keys run from -1 to the dimension of
// the ORIGINAL complex; a void input yields an empty profile.
//
// Strategy: cancel collapsible pairs, then settle ranks exactly. Small
// remainders go straight to fraction-free elimination. Large remainders are
// screened over F_2 first; if mod-2 homology vanishes everywhere so does the
// rational homology, and if it survives in one dimension only, the reduced
// Euler characteristic pins that single rational rank. Only a remainder with
// mod-2 homology in several dimensions pays for big-integer elimination.
HomologyProfile homology_of_faces(std::vector<uint32_t> faces, uint32_t vertex_mask) {
    if (faces.empty()) return {};
    int top = 0;
    for (uint32_t f : faces) top = std::max(top, std::popcount(f));
    const int original_dim = top - 1;

    collapse_faces(faces, vertex_mask);

    HomologyProfile profile;
    for (int d = -1; d <= original_dim; ++d) profile[d] = 0;
    if (faces.empty()) return profile;

    std::vector<std::vector<uint32_t>> by_card(top + 2);
    for (uint32_t f : faces) by_card[std::popcount(f)].push_back(f);
    for (auto& level : by_card) std::sort(level.begin(), level.end());

    auto count_at = [&](int c) {
        return c < static_cast<int>(by_card.size()) ? static_cast<long long>(by_card[c].size())
                                                    : 0;
    };
    long long reduced_euler = 0;
    for (int c = 0; c <= top; ++c) reduced_euler += (c % 2 == 0 ? -count_at(c) : count_at(c));

    auto settle_exactly = [&]() {
        std::vector<long long> rank(top + 3, 0);
        for (int c = 1; c <= top + 1; ++c)
            rank[c] = boundary_rank(by_card[c - 1], by_card[c]);
        long long homology_euler = 0;
        for (int d = -1; d <= original_dim; ++d) {
            int c = d + 1;
            long long h = count_at(c) - rank[c] - rank[c + 1];
            if (h < 0) throw std::logic_error("betti: negative homology rank");
            profile[d] = h;
            homology_euler += (d % 2 == 0 ? h : -h);
        }
        if (homology_euler != reduced_euler)
            throw std::logic_error("betti: Euler characteristic mismatch");
    };

    if (faces.size() <= 96) {
        settle_exactly();
        return profile;
    }

    std::vector<long long> rank2(top + 3, 0);
    for (int c = 1; c <= top + 1; ++c)
        rank2[c] = boundary_rank_mod2(by_card[c - 1], by_card[c]);
    int survivor = -2;
    bool spread = false;
    for (int d = -1; d <= original_dim && !spread; ++d) {
        int c = d + 1;
        long long h2 = count_at(c) - rank2[c] - rank2[c + 1];
        if (h2 < 0) throw std::logic_error("betti: negative mod-2 homology rank");
        if (h2 == 0) continue;
        if (survivor != -2) spread = true;
        survivor = d;
    }
    if (!spread) {
        if (survivor == -2) return profile;
        long long h = survivor % 2 == 0 ? reduced_euler : -reduced_euler;
        if (h >= 0) {
            profile[survivor] = h;
            return profile;
        }
    }
    settle_exactly();
    return profile;
}

// Support masks of the generators over the registry order.
std::vector<uint32_t> support_masks(const MonomialIdeal& ideal) {
    std::unordered_map<std::string, int> index;
    for (size_t i = 0; i < ideal.vars().size(); ++i)
        index.emplace(ideal.vars()[i], static_cast<int>(i));
    std::vector<uint32_t> supports;
    supports.reserve(ideal.generator_count());
    for (const Monomial& g : ideal.generators()) {
        uint32_t m = 0;
        for (const auto& [v, e] : g) m |= 1u << index.at(v);
        supports.push_back(m);
    }
    return supports;
}

// non_face[m] for every subset mask: whether some generator support sits
// inside m, closed upwards one variable at a time.
std::vector<char> non_face_table(const std::vector<uint32_t>& supports, int n) {
    std::vector<char> non_face(size_t{1} << n, 0);
    for (uint32_t s : supports) non_face[s] = 1;
    for (int v = 0; v < n; ++v)
        for (uint32_t m = 0; m < (1u << n); ++m)
            if ((m >> v & 1) && non_face[m ^ (1u << v)]) non_face[m] = 1;
    return non_face;
}

// Ideal of the degree-j squarefree members of a squarefree ideal.
MonomialIdeal squarefree_component(const MonomialIdeal& ideal, int j) {
    const auto& vars = ideal.vars();
    const int n = static_cast<int>(vars.size());
    std::vector<Monomial> gens;
    std::vector<int> pick(j);
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth == j) {
            Monomial m;
            for (int p : pick) m[vars[p]] = 1;
            if (ideal.contains(m)) gens.push_back(std::move(m));
            return;
        }
        for (int v = from; v <= n - (j - depth); ++v) {
            pick[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    if (j == 0) {
        if (ideal.contains(Monomial{})) gens.push_back(Monomial{});
    } else if (j <= n) {
        rec(rec, 0, 0);
    }
    return MonomialIdeal(vars, gens);
}

std::map<int, long long> generator_degree_counts(const MonomialIdeal& ideal) {
    std::map<int, long long> counts;
    for (const Monomial& g : ideal.generators()) ++counts[monomial_degree(g)];
    return counts;
}

}  // namespace

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree())
        throw std::invalid_argument("stanley_reisner: ideal is not squarefree");
    const auto& vars = ideal.vars();
    const int n = static_cast<int>(vars.size());
    if (ideal.is_zero()) {
        uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
        return SimplicialComplex(vars, std::vector<uint32_t>{all});
    }
    if (ideal.is_unit()) return SimplicialComplex(vars, std::vector<uint32_t>{});
    if (n > 20) throw std::length_error("stanley_reisner: more than 20 variables");

    std::vector<char> non_face = non_face_table(support_masks(ideal), n);
    std::vector<uint32_t> facets;
    for (uint32_t m = 0; m < (1u << n); ++m) {
        if (non_face[m]) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(m >> v & 1) && !non_face[m | (1u << v)]) maximal = false;
        if (maximal) facets.push_back(m);
    }
    return SimplicialComplex(vars, facets);
}

HomologyProfile reduced_homology(const SimplicialComplex& complex) {
    if (complex.facet_masks().empty()) return {};
    const int n = complex.vertex_count();
    if (n > 20) throw std::length_error("reduced_homology: more than 20 vertices");

    std::vector<char> seen(size_t{1} << n, 0);
    std::vector<uint32_t> faces;
    for (uint32_t facet : complex.facet_masks())
        for (uint32_t sub = facet;; sub = (sub - 1) & facet) {
            if (!seen[sub]) {
                seen[sub] = 1;
                faces.push_back(sub);
            }
            if (sub == 0) break;
        }
    return homology_of_faces(std::move(faces), (1u << n) - 1);
}

BettiTable betti_table(const MonomialIdeal& ideal) {
    BettiTable table;
    if (ideal.is_zero()) return table;
    if (ideal.is_unit()) {
        table.beta[{0, 0}] = 1;
        return table;
    }

    // A squarefree ideal is its own polarization up to renaming.
    MonomialIdeal pol = ideal.is_squarefree() ? ideal : polarize(ideal);
    const int n = static_cast<int>(pol.vars().size());
    if (n > 16) throw std::length_error("betti_table: more than 16 variables after polarization");

    std::vector<char> non_face = non_face_table(support_masks(pol), n);
    std::vector<uint32_t> global_facets;
    for (uint32_t m = 0; m < (1u << n); ++m) {
        if (non_face[m]) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!(m >> v & 1) && !non_face[m | (1u << v)]) maximal = false;
        if (maximal) global_facets.push_back(m);
    }

    std::vector<uint32_t> faces;
    for (uint32_t sigma = 1; sigma < (1u << n); ++sigma) {
        // A vertex shared by every restricted facet makes the restriction a
        // cone, which has no reduced homology.
        uint32_t common = sigma;
        for (uint32_t f : global_facets) {
            common &= f;
            if (!common) break;
        }
        if (common) continue;

        faces.clear();
        for (uint32_t sub = sigma;; sub = (sub - 1) & sigma) {
            if (!non_face[sub]) faces.push_back(sub);
            if (sub == 0) break;
        }
        const int j = std::popcount(sigma);
        for (const auto& [d, h] : homology_of_faces(std::move(faces), sigma)) {
            int i = j - d - 2;
            if (h > 0 && i >= 0) table.beta[{i, j}] += h;
        }
    }

    std::map<int, long long> row0;
    for (const auto& [key, value] : table.beta)
        if (key.first == 0) row0[key.second] = value;
    if (row0 != generator_degree_counts(ideal))
        throw std::logic_error("betti_table: row zero disagrees with the generator degrees");
    return table;
}

int regularity(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::invalid_argument("regularity: zero ideal");
    int reg = 0;
    for (const auto& [key, value] : betti_table(ideal).beta)
        if (value > 0) reg = std::max(reg, key.second - key.first);
    return reg;
}

bool has_linear_resolution(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) throw std::invalid_argument("has_linear_resolution: zero ideal");
    const int d = monomial_degree(ideal.generators().front());
    for (const Monomial& g : ideal.generators())
        if (monomial_degree(g) != d)
            throw std::invalid_argument("has_linear_resolution: not generated in a single degree");
    for (const auto& [key, value] : betti_table(ideal).beta)
        if (value > 0 && key.second - key.first != d) return false;
    return true;
}

ComponentwiseReport is_componentwise_linear(const MonomialIdeal& ideal) {
    ComponentwiseReport report;
    if (ideal.is_zero()) return report;

    MonomialIdeal pol = ideal.is_squarefree() ? ideal : polarize(ideal);
    std::set<int> degrees;
    for (const Monomial& g : pol.generators()) degrees.insert(monomial_degree(g));

    for (int j : degrees) {
        MonomialIdeal comp = squarefree_component(pol, j);
        bool linear = has_linear_resolution(comp);
        report.degrees.emplace_back(j, linear);
        if (!linear) report.componentwise_linear = false;
    }
    return report;
}

}  // namespace vcover
