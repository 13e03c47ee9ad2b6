#include "vcover/ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "vcover/complex.hpp"
#include "vcover/gadget.hpp"

namespace vcover {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
    for (const auto& [v, e] : a) {
        auto it = b.find(v);
        if (it == b.end() || it->second < e) return false;
    }
    return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b) {
        auto [it, inserted] = out.emplace(v, e);
        if (!inserted && it->second < e) it->second = e;
    }
    return out;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [v, e] : b) out[v] += e;
    return out;
}

// a / gcd(a, b): the part of a that b fails to cancel.
Monomial mono_quot(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (const auto& [v, e] : a) {
        auto it = b.find(v);
        int keep = e - (it == b.end() ? 0 : std::min(e, it->second));
        if (keep > 0) out[v] = keep;
    }
    return out;
}

bool mono_less(const Monomial& a, const Monomial& b) {
    int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return a < b;
}

// Sort, deduplicate, and drop generators divisible by an earlier one. After
// the degree-first sort a divisor always precedes its multiples, so one
// backward scan suffices.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), mono_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& kept : out)
            if (divides(kept, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<std::string> vars, const std::vector<Monomial>& gens)
    : vars_(std::move(vars)) {
    {
        auto sorted = vars_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("monomial ideal: duplicate variable");
    }
    std::set<std::string> known(vars_.begin(), vars_.end());
    std::vector<Monomial> clean;
    clean.reserve(gens.size());
    for (const Monomial& g : gens) {
        Monomial m;
        for (const auto& [v, e] : g) {
            if (e < 0) throw std::invalid_argument("monomial ideal: negative exponent");
            if (e == 0) continue;
            if (!known.count(v))
                throw std::invalid_argument("monomial ideal: unknown variable '" + v + "'");
            m[v] = e;
        }
        clean.push_back(std::move(m));
    }
    gens_ = minimalize(std::move(clean));
}

bool MonomialIdeal::is_squarefree() const {
    for (const Monomial& g : gens_)
        for (const auto& [v, e] : g)
            if (e > 1) return false;
    return true;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    for (const Monomial& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

std::vector<std::vector<std::string>> minimal_vertex_covers(const Graph& g) {
    int n = g.vertex_count();
    uint32_t full = n == 0 ? 0u : (n >= 32 ? ~0u : (1u << n) - 1);

    std::vector<std::vector<int>> covers;
    for (uint32_t mis : maximal_independent_sets(g.adjacency_masks(), full)) {
        std::vector<int> cov;
        for (uint32_t m = full & ~mis; m;) {
            cov.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        covers.push_back(std::move(cov));
    }
    std::sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    // Re-verify: every edge covered, and removing any single vertex exposes one.
    for (const auto& cov : covers) {
        std::vector<bool> in(n, false);
        for (int v : cov) in[v] = true;
        for (auto [u, v] : g.edges())
            if (!in[u] && !in[v]) throw std::logic_error("minimal_vertex_covers: uncovered edge");
        for (int w : cov) {
            bool needed = false;
            for (auto [u, v] : g.edges())
                if ((u == w && !in[v]) || (v == w && !in[u])) {
                    needed = true;
                    break;
                }
            if (!needed) throw std::logic_error("minimal_vertex_covers: non-minimal cover");
        }
    }

    std::vector<std::vector<std::string>> out;
    out.reserve(covers.size());
    for (const auto& cov : covers) {
        std::vector<std::string> labels;
        labels.reserve(cov.size());
        for (int v : cov) labels.push_back(g.label(v));
        out.push_back(std::move(labels));
    }
    return out;
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    gens.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_labels(e);
        gens.push_back({{u, 1}, {v, 1}});
    }
    return MonomialIdeal(g.vertex_labels(), gens);
}

MonomialIdeal cover_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (const auto& cover : minimal_vertex_covers(g)) {
        Monomial m;
        for (const std::string& v : cover) m[v] = 1;
        gens.push_back(std::move(m));
    }
    MonomialIdeal j(g.vertex_labels(), gens);
    if (!(j == alexander_dual(edge_ideal(g))))
        throw std::logic_error("cover_ideal: dual-of-edge-ideal cross-check failed");
    return j;
}

MonomialIdeal alexander_dual(const MonomialIdeal& i) {
    if (!i.is_squarefree())
        throw std::invalid_argument("alexander_dual: ideal is not squarefree");
    std::vector<Monomial> acc = {Monomial{}};
    for (const Monomial& g : i.generators()) {
        std::vector<Monomial> next;
        next.reserve(acc.size() * g.size());
        for (const Monomial& h : acc)
            for (const auto& [v, e] : g) next.push_back(mono_lcm(h, Monomial{{v, 1}}));
        acc = minimalize(std::move(next));
    }
    return MonomialIdeal(i.vars(), acc);
}

MonomialIdeal power(const MonomialIdeal& i, int s) {
    if (s < 1) throw std::invalid_argument("power: exponent must be at least 1");
    const auto& gens = i.generators();
    std::vector<Monomial> out;
    std::function<void(size_t, int, const Monomial&)> rec = [&](size_t start, int left,
                                                               const Monomial& acc) {
        if (left == 0) {
            out.push_back(acc);
            return;
        }
        for (size_t idx = start; idx < gens.size(); ++idx)
            rec(idx, left - 1, mono_mul(acc, gens[idx]));
    };
    rec(0, s, Monomial{});
    return MonomialIdeal(i.vars(), out);
}

MonomialIdeal symbolic_power_cover(const Graph& g, int s) {
    if (s < 1) throw std::invalid_argument("symbolic_power_cover: exponent must be at least 1");
    std::vector<Monomial> acc = {Monomial{}};
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_labels(e);
        std::vector<Monomial> next;
        next.reserve(acc.size() * (s + 1));
        for (const Monomial& h : acc)
            for (int t = 0; t <= s; ++t) {
                Monomial p;
                if (t > 0) p[u] = t;
                if (s - t > 0) p[v] = s - t;
                next.push_back(mono_lcm(h, p));
            }
        acc = minimalize(std::move(next));
    }
    MonomialIdeal out(g.vertex_labels(), acc);
    // Membership sanity: exponents at each edge's endpoints must sum to >= s.
    for (const Monomial& m : out.generators())
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edge_labels(e);
            auto iu = m.find(u), iv = m.find(v);
            int du = iu == m.end() ? 0 : iu->second;
            int dv = iv == m.end() ? 0 : iv->second;
            if (du + dv < s)
                throw std::logic_error("symbolic_power_cover: membership check failed");
        }
    return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<std::string> vars = a.vars();
    std::set<std::string> seen(vars.begin(), vars.end());
    for (const std::string& v : b.vars())
        if (seen.insert(v).second) vars.push_back(v);
    std::vector<Monomial> out;
    out.reserve(a.generator_count() * static_cast<size_t>(b.generator_count()));
    for (const Monomial& x : a.generators())
        for (const Monomial& y : b.generators()) out.push_back(mono_lcm(x, y));
    return MonomialIdeal(std::move(vars), out);
}

MonomialIdeal polarize(const MonomialIdeal& i) {
    std::map<std::string, int> layers;
    for (const Monomial& g : i.generators())
        for (const auto& [v, e] : g) {
            auto [it, inserted] = layers.emplace(v, e);
            if (!inserted && it->second < e) it->second = e;
        }
    std::vector<std::string> vars;
    for (const std::string& v : i.vars()) {
        auto it = layers.find(v);
        if (it == layers.end()) continue;
        for (const std::string& lv : polarization_naming(v, it->second)) vars.push_back(lv);
    }
    std::vector<Monomial> gens;
    gens.reserve(i.generator_count());
    for (const Monomial& g : i.generators()) {
        Monomial m;
        for (const auto& [v, e] : g)
            for (const std::string& lv : polarization_naming(v, e)) m[lv] = 1;
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(std::move(vars), gens);
}

MonomialIdeal component(const MonomialIdeal& i, int j) {
    if (j < 0) throw std::invalid_argument("component: negative degree");
    const auto& vars = i.vars();
    std::vector<Monomial> out;
    for (const Monomial& g : i.generators()) {
        int d = j - monomial_degree(g);
        if (d < 0) continue;
        Monomial acc;
        std::function<void(size_t, int)> rec = [&](size_t vi, int left) {
            if (left == 0) {
                out.push_back(mono_mul(g, acc));
                return;
            }
            if (vi >= vars.size()) return;
            for (int take = left; take >= 0; --take) {
                if (take > 0) acc[vars[vi]] = take;
                rec(vi + 1, left - take);
                if (take > 0) acc.erase(vars[vi]);
            }
        };
        rec(0, d);
    }
    return MonomialIdeal(vars, out);
}

int max_gen_degree(const MonomialIdeal& i) {
    if (i.is_zero()) throw std::invalid_argument("max_gen_degree: zero ideal");
    int d = 0;
    for (const Monomial& g : i.generators()) d = std::max(d, monomial_degree(g));
    return d;
}

namespace {

// Is <prior> : u generated by variables? The colon of monomial ideals is
// generated by the quotients prior_j / gcd(prior_j, u); it is variable-
// generated exactly when every quotient is a multiple of a degree-1 one.
bool colon_variable_generated(const std::vector<Monomial>& prior, const Monomial& u) {
    std::vector<Monomial> q;
    q.reserve(prior.size());
    for (const Monomial& p : prior) q.push_back(mono_quot(p, u));
    for (const Monomial& a : q) {
        int d = monomial_degree(a);
        if (d == 0) return false;  // u redundant; cannot happen on an antichain
        if (d == 1) continue;
        bool dominated = false;
        for (const Monomial& b : q)
            if (monomial_degree(b) == 1 && divides(b, a)) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

}  // namespace

std::optional<std::vector<Monomial>> linear_quotients_order(const MonomialIdeal& i) {
    const auto& gens = i.generators();
    const int r = i.generator_count();
    std::vector<int> order;
    std::vector<Monomial> prefix;
    std::vector<bool> used(r, false);
    // The colon at each step depends only on the set of earlier generators,
    // so a prefix set that cannot be completed never needs a second visit;
    // this keeps the refutation exhaustive without factorial blowup.
    std::unordered_set<std::string> dead;
    auto pack = [&] {
        std::string s((r + 7) / 8, '\0');
        for (int b = 0; b < r; ++b)
            if (used[b]) s[b >> 3] = static_cast<char>(s[b >> 3] | (1 << (b & 7)));
        return s;
    };
    std::function<bool()> dfs = [&]() -> bool {
        if (static_cast<int>(order.size()) == r) return true;
        std::string key = pack();
        if (dead.count(key)) return false;
        for (int c = 0; c < r; ++c) {
            if (used[c]) continue;
            if (!colon_variable_generated(prefix, gens[c])) continue;
            used[c] = true;
            order.push_back(c);
            prefix.push_back(gens[c]);
            if (dfs()) return true;
            used[c] = false;
            order.pop_back();
            prefix.pop_back();
        }
        dead.insert(std::move(key));
        return false;
    };
    if (!dfs()) return std::nullopt;
    std::vector<Monomial> out;
    out.reserve(r);
    for (int idx : order) out.push_back(gens[idx]);
    if (!verify_linear_quotients(i, out))
        throw std::logic_error("linear_quotients_order: found order failed verification");
    return out;
}

bool verify_linear_quotients(const MonomialIdeal& i, const std::vector<Monomial>& order) {
    std::vector<Monomial> sorted = order;
    std::sort(sorted.begin(), sorted.end(), mono_less);
    if (sorted != i.generators()) return false;
    std::vector<Monomial> prefix;
    prefix.reserve(order.size());
    for (const Monomial& u : order) {
        if (!prefix.empty() && !colon_variable_generated(prefix, u)) return false;
        prefix.push_back(u);
    }
    return true;
}

}  // namespace vcover
