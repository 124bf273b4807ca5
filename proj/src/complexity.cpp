#include "finitetc/complexity.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <unordered_set>

namespace finitetc {

PowerSpace make_power(const PosetPtr& p, int n, std::size_t size_cap) {
    if (n < 1) throw Error("power exponent must be positive");
    PowerSpace ps;
    ps.base = p;
    ps.n = n;
    ps.total = power(p, n, &ps.coords, size_cap);
    return ps;
}

// --- SectionCriterion -----------------------------------------------------

Tri SectionCriterion::passes(const Bitset& q) {
    auto it = memo_.find(q);
    if (it != memo_.end()) return it->second;
    ++evals_;
    Tri t = evaluate(q);
    memo_.emplace(q, t);
    return t;
}

ProjectionsHomotopicCriterion::ProjectionsHomotopicCriterion(PosetPtr ambient, PosetPtr factor,
                                                             std::vector<std::vector<int>> maps,
                                                             Budgets budgets)
    : SectionCriterion(std::move(ambient)),
      factor_(std::move(factor)),
      maps_(std::move(maps)),
      budgets_(budgets),
      factor_core_(compute_core(*factor_)) {
    if (maps_.empty()) throw Error("criterion needs at least one map");
    for (const auto& m : maps_)
        if (int(m.size()) != ambient_->size()) throw DomainMismatch("map length mismatch");
}

Tri ProjectionsHomotopicCriterion::evaluate(const Bitset& q) {
    if (!q.any()) return Tri::True;
    if (factor_core_.core->size() == 1) return Tri::True;  // contractible codomain
    auto elems = q.to_indices();
    std::vector<std::vector<int>> restricted(maps_.size(), std::vector<int>(elems.size()));
    for (std::size_t j = 0; j < maps_.size(); ++j)
        for (std::size_t i = 0; i < elems.size(); ++i)
            restricted[j][i] = maps_[j][elems[i]];
    bool all_equal = true;
    for (std::size_t j = 1; j < maps_.size() && all_equal; ++j)
        all_equal = restricted[j] == restricted[0];
    if (all_equal) return Tri::True;
    PosetPtr sub = ambient_->induced(q);
    // a down-set with a single maximal element is a cone: every map on it is
    // homotopic to the constant at its apex value, so the maps are pairwise
    // homotopic exactly when those values share a component of the factor
    auto maxelems = sub->maximal_elements();
    if (maxelems.size() == 1) {
        const int apex = maxelems[0];
        auto ids = factor_->component_ids();
        for (std::size_t j = 1; j < maps_.size(); ++j)
            if (ids[restricted[j][apex]] != ids[restricted[0][apex]]) return Tri::False;
        return Tri::True;
    }
    Tri acc = Tri::True;
    for (std::size_t j = 1; j < maps_.size(); ++j) {
        Tri t = homotopic_assignments(*sub, *factor_, restricted[0], restricted[j], budgets_);
        if (t == Tri::False) return Tri::False;
        acc = tri_and(acc, t);
    }
    return acc;
}

std::optional<int> ProjectionsHomotopicCriterion::repair_hint(const Bitset& q) {
    if (!q.any()) return std::nullopt;
    auto pos = crown_positions(*factor_core_.core);
    if (!pos) return std::nullopt;
    const int period = factor_core_.core->size();
    auto elems = q.to_indices();
    PosetPtr sub = ambient_->induced(q);
    std::vector<std::vector<int>> cored(maps_.size(), std::vector<int>(elems.size()));
    for (std::size_t j = 0; j < maps_.size(); ++j)
        for (std::size_t i = 0; i < elems.size(); ++i)
            cored[j][i] = factor_core_.retraction[maps_[j][elems[i]]];
    for (std::size_t j = 1; j < maps_.size(); ++j)
        if (auto edge = winding_violation(*sub, *pos, period, cored[0], cored[j]))
            return elems[edge->second];
    return std::nullopt;
}

// --- BoundedSectionCriterion ------------------------------------------------

BoundedSectionCriterion::BoundedSectionCriterion(PowerSpace space, int m, Variant variant,
                                                 Budgets budgets)
    : SectionCriterion(space.total), space_(std::move(space)), m_(m), variant_(variant),
      budgets_(budgets) {
    if (m < 0) throw Error("fence length must be nonnegative");
}

Tri BoundedSectionCriterion::evaluate(const Bitset& q) { return solve(q, nullptr); }

// Backtracking search for a section over q. Variables are (element, fence
// node) pairs; elements in a linear-extension order of the induced subposet,
// nodes ascending. Constraints: the fence zigzag within each element's path,
// pointwise monotonicity across cover pairs of the induced subposet, and the
// fixed endpoint values.
Tri BoundedSectionCriterion::solve(const Bitset& q, std::vector<std::vector<int>>* solution) {
    if (!q.any()) return Tri::True;
    auto elems = q.to_indices();
    const int E = int(elems.size());
    const int nodes = variant_ == Variant::Wedge ? FenceNodes::wedge_count(space_.n, m_)
                                                 : FenceNodes::linear_count(space_.n, m_);
    const int PV = space_.base->size();
    const FinitePoset& factor = *space_.base;

    std::vector<int> to_sub;
    PosetPtr sub = ambient_->induced(q, &to_sub);

    // element order: linear extension of the induced subposet
    std::vector<int> elem_order(sub->linear_extension());  // sub indices

    // fixed endpoint values per (sub element, node); -1 when free
    std::vector<std::vector<int>> fixed(E, std::vector<int>(nodes, -1));
    for (int si = 0; si < E; ++si) {
        int orig = elems[si];
        for (int j = 1; j <= space_.n; ++j) {
            int node = endpoint_node(variant_, space_.n, m_, j);
            int v = space_.coords[orig][j - 1];
            // endpoint nodes coincide at m = 0; conflicting equations mean no
            // section exists over any set containing this element
            if (fixed[si][node] >= 0 && fixed[si][node] != v) return Tri::False;
            fixed[si][node] = v;
        }
    }

    // fence partner with the smaller node index, per node; -1 for node 0
    auto pairs = fence_pairs(variant_, space_.n, m_);
    std::vector<int> partner(nodes, -1);
    std::vector<bool> partner_ascent(nodes, false);
    for (const auto& pr : pairs) {
        partner[pr.b] = pr.a;
        partner_ascent[pr.b] = pr.ascent;  // value(a) <= value(b) iff ascent
    }

    std::vector<std::vector<int>> val(E, std::vector<int>(nodes, -1));
    std::size_t budget = budgets_.csp_nodes;
    std::size_t used = 0;
    bool tripped = false;

    // order of variables: (position in elem_order, node ascending)
    const int total_vars = E * nodes;
    std::function<bool(int)> rec = [&](int var) -> bool {
        if (var == total_vars) return true;
        if (tripped) return false;
        const int si = elem_order[var / nodes];
        const int t = var % nodes;
        auto feasible = [&](int v) {
            if (partner[t] >= 0) {
                int w = val[si][partner[t]];
                if (partner_ascent[t] ? !factor.leq(w, v) : !factor.leq(v, w)) return false;
            }
            for (int sj : sub->lower_covers(si))
                if (val[sj][t] >= 0 && !factor.leq(val[sj][t], v)) return false;
            for (int sj : sub->upper_covers(si))
                if (val[sj][t] >= 0 && !factor.leq(v, val[sj][t])) return false;
            return true;
        };
        if (fixed[si][t] >= 0) {
            if (++used > budget) {
                tripped = true;
                return false;
            }
            int v = fixed[si][t];
            if (!feasible(v)) return false;
            val[si][t] = v;
            if (rec(var + 1)) return true;
            val[si][t] = -1;
            return false;
        }
        for (int v = 0; v < PV; ++v) {
            if (++used > budget) {
                tripped = true;
                return false;
            }
            if (!feasible(v)) continue;
            val[si][t] = v;
            if (rec(var + 1)) return true;
            val[si][t] = -1;
        }
        return false;
    };

    bool found = rec(0);
    if (found) {
        if (solution) {
            solution->assign(E, {});
            for (int si = 0; si < E; ++si) (*solution)[si] = val[si];
        }
        return Tri::True;
    }
    return tripped ? Tri::Unknown : Tri::False;
}

std::optional<SectionWitness> BoundedSectionCriterion::find_witness(const Bitset& q) {
    std::vector<std::vector<int>> paths;
    if (solve(q, &paths) != Tri::True) return std::nullopt;
    SectionWitness w;
    w.variant = variant_;
    w.n = space_.n;
    w.m = m_;
    w.ambient = space_.total;
    w.factor = space_.base;
    w.coords = space_.coords;
    w.domain = q;
    w.paths = std::move(paths);
    w.validate();
    return w;
}

// --- ContractibleInCriterion -----------------------------------------------

ContractibleInCriterion::ContractibleInCriterion(PosetPtr ambient, Budgets budgets)
    : SectionCriterion(std::move(ambient)), budgets_(budgets) {}

Tri ContractibleInCriterion::evaluate(const Bitset& q) {
    if (!q.any()) return Tri::True;
    return contractible_in(DownSet(ambient_, q), budgets_);
}

// --- Enumeration of maximal passing opens -----------------------------------

MaximalOpensResult maximal_passing_opens(SectionCriterion& crit, const Budgets& budgets) {
    MaximalOpensResult res;
    const FinitePoset& p = crit.ambient();
    const std::size_t start = crit.eval_count();
    // scale the eval budget down on large ambients: each evaluation there is
    // itself expensive
    std::size_t eval_budget = budgets.enumeration_evals;
    if (p.size() > 64)
        eval_budget = std::max<std::size_t>(500, eval_budget / std::size_t(p.size() / 32));
    std::vector<Bitset> stack{p.full_mask()};
    std::unordered_set<Bitset, BitsetHash> visited{p.full_mask()};
    res.complete = true;
    std::size_t unknown_streak = 0;
    while (!stack.empty()) {
        if (crit.eval_count() - start > eval_budget || unknown_streak > 50) {
            res.complete = false;
            break;
        }
        Bitset c = std::move(stack.back());
        stack.pop_back();
        bool contained = false;
        for (const auto& r : res.opens)
            if (c.is_subset_of(r)) {
                contained = true;
                break;
            }
        if (contained) continue;  // passes but cannot be maximal
        Tri t = crit.passes(c);
        if (t == Tri::True) {
            unknown_streak = 0;
            std::erase_if(res.opens, [&](const Bitset& r) { return r.is_subset_of(c); });
            res.opens.push_back(std::move(c));
            continue;
        }
        if (t == Tri::Unknown) {
            res.saw_unknown = true;
            ++unknown_streak;
        } else {
            unknown_streak = 0;
        }
        for (int u : p.maximal_in(c)) {
            Bitset child = c;
            child.reset(u);
            if (child.any() && visited.insert(child).second) stack.push_back(std::move(child));
        }
    }
    // deterministic output order regardless of DFS discovery order
    std::sort(res.opens.begin(), res.opens.end(),
              [](const Bitset& a, const Bitset& b) {
                  if (a.count() != b.count()) return a.count() > b.count();
                  return a < b;
              });
    return res;
}

// --- Exact set cover ---------------------------------------------------------

CoverSearchResult exact_min_cover(const Bitset& universe, const std::vector<Bitset>& candidates,
                                  const Budgets& budgets) {
    const std::size_t N = universe.size();
    // restrict to the universe and drop dominated candidates
    std::vector<Bitset> cands;
    std::vector<int> orig_index;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        Bitset c = candidates[i];
        c &= universe;
        if (!c.any()) continue;
        cands.push_back(std::move(c));
        orig_index.push_back(int(i));
    }
    {
        std::vector<char> drop(cands.size(), 0);
        for (std::size_t i = 0; i < cands.size(); ++i)
            for (std::size_t j = 0; j < cands.size() && !drop[i]; ++j) {
                if (i == j || drop[j]) continue;
                if (cands[i].is_subset_of(cands[j]) && (cands[i] != cands[j] || i > j))
                    drop[i] = 1;
            }
        std::vector<Bitset> kept;
        std::vector<int> kept_idx;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (!drop[i]) {
                kept.push_back(std::move(cands[i]));
                kept_idx.push_back(orig_index[i]);
            }
        cands = std::move(kept);
        orig_index = std::move(kept_idx);
    }
    {
        Bitset all(N);
        for (const auto& c : cands) all |= c;
        if (!universe.is_subset_of(all)) throw Infeasible("candidates do not cover the universe");
    }

    auto greedy = [&]() {
        std::vector<int> picked;
        Bitset covered(N);
        while (!universe.is_subset_of(covered)) {
            int best = -1;
            std::size_t best_gain = 0;
            for (std::size_t i = 0; i < cands.size(); ++i) {
                Bitset gain = cands[i];
                gain.subtract(covered);
                gain &= universe;
                if (gain.count() > best_gain) {
                    best_gain = gain.count();
                    best = int(i);
                }
            }
            picked.push_back(best);
            covered |= cands[best];
        }
        return picked;
    };

    std::vector<int> best = greedy();
    bool optimal = false;

    // candidates covering each element, for the branching heuristic
    std::vector<std::vector<int>> covering(N);
    universe.for_each_set([&](std::size_t x) {
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (cands[i].test(x)) covering[x].push_back(int(i));
    });
    std::size_t max_size = 0;
    for (const auto& c : cands) max_size = std::max(max_size, c.count());

    std::size_t nodes = 0;
    bool tripped = false;
    std::vector<int> chosen;
    std::function<void(const Bitset&)> rec = [&](const Bitset& covered) {
        if (tripped) return;
        if (++nodes > budgets.cover_nodes) {
            tripped = true;
            return;
        }
        Bitset remaining = universe;
        remaining.subtract(covered);
        if (!remaining.any()) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        std::size_t need = (remaining.count() + max_size - 1) / max_size;
        if (chosen.size() + need >= best.size()) return;
        // branch on the uncovered element with the fewest candidates
        int pick = -1;
        std::size_t fewest = SIZE_MAX;
        remaining.for_each_set([&](std::size_t x) {
            if (covering[x].size() < fewest) {
                fewest = covering[x].size();
                pick = int(x);
            }
        });
        for (int i : covering[pick]) {
            chosen.push_back(i);
            Bitset next = covered;
            next |= cands[i];
            rec(next);
            chosen.pop_back();
            if (tripped) return;
        }
    };
    rec(Bitset(N));
    optimal = !tripped;

    std::sort(best.begin(), best.end());
    CoverSearchResult out;
    out.optimal = optimal;
    for (int i : best) out.cover.push_back(candidates[orig_index[i]]);
    return out;
}

// --- Full cover pipeline -----------------------------------------------------

namespace {

// Maximum clique in the conflict graph on maximal elements; conflicting
// minimal opens cannot share a cover member, so a clique bounds the cover
// size from below.
int clique_lower_bound(const std::vector<std::vector<char>>& adj, std::size_t node_budget) {
    const int M = int(adj.size());
    std::vector<int> best, cur;
    std::size_t nodes = 0;
    bool tripped = false;
    std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& allowed) {
        if (tripped) return;
        if (++nodes > node_budget) {
            tripped = true;
            return;
        }
        if (cur.size() + allowed.size() <= best.size()) return;
        if (allowed.empty()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        std::vector<int> rest = allowed;
        while (!rest.empty()) {
            if (cur.size() + rest.size() <= best.size()) return;
            int v = rest.front();
            rest.erase(rest.begin());
            cur.push_back(v);
            std::vector<int> next;
            for (int u : rest)
                if (adj[v][u]) next.push_back(u);
            rec(next);
            cur.pop_back();
            if (tripped) return;
        }
    };
    std::vector<int> all(M);
    for (int i = 0; i < M; ++i) all[i] = i;
    rec(all);
    if (!tripped) return int(best.size());
    // greedy fallback
    std::vector<int> g;
    for (int v = 0; v < M; ++v) {
        bool ok = true;
        for (int u : g) ok = ok && adj[v][u];
        if (ok) g.push_back(v);
    }
    return int(std::max(best.size(), g.size()));
}

// Maximal independent sets of the conflict graph, capped; sources of
// candidate opens when enumeration is incomplete.
std::vector<std::vector<int>> independent_sets(const std::vector<std::vector<char>>& adj,
                                               std::size_t set_cap, std::size_t node_cap) {
    const int M = int(adj.size());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::size_t nodes = 0;
    // Bron-Kerbosch on the complement graph, no pivoting (M is small)
    std::function<void(std::vector<int>, std::vector<int>)> rec = [&](std::vector<int> cand,
                                                                      std::vector<int> excl) {
        if (out.size() >= set_cap || ++nodes > node_cap) return;
        if (cand.empty() && excl.empty()) {
            out.push_back(cur);
            return;
        }
        while (!cand.empty()) {
            if (out.size() >= set_cap || nodes > node_cap) return;
            int v = cand.front();
            cand.erase(cand.begin());
            std::vector<int> nc, ne;
            for (int u : cand)
                if (!adj[v][u]) nc.push_back(u);
            for (int u : excl)
                if (!adj[v][u]) ne.push_back(u);
            cur.push_back(v);
            rec(nc, ne);
            cur.pop_back();
            excl.push_back(v);
        }
    };
    std::vector<int> all(M);
    for (int i = 0; i < M; ++i) all[i] = i;
    rec(all, {});
    return out;
}

void absorb_candidate(std::vector<Bitset>& cands, Bitset c) {
    for (const auto& r : cands)
        if (c.is_subset_of(r)) return;
    std::erase_if(cands, [&](const Bitset& r) { return r.is_subset_of(c); });
    cands.push_back(std::move(c));
}

}  // namespace

CoverOutcome minimum_cover(SectionCriterion& crit, const std::vector<Bitset>& known_passing,
                           const ComputeConfig& config) {
    CoverOutcome out;
    const FinitePoset& p = crit.ambient();
    const int N = p.size();
    if (N == 0) {
        out.value = 0;
        out.exact = true;
        return out;
    }
    const Bitset full = p.full_mask();
    const Tri full_tri = crit.passes(full);
    if (full_tri == Tri::True) {
        out.value = 1;
        out.exact = true;
        out.cover = {full};
        out.notes = "whole space passes";
        return out;
    }

    // the criterion is downward closed, so two known passing sets that cover
    // the space meet the trivial lower bound of 2 when the whole space fails;
    // no enumeration (and no basis check: every minimal open is inside a
    // passing member) is needed
    for (std::size_t i = 0; full_tri == Tri::False && i < known_passing.size(); ++i)
        for (std::size_t j = i + 1; j < known_passing.size(); ++j) {
            Bitset u = known_passing[i] | known_passing[j];
            if (u == full) {
                out.value = 2;
                out.exact = true;
                out.cover = {known_passing[i], known_passing[j]};
                out.notes = "two known passing opens cover; whole space fails";
                return out;
            }
        }

    // infinity check on the minimal-open basis: any cover member containing x
    // must contain U_x, so a failing U_x rules out every cover
    bool basis_unknown = false;
    for (int x = 0; x < N; ++x) {
        Tri t = crit.passes(p.down_set(x));
        if (t == Tri::False) {
            out.kind = ComplexityReport::ValueKind::Infinite;
            out.exact = true;
            out.notes = "minimal open of " + p.label(x) + " fails";
            return out;
        }
        if (t == Tri::Unknown) basis_unknown = true;
    }

    auto enumres = maximal_passing_opens(crit, config.budgets);
    const bool complete = enumres.complete && !enumres.saw_unknown && !basis_unknown;
    std::vector<Bitset> candidates = enumres.opens;

    // conflict graph over maximal elements: u,v conflict when U_u | U_v fails
    // outright, so no passing down-set contains both
    auto maxelems = p.maximal_elements();
    const int M = int(maxelems.size());
    std::vector<std::vector<char>> conflict(M, std::vector<char>(M, 0));
    const std::size_t pair_budget = config.budgets.enumeration_evals;
    bool conflict_complete = std::size_t(M) * M / 2 <= pair_budget;
    if (conflict_complete) {
        for (int i = 0; i < M && conflict_complete; ++i)
            for (int j = i + 1; j < M; ++j) {
                Bitset u = p.down_set(maxelems[i]);
                u |= p.down_set(maxelems[j]);
                if (crit.passes(u) == Tri::False) conflict[i][j] = conflict[j][i] = 1;
            }
    }

    if (!complete) {
        for (const auto& k : known_passing) absorb_candidate(candidates, k);
        // grow candidates from independent sets of the conflict graph
        std::size_t heuristic_evals = 0;
        const std::size_t heuristic_budget = config.budgets.enumeration_evals;
        auto try_grow = [&](Bitset q) {
            for (int x = 0; x < N && heuristic_evals < heuristic_budget; ++x) {
                if (q.test(x)) continue;
                Bitset q2 = q;
                q2 |= p.down_set(x);
                ++heuristic_evals;
                if (crit.passes(q2) == Tri::True) q = std::move(q2);
            }
            absorb_candidate(candidates, std::move(q));
        };
        if (conflict_complete)
            for (const auto& s : independent_sets(conflict, 256, 200000)) {
                if (heuristic_evals >= heuristic_budget) break;
                Bitset q{std::size_t(N)};
                for (int i : s) {
                    Bitset q2 = q;
                    q2 |= p.down_set(maxelems[i]);
                    ++heuristic_evals;
                    if (crit.passes(q2) == Tri::True) q = std::move(q2);
                }
                if (q.any()) try_grow(std::move(q));
            }
        // basis opens of maximal elements keep the cover problem feasible
        for (int x : maxelems)
            if (crit.passes(p.down_set(x)) == Tri::True)
                absorb_candidate(candidates, p.down_set(x));

        // guided peeling: while the criterion can point at an obstructed
        // element, drop its up-closure; this carves a passing set out of the
        // whole space along the failure locus
        {
            Bitset a = full;
            std::size_t steps = 0;
            while (a.any() && steps++ < std::size_t(N)) {
                if (crit.passes(a) == Tri::True) {
                    try_grow(std::move(a));  // maximal A leaves the smallest complement
                    break;
                }
                auto hint = crit.repair_hint(a);
                if (!hint) break;
                a.subtract(p.up_set(*hint));
            }
        }

        // the down-closure of a candidate's complement is the smallest set
        // completing it to a 2-cover; a passing one ends the search early
        std::size_t completion_evals = 0;
        auto complement_closure = [&](const Bitset& a) {
            Bitset q{std::size_t(N)};
            for (int x = 0; x < N; ++x)
                if (!a.test(x)) q |= p.down_set(x);
            return q;
        };
        for (std::size_t i = 0; i < candidates.size() && completion_evals < heuristic_budget;
             ++i) {
            Bitset b = complement_closure(candidates[i]);
            ++completion_evals;
            if (crit.passes(b) == Tri::True) absorb_candidate(candidates, std::move(b));
        }

        // pairwise unions of passing sets sometimes pass where neither member
        // covers enough on its own; grow the pool to a fixpoint
        if (candidates.size() <= 48) {
            bool grew = true;
            std::size_t merge_evals = 0;
            while (grew && merge_evals < heuristic_budget && candidates.size() <= 48) {
                grew = false;
                std::vector<Bitset> additions;
                for (std::size_t i = 0; i < candidates.size(); ++i)
                    for (std::size_t j = i + 1;
                         j < candidates.size() && merge_evals < heuristic_budget; ++j) {
                        Bitset u = candidates[i];
                        u |= candidates[j];
                        if (u == candidates[i] || u == candidates[j]) continue;
                        bool dominated = false;
                        for (const auto& c : candidates)
                            if (u.is_subset_of(c)) {
                                dominated = true;
                                break;
                            }
                        if (dominated) continue;
                        ++merge_evals;
                        if (crit.passes(u) == Tri::True) additions.push_back(std::move(u));
                    }
                for (auto& a : additions) {
                    absorb_candidate(candidates, std::move(a));
                    grew = true;
                }
            }
        }
    }

    int lower = full_tri == Tri::False ? 2 : 1;
    if (conflict_complete) lower = std::max(lower, clique_lower_bound(conflict, 2000000));

    Bitset covered{std::size_t(N)};
    for (const auto& c : candidates) covered |= c;
    if (!(covered == full)) {
        out.kind = ComplexityReport::ValueKind::Unknown;
        out.notes = candidates.empty() ? "no passing open found within budget"
                                       : "passing opens found so far do not cover the space";
        return out;
    }
    auto search = exact_min_cover(full, candidates, config.budgets);
    out.value = long(search.cover.size());
    out.cover = std::move(search.cover);
    out.exact = (complete && search.optimal) || out.value == lower;
    out.notes = std::string(complete ? "enumeration complete" : "enumeration partial") +
                "; candidates=" + std::to_string(candidates.size()) +
                "; lower_bound=" + std::to_string(lower) +
                (search.optimal ? "; cover search optimal" : "; cover search hit budget");
    return out;
}

// --- Invariants ----------------------------------------------------------------

Tri sectionable_limit(const PowerSpace& space, const Bitset& q, const Budgets& budgets) {
    std::vector<std::vector<int>> maps;
    for (int j = 0; j < space.n; ++j) maps.push_back(space.projection(j));
    ProjectionsHomotopicCriterion crit(space.total, space.base, std::move(maps), budgets);
    return crit.passes(q);
}

Tri section_exists_bounded(const PowerSpace& space, const Bitset& q, int m, Variant variant,
                           const Budgets& budgets, std::optional<SectionWitness>* witness) {
    BoundedSectionCriterion crit(space, m, variant, budgets);
    Tri t = crit.passes(q);
    if (witness) *witness = t == Tri::True ? crit.find_witness(q) : std::nullopt;
    return t;
}

namespace {

ComplexityReport finish_report(std::string invariant, int n, std::optional<int> m,
                               CoverOutcome&& cover, const FinitePoset& ambient,
                               std::chrono::steady_clock::time_point start) {
    ComplexityReport r;
    r.invariant = std::move(invariant);
    r.n = n;
    r.m = m;
    r.value_kind = cover.kind;
    r.value = cover.value;
    r.exact = cover.exact;
    r.notes = std::move(cover.notes);
    for (const auto& member : cover.cover) {
        std::vector<std::string> labels;
        member.for_each_set([&](std::size_t x) { labels.push_back(ambient.label(int(x))); });
        r.cover_labels.push_back(std::move(labels));
    }
    r.cover_masks = std::move(cover.cover);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                             start)
                       .count();
    return r;
}

}  // namespace

ComplexityReport cc_nm(const PosetPtr& p, int n, int m, Variant variant,
                       const ComputeConfig& config, const std::vector<Bitset>& known_passing) {
    auto start = std::chrono::steady_clock::now();
    if (n < 1) throw Error("n must be positive");
    PowerSpace space = make_power(p, n, config.size_cap);
    BoundedSectionCriterion crit(space, m, variant, config.budgets);
    CoverOutcome cover = minimum_cover(crit, known_passing, config);
    std::vector<Bitset> members = cover.cover;
    auto r = finish_report(variant == Variant::Wedge ? "cc_nm" : "cc_nm_prime", n, m,
                           std::move(cover), *space.total, start);
    if (config.emit_witness && r.is_finite())
        for (const auto& member : members)
            if (auto w = crit.find_witness(member)) r.witnesses.push_back(std::move(*w));
    return r;
}

ComplexityReport cc_n(const PosetPtr& p, int n, const ComputeConfig& config) {
    auto start = std::chrono::steady_clock::now();
    if (n < 1) throw Error("n must be positive");
    PowerSpace space = make_power(p, n, config.size_cap);
    std::vector<std::vector<int>> maps;
    for (int j = 0; j < space.n; ++j) maps.push_back(space.projection(j));
    ProjectionsHomotopicCriterion crit(space.total, space.base, std::move(maps), config.budgets);
    CoverOutcome cover = minimum_cover(crit, {}, config);
    return finish_report("cc_n", n, std::nullopt, std::move(cover), *space.total, start);
}

ComplexityReport cat(const PosetPtr& p, const ComputeConfig& config) {
    auto start = std::chrono::steady_clock::now();
    ContractibleInCriterion crit(p, config.budgets);
    CoverOutcome cover = minimum_cover(crit, {}, config);
    return finish_report("cat", 1, std::nullopt, std::move(cover), *p, start);
}

}  // namespace finitetc
