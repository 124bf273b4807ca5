#include "finitetc/homotopy.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace finitetc {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 0xcbf29ce484222325ull;
        for (int x : v) {
            h ^= std::size_t(x) + 0x9e3779b97f4a7c15ull;
            h *= 0x100000001b3ull;
        }
        return h;
    }
};

// x is a down-beat point if its strict alive down-set has a maximum, an
// up-beat point if its strict alive up-set has a minimum.
std::pair<bool, int> beat_target(const FinitePoset& p, const Bitset& alive, int x) {
    Bitset d = p.down_set(x) & alive;
    d.reset(x);
    if (d.any()) {
        int best = -1;
        d.for_each_set([&](std::size_t y) {
            if (best < 0 && d.is_subset_of(p.down_set(int(y)))) best = int(y);
        });
        if (best >= 0) return {true, best};
    }
    Bitset u = p.up_set(x) & alive;
    u.reset(x);
    if (u.any()) {
        int best = -1;
        u.for_each_set([&](std::size_t y) {
            if (best < 0 && u.is_subset_of(p.up_set(int(y)))) best = int(y);
        });
        if (best >= 0) return {true, best};
    }
    return {false, -1};
}

}  // namespace

CoreData compute_core(const FinitePoset& p) {
    const int n = p.size();
    Bitset alive = p.full_mask();
    std::vector<int> r(n);  // original index -> surviving original index
    for (int i = 0; i < n; ++i) r[i] = i;

    std::set<int> beats;  // alive beat points, with their targets
    std::unordered_map<int, int> target;
    for (int x = 0; x < n; ++x) {
        auto [isb, t] = beat_target(p, alive, x);
        if (isb) {
            beats.insert(x);
            target[x] = t;
        }
    }
    std::size_t alive_count = n;
    while (!beats.empty() && alive_count > 1) {
        int x = *beats.begin();
        int t = target[x];
        beats.erase(x);
        alive.reset(x);
        --alive_count;
        for (int i = 0; i < n; ++i)
            if (r[i] == x) r[i] = t;
        // beat status can change only for elements comparable to x
        Bitset affected = p.down_set(x) | p.up_set(x);
        affected &= alive;
        affected.for_each_set([&](std::size_t yi) {
            int y = int(yi);
            auto [isb, ty] = beat_target(p, alive, y);
            if (isb) {
                beats.insert(y);
                target[y] = ty;
            } else {
                beats.erase(y);
            }
        });
    }

    CoreData out;
    std::vector<int> to_sub;
    out.core = p.induced(alive, &to_sub);
    out.inclusion = alive.to_indices();
    out.retraction.resize(n);
    for (int i = 0; i < n; ++i) out.retraction[i] = to_sub[r[i]];
    return out;
}

PosetPtr core(const PosetPtr& p) { return compute_core(*p).core; }

bool is_contractible(const FinitePoset& p) {
    if (p.size() == 0) return false;
    if (!p.is_connected()) return false;
    return compute_core(p).core->size() == 1;
}

EnumResult enumerate_monotone_maps(const FinitePoset& dom, const FinitePoset& cod,
                                   const std::vector<std::vector<int>>& candidates,
                                   const std::function<bool(const std::vector<int>&)>& fn,
                                   std::size_t node_budget) {
    const int n = dom.size();
    const auto& order = dom.linear_extension();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<int> a(n, -1);
    std::size_t nodes = 0;
    EnumResult result = EnumResult::Completed;

    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == n) return fn(a);
        int x = order[depth];
        for (int v : candidates[x]) {
            if (++nodes > node_budget) {
                result = EnumResult::Budget;
                return true;
            }
            bool ok = true;
            for (int y : dom.lower_covers(x)) {
                if (!cod.leq(a[y], v)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            a[x] = v;
            if (rec(depth + 1)) {
                a[x] = -1;
                if (result == EnumResult::Completed) result = EnumResult::Stopped;
                return true;
            }
            a[x] = -1;
        }
        return false;
    };
    rec(0);
    return result;
}

std::vector<MonotoneMap> neighbors_in_mapping_poset(const MonotoneMap& f, Direction dir) {
    const auto& dom = *f.domain();
    const auto& cod = *f.codomain();
    std::vector<std::vector<int>> candidates(dom.size());
    for (int x = 0; x < dom.size(); ++x) {
        const Bitset& side =
            dir == Direction::Down ? cod.down_set(f(x)) : cod.up_set(f(x));
        candidates[x] = side.to_indices();
    }
    std::vector<MonotoneMap> out;
    enumerate_monotone_maps(dom, cod, candidates,
                            [&](const std::vector<int>& a) {
                                out.emplace_back(f.domain(), f.codomain(), a, false);
                                return false;
                            },
                            std::size_t(-1));
    return out;
}

namespace {

// BFS over the mapping poset with single-point moves. Two monotone maps that
// are pointwise comparable are connected by single-point moves (raise the
// changed points from the top down), so this explores exactly the connected
// component of `from`.
Tri mapping_poset_bfs(const FinitePoset& dom, const FinitePoset& cod,
                      const std::vector<int>& from, const std::vector<int>& to,
                      std::size_t budget,
                      std::vector<std::vector<int>>* trace = nullptr) {
    if (from == to) {
        if (trace) trace->push_back(from);
        return Tri::True;
    }
    using Map = std::vector<int>;
    using ParentTable = std::unordered_map<Map, Map, VecHash>;

    // comparable values per codomain element, ascending, excluding the value
    std::vector<std::vector<int>> comp(cod.size());
    for (int v = 0; v < cod.size(); ++v) {
        Bitset b = cod.down_set(v) | cod.up_set(v);
        b.reset(v);
        comp[v] = b.to_indices();
    }

    auto unwind = [](const ParentTable& parent, Map node, const Map& root) {
        std::vector<Map> path{node};
        while (node != root) {
            node = parent.at(node);
            path.push_back(node);
        }
        return path;  // node .. root
    };

    // Bidirectional best-first search. The priority favours maps close to the
    // other root (fewest differing points), which finds long single-point-move
    // paths quickly; the closed sets keep it complete, so an exhausted side
    // still proves the maps lie in different components.
    struct Side {
        ParentTable parent;
        // (differing points, insertion counter, map)
        std::priority_queue<std::tuple<int, std::size_t, Map>,
                            std::vector<std::tuple<int, std::size_t, Map>>, std::greater<>>
            queue;
        const Map* goal = nullptr;
    };
    auto dist = [](const Map& a, const Map& b) {
        int d = 0;
        for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
        return d;
    };
    Side fwd, bwd;
    std::size_t counter = 0;
    fwd.goal = &to;
    bwd.goal = &from;
    fwd.parent[from] = {};
    fwd.queue.emplace(dist(from, to), counter++, from);
    bwd.parent[to] = {};
    bwd.queue.emplace(dist(to, from), counter++, to);
    std::size_t visited = 2;

    std::optional<Map> meet;
    auto expand = [&](Side& self, Side& other) -> Tri {
        Map cur = std::get<2>(self.queue.top());
        self.queue.pop();
        for (int x = 0; x < dom.size(); ++x) {
            const int old = cur[x];
            for (int v : comp[old]) {
                bool ok = true;
                for (int y : dom.lower_covers(x))
                    if (!cod.leq(cur[y], v)) {
                        ok = false;
                        break;
                    }
                if (ok)
                    for (int y : dom.upper_covers(x))
                        if (!cod.leq(v, cur[y])) {
                            ok = false;
                            break;
                        }
                if (!ok) continue;
                cur[x] = v;
                if (!self.parent.count(cur)) {
                    Map par = cur;
                    par[x] = old;
                    self.parent[cur] = std::move(par);
                    if (other.parent.count(cur)) {
                        meet = cur;
                        return Tri::True;
                    }
                    if (++visited > budget) return Tri::Unknown;
                    self.queue.emplace(dist(cur, *self.goal), counter++, cur);
                }
                cur[x] = old;
            }
        }
        return Tri::False;  // nothing new from this node
    };

    while (!meet && !fwd.queue.empty() && !bwd.queue.empty()) {
        Side& side = fwd.queue.size() <= bwd.queue.size() ? fwd : bwd;
        Tri t = expand(side, &side == &fwd ? bwd : fwd);
        if (t == Tri::Unknown) return Tri::Unknown;
    }
    if (!meet) return Tri::False;  // one side exhausted its component

    if (trace) {
        auto head = unwind(fwd.parent, *meet, from);  // meet .. from
        std::reverse(head.begin(), head.end());       // from .. meet
        auto tail = unwind(bwd.parent, *meet, to);    // meet .. to
        head.insert(head.end(), tail.begin() + 1, tail.end());
        *trace = std::move(head);
    }
    return Tri::True;
}

}  // namespace

std::optional<std::vector<int>> crown_positions(const FinitePoset& c) {
    const int n = c.size();
    if (n < 4 || n % 2 != 0) return std::nullopt;
    std::vector<std::vector<int>> nbr(n);
    for (auto [a, b] : c.hasse()) {
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    for (int v = 0; v < n; ++v) {
        if (nbr[v].size() != 2) return std::nullopt;
        if (!c.lower_covers(v).empty() && !c.upper_covers(v).empty()) return std::nullopt;
    }
    std::vector<int> pos(n, -1);
    int prev = -1, cur = 0;
    for (int i = 0; i < n; ++i) {
        pos[cur] = i;
        int nxt = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
        prev = cur;
        cur = nxt;
    }
    if (cur != 0) return std::nullopt;  // several cycles
    for (int v = 0; v < n; ++v)
        if (pos[v] < 0) return std::nullopt;
    return pos;
}

// Each Hasse edge of the domain advances a map one step around the crown,
// stays put, or steps back; the edge weights of f and g must differ by a
// coboundary, since single-point moves never change the winding around any
// cycle of the domain.
std::optional<std::pair<int, int>> winding_violation(const FinitePoset& dom,
                                                     const std::vector<int>& pos, int period,
                                                     const std::vector<int>& f,
                                                     const std::vector<int>& g) {
    auto delta = [&](int pu, int pv) {
        if (pu == pv) return 0;
        return (pu + 1) % period == pv ? 1 : -1;
    };
    auto weight = [&](int x, int y) {  // x covered by y
        return delta(pos[f[x]], pos[f[y]]) - delta(pos[g[x]], pos[g[y]]);
    };
    const int n = dom.size();
    struct Arc {
        int to, w, lower, upper;
    };
    std::vector<std::vector<Arc>> adj(n);
    for (auto [a, b] : dom.hasse()) {
        int w = weight(a, b);
        adj[a].push_back({b, w, a, b});
        adj[b].push_back({a, -w, a, b});
    }
    constexpr int unset = std::numeric_limits<int>::min();
    std::vector<int> phi(n, unset);
    for (int s = 0; s < n; ++s) {
        if (phi[s] != unset) continue;
        phi[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (const Arc& a : adj[x]) {
                if (phi[a.to] == unset) {
                    phi[a.to] = phi[x] + a.w;
                    q.push_back(a.to);
                } else if (phi[a.to] != phi[x] + a.w) {
                    return std::make_pair(a.lower, a.upper);
                }
            }
        }
    }
    return std::nullopt;
}

namespace {

// Deterministic greedy slide through the mapping poset: sweep the domain and
// apply any single-point move to a comparable value that strictly decreases
// the summed comparability-graph distance to the target. The potential drops
// with every accepted move, so this terminates, costs O(1) memory per map,
// and settles the long rotation homotopies that a frontier search cannot
// afford on large domains. Only a sound True: reaching `to` exhibits a path.
bool greedy_slide(const FinitePoset& dom, const FinitePoset& cod, std::vector<int> cur,
                  const std::vector<int>& to) {
    const int n = dom.size();
    const int c = cod.size();
    // all-pairs distances in the comparability graph of the codomain
    std::vector<std::vector<int>> cdist(c, std::vector<int>(c, -1));
    std::vector<std::vector<int>> comp(c);
    for (int v = 0; v < c; ++v) {
        Bitset b = cod.down_set(v) | cod.up_set(v);
        b.reset(v);
        comp[v] = b.to_indices();
    }
    for (int s = 0; s < c; ++s) {
        cdist[s][s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : comp[x])
                if (cdist[s][y] < 0) {
                    cdist[s][y] = cdist[s][x] + 1;
                    q.push_back(y);
                }
        }
    }
    bool progress = true;
    while (progress && cur != to) {
        progress = false;
        for (int x = 0; x < n; ++x) {
            if (cur[x] == to[x]) continue;
            const int want = to[x];
            if (cdist[cur[x]][want] < 0) return false;  // different components
            for (int v : comp[cur[x]]) {
                if (cdist[v][want] >= cdist[cur[x]][want]) continue;
                bool ok = true;
                for (int y : dom.lower_covers(x))
                    if (!cod.leq(cur[y], v)) {
                        ok = false;
                        break;
                    }
                if (ok)
                    for (int y : dom.upper_covers(x))
                        if (!cod.leq(v, cur[y])) {
                            ok = false;
                            break;
                        }
                if (!ok) continue;
                cur[x] = v;
                progress = true;
                break;
            }
        }
    }
    return cur == to;
}

// Slide for crown codomains. The winding potential lifts each point's cyclic
// displacement from `cur` to `to` to a consistent integer rotation field, so
// every point knows its direction and step count even when that is the long
// way around the cycle (where a shortest-distance greedy deadlocks). Moves
// are legality-checked single-point steps, so a True is always sound.
bool crown_slide(const FinitePoset& dom, const FinitePoset& cod, const std::vector<int>& pos,
                 std::vector<int> cur, const std::vector<int>& to) {
    const int n = dom.size();
    const int c = cod.size();
    std::vector<int> by_pos(c);
    for (int v = 0; v < c; ++v) by_pos[pos[v]] = v;
    auto delta = [&](int pu, int pv) {
        if (pu == pv) return 0;
        return (pu + 1) % c == pv ? 1 : -1;
    };
    // psi(x): signed number of positive steps taking cur[x] to to[x];
    // consistent across Hasse edges because the winding check passed
    std::vector<std::vector<std::pair<int, int>>> nbr(n);  // (other end, psi increment)
    for (auto [a, b] : dom.hasse()) {
        int w = delta(pos[to[a]], pos[to[b]]) - delta(pos[cur[a]], pos[cur[b]]);
        nbr[a].push_back({b, w});
        nbr[b].push_back({a, -w});
    }
    constexpr int unset = std::numeric_limits<int>::min();
    std::vector<int> psi(n, unset);
    for (int s = 0; s < n; ++s) {
        if (psi[s] != unset) continue;
        int d0 = ((pos[to[s]] - pos[cur[s]]) % c + c) % c;
        psi[s] = d0 > c / 2 ? d0 - c : d0;  // minimal-abs lift for the root
        std::vector<int> comp{s};
        std::deque<int> q{s};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (auto [y, w] : nbr[x])
                if (psi[y] == unset) {
                    psi[y] = psi[x] + w;
                    comp.push_back(y);
                    q.push_back(y);
                }
        }
        // shift the component by whole turns when that shrinks the total work
        long best_cost = 0, cost_minus = 0, cost_plus = 0;
        for (int x : comp) {
            best_cost += std::abs(psi[x]);
            cost_minus += std::abs(psi[x] - c);
            cost_plus += std::abs(psi[x] + c);
        }
        int shift = 0;
        if (cost_minus < best_cost) shift = -c, best_cost = cost_minus;
        if (cost_plus < best_cost) shift = c;
        if (shift != 0)
            for (int x : comp) psi[x] += shift;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (int x = 0; x < n; ++x) {
            while (psi[x] != 0) {
                const int dir = psi[x] > 0 ? 1 : -1;
                const int v = by_pos[((pos[cur[x]] + dir) % c + c) % c];
                bool ok = true;
                for (int y : dom.lower_covers(x))
                    if (!cod.leq(cur[y], v)) {
                        ok = false;
                        break;
                    }
                if (ok)
                    for (int y : dom.upper_covers(x))
                        if (!cod.leq(v, cur[y])) {
                            ok = false;
                            break;
                        }
                if (!ok) break;
                cur[x] = v;
                psi[x] -= dir;
                progress = true;
            }
        }
    }
    return cur == to;
}

}  // namespace

Tri homotopic_assignments(const FinitePoset& dom, const FinitePoset& cod,
                          const std::vector<int>& f, const std::vector<int>& g,
                          const Budgets& budgets) {
    if (f == g) return Tri::True;
    CoreData dc = compute_core(dom);
    CoreData cc = compute_core(cod);
    const int d = dc.core->size();
    std::vector<int> fc(d), gc(d);
    for (int i = 0; i < d; ++i) {
        fc[i] = cc.retraction[f[dc.inclusion[i]]];
        gc[i] = cc.retraction[g[dc.inclusion[i]]];
    }
    if (fc == gc) return Tri::True;
    if (d == 1) {
        auto ids = cc.core->component_ids();
        return ids[fc[0]] == ids[gc[0]] ? Tri::True : Tri::False;
    }
    if (auto pos = crown_positions(*cc.core)) {
        if (winding_violation(*dc.core, *pos, cc.core->size(), fc, gc)) return Tri::False;
        if (crown_slide(*dc.core, *cc.core, *pos, fc, gc) ||
            crown_slide(*dc.core, *cc.core, *pos, gc, fc))
            return Tri::True;
    }
    if (greedy_slide(*dc.core, *cc.core, fc, gc) || greedy_slide(*dc.core, *cc.core, gc, fc))
        return Tri::True;
    // BFS work per visited map grows with the cored domain, so shrink the
    // node budget on large domains to keep evaluations bounded in time
    std::size_t budget = budgets.homotopy_nodes;
    const std::size_t scale = std::size_t(d) * std::size_t(d) / 256;
    if (scale > 1) budget = std::max<std::size_t>(2000, budget / scale);
    return mapping_poset_bfs(*dc.core, *cc.core, fc, gc, budget);
}

namespace {

void require_same_hom_set(const MonotoneMap& f, const MonotoneMap& g) {
    if (f.domain()->size() != g.domain()->size() ||
        f.codomain()->size() != g.codomain()->size() ||
        f.domain()->labels() != g.domain()->labels() ||
        f.codomain()->labels() != g.codomain()->labels())
        throw DomainMismatch("maps do not share domain and codomain");
}

}  // namespace

Tri homotopic(const MonotoneMap& f, const MonotoneMap& g, const Budgets& budgets) {
    require_same_hom_set(f, g);
    return homotopic_assignments(*f.domain(), *f.codomain(), f.assignment(), g.assignment(),
                                 budgets);
}

Tri homotopic_bounded(const MonotoneMap& f, const MonotoneMap& g, int m,
                      const Budgets& budgets) {
    require_same_hom_set(f, g);
    if (m < 0) throw IndexOutOfRange("homotopic_bounded: m must be >= 0");
    const auto& dom = *f.domain();
    const auto& cod = *f.codomain();
    if (m == 0) return f == g ? Tri::True : Tri::False;

    // Step i relates h_{i-1} and h_i: ascent when i is odd, descent when even.
    auto step_ok = [&](const std::vector<int>& a, const std::vector<int>& b, int i) {
        for (std::size_t x = 0; x < a.size(); ++x) {
            bool ok = (i % 2 == 1) ? cod.leq(a[x], b[x]) : cod.leq(b[x], a[x]);
            if (!ok) return false;
        }
        return true;
    };

    std::size_t nodes = 0;
    bool budget_hit = false;
    std::function<bool(int, const std::vector<int>&)> rec =
        [&](int i, const std::vector<int>& prev) -> bool {
        if (i == m) return step_ok(prev, g.assignment(), m);
        std::vector<std::vector<int>> candidates(dom.size());
        for (int x = 0; x < dom.size(); ++x) {
            const Bitset& side =
                (i % 2 == 1) ? cod.up_set(prev[x]) : cod.down_set(prev[x]);
            candidates[x] = side.to_indices();
        }
        bool found = false;
        EnumResult res = enumerate_monotone_maps(
            dom, cod, candidates,
            [&](const std::vector<int>& h) {
                ++nodes;
                if (nodes > budgets.csp_nodes) {
                    budget_hit = true;
                    return true;
                }
                if (rec(i + 1, h)) {
                    found = true;
                    return true;
                }
                return budget_hit;
            },
            budgets.csp_nodes);
        if (res == EnumResult::Budget) budget_hit = true;
        return found;
    };
    if (rec(1, f.assignment())) return Tri::True;
    return budget_hit ? Tri::Unknown : Tri::False;
}

Tri contractible_in(const DownSet& q, const Budgets& budgets) {
    if (q.members.none()) return Tri::True;  // vacuous
    const auto& amb = *q.ambient;
    std::vector<int> elems = q.members.to_indices();
    auto sub = amb.induced(q.members);
    if (compute_core(*sub).core->size() == 1) return Tri::True;
    // All constants into one ambient component are mutually homotopic, so a
    // single representative per relevant component suffices.
    auto ids = amb.component_ids();
    std::set<int> comps;
    for (int e : elems) comps.insert(ids[e]);
    if (comps.size() > 1) return Tri::False;  // image component is a homotopy invariant
    int y0 = elems.front();
    std::vector<int> incl = elems;
    std::vector<int> cst(elems.size(), y0);
    return homotopic_assignments(*sub, amb, incl, cst, budgets);
}

void HomotopyWitness::validate() const {
    if (frames.empty()) throw InvalidWitness("homotopy witness has no frames");
    for (std::size_t i = 0; i < frames.size(); ++i) {
        if (int(frames[i].size()) != domain->size())
            throw InvalidWitness("frame size does not match domain");
        for (auto [a, b] : domain->hasse())
            if (!codomain->leq(frames[i][a], frames[i][b]))
                throw InvalidWitness("frame " + std::to_string(i) + " is not monotone");
        if (i > 0) {
            for (int x = 0; x < domain->size(); ++x) {
                bool ok = (i % 2 == 1) ? codomain->leq(frames[i - 1][x], frames[i][x])
                                       : codomain->leq(frames[i][x], frames[i - 1][x]);
                if (!ok)
                    throw InvalidWitness("frames " + std::to_string(i - 1) + "," +
                                         std::to_string(i) + " violate the zigzag pattern");
            }
        }
    }
}

std::optional<HomotopyWitness> homotopy_zigzag(const MonotoneMap& f, const MonotoneMap& g,
                                               const Budgets& budgets) {
    require_same_hom_set(f, g);
    std::vector<std::vector<int>> trace;
    Tri res = mapping_poset_bfs(*f.domain(), *f.codomain(), f.assignment(), g.assignment(),
                                budgets.homotopy_nodes, &trace);
    if (res != Tri::True) return std::nullopt;
    // Pad with stationary frames so directions match the J_m alternation.
    const auto& cod = *f.codomain();
    HomotopyWitness w{f.domain(), f.codomain(), {trace.front()}};
    for (std::size_t i = 1; i < trace.size(); ++i) {
        const auto& prev = w.frames.back();
        const auto& next = trace[i];
        bool ascent = true;
        for (std::size_t x = 0; x < next.size(); ++x)
            if (!cod.leq(prev[x], next[x])) {
                ascent = false;
                break;
            }
        int idx = int(w.frames.size());  // next frame index
        bool want_ascent = (idx % 2 == 1);
        if (ascent != want_ascent) w.frames.push_back(prev);  // stationary step
        w.frames.push_back(next);
    }
    w.validate();
    return w;
}

}  // namespace finitetc
