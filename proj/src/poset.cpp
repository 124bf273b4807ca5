#include "finitetc/poset.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

namespace finitetc {

std::size_t global_size_cap() {
    static std::size_t cap = [] {
        if (const char* env = std::getenv("FINITETC_SIZE_CAP")) {
            long v = std::atol(env);
            if (v > 0) return std::size_t(v);
        }
        return std::size_t(100000);
    }();
    return cap;
}

PosetPtr FinitePoset::build(std::vector<std::string> labels,
                            const std::vector<std::pair<int, int>>& edges,
                            std::size_t size_cap) {
    const int n = int(labels.size());
    if (std::size_t(n) > size_cap)
        throw SizeLimitExceeded("poset has " + std::to_string(n) + " elements, cap is " +
                                std::to_string(size_cap));
    {
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw DuplicateLabel("duplicate label: " + l);
    }
    std::vector<std::vector<int>> succ(n);
    for (auto [lo, hi] : edges) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            throw IndexOutOfRange("edge endpoint out of range");
        succ[lo].push_back(hi);
    }
    // Reachability closure via DFS; cycle check by looking for x reachable
    // from itself through at least one edge.
    std::vector<Bitset> down(n, Bitset(n));
    std::vector<Bitset> reach_up(n, Bitset(n));  // {y : x <= y} excl. diag for now
    // topological-ish DFS with cycle detection
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<int> order;
    order.reserve(n);
    {
        std::vector<std::pair<int, std::size_t>> stack;
        for (int s = 0; s < n; ++s) {
            if (state[s]) continue;
            stack.push_back({s, 0});
            state[s] = 1;
            while (!stack.empty()) {
                auto& [x, i] = stack.back();
                if (i < succ[x].size()) {
                    int y = succ[x][i++];
                    if (state[y] == 1)
                        throw CycleDetected("edges induce a directed cycle through " + labels[y]);
                    if (state[y] == 0) {
                        state[y] = 1;
                        stack.push_back({y, 0});
                    }
                } else {
                    state[x] = 2;
                    order.push_back(x);
                    stack.pop_back();
                }
            }
        }
    }
    // order is reverse topological: successors first
    for (int x : order) {
        reach_up[x].set(x);
        for (int y : succ[x]) reach_up[x] |= reach_up[y];
    }
    for (int x = 0; x < n; ++x)
        reach_up[x].for_each_set([&](std::size_t y) { down[y].set(x); });
    return from_closed_relation(std::move(labels), std::move(down));
}

PosetPtr FinitePoset::from_closed_relation(std::vector<std::string> labels,
                                           std::vector<Bitset> down) {
    auto p = std::shared_ptr<FinitePoset>(new FinitePoset());
    p->labels_ = std::move(labels);
    p->down_ = std::move(down);
    p->finish();
    return p;
}

void FinitePoset::finish() {
    const int n = size();
    up_.assign(n, Bitset(n));
    for (int y = 0; y < n; ++y)
        down_[y].for_each_set([&](std::size_t x) { up_[x].set(y); });

    lower_covers_.assign(n, {});
    upper_covers_.assign(n, {});
    hasse_.clear();
    for (int y = 0; y < n; ++y) {
        // lower covers of y: maximal elements of down(y) \ {y}
        Bitset strict = down_[y];
        strict.reset(y);
        strict.for_each_set([&](std::size_t x) {
            // x is a cover iff no z with x < z < y
            Bitset between = up_[x] & strict;
            between.reset(x);
            if (between.none()) {
                lower_covers_[y].push_back(int(x));
                upper_covers_[x].push_back(y);
                hasse_.push_back({int(x), y});
            }
        });
    }
    std::sort(hasse_.begin(), hasse_.end());
    for (auto& v : lower_covers_) std::sort(v.begin(), v.end());
    for (auto& v : upper_covers_) std::sort(v.begin(), v.end());

    // linear extension: sort indices by down-set size, ties by index
    topo_.resize(n);
    std::iota(topo_.begin(), topo_.end(), 0);
    std::stable_sort(topo_.begin(), topo_.end(), [&](int a, int b) {
        return down_[a].count() < down_[b].count();
    });
}

std::vector<int> FinitePoset::maximal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (upper_covers_[x].empty()) out.push_back(x);
    return out;
}

std::vector<int> FinitePoset::minimal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (lower_covers_[x].empty()) out.push_back(x);
    return out;
}

std::vector<int> FinitePoset::maximal_in(const Bitset& members) const {
    std::vector<int> out;
    members.for_each_set([&](std::size_t x) {
        Bitset above = up_[x] & members;
        above.reset(x);
        if (above.none()) out.push_back(int(x));
    });
    return out;
}

Bitset FinitePoset::down_closure(const Bitset& members) const {
    Bitset out(size());
    members.for_each_set([&](std::size_t x) { out |= down_[x]; });
    return out;
}

bool FinitePoset::is_down_closed(const Bitset& members) const {
    bool ok = true;
    members.for_each_set([&](std::size_t x) {
        if (!down_[x].is_subset_of(members)) ok = false;
    });
    return ok;
}

Bitset FinitePoset::full_mask() const {
    Bitset b(size());
    for (int i = 0; i < size(); ++i) b.set(i);
    return b;
}

std::vector<int> FinitePoset::component_ids() const {
    const int n = size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : hasse_) parent[find(a)] = find(b);
    std::vector<int> id(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
        int r = find(x);
        if (id[r] < 0) id[r] = next++;
        id[x] = id[r];
    }
    return id;
}

int FinitePoset::component_count() const {
    auto ids = component_ids();
    return ids.empty() ? 0 : 1 + *std::max_element(ids.begin(), ids.end());
}

bool FinitePoset::is_connected() const { return component_count() <= 1; }

PosetPtr FinitePoset::induced(const Bitset& members, std::vector<int>* to_sub) const {
    std::vector<int> elems = members.to_indices();
    std::vector<int> inv(size(), -1);
    for (std::size_t i = 0; i < elems.size(); ++i) inv[elems[i]] = int(i);
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (int e : elems) labels.push_back(labels_[e]);
    std::vector<Bitset> down(elems.size(), Bitset(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i) {
        Bitset d = down_[elems[i]] & members;
        d.for_each_set([&](std::size_t x) { down[i].set(inv[x]); });
    }
    if (to_sub) *to_sub = std::move(inv);
    return from_closed_relation(std::move(labels), std::move(down));
}

// --- Constructions -----------------------------------------------------

DownSet minimal_open(const PosetPtr& p, int x) {
    if (x < 0 || x >= p->size()) throw IndexOutOfRange("minimal_open: element out of range");
    return DownSet(p, p->down_set(x));
}

std::vector<std::vector<int>> power_coords(int base_size, int n) {
    std::size_t total = 1;
    for (int j = 0; j < n; ++j) total *= std::size_t(base_size);
    std::vector<std::vector<int>> coords(total, std::vector<int>(n));
    for (std::size_t e = 0; e < total; ++e) {
        std::size_t r = e;
        for (int j = n - 1; j >= 0; --j) {
            coords[e][j] = int(r % base_size);
            r /= base_size;
        }
    }
    return coords;
}

PosetPtr power(const PosetPtr& p, int n, std::vector<std::vector<int>>* coords_out,
               std::size_t size_cap) {
    const int b = p->size();
    double total = 1;
    for (int j = 0; j < n; ++j) total *= b;
    if (total > double(size_cap))
        throw SizeLimitExceeded("power: element count exceeds cap");
    auto coords = power_coords(b, n);
    const std::size_t N = coords.size();
    std::vector<std::string> labels(N);
    for (std::size_t e = 0; e < N; ++e) {
        std::string l = "(";
        for (int j = 0; j < n; ++j) {
            if (j) l += ",";
            l += p->label(coords[e][j]);
        }
        l += ")";
        labels[e] = std::move(l);
    }
    std::vector<Bitset> down(N, Bitset(N));
    for (std::size_t e = 0; e < N; ++e)
        for (std::size_t f = 0; f < N; ++f) {
            bool le = true;
            for (int j = 0; j < n && le; ++j) le = p->leq(coords[f][j], coords[e][j]);
            if (le) down[e].set(f);
        }
    if (coords_out) *coords_out = std::move(coords);
    return FinitePoset::from_closed_relation(std::move(labels), std::move(down));
}

PosetPtr product(const PosetPtr& p, const PosetPtr& q, std::size_t size_cap) {
    const std::size_t N = std::size_t(p->size()) * q->size();
    if (N > size_cap) throw SizeLimitExceeded("product: element count exceeds cap");
    std::vector<std::string> labels(N);
    std::vector<Bitset> down(N, Bitset(N));
    auto idx = [&](int a, int b) { return std::size_t(a) * q->size() + b; };
    for (int a = 0; a < p->size(); ++a)
        for (int b = 0; b < q->size(); ++b) {
            labels[idx(a, b)] = "(" + p->label(a) + "," + q->label(b) + ")";
            for (int c = 0; c < p->size(); ++c)
                for (int d = 0; d < q->size(); ++d)
                    if (p->leq(c, a) && q->leq(d, b)) down[idx(a, b)].set(idx(c, d));
        }
    return FinitePoset::from_closed_relation(std::move(labels), std::move(down));
}

PosetPtr fence(int m) {
    if (m < 0) throw IndexOutOfRange("fence: m must be >= 0");
    std::vector<std::string> labels;
    for (int i = 0; i <= m; ++i) labels.push_back(std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        // zigzag 0 <= 1 >= 2 <= ...
        if (i % 2 == 0)
            edges.push_back({i, i + 1});
        else
            edges.push_back({i + 1, i});
    }
    return FinitePoset::build(std::move(labels), edges);
}

PosetPtr wedge_fence(int n, int m) {
    if (n < 2) throw IndexOutOfRange("wedge_fence: n must be >= 2");
    if (m < 0) throw IndexOutOfRange("wedge_fence: m must be >= 0");
    std::vector<std::string> labels;
    labels.push_back("0");
    for (int j = 1; j <= n; ++j)
        for (int t = 1; t <= m; ++t) labels.push_back(std::to_string(t) + "_" + std::to_string(j));
    auto node = [&](int j, int t) { return t == 0 ? 0 : 1 + (j - 1) * m + (t - 1); };
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j <= n; ++j)
        for (int t = 1; t <= m; ++t) {
            if (t % 2 == 1)
                edges.push_back({node(j, t - 1), node(j, t)});
            else
                edges.push_back({node(j, t), node(j, t - 1)});
        }
    return FinitePoset::build(std::move(labels), edges);
}

std::vector<Bitset> enumerate_chains(const FinitePoset& p, std::size_t size_cap) {
    const int n = p.size();
    std::vector<Bitset> chains;
    // DFS: extend the chain whose maximum is x with elements strictly above x.
    std::vector<int> cur;
    auto emit = [&]() {
        Bitset b(n);
        for (int e : cur) b.set(e);
        chains.push_back(std::move(b));
        if (chains.size() > size_cap)
            throw SizeLimitExceeded("subdivision: chain count exceeds cap");
    };
    std::function<void(int)> extend = [&](int x) {
        emit();
        p.up_set(x).for_each_set([&](std::size_t y) {
            if (int(y) == x) return;
            cur.push_back(int(y));
            extend(int(y));
            cur.pop_back();
        });
    };
    for (int x = 0; x < n; ++x) {
        cur.push_back(x);
        extend(x);
        cur.pop_back();
    }
    std::sort(chains.begin(), chains.end(), [](const Bitset& a, const Bitset& b) {
        auto ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return a.to_indices() < b.to_indices();
    });
    return chains;
}

std::string chain_label(const FinitePoset& p, const Bitset& chain) {
    std::string l = "{";
    bool first = true;
    for (int e : chain.to_indices()) {
        if (!first) l += "<";
        first = false;
        l += p.label(e);
    }
    l += "}";
    return l;
}

PosetPtr barycentric_subdivision(const FinitePoset& p, std::vector<Bitset>* chains_out,
                                 std::size_t size_cap) {
    auto chains = enumerate_chains(p, size_cap);
    const std::size_t N = chains.size();
    std::vector<std::string> labels(N);
    for (std::size_t i = 0; i < N; ++i) labels[i] = chain_label(p, chains[i]);
    std::vector<Bitset> down(N, Bitset(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (chains[j].is_subset_of(chains[i])) down[i].set(j);
    if (chains_out) *chains_out = std::move(chains);
    return FinitePoset::from_closed_relation(std::move(labels), std::move(down));
}

std::vector<int> tau_assignment(const FinitePoset& p, const std::vector<Bitset>& chains) {
    std::vector<int> tau(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) {
        auto elems = chains[i].to_indices();
        // chain members are totally ordered; the maximum is the one above all
        int mx = elems.front();
        for (int e : elems)
            if (p.leq(mx, e)) mx = e;
        tau[i] = mx;
    }
    return tau;
}

}  // namespace finitetc
