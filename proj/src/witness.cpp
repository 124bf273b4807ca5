#include "finitetc/witness.hpp"

#include <algorithm>

namespace finitetc {

std::vector<FencePair> fence_pairs(Variant variant, int n, int m) {
    std::vector<FencePair> out;
    if (variant == Variant::Wedge) {
        for (int j = 1; j <= n; ++j)
            for (int t = 1; t <= m; ++t)
                out.push_back({FenceNodes::wedge_node(n, m, j, t - 1),
                               FenceNodes::wedge_node(n, m, j, t), t % 2 == 1});
    } else {
        const int N = FenceNodes::linear_count(n, m);
        for (int t = 1; t < N; ++t) out.push_back({t - 1, t, t % 2 == 1});
    }
    return out;
}

int endpoint_node(Variant variant, int n, int m, int j) {
    return variant == Variant::Wedge ? FenceNodes::wedge_node(n, m, j, m) : (j - 1) * m;
}

namespace {

SectionWitness remap(const SectionWitness& w, Variant new_variant, int new_m,
                     const std::vector<int>& node_map) {
    SectionWitness out;
    out.variant = new_variant;
    out.n = w.n;
    out.m = new_m;
    out.ambient = w.ambient;
    out.factor = w.factor;
    out.coords = w.coords;
    out.domain = w.domain;
    out.paths.reserve(w.paths.size());
    for (const auto& path : w.paths) {
        std::vector<int> np(node_map.size());
        for (std::size_t i = 0; i < node_map.size(); ++i) np[i] = path.at(node_map[i]);
        out.paths.push_back(std::move(np));
    }
    out.validate();
    return out;
}

}  // namespace

void SectionWitness::validate() const {
    if (!ambient->is_down_closed(domain))
        throw InvalidWitness("witness domain is not down-closed");
    auto elems = domain.to_indices();
    if (elems.size() != paths.size())
        throw InvalidWitness("witness has wrong number of paths");
    const int nodes = node_count();
    auto pairs = fence_pairs(variant, n, m);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        const auto& path = paths[i];
        if (int(path.size()) != nodes) throw InvalidWitness("path has wrong node count");
        for (int v : path)
            if (v < 0 || v >= factor->size())
                throw InvalidWitness("path value out of range");
        for (const auto& pr : pairs) {
            bool ok = pr.ascent ? factor->leq(path[pr.a], path[pr.b])
                                : factor->leq(path[pr.b], path[pr.a]);
            if (!ok)
                throw InvalidWitness("path for " + ambient->label(elems[i]) +
                                     " violates the fence pattern");
        }
        for (int j = 1; j <= n; ++j) {
            int node = endpoint_node(variant, n, m, j);
            if (path[node] != coords[elems[i]][j - 1])
                throw InvalidWitness("endpoint equation fails for " +
                                     ambient->label(elems[i]) + " at coordinate " +
                                     std::to_string(j));
        }
    }
    // pointwise monotone in the domain
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j) {
            if (i == j || !ambient->leq(elems[i], elems[j])) continue;
            for (int t = 0; t < nodes; ++t)
                if (!factor->leq(paths[i][t], paths[j][t]))
                    throw InvalidWitness("section is not monotone between " +
                                         ambient->label(elems[i]) + " and " +
                                         ambient->label(elems[j]));
        }
}

SectionWitness transport_R(const SectionWitness& w) {
    w.validate();
    const int n = w.n, m = w.m;
    if (w.variant == Variant::Wedge) {
        const int new_nodes = FenceNodes::wedge_count(n, m + 1);
        std::vector<int> node_map(new_nodes);
        node_map[0] = 0;
        for (int j = 1; j <= n; ++j)
            for (int t = 1; t <= m + 1; ++t)
                node_map[FenceNodes::wedge_node(n, m + 1, j, t)] =
                    FenceNodes::wedge_node(n, m, j, std::min(t, m));
        return remap(w, Variant::Wedge, m + 1, node_map);
    }
    // linear: collapse a 3-node plateau around each odd multiple of m+1,
    // linear elsewhere
    const int new_nodes = FenceNodes::linear_count(n, m + 1);
    std::vector<int> node_map(new_nodes);
    for (int x = 0; x < new_nodes; ++x) {
        int q = x / (m + 1), r = x % (m + 1);
        node_map[x] = (q % 2 == 0) ? q * m + r : q * m + std::max(0, r - 1);
    }
    return remap(w, Variant::Linear, m + 1, node_map);
}

SectionWitness transport_f(const SectionWitness& w) {
    if (w.variant != Variant::Wedge)
        throw ParityViolation("transport_f expects a wedge witness");
    if (w.m % 2 != 0)
        throw ParityViolation("transport_f requires even m");
    w.validate();
    const int n = w.n, m = w.m;
    const int out_m = 2 * m;
    const int new_nodes = FenceNodes::linear_count(n, out_m);
    std::vector<int> node_map(new_nodes);
    if (m == 0) {
        node_map[0] = 0;
    } else {
        for (int t = 0; t < new_nodes; ++t) {
            int seg = t / m, u = t % m;
            if (seg == 0)
                node_map[t] = FenceNodes::wedge_node(n, m, 1, m - u);
            else if (seg % 2 == 1)
                node_map[t] = FenceNodes::wedge_node(n, m, (seg + 1) / 2 + 1, u);
            else
                node_map[t] = FenceNodes::wedge_node(n, m, seg / 2 + 1, m - u);
        }
    }
    return remap(w, Variant::Linear, out_m, node_map);
}

SectionWitness transport_g(const SectionWitness& w) {
    if (w.variant != Variant::Linear)
        throw ParityViolation("transport_g expects a linear witness");
    if (w.m % 4 != 0)
        throw ParityViolation("transport_g requires m divisible by four");
    w.validate();
    const int n = w.n, m = w.m;
    const int k = (n - 1) * m / 2;
    const int new_nodes = FenceNodes::wedge_count(n, k);
    std::vector<int> node_map(new_nodes);
    node_map[0] = k;
    for (int j = 1; j <= n; ++j) {
        const int goal = (j - 1) * m;
        for (int t = 1; t <= k; ++t) {
            int v = goal <= k ? std::max(k - t, goal) : std::min(k + t, goal);
            node_map[FenceNodes::wedge_node(n, k, j, t)] = v;
        }
    }
    return remap(w, Variant::Wedge, k, node_map);
}

}  // namespace finitetc
