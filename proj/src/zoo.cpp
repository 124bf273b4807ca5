#include "finitetc/zoo.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace finitetc {

namespace {

std::vector<std::string> sphere_labels(int m) {
    const int count = 2 * (m + 1);
    std::vector<std::string> labels(count);
    if (count <= 26) {
        for (int i = 0; i < count; ++i) labels[i] = std::string(1, char('a' + i));
    } else {
        for (int i = 0; i < count; ++i) labels[i] = "v" + std::to_string(i);
    }
    return labels;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string::npos ? pos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

int parse_param(const std::string& s, const std::string& name) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad parameter '" + s + "' in zoo name " + name);
    return std::stoi(s);
}

}  // namespace

PosetPtr minimal_sphere(int m) {
    if (m < 0) throw Error("sphere dimension must be nonnegative");
    auto labels = sphere_labels(m);
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k + 1 <= m; ++k)
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) edges.emplace_back(2 * k + a, 2 * (k + 1) + b);
    return FinitePoset::build(std::move(labels), edges);
}

PosetPtr chain_poset(int k) {
    if (k < 1) throw Error("chain length must be positive");
    std::vector<std::string> labels(k);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) labels[i] = "c" + std::to_string(i);
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return FinitePoset::build(std::move(labels), edges);
}

PosetPtr antichain_poset(int k) {
    if (k < 1) throw Error("antichain size must be positive");
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) labels[i] = "a" + std::to_string(i);
    return FinitePoset::build(std::move(labels), {});
}

PosetPtr builtin_space(const std::string& name) {
    auto parts = split(name, ':');
    const std::string& head = parts[0];
    if (head == "sphere" && parts.size() == 2) return minimal_sphere(parse_param(parts[1], name));
    if (head == "fence" && parts.size() == 2) return fence(parse_param(parts[1], name));
    if (head == "wedge_fence" && parts.size() == 3)
        return wedge_fence(parse_param(parts[1], name), parse_param(parts[2], name));
    if (head == "chain" && parts.size() == 2) return chain_poset(parse_param(parts[1], name));
    if (head == "antichain" && parts.size() == 2)
        return antichain_poset(parse_param(parts[1], name));
    throw ParseError("unknown zoo name: " + name);
}

bool is_builtin_space(const std::string& name) {
    try {
        builtin_space(name);
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::vector<std::pair<std::string, PosetPtr>> builtin_corpus() {
    std::vector<std::pair<std::string, PosetPtr>> out;
    for (const char* name : {"chain:1", "chain:3", "fence:2", "fence:3", "wedge_fence:2:2",
                             "sphere:1"})
        out.emplace_back(name, builtin_space(name));
    return out;
}

PosetPtr random_connected_poset(int max_size, std::uint64_t seed) {
    if (max_size < 2) throw Error("max_size must be at least 2");
    std::mt19937_64 rng(seed);
    const int n = 2 + int(rng() % std::uint64_t(max_size - 1));
    const int denom = 2 + int(rng() % 3);  // edge probability 1/2 .. 1/4
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() % std::uint64_t(denom) == 0) edges.emplace_back(i, j);
    auto p = FinitePoset::build(labels, edges);
    // connect components with extra covering edges, deterministically
    while (!p->is_connected()) {
        auto comp = p->component_ids();
        int other = -1;
        for (int i = 1; i < p->size() && other < 0; ++i)
            if (comp[i] != comp[0]) other = i;
        // orient the joining edge randomly but keep lower index below
        if (rng() % 2 == 0)
            edges.emplace_back(0, other);
        else
            edges.emplace_back(other, 0);
        p = FinitePoset::build(labels, edges);
    }
    return p;
}

std::vector<PosetPtr> posets_up_to_iso(int size, bool connected_only) {
    if (size < 1 || size > 6) throw Error("exhaustive enumeration supports sizes 1..6");
    const int n = size;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    std::set<std::string> seen;
    std::vector<std::pair<std::string, std::vector<std::vector<bool>>>> reps;
    const std::size_t total = std::size_t(1) << slots.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i) leq[i][i] = true;
        for (std::size_t b = 0; b < slots.size(); ++b)
            if (mask & (std::size_t(1) << b)) leq[slots[b].first][slots[b].second] = true;
        // transitivity (relation lives above the diagonal)
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                for (int k = j + 1; k < n && ok; ++k)
                    if (leq[i][j] && leq[j][k] && !leq[i][k]) ok = false;
        if (!ok) continue;
        // connectivity of the comparability graph
        std::vector<int> comp(n, -1);
        std::vector<int> stack{0};
        comp[0] = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y = 0; y < n; ++y)
                if (comp[y] < 0 && (leq[std::min(x, y)][std::max(x, y)]) && x != y) {
                    comp[y] = 0;
                    stack.push_back(y);
                }
        }
        if (connected_only && std::count(comp.begin(), comp.end(), 0) != n) continue;
        // canonical form: lexicographic minimum over relabelings
        std::string best;
        std::vector<std::vector<bool>> best_leq;
        std::sort(perm.begin(), perm.end());
        do {
            std::string s;
            s.reserve(std::size_t(n) * n);
            std::vector<std::vector<bool>> relabeled(n, std::vector<bool>(n, false));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) relabeled[perm[i]][perm[j]] = leq[i][j];
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) s += relabeled[i][j] ? '1' : '0';
            if (best.empty() || s < best) {
                best = std::move(s);
                best_leq = std::move(relabeled);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) reps.emplace_back(best, std::move(best_leq));
    }
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<PosetPtr> out;
    for (const auto& [key, leq] : reps) {
        std::vector<std::string> labels(n);
        for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && leq[i][j]) edges.emplace_back(i, j);
        out.push_back(FinitePoset::build(std::move(labels), edges));
    }
    return out;
}

}  // namespace finitetc
