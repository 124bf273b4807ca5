#include "finitetc/verify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "finitetc/simplicial.hpp"
#include "finitetc/witness.hpp"
#include "finitetc/zoo.hpp"

namespace finitetc {

namespace {

constexpr long kInf = std::numeric_limits<long>::max();

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// value as extended integer, or nullopt when not exact / unknown
std::optional<long> certified_value(const ComplexityReport& r) {
    if (!r.exact) return std::nullopt;
    if (r.value_kind == ComplexityReport::ValueKind::Infinite) return kInf;
    if (r.value_kind == ComplexityReport::ValueKind::Finite) return r.value;
    return std::nullopt;
}

}  // namespace

std::vector<std::pair<std::string, PosetPtr>> verification_corpus(int random_count, int max_size,
                                                                  std::uint64_t seed) {
    auto corpus = builtin_corpus();
    for (int i = 0; i < random_count; ++i)
        corpus.emplace_back("random:" + std::to_string(i),
                            random_connected_poset(max_size, seed + std::uint64_t(i)));
    return corpus;
}

VerifyCheck check_contractibility_law(int max_size, const ComputeConfig& config) {
    VerifyCheck c;
    c.name = "contractibility-law";
    for (int size = 1; size <= max_size; ++size)
        for (const auto& p : connected_posets_up_to_iso(size)) {
            ++c.checked;
            auto r = cc_n(p, 2, config);
            auto v = certified_value(r);
            std::string desc = "poset#" + std::to_string(c.checked) + " (" +
                               std::to_string(size) + " elements)";
            if (!v) {
                c.violation(desc + ": cc_2 not certified");
                continue;
            }
            if ((*v == 1) != is_contractible(*p))
                c.violation(desc + ": cc_2=" + std::to_string(*v) + " but contractible=" +
                            (is_contractible(*p) ? "yes" : "no"));
        }
    return c;
}

VerifyCheck check_bound_lemmas(const std::vector<std::pair<std::string, PosetPtr>>& corpus,
                               int m_max, const ComputeConfig& config) {
    VerifyCheck c;
    c.name = "bound-lemmas";
    for (const auto& [name, p] : corpus) {
        auto limit = certified_value(cc_n(p, 2, config));
        for (Variant variant : {Variant::Wedge, Variant::Linear}) {
            const char* vname = variant == Variant::Wedge ? "wedge" : "linear";
            long prev = kInf;
            bool have_prev = false;
            std::vector<Bitset> known;
            std::vector<std::optional<long>> values;
            std::vector<bool> exact_flags;
            for (int m = 0; m <= m_max; ++m) {
                auto r = cc_nm(p, 2, m, variant, config, known);
                ++c.checked;
                std::optional<long> v;
                if (r.value_kind == ComplexityReport::ValueKind::Infinite)
                    v = kInf;
                else if (r.value_kind == ComplexityReport::ValueKind::Finite)
                    v = r.value;
                values.push_back(v);
                exact_flags.push_back(r.exact);
                if (!v) continue;
                if (have_prev && *v > prev)
                    c.violation(name + " " + vname + " m=" + std::to_string(m) +
                                ": value increased " + std::to_string(prev) + " -> " +
                                std::to_string(*v));
                if (limit && r.exact && *v != kInf && *v < *limit)
                    c.violation(name + " " + vname + " m=" + std::to_string(m) +
                                ": bounded value below the limit");
                prev = *v;
                have_prev = true;
                if (r.value_kind == ComplexityReport::ValueKind::Finite)
                    known = r.cover_masks;
            }
            // stabilized bounded value must agree with the limit
            const std::size_t last = values.size() - 1;
            if (limit && *limit != kInf && values[last] && values[last - 1] &&
                exact_flags[last] && exact_flags[last - 1] &&
                *values[last] == *values[last - 1] && *values[last] != kInf) {
                if (*values[last] != *limit)
                    c.violation(name + " " + vname + ": stabilized at " +
                                std::to_string(*values[last]) + " but limit is " +
                                std::to_string(*limit));
            }
        }
    }
    return c;
}

VerifyCheck check_subdivision_monotonicity(
    const std::vector<std::pair<std::string, PosetPtr>>& corpus, const ComputeConfig& config) {
    VerifyCheck c;
    c.name = "subdivision-monotonicity";
    for (const auto& [name, p] : corpus) {
        ++c.checked;
        auto seq = cc_k_sequence(p, 2, 1, config);
        if (seq[0].value_kind != ComplexityReport::ValueKind::Finite ||
            seq[1].value_kind != ComplexityReport::ValueKind::Finite)
            continue;
        if (seq[1].value > seq[0].value)
            c.violation(name + ": cc^1=" + std::to_string(seq[1].value) + " > cc^0=" +
                        std::to_string(seq[0].value));
    }
    return c;
}

VerifyCheck check_inequality_chain(const std::vector<std::pair<std::string, PosetPtr>>& corpus,
                                   const ComputeConfig& config) {
    VerifyCheck c;
    c.name = "inequality-chain";
    for (const auto& [name, p] : corpus) {
        ++c.checked;
        auto cat_p = certified_value(cat(p, config));
        auto cc2 = certified_value(cc_n(p, 2, config));
        auto cat_p2 = certified_value(cat(power(p, 2), config));
        if (!cat_p || !cc2 || !cat_p2) {
            c.violation(name + ": some invariant not certified");
            continue;
        }
        if (*cat_p > *cc2) c.violation(name + ": cat(P) > cc_2(P)");
        if (*cc2 > *cat_p2) c.violation(name + ": cc_2(P) > cat(P^2)");
        if (*cat_p != kInf && *cat_p2 > *cat_p * *cat_p)
            c.violation(name + ": cat(P^2) > cat(P)^2");
    }
    return c;
}

VerifyCheck check_homotopy_invariance(int count, int max_size, std::uint64_t seed,
                                      const ComputeConfig& config) {
    VerifyCheck c;
    c.name = "homotopy-invariance";
    for (int i = 0; i < count; ++i) {
        ++c.checked;
        auto p = random_connected_poset(max_size, seed + std::uint64_t(i));
        auto q = core(p);
        auto v1 = certified_value(cc_n(p, 2, config));
        auto v2 = certified_value(cc_n(q, 2, config));
        std::string desc = "random#" + std::to_string(i);
        if (!v1 || !v2) {
            c.violation(desc + ": cc_2 not certified");
            continue;
        }
        if (*v1 != *v2)
            c.violation(desc + ": cc_2(P)=" + std::to_string(*v1) + " but cc_2(core P)=" +
                        std::to_string(*v2));
    }
    return c;
}

namespace {

// Connected components of a map list under pointwise comparability: exactly
// the homotopy classes.
std::vector<int> homotopy_classes(const FinitePoset& cod,
                                  const std::vector<std::vector<int>>& maps) {
    UnionFind uf(int(maps.size()));
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j) {
            bool le = true, ge = true;
            for (std::size_t x = 0; x < maps[i].size() && (le || ge); ++x) {
                le = le && cod.leq(maps[i][x], maps[j][x]);
                ge = ge && cod.leq(maps[j][x], maps[i][x]);
            }
            if (le || ge) uf.unite(int(i), int(j));
        }
    std::vector<int> out(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) out[i] = uf.find(int(i));
    return out;
}

std::vector<int> contiguity_classes(const std::vector<SimplicialMap>& maps) {
    UnionFind uf(int(maps.size()));
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j)
            if (contiguous_one_step(maps[i], maps[j])) uf.unite(int(i), int(j));
    std::vector<int> out(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) out[i] = uf.find(int(i));
    return out;
}

}  // namespace

VerifyCheck check_transfer_forward(int max_size, const ComputeConfig& config) {
    VerifyCheck c;
    c.name = "transfer-forward";
    std::vector<PosetPtr> posets;
    for (int size = 1; size <= max_size; ++size)
        for (const auto& p : posets_up_to_iso(size, false)) posets.push_back(p);
    for (std::size_t di = 0; di < posets.size(); ++di)
        for (std::size_t ci = 0; ci < posets.size(); ++ci) {
            const auto& dom = posets[di];
            const auto& cod = posets[ci];
            std::vector<std::vector<int>> candidates(dom->size());
            for (int x = 0; x < dom->size(); ++x) {
                candidates[x].resize(cod->size());
                std::iota(candidates[x].begin(), candidates[x].end(), 0);
            }
            std::vector<std::vector<int>> maps;
            enumerate_monotone_maps(*dom, *cod, candidates,
                                    [&](const std::vector<int>& a) {
                                        maps.push_back(a);
                                        return false;
                                    },
                                    config.budgets.csp_nodes);
            if (maps.size() < 2) continue;
            auto hom = homotopy_classes(*cod, maps);
            auto kdom = order_complex(*dom);
            auto kcod = order_complex(*cod);
            std::vector<SimplicialMap> smaps;
            smaps.reserve(maps.size());
            for (const auto& a : maps) smaps.emplace_back(kdom, kcod, a, false);
            auto cont = contiguity_classes(smaps);
            for (std::size_t i = 0; i < maps.size(); ++i)
                for (std::size_t j = i + 1; j < maps.size(); ++j) {
                    if (hom[i] != hom[j]) continue;
                    ++c.checked;
                    if (cont[i] != cont[j])
                        c.violation("posets #" + std::to_string(di) + "->#" +
                                    std::to_string(ci) + ": homotopic maps " +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    " in different contiguity classes");
                }
        }
    return c;
}

namespace {

std::vector<ComplexPtr> complex_corpus() {
    std::vector<ComplexPtr> out;
    auto add = [&](std::vector<std::string> verts, std::vector<std::vector<int>> facets) {
        out.push_back(SimplicialComplex::build(std::move(verts), std::move(facets)));
    };
    add({"a"}, {{0}});
    add({"a", "b"}, {{0}, {1}});
    add({"a", "b"}, {{0, 1}});
    // every complex on 3 labeled vertices covering all vertices, up to the
    // S_3 action: enumerate antichains of nonempty subsets
    {
        std::vector<std::vector<int>> subsets;
        for (int mask = 1; mask < 8; ++mask) {
            std::vector<int> s;
            for (int b = 0; b < 3; ++b)
                if (mask & (1 << b)) s.push_back(b);
            subsets.push_back(s);
        }
        std::set<std::string> seen;
        for (int pick = 1; pick < (1 << 7); ++pick) {
            std::vector<std::vector<int>> facets;
            for (int b = 0; b < 7; ++b)
                if (pick & (1 << b)) facets.push_back(subsets[b]);
            // must cover all three vertices; antichain-ness is canonicalized
            // away by the builder, so require it here to avoid duplicates
            bool cover[3] = {false, false, false};
            bool antichain = true;
            for (std::size_t i = 0; i < facets.size(); ++i) {
                for (int v : facets[i]) cover[v] = true;
                for (std::size_t j = 0; j < facets.size() && antichain; ++j)
                    if (i != j)
                        antichain = !std::includes(facets[j].begin(), facets[j].end(),
                                                   facets[i].begin(), facets[i].end());
            }
            if (!(cover[0] && cover[1] && cover[2]) || !antichain) continue;
            // canonical form under vertex permutations
            std::string best;
            int perm[3] = {0, 1, 2};
            std::sort(perm, perm + 3);
            do {
                std::vector<std::vector<int>> rel;
                for (auto f : facets) {
                    for (int& v : f) v = perm[v];
                    std::sort(f.begin(), f.end());
                    rel.push_back(f);
                }
                std::sort(rel.begin(), rel.end());
                std::string s;
                for (const auto& f : rel) {
                    for (int v : f) s += char('0' + v);
                    s += '|';
                }
                if (best.empty() || s < best) best = s;
            } while (std::next_permutation(perm, perm + 3));
            if (seen.insert(best).second) add({"a", "b", "c"}, facets);
        }
    }
    // a few larger shapes
    add({"a", "b", "c", "d"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});        // 4-cycle
    add({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {0, 3}});                // star
    add({"a", "b", "c", "d"}, {{0, 1, 2}, {2, 3}});                     // triangle + tail
    add({"a", "b", "c", "d", "e"}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});   // path
    return out;
}

}  // namespace

VerifyCheck check_transfer_backward(const ComputeConfig& config) {
    VerifyCheck c;
    c.name = "transfer-backward";
    auto corpus = complex_corpus();
    for (std::size_t di = 0; di < corpus.size(); ++di)
        for (std::size_t ci = 0; ci < corpus.size(); ++ci) {
            auto maps = enumerate_simplicial_maps(corpus[di], corpus[ci], 300);
            if (!maps || maps->size() < 2 || maps->size() > 300) continue;
            auto cont = contiguity_classes(*maps);
            // one face-poset translation per map, compared within classes
            std::vector<MonotoneMap> xs;
            xs.reserve(maps->size());
            for (const auto& phi : *maps) xs.push_back(X_functor(phi));
            std::map<int, int> representative;
            for (std::size_t i = 0; i < maps->size(); ++i) {
                auto [it, fresh] = representative.emplace(cont[i], int(i));
                if (fresh) continue;
                ++c.checked;
                Tri t = homotopic(xs[i], xs[it->second], config.budgets);
                if (t != Tri::True)
                    c.violation("complexes #" + std::to_string(di) + "->#" +
                                std::to_string(ci) + ": contiguous maps with " +
                                (t == Tri::False ? "non-homotopic" : "undecided") +
                                " face-poset images");
            }
        }
    return c;
}

VerifyCheck check_transports(const std::vector<std::pair<std::string, PosetPtr>>& corpus,
                             int m_max, const ComputeConfig& config) {
    VerifyCheck c;
    c.name = "section-transports";
    ComputeConfig cfg = config;
    cfg.emit_witness = true;
    for (const auto& [name, p] : corpus)
        for (Variant variant : {Variant::Wedge, Variant::Linear})
            for (int m = 0; m <= m_max; ++m) {
                auto r = cc_nm(p, 2, m, variant, cfg);
                for (const auto& w : r.witnesses) {
                    auto run = [&](const char* what, auto&& transport) {
                        ++c.checked;
                        try {
                            transport(w);
                        } catch (const InvalidWitness& e) {
                            c.violation(name + " " + what + " m=" + std::to_string(m) + ": " +
                                        e.what());
                        }
                    };
                    run("transport_R", [](const SectionWitness& x) { return transport_R(x); });
                    if (variant == Variant::Wedge && m % 2 == 0)
                        run("transport_f",
                            [](const SectionWitness& x) { return transport_f(x); });
                    if (variant == Variant::Linear && m % 4 == 0)
                        run("transport_g",
                            [](const SectionWitness& x) { return transport_g(x); });
                }
            }
    return c;
}

std::vector<VerifyCheck> verify_suite(const std::string& suite, int random_count, int max_size,
                                      std::uint64_t seed, const ComputeConfig& config) {
    std::vector<VerifyCheck> out;
    auto corpus = verification_corpus(random_count, max_size, seed);
    const bool all = suite == "all";
    if (all || suite == "lemmas") {
        out.push_back(check_bound_lemmas(corpus, 3, config));
        out.push_back(check_subdivision_monotonicity(corpus, config));
        out.push_back(check_transports(corpus, 4, config));
    }
    if (all || suite == "corollaries") {
        out.push_back(check_contractibility_law(std::min(max_size, 5), config));
        out.push_back(check_inequality_chain(corpus, config));
        out.push_back(check_homotopy_invariance(std::max(random_count, 50), max_size, seed,
                                                config));
    }
    if (all || suite == "transfer") {
        out.push_back(check_transfer_forward(4, config));
        out.push_back(check_transfer_backward(config));
    }
    if (out.empty()) throw Error("unknown verify suite: " + suite);
    return out;
}

}  // namespace finitetc
