#include "finitetc/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace finitetc {

ComplexPtr SimplicialComplex::build(std::vector<std::string> vertex_labels,
                                    std::vector<std::vector<int>> facets) {
    {
        std::set<std::string> seen;
        for (const auto& l : vertex_labels)
            if (!seen.insert(l).second) throw DuplicateLabel("duplicate vertex label: " + l);
    }
    const int n = int(vertex_labels.size());
    for (auto& f : facets) {
        if (f.empty()) throw Error("empty facet");
        for (int v : f)
            if (v < 0 || v >= n) throw IndexOutOfRange("facet vertex out of range");
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(facets.begin(), facets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    // drop facets contained in a larger one
    std::vector<std::vector<int>> keep;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        bool contained = false;
        for (std::size_t j = i + 1; j < facets.size() && !contained; ++j)
            contained = std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                                      facets[i].end());
        if (!contained) keep.push_back(facets[i]);
    }
    auto c = std::shared_ptr<SimplicialComplex>(new SimplicialComplex());
    c->vertex_labels_ = std::move(vertex_labels);
    c->facets_ = std::move(keep);
    return c;
}

bool SimplicialComplex::has_simplex(const std::vector<int>& s) const {
    for (const auto& f : facets_)
        if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
    return false;
}

std::vector<Bitset> SimplicialComplex::all_simplices(std::size_t size_cap) const {
    std::set<std::vector<int>> out;
    for (const auto& f : facets_) {
        const std::size_t k = f.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
            std::vector<int> s;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t(1) << b)) s.push_back(f[b]);
            out.insert(std::move(s));
            if (out.size() > size_cap) throw SizeLimitExceeded("simplex count exceeds cap");
        }
    }
    std::vector<std::vector<int>> sorted(out.begin(), out.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Bitset> masks;
    masks.reserve(sorted.size());
    for (const auto& s : sorted) {
        Bitset m(vertex_count());
        for (int v : s) m.set(v);
        masks.push_back(std::move(m));
    }
    return masks;
}

SimplicialMap::SimplicialMap(ComplexPtr dom, ComplexPtr cod, std::vector<int> assignment,
                             bool validate)
    : domain(std::move(dom)), codomain(std::move(cod)),
      vertex_assignment(std::move(assignment)) {
    if (int(vertex_assignment.size()) != domain->vertex_count())
        throw DomainMismatch("vertex assignment length mismatch");
    if (validate) {
        for (int v : vertex_assignment)
            if (v < 0 || v >= codomain->vertex_count())
                throw IndexOutOfRange("vertex assignment out of range");
        for (const auto& f : domain->facets())
            if (!codomain->has_simplex(image(f)))
                throw Error("vertex map does not send simplices to simplices");
    }
}

std::vector<int> SimplicialMap::image(const std::vector<int>& simplex) const {
    std::vector<int> img;
    img.reserve(simplex.size());
    for (int v : simplex) img.push_back(vertex_assignment[v]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

bool contiguous_one_step(const SimplicialMap& phi, const SimplicialMap& psi) {
    if (phi.domain->vertex_count() != psi.domain->vertex_count() ||
        phi.codomain->vertex_count() != psi.codomain->vertex_count())
        throw DomainMismatch("contiguity requires equal domain and codomain");
    for (const auto& f : phi.domain->facets()) {
        std::vector<int> u = phi.image(f);
        std::vector<int> v = psi.image(f);
        std::vector<int> both;
        std::set_union(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(both));
        if (!phi.codomain->has_simplex(both)) return false;
    }
    return true;
}

std::optional<std::vector<SimplicialMap>> enumerate_simplicial_maps(
    const ComplexPtr& dom, const ComplexPtr& cod, std::size_t budget) {
    const int n = dom->vertex_count();
    const int c = cod->vertex_count();
    double total = 1;
    for (int i = 0; i < n; ++i) {
        total *= c;
        if (total > double(budget) * 8) return std::nullopt;  // hopeless even with pruning
    }
    std::vector<std::vector<int>> facets_with_vertex(n);
    const auto& facets = dom->facets();
    for (std::size_t fi = 0; fi < facets.size(); ++fi)
        for (int v : facets[fi]) facets_with_vertex[v].push_back(int(fi));

    std::vector<SimplicialMap> out;
    std::vector<int> a(n, -1);
    std::size_t nodes = 0;
    bool tripped = false;
    std::function<void(int)> rec = [&](int v) {
        if (tripped) return;
        if (v == n) {
            out.emplace_back(dom, cod, a, false);
            if (out.size() > budget) tripped = true;
            return;
        }
        for (int w = 0; w < c; ++w) {
            if (++nodes > budget * 16) {
                tripped = true;
                return;
            }
            a[v] = w;
            // partial image of each facet touching v must stay a simplex
            bool ok = true;
            for (int fi : facets_with_vertex[v]) {
                std::vector<int> img;
                for (int u : facets[fi])
                    if (a[u] >= 0) img.push_back(a[u]);
                std::sort(img.begin(), img.end());
                img.erase(std::unique(img.begin(), img.end()), img.end());
                if (!cod->has_simplex(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(v + 1);
            a[v] = -1;
        }
    };
    rec(0);
    if (tripped) return std::nullopt;
    return out;
}

Tri same_contiguity_class(const SimplicialMap& phi, const SimplicialMap& psi,
                          const Budgets& budgets) {
    if (phi == psi) return Tri::True;
    auto maps = enumerate_simplicial_maps(phi.domain, phi.codomain, budgets.contiguity_maps);
    if (!maps) return Tri::Unknown;
    // locate phi and psi
    auto find = [&](const SimplicialMap& m) {
        for (std::size_t i = 0; i < maps->size(); ++i)
            if ((*maps)[i] == m) return int(i);
        return -1;
    };
    int s = find(phi), t = find(psi);
    if (s < 0 || t < 0) throw Error("map not found in enumeration");
    std::vector<char> seen(maps->size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (cur == t) return Tri::True;
        for (std::size_t j = 0; j < maps->size(); ++j) {
            if (seen[j]) continue;
            if (contiguous_one_step((*maps)[cur], (*maps)[j])) {
                seen[j] = 1;
                queue.push_back(int(j));
            }
        }
    }
    return Tri::False;
}

ComplexPtr order_complex(const FinitePoset& p) {
    // maximal chains = saturated chains from a minimal to a maximal element
    std::vector<std::vector<int>> facets;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int x) {
        cur.push_back(x);
        if (p.upper_covers(x).empty())
            facets.push_back(cur);
        else
            for (int y : p.upper_covers(x)) rec(y);
        cur.pop_back();
    };
    for (int x : p.minimal_elements()) rec(x);
    return SimplicialComplex::build(p.labels(), std::move(facets));
}

PosetPtr face_poset(const SimplicialComplex& k, std::vector<Bitset>* simplices_out,
                    std::size_t size_cap) {
    if (k.facets().empty()) throw Error("face_poset: complex is empty");
    auto simplices = k.all_simplices(size_cap);
    const std::size_t N = simplices.size();
    std::vector<std::string> labels(N);
    for (std::size_t i = 0; i < N; ++i) {
        std::string l = "{";
        bool first = true;
        simplices[i].for_each_set([&](std::size_t v) {
            if (!first) l += ",";
            first = false;
            l += k.vertex_label(int(v));
        });
        labels[i] = l + "}";
    }
    std::vector<Bitset> down(N, Bitset(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            if (simplices[j].is_subset_of(simplices[i])) down[i].set(j);
    if (simplices_out) *simplices_out = std::move(simplices);
    return FinitePoset::from_closed_relation(std::move(labels), std::move(down));
}

ComplexPtr sd_complex(const SimplicialComplex& k, std::size_t size_cap) {
    return order_complex(*face_poset(k, nullptr, size_cap));
}

SimplicialMap K_functor(const MonotoneMap& f) {
    auto dom = order_complex(*f.domain());
    auto cod = order_complex(*f.codomain());
    // vertices of the order complex are the poset elements in the same order
    return SimplicialMap(dom, cod, f.assignment(), false);
}

MonotoneMap X_functor(const SimplicialMap& phi) {
    std::vector<Bitset> dom_simplices, cod_simplices;
    auto dom = face_poset(*phi.domain, &dom_simplices);
    auto cod = face_poset(*phi.codomain, &cod_simplices);
    std::map<std::vector<int>, int> cod_index;
    for (std::size_t i = 0; i < cod_simplices.size(); ++i)
        cod_index[cod_simplices[i].to_indices()] = int(i);
    std::vector<int> a(dom_simplices.size());
    for (std::size_t i = 0; i < dom_simplices.size(); ++i) {
        auto img = phi.image(dom_simplices[i].to_indices());
        auto it = cod_index.find(img);
        if (it == cod_index.end()) throw Error("X_functor: image is not a simplex");
        a[i] = it->second;
    }
    return MonotoneMap(dom, cod, std::move(a), false);
}

bool complexes_equal(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertex_labels() != b.vertex_labels()) return false;
    return a.facets() == b.facets();
}

}  // namespace finitetc
