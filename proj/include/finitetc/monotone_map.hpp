#pragma once

#include <utility>
#include <vector>

#include "finitetc/poset.hpp"

namespace finitetc {

// An order-preserving map between finite posets, i.e. a continuous map of
// finite spaces.
class MonotoneMap {
public:
    MonotoneMap(PosetPtr domain, PosetPtr codomain, std::vector<int> assignment,
                bool validate = true)
        : domain_(std::move(domain)), codomain_(std::move(codomain)),
          map_(std::move(assignment)) {
        if (validate) check();
    }

    static MonotoneMap identity(const PosetPtr& p) {
        std::vector<int> a(p->size());
        for (int i = 0; i < p->size(); ++i) a[i] = i;
        return MonotoneMap(p, p, std::move(a), false);
    }
    static MonotoneMap constant(const PosetPtr& dom, const PosetPtr& cod, int value) {
        if (value < 0 || value >= cod->size())
            throw IndexOutOfRange("constant map: value out of range");
        return MonotoneMap(dom, cod, std::vector<int>(dom->size(), value), false);
    }

    const PosetPtr& domain() const { return domain_; }
    const PosetPtr& codomain() const { return codomain_; }
    const std::vector<int>& assignment() const { return map_; }
    int operator()(int x) const { return map_.at(x); }

    MonotoneMap compose_after(const MonotoneMap& first) const {
        // (*this) o first
        std::vector<int> a(first.domain()->size());
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = map_.at(first.map_[i]);
        return MonotoneMap(first.domain(), codomain_, std::move(a), false);
    }

    bool operator==(const MonotoneMap& o) const { return map_ == o.map_; }

    // pointwise order
    bool leq(const MonotoneMap& o) const {
        for (std::size_t i = 0; i < map_.size(); ++i)
            if (!codomain_->leq(map_[i], o.map_[i])) return false;
        return true;
    }

private:
    void check() const {
        if (int(map_.size()) != domain_->size())
            throw DomainMismatch("assignment length does not match domain size");
        for (int x : map_)
            if (x < 0 || x >= codomain_->size())
                throw IndexOutOfRange("assignment value out of codomain range");
        for (auto [a, b] : domain_->hasse())
            if (!codomain_->leq(map_[a], map_[b]))
                throw Error("map is not order-preserving at edge " + domain_->label(a) +
                            " < " + domain_->label(b));
    }

    PosetPtr domain_, codomain_;
    std::vector<int> map_;
};

// A combinatorial path: a monotone map J_m -> P recorded by its values
// x0 <= x1 >= x2 <= ...
class CombinatorialPath {
public:
    CombinatorialPath(PosetPtr target, std::vector<int> values)
        : target_(std::move(target)), values_(std::move(values)) {
        if (values_.empty()) throw Error("path must have at least one value");
        for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
            bool ok = (i % 2 == 0) ? target_->leq(values_[i], values_[i + 1])
                                   : target_->leq(values_[i + 1], values_[i]);
            if (!ok)
                throw Error("path values violate the zigzag pattern at position " +
                            std::to_string(i));
        }
    }

    const PosetPtr& target() const { return target_; }
    int length() const { return int(values_.size()) - 1; }  // the fence length m
    int operator()(int i) const { return values_.at(i); }
    const std::vector<int>& values() const { return values_; }

private:
    PosetPtr target_;
    std::vector<int> values_;
};

// Concatenation with the parity-dependent reindexing: result length is
// m1 + m2 when m1 is even, m1 + m2 + 1 (with gamma1(m1) repeated) when odd.
CombinatorialPath concatenate(const CombinatorialPath& g1, const CombinatorialPath& g2);

}  // namespace finitetc
