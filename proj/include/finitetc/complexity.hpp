#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "finitetc/homotopy.hpp"
#include "finitetc/poset.hpp"
#include "finitetc/witness.hpp"

namespace finitetc {

struct ComputeConfig {
    Budgets budgets;
    bool emit_witness = false;
    int jobs = 1;
    std::size_t size_cap = global_size_cap();
    std::size_t sd_size_cap = 20000;
    // wall-clock cap for multi-level computations; 0 disables it (and keeps
    // results deterministic)
    double time_budget_seconds = 0;
};

struct ComplexityReport {
    std::string invariant;
    int n = 0;
    std::optional<int> m, k;
    enum class ValueKind { Finite, Infinite, Unknown } value_kind = ValueKind::Finite;
    long value = 0;
    bool exact = false;  // false => upper_bound_at_budget (or unknown)
    std::vector<std::vector<std::string>> cover_labels;
    std::vector<Bitset> cover_masks;  // same cover as element masks of the ambient
    std::vector<SectionWitness> witnesses;
    double elapsed_ms = 0;
    std::string notes;

    bool is_finite() const { return value_kind == ValueKind::Finite; }
};

// P together with P^n and the coordinate projections.
struct PowerSpace {
    PosetPtr base;
    PosetPtr total;
    int n = 1;
    std::vector<std::vector<int>> coords;  // coords[e][j]

    std::vector<int> projection(int j) const {  // 0-based j
        std::vector<int> a(coords.size());
        for (std::size_t e = 0; e < coords.size(); ++e) a[e] = coords[e][j];
        return a;
    }
};

PowerSpace make_power(const PosetPtr& p, int n, std::size_t size_cap = global_size_cap());

// --- Criteria over down-sets -------------------------------------------

// A downward-closed predicate on down-sets of an ambient poset, memoized.
class SectionCriterion {
public:
    virtual ~SectionCriterion() = default;
    const FinitePoset& ambient() const { return *ambient_; }

    Tri passes(const Bitset& q);
    std::size_t eval_count() const { return evals_; }

    // An element of a failing down-set whose up-closure carries part of the
    // obstruction; peeling it is a sensible repair step. Best effort.
    virtual std::optional<int> repair_hint(const Bitset& q) {
        (void)q;
        return std::nullopt;
    }

protected:
    explicit SectionCriterion(PosetPtr ambient) : ambient_(std::move(ambient)) {}
    virtual Tri evaluate(const Bitset& q) = 0;

    PosetPtr ambient_;

private:
    std::unordered_map<Bitset, Tri, BitsetHash> memo_;
    std::size_t evals_ = 0;
};

// Restricted coordinate maps q -> P pairwise homotopic; the exact m-limit
// criterion for sections (and, with rho maps, the criterion at level k).
class ProjectionsHomotopicCriterion final : public SectionCriterion {
public:
    ProjectionsHomotopicCriterion(PosetPtr ambient, PosetPtr factor,
                                  std::vector<std::vector<int>> maps, Budgets budgets);

    // Upper end of a Hasse edge witnessing a winding mismatch between two of
    // the restricted maps, when the factor core is a crown.
    std::optional<int> repair_hint(const Bitset& q) override;

protected:
    Tri evaluate(const Bitset& q) override;

private:
    PosetPtr factor_;
    std::vector<std::vector<int>> maps_;
    Budgets budgets_;
    CoreData factor_core_;
};

// Exact bounded decision: a monotone section of q_{n,m} / q'_{n,m} over q.
class BoundedSectionCriterion final : public SectionCriterion {
public:
    BoundedSectionCriterion(PowerSpace space, int m, Variant variant, Budgets budgets);

    std::optional<SectionWitness> find_witness(const Bitset& q);

protected:
    Tri evaluate(const Bitset& q) override;

private:
    Tri solve(const Bitset& q, std::vector<std::vector<int>>* solution);

    PowerSpace space_;
    int m_;
    Variant variant_;
    Budgets budgets_;
};

// Inclusion q -> ambient homotopic to a constant.
class ContractibleInCriterion final : public SectionCriterion {
public:
    ContractibleInCriterion(PosetPtr ambient, Budgets budgets);

protected:
    Tri evaluate(const Bitset& q) override;

private:
    Budgets budgets_;
};

// --- Cover machinery ----------------------------------------------------

struct MaximalOpensResult {
    std::vector<Bitset> opens;  // passing down-sets, pairwise non-contained
    bool complete = false;      // true iff this is every maximal passing open
    bool saw_unknown = false;
};

// Top-down enumeration: start from the whole space and peel maximal
// elements off failing sets. Complete when the eval budget holds out.
MaximalOpensResult maximal_passing_opens(SectionCriterion& crit, const Budgets& budgets);

struct CoverSearchResult {
    std::vector<Bitset> cover;
    bool optimal = false;  // proven minimum over the given candidates
};

// Minimum-cardinality subcover; throws Infeasible when candidates do not
// cover the universe. Branch-and-bound, greedy fallback on budget.
CoverSearchResult exact_min_cover(const Bitset& universe, const std::vector<Bitset>& candidates,
                                  const Budgets& budgets);

struct CoverOutcome {
    ComplexityReport::ValueKind kind = ComplexityReport::ValueKind::Finite;
    long value = 0;
    bool exact = false;
    std::vector<Bitset> cover;
    std::string notes;
};

// Full pipeline: fast paths, infinity detection on basis opens, conflict
// clique lower bound, enumeration or heuristic candidates, exact set cover.
// `known_passing` are down-sets already known to pass (e.g. transported
// covers); they are trusted without re-evaluation.
CoverOutcome minimum_cover(SectionCriterion& crit, const std::vector<Bitset>& known_passing,
                           const ComputeConfig& config);

// --- Invariants -----------------------------------------------------------

// m-limit sectionability of a down-set of P^n: the restricted projections
// are pairwise homotopic.
Tri sectionable_limit(const PowerSpace& space, const Bitset& q, const Budgets& budgets = {});

Tri section_exists_bounded(const PowerSpace& space, const Bitset& q, int m, Variant variant,
                           const Budgets& budgets = {},
                           std::optional<SectionWitness>* witness = nullptr);

ComplexityReport cc_nm(const PosetPtr& p, int n, int m, Variant variant,
                       const ComputeConfig& config = {},
                       const std::vector<Bitset>& known_passing = {});

ComplexityReport cc_n(const PosetPtr& p, int n, const ComputeConfig& config = {});

ComplexityReport cat(const PosetPtr& p, const ComputeConfig& config = {});

}  // namespace finitetc
