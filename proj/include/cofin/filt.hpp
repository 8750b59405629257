#pragma once

#include <optional>
#include <utility>

#include "cofin/upset.hpp"

namespace cofin {

// Representable filter on the naturals: all W with W ⊇ P and Q∖W finite,
// for canonical P ⊆ Q. Covers the principal filters (Q = P), the filters of
// cofinite supersets (Q cofinite-equivalent to N), the Frechet filter, and is
// closed under binary meet and join.
//
// Canonical form: Q collapses to P when Q∖P is finite; otherwise Q∖P is
// replaced by its phase-0 periodic extension, since the family only depends on
// Q∖P up to a finite difference. This keeps structural equality equal to
// family equality.
class FilterRep {
public:
    static FilterRep phi(UpSet p, UpSet q);
    static FilterRep superset_filter(UpSet a);           // U(A)
    static FilterRep cofinite_superset_filter(UpSet a);  // C(A)
    static FilterRep frechet() { return cofinite_superset_filter(UpSet::empty()); }
    static FilterRep discrete() { return superset_filter(UpSet::empty()); }
    static FilterRep indiscrete() { return superset_filter(UpSet::naturals()); }

    const UpSet& limit_part() const { return limit_; }
    const UpSet& almost_part() const { return almost_; }
    bool is_principal() const { return limit_ == almost_; }

    bool operator==(const FilterRep&) const = default;

private:
    UpSet limit_;   // P
    UpSet almost_;  // Q
    FilterRep(UpSet p, UpSet q) : limit_(std::move(p)), almost_(std::move(q)) {}
};

bool member(const UpSet& w, const FilterRep& f);

FilterRep meet(const FilterRep& f, const FilterRep& g);  // family intersection
FilterRep join(const FilterRep& f, const FilterRep& g);  // smallest common refinement

// f ⊆ g as families.
bool subseteq(const FilterRep& f, const FilterRep& g);
// A member of f outside g, when f is not contained in g.
std::optional<UpSet> subseteq_counterexample(const FilterRep& f, const FilterRep& g);

UpSet limit(const FilterRep& f);  // intersection of all members

FilterRep neg(const FilterRep& f);
FilterRep double_neg(const FilterRep& f);
bool is_dense(const FilterRep& f);

// b in (f -> g) = {B : B ∪ U in g for every U in f}; closed-form decision.
bool implication_member(const UpSet& b, const FilterRep& f, const FilterRep& g);
// A member U of f with b ∪ U outside g, when the implication fails.
std::optional<UpSet> implication_counterexample(const UpSet& b, const FilterRep& f,
                                                const FilterRep& g);

// Independent oracle for join membership: the canonical member pair
// (W1 in f, W2 in g) with W1 ∩ W2 ⊆ w, which exists iff w lies in the join.
std::optional<std::pair<UpSet, UpSet>> join_base_pair(const FilterRep& f, const FilterRep& g,
                                                      const UpSet& w);

// Complements of the members of a filter: an ideal of sets (bornology).
class BornRep {
public:
    explicit BornRep(FilterRep dual) : dual_(std::move(dual)) {}
    const FilterRep& dual() const { return dual_; }
    bool operator==(const BornRep&) const = default;

private:
    FilterRep dual_;
};

BornRep dualize(const FilterRep& f);
FilterRep dualize(const BornRep& b);
bool member(const UpSet& w, const BornRep& b);
UpSet extent(const BornRep& b);  // complement of the dual filter's limit

}  // namespace cofin
