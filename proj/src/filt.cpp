#include "cofin/filt.hpp"

namespace cofin {

FilterRep FilterRep::phi(UpSet p, UpSet q) {
    q = set_union(p, q);
    UpSet rest = set_difference(q, p);
    // the family only depends on Q∖P up to a finite difference
    q = is_finite(rest) ? p : set_union(p, periodic_extension(rest));
    return FilterRep{std::move(p), std::move(q)};
}

FilterRep FilterRep::superset_filter(UpSet a) {
    UpSet q = a;
    return FilterRep{std::move(a), std::move(q)};
}

FilterRep FilterRep::cofinite_superset_filter(UpSet a) {
    UpSet p = a;
    return phi(std::move(p), UpSet::naturals());
}

bool member(const UpSet& w, const FilterRep& f) {
    return subset(f.limit_part(), w) && is_finite(set_difference(f.almost_part(), w));
}

FilterRep meet(const FilterRep& f, const FilterRep& g) {
    return FilterRep::phi(set_union(f.limit_part(), g.limit_part()),
                          set_union(f.almost_part(), g.almost_part()));
}

FilterRep join(const FilterRep& f, const FilterRep& g) {
    const UpSet &p = f.limit_part(), &q = f.almost_part();
    const UpSet &p2 = g.limit_part(), &q2 = g.almost_part();
    UpSet core = set_intersect(p, p2);
    UpSet wide = set_union(set_union(set_intersect(p, q2), set_intersect(p2, q)),
                           set_union(set_intersect(q, q2), core));
    return FilterRep::phi(std::move(core), std::move(wide));
}

bool subseteq(const FilterRep& f, const FilterRep& g) {
    return subset(g.limit_part(), f.limit_part()) &&
           is_finite(set_difference(g.almost_part(),
                                    set_union(f.limit_part(), f.almost_part())));
}

std::optional<UpSet> subseteq_counterexample(const FilterRep& f, const FilterRep& g) {
    // a member of f outside g
    UpSet miss = set_difference(g.limit_part(), f.limit_part());
    if (!miss.is_empty()) {
        // drop one point g still needs; it is outside f's limit part, so the
        // result stays a member of f
        std::uint64_t x = select(miss, 0);
        return set_difference(set_union(f.limit_part(), f.almost_part()),
                              UpSet::singleton(x));
    }
    UpSet rest = set_difference(g.almost_part(),
                                set_union(f.limit_part(), f.almost_part()));
    if (!is_finite(rest))
        return set_union(f.limit_part(), f.almost_part());
    return std::nullopt;
}

UpSet limit(const FilterRep& f) { return f.limit_part(); }

FilterRep neg(const FilterRep& f) {
    return FilterRep::superset_filter(complement(f.limit_part()));
}

FilterRep double_neg(const FilterRep& f) {
    return FilterRep::superset_filter(f.limit_part());
}

bool is_dense(const FilterRep& f) { return f.limit_part().is_empty(); }

bool implication_member(const UpSet& b, const FilterRep& f, const FilterRep& g) {
    UpSet bp = set_union(b, f.limit_part());
    return subset(g.limit_part(), bp) &&
           is_finite(set_difference(g.almost_part(), set_union(bp, f.almost_part())));
}

std::optional<UpSet> implication_counterexample(const UpSet& b, const FilterRep& f,
                                                const FilterRep& g) {
    UpSet bp = set_union(b, f.limit_part());
    UpSet miss = set_difference(g.limit_part(), bp);
    if (!miss.is_empty()) {
        // drop one needed point from a member of f
        std::uint64_t x = select(miss, 0);
        return set_difference(set_union(f.limit_part(), f.almost_part()),
                              UpSet::singleton(x));
    }
    if (!is_finite(set_difference(g.almost_part(), set_union(bp, f.almost_part()))))
        return set_union(f.limit_part(), f.almost_part());
    return std::nullopt;
}

std::optional<std::pair<UpSet, UpSet>> join_base_pair(const FilterRep& f, const FilterRep& g,
                                                      const UpSet& w) {
    const UpSet &p = f.limit_part(), &q = f.almost_part();
    const UpSet &p2 = g.limit_part(), &q2 = g.almost_part();
    UpSet w1 = set_union(set_union(p, set_intersect(q, w)),
                         set_difference(q, set_union(p2, q2)));
    UpSet w2 = set_union(set_union(p2, set_intersect(q2, w)),
                         set_difference(q2, set_union(p, q)));
    if (!member(w1, f) || !member(w2, g)) return std::nullopt;
    if (!subset(set_intersect(w1, w2), w)) return std::nullopt;
    return std::make_pair(std::move(w1), std::move(w2));
}

BornRep dualize(const FilterRep& f) { return BornRep{f}; }
FilterRep dualize(const BornRep& b) { return b.dual(); }

bool member(const UpSet& w, const BornRep& b) { return member(complement(w), b.dual()); }

UpSet extent(const BornRep& b) { return complement(b.dual().limit_part()); }

}  // namespace cofin
