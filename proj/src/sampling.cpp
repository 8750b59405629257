#include "cofin/sampling.hpp"

namespace cofin {

std::uint64_t Sampler::below(std::uint64_t n) {
    return n == 0 ? 0 : std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng_);
}

bool Sampler::coin() { return below(2) == 1; }

UpSet Sampler::upset(std::uint64_t max_threshold, std::uint64_t max_period) {
    std::uint64_t t = below(max_threshold + 1);
    std::uint64_t p = 1 + below(max_period);
    Bits prefix(t), wheel(p);
    for (auto& b : prefix) b = coin();
    for (auto& b : wheel) b = coin();
    return UpSet::from_raw(std::move(prefix), std::move(wheel));
}

UpSet Sampler::upset_of(SetTag tag) {
    for (;;) {
        UpSet a = upset();
        if (classify(a).tag == tag) return a;
    }
}

UpSet Sampler::finite_set(std::uint64_t max_size, std::uint64_t max_value) {
    std::vector<std::uint64_t> elems;
    std::uint64_t k = below(max_size + 1);
    for (std::uint64_t i = 0; i < k; ++i) elems.push_back(below(max_value + 1));
    return UpSet::finite(std::move(elems));
}

UpSet Sampler::infinite_set() {
    for (;;) {
        UpSet a = upset();
        if (is_infinite(a)) return a;
    }
}

UpSet Sampler::split_set() { return upset_of(SetTag::Split); }
UpSet Sampler::cofinite_set() { return upset_of(SetTag::Cofinite); }

UpSet Sampler::infinite_subset(const UpSet& a, bool proper) {
    UpSet indices = proper ? split_set() : infinite_set();
    return image_under(a, indices);
}

EnumMap Sampler::emap() { return EnumMap(infinite_set()); }
EnumMap Sampler::cofinite_map() { return EnumMap(cofinite_set()); }
EnumMap Sampler::coinfinite_map() { return EnumMap(split_set()); }

Gen Sampler::gen() {
    return Gen{coin() ? GenKind::Principal : GenKind::Almost, split_set()};
}

IdealExpr Sampler::ideal(int max_gens) {
    int n = 1 + static_cast<int>(below(static_cast<std::uint64_t>(max_gens)));
    IdealExpr acc = IdealExpr::empty();
    for (int i = 0; i < n; ++i) {
        Gen g = gen();
        IdealExpr one = g.kind == GenKind::Principal ? IdealExpr::principal(g.support)
                                                     : IdealExpr::almost(g.support);
        acc = IdealExpr::union_of(acc, one);
    }
    return acc;
}

IdealExpr Sampler::dense_ideal() {
    UpSet a = split_set();
    UpSet rest = complement(a);
    // cover the complement with a second generator so the support union is cofinite
    UpSet b = set_union(rest, infinite_subset(a));
    IdealExpr left = coin() ? IdealExpr::principal(a) : IdealExpr::almost(a);
    IdealExpr right = coin() ? IdealExpr::principal(b) : IdealExpr::almost(b);
    return IdealExpr::union_of(left, right);
}

EnumMap Sampler::member_of(const IdealExpr& ideal) {
    if (ideal.is_coinfinite()) return coinfinite_map();
    if (ideal.is_empty()) throw DomainError("sampling a member of the empty ideal");
    const auto& gens = ideal.generators();
    const Gen& g = gens[below(gens.size())];
    UpSet base = infinite_subset(g.support);
    if (g.kind == GenKind::Almost && coin()) base = set_union(base, finite_set(3));
    return EnumMap(std::move(base));
}

FilterRep Sampler::filter() {
    switch (below(6)) {
        case 0: return FilterRep::superset_filter(upset());
        case 1: return FilterRep::cofinite_superset_filter(upset());
        case 2: return FilterRep::frechet();
        case 3: return FilterRep::phi(upset(), upset());
        case 4: return meet(FilterRep::superset_filter(upset()),
                            FilterRep::cofinite_superset_filter(upset()));
        default: return join(FilterRep::superset_filter(upset()),
                             FilterRep::cofinite_superset_filter(upset()));
    }
}

UpSet Sampler::member_of(const FilterRep& f) {
    // P ∪ (Q minus finitely much) ∪ junk
    UpSet w = set_difference(f.almost_part(), finite_set(3));
    w = set_union(f.limit_part(), w);
    if (coin()) w = set_union(w, finite_set(3));
    if (coin()) w = set_union(w, upset());
    return w;
}

FiniteMap Sampler::finite_map(std::uint64_t max_table, std::uint64_t max_value) {
    std::vector<std::uint64_t> table(below(max_table + 1));
    for (auto& v : table) v = below(max_value + 1);
    return FiniteMap::prefixed(std::move(table), emap());
}

}  // namespace cofin
