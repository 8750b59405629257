#include "cofin/emonoid.hpp"

#include <algorithm>
#include <numeric>

namespace cofin {

EnumMap::EnumMap(UpSet image) : image_(std::move(image)) {
    if (!is_infinite(image_))
        throw DomainError("enumerating map needs an infinite image");
}

EnumMap compose(const EnumMap& u, const EnumMap& v) {
    return EnumMap(image_under(u.image(), v.image()));
}

bool leq(const EnumMap& u, const EnumMap& v) { return subset(u.image(), v.image()); }

std::optional<EnumMap> meet(const EnumMap& u, const EnumMap& v) {
    UpSet common = set_intersect(u.image(), v.image());
    if (!is_infinite(common)) return std::nullopt;
    return EnumMap(std::move(common));
}

std::optional<EnumMap> factor_through(const EnumMap& u, const EnumMap& v) {
    if (!leq(u, v)) return std::nullopt;
    return EnumMap(preimage_under(v.image(), u.image()));
}

EnumMap sigma(const UpSet& k_finite) {
    if (!is_finite(k_finite))
        throw DomainError("sigma takes a finite avoided set");
    return EnumMap(complement(k_finite));
}

std::vector<EnumMap> factor_sigma(const UpSet& k_finite) {
    auto points = elements(k_finite);  // ascending k_1 < ... < k_r
    std::vector<EnumMap> out;
    out.reserve(points.size());
    for (auto it = points.rbegin(); it != points.rend(); ++it)
        out.push_back(sigma_point(*it));
    return out;
}

std::pair<EnumMap, EnumMap> split_coinfinite(const EnumMap& u) {
    if (!u.coinfinite_image())
        throw DomainError("split_coinfinite needs a co-infinite image");
    const UpSet& a = u.image();
    auto [b, c] = split_alternate(complement(a));
    (void)c;
    UpSet va = set_union(a, b);
    EnumMap v{va};
    EnumMap w{preimage_under(va, a)};
    return {std::move(v), std::move(w)};
}

EnumMap densify(const EnumMap&) { return EnumMap::evens(); }

std::pair<EnumMap, EnumMap> atomic_complete(const EnumMap& u, const EnumMap& v) {
    if (!u.cofinite_image() || !v.cofinite_image())
        throw DomainError("atomic completion needs cofinite images");
    UpSet common = set_intersect(u.image(), v.image());
    return {EnumMap(preimage_under(u.image(), common)),
            EnumMap(preimage_under(v.image(), common))};
}

FiniteMap FiniteMap::prefixed(std::vector<std::uint64_t> table, EnumMap tail) {
    return FiniteMap{Prefixed{std::move(table), std::move(tail)}};
}

FiniteMap FiniteMap::rank_map(UpSet infinite_set) {
    if (!is_infinite(infinite_set))
        throw DomainError("rank map needs an infinite set");
    return FiniteMap{RankMap{std::move(infinite_set)}};
}

FiniteMap FiniteMap::round_up(UpSet infinite_set) {
    if (!is_infinite(infinite_set))
        throw DomainError("rounding map needs an infinite set");
    return FiniteMap{RoundUp{std::move(infinite_set)}};
}

FiniteMap FiniteMap::pinned(std::uint64_t m, std::uint64_t n) {
    std::vector<std::uint64_t> table(m, 0);
    table.push_back(n);
    EnumMap tail{complement(UpSet::finite({0, n}))};
    return prefixed(std::move(table), std::move(tail));
}

std::uint64_t FiniteMap::operator()(std::uint64_t n) const {
    if (auto* p = std::get_if<Prefixed>(&kind_)) {
        if (n < p->table.size()) return p->table[n];
        return (p->tail)(n);
    }
    if (auto* r = std::get_if<RankMap>(&kind_)) return rank(r->of, n);
    const auto& a = std::get<RoundUp>(kind_).of;
    return select(a, rank(a, n));
}

std::uint64_t FiniteMap::cut() const {
    if (auto* p = std::get_if<Prefixed>(&kind_)) return p->table.size();
    return 0;
}

UpSet FiniteMap::preimage(const UpSet& s) const {
    if (auto* p = std::get_if<Prefixed>(&kind_)) {
        std::vector<std::uint64_t> low;
        for (std::uint64_t k = 0; k < p->table.size(); ++k)
            if (s.contains(p->table[k])) low.push_back(k);
        UpSet high = set_intersect(preimage_under(p->tail.image(), s),
                                   UpSet::from_threshold(p->table.size()));
        return set_union(UpSet::finite(std::move(low)), high);
    }
    if (auto* r = std::get_if<RankMap>(&kind_)) {
        const UpSet& a = r->of;
        // rank(a, n + period) = rank(a, n) + wheel_ones once n is past the
        // threshold, so membership repeats with the lcm-matched stride
        std::uint64_t t = std::max(a.threshold(), select(a, s.threshold()) + 1);
        std::uint64_t d = a.wheel_ones();
        std::uint64_t per = (std::lcm(s.period(), d) / d) * a.period();
        Bits window(t + per, 0);
        for (std::uint64_t n = 0; n < window.size(); ++n)
            window[n] = s.contains(rank(a, n));
        return UpSet::from_window(window, t, per);
    }
    const auto& a = std::get<RoundUp>(kind_).of;
    std::uint64_t t = std::max(a.threshold(), s.threshold());
    std::uint64_t per = std::lcm(a.period(), s.period());
    Bits window(t + per, 0);
    for (std::uint64_t n = 0; n < window.size(); ++n)
        window[n] = s.contains(select(a, rank(a, n)));
    return UpSet::from_window(window, t, per);
}

UpSet FiniteMap::image_of(const UpSet& s) const {
    auto* p = std::get_if<Prefixed>(&kind_);
    if (!p) throw DomainError("image_of supported for prefixed maps only");
    std::vector<std::uint64_t> low;
    for (std::uint64_t k = 0; k < p->table.size(); ++k)
        if (s.contains(k)) low.push_back(p->table[k]);
    UpSet tail_args = set_intersect(s, UpSet::from_threshold(p->table.size()));
    UpSet high = image_under(p->tail.image(), tail_args);
    UpSet low_set = UpSet::finite(std::move(low));
    return set_union(low_set, high);
}

UpSet FiniteMap::full_image() const {
    if (std::holds_alternative<Prefixed>(kind_)) return image_of(UpSet::naturals());
    if (std::holds_alternative<RankMap>(kind_)) return UpSet::naturals();
    return std::get<RoundUp>(kind_).of;
}

UpSet record_positions(const FiniteMap& f) {
    auto* p = f.as_prefixed();
    if (!p) throw DomainError("record positions need a prefixed map");
    const auto& table = p->table;
    std::vector<std::uint64_t> low;
    bool any = false;
    std::uint64_t best = 0;
    for (std::uint64_t n = 0; n < table.size(); ++n) {
        if (!any || table[n] > best) low.push_back(n);
        best = any ? std::max(best, table[n]) : table[n];
        any = true;
    }
    // past the cut the map follows the increasing tail, so a position is a
    // record as soon as the tail value clears the whole table
    std::uint64_t from = table.size();
    if (any) from = std::max(from, rank(p->tail.image(), best + 1));
    return set_union(UpSet::finite(std::move(low)), UpSet::from_threshold(from));
}

}  // namespace cofin
