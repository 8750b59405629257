#include "cofin/ideal.hpp"

#include <algorithm>

#include "cofin/sampling.hpp"

namespace cofin {

namespace {

// g covered by h as single generators.
bool gen_absorbed(const Gen& g, const Gen& h) {
    if (h.kind == GenKind::Principal) {
        if (g.kind != GenKind::Principal) return false;
        return subset(g.support, h.support);
    }
    return almost_subset(g.support, h.support);
}

bool gen_in_coinfinite(const Gen& g) { return is_split(g.support); }

}  // namespace

int compare(const Gen& a, const Gen& b) {
    if (a.kind != b.kind) return a.kind == GenKind::Principal ? -1 : 1;
    return compare(a.support, b.support);
}

void IdealExpr::canonicalize() {
    if (coinf_) {
        gens_.clear();
        return;
    }
    for (auto& g : gens_) {
        if (!is_infinite(g.support))
            throw DomainError("ideal generator needs an infinite support");
        if (g.kind == GenKind::Almost) {
            g.support = periodic_extension(g.support);
            if (is_cofinite(g.support)) g = Gen{GenKind::Principal, UpSet::naturals()};
        }
    }
    // the whole monoid absorbs everything
    for (const auto& g : gens_) {
        if (g.kind == GenKind::Principal && g.support == UpSet::naturals()) {
            gens_ = {g};
            return;
        }
    }
    std::sort(gens_.begin(), gens_.end(),
              [](const Gen& a, const Gen& b) { return compare(a, b) < 0; });
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    std::vector<Gen> kept;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens_.size() && !redundant; ++j)
            if (i != j && gen_absorbed(gens_[i], gens_[j]) && !gen_absorbed(gens_[j], gens_[i]))
                redundant = true;
        // mutually absorbing pairs are structurally equal after the Almost
        // normalization, so dedup above already removed them
        if (!redundant) kept.push_back(gens_[i]);
    }
    gens_ = std::move(kept);
}

IdealExpr IdealExpr::coinfinite() {
    IdealExpr r;
    r.coinf_ = true;
    return r;
}

IdealExpr IdealExpr::principal(UpSet support) {
    IdealExpr r;
    r.gens_.push_back({GenKind::Principal, std::move(support)});
    r.canonicalize();
    return r;
}

IdealExpr IdealExpr::almost(UpSet support) {
    IdealExpr r;
    r.gens_.push_back({GenKind::Almost, std::move(support)});
    r.canonicalize();
    return r;
}

IdealExpr IdealExpr::content(const UpSet& a) {
    return is_infinite(a) ? principal(a) : empty();
}

IdealExpr IdealExpr::union_of(const IdealExpr& a, const IdealExpr& b) {
    if (a.coinf_ || b.coinf_) {
        const IdealExpr& other = a.coinf_ ? b : a;
        if (other.is_top()) return top();
        if (other.coinf_ || other.is_empty()) return coinfinite();
        bool absorbed = true;
        for (const auto& g : other.gens_)
            if (!gen_in_coinfinite(g)) absorbed = false;
        if (absorbed) return coinfinite();
        throw LimitError("union of the coinfinite ideal with these generators "
                         "is not finitely representable");
    }
    IdealExpr r;
    r.gens_ = a.gens_;
    r.gens_.insert(r.gens_.end(), b.gens_.begin(), b.gens_.end());
    r.canonicalize();
    return r;
}

bool IdealExpr::is_top() const {
    return gens_.size() == 1 && gens_[0].kind == GenKind::Principal &&
           gens_[0].support == UpSet::naturals();
}

UpSet IdealExpr::support_union() const {
    UpSet s = UpSet::empty();
    for (const auto& g : gens_) s = set_union(s, g.support);
    return s;
}

bool member(const EnumMap& u, const IdealExpr& ideal) {
    if (ideal.is_coinfinite()) return u.coinfinite_image();
    for (const auto& g : ideal.generators()) {
        if (g.kind == GenKind::Principal ? subset(u.image(), g.support)
                                         : almost_subset(u.image(), g.support))
            return true;
    }
    return false;
}

namespace {

// u in L but outside the generator union rhs (rhs != top). One dodging point
// per principal target, an infinite stride of each almost target's complement,
// and the evens as a co-infinity-preserving base.
EnumMap coinfinite_escape(const IdealExpr& rhs) {
    if (rhs.generators().empty()) return EnumMap::evens();
    std::uint64_t almost_count = 0;
    for (const auto& g : rhs.generators())
        if (g.kind == GenKind::Almost) ++almost_count;
    std::uint64_t stride = 4 * std::max<std::uint64_t>(1, almost_count);
    UpSet e = UpSet::residue(2, 0);
    std::vector<std::uint64_t> points;
    for (const auto& g : rhs.generators()) {
        if (g.kind == GenKind::Principal) {
            points.push_back(select(complement(g.support), 0));
        } else {
            UpSet outside = complement(g.support);
            e = set_union(e, image_under(outside, UpSet::residue(stride, 0)));
        }
    }
    e = set_union(e, UpSet::finite(std::move(points)));
    EnumMap w{e};
    if (!w.coinfinite_image() || member(w, rhs))
        throw Error("internal: coinfinite escape witness failed its check");
    return w;
}

// u in Almost(c) outside the generator union rhs (rhs != top): the support
// plus one point outside each principal target.
EnumMap almost_escape(const UpSet& c, const IdealExpr& rhs) {
    UpSet e = c;
    std::vector<std::uint64_t> points;
    for (const auto& g : rhs.generators())
        if (g.kind == GenKind::Principal)
            points.push_back(select(complement(g.support), 0));
    e = set_union(e, UpSet::finite(std::move(points)));
    return EnumMap{e};
}

std::optional<EnumMap> gen_escape(const Gen& g, const IdealExpr& rhs) {
    if (rhs.is_top()) return std::nullopt;
    if (rhs.is_coinfinite()) {
        if (is_split(g.support)) return std::nullopt;  // contained
        return EnumMap{g.support};
    }
    if (g.kind == GenKind::Principal) {
        for (const auto& h : rhs.generators())
            if (gen_absorbed(g, h)) return std::nullopt;
        // Principal(C) is the downset of its enumeration, so the enumeration
        // itself separates
        return EnumMap{g.support};
    }
    for (const auto& h : rhs.generators())
        if (h.kind == GenKind::Almost && almost_subset(g.support, h.support))
            return std::nullopt;
    return almost_escape(g.support, rhs);
}

}  // namespace

Containment subseteq(const IdealExpr& lhs, const IdealExpr& rhs) {
    auto fail = [&](EnumMap w) -> Containment {
        if (!member(w, lhs) || member(w, rhs))
            throw Error("internal: separating witness failed its check");
        return {false, std::move(w)};
    };
    if (lhs.is_empty() || rhs.is_top()) return {true, std::nullopt};
    if (lhs.is_coinfinite()) {
        if (rhs.is_coinfinite()) return {true, std::nullopt};
        if (rhs.is_empty()) return fail(EnumMap::evens());
        return fail(coinfinite_escape(rhs));
    }
    if (rhs.is_empty())
        return fail(EnumMap{lhs.generators().front().support});
    for (const auto& g : lhs.generators())
        if (auto w = gen_escape(g, rhs)) return fail(std::move(*w));
    return {true, std::nullopt};
}

IdealExpr action(const EnumMap& u, const IdealExpr& ideal) {
    if (ideal.is_coinfinite())
        return u.cofinite_image() ? IdealExpr::coinfinite() : IdealExpr::top();
    IdealExpr acc = IdealExpr::empty();
    for (const auto& g : ideal.generators()) {
        UpSet trace = preimage_under(u.image(), g.support);
        if (!is_infinite(trace)) continue;
        acc = IdealExpr::union_of(acc, g.kind == GenKind::Principal
                                           ? IdealExpr::principal(std::move(trace))
                                           : IdealExpr::almost(std::move(trace)));
    }
    return acc;
}

IdealExpr negate(const IdealExpr& ideal) {
    if (ideal.is_coinfinite()) return IdealExpr::empty();
    if (ideal.is_empty()) return IdealExpr::top();
    UpSet rest = complement(ideal.support_union());
    return is_infinite(rest) ? IdealExpr::almost(std::move(rest)) : IdealExpr::empty();
}

IdealExpr double_negate(const IdealExpr& ideal) { return negate(negate(ideal)); }

TopologyTag is_dense(const IdealExpr& ideal) {
    if (ideal.is_coinfinite() || ideal.is_top()) return {true, std::nullopt};
    if (ideal.is_empty()) return {false, EnumMap::identity()};
    UpSet rest = complement(ideal.support_union());
    if (is_finite(rest)) return {true, std::nullopt};
    EnumMap w{rest};
    if (!action(w, ideal).is_empty())
        throw Error("internal: density witness failed its check");
    return {false, std::move(w)};
}

EnumMap dense_response(const IdealExpr& ideal, const EnumMap& query) {
    if (!is_dense(ideal).dense)
        throw DomainError("density response requires a dense ideal");
    auto check = [&](EnumMap v) {
        if (!member(compose(query, v), ideal))
            throw Error("internal: density response failed its check");
        return v;
    };
    if (ideal.is_coinfinite()) return check(densify(query));
    for (const auto& g : ideal.generators()) {
        UpSet trace = preimage_under(query.image(), g.support);
        if (is_infinite(trace)) return check(EnumMap{std::move(trace)});
    }
    throw Error("internal: dense ideal offered no infinite trace");
}

UpSet extent(const IdealExpr& ideal) {
    if (ideal.is_empty()) throw DomainError("the empty ideal has no extent");
    if (ideal.is_coinfinite()) return UpSet::naturals();
    for (const auto& g : ideal.generators())
        if (g.kind == GenKind::Almost) return UpSet::naturals();
    return ideal.support_union();
}

bool is_extended(const IdealExpr& ideal) { return is_cofinite(extent(ideal)); }

bool cofinite_via_density(const UpSet& a) {
    return is_dense(IdealExpr::content(a)).dense;
}

bool implication_member(const EnumMap& u, const IdealExpr& lhs, const IdealExpr& rhs) {
    return subseteq(action(u, lhs), action(u, rhs)).holds;
}

namespace {

bool gens_meet(const Gen& a, const Gen& b) {
    return is_infinite(set_intersect(a.support, b.support));
}

}  // namespace

bool meets(const IdealExpr& a, const IdealExpr& b) {
    if (a.is_empty() || b.is_empty()) return false;
    if (a.is_coinfinite() || b.is_coinfinite() || a.is_top() || b.is_top()) return true;
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators())
            if (gens_meet(ga, gb)) return true;
    return false;
}

std::optional<EnumMap> meets_witness(const IdealExpr& a, const IdealExpr& b) {
    if (!meets(a, b)) return std::nullopt;
    auto check = [&](EnumMap w) {
        if (!member(w, a) || !member(w, b))
            throw Error("internal: meet witness failed its check");
        return w;
    };
    auto coinf_member_of = [&](const IdealExpr& i) -> EnumMap {
        // a co-infinite member: evens for the constants, a thinned generator
        // support otherwise
        if (i.is_coinfinite() || i.is_top()) return EnumMap::evens();
        return EnumMap{split_alternate(i.generators().front().support).first};
    };
    if (a.is_coinfinite() || b.is_coinfinite())
        return check(coinf_member_of(a.is_coinfinite() ? b : a));
    if (a.is_top()) return check(EnumMap{b.generators().front().support});
    if (b.is_top()) return check(EnumMap{a.generators().front().support});
    for (const auto& ga : a.generators())
        for (const auto& gb : b.generators())
            if (gens_meet(ga, gb))
                return check(EnumMap{set_intersect(ga.support, gb.support)});
    return std::nullopt;
}

bool translate_member(const EnumMap& u_cofinite, const EnumMap& w) {
    if (!u_cofinite.cofinite_image())
        throw DomainError("translate membership is decidable for cofinite-image maps");
    if (!leq(w, u_cofinite)) return false;
    return is_split(preimage_under(u_cofinite.image(), w.image()));
}

EnumMap translate_response(const EnumMap& u_cofinite, const EnumMap& query) {
    UpSet trace = preimage_under(query.image(), u_cofinite.image());
    EnumMap v = compose(EnumMap{std::move(trace)}, EnumMap::evens());
    if (!translate_member(u_cofinite, compose(query, v)))
        throw Error("internal: translate response failed its check");
    return v;
}

Report density_analysis(const IdealExpr& ideal, std::uint64_t seed, int samples) {
    Report r{"fdn", {}};
    TopologyTag tag = is_dense(ideal);
    if (ideal.is_empty()) {
        r.add("fdn.extent", true, "empty ideal: no extent, not dense");
        r.add("fdn.agreement", !tag.dense);
        return r;
    }
    bool extended = is_extended(ideal);
    r.add("fdn.dense-implies-extended", !tag.dense || extended);
    UpSet ext = extent(ideal);
    bool below_all_ok = true;
    std::string ce;
    if (extended) {
        Sampler s(seed);
        std::vector<UpSet> probes;
        for (int i = 0; i < samples; ++i) probes.push_back(image_under(ext, s.split_set()));
        if (!ideal.is_coinfinite() && !ideal.is_top()) {
            UpSet rest = complement(ideal.support_union());
            UpSet targeted = set_intersect(rest, ext);
            // guaranteed counterexample for extended-but-not-dense ideals
            if (is_infinite(targeted)) probes.push_back(std::move(targeted));
        }
        for (const auto& b : probes) {
            if (!is_split(b)) continue;  // probe must sit in the coinfinite ideal
            EnumMap v{b};
            bool found = false;
            if (ideal.is_coinfinite() || ideal.is_top()) {
                found = true;  // v itself (or its thinning) is already a member
            } else {
                for (const auto& g : ideal.generators()) {
                    UpSet w = set_intersect(b, g.support);
                    if (!is_infinite(w)) continue;
                    EnumMap wm{w};
                    if (member(wm, ideal) && leq(wm, v)) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) {
                below_all_ok = false;
                ce = "no member below a sampled co-infinite map under the extent";
                break;
            }
        }
    }
    bool predicted = extended && below_all_ok;
    std::string summary = std::string("extended=") + (extended ? "yes" : "no") +
                          " below-samples=" + (below_all_ok ? "ok" : "counterexample") +
                          (ce.empty() ? "" : " (" + ce + ")");
    r.add("fdn.agreement", predicted == tag.dense,
          predicted == tag.dense ? "" : "criteria disagree with the density decision; " + summary);
    return r;
}

Report local_condition_probe(const IdealExpr& ideal, const IdealExpr& probe_in,
                             std::uint64_t seed, int samples) {
    TopologyTag probe_tag = is_dense(probe_in);
    if (!probe_tag.dense)
        throw DomainError("local condition probe needs a dense probe ideal");
    Report r{"lc", {}};
    TopologyTag tag = is_dense(ideal);
    Sampler s(seed);
    std::vector<EnumMap> fs;
    for (int i = 0; i < samples; ++i) fs.push_back(s.member_of(probe_in));
    bool targeted_found_nondense = false;
    if (!tag.dense && tag.witness) {
        // push the density witness into the probe ideal: its action is empty,
        // so this sample must come out non-dense
        EnumMap f = compose(*tag.witness, dense_response(probe_in, *tag.witness));
        fs.push_back(std::move(f));
    }
    bool all_dense = true;
    for (const auto& f : fs) {
        if (!member(f, probe_in)) throw Error("internal: probe sample outside the probe ideal");
        bool d = is_dense(action(f, ideal)).dense;
        all_dense = all_dense && d;
        if (!d) targeted_found_nondense = true;
    }
    if (tag.dense) {
        r.add("lc.stable", all_dense,
              all_dense ? "" : "action of a dense ideal lost density");
        r.add("lc.consistent", all_dense);
    } else {
        r.add("lc.witnessed", targeted_found_nondense,
              targeted_found_nondense ? "" : "no sample exposed the non-dense ideal");
        r.add("lc.consistent", targeted_found_nondense);
    }
    return r;
}

}  // namespace cofin
