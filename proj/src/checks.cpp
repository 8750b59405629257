#include "cofin/checks.hpp"

#include <numeric>
#include <sstream>

#include "cofin/emonoid.hpp"
#include "cofin/filt.hpp"
#include "cofin/finoracle.hpp"
#include "cofin/ideal.hpp"
#include "cofin/io.hpp"
#include "cofin/sampling.hpp"

namespace cofin::checks {

std::uint64_t stabilization_window(std::initializer_list<UpSet> sets) {
    std::uint64_t l = 1, t = 0;
    for (const auto& s : sets) {
        l = std::lcm(l, s.period());
        t = std::max(t, s.threshold());
    }
    return 4 * l + t;
}

namespace {

// Runs body over count seeded iterations and records one report item; the body
// returns an empty string on success and a counterexample description else.
template <typename Body>
void sweep(Report& r, const std::string& id, int count, Body body) {
    for (int i = 0; i < count; ++i) {
        std::string ce = body(i);
        if (!ce.empty()) {
            r.add(id, false, ce + " (instance " + std::to_string(i) + ")");
            return;
        }
    }
    r.add(id, true);
}

}  // namespace

Report fin_adjunction(unsigned n) { return fin::adjunction_suite(fin::FinUniverse{n}); }

Report finite_universe_suite() {
    Report r{"finite-universe", {}};
    for (unsigned n = 1; n <= 4; ++n) {
        fin::FinUniverse u{n};
        auto filters = fin::all_filters(u);
        r.add("filters.count.n" + std::to_string(n), filters.size() == (1u << n),
              "found " + std::to_string(filters.size()));
        bool heyting_ok = true;
        std::string ce;
        for (const auto& f : filters) {
            for (const auto& g : filters) {
                if (fin::heyting_formula(f, g) != fin::heyting_bruteforce(f, g)) {
                    heyting_ok = false;
                    ce = "F=" + fin::family_to_string(f) + " G=" + fin::family_to_string(g);
                    break;
                }
            }
            if (!heyting_ok) break;
        }
        r.add("heyting.formula-vs-bruteforce.n" + std::to_string(n), heyting_ok, ce);
        Report sub = fin_adjunction(n);
        for (auto& item : sub.items)
            r.add(item.id + ".n" + std::to_string(n), item.pass, item.detail);
    }
    {
        fin::FinUniverse u{3};
        fin::FinFamily nonempty = fin::meet_family(u, u.full_mask());
        bool ok = fin::interior(nonempty) == fin::principal_filter(u, u.full_mask());
        r.add("interior.meet-family-of-X", ok);
    }
    return r;
}

Report cofinite_characterization(std::uint64_t seed, int corpus) {
    Report r{"acont", {}};
    Sampler s(seed);
    std::vector<UpSet> sets;
    int third = std::max(corpus / 3, 50);
    for (int i = 0; i < third; ++i) sets.push_back(s.upset_of(SetTag::Finite));
    for (int i = 0; i < third; ++i) sets.push_back(s.upset_of(SetTag::Cofinite));
    while (static_cast<int>(sets.size()) < std::max(corpus, 3 * third))
        sets.push_back(s.upset_of(SetTag::Split));

    bool agree = true, certified = true;
    std::string ce_a, ce_c;
    for (const auto& a : sets) {
        bool expected = classify(a).tag == SetTag::Cofinite;
        IdealExpr cont = IdealExpr::content(a);
        TopologyTag tag = is_dense(cont);
        if (tag.dense != expected || cofinite_via_density(a) != expected) {
            agree = false;
            ce_a = "A=" + show(a);
            break;
        }
        if (tag.dense) {
            for (int q = 0; q < 100; ++q) {
                EnumMap query = s.emap();
                EnumMap v = dense_response(cont, query);
                if (!member(compose(query, v), cont)) {
                    certified = false;
                    ce_c = "A=" + show(a) + " query=" + show(query);
                    break;
                }
            }
        } else {
            if (!tag.witness || !action(*tag.witness, cont).is_empty()) {
                certified = false;
                ce_c = "A=" + show(a);
            }
        }
        if (!certified) break;
    }
    r.add("acont.density-vs-classify", agree, ce_a);
    r.add("acont.certificates", certified, ce_c);
    return r;
}

Report coinfinite_ideal_suite(std::uint64_t seed) {
    Report r{"ldn", {}};
    Sampler s(seed);
    sweep(r, "ldn.split-factorization", 200, [&](int) -> std::string {
        EnumMap u = s.coinfinite_map();
        auto [v, w] = split_coinfinite(u);
        if (!v.coinfinite_image() || !w.coinfinite_image())
            return "factor escaped the coinfinite ideal for u=" + show(u);
        if (compose(v, w) != u) return "v*w != u for u=" + show(u);
        std::uint64_t window = stabilization_window({u.image()});
        for (std::uint64_t n = 0; n < window; ++n)
            if (v(w(n)) != u(n)) return "pointwise mismatch at n=" + std::to_string(n);
        return "";
    });
    sweep(r, "ldn.action-membership", 50, [&](int) -> std::string {
        EnumMap u = s.cofinite_map();
        IdealExpr acted = action(u, IdealExpr::coinfinite());
        if (!acted.is_coinfinite()) return "action of " + show(u) + " is not the ideal itself";
        for (int i = 0; i < 100; ++i) {
            EnumMap v = s.emap();
            bool lhs = member(v, acted);
            bool rhs = member(compose(u, v), IdealExpr::coinfinite());
            if (lhs != rhs) return "membership mismatch at v=" + show(v);
        }
        return "";
    });
    {
        TopologyTag tag = is_dense(IdealExpr::coinfinite());
        r.add("ldn.dense", tag.dense);
    }
    sweep(r, "ldn.responses", 200, [&](int) -> std::string {
        EnumMap q = s.emap();
        EnumMap v = dense_response(IdealExpr::coinfinite(), q);
        if (!member(compose(q, v), IdealExpr::coinfinite()))
            return "response failed for query " + show(q);
        return "";
    });
    return r;
}

Report successor_ideal_suite(std::uint64_t seed) {
    Report r{"sigma", {}};
    Sampler s(seed);
    IdealExpr succ = IdealExpr::principal(UpSet::from_threshold(1));
    sweep(r, "sigma.membership", 100, [&](int) -> std::string {
        EnumMap u = s.emap();
        if (member(u, succ) != (u(0) != 0)) return "u=" + show(u);
        return "";
    });
    r.add("sigma.double-negation-top", double_negate(succ).is_top());
    r.add("sigma.coinfinite-below-double-negation",
          subseteq(IdealExpr::coinfinite(), double_negate(succ)).holds);
    {
        Containment c = subseteq(IdealExpr::coinfinite(), succ);
        bool ok = !c.holds && c.witness && *c.witness == EnumMap::evens() &&
                  member(*c.witness, IdealExpr::coinfinite()) && !member(*c.witness, succ);
        r.add("sigma.not-above-coinfinite", ok,
              ok ? "" : (c.holds ? "containment held" : "witness " + show(*c.witness)));
    }
    return r;
}

Report extent_suite(std::uint64_t seed) {
    Report r{"extcof", {}};
    Sampler s(seed);
    sweep(r, "extcof.dense-implies-extended", 200, [&](int i) -> std::string {
        IdealExpr ideal = (i % 4 == 0) ? s.dense_ideal() : s.ideal();
        if (is_dense(ideal).dense && !is_extended(ideal)) return "I=" + show(ideal);
        return "";
    });
    {
        IdealExpr in_class = IdealExpr::almost(UpSet::residue(2, 0));
        TopologyTag tag = is_dense(in_class);
        bool ok = is_extended(in_class) && !tag.dense && tag.witness &&
                  action(*tag.witness, in_class).is_empty();
        r.add("extcof.converse-fails-in-class", ok,
              "extended Almost(evens) must not be dense");
    }
    return r;
}

Report density_equivalence_suite(std::uint64_t seed) {
    Report r{"fdn", {}};
    Sampler s(seed);
    sweep(r, "fdn.agreement", 100, [&](int i) -> std::string {
        IdealExpr ideal = (i % 3 == 0) ? s.dense_ideal() : s.ideal();
        Report sub = density_analysis(ideal, seed + static_cast<std::uint64_t>(i), 50);
        if (!sub.all_pass()) return "I=" + show(ideal);
        return "";
    });
    return r;
}

namespace {

std::string show_mask(fin::FinUniverse u, std::uint32_t m) { return fin::mask_to_string(u, m); }

// Cofinite set whose restriction to [0, n) is the mask and which contains
// everything from n on.
UpSet lift_full(unsigned n, std::uint32_t mask) {
    std::vector<std::uint64_t> elems;
    for (unsigned i = 0; i < n; ++i)
        if (mask & (1u << i)) elems.push_back(i);
    return set_union(UpSet::finite(std::move(elems)), UpSet::from_threshold(n));
}

}  // namespace

Report derived_rule_suite(std::uint64_t seed) {
    Report r{"rules", {}};
    Sampler s(seed);

    sweep(r, "rules.filter-meet", 500, [&](int) -> std::string {
        FilterRep f = s.filter(), g = s.filter();
        FilterRep m = meet(f, g);
        UpSet w;
        switch (s.below(4)) {
            case 0: w = s.member_of(f); break;
            case 1: w = s.member_of(g); break;
            case 2: w = s.member_of(m); break;
            default: w = set_union(s.upset(), s.upset()); break;
        }
        if (member(w, m) != (member(w, f) && member(w, g)))
            return "F=" + show(f) + " G=" + show(g) + " W=" + show(w);
        return "";
    });

    sweep(r, "rules.filter-join", 500, [&](int) -> std::string {
        FilterRep f = s.filter(), g = s.filter();
        FilterRep j = join(f, g);
        UpSet w;
        switch (s.below(4)) {
            case 0: w = set_intersect(s.member_of(f), s.member_of(g)); break;
            case 1: w = s.member_of(j); break;
            case 2: w = s.upset(); break;
            default: w = set_union(s.member_of(j), s.upset()); break;
        }
        bool rule = member(w, j);
        bool oracle = join_base_pair(f, g, w).has_value();
        if (rule != oracle)
            return "F=" + show(f) + " G=" + show(g) + " W=" + show(w);
        return "";
    });

    sweep(r, "rules.filter-contains", 500, [&](int) -> std::string {
        FilterRep f = s.filter(), g = s.filter();
        bool rule = subseteq(f, g);
        auto ce = subseteq_counterexample(f, g);
        if (rule != !ce.has_value()) return "decision/witness disagree: F=" + show(f);
        if (ce && (!member(*ce, f) || member(*ce, g)))
            return "bad counterexample: F=" + show(f) + " G=" + show(g);
        if (rule) {
            for (int i = 0; i < 5; ++i) {
                UpSet w = s.member_of(f);
                if (!member(w, g)) return "sampled member escaped: W=" + show(w);
            }
        }
        return "";
    });

    sweep(r, "rules.filter-implication", 500, [&](int) -> std::string {
        FilterRep f = s.filter(), g = s.filter();
        UpSet b = s.upset();
        bool rule = implication_member(b, f, g);
        auto ce = implication_counterexample(b, f, g);
        if (rule != !ce.has_value()) return "decision/witness disagree";
        if (ce && (!member(*ce, f) || member(set_union(b, *ce), g)))
            return "bad counterexample: B=" + show(b) + " F=" + show(f) + " G=" + show(g);
        if (rule) {
            for (int i = 0; i < 5; ++i) {
                UpSet w = s.member_of(f);
                if (!member(set_union(b, w), g))
                    return "positive answer broke on member " + show(w);
            }
        }
        return "";
    });

    sweep(r, "rules.ideal-contains", 500, [&](int i) -> std::string {
        IdealExpr lhs = (i % 7 == 0) ? IdealExpr::coinfinite() : s.ideal();
        IdealExpr rhs = (i % 5 == 0) ? IdealExpr::coinfinite() : s.ideal();
        Containment c = subseteq(lhs, rhs);
        if (c.holds) {
            if (lhs.is_empty()) return "";
            for (int k = 0; k < 5; ++k) {
                EnumMap u = s.member_of(lhs);
                if (!member(u, rhs)) return "sampled member escaped: u=" + show(u);
            }
        } else {
            if (!c.witness || !member(*c.witness, lhs) || member(*c.witness, rhs))
                return "bad witness for " + show(lhs) + " <= " + show(rhs);
        }
        return "";
    });

    sweep(r, "rules.ideal-negate", 500, [&](int i) -> std::string {
        IdealExpr ideal = (i % 9 == 0) ? IdealExpr::coinfinite() : s.ideal();
        EnumMap u = s.emap();
        IdealExpr acted = action(u, ideal);
        bool in_neg = member(u, negate(ideal));
        if (in_neg != acted.is_empty())
            return "negation vs action emptiness: u=" + show(u) + " I=" + show(ideal);
        if (!acted.is_empty()) {
            auto v = meets_witness(acted, IdealExpr::top());
            if (!v || !member(compose(u, *v), ideal))
                return "no constructive member of the action: u=" + show(u);
        }
        return "";
    });

    sweep(r, "rules.ideal-meets", 500, [&](int i) -> std::string {
        IdealExpr a = (i % 11 == 0) ? IdealExpr::coinfinite() : s.ideal();
        IdealExpr b = (i % 6 == 0) ? IdealExpr::coinfinite() : s.ideal();
        if (meets(a, b)) {
            auto w = meets_witness(a, b);
            if (!w || !member(*w, a) || !member(*w, b)) return "bad meet witness";
        } else {
            if (!subseteq(b, negate(a)).holds)
                return "disjoint ideals not below the negation: " + show(a) + " vs " + show(b);
            for (int k = 0; k < 5 && !b.is_empty(); ++k) {
                EnumMap u = s.member_of(b);
                if (member(u, a)) return "claimed-disjoint ideals share " + show(u);
            }
        }
        return "";
    });

    for (unsigned n = 2; n <= 4; ++n) {
        fin::FinUniverse u{n};
        sweep(r, "rules.fin-bridge.n" + std::to_string(n), 40, [&](int) -> std::string {
            std::uint32_t m1 = static_cast<std::uint32_t>(s.below(u.subset_count()));
            std::uint32_t m2 = static_cast<std::uint32_t>(s.below(u.subset_count()));
            FilterRep f1 = FilterRep::superset_filter(lift_full(u.n, m1));
            FilterRep f2 = FilterRep::superset_filter(lift_full(u.n, m2));
            fin::FinFamily p1 = fin::principal_filter(u, m1), p2 = fin::principal_filter(u, m2);
            std::vector<std::uint32_t> meet_members;
            for (auto m : p1.members())
                if (p2.has(m)) meet_members.push_back(m);
            fin::FinFamily fin_meet(u, meet_members);
            fin::FinFamily fin_impl = fin::heyting_formula(p1, p2);
            fin::FinFamily fin_neg = fin::fin_negate(p1);
            FilterRep inf_meet = meet(f1, f2);
            FilterRep inf_neg = neg(f1);
            for (std::uint32_t wm = 0; wm < u.subset_count(); ++wm) {
                UpSet w = lift_full(u.n, wm);
                if (fin_meet.has(wm) != member(w, inf_meet))
                    return "meet mismatch at W=" + show_mask(u, wm);
                if (fin_neg.has(wm) != member(w, inf_neg))
                    return "negation mismatch at W=" + show_mask(u, wm);
                if (fin_impl.has(wm) != implication_member(w, f1, f2))
                    return "implication mismatch at W=" + show_mask(u, wm);
                // join of principals drops to the mask intersection
                if (fin::principal_filter(u, m1 & m2).has(wm) != member(w, join(f1, f2)))
                    return "join mismatch at W=" + show_mask(u, wm);
            }
            return "";
        });
    }
    return r;
}

Report monoid_suite(std::uint64_t seed) {
    Report r{"monoid", {}};
    Sampler s(seed);

    sweep(r, "monoid.associativity-unit", 200, [&](int) -> std::string {
        EnumMap u = s.emap(), v = s.emap(), w = s.emap();
        if (compose(compose(u, v), w) != compose(u, compose(v, w)))
            return "associativity: " + show(u) + ", " + show(v) + ", " + show(w);
        if (compose(u, EnumMap::identity()) != u || compose(EnumMap::identity(), u) != u)
            return "unit law: " + show(u);
        return "";
    });

    sweep(r, "monoid.sigma-factorization", 50, [&](int) -> std::string {
        UpSet k = s.finite_set(5, 12);
        EnumMap whole = sigma(k);
        auto factors = factor_sigma(k);
        EnumMap acc = EnumMap::identity();
        for (const auto& f : factors) acc = compose(acc, f);
        if (acc != whole) return "composite mismatch for K=" + show(k);
        for (std::uint64_t n = 0; n < 32; ++n) {
            std::uint64_t via = n;
            for (auto it = factors.rbegin(); it != factors.rend(); ++it) via = (*it)(via);
            if (via != whole(n)) return "pointwise mismatch at n=" + std::to_string(n);
        }
        return "";
    });

    sweep(r, "monoid.retraction-idempotent", 100, [&](int) -> std::string {
        UpSet a = s.infinite_set();
        FiniteMap p = retraction(a), e = idempotent(a);
        EnumMap ua{a};
        for (std::uint64_t k = 0; k < 50; ++k)
            if (p(ua(k)) != k) return "retraction broke at k=" + std::to_string(k);
        std::uint64_t window = stabilization_window({a});
        for (std::uint64_t n = 0; n < window; ++n) {
            if (e(e(n)) != e(n)) return "idempotence broke at n=" + std::to_string(n);
            for (std::uint64_t k = 0; k < 8; ++k)
                if ((n <= ua(k)) != (p(n) <= k)) return "adjunction broke at n=" + std::to_string(n);
        }
        return "";
    });

    sweep(r, "monoid.record-positions", 100, [&](int) -> std::string {
        FiniteMap f = s.finite_map();
        UpSet b = record_positions(f);
        for (std::uint64_t n = 0; n < 64; ++n) {
            bool record = true;
            for (std::uint64_t k = 0; k < n && record; ++k)
                if (f(k) >= f(n)) record = false;
            if (b.contains(n) != record) return "scan oracle mismatch at n=" + std::to_string(n);
        }
        EnumMap along{f.image_of(b)};
        std::uint64_t prev = 0;
        for (std::uint64_t n = 0; n < 64; ++n) {
            std::uint64_t val = f(select(b, n));
            if (val != along(n)) return "image mismatch at n=" + std::to_string(n);
            if (n && val <= prev) return "composite not strictly increasing";
            prev = val;
        }
        return "";
    });

    sweep(r, "monoid.atomic-completion", 100, [&](int) -> std::string {
        EnumMap u = s.cofinite_map(), v = s.cofinite_map();
        auto [h, k] = atomic_complete(u, v);
        EnumMap expect{set_intersect(u.image(), v.image())};
        if (compose(u, h) != expect || compose(v, k) != expect)
            return "completion mismatch for " + show(u) + ", " + show(v);
        return "";
    });

    return r;
}

std::vector<Report> run_all(std::uint64_t seed) {
    return {finite_universe_suite(),
            cofinite_characterization(seed, 200),
            coinfinite_ideal_suite(seed),
            successor_ideal_suite(seed),
            extent_suite(seed),
            density_equivalence_suite(seed),
            derived_rule_suite(seed),
            monoid_suite(seed)};
}

Report run_suite(const std::string& name, std::uint64_t arg, std::uint64_t seed) {
    if (name == "clu1") return fin_adjunction(static_cast<unsigned>(arg == 0 ? 3 : arg));
    if (name == "acont") return cofinite_characterization(seed, arg == 0 ? 200 : static_cast<int>(arg));
    if (name == "ldn") return coinfinite_ideal_suite(seed);
    if (name == "sigma") return successor_ideal_suite(seed);
    if (name == "extcof") return extent_suite(seed);
    if (name == "fdn") return density_equivalence_suite(seed);
    if (name == "rules") return derived_rule_suite(seed);
    if (name == "monoid") return monoid_suite(seed);
    throw DomainError("unknown check suite: " + name);
}

}  // namespace cofin::checks
