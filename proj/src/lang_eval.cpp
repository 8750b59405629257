#include <sstream>

#include "cofin/checks.hpp"
#include "cofin/io.hpp"
#include "cofin/lang.hpp"

namespace cofin::lang {

namespace {

const char* value_kind(const Value& v) {
    struct V {
        const char* operator()(bool) const { return "bool"; }
        const char* operator()(std::uint64_t) const { return "number"; }
        const char* operator()(const UpSet&) const { return "set"; }
        const char* operator()(const SetClass&) const { return "class"; }
        const char* operator()(const EnumMap&) const { return "map"; }
        const char* operator()(const IdealExpr&) const { return "ideal"; }
        const char* operator()(const FilterRep&) const { return "filter"; }
        const char* operator()(const BornRep&) const { return "bornology"; }
        const char* operator()(const Report&) const { return "report"; }
    };
    return std::visit(V{}, v);
}

[[noreturn]] void type_mismatch(Span s, const std::string& what, const Value& got) {
    throw TypeError(s, what + " (got " + value_kind(got) + ")");
}

const UpSet& as_set(Span s, const Value& v) {
    if (auto* a = std::get_if<UpSet>(&v)) return *a;
    type_mismatch(s, "expected a set", v);
}
const EnumMap& as_map(Span s, const Value& v) {
    if (auto* m = std::get_if<EnumMap>(&v)) return *m;
    type_mismatch(s, "expected an enumerating map", v);
}
const IdealExpr& as_ideal(Span s, const Value& v) {
    if (auto* i = std::get_if<IdealExpr>(&v)) return *i;
    type_mismatch(s, "expected an ideal", v);
}
const FilterRep& as_filter(Span s, const Value& v) {
    if (auto* f = std::get_if<FilterRep>(&v)) return *f;
    type_mismatch(s, "expected a filter", v);
}

EnumMap coerce_map(Span s, const Value& v) {
    if (auto* m = std::get_if<EnumMap>(&v)) return *m;
    if (auto* a = std::get_if<UpSet>(&v)) {
        if (!is_infinite(*a)) throw TypeError(s, "an enumerating map needs an infinite image");
        return EnumMap(*a);
    }
    type_mismatch(s, "expected an enumerating map or an infinite set", v);
}

EvalResult plain(Value v, std::string provenance) {
    return {std::move(v), std::move(provenance), std::nullopt, std::nullopt};
}

}  // namespace

std::string show(const Value& v) {
    struct V {
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::uint64_t n) const { return std::to_string(n); }
        std::string operator()(const UpSet& a) const { return cofin::show(a); }
        std::string operator()(const SetClass& c) const { return cofin::show(c); }
        std::string operator()(const EnumMap& m) const { return cofin::show(m); }
        std::string operator()(const IdealExpr& i) const { return cofin::show(i); }
        std::string operator()(const FilterRep& f) const { return cofin::show(f); }
        std::string operator()(const BornRep& b) const { return cofin::show(b); }
        std::string operator()(const Report& r) const {
            return std::string(r.all_pass() ? "pass" : "fail") + " (" + r.suite + ")";
        }
    };
    return std::visit(V{}, v);
}

EvalResult Session::eval(const Expr& e) {
    struct V {
        Session& session;
        Span span;

        EvalResult operator()(const SetLit& l) const {
            UpSet s = UpSet::finite(l.elems);
            if (l.cofinite) s = complement(s);
            return plain(std::move(s), "upset.literal");
        }
        EvalResult operator()(const ResidueLit& l) const {
            return plain(UpSet::residue(l.modulus, l.rep), "upset.literal");
        }
        EvalResult operator()(const PerLit& l) const {
            return plain(UpSet::from_raw(l.prefix, l.wheel), "upset.normalize");
        }
        EvalResult operator()(const EmptyIdealLit&) const {
            return plain(IdealExpr::empty(), "ideal.literal");
        }
        EvalResult operator()(const NameRef& n) const {
            if (n.id == "N") return plain(UpSet::naturals(), "upset.literal");
            if (n.id == "id") return plain(EnumMap::identity(), "emap.literal");
            if (n.id == "L") return plain(IdealExpr::coinfinite(), "ideal.literal");
            if (n.id == "E") return plain(IdealExpr::top(), "ideal.literal");
            if (n.id == "frechet") return plain(FilterRep::frechet(), "filter.literal");
            if (n.id == "discrete") return plain(FilterRep::discrete(), "filter.literal");
            if (n.id == "indiscrete") return plain(FilterRep::indiscrete(), "filter.literal");
            auto it = session.env_.find(n.id);
            if (it == session.env_.end()) throw TypeError(span, "unknown name '" + n.id + "'");
            return plain(it->second, "binding");
        }
        EvalResult operator()(const BinaryOp& b) const {
            Value lhs = session.eval(*b.lhs).value;
            Value rhs = session.eval(*b.rhs).value;
            switch (b.op) {
                case '&':
                    if (std::holds_alternative<UpSet>(lhs))
                        return plain(set_intersect(as_set(span, lhs), as_set(span, rhs)),
                                     "upset.combine");
                    return plain(meet(as_filter(span, lhs), as_filter(span, rhs)), "filt.meet");
                case '|':
                    if (std::holds_alternative<UpSet>(lhs))
                        return plain(set_union(as_set(span, lhs), as_set(span, rhs)),
                                     "upset.combine");
                    if (std::holds_alternative<IdealExpr>(lhs))
                        return plain(IdealExpr::union_of(as_ideal(span, lhs), as_ideal(span, rhs)),
                                     "ideal.union");
                    return plain(join(as_filter(span, lhs), as_filter(span, rhs)), "filt.join");
                case '\\':
                    return plain(set_difference(as_set(span, lhs), as_set(span, rhs)),
                                 "upset.combine");
                case '*':
                    return plain(compose(coerce_map(span, lhs), coerce_map(span, rhs)),
                                 "emap.compose");
            }
            throw TypeError(span, "unknown operator");
        }
        EvalResult operator()(const UnaryOp& u) const {
            Value v = session.eval(*u.arg).value;
            if (u.op == "~") return plain(complement(as_set(span, v)), "upset.complement");
            if (u.op == "lim") return plain(limit(as_filter(span, v)), "filt.limit");
            if (u.op == "neg") return plain(neg(as_filter(span, v)), "filt.neg");
            if (u.op == "notnot") {
                if (std::holds_alternative<IdealExpr>(v))
                    return plain(double_negate(as_ideal(span, v)), "ideal.double_negate");
                return plain(double_neg(as_filter(span, v)), "filt.double_neg");
            }
            if (u.op == "not") return plain(negate(as_ideal(span, v)), "ideal.negate");
            if (u.op == "born") {
                if (auto* b = std::get_if<BornRep>(&v))
                    return plain(dualize(*b), "filt.dualize");
                return plain(dualize(as_filter(span, v)), "filt.dualize");
            }
            throw TypeError(span, "unknown operator " + u.op);
        }
        EvalResult operator()(const CallOp& c) const {
            auto arg = [&](std::size_t i) -> Value {
                if (i >= c.args.size())
                    throw TypeError(span, c.fn + " is missing argument " + std::to_string(i + 1));
                return session.eval(*c.args[i]).value;
            };
            auto expect_arity = [&](std::size_t n) {
                if (c.args.size() != n)
                    throw TypeError(span, c.fn + " takes " + std::to_string(n) + " argument(s)");
            };
            if (c.fn == "U") {
                expect_arity(1);
                return plain(FilterRep::superset_filter(as_set(span, arg(0))), "filt.superset");
            }
            if (c.fn == "C") {
                expect_arity(1);
                return plain(FilterRep::cofinite_superset_filter(as_set(span, arg(0))),
                             "filt.cofinite_superset");
            }
            if (c.fn == "phi") {
                expect_arity(2);
                return plain(FilterRep::phi(as_set(span, arg(0)), as_set(span, arg(1))),
                             "filt.phi");
            }
            if (c.fn == "P") {
                expect_arity(1);
                return plain(IdealExpr::principal(as_set(span, arg(0))), "ideal.principal");
            }
            if (c.fn == "Alm") {
                expect_arity(1);
                return plain(IdealExpr::almost(as_set(span, arg(0))), "ideal.almost");
            }
            if (c.fn == "Cont") {
                expect_arity(1);
                return plain(IdealExpr::content(as_set(span, arg(0))), "ideal.content");
            }
            if (c.fn == "u") {
                expect_arity(1);
                return plain(coerce_map(span, arg(0)), "emap.literal");
            }
            if (c.fn == "sigma") {
                expect_arity(1);
                return plain(sigma(as_set(span, arg(0))), "emap.sigma");
            }
            if (c.fn == "act") {
                expect_arity(2);
                return plain(action(coerce_map(span, arg(0)), as_ideal(span, arg(1))),
                             "ideal.action");
            }
            throw TypeError(span, "unknown function " + c.fn);
        }
        EvalResult operator()(const QueryOp& q) const {
            auto arg = [&](std::size_t i) { return session.eval(*q.args[i]).value; };
            if (q.q == "dense?") {
                Value v = arg(0);
                if (std::holds_alternative<FilterRep>(v))
                    return plain(is_dense(as_filter(span, v)), "filt.is_dense");
                TopologyTag tag = is_dense(as_ideal(span, v));
                EvalResult r = plain(tag.dense, "ideal.is_dense");
                if (tag.witness) r.witness = cofin::show(*tag.witness);
                return r;
            }
            if (q.q == "ext?") {
                Value v = arg(0);
                const IdealExpr& ideal = as_ideal(span, v);
                EvalResult r = plain(is_extended(ideal), "ideal.is_extended");
                r.witness = cofin::show(extent(ideal));
                return r;
            }
            if (q.q == "cofinite?") {
                Value v = arg(0);
                if (std::holds_alternative<UpSet>(v))
                    return plain(is_cofinite(as_set(span, v)), "upset.classify");
                return plain(cofinite_via_density(as_map(span, v).image()),
                             "ideal.cofinite_via_density");
            }
            if (q.q == "finite?") return plain(is_finite(as_set(span, arg(0))), "upset.classify");
            if (q.q == "classify?")
                return plain(classify(as_set(span, arg(0))), "upset.classify");
            if (q.q == "in?") {
                Value x = arg(0), coll = arg(1);
                if (std::holds_alternative<IdealExpr>(coll))
                    return plain(member(coerce_map(span, x), as_ideal(span, coll)),
                                 "ideal.member");
                if (std::holds_alternative<BornRep>(coll))
                    return plain(member(as_set(span, x), std::get<BornRep>(coll)),
                                 "born.member");
                return plain(member(as_set(span, x), as_filter(span, coll)), "filt.member");
            }
            if (q.q == "<=?") {
                Value a = arg(0), b = arg(1);
                if (std::holds_alternative<IdealExpr>(a)) {
                    Containment c = subseteq(as_ideal(span, a), as_ideal(span, b));
                    EvalResult r = plain(c.holds, "ideal.subseteq");
                    if (c.witness) r.witness = cofin::show(*c.witness);
                    return r;
                }
                if (std::holds_alternative<FilterRep>(a)) {
                    bool holds = subseteq(as_filter(span, a), as_filter(span, b));
                    EvalResult r = plain(holds, "filt.subseteq");
                    if (auto ce = subseteq_counterexample(as_filter(span, a), as_filter(span, b)))
                        r.witness = cofin::show(*ce);
                    return r;
                }
                if (std::holds_alternative<EnumMap>(a))
                    return plain(leq(as_map(span, a), as_map(span, b)), "emap.leq");
                return plain(subset(as_set(span, a), as_set(span, b)), "upset.subset");
            }
            if (q.q == "meets?") {
                Value a = arg(0), b = arg(1);
                bool m = meets(as_ideal(span, a), as_ideal(span, b));
                EvalResult r = plain(m, "ideal.meets");
                if (m)
                    if (auto w = meets_witness(as_ideal(span, a), as_ideal(span, b)))
                        r.witness = cofin::show(*w);
                return r;
            }
            if (q.q == "->?") {
                Value vb = arg(0), vf = arg(1), vg = arg(2);
                const UpSet& b = as_set(span, vb);
                const FilterRep& f = as_filter(span, vf);
                const FilterRep& g = as_filter(span, vg);
                bool holds = implication_member(b, f, g);
                EvalResult r = plain(holds, "filt.implication_member");
                if (auto ce = implication_counterexample(b, f, g)) r.witness = cofin::show(*ce);
                return r;
            }
            throw TypeError(span, "unknown query " + q.q);
        }
    };
    return std::visit(V{*this, e.span}, e.node);
}

std::optional<EvalResult> Session::run(const Stmt& s) {
    switch (s.kind) {
        case Stmt::Kind::Seed:
            seed_ = s.number;
            return std::nullopt;
        case Stmt::Kind::Let: {
            EvalResult r = eval(*s.expr);
            env_[s.name] = r.value;
            return std::nullopt;
        }
        case Stmt::Kind::Assert: {
            EvalResult r = eval(*s.expr);
            auto* b = std::get_if<bool>(&r.value);
            if (!b) throw TypeError(s.expr->span, "assert needs a boolean query");
            if (!*b)
                throw AssertFailure("assertion failed: " + show(*s.expr) +
                                    (r.witness ? " (witness " + *r.witness + ")" : ""));
            return r;
        }
        case Stmt::Kind::Check: {
            Report rep;
            if (s.name == "all") {
                rep.suite = "all";
                for (const auto& sub : checks::run_all(seed_))
                    for (const auto& item : sub.items)
                        rep.items.push_back(item);
            } else {
                rep = checks::run_suite(s.name, s.number, seed_);
            }
            EvalResult r = plain(rep, "checks." + s.name);
            r.report = rep;
            return r;
        }
        case Stmt::Kind::Eval:
            return eval(*s.expr);
    }
    return std::nullopt;
}

nlohmann::json result_json(const std::string& query, const EvalResult& r) {
    nlohmann::json j;
    j["query"] = query;
    if (auto* b = std::get_if<bool>(&r.value))
        j["answer"] = *b;
    else if (auto* n = std::get_if<std::uint64_t>(&r.value))
        j["answer"] = *n;
    else
        j["answer"] = show(r.value);
    if (r.witness) j["witness"] = *r.witness;
    if (r.report) j["report"] = to_json(*r.report);
    return j;
}

}  // namespace cofin::lang
