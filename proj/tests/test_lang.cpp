#include <doctest.h>

#include <random>

#include "cofin/lang.hpp"

using namespace cofin;
using namespace cofin::lang;

namespace {

// Random well-typed-ish expression text for round-trip checks. Types do not
// matter for parse/print stability, only shape does.
struct ExprGen {
    std::mt19937_64 eng;
    explicit ExprGen(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(eng);
    }

    ExprPtr set_expr(int depth) {
        switch (depth <= 0 ? below(4) : below(6)) {
            case 0: return parse_expression("{" + std::to_string(below(9)) + "," +
                                            std::to_string(9 + below(9)) + "}");
            case 1: return parse_expression("!{" + std::to_string(below(9)) + "}");
            case 2: return parse_expression(std::to_string(1 + below(5)) + "k+" +
                                            std::to_string(below(7)) + "..");
            case 3: return parse_expression("N");
            case 4: {
                auto lhs = set_expr(depth - 1), rhs = set_expr(depth - 1);
                char op = "&|\\"[below(3)];
                return parse_expression("(" + lang::show(*lhs) + " " + std::string(1, op) +
                                        " " + lang::show(*rhs) + ")");
            }
            default: {
                auto arg = set_expr(depth - 1);
                return parse_expression("~" + lang::show(*arg));
            }
        }
    }

    ExprPtr any_expr(int depth) {
        switch (below(8)) {
            case 0: return set_expr(depth);
            case 1: return parse_expression("u(" + lang::show(*set_expr(depth - 1)) + ")");
            case 2: return parse_expression("sigma{" + std::to_string(below(6)) + "}");
            case 3: return parse_expression("P(" + lang::show(*set_expr(depth - 1)) + ")");
            case 4: return parse_expression("Alm(" + lang::show(*set_expr(depth - 1)) + ")");
            case 5: return parse_expression("U(" + lang::show(*set_expr(depth - 1)) + ")");
            case 6: return parse_expression("C(" + lang::show(*set_expr(depth - 1)) + ")");
            default: {
                switch (below(5)) {
                    case 0: return parse_expression("dense? " + lang::show(*any_ideal(depth)));
                    case 1: return parse_expression("in? u(" + lang::show(*set_expr(0)) +
                                                    ") " + lang::show(*any_ideal(depth)));
                    case 2: return parse_expression("lim C(" + lang::show(*set_expr(0)) + ")");
                    case 3: return parse_expression("<=? " + lang::show(*any_ideal(depth)) +
                                                    " " + lang::show(*any_ideal(depth)));
                    default: return parse_expression("notnot " + lang::show(*any_ideal(depth)));
                }
            }
        }
    }

    ExprPtr any_ideal(int depth) {
        switch (below(5)) {
            case 0: return parse_expression("L");
            case 1: return parse_expression("E");
            case 2: return parse_expression("0");
            case 3: return parse_expression("P(" + lang::show(*set_expr(depth - 1)) + ")");
            default: return parse_expression("(P(" + lang::show(*set_expr(depth - 1)) +
                                             ") | Alm(" + lang::show(*set_expr(depth - 1)) +
                                             "))");
        }
    }
};

Value eval_text(Session& s, const std::string& text) {
    return s.eval(*parse_expression(text)).value;
}

}  // namespace

TEST_CASE("parsing the documented forms") {
    ExprPtr e = parse_expression("dense? P(2k..)");
    auto* q = std::get_if<QueryOp>(&e->node);
    REQUIRE(q);
    CHECK(q->q == "dense?");
    auto* call = std::get_if<CallOp>(&q->args[0]->node);
    REQUIRE(call);
    CHECK(call->fn == "P");
    CHECK(std::holds_alternative<ResidueLit>(call->args[0]->node));

    ExprPtr l = parse_expression("lim C({1,3})");
    auto* un = std::get_if<UnaryOp>(&l->node);
    REQUIRE(un);
    CHECK(un->op == "lim");

    CHECK_THROWS_AS(parse_expression("P("), SyntaxError);
    try {
        parse_expression("P(");
    } catch (const SyntaxError& err) {
        CHECK(err.span.col == 3);
        CHECK(err.span.line == 1);
    }
    CHECK_THROWS_AS(parse_expression("dense? dense?"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("{1,"), SyntaxError);
    CHECK_THROWS_AS(parse_expression("3"), SyntaxError);
}

TEST_CASE("print-parse-print is stable on a generated corpus") {
    ExprGen gen(99);
    for (int i = 0; i < 200; ++i) {
        ExprPtr e = gen.any_expr(2);
        std::string once = lang::show(*e);
        std::string twice = lang::show(*parse_expression(once));
        CHECK(once == twice);
    }
}

TEST_CASE("evaluating the documented examples") {
    Session s;
    CHECK(std::get<bool>(eval_text(s, "cofinite? !{0,2}")));
    {
        EvalResult r = s.eval(*parse_expression("dense? Cont(2k..)"));
        CHECK(!std::get<bool>(r.value));
        REQUIRE(r.witness);
        CHECK(*r.witness == "u(2k+1..)");
    }
    CHECK(std::get<UpSet>(eval_text(s, "lim C({1,3})")) == UpSet::finite({1, 3}));
    CHECK(std::get<bool>(eval_text(s, "in? u(4k..) P(2k..)")));
    CHECK(std::get<bool>(eval_text(s, "<=? L notnot P(!{0})")));
    CHECK(!std::get<bool>(eval_text(s, "<=? L P(!{0})")));
    CHECK(std::get<UpSet>(eval_text(s, "2k.. & 3k..")) == UpSet::residue(6, 0));
    CHECK(std::get<EnumMap>(eval_text(s, "sigma{0} * sigma{0}")) ==
          EnumMap(UpSet::from_threshold(2)));
    CHECK(std::get<SetClass>(eval_text(s, "classify? !{1}")) == SetClass{SetTag::Cofinite, 1});
}

TEST_CASE("statements: seed, let, assert, check") {
    Session s;
    CHECK(!s.run(parse_statement("seed 42")).has_value());
    CHECK(s.seed() == 42);
    CHECK(!s.run(parse_statement("let x = 2k.. | 2k+1..")).has_value());
    CHECK(std::get<UpSet>(eval_text(s, "x")) == UpSet::naturals());
    CHECK(std::get<bool>(s.run(parse_statement("assert cofinite? x"))->value));
    CHECK_THROWS_AS(s.run(parse_statement("assert dense? P(2k..)")), AssertFailure);
    auto checked = s.run(parse_statement("check clu1 3"));
    REQUIRE(checked);
    REQUIRE(checked->report);
    CHECK(checked->report->all_pass());
}

TEST_CASE("type errors carry positions") {
    Session s;
    CHECK_THROWS_AS(eval_text(s, "lim P(2k..)"), TypeError);
    CHECK_THROWS_AS(eval_text(s, "unknown_name"), TypeError);
    CHECK_THROWS_AS(eval_text(s, "u({1,2})"), TypeError);
    CHECK_THROWS_AS(eval_text(s, "2k.. & frechet"), TypeError);
    CHECK_THROWS_AS(eval_text(s, "in? {1} P(2k..)"), TypeError);
}

TEST_CASE("json records follow the documented schema") {
    Session s;
    const char* queries[] = {
        "dense? P(2k..)",      "dense? L",          "cofinite? !{0,2}",
        "in? u(4k..) P(2k..)", "<=? L E",           "lim C({1,3})",
        "classify? 2k..",      "ext? Alm(2k..)",    "meets? P(2k..) P(2k+1..)",
        "->? {1} frechet U({1})", "act(u(2k..), P(4k..))", "notnot P(2k..)",
        "not P(2k..)",         "neg C(2k..)",       "born U(2k..)",
        "u(2k..) * u(3k..)",   "sigma{1,3}",        "2k.. \\ 4k..",
        "phi({1};2k..)",       "<=? U(2k..) discrete"};
    for (const char* q : queries) {
        EvalResult r = s.eval(*parse_expression(q));
        nlohmann::json j = result_json(q, r);
        CHECK(j.contains("query"));
        CHECK(j.contains("answer"));
        for (auto it = j.begin(); it != j.end(); ++it) {
            bool known = it.key() == "query" || it.key() == "answer" ||
                         it.key() == "witness" || it.key() == "report";
            CHECK(known);
        }
    }
}

TEST_CASE("evaluation is deterministic for a fixed seed") {
    auto transcript = [](std::uint64_t seed) {
        Session s(seed);
        std::string out;
        for (const char* q : {"dense? (P(2k..) | P(2k+1..))",
                              "<=? P(2k..) (P(4k..) | P(per(;0010)))"}) {
            EvalResult r = s.eval(*parse_expression(q));
            out += result_json(q, r).dump();
            out += '\n';
        }
        for (const char* c : {"check acont 60", "check fdn"})
            out += result_json(c, *s.run(parse_statement(c))).dump();
        return out;
    };
    CHECK(transcript(7) == transcript(7));
    CHECK(transcript(8) == transcript(8));
}
