#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cofin/emonoid.hpp"
#include "cofin/filt.hpp"
#include "cofin/ideal.hpp"
#include "cofin/report.hpp"
#include "cofin/upset.hpp"

namespace cofin::lang {

struct Span {
    std::uint32_t line = 1;
    std::uint32_t col = 1;
};

struct SyntaxError : Error {
    Span span;
    std::string expected;
    SyntaxError(Span s, const std::string& what_, std::string expected_)
        : Error("parse error at " + std::to_string(s.line) + ":" + std::to_string(s.col) +
                ": " + what_),
          span(s),
          expected(std::move(expected_)) {}
};

struct TypeError : Error {
    Span span;
    TypeError(Span s, const std::string& what_)
        : Error("type error at " + std::to_string(s.line) + ":" + std::to_string(s.col) +
                ": " + what_),
          span(s) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct SetLit {
    std::vector<std::uint64_t> elems;
    bool cofinite = false;  // !{...}
};
struct ResidueLit {
    std::uint64_t modulus = 1, rep = 0;
};
struct PerLit {
    Bits prefix, wheel;
};
struct NameRef {
    std::string id;  // constants (N, id, L, E, frechet, ...) or let-bound names
};
struct EmptyIdealLit {};
struct BinaryOp {
    char op;  // '|', '&', '\\', '*'
    ExprPtr lhs, rhs;
};
struct UnaryOp {
    std::string op;  // "~", "lim", "neg", "notnot", "not", "born"
    ExprPtr arg;
};
struct CallOp {
    std::string fn;  // "U","C","P","Alm","Cont","u","sigma","phi","act"
    std::vector<ExprPtr> args;
};
struct QueryOp {
    std::string q;  // "dense?","ext?","cofinite?","finite?","classify?","in?","<=?","->?","meets?"
    std::vector<ExprPtr> args;
};

struct Expr {
    Span span;
    std::variant<SetLit, ResidueLit, PerLit, NameRef, EmptyIdealLit, BinaryOp, UnaryOp, CallOp,
                 QueryOp>
        node;
};

struct Stmt {
    enum class Kind { Seed, Let, Assert, Check, Eval };
    Span span;
    Kind kind = Kind::Eval;
    std::uint64_t number = 0;   // seed value / check numeric argument
    std::string name;           // let target / check suite
    ExprPtr expr;               // let / assert / eval payload
};

// One statement per line; '#' starts a comment. Throws SyntaxError.
std::vector<Stmt> parse_program(const std::string& text);
Stmt parse_statement(const std::string& line);
ExprPtr parse_expression(const std::string& text);

// Canonical re-parseable forms (binary operands fully parenthesized).
std::string show(const Expr& e);
std::string show(const Stmt& s);

using Value = std::variant<bool, std::uint64_t, UpSet, SetClass, EnumMap, IdealExpr, FilterRep,
                           BornRep, Report>;

struct EvalResult {
    Value value;
    std::string provenance;                // module op that produced the value
    std::optional<std::string> witness;    // printed witness / counterexample
    std::optional<Report> report;          // attached suite report
};

std::string show(const Value& v);

// Evaluation session: let-bindings plus the shared seed for sampled checks.
class Session {
public:
    explicit Session(std::uint64_t seed = 0) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    void set_seed(std::uint64_t s) { seed_ = s; }

    EvalResult eval(const Expr& e);
    // Seed/let return nullopt; assert failures throw AssertFailure.
    std::optional<EvalResult> run(const Stmt& s);

private:
    std::uint64_t seed_ = 0;
    std::map<std::string, Value> env_;
};

struct AssertFailure : Error {
    using Error::Error;
};

// {query, answer, witness?, report?} with stable field names.
nlohmann::json result_json(const std::string& query, const EvalResult& r);

}  // namespace cofin::lang
