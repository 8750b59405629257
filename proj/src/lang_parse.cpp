#include <cctype>
#include <sstream>

#include "cofin/lang.hpp"

namespace cofin::lang {

namespace {

enum class Tok {
    Number, Residue, Per, Ident, Query,  // Query: ident ending in '?', plus <=? and ->?
    LBrace, RBrace, LParen, RParen, Comma, Semi, Bang, Tilde, Amp, Pipe, Backslash, Star,
    Equals, End
};

struct Token {
    Tok kind = Tok::End;
    Span span;
    std::string text;
    std::uint64_t number = 0;
    std::uint64_t residue_m = 1, residue_r = 0;
    Bits per_prefix, per_wheel;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    std::vector<Token> all() {
        std::vector<Token> out;
        for (;;) {
            Token t = next();
            bool end = t.kind == Tok::End;
            out.push_back(std::move(t));
            if (end) return out;
        }
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
    std::uint32_t line_ = 1, col_ = 1;

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char take() {
        char c = text_[pos_++];
        if (c == '\n') { ++line_; col_ = 1; }
        else ++col_;
        return c;
    }
    Span here() const { return {line_, col_}; }

    void skip_space() {
        for (;;) {
            while (pos_ < text_.size() && (peek() == ' ' || peek() == '\t' || peek() == '\r'))
                take();
            if (peek() == '#') {
                while (pos_ < text_.size() && peek() != '\n') take();
                continue;
            }
            return;
        }
    }

    Token make(Tok k, Span s, std::string text = "") {
        Token t;
        t.kind = k;
        t.span = s;
        t.text = std::move(text);
        return t;
    }

    std::uint64_t read_number() {
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(take() - '0');
            if (v > (1ull << 40)) throw SyntaxError(here(), "number too large", "smaller number");
        }
        return v;
    }

    Token next() {
        skip_space();
        Span s = here();
        if (pos_ >= text_.size()) return make(Tok::End, s);
        char c = peek();
        if (c == '\n') { take(); return next(); }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint64_t v = read_number();
            if (peek() == 'k') {
                take();
                std::uint64_t r = 0;
                if (peek() == '+') {
                    take();
                    if (!std::isdigit(static_cast<unsigned char>(peek())))
                        throw SyntaxError(here(), "expected a residue offset", "number");
                    r = read_number();
                }
                if (!(peek() == '.' && peek(1) == '.'))
                    throw SyntaxError(here(), "expected '..' after residue class", "'..'");
                take(); take();
                Token t = make(Tok::Residue, s);
                t.residue_m = v;
                t.residue_r = r;
                return t;
            }
            Token t = make(Tok::Number, s);
            t.number = v;
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                id.push_back(take());
            if (id == "per" && peek() == '(') {
                take();
                Token t = make(Tok::Per, s);
                t.per_prefix = read_bits(';');
                t.per_wheel = read_bits(')');
                return t;
            }
            if (peek() == '?') {
                take();
                return make(Tok::Query, s, id + "?");
            }
            return make(Tok::Ident, s, id);
        }
        switch (c) {
            case '{': take(); return make(Tok::LBrace, s);
            case '}': take(); return make(Tok::RBrace, s);
            case '(': take(); return make(Tok::LParen, s);
            case ')': take(); return make(Tok::RParen, s);
            case ',': take(); return make(Tok::Comma, s);
            case ';': take(); return make(Tok::Semi, s);
            case '!': take(); return make(Tok::Bang, s);
            case '~': take(); return make(Tok::Tilde, s);
            case '&': take(); return make(Tok::Amp, s);
            case '|': take(); return make(Tok::Pipe, s);
            case '\\': take(); return make(Tok::Backslash, s);
            case '*': take(); return make(Tok::Star, s);
            case '=': take(); return make(Tok::Equals, s);
            case '<':
                if (peek(1) == '=' && peek(2) == '?') {
                    take(); take(); take();
                    return make(Tok::Query, s, "<=?");
                }
                break;
            case '-':
                if (peek(1) == '>' && peek(2) == '?') {
                    take(); take(); take();
                    return make(Tok::Query, s, "->?");
                }
                break;
            default: break;
        }
        throw SyntaxError(s, std::string("unexpected character '") + c + "'", "token");
    }

    Bits read_bits(char closer) {
        Bits b;
        for (;;) {
            char c = peek();
            if (c == '0' || c == '1') {
                b.push_back(take() == '1');
                continue;
            }
            if (c == closer) {
                take();
                return b;
            }
            throw SyntaxError(here(), "expected 0/1 bits", std::string(1, closer));
        }
    }
};

const char* kUnaryOps[] = {"lim", "neg", "notnot", "not", "born"};
const char* kCallFns[] = {"U", "C", "P", "Alm", "Cont", "u", "sigma", "act", "phi"};

bool is_unary(const std::string& id) {
    for (auto* s : kUnaryOps)
        if (id == s) return true;
    return false;
}
bool is_call(const std::string& id) {
    for (auto* s : kCallFns)
        if (id == s) return true;
    return false;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(Lexer(text).all()) {}

    std::vector<Stmt> program() {
        std::vector<Stmt> out;
        while (!at(Tok::End)) {
            out.push_back(statement());
            while (at(Tok::Semi)) advance();
        }
        return out;
    }

    Stmt statement() {
        Stmt s;
        s.span = cur().span;
        if (at(Tok::Ident) && cur().text == "seed") {
            advance();
            s.kind = Stmt::Kind::Seed;
            s.number = expect_number();
            return s;
        }
        if (at(Tok::Ident) && cur().text == "let") {
            advance();
            s.kind = Stmt::Kind::Let;
            if (!at(Tok::Ident)) throw SyntaxError(cur().span, "expected a name", "identifier");
            s.name = cur().text;
            advance();
            expect(Tok::Equals, "'='");
            s.expr = expression();
            return s;
        }
        if (at(Tok::Ident) && cur().text == "assert") {
            advance();
            s.kind = Stmt::Kind::Assert;
            s.expr = expression();
            return s;
        }
        if (at(Tok::Ident) && cur().text == "check") {
            advance();
            s.kind = Stmt::Kind::Check;
            if (!at(Tok::Ident))
                throw SyntaxError(cur().span, "expected a suite name", "identifier");
            s.name = cur().text;
            advance();
            if (at(Tok::Number)) {
                s.number = cur().number;
                advance();
            }
            return s;
        }
        s.kind = Stmt::Kind::Eval;
        s.expr = expression();
        return s;
    }

    ExprPtr expression() {
        if (at(Tok::Query)) {
            Token q = cur();
            advance();
            QueryOp op{q.text, {}};
            std::size_t arity = q.text == "->?" ? 3
                              : (q.text == "in?" || q.text == "<=?" || q.text == "meets?") ? 2
                              : 1;
            for (std::size_t i = 0; i < arity; ++i) op.args.push_back(unionexpr());
            return node(q.span, std::move(op));
        }
        return unionexpr();
    }

    void expect_end() {
        if (!at(Tok::End))
            throw SyntaxError(cur().span, "trailing input after expression", "end of input");
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;

    const Token& cur() const { return toks_[i_]; }
    bool at(Tok k) const { return cur().kind == k; }
    void advance() { if (i_ + 1 < toks_.size()) ++i_; }
    void expect(Tok k, const std::string& what) {
        if (!at(k)) throw SyntaxError(cur().span, "expected " + what, what);
        advance();
    }
    std::uint64_t expect_number() {
        if (!at(Tok::Number)) throw SyntaxError(cur().span, "expected a number", "number");
        std::uint64_t v = cur().number;
        advance();
        return v;
    }

    ExprPtr node(Span s, auto&& v) {
        auto e = std::make_shared<Expr>();
        e->span = s;
        e->node = std::forward<decltype(v)>(v);
        return e;
    }

    ExprPtr unionexpr() {
        ExprPtr lhs = exceptexpr();
        while (at(Tok::Pipe)) {
            Span s = cur().span;
            advance();
            lhs = node(s, BinaryOp{'|', lhs, exceptexpr()});
        }
        return lhs;
    }
    ExprPtr exceptexpr() {
        ExprPtr lhs = isectexpr();
        while (at(Tok::Backslash)) {
            Span s = cur().span;
            advance();
            lhs = node(s, BinaryOp{'\\', lhs, isectexpr()});
        }
        return lhs;
    }
    ExprPtr isectexpr() {
        ExprPtr lhs = compexpr();
        while (at(Tok::Amp)) {
            Span s = cur().span;
            advance();
            lhs = node(s, BinaryOp{'&', lhs, compexpr()});
        }
        return lhs;
    }
    ExprPtr compexpr() {
        ExprPtr lhs = unary();
        while (at(Tok::Star)) {
            Span s = cur().span;
            advance();
            lhs = node(s, BinaryOp{'*', lhs, unary()});
        }
        return lhs;
    }

    ExprPtr unary() {
        Span s = cur().span;
        if (at(Tok::Tilde)) {
            advance();
            return node(s, UnaryOp{"~", unary()});
        }
        if (at(Tok::Ident) && is_unary(cur().text)) {
            std::string op = cur().text;
            advance();
            return node(s, UnaryOp{std::move(op), unary()});
        }
        return atom();
    }

    std::vector<std::uint64_t> brace_numbers() {
        expect(Tok::LBrace, "'{'");
        std::vector<std::uint64_t> elems;
        if (!at(Tok::RBrace)) {
            elems.push_back(expect_number());
            while (at(Tok::Comma)) {
                advance();
                elems.push_back(expect_number());
            }
        }
        expect(Tok::RBrace, "'}'");
        return elems;
    }

    ExprPtr atom() {
        Span s = cur().span;
        if (at(Tok::Number)) {
            if (cur().number != 0)
                throw SyntaxError(s, "bare numbers only name the empty ideal 0", "expression");
            advance();
            return node(s, EmptyIdealLit{});
        }
        if (at(Tok::Residue)) {
            ResidueLit lit{cur().residue_m, cur().residue_r};
            advance();
            return node(s, lit);
        }
        if (at(Tok::Per)) {
            PerLit lit{cur().per_prefix, cur().per_wheel};
            advance();
            return node(s, std::move(lit));
        }
        if (at(Tok::Bang)) {
            advance();
            return node(s, SetLit{brace_numbers(), true});
        }
        if (at(Tok::LBrace)) return node(s, SetLit{brace_numbers(), false});
        if (at(Tok::LParen)) {
            advance();
            ExprPtr inner = expression();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (at(Tok::Ident)) {
            std::string id = cur().text;
            advance();
            if (id == "sigma") {
                SetLit k{brace_numbers(), false};
                CallOp call{"sigma", {node(s, std::move(k))}};
                return node(s, std::move(call));
            }
            if (is_call(id) && at(Tok::LParen)) {
                advance();
                CallOp call{id, {}};
                call.args.push_back(expression());
                char sep = id == "phi" ? ';' : ',';
                while ((sep == ';' && at(Tok::Semi)) || (sep == ',' && at(Tok::Comma))) {
                    advance();
                    call.args.push_back(expression());
                }
                expect(Tok::RParen, "')'");
                return node(s, std::move(call));
            }
            return node(s, NameRef{std::move(id)});
        }
        throw SyntaxError(s, "expected an expression", "expression");
    }
};

std::string bits_string(const Bits& b) {
    std::string s;
    for (auto x : b) s.push_back(x ? '1' : '0');
    return s;
}

}  // namespace

std::vector<Stmt> parse_program(const std::string& text) { return Parser(text).program(); }

Stmt parse_statement(const std::string& line) {
    Parser p(line);
    Stmt s = p.statement();
    p.expect_end();
    return s;
}

ExprPtr parse_expression(const std::string& text) {
    Parser p(text);
    ExprPtr e = p.expression();
    p.expect_end();
    return e;
}

std::string show(const Expr& e) {
    struct V {
        std::string operator()(const SetLit& l) const {
            std::ostringstream os;
            if (l.cofinite) os << '!';
            os << '{';
            for (std::size_t i = 0; i < l.elems.size(); ++i) {
                if (i) os << ',';
                os << l.elems[i];
            }
            os << '}';
            return os.str();
        }
        std::string operator()(const ResidueLit& l) const {
            std::ostringstream os;
            os << l.modulus << 'k';
            if (l.rep) os << '+' << l.rep;
            os << "..";
            return os.str();
        }
        std::string operator()(const PerLit& l) const {
            return "per(" + bits_string(l.prefix) + ";" + bits_string(l.wheel) + ")";
        }
        std::string operator()(const NameRef& n) const { return n.id; }
        std::string operator()(const EmptyIdealLit&) const { return "0"; }
        std::string operator()(const BinaryOp& b) const {
            return "(" + lang::show(*b.lhs) + " " + std::string(1, b.op) + " " +
                   lang::show(*b.rhs) + ")";
        }
        std::string operator()(const UnaryOp& u) const {
            if (u.op == "~") return "~" + lang::show(*u.arg);
            return u.op + " " + lang::show(*u.arg);
        }
        std::string operator()(const CallOp& c) const {
            if (c.fn == "sigma")
                return "sigma" + lang::show(*c.args[0]);
            std::string sep = c.fn == "phi" ? ";" : ", ";
            std::string out = c.fn + "(";
            for (std::size_t i = 0; i < c.args.size(); ++i) {
                if (i) out += sep;
                out += lang::show(*c.args[i]);
            }
            return out + ")";
        }
        std::string operator()(const QueryOp& q) const {
            std::string out = q.q;
            for (const auto& a : q.args) out += " " + lang::show(*a);
            return out;
        }
    };
    return std::visit(V{}, e.node);
}

std::string show(const Stmt& s) {
    switch (s.kind) {
        case Stmt::Kind::Seed: return "seed " + std::to_string(s.number);
        case Stmt::Kind::Let: return "let " + s.name + " = " + show(*s.expr);
        case Stmt::Kind::Assert: return "assert " + show(*s.expr);
        case Stmt::Kind::Check:
            return "check " + s.name + (s.number ? " " + std::to_string(s.number) : "");
        case Stmt::Kind::Eval: return show(*s.expr);
    }
    return "";
}

}  // namespace cofin::lang
