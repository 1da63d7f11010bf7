#include "etaprove/expr_parser.hpp"

#include "etaprove/prover.hpp"

#include <cctype>
#include <optional>

namespace etaprove {

ParseError::ParseError(const std::string& msg, int line_, int column_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                         ": " + msg),
      line(line_), column(column_)
{
}

LoweringError::LoweringError(const std::string& msg, int line_, int column_)
    : std::runtime_error("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                         ": " + msg),
      line(line_), column(column_)
{
}

namespace {

enum class Tok { Int, Ident, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
    std::size_t offset = 0;
};

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        t.offset = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            t.kind = Tok::Int;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            t.kind = Tok::Ident;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
        } else if (std::string_view("+-*/^()[],;=").find(c) != std::string_view::npos) {
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = col;
    end.offset = src.size();
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src), toks_(tokenize(src)) {}

    const Token& peek(std::size_t ahead = 0) const
    {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    bool at_end() const { return peek().kind == Tok::End; }
    bool is_punct(const char* p, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
    }
    bool is_ident(const char* id, std::size_t ahead = 0) const
    {
        return peek(ahead).kind == Tok::Ident && peek(ahead).text == id;
    }

    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& msg) const
    {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(msg + ", found " + got, t.line, t.column);
    }

    void expect(const char* p)
    {
        if (!is_punct(p))
            fail(std::string("expected '") + p + "'");
        next();
    }

    std::int64_t expect_int()
    {
        if (peek().kind != Tok::Int)
            fail("expected an integer");
        const Token& t = next();
        Integer z(t.text, 10);
        if (!z.fits_slong_p())
            throw ParseError("integer " + t.text + " is too large", t.line, t.column);
        return z.get_si();
    }

    std::int64_t expect_signed_int()
    {
        bool neg = false;
        if (is_punct("-") || is_punct("+")) {
            neg = next().text == "-";
        }
        std::int64_t v = expect_int();
        return neg ? -v : v;
    }

    std::string expect_ident()
    {
        if (peek().kind != Tok::Ident)
            fail("expected a name");
        return next().text;
    }

    using Node = std::shared_ptr<EtaExpr>;

    Node make(EtaExpr::Kind k, const Token& at)
    {
        auto n = std::make_shared<EtaExpr>();
        n->kind = k;
        n->line = at.line;
        n->column = at.column;
        n->begin = at.offset;
        return n;
    }

    void close(const Node& n) { n->end = prev_end(); }

    std::size_t prev_end() const
    {
        if (pos_ == 0)
            return 0;
        const Token& t = toks_[pos_ - 1];
        return t.offset + t.text.size();
    }

    Node binary(EtaExpr::Kind k, Node lhs, Node rhs)
    {
        auto n = std::make_shared<EtaExpr>();
        n->kind = k;
        n->line = lhs->line;
        n->column = lhs->column;
        n->begin = lhs->begin;
        n->end = rhs->end;
        n->kids = {std::move(lhs), std::move(rhs)};
        return n;
    }

    Node expr()
    {
        Node lhs = term();
        while (is_punct("+") || is_punct("-")) {
            auto k = next().text == "+" ? EtaExpr::Kind::Add : EtaExpr::Kind::Sub;
            lhs = binary(k, lhs, term());
        }
        return lhs;
    }

    Node term()
    {
        Node lhs = unary();
        while (is_punct("*") || is_punct("/")) {
            auto k = next().text == "*" ? EtaExpr::Kind::Mul : EtaExpr::Kind::Div;
            lhs = binary(k, lhs, unary());
        }
        return lhs;
    }

    Node unary()
    {
        if (is_punct("-")) {
            Node n = make(EtaExpr::Kind::Neg, peek());
            next();
            n->kids = {unary()};
            close(n);
            return n;
        }
        if (is_punct("+")) {
            next();
            return unary();
        }
        return power();
    }

    Node power()
    {
        Node base = primary();
        if (!is_punct("^"))
            return base;
        next();
        std::int64_t e;
        if (is_punct("(")) {
            next();
            e = expect_signed_int();
            expect(")");
        } else {
            e = expect_signed_int();
        }
        auto n = std::make_shared<EtaExpr>();
        n->kind = EtaExpr::Kind::Pow;
        n->line = base->line;
        n->column = base->column;
        n->begin = base->begin;
        n->exponent = e;
        n->kids = {base};
        close(n);
        if (is_punct("^"))
            fail("chained '^' needs parentheses");
        return n;
    }

    Node primary()
    {
        const Token at = peek();
        if (at.kind == Tok::Int) {
            Node n = make(EtaExpr::Kind::Number, at);
            n->number = Integer(next().text, 10);
            close(n);
            return n;
        }
        if (is_ident("eta") && is_punct("(", 1)) {
            Node n = make(EtaExpr::Kind::Eta, at);
            next();
            next();
            n->multiplier = expect_int();
            if (n->multiplier < 1)
                throw ParseError("eta multiplier must be positive", at.line, at.column);
            expect(")");
            close(n);
            return n;
        }
        if (at.kind == Tok::Ident) {
            Node n = make(EtaExpr::Kind::Name, at);
            n->name = next().text;
            close(n);
            return n;
        }
        if (is_punct("[")) {
            Node n = make(EtaExpr::Kind::List, at);
            next();
            if (!is_punct("]")) {
                n->list.push_back(expect_signed_int());
                while (is_punct(",")) {
                    next();
                    n->list.push_back(expect_signed_int());
                }
            }
            expect("]");
            if (n->list.size() % 2 != 0)
                throw ParseError("eta-product list needs an even number of entries", at.line,
                                 at.column);
            for (std::size_t i = 0; i < n->list.size(); i += 2)
                if (n->list[i] < 1)
                    throw ParseError("eta multiplier must be positive", at.line, at.column);
            close(n);
            return n;
        }
        if (is_punct("(")) {
            next();
            Node inner = expr();
            expect(")");
            // Keep the parenthesized span for error messages.
            auto n = std::make_shared<EtaExpr>(*inner);
            n->begin = at.offset;
            n->line = at.line;
            n->column = at.column;
            close(n);
            return n;
        }
        fail("expected an expression");
    }

    std::string_view src_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

using Terms = std::vector<EtaTerm>;

void accumulate(Terms& acc, const EtaTerm& t)
{
    for (auto& x : acc) {
        if (x.product == t.product) {
            x.coeff += t.coeff;
            return;
        }
    }
    acc.push_back(t);
}

Terms cleaned(Terms t)
{
    std::erase_if(t, [](const EtaTerm& x) { return x.coeff.is_zero(); });
    return t;
}

Terms multiply(const Terms& a, const Terms& b)
{
    Terms out;
    for (const auto& x : a)
        for (const auto& y : b)
            accumulate(out, {x.coeff * y.coeff, x.product * y.product});
    return cleaned(std::move(out));
}

std::string snippet(const EtaExpr& e, std::string_view source)
{
    if (e.end <= e.begin || e.end > source.size())
        return "expression";
    return "'" + std::string(source.substr(e.begin, e.end - e.begin)) + "'";
}

}  // namespace

std::shared_ptr<const EtaExpr> parse_expr(std::string_view text)
{
    Parser p(text);
    auto e = p.expr();
    if (!p.at_end())
        p.fail("expected end of expression");
    return e;
}

std::vector<EtaTerm> lower(const EtaExpr& e, std::string_view source, const Bindings& env)
{
    using K = EtaExpr::Kind;
    switch (e.kind) {
    case K::Number:
        return cleaned({EtaTerm{Rational(e.number), EtaProduct()}});
    case K::Eta:
        return {EtaTerm{Rational(1), EtaProduct({{e.multiplier, 1}})}};
    case K::List:
        return {EtaTerm{Rational(1), EtaProduct::from_list(e.list)}};
    case K::Name: {
        auto it = env.find(e.name);
        if (it == env.end())
            throw LoweringError("undefined name '" + e.name + "'", e.line, e.column);
        return it->second;
    }
    case K::Neg: {
        Terms t = lower(*e.kids[0], source, env);
        for (auto& x : t)
            x.coeff = -x.coeff;
        return t;
    }
    case K::Add:
    case K::Sub: {
        Terms out = lower(*e.kids[0], source, env);
        Terms rhs = lower(*e.kids[1], source, env);
        for (auto& x : rhs) {
            if (e.kind == K::Sub)
                x.coeff = -x.coeff;
            accumulate(out, x);
        }
        return cleaned(std::move(out));
    }
    case K::Mul:
        return multiply(lower(*e.kids[0], source, env), lower(*e.kids[1], source, env));
    case K::Div: {
        Terms den = lower(*e.kids[1], source, env);
        if (den.size() != 1)
            throw LoweringError("cannot divide by " + snippet(*e.kids[1], source) +
                                    ", which is not a single eta-product term",
                                e.kids[1]->line, e.kids[1]->column);
        Terms inv{EtaTerm{Rational(1) / den[0].coeff, den[0].product.inverse()}};
        return multiply(lower(*e.kids[0], source, env), inv);
    }
    case K::Pow: {
        Terms base = lower(*e.kids[0], source, env);
        std::int64_t n = e.exponent;
        if (n < 0) {
            if (base.size() != 1)
                throw LoweringError("negative power of " + snippet(*e.kids[0], source) +
                                        ", which is not a single eta-product term",
                                    e.line, e.column);
            base = {EtaTerm{Rational(1) / base[0].coeff, base[0].product.inverse()}};
            n = -n;
        }
        Terms out{EtaTerm{Rational(1), EtaProduct()}};
        for (std::int64_t k = 0; k < n; ++k)
            out = multiply(out, base);
        return out;
    }
    }
    return {};
}

std::vector<EtaTerm> parse_terms(std::string_view text)
{
    auto e = parse_expr(text);
    return lower(*e, text);
}

IdentityFile parse_identity_file(std::string_view text)
{
    Parser p(text);
    Bindings env;
    while (p.is_ident("let")) {
        p.next();
        const Token at = p.peek();
        std::string name = p.expect_ident();
        if (name == "eta" || name == "let" || name == "U")
            throw ParseError("'" + name + "' is reserved", at.line, at.column);
        p.expect("=");
        auto e = p.expr();
        p.expect(";");
        env[name] = lower(*e, text, env);
    }
    if (p.at_end())
        p.fail("expected the identity");

    IdentityFile out;
    if (p.is_ident("U") && p.is_punct("(", 1)) {
        const Token at = p.peek();
        p.next();
        p.next();
        out.kind = IdentityFile::Kind::Up;
        out.prime = p.expect_int();
        p.expect(")");
        auto lhs_expr = p.expr();
        p.expect("=");
        auto rhs_expr = p.expr();
        if (p.is_punct(";"))
            p.next();
        if (!p.at_end())
            p.fail("expected end of input");
        Terms lhs = lower(*lhs_expr, text, env);
        if (lhs.size() != 1)
            throw LoweringError("U(p) must be applied to a single eta-product", at.line,
                                at.column);
        Terms rhs = lower(*rhs_expr, text, env);
        for (auto& t : rhs)
            t.coeff /= lhs[0].coeff;
        out.source = lhs[0].product;
        out.rhs = EtaCombo(Rational(0), rhs);
        return out;
    }

    auto lhs_expr = p.expr();
    Terms terms = lower(*lhs_expr, text, env);
    if (p.is_punct("=")) {
        p.next();
        auto rhs_expr = p.expr();
        for (auto t : lower(*rhs_expr, text, env)) {
            t.coeff = -t.coeff;
            accumulate(terms, t);
        }
        terms = cleaned(std::move(terms));
    }
    if (p.is_punct(";"))
        p.next();
    if (!p.at_end())
        p.fail("expected end of input");
    out.terms = std::move(terms);
    return out;
}

EtaCombo parse_identity(std::string_view text)
{
    IdentityFile f = parse_identity_file(text);
    if (f.kind != IdentityFile::Kind::Linear)
        throw ParseError("expected a linear identity, found a U(p) identity", 1, 1);
    return normalize_identity(f.terms);
}

}  // namespace etaprove
