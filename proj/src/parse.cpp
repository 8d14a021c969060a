#include "hopftwist/parse.hpp"

#include <algorithm>
#include <cctype>

namespace hopftwist {

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::invalid_argument("position " + std::to_string(position) + ": " + what), position_(position) {}

namespace {

enum class Tok { Number, Ident, Op, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char ch = static_cast<unsigned char>(s[i]);
        if (std::isspace(ch)) {
            ++i;
        } else if (std::isdigit(ch)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Number, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::isalpha(ch) || ch == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::string_view("+-*/^&()").find(static_cast<char>(ch)) != std::string_view::npos) {
            out.push_back({Tok::Op, std::string(1, static_cast<char>(ch)), i});
            ++i;
        } else {
            throw ParseError(i, std::string("unexpected character '") + static_cast<char>(ch) + "'");
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

/// Index i for names of the form <prefix><i> with 1 <= i <= dim.
std::optional<int> indexed(const std::string& name, const std::string& prefix, int dim) {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
    std::string rest = name.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return std::nullopt;
    if (rest.size() > 2 || rest[0] == '0') return std::nullopt;
    int k = std::stoi(rest);
    if (k < 1 || k > dim) return std::nullopt;
    return k - 1;
}

class Parser {
public:
    Parser(std::string_view text, const ParseContext& ctx) : toks_(tokenize(text)), ctx_(ctx) {}

    Expr run() {
        Expr e = sum();
        if (peek().kind != Tok::End) throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek() const { return toks_[k_]; }
    bool accept_op(const char* op) {
        if (peek().kind == Tok::Op && peek().text == op) {
            ++k_;
            return true;
        }
        return false;
    }
    bool accept_ident(const char* name) {
        if (peek().kind == Tok::Ident && peek().text == name) {
            ++k_;
            return true;
        }
        return false;
    }
    void expect_op(const char* op) {
        if (!accept_op(op)) throw ParseError(peek().pos, std::string("expected '") + op + "'");
    }

    const LiePtr& algebra(std::size_t pos) const {
        if (!ctx_.algebra) throw ParseError(pos, "no Lie algebra in scope for PBW or tensor expressions");
        return ctx_.algebra;
    }

    // ---- arithmetic on the variant

    Geom to_geom(const Expr& e, std::size_t pos) const {
        if (auto g = std::get_if<Geom>(&e)) return *g;
        if (auto s = std::get_if<HbarSeries>(&e)) {
            Geom g(GeomKind::Function, ctx_.dim);
            for (unsigned h = 0; h <= s->order(); ++h) g.add(h, GMono{}, (*s)[h]);
            return g;
        }
        throw ParseError(pos, "cannot combine a geometric object with an algebra element");
    }
    PBWElement to_pbw(const Expr& e, std::size_t pos) const {
        if (auto p = std::get_if<PBWElement>(&e)) return *p;
        if (auto s = std::get_if<HbarSeries>(&e)) {
            PBWElement x(algebra(pos));
            for (unsigned h = 0; h <= s->order(); ++h) x.add(h, Exps{}, (*s)[h]);
            return x;
        }
        throw ParseError(pos, "cannot combine an algebra element with this operand");
    }
    TensorElement to_tensor(const Expr& e, std::size_t pos) const {
        if (auto t = std::get_if<TensorElement>(&e)) return *t;
        PBWElement p = to_pbw(e, pos);
        TensorElement t(p.algebra(), 1);
        for (const auto& [k, c] : p.terms()) {
            Legs l{};
            l[0] = k.m;
            t.add(k.h, l, c);
        }
        return t;
    }

    Expr add(const Expr& a, const Expr& b, bool minus, std::size_t pos) const {
        auto sgn = [&](auto x) { return minus ? -x : x; };
        if (std::holds_alternative<HbarSeries>(a) && std::holds_alternative<HbarSeries>(b))
            return std::get<HbarSeries>(a) + sgn(std::get<HbarSeries>(b));
        if (std::holds_alternative<Geom>(a) || std::holds_alternative<Geom>(b))
            return to_geom(a, pos) + sgn(to_geom(b, pos));
        if (std::holds_alternative<TensorElement>(a) || std::holds_alternative<TensorElement>(b)) {
            TensorElement ta = to_tensor(a, pos), tb = to_tensor(b, pos);
            if (ta.arity() != tb.arity()) throw ParseError(pos, "tensor arities differ");
            return ta + sgn(tb);
        }
        return to_pbw(a, pos) + sgn(to_pbw(b, pos));
    }

    Expr mul(const Expr& a, const Expr& b, std::size_t pos) const {
        if (auto s = std::get_if<HbarSeries>(&a)) {
            if (auto t = std::get_if<HbarSeries>(&b)) return *s * *t;
            if (auto t = std::get_if<TensorElement>(&b)) return scale(*t, *s);
        }
        if (std::holds_alternative<HbarSeries>(b) && std::holds_alternative<TensorElement>(a))
            return scale(std::get<TensorElement>(a), std::get<HbarSeries>(b));
        if (std::holds_alternative<Geom>(a) || std::holds_alternative<Geom>(b)) return to_geom(a, pos) * to_geom(b, pos);
        if (std::holds_alternative<TensorElement>(a) || std::holds_alternative<TensorElement>(b)) {
            TensorElement ta = to_tensor(a, pos), tb = to_tensor(b, pos);
            if (ta.arity() != tb.arity()) throw ParseError(pos, "tensor arities differ");
            return ta * tb;
        }
        return to_pbw(a, pos) * to_pbw(b, pos);
    }

    static TensorElement scale(const TensorElement& t, const HbarSeries& s) {
        TensorElement out(t.algebra(), t.arity());
        for (unsigned h = 0; h <= s.order(); ++h)
            if (!s[h].is_zero()) out += t.hbar_shift(h) * s[h];
        return out;
    }

    Expr tensor(const Expr& a, const Expr& b, std::size_t pos) const {
        TensorElement ta = to_tensor(a, pos), tb = to_tensor(b, pos);
        unsigned n = ta.arity() + tb.arity();
        if (n > kMaxArity) throw ParseError(pos, "too many tensor legs");
        TensorElement out(ta.algebra(), n);
        for (const auto& [ka, ca] : ta.terms())
            for (const auto& [kb, cb] : tb.terms()) {
                Legs l = ka.m;
                for (unsigned j = 0; j < tb.arity(); ++j) l[ta.arity() + j] = kb.m[j];
                out.add(ka.h + kb.h, l, ca * cb);
            }
        return out;
    }

    Expr divide(const Expr& a, const Expr& b, std::size_t pos) const {
        const auto* s = std::get_if<HbarSeries>(&b);
        if (!s) throw ParseError(pos, "division is only by scalars");
        for (unsigned h = 1; h <= s->order(); ++h)
            if (!(*s)[h].is_zero()) throw ParseError(pos, "division by an hbar-dependent quantity");
        if ((*s)[0].is_zero()) throw ParseError(pos, "division by zero");
        HbarSeries inv = HbarSeries::constant((*s)[0].inverse());
        return mul(a, inv, pos);
    }

    Expr power(const Expr& a, unsigned n, std::size_t pos) const {
        Expr r = HbarSeries::constant(Scalar(1));
        for (unsigned j = 0; j < n; ++j) r = mul(r, a, pos);
        return r;
    }

    // ---- grammar

    Expr sum() {
        Expr e = term();
        for (;;) {
            std::size_t pos = peek().pos;
            if (accept_op("+"))
                e = add(e, term(), false, pos);
            else if (accept_op("-"))
                e = add(e, term(), true, pos);
            else
                return e;
        }
    }

    Expr term() {
        Expr e = product();
        for (;;) {
            std::size_t pos = peek().pos;
            if (!accept_ident("ox")) return e;
            e = tensor(e, product(), pos);
        }
    }

    Expr product() {
        Expr e = unary();
        for (;;) {
            std::size_t pos = peek().pos;
            if (accept_op("*") || accept_op("&"))
                e = mul(e, unary(), pos);
            else if (accept_op("/"))
                e = divide(e, unary(), pos);
            else
                return e;
        }
    }

    Expr unary() {
        std::size_t pos = peek().pos;
        if (accept_op("-")) return mul(HbarSeries::constant(Scalar(-1)), unary(), pos);
        return power_expr();
    }

    Expr power_expr() {
        Expr base = atom();
        std::size_t pos = peek().pos;
        if (accept_op("^")) {
            if (peek().kind != Tok::Number) throw ParseError(peek().pos, "expected an integer exponent");
            unsigned long n = std::stoul(toks_[k_++].text);
            if (n > 64) throw ParseError(pos, "exponent too large");
            return power(base, static_cast<unsigned>(n), pos);
        }
        return base;
    }

    Expr atom() {
        const Token t = peek();
        if (t.kind == Tok::Number) {
            ++k_;
            return HbarSeries::constant(Scalar(Gaussian(mpq_class(mpz_class(t.text)))));
        }
        if (accept_op("(")) {
            Expr e = sum();
            expect_op(")");
            return e;
        }
        if (t.kind != Tok::Ident) throw ParseError(t.pos, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
        ++k_;
        return symbol(t);
    }

    Expr symbol(const Token& t) {
        const std::string& name = t.text;
        if (name == "sqrt") {
            expect_op("(");
            const Token p = peek();
            Expr inner = sum();
            expect_op(")");
            auto* s = std::get_if<HbarSeries>(&inner);
            if (!s || !(*s - HbarSeries::constant((*s)[0])).is_zero())
                throw ParseError(p.pos, "sqrt takes a scalar");
            try {
                return HbarSeries::constant(scalar_sqrt((*s)[0]));
            } catch (const std::exception& e) {
                throw ParseError(p.pos, e.what());
            }
        }
        if (name == "hbar") return HbarSeries::hbar();
        if (name == "i") return HbarSeries::constant(Scalar::i());
        if (ctx_.algebra) {
            if (auto k = ctx_.algebra->index_of(name)) return PBWElement::generator(ctx_.algebra, *k);
        }
        if (auto k = indexed(name, "x", ctx_.dim)) return Geom::coordinate(ctx_.dim, *k);
        if (auto k = indexed(name, "del", ctx_.dim)) return Geom::partial(ctx_.dim, *k);
        if (auto k = indexed(name, "dx", ctx_.dim)) return Geom::dx(ctx_.dim, *k);
        if (std::find(ctx_.parameters.begin(), ctx_.parameters.end(), name) != ctx_.parameters.end())
            return HbarSeries::constant(Scalar::param(name));
        throw ParseError(t.pos, "unknown symbol '" + name + "'");
    }

    std::vector<Token> toks_;
    std::size_t k_ = 0;
    const ParseContext& ctx_;
};

}  // namespace

Expr parse_expr(std::string_view text, const ParseContext& ctx) {
    return Parser(text, ctx).run();
}

Geom parse_geom(std::string_view text, const ParseContext& ctx) {
    Expr e = parse_expr(text, ctx);
    if (auto g = std::get_if<Geom>(&e)) return *g;
    if (auto s = std::get_if<HbarSeries>(&e)) {
        Geom g(GeomKind::Function, ctx.dim);
        for (unsigned h = 0; h <= s->order(); ++h) g.add(h, GMono{}, (*s)[h]);
        return g;
    }
    throw ParseError(0, "expected a function, multivector or form");
}

PBWElement parse_pbw(std::string_view text, const ParseContext& ctx) {
    Expr e = parse_expr(text, ctx);
    if (auto p = std::get_if<PBWElement>(&e)) return *p;
    if (auto s = std::get_if<HbarSeries>(&e)) {
        if (!ctx.algebra) throw ParseError(0, "no Lie algebra in scope");
        PBWElement x(ctx.algebra);
        for (unsigned h = 0; h <= s->order(); ++h) x.add(h, Exps{}, (*s)[h]);
        return x;
    }
    throw ParseError(0, "expected an element of the enveloping algebra");
}

TensorElement parse_tensor(std::string_view text, const ParseContext& ctx) {
    Expr e = parse_expr(text, ctx);
    if (auto t = std::get_if<TensorElement>(&e)) return *t;
    throw ParseError(0, "expected a tensor (use 'ox')");
}

Scalar parse_scalar(std::string_view text, const ParseContext& ctx) {
    Expr e = parse_expr(text, ctx);
    auto* s = std::get_if<HbarSeries>(&e);
    if (!s) throw ParseError(0, "expected a scalar");
    for (unsigned h = 1; h <= s->order(); ++h)
        if (!(*s)[h].is_zero()) throw ParseError(0, "expected an hbar-free scalar");
    return (*s)[0];
}

std::string print_expr(const Expr& e) {
    return std::visit([](const auto& v) { return v.to_string(); }, e);
}

}  // namespace hopftwist
