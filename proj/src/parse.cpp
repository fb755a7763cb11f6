#include "curveforge/parse.hpp"

#include <cctype>
#include <cstdio>

#include "curveforge/poly_ops.hpp"

namespace curveforge {

namespace {

constexpr int kMaxExponent = 256;
constexpr int kMaxDegree = 4096;
constexpr int kMaxDepth = 256;

enum class Tok { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, Colon, LBracket, RBracket, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End)
        return "end of input";
    return "'" + t.text + "'";
}

std::vector<Token> tokenize(const ExprSource& src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    const std::string& s = src.text;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        std::size_t l = line, cl = col;
        if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
                ++j;
            out.push_back({Tok::Number, s.substr(i, j - i), l, cl});
            advance(j - i);
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Tok::Name, s.substr(i, j - i), l, cl});
            advance(j - i);
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case '=': kind = Tok::Equals; break;
        case ':': kind = Tok::Colon; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        default: {
            std::string shown;
            if (std::isprint(c)) {
                shown = std::string("'") + static_cast<char>(c) + "'";
            } else {
                char buf[8];
                std::snprintf(buf, sizeof buf, "0x%02x", c);
                shown = buf;
            }
            throw ParseError("unexpected character " + shown, src.origin, l, cl);
        }
        }
        out.push_back({kind, std::string(1, static_cast<char>(c)), l, cl});
        advance(1);
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

/// Recursive-descent parser over an algebra policy A providing the value
/// type and its operations.
template <class A>
class Parser {
public:
    using Value = typename A::Value;

    Parser(const ExprSource& src, A algebra) : src_(src), tokens_(tokenize(src)), alg_(std::move(algebra)) {}

    Value parse_input(bool allow_equation) {
        Value v = expr();
        if (allow_equation && peek().kind == Tok::Equals) {
            next();
            Value rhs = expr();
            v = alg_.sub(v, rhs);
            if (peek().kind == Tok::Equals)
                fail("'=' may appear only once", peek());
        }
        expect_end();
        return v;
    }

    Value expr() {
        Value v = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool plus = next().kind == Tok::Plus;
            Value r = term();
            v = plus ? alg_.add(v, r) : alg_.sub(v, r);
        }
        return v;
    }

    Value term() {
        Value v = factor();
        while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
            const Token& op = next();
            Value r = factor();
            auto on_error = [&](const std::string& m) { fail(m, op); };
            v = op.kind == Tok::Star ? alg_.mul(v, r, on_error) : alg_.div(v, r, on_error);
        }
        return v;
    }

    Value factor() {
        DepthGuard guard(*this);
        if (peek().kind == Tok::Plus) {
            next();
            return factor();
        }
        if (peek().kind == Tok::Minus) {
            next();
            return alg_.neg(factor());
        }
        Value base = atom();
        if (peek().kind == Tok::Caret) {
            next();
            const Token& e = next();
            if (e.kind != Tok::Number)
                fail("exponent must be a non-negative integer literal", e);
            if (e.text.size() > 4 || std::stoi(e.text) > kMaxExponent)
                fail("exponent " + e.text + " exceeds the limit " + std::to_string(kMaxExponent), e);
            base = alg_.pow(base, std::stoi(e.text), [&](const std::string& m) { fail(m, e); });
        }
        return base;
    }

    Value atom() {
        const Token& t = next();
        switch (t.kind) {
        case Tok::Number:
            return alg_.integer(BigInt(t.text, 10));
        case Tok::Name:
            if (peek().kind == Tok::LParen && alg_.has_function(t.text)) {
                next();
                Value arg = expr();
                expect(Tok::RParen, "')'");
                return alg_.call(t.text, arg, [&](const std::string& m) { fail(m, t); });
            }
            return alg_.variable(t.text, [&](const std::string& m) { fail_unknown(m, t); });
        case Tok::LParen: {
            Value v = expr();
            expect(Tok::RParen, "')'");
            return v;
        }
        default:
            fail("expected a number, a variable or '(' but found " + describe(t), t);
        }
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() {
        const Token& t = tokens_[pos_];
        if (pos_ + 1 < tokens_.size())
            ++pos_;
        return t;
    }
    void expect(Tok kind, const std::string& what) {
        const Token& t = next();
        if (t.kind != kind)
            fail("expected " + what + " but found " + describe(t), t);
    }
    void expect_end() {
        const Token& t = peek();
        if (t.kind == Tok::End)
            return;
        if (t.kind == Tok::Name || t.kind == Tok::Number || t.kind == Tok::LParen)
            fail("unexpected " + describe(t) + " (implicit multiplication is not supported; use '*')", t);
        fail("unexpected " + describe(t), t);
    }

    [[noreturn]] void fail(const std::string& msg, const Token& t) const {
        throw ParseError(msg, src_.origin, t.line, t.column);
    }
    [[noreturn]] void fail_unknown(const std::string& msg, const Token& t) const {
        throw UnknownVariable(msg, src_.origin, t.line, t.column);
    }

private:
    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > kMaxDepth)
                parser.fail("expression nested too deeply", parser.peek());
        }
        ~DepthGuard() { --parser.depth_; }
        Parser& parser;
    };

    const ExprSource& src_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;
    A alg_;
};

template <std::size_t N>
struct PolyAlgebra {
    using Value = Polynomial<Rat, N>;
    const VarNames<N>* names;

    Value integer(const BigInt& n) const { return Value(Rat(n)); }
    bool has_function(const std::string&) const { return false; }
    template <class Fail>
    Value call(const std::string&, const Value&, Fail&&) const { return {}; }
    template <class Fail>
    Value variable(const std::string& name, Fail&& fail) const {
        for (std::size_t i = 0; i < N; ++i)
            if ((*names)[i] == name)
                return Value::variable(i);
        fail("unknown variable '" + name + "'");
        return {};
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    template <class Fail>
    Value mul(const Value& a, const Value& b, Fail&& fail) const {
        if (too_large(a.degree() + b.degree()))
            fail("product exceeds the degree limit " + std::to_string(kMaxDegree));
        return a * b;
    }
    Value neg(const Value& a) const { return -a; }
    template <class Fail>
    Value div(const Value& a, const Value& b, Fail&& fail) const {
        if (b.is_zero())
            fail("division by zero");
        if (!b.is_constant())
            fail("division by a non-constant polynomial");
        return a * b.constant_term().inverse();
    }
    template <class Fail>
    Value pow(const Value& a, int e, Fail&& fail) const {
        if (a.degree().is_finite() && static_cast<long>(a.degree().value()) * e > kMaxDegree)
            fail("power exceeds the degree limit " + std::to_string(kMaxDegree));
        return a.pow(static_cast<unsigned>(e));
    }
    static bool too_large(Degree d) { return d.is_finite() && d.value() > kMaxDegree; }
};

struct FractionAlgebra {
    struct Value {
        UniPoly<Rat> num;
        UniPoly<Rat> den{Rat(1)};
    };
    std::string var;

    static Value reduce(Value v) {
        if (v.num.is_zero())
            return {UniPoly<Rat>(), UniPoly<Rat>(Rat(1))};
        auto g = gcd_poly(v.num, v.den);
        v.num = divmod(v.num, g).first;
        v.den = divmod(v.den, g).first;
        Rat lc = v.den.leading_coefficient().inverse();
        v.num *= lc;
        v.den *= lc;
        return v;
    }

    Value integer(const BigInt& n) const { return {UniPoly<Rat>(Rat(n)), UniPoly<Rat>(Rat(1))}; }
    bool has_function(const std::string&) const { return false; }
    template <class Fail>
    Value call(const std::string&, const Value& v, Fail&&) const { return v; }
    template <class Fail>
    Value variable(const std::string& name, Fail&& fail) const {
        if (name != var)
            fail("unknown variable '" + name + "'");
        return {UniPoly<Rat>::variable(0), UniPoly<Rat>(Rat(1))};
    }
    Value add(const Value& a, const Value& b) const { return reduce({a.num * b.den + b.num * a.den, a.den * b.den}); }
    Value sub(const Value& a, const Value& b) const { return reduce({a.num * b.den - b.num * a.den, a.den * b.den}); }
    template <class Fail>
    Value mul(const Value& a, const Value& b, Fail&& fail) const {
        if (PolyAlgebra<1>::too_large(a.num.degree() + b.num.degree()) ||
            PolyAlgebra<1>::too_large(a.den.degree() + b.den.degree()))
            fail("product exceeds the degree limit " + std::to_string(kMaxDegree));
        return reduce({a.num * b.num, a.den * b.den});
    }
    Value neg(const Value& a) const { return {-a.num, a.den}; }
    template <class Fail>
    Value div(const Value& a, const Value& b, Fail&& fail) const {
        if (b.num.is_zero())
            fail("division by zero");
        return reduce({a.num * b.den, a.den * b.num});
    }
    template <class Fail>
    Value pow(const Value& a, int e, Fail&& fail) const {
        long d = std::max(a.num.is_zero() ? 0 : a.num.degree().value(), a.den.degree().value());
        if (d * e > kMaxDegree)
            fail("power exceeds the degree limit " + std::to_string(kMaxDegree));
        return {a.num.pow(static_cast<unsigned>(e)), a.den.pow(static_cast<unsigned>(e))};
    }
};

struct ScalarAlgebra {
    using Value = QuadExt;

    Value integer(const BigInt& n) const { return QuadExt(Rat(n)); }
    bool has_function(const std::string& name) const { return name == "sqrt"; }
    template <class Fail>
    Value call(const std::string&, const Value& arg, Fail&& fail) const {
        if (!arg.is_rational())
            fail("sqrt takes a rational argument");
        return QuadExt::sqrt_of(arg.a());
    }
    template <class Fail>
    Value variable(const std::string& name, Fail&& fail) const {
        if (name == "i")
            return QuadExt::make(Rat(0), Rat(1), -1);
        fail("unknown name '" + name + "' in a scalar");
        return {};
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    template <class Fail>
    Value mul(const Value& a, const Value& b, Fail&&) const { return a * b; }
    Value neg(const Value& a) const { return -a; }
    template <class Fail>
    Value div(const Value& a, const Value& b, Fail&& fail) const {
        if (b.is_zero())
            fail("division by zero");
        return a / b;
    }
    template <class Fail>
    Value pow(const Value& a, int e, Fail&&) const {
        Value r(1);
        for (int k = 0; k < e; ++k)
            r *= a;
        return r;
    }
};

template <class K>
std::string coefficient_text(const K& c, bool& negative, bool& is_unit) {
    if constexpr (std::is_same_v<K, Rat>) {
        negative = c.sign() < 0;
        is_unit = abs(c).is_one();
        return abs(c).str();
    } else {
        if (c.is_rational())
            return coefficient_text(c.a(), negative, is_unit);
        if (c.a().is_zero()) {
            negative = c.b().sign() < 0;
            is_unit = false;
            return (negative ? -c : c).str();
        }
        negative = false;
        is_unit = false;
        return "(" + c.str() + ")";
    }
}

}  // namespace

template <std::size_t N>
Polynomial<Rat, N> parse_poly(const ExprSource& src, const VarNames<N>& names) {
    Parser<PolyAlgebra<N>> p(src, PolyAlgebra<N>{&names});
    return p.parse_input(true);
}

std::pair<UniPoly<Rat>, UniPoly<Rat>> parse_fraction(const ExprSource& src, const std::string& var) {
    Parser<FractionAlgebra> p(src, FractionAlgebra{var});
    auto v = p.parse_input(false);
    return {v.num, v.den};
}

QuadExt parse_scalar(const ExprSource& src) {
    Parser<ScalarAlgebra> p(src, ScalarAlgebra{});
    try {
        return p.parse_input(false);
    } catch (const IncompatibleField& e) {
        throw ParseError(e.what(), src.origin, 1, 1);
    }
}

std::vector<std::string> split_top_level(const std::string& text, char sep) {
    std::vector<std::string> parts(1);
    int depth = 0;
    for (char c : text) {
        if (c == '(' || c == '[')
            ++depth;
        else if (c == ')' || c == ']')
            --depth;
        if (c == sep && depth == 0)
            parts.emplace_back();
        else
            parts.back() += c;
    }
    return parts;
}

std::array<QuadExt, 3> parse_point(const ExprSource& src) {
    const std::string& s = src.text;
    auto open = s.find_first_not_of(" \t\n");
    auto close = s.find_last_not_of(" \t\n");
    if (open == std::string::npos || s[open] != '[' || s[close] != ']')
        throw ParseError("a point is written [a:b:c]", src.origin, 1, open == std::string::npos ? 1 : open + 1);
    auto parts = split_top_level(s.substr(open + 1, close - open - 1), ':');
    if (parts.size() != 3)
        throw ParseError("a point needs exactly three coordinates", src.origin, 1, open + 1);
    std::array<QuadExt, 3> pt;
    std::int64_t field = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        pt[i] = parse_scalar({parts[i], src.origin + " (coordinate " + std::to_string(i + 1) + ")"});
        try {
            field = join_fields(field, pt[i].d());
        } catch (const IncompatibleField& e) {
            throw ParseError(e.what(), src.origin, 1, open + 1);
        }
    }
    if (pt[0].is_zero() && pt[1].is_zero() && pt[2].is_zero())
        throw ParseError("[0:0:0] is not a projective point", src.origin, 1, open + 1);
    return pt;
}

template <class K, std::size_t N>
std::string render_poly(const Polynomial<K, N>& p, const VarNames<N>& names) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool negative = false, unit = false;
        std::string coef = coefficient_text(c, negative, unit);
        std::string mono;
        for (std::size_t i = 0; i < N; ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names[i];
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        std::string body = mono.empty() ? coef : (unit ? mono : coef + "*" + mono);
        if (first)
            out += negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

std::string render_fraction(const UniPoly<Rat>& num, const UniPoly<Rat>& den, const std::string& var) {
    const VarNames<1> names{var};
    std::string n = render_poly(num, names);
    if (den == UniPoly<Rat>(Rat(1)))
        return n;
    if (num.size() > 1)
        n = "(" + n + ")";
    std::string d = render_poly(den, names);
    bool simple = den.size() == 1 && den.leading_coefficient().is_one() && !den.is_constant();
    if (!simple)
        d = "(" + d + ")";
    return n + "/" + d;
}

std::string render_point(const std::array<QuadExt, 3>& p) {
    return "[" + p[0].str() + ":" + p[1].str() + ":" + p[2].str() + "]";
}

CurveInput parse_curve(const ExprSource& src) {
    CurveInput in;
    try {
        in.curve = parse_poly<3>(src, kProjectiveNames);
    } catch (const UnknownVariable&) {
        in.affine = true;
        in.affine_poly = parse_poly<2>(src, kAffineNames);
        if (in.affine_poly.is_zero())
            throw InputError("the zero polynomial does not define a curve");
        in.curve = homogenize(in.affine_poly);
        return in;
    }
    if (in.curve.is_zero())
        throw InputError("the zero polynomial does not define a curve");
    if (!in.curve.is_homogeneous())
        throw InputError("a curve in X, Y, Z must be homogeneous (use x, y for affine input)");
    return in;
}

template Polynomial<Rat, 1> parse_poly<1>(const ExprSource&, const VarNames<1>&);
template Polynomial<Rat, 2> parse_poly<2>(const ExprSource&, const VarNames<2>&);
template Polynomial<Rat, 3> parse_poly<3>(const ExprSource&, const VarNames<3>&);

template std::string render_poly<Rat, 1>(const Polynomial<Rat, 1>&, const VarNames<1>&);
template std::string render_poly<Rat, 2>(const Polynomial<Rat, 2>&, const VarNames<2>&);
template std::string render_poly<Rat, 3>(const Polynomial<Rat, 3>&, const VarNames<3>&);
template std::string render_poly<QuadExt, 1>(const Polynomial<QuadExt, 1>&, const VarNames<1>&);
template std::string render_poly<QuadExt, 2>(const Polynomial<QuadExt, 2>&, const VarNames<2>&);
template std::string render_poly<QuadExt, 3>(const Polynomial<QuadExt, 3>&, const VarNames<3>&);

}  // namespace curveforge
