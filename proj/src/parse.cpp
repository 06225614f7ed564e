#include "polygraph/parse.hpp"

#include <cctype>
#include <cstdlib>
#include <string>
#include <vector>

namespace polygraph {

namespace {

enum class Tok { number, ident, op, lparen, rparen, end };

struct Token
{
    Tok kind;
    std::string text;
    std::size_t pos;
    bool is_float = false;
};

std::vector<Token> lex(std::string_view s)
{
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < s.size()) {
        char ch = s[k];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++k;
            continue;
        }
        std::size_t start = k;
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            bool is_float = false;
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
                ++k;
            if (k < s.size() && s[k] == '.') {
                is_float = true;
                ++k;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
                    ++k;
            }
            if (k < s.size() && (s[k] == 'e' || s[k] == 'E')) {
                std::size_t save = k;
                ++k;
                if (k < s.size() && (s[k] == '+' || s[k] == '-'))
                    ++k;
                if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
                    is_float = true;
                    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
                        ++k;
                } else {
                    k = save;
                }
            }
            std::string text(s.substr(start, k - start));
            if (text == ".")
                throw ParseError("malformed number", start);
            out.push_back({Tok::number, text, start, is_float});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            if (ch != 'x' && ch != 'y' && ch != 'i')
                throw ParseError(std::string("unsupported variable name '") + ch + "'", start);
            out.push_back({Tok::ident, std::string(1, ch), start});
            ++k;
            continue;
        }
        switch (ch) {
        case '+':
        case '-':
        case '*':
        case '/':
        case '^':
            out.push_back({Tok::op, std::string(1, ch), start});
            break;
        case '(':
            out.push_back({Tok::lparen, "(", start});
            break;
        case ')':
            out.push_back({Tok::rparen, ")", start});
            break;
        default:
            throw ParseError(std::string("unexpected character '") + ch + "'", start);
        }
        ++k;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

template <class F>
F make_number(const Token& t);

template <>
GaussRat make_number<GaussRat>(const Token& t)
{
    return GaussRat(GaussRat::parse_rational(t.text));
}

template <>
Complex make_number<Complex>(const Token& t)
{
    return Complex(std::strtod(t.text.c_str(), nullptr), 0.0);
}

template <class F>
class Parser
{
  public:
    using P = BiPoly<F>;

    explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

    P parse()
    {
        P p = expr();
        if (peek().kind != Tok::end)
            throw ParseError("unexpected '" + peek().text + "'", peek().pos);
        return p;
    }

  private:
    const Token& peek() const { return toks_[k_]; }
    const Token& next() { return toks_[k_++]; }
    bool at_op(char c) const { return peek().kind == Tok::op && peek().text[0] == c; }

    P expr()
    {
        P acc = term();
        while (at_op('+') || at_op('-')) {
            bool minus = next().text[0] == '-';
            P rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    bool starts_atom() const
    {
        Tok k = peek().kind;
        return k == Tok::number || k == Tok::ident || k == Tok::lparen;
    }

    P term()
    {
        P acc = unary();
        for (;;) {
            if (at_op('*')) {
                next();
                acc = acc * unary();
            } else if (at_op('/')) {
                std::size_t pos = next().pos;
                P den = unary();
                if (!den.is_constant())
                    throw ParseError("division by a non-constant expression", pos);
                F d = den.coeff(0, 0);
                if (FieldTraits<F>::is_zero(d))
                    throw ParseError("division by zero", pos);
                acc = (F(1) / d) * acc;
            } else if (starts_atom()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }

    P unary()
    {
        if (at_op('-')) {
            next();
            return -unary();
        }
        if (at_op('+')) {
            next();
            return unary();
        }
        return power();
    }

    P power()
    {
        P base = atom();
        if (at_op('^')) {
            std::size_t pos = next().pos;
            const Token& e = peek();
            if (e.kind != Tok::number || e.is_float)
                throw ParseError("exponent must be a non-negative integer literal", e.kind == Tok::end ? pos : e.pos);
            next();
            if (e.text.size() > 4)
                throw ParseError("exponent too large", e.pos);
            base = base.pow(std::stoi(e.text));
        }
        return base;
    }

    P atom()
    {
        const Token& t = next();
        switch (t.kind) {
        case Tok::number:
            return P::constant(make_number<F>(t));
        case Tok::ident:
            if (t.text == "x")
                return P::x();
            if (t.text == "y")
                return P::y();
            return P::constant(imag_unit());
        case Tok::lparen: {
            P inner = expr();
            if (peek().kind != Tok::rparen)
                throw ParseError("expected ')'", peek().pos);
            next();
            return inner;
        }
        case Tok::end:
            throw ParseError("unexpected end of input", t.pos);
        default:
            throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    static F imag_unit()
    {
        if constexpr (FieldTraits<F>::exact)
            return GaussRat::i();
        else
            return Complex(0.0, 1.0);
    }

    const std::vector<Token>& toks_;
    std::size_t k_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text)
{
    auto toks = lex(text);
    bool any_float = false;
    for (const auto& t : toks)
        any_float = any_float || t.is_float;
    if (any_float)
        return Polynomial(Parser<Complex>(toks).parse());
    return Polynomial(Parser<GaussRat>(toks).parse());
}

Scalar parse_scalar(std::string_view text)
{
    Polynomial p = parse_polynomial(text);
    if (p.deg_x() != 0 || p.deg_y() != 0)
        throw ParseError("expected a constant, got '" + std::string(text) + "'", 0);
    if (p.is_exact())
        return Scalar(p.exact().coeff(0, 0));
    return Scalar(p.to_float().coeff(0, 0));
}

} // namespace polygraph
