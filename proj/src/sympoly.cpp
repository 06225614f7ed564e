#include "polygraph/sympoly.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace polygraph {

namespace {

bool graded_lex_greater(const SymPoly::Exponent& x, const SymPoly::Exponent& y)
{
    int dx = x[0] + x[1] + x[2] + x[3], dy = y[0] + y[1] + y[2] + y[3];
    if (dx != dy)
        return dx > dy;
    return x > y;
}

} // namespace

void SymPoly::add_term(const Exponent& e, const mpz_class& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymPoly SymPoly::constant(long v)
{
    SymPoly p;
    p.add_term({0, 0, 0, 0}, mpz_class(v));
    return p;
}

SymPoly SymPoly::constant(const mpz_class& v)
{
    SymPoly p;
    p.add_term({0, 0, 0, 0}, v);
    return p;
}

SymPoly SymPoly::var(int index)
{
    if (index < 0 || index > 3)
        throw DomainError("variable index must be 0..3");
    Exponent e{0, 0, 0, 0};
    e[static_cast<std::size_t>(index)] = 1;
    SymPoly p;
    p.add_term(e, 1);
    return p;
}

SymPoly SymPoly::parse(std::string_view text)
{
    SymPoly out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto fail = [&](const std::string& what) { throw ParseError(what, pos); };
    auto number = [&] {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            fail("expected a number");
        return mpz_class(std::string(text.substr(start, pos - start)));
    };
    skip();
    if (pos == text.size())
        fail("empty polynomial");
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size())
            break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        mpz_class coef = sign;
        Exponent e{0, 0, 0, 0};
        bool need_factor = true;
        while (need_factor) {
            skip();
            if (pos == text.size())
                fail("expected a factor");
            char ch = text[pos];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                coef *= number();
            } else if (ch >= 'a' && ch <= 'd') {
                ++pos;
                int power = 1;
                skip();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip();
                    power = static_cast<int>(number().get_si());
                }
                e[static_cast<std::size_t>(ch - 'a')] += power;
            } else {
                fail(std::string("unexpected character '") + ch + "'");
            }
            skip();
            need_factor = pos < text.size() && text[pos] == '*';
            if (need_factor)
                ++pos;
        }
        out.add_term(e, coef);
    }
    return out;
}

int SymPoly::total_degree() const
{
    int best = -1;
    for (const auto& [e, c] : terms_)
        best = std::max(best, e[0] + e[1] + e[2] + e[3]);
    return best;
}

SymPoly SymPoly::operator-() const
{
    SymPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

SymPoly operator+(const SymPoly& p, const SymPoly& q)
{
    SymPoly out = p;
    for (const auto& [e, c] : q.terms_)
        out.add_term(e, c);
    return out;
}

SymPoly operator-(const SymPoly& p, const SymPoly& q)
{
    return p + (-q);
}

SymPoly operator*(const SymPoly& p, const SymPoly& q)
{
    SymPoly out;
    for (const auto& [e1, c1] : p.terms_)
        for (const auto& [e2, c2] : q.terms_) {
            SymPoly::Exponent e;
            for (std::size_t i = 0; i < 4; ++i)
                e[i] = e1[i] + e2[i];
            out.add_term(e, c1 * c2);
        }
    return out;
}

SymPoly SymPoly::pow(int k) const
{
    if (k < 0)
        throw DomainError("negative power");
    SymPoly acc = constant(1), base = *this;
    while (k > 0) {
        if (k & 1)
            acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

std::optional<SymPoly> SymPoly::divide(const SymPoly& q) const
{
    if (q.is_zero())
        throw DomainError("division by the zero polynomial");
    // lex order a > b > c > d: the largest key in the map leads
    const auto& [lq_e, lq_c] = *q.terms_.rbegin();
    SymPoly rest = *this, quot;
    while (!rest.is_zero()) {
        const auto [lp_e, lp_c] = *rest.terms_.rbegin();
        Exponent e;
        for (std::size_t i = 0; i < 4; ++i) {
            e[i] = lp_e[i] - lq_e[i];
            if (e[i] < 0)
                return std::nullopt;
        }
        if (lp_c % lq_c != 0)
            return std::nullopt;
        SymPoly t;
        t.add_term(e, lp_c / lq_c);
        quot = quot + t;
        rest = rest - t * q;
    }
    return quot;
}

Scalar SymPoly::evaluate(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) const
{
    const std::array<Scalar, 4> vals{a, b, c, d};
    std::array<std::vector<Scalar>, 4> powers;
    int top = std::max(total_degree(), 0);
    for (std::size_t i = 0; i < 4; ++i) {
        powers[i].push_back(Scalar(1L));
        for (int k = 1; k <= top; ++k)
            powers[i].push_back(powers[i].back() * vals[i]);
    }
    Scalar acc(0L);
    for (const auto& [e, coef] : terms_) {
        Scalar term{GaussRat(Rational(coef))};
        for (std::size_t i = 0; i < 4; ++i)
            term = term * powers[i][static_cast<std::size_t>(e[i])];
        acc = acc + term;
    }
    return acc;
}

std::string SymPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<std::pair<Exponent, mpz_class>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return graded_lex_greater(x.first, y.first); });
    std::string out;
    for (const auto& [e, c] : sorted) {
        mpz_class mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += static_cast<char>('a' + i);
            if (e[i] > 1)
                mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

} // namespace polygraph
