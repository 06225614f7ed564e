#ifndef POLYGRAPH_UNIPOLY_HPP
#define POLYGRAPH_UNIPOLY_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "polygraph/scalar.hpp"

namespace polygraph {

/// Dense univariate polynomial, coefficients in ascending order.
/// Trailing zeros are always trimmed, so `lead()` is nonzero unless the
/// polynomial is zero. Float coefficients are trimmed only when exactly zero;
/// tolerance-based trimming is explicit (see `trimmed`).
template <class F>
class UniPoly
{
  public:
    using Traits = FieldTraits<F>;

    UniPoly() = default;
    explicit UniPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(F v) { return UniPoly(std::vector<F>{std::move(v)}); }
    static UniPoly monomial(F v, int k)
    {
        std::vector<F> c(static_cast<std::size_t>(k) + 1, F(0));
        c.back() = std::move(v);
        return UniPoly(std::move(c));
    }
    /// x - r
    static UniPoly linear_root(const F& r) { return UniPoly({-r, F(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int k) const
    {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : F(0);
    }
    const F& lead() const { return c_.back(); }

    F operator()(const F& x) const
    {
        F acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    UniPoly operator-() const
    {
        UniPoly r = *this;
        for (auto& v : r.c_)
            v = -v;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b)
    {
        std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k)
            c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k)
            c[k] += b.c_[k];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (Traits::is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const F& s, const UniPoly& p)
    {
        std::vector<F> c = p.c_;
        for (auto& v : c)
            v = s * v;
        return UniPoly(std::move(c));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly pow(int k) const
    {
        UniPoly r = constant(F(1));
        for (int i = 0; i < k; ++i)
            r = r * *this;
        return r;
    }

    UniPoly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<F> c(c_.size() - 1, F(0));
        for (std::size_t k = 1; k < c_.size(); ++k)
            c[k - 1] = F(static_cast<long>(k)) * c_[k];
        return UniPoly(std::move(c));
    }

    /// Euclidean division: *this = q * d + r with deg r < deg d.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const
    {
        if (d.is_zero())
            throw DomainError("polynomial division by zero");
        std::vector<F> rem = c_;
        int dd = d.degree();
        int nq = degree() - dd;
        if (nq < 0)
            return {UniPoly{}, *this};
        std::vector<F> quo(static_cast<std::size_t>(nq) + 1, F(0));
        F inv_lead = F(1) / d.lead();
        for (int k = nq; k >= 0; --k) {
            F q = rem[static_cast<std::size_t>(k + dd)] * inv_lead;
            quo[static_cast<std::size_t>(k)] = q;
            if (Traits::is_zero(q))
                continue;
            for (int j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(k + j)] -= q * d.c_[static_cast<std::size_t>(j)];
            rem[static_cast<std::size_t>(k + dd)] = F(0);
        }
        rem.resize(static_cast<std::size_t>(dd));
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

    UniPoly monic() const
    {
        if (is_zero())
            return {};
        return (F(1) / lead()) * *this;
    }

    /// p(a*x + b)
    UniPoly compose_affine(const F& a, const F& b) const
    {
        UniPoly lin({b, a});
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * lin + constant(*it);
        return acc;
    }

    template <class G, class Fn>
    UniPoly<G> map(Fn fn) const
    {
        std::vector<G> c;
        c.reserve(c_.size());
        for (const auto& v : c_)
            c.push_back(fn(v));
        return UniPoly<G>(std::move(c));
    }

    UniPoly<Complex> to_float() const
    {
        return map<Complex>([](const F& v) { return Traits::to_complex(v); });
    }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    double norm_inf() const
    {
        double m = 0.0;
        for (const auto& v : c_)
            m = std::max(m, Traits::magnitude(v));
        return m;
    }

    /// Descending-power rendering, e.g. "x^2 - 3/2*x + 1".
    std::string to_string(char var = 'x') const;

  private:
    void trim()
    {
        while (!c_.empty() && Traits::is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<F> c_;
};

/// Zeroes every coefficient whose magnitude is at most rel_tol times the
/// largest one; the result therefore satisfies the float-mode invariant
/// "leading coefficient above tolerance".
UniPoly<Complex> trimmed(const UniPoly<Complex>& p, double rel_tol);

/// Monic gcd; gcd(0, 0) = 0. Exact arithmetic only.
template <ExactField F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b)
{
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <ExactField F>
UniPoly<F> gcd_all(const std::vector<UniPoly<F>>& ps)
{
    UniPoly<F> g;
    for (const auto& p : ps) {
        g = gcd(g, p);
        if (g.degree() == 0)
            break;
    }
    return g;
}

/// Exact quotient; throws if d does not divide p.
template <ExactField F>
UniPoly<F> divide_exact(const UniPoly<F>& p, const UniPoly<F>& d)
{
    auto [q, r] = p.divmod(d);
    if (!r.is_zero())
        throw Error("internal", "inexact univariate division");
    return q;
}

/// p / gcd(p, p'), made monic.
template <ExactField F>
UniPoly<F> squarefree_part(const UniPoly<F>& p)
{
    if (p.degree() <= 0)
        return p.is_zero() ? p : UniPoly<F>::constant(F(1));
    return divide_exact(p, gcd(p, p.derivative())).monic();
}

namespace detail {
std::string format_term(const std::string& coeff, bool is_one, bool is_minus_one,
                        const std::string& monomial, bool first);
bool needs_parens(const std::string& coeff);
} // namespace detail

template <class F>
std::string UniPoly<F>::to_string(char var) const
{
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const F& v = c_[static_cast<std::size_t>(k)];
        if (Traits::is_zero(v))
            continue;
        std::string mono;
        if (k >= 1)
            mono = std::string(1, var);
        if (k >= 2)
            mono += "^" + std::to_string(k);
        std::string cs = Traits::to_string(v);
        out += detail::format_term(cs, v == F(1), v == F(-1), mono, first);
        first = false;
    }
    return out;
}

} // namespace polygraph

#endif
