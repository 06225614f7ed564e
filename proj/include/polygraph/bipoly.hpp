#ifndef POLYGRAPH_BIPOLY_HPP
#define POLYGRAPH_BIPOLY_HPP

#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "polygraph/unipoly.hpp"

namespace polygraph {

enum class Axis { x, y };

inline Axis other(Axis a) { return a == Axis::x ? Axis::y : Axis::x; }

/// Dense bivariate polynomial sum c_ij x^i y^j stored row-major by x power.
/// Stored degrees are always the actual maximal nonzero powers; the zero
/// polynomial has no coefficients and reports degrees 0.
template <class F>
class BiPoly
{
  public:
    using Traits = FieldTraits<F>;
    using Field = F;
    using Uni = UniPoly<F>;

    BiPoly() = default;

    /// rows[i][j] is the coefficient of x^i y^j; ragged rows are allowed.
    explicit BiPoly(std::vector<std::vector<F>> rows) : c_(std::move(rows)) { normalize(); }

    static BiPoly constant(F v) { return BiPoly({{std::move(v)}}); }
    static BiPoly x() { return BiPoly({{F(0)}, {F(1)}}); }
    static BiPoly y() { return BiPoly({{F(0), F(1)}}); }
    static BiPoly monomial(F v, int i, int j)
    {
        std::vector<std::vector<F>> rows(static_cast<std::size_t>(i) + 1);
        rows.back().assign(static_cast<std::size_t>(j) + 1, F(0));
        rows.back().back() = std::move(v);
        return BiPoly(std::move(rows));
    }

    /// Sum of a_k(x) y^k (axis y) or b_k(y) x^k (axis x).
    static BiPoly from_coeff_polys(const std::vector<Uni>& ps, Axis var)
    {
        std::vector<std::vector<F>> rows;
        for (std::size_t k = 0; k < ps.size(); ++k) {
            for (int t = 0; t <= ps[k].degree(); ++t) {
                std::size_t i = var == Axis::y ? static_cast<std::size_t>(t) : k;
                std::size_t j = var == Axis::y ? k : static_cast<std::size_t>(t);
                if (rows.size() <= i)
                    rows.resize(i + 1);
                if (rows[i].size() <= j)
                    rows[i].resize(j + 1, F(0));
                rows[i][j] = ps[k].coeff(t);
            }
        }
        return BiPoly(std::move(rows));
    }

    /// Lift a univariate polynomial in the given variable.
    static BiPoly from_uni(const Uni& p, Axis var)
    {
        if (var == Axis::y)
            return from_coeff_polys({p}, Axis::x);
        return from_coeff_polys({p}, Axis::y);
    }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return deg_x() == 0 && deg_y() == 0; }
    int deg_x() const { return c_.empty() ? 0 : static_cast<int>(c_.size()) - 1; }
    int deg_y() const { return c_.empty() ? 0 : dy_; }
    int degree(Axis a) const { return a == Axis::x ? deg_x() : deg_y(); }

    F coeff(int i, int j) const
    {
        if (i < 0 || j < 0 || i >= static_cast<int>(c_.size()))
            return F(0);
        const auto& row = c_[static_cast<std::size_t>(i)];
        return j < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j)] : F(0);
    }

    /// All nonzero terms as (i, j, c_ij), ordered by i then j.
    std::vector<std::tuple<int, int, F>> terms() const
    {
        std::vector<std::tuple<int, int, F>> out;
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < c_[i].size(); ++j)
                if (!Traits::is_zero(c_[i][j]))
                    out.emplace_back(static_cast<int>(i), static_cast<int>(j), c_[i][j]);
        return out;
    }

    F operator()(const F& xv, const F& yv) const { return eval_partial(xv, Axis::x)(yv); }

    /// Substitute `u` for the variable `axis`: Phi(u, y) for axis x,
    /// Phi(x, u) for axis y.
    Uni eval_partial(const F& u, Axis axis) const
    {
        std::vector<F> out(static_cast<std::size_t>(degree(other(axis))) + 1, F(0));
        if (axis == Axis::x) {
            F pw(1);
            for (std::size_t i = 0; i < c_.size(); ++i) {
                for (std::size_t j = 0; j < c_[i].size(); ++j)
                    out[j] += c_[i][j] * pw;
                pw = pw * u;
            }
        } else {
            for (std::size_t i = 0; i < c_.size(); ++i) {
                F acc(0);
                for (auto it = c_[i].rbegin(); it != c_[i].rend(); ++it)
                    acc = acc * u + *it;
                out[i] = acc;
            }
        }
        if constexpr (!Traits::exact)
            for (const auto& v : out)
                require_finite(v, "partial evaluation");
        return Uni(std::move(out));
    }

    /// Coefficient polynomials in the other variable: for var = y these are
    /// a_0(x), ..., a_d(x); for var = x, b_0(y), ..., b_e(y).
    std::vector<Uni> coeff_polys(Axis var) const
    {
        std::vector<Uni> out;
        if (is_zero())
            return out;
        if (var == Axis::y) {
            for (int j = 0; j <= dy_; ++j) {
                std::vector<F> col;
                for (std::size_t i = 0; i < c_.size(); ++i)
                    col.push_back(coeff(static_cast<int>(i), j));
                out.emplace_back(std::move(col));
            }
        } else {
            for (const auto& row : c_)
                out.emplace_back(row);
        }
        return out;
    }

    /// Leading coefficient in `var`: a_d(x) for var y, b_e(y) for var x.
    Uni lead_coeff(Axis var) const
    {
        auto cs = coeff_polys(var);
        return cs.empty() ? Uni{} : cs.back();
    }

    BiPoly swapped() const
    {
        std::vector<std::vector<F>> rows(static_cast<std::size_t>(deg_y()) + 1);
        for (auto& [i, j, v] : terms()) {
            auto& row = rows[static_cast<std::size_t>(j)];
            if (row.size() <= static_cast<std::size_t>(i))
                row.resize(static_cast<std::size_t>(i) + 1, F(0));
            row[static_cast<std::size_t>(i)] = v;
        }
        return BiPoly(std::move(rows));
    }

    BiPoly derivative(Axis var) const
    {
        std::vector<std::vector<F>> rows(c_.size());
        for (auto& [i, j, v] : terms()) {
            int di = var == Axis::x ? i - 1 : i;
            int dj = var == Axis::y ? j - 1 : j;
            if (di < 0 || dj < 0)
                continue;
            long factor = var == Axis::x ? i : j;
            auto& row = rows[static_cast<std::size_t>(di)];
            if (row.size() <= static_cast<std::size_t>(dj))
                row.resize(static_cast<std::size_t>(dj) + 1, F(0));
            row[static_cast<std::size_t>(dj)] = F(factor) * v;
        }
        return BiPoly(std::move(rows));
    }

    /// L(x) = Phi(x, x).
    Uni diagonal() const
    {
        std::vector<F> out(static_cast<std::size_t>(deg_x() + deg_y()) + 1, F(0));
        for (auto& [i, j, v] : terms())
            out[static_cast<std::size_t>(i + j)] += v;
        return Uni(std::move(out));
    }

    int total_degree() const
    {
        int t = 0;
        for (auto& [i, j, v] : terms())
            t = std::max(t, i + j);
        return t;
    }

    bool is_homogeneous() const
    {
        auto ts = terms();
        if (ts.empty())
            return true;
        int t = std::get<0>(ts.front()) + std::get<1>(ts.front());
        for (auto& [i, j, v] : ts)
            if (i + j != t)
                return false;
        return true;
    }

    BiPoly operator-() const { return F(-1) * *this; }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b)
    {
        std::vector<std::vector<F>> rows(std::max(a.c_.size(), b.c_.size()));
        for (const BiPoly* p : {&a, &b})
            for (std::size_t i = 0; i < p->c_.size(); ++i) {
                auto& row = rows[i];
                if (row.size() < p->c_[i].size())
                    row.resize(p->c_[i].size(), F(0));
                for (std::size_t j = 0; j < p->c_[i].size(); ++j)
                    row[j] += p->c_[i][j];
            }
        return BiPoly(std::move(rows));
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<std::vector<F>> rows(a.c_.size() + b.c_.size() - 1,
                                         std::vector<F>(static_cast<std::size_t>(a.dy_ + b.dy_) + 1, F(0)));
        for (auto& [i, j, v] : a.terms())
            for (auto& [k, l, w] : b.terms())
                rows[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(j + l)] += v * w;
        return BiPoly(std::move(rows));
    }
    friend BiPoly operator*(const F& s, const BiPoly& p)
    {
        auto rows = p.c_;
        for (auto& row : rows)
            for (auto& v : row)
                v = s * v;
        return BiPoly(std::move(rows));
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }

    BiPoly pow(int k) const
    {
        BiPoly r = constant(F(1));
        for (int i = 0; i < k; ++i)
            r = r * *this;
        return r;
    }

    /// Substitute x -> px + qy + r and y -> sx + ty + w.
    BiPoly substitute_linear(const BiPoly& xs, const BiPoly& ys) const
    {
        BiPoly acc;
        std::vector<BiPoly> xpow{constant(F(1))}, ypow{constant(F(1))};
        for (int i = 1; i <= deg_x(); ++i)
            xpow.push_back(xpow.back() * xs);
        for (int j = 1; j <= deg_y(); ++j)
            ypow.push_back(ypow.back() * ys);
        for (auto& [i, j, v] : terms())
            acc = acc + v * (xpow[static_cast<std::size_t>(i)] * ypow[static_cast<std::size_t>(j)]);
        return acc;
    }

    /// c * Phi(a x + b, a y + b). Requires a != 0 and c != 0.
    BiPoly affine_transform(const F& a, const F& b, const F& c) const
    {
        if (Traits::is_zero(a) || Traits::is_zero(c))
            throw DomainError("affine_transform requires a != 0 and c != 0");
        BiPoly xs = a * x() + constant(b);
        BiPoly ys = a * y() + constant(b);
        return c * substitute_linear(xs, ys);
    }

    template <class G, class Fn>
    BiPoly<G> map(Fn fn) const
    {
        std::vector<std::vector<G>> rows(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (const auto& v : c_[i])
                rows[i].push_back(fn(v));
        return BiPoly<G>(std::move(rows));
    }

    BiPoly<Complex> to_float() const
    {
        return map<Complex>([](const F& v) { return Traits::to_complex(v); });
    }

    double norm_inf() const
    {
        double m = 0.0;
        for (auto& [i, j, v] : terms())
            m = std::max(m, Traits::magnitude(v));
        return m;
    }

    /// Human-readable form in the parser grammar, terms by descending total
    /// degree then descending y power.
    std::string to_string() const;

  private:
    void normalize()
    {
        dy_ = 0;
        for (auto& row : c_) {
            while (!row.empty() && Traits::is_zero(row.back()))
                row.pop_back();
        }
        while (!c_.empty() && c_.back().empty())
            c_.pop_back();
        for (const auto& row : c_)
            dy_ = std::max(dy_, static_cast<int>(row.size()) - 1);
    }

    std::vector<std::vector<F>> c_;
    int dy_ = 0;
};

template <class F>
std::string BiPoly<F>::to_string() const
{
    auto ts = terms();
    if (ts.empty())
        return "0";
    std::stable_sort(ts.begin(), ts.end(), [](const auto& l, const auto& r) {
        int tl = std::get<0>(l) + std::get<1>(l), tr = std::get<0>(r) + std::get<1>(r);
        if (tl != tr)
            return tl > tr;
        return std::get<1>(l) > std::get<1>(r);
    });
    std::string out;
    bool first = true;
    for (auto& [i, j, v] : ts) {
        std::string mono;
        auto add = [&](char var, int k) {
            if (k == 0)
                return;
            if (!mono.empty())
                mono += "*";
            mono += var;
            if (k > 1)
                mono += "^" + std::to_string(k);
        };
        add('x', i);
        add('y', j);
        out += detail::format_term(Traits::to_string(v), v == F(1), v == F(-1), mono, first);
        first = false;
    }
    return out;
}

using ExactPoly = BiPoly<GaussRat>;
using FloatPoly = BiPoly<Complex>;

/// Runtime-tagged bivariate polynomial: the mode is decided once, at parse
/// or construction time, and never changes.
class Polynomial
{
  public:
    Polynomial() : p_(ExactPoly{}) {}
    Polynomial(ExactPoly p) : p_(std::move(p)) {}
    Polynomial(FloatPoly p) : p_(std::move(p)) {}

    bool is_exact() const { return std::holds_alternative<ExactPoly>(p_); }
    const ExactPoly& exact() const
    {
        if (!is_exact())
            throw ModeError("operation requires an exact polynomial");
        return std::get<ExactPoly>(p_);
    }
    FloatPoly to_float() const
    {
        return is_exact() ? std::get<ExactPoly>(p_).to_float() : std::get<FloatPoly>(p_);
    }
    const char* mode() const { return is_exact() ? "exact" : "float"; }

    int deg_x() const
    {
        return std::visit([](const auto& p) { return p.deg_x(); }, p_);
    }
    int deg_y() const
    {
        return std::visit([](const auto& p) { return p.deg_y(); }, p_);
    }
    bool is_zero() const
    {
        return std::visit([](const auto& p) { return p.is_zero(); }, p_);
    }
    std::string to_string() const
    {
        return std::visit([](const auto& p) { return p.to_string(); }, p_);
    }

    template <class Fn>
    decltype(auto) visit(Fn&& fn) const
    {
        return std::visit(std::forward<Fn>(fn), p_);
    }

  private:
    std::variant<ExactPoly, FloatPoly> p_;
};

} // namespace polygraph

#endif
