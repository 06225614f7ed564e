#include "polygraph/moebius.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "polygraph/ratrec.hpp"
#include "polygraph/rootfind.hpp"

namespace polygraph {

namespace {

// Relative band around a parabolic trace in which no verdict is given.
constexpr double parabolic_band = 1e-8;
// Angle tolerance (in turns) for recognizing the eigenvalue ratio.
constexpr double angle_tol = 1e-9;

double mag(const Scalar& s)
{
    return std::abs(s.to_complex());
}

double scale_of(const Mobius& m)
{
    return std::max({mag(m.a), mag(m.b), mag(m.c), mag(m.d)});
}

Mobius normalized_float(const Mobius& m)
{
    Complex s = std::sqrt(m.det().to_complex());
    return {Scalar(m.a.to_complex() / s), Scalar(m.b.to_complex() / s), Scalar(m.c.to_complex() / s),
            Scalar(m.d.to_complex() / s)};
}

using UniQ = UniPoly<GaussRat>;

/// U_n(t, 1).
UniQ chebyshev_u(int n)
{
    UniQ prev = UniQ::constant(GaussRat(1)), cur = UniQ({GaussRat(0), GaussRat(1)});
    if (n == 1)
        return prev;
    const UniQ t({GaussRat(0), GaussRat(1)});
    for (int k = 3; k <= n; ++k) {
        UniQ next = t * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

UniQ condition_dehomogenized(int n, std::map<int, UniQ>& memo)
{
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    UniQ acc = chebyshev_u(n);
    for (int k = 2; k < n; ++k) {
        if (n % k != 0)
            continue;
        auto [q, r] = acc.divmod(condition_dehomogenized(k, memo));
        if (!r.is_zero())
            throw Error("internal", "cycle condition division left a remainder");
        acc = q;
    }
    memo.emplace(n, acc);
    return acc;
}

/// sum_i c_i t^i e^((deg - i) / 2) expanded in a, b, c, d.
SymPoly rehomogenize(const UniQ& p)
{
    const int deg = p.degree();
    const SymPoly t = SymPoly::a() + SymPoly::d();
    const SymPoly e = SymPoly::a() * SymPoly::d() - SymPoly::b() * SymPoly::c();
    SymPoly out;
    for (int i = 0; i <= deg; ++i) {
        const GaussRat& c = p.coeff(i);
        if (c.is_zero())
            continue;
        if ((deg - i) % 2 != 0 || !c.is_real() || c.re.get_den() != 1)
            throw Error("internal", "cycle polynomial is not weighted-homogeneous over the integers");
        out = out + SymPoly::constant(mpz_class(c.re.get_num())) * t.pow(i) * e.pow((deg - i) / 2);
    }
    return out;
}

void require_n(int n)
{
    if (n < 2)
        throw DomainError("cycle length must be at least 2");
}

std::vector<Complex> special_points(const Mobius& m)
{
    std::vector<Complex> out;
    const Complex a = m.a.to_complex(), b = m.b.to_complex(), c = m.c.to_complex(), d = m.d.to_complex();
    // loops: roots of c x^2 + (d - a) x - b
    UniPoly<Complex> loop_poly({-b, d - a, c});
    loop_poly = trimmed(loop_poly, 1e-14);
    if (loop_poly.degree() >= 1)
        for (const auto& r : roots(loop_poly).roots)
            out.push_back(r.value);
    if (c != Complex(0.0)) {
        out.push_back(-d / c); // out-defective
        out.push_back(a / c);  // in-defective
    }
    return out;
}

} // namespace

bool Mobius::is_exact() const
{
    return a.is_exact() && b.is_exact() && c.is_exact() && d.is_exact();
}

Scalar Mobius::det() const
{
    return a * d - b * c;
}

Scalar Mobius::trace() const
{
    return a + d;
}

Complex Mobius::operator()(Complex z) const
{
    return (a.to_complex() * z + b.to_complex()) / (c.to_complex() * z + d.to_complex());
}

Mobius operator*(const Mobius& f, const Mobius& g)
{
    return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c, f.c * g.b + f.d * g.d};
}

Mobius Mobius::pow(int n) const
{
    if (n < 0)
        throw DomainError("negative matrix power");
    Mobius acc = identity(), base = *this;
    while (n > 0) {
        if (n & 1)
            acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

bool Mobius::is_scalar_matrix(double tol) const
{
    if (is_exact())
        return b.exact().is_zero() && c.exact().is_zero() && a.exact() == d.exact();
    double s = std::max(mag(a), mag(d));
    return mag(b) <= tol * s && mag(c) <= tol * s && mag(a - d) <= tol * s;
}

Mobius coefficients_deg1(const Polynomial& phi)
{
    if (phi.deg_x() > 1 || phi.deg_y() > 1)
        throw DomainError("expected partial degree at most 1 in x and in y, got degrees " +
                          std::to_string(phi.deg_x()) + " and " + std::to_string(phi.deg_y()));
    return phi.visit([](const auto& p) {
        auto s = [&](int i, int j) { return Scalar(p.coeff(i, j)); };
        return Mobius{-s(1, 0), -s(0, 0), s(1, 1), s(0, 1)};
    });
}

std::optional<std::string> deg1_failure(const Mobius& m, double tol)
{
    if (m.is_exact()) {
        if (m.det().is_zero())
            return "ad - bc = 0";
    } else if (mag(m.det()) <= tol * scale_of(m) * scale_of(m)) {
        return "ad - bc = 0";
    }
    if (m.is_scalar_matrix(m.is_exact() ? 0.0 : tol))
        return "divisible by y - x";
    return std::nullopt;
}

Mobius from_poly(const Polynomial& phi)
{
    Mobius m = coefficients_deg1(phi);
    if (auto why = deg1_failure(m))
        throw DomainError("polynomial is not standard: " + *why);
    return m;
}

Polynomial to_poly(const Mobius& m)
{
    auto build = [](auto a, auto b, auto c, auto d) {
        using B = BiPoly<decltype(a)>;
        return (c * B::x() + B::constant(d)) * B::y() - (a * B::x() + B::constant(b));
    };
    if (m.is_exact())
        return build(m.a.exact(), m.b.exact(), m.c.exact(), m.d.exact());
    return build(m.a.to_complex(), m.b.to_complex(), m.c.to_complex(), m.d.to_complex());
}

std::optional<int> projective_order(const Mobius& m, int n_max)
{
    if (m.is_exact() ? m.det().is_zero() : mag(m.det()) == 0.0)
        throw DomainError("matrix is singular (ad - bc = 0)");
    if (m.is_scalar_matrix(1e-12))
        return 1;
    if (m.is_exact()) {
        Scalar t = m.trace();
        if ((t * t - Scalar(4L) * m.det()).is_zero())
            return std::nullopt; // parabolic, not the identity
    }
    const Mobius n = normalized_float(m);
    const Complex t = n.trace().to_complex();
    if (!m.is_exact() && std::abs(t * t - 4.0) < parabolic_band)
        throw AmbiguousError("matrix is within " + format_complex(parabolic_band, 3) +
                             " of parabolic (trace^2 = 4 det); order not decidable");
    const Complex r = std::sqrt(t * t - 4.0);
    const Complex ratio = (t + r) / (t - r);
    if (std::abs(std::abs(ratio) - 1.0) > angle_tol)
        return std::nullopt;
    double turns = std::arg(ratio) / (2.0 * std::numbers::pi);
    if (turns < 0)
        turns += 1.0;
    auto frac = recognize_rational(turns, n_max, angle_tol);
    if (!frac || frac->den < 2)
        return std::nullopt;
    const int q = static_cast<int>(frac->den);
    // mandatory cross-check by explicit powering
    if (!(m.is_exact() ? m.pow(q) : n.pow(q)).is_scalar_matrix(1e-9))
        return std::nullopt;
    return q;
}

std::string Deg1Verdict::to_string() const
{
    switch (kind) {
    case Kind::DirectedCycles:
        return "DirectedCycles(" + std::to_string(n) + ")";
    case Kind::InfinitePaths:
        return "InfinitePaths";
    case Kind::NotStandard:
        return "NotStandard(" + reason + ")";
    }
    return "?";
}

Deg1Verdict classify_deg1(const Polynomial& phi, int n_max)
{
    Mobius m = coefficients_deg1(phi);
    Deg1Verdict v;
    if (auto why = deg1_failure(m)) {
        v.kind = Deg1Verdict::Kind::NotStandard;
        v.reason = *why;
        return v;
    }
    auto order = projective_order(m, n_max);
    if (order && *order >= 2) {
        v.kind = Deg1Verdict::Kind::DirectedCycles;
        v.n = *order;
    } else {
        v.kind = Deg1Verdict::Kind::InfinitePaths;
    }
    return v;
}

SymPoly cycle_polynomial(int n)
{
    if (n < 1)
        throw DomainError("n must be positive");
    return rehomogenize(chebyshev_u(n));
}

SymPoly cycle_condition(int n)
{
    require_n(n);
    std::map<int, UniQ> memo;
    return rehomogenize(condition_dehomogenized(n, memo));
}

bool check_condition(const Mobius& m, int n, double tol)
{
    SymPoly cond = cycle_condition(n);
    if (m.is_exact())
        return cond.evaluate(m.a, m.b, m.c, m.d).is_zero();
    Scalar s(scale_of(m));
    if (scale_of(m) == 0.0)
        throw DomainError("zero matrix");
    Scalar v = cond.evaluate(m.a / s, m.b / s, m.c / s, m.d / s);
    return mag(v) < tol;
}

MobiusCayley cayley_mobius(const std::vector<Mobius>& generators, std::uint64_t rng_seed)
{
    if (generators.empty())
        throw DomainError("need at least one generator");
    std::vector<Complex> avoid;
    Polynomial phi = ExactPoly::constant(GaussRat(1));
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (auto why = deg1_failure(generators[i]))
            throw DomainError("generator " + std::to_string(i) + " is not standard: " + *why);
        for (Complex z : special_points(generators[i]))
            avoid.push_back(z);
        Polynomial f = to_poly(generators[i]);
        if (phi.is_exact() && f.is_exact())
            phi = phi.exact() * f.exact();
        else
            phi = phi.to_float() * f.to_float();
    }
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Complex z(u(rng), u(rng));
        if (std::abs(z) > 2.0)
            continue;
        bool ok = std::all_of(avoid.begin(), avoid.end(), [&](Complex w) { return std::abs(w - z) >= 1e-3; });
        if (ok)
            return {phi, z};
    }
    throw NumericalError("could not sample a seed away from the singular vertices");
}

json to_json(const Mobius& m)
{
    return {{"a", m.a.to_string()}, {"b", m.b.to_string()}, {"c", m.c.to_string()}, {"d", m.d.to_string()}};
}

json to_json(const Deg1Verdict& v)
{
    json j{{"verdict", v.to_string()}};
    switch (v.kind) {
    case Deg1Verdict::Kind::DirectedCycles:
        j["kind"] = "DirectedCycles";
        j["n"] = v.n;
        break;
    case Deg1Verdict::Kind::InfinitePaths:
        j["kind"] = "InfinitePaths";
        break;
    case Deg1Verdict::Kind::NotStandard:
        j["kind"] = "NotStandard";
        j["reason"] = v.reason;
        break;
    }
    return j;
}

} // namespace polygraph
