#include "polygraph/quadratic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "polygraph/analyzer.hpp"
#include "polygraph/ratrec.hpp"
#include "polygraph/rootfind.hpp"

namespace polygraph {

namespace {

constexpr double case_tol = 1e-12;
constexpr double case_band = 1e-9;

enum class Near { Equal, Different, Ambiguous };

Near compare(const Scalar& a, long v)
{
    if (a.is_exact())
        return a.exact() == GaussRat(v) ? Near::Equal : Near::Different;
    double d = std::abs(a.to_complex() - double(v));
    if (d <= case_tol)
        return Near::Equal;
    return d < case_band ? Near::Ambiguous : Near::Different;
}

Scalar sqrt_scalar(const Scalar& s)
{
    return Scalar(std::sqrt(s.to_complex()));
}

std::string case_name(QuadReport::Case k)
{
    switch (k) {
    case QuadReport::Case::AMinus2:
        return "AMinus2";
    case QuadReport::Case::APlus2:
        return "APlus2";
    case QuadReport::Case::Generic:
        return "Generic";
    }
    return "Generic";
}

QuadReport::Case case_of(const Scalar& a)
{
    Near m = compare(a, -2), p = compare(a, 2);
    if (m == Near::Ambiguous || p == Near::Ambiguous)
        throw AmbiguousError("a = " + a.to_string() + " is within 1e-9 of +-2; case not decidable");
    if (m == Near::Equal)
        return QuadReport::Case::AMinus2;
    if (p == Near::Equal)
        return QuadReport::Case::APlus2;
    return QuadReport::Case::Generic;
}

/// A float value within 1e-8 but not 1e-9 of a rational-angle cosine is
/// reported rather than rounded either way.
void reject_near_miss(const Scalar& a, int n_max)
{
    const Complex z = a.to_complex();
    if (std::abs(z.imag()) > 1e-8 || std::abs(z.real()) >= 2.0)
        return;
    const double turns = std::acos(z.real() / 2.0) / (2.0 * std::numbers::pi);
    auto f = recognize_rational(turns, n_max, 1e-8);
    if (!f || f->num <= 0)
        return;
    const double back = 2.0 * std::cos(2.0 * std::numbers::pi * double(f->num) / double(f->den));
    if (std::abs(back - z.real()) <= 1e-8)
        throw AmbiguousError("a = " + a.to_string() + " is within 1e-8 but not 1e-9 of a cosine of 2pi*" +
                             std::to_string(f->num) + "/" + std::to_string(f->den));
}

} // namespace

Polynomial QuadSym::to_poly() const
{
    auto build = [](auto a, auto b, auto c) {
        using B = BiPoly<decltype(a)>;
        B x = B::x(), y = B::y();
        return x * x + y * y + a * (x * y) + b * (x + y) + B::constant(c);
    };
    if (is_exact())
        return build(a.exact(), b.exact(), c.exact());
    return build(a.to_complex(), b.to_complex(), c.to_complex());
}

QuadSym QuadSym::make(Scalar a, Scalar b, Scalar c)
{
    QuadSym q{std::move(a), std::move(b), std::move(c)};
    auto d = diagnose(q.to_poly());
    if (!d.is_standard) {
        std::string why;
        for (Failure f : d.failure_reasons)
            why += std::string(why.empty() ? "" : ", ") + to_string(f);
        throw DomainError("x^2 + y^2 + a x y + b (x + y) + c is not standard (" + why + ")");
    }
    return q;
}

Scalar QuadSym::shift() const
{
    if (case_of(a) == QuadReport::Case::AMinus2)
        throw DomainError("a = -2 has no normalizing shift");
    return b / (a + Scalar(2L));
}

QuadSym normalize(const QuadSym& q)
{
    Scalar s = q.shift();
    return {q.a, q.b.is_exact() ? Scalar(0L) : Scalar(0.0), q.c - q.b * s};
}

std::vector<Complex> recurrence_orbit(const QuadSym& q, Complex v0, Complex v1, int steps)
{
    const Complex a = q.a.to_complex(), b = q.b.to_complex(), c = q.c.to_complex();
    double scale = std::norm(v0) + std::norm(v1) + std::abs(a * v0 * v1) + std::abs(b) * (std::abs(v0) + std::abs(v1)) +
                   std::abs(c);
    Complex phi = v0 * v0 + v1 * v1 + a * v0 * v1 + b * (v0 + v1) + c;
    if (std::abs(phi) > 1e-9 * std::max(scale, 1.0))
        throw DomainError("(" + format_complex(v0, 6) + ", " + format_complex(v1, 6) + ") is not an arc");
    std::vector<Complex> out{v0, v1};
    for (int k = 0; k < steps; ++k) {
        const std::size_t n = out.size();
        out.push_back(-a * out[n - 1] - out[n - 2] - b);
    }
    return out;
}

std::pair<Complex, Complex> characteristic_roots(const QuadSym& q)
{
    auto rs = roots(UniPoly<Complex>({Complex(1.0), q.a.to_complex(), Complex(1.0)}));
    std::vector<Complex> z;
    for (const auto& r : rs.roots)
        for (int m = 0; m < r.multiplicity; ++m)
            z.push_back(r.value);
    return {z.at(0), z.at(1)};
}

std::optional<CosineWitness> cosine_recognize(const Scalar& a, int n_max, double tol)
{
    if (a.is_exact()) {
        // 2 cos(2 pi k / n) is rational only for the values below.
        const GaussRat& v = a.exact();
        if (v == GaussRat(-1) && n_max >= 3)
            return CosineWitness{3, 1};
        if (v == GaussRat(0) && n_max >= 4)
            return CosineWitness{4, 1};
        if (v == GaussRat(1) && n_max >= 6)
            return CosineWitness{6, 1};
        return std::nullopt;
    }
    const Complex z = a.to_complex();
    if (std::abs(z.imag()) > tol || std::abs(z.real()) >= 2.0 - case_tol)
        return std::nullopt;
    const double turns = std::acos(z.real() / 2.0) / (2.0 * std::numbers::pi);
    auto f = recognize_rational(turns, n_max, tol);
    if (!f || f->num <= 0)
        return std::nullopt;
    const double back = 2.0 * std::cos(2.0 * std::numbers::pi * double(f->num) / double(f->den));
    if (std::abs(back - z.real()) > tol)
        return std::nullopt;
    return CosineWitness{int(f->den), int(f->num)};
}

std::string QuadReport::verdict() const
{
    return is_cycle() ? "Cycle(" + std::to_string(cycle_length) + ")" : "DoubleRay";
}

QuadReport singular_inventory_quad(const QuadSym& q)
{
    QuadReport r;
    r.kase = case_of(q.a);
    if (r.kase == QuadReport::Case::AMinus2) {
        if (q.b.is_zero(case_tol))
            return r; // (x - y)^2 + c: nothing singular
        r.loops.push_back((-q.c / (Scalar(2L) * q.b)).to_complex());
        r.loop_multiplicities.push_back(1);
        r.double_arc_origins.push_back(((q.b * q.b - Scalar(4L) * q.c) / (Scalar(8L) * q.b)).to_complex());
        return r;
    }
    const QuadSym n = normalize(q);
    const Complex s = q.shift().to_complex();
    const Scalar a2 = q.a + Scalar(2L);
    if (n.c.is_zero(case_tol * std::max(1.0, std::abs(q.c.to_complex())))) {
        r.loops.push_back(-s);
        r.loop_multiplicities.push_back(2);
        return r;
    }
    const Complex l = sqrt_scalar(-n.c / a2).to_complex();
    r.loops = {l - s, -l - s};
    r.loop_multiplicities = {1, 1};
    if (r.kase == QuadReport::Case::Generic) {
        const Complex m = 2.0 * sqrt_scalar(n.c / (q.a * q.a - Scalar(4L))).to_complex();
        r.double_arc_origins = {m - s, -m - s};
    }
    return r;
}

QuadReport classify_deg2(const QuadSym& q, int n_max, const Budget& budget)
{
    QuadReport r = singular_inventory_quad(q);
    if (r.kase == QuadReport::Case::Generic) {
        r.cosine_witness = cosine_recognize(q.a, n_max);
        r.root_witness = cosine_recognize(-q.a, n_max);
        if (!r.root_witness && !q.a.is_exact())
            reject_near_miss(-q.a, n_max);
    }
    if (r.root_witness)
        r.cycle_length = r.root_witness->n;

    if (r.is_cycle() || (r.loops.empty() && r.double_arc_origins.empty())) {
        r.singular_components_finite = true;
        return r;
    }
    // No periodicity argument: certify by exploring each singular component.
    r.finiteness_explored = true;
    const Polynomial phi = q.to_poly();
    std::vector<Complex> seeds = r.loops;
    seeds.insert(seeds.end(), r.double_arc_origins.begin(), r.double_arc_origins.end());
    for (Complex s : seeds) {
        try {
            if (explore_component(phi, s, budget).truncated) {
                r.singular_components_finite = false;
                break;
            }
        } catch (const ExplorationError&) {
            r.singular_components_finite = false;
            break;
        }
    }
    return r;
}

json to_json(const QuadReport& r)
{
    json loops = json::array(), origins = json::array();
    for (Complex z : r.loops)
        loops.push_back(complex_to_json(z));
    for (Complex z : r.double_arc_origins)
        origins.push_back(complex_to_json(z));
    json j{{"case", case_name(r.kase)},
           {"loops", loops},
           {"loop_multiplicities", r.loop_multiplicities},
           {"double_arc_origins", origins},
           {"singular_components_finite", r.singular_components_finite},
           {"finiteness_explored", r.finiteness_explored},
           {"verdict", r.verdict()}};
    auto witness = [](const std::optional<CosineWitness>& w) {
        return w ? json{{"n", w->n}, {"k", w->k}} : json(nullptr);
    };
    j["cosine_witness"] = witness(r.cosine_witness);
    j["root_witness"] = witness(r.root_witness);
    return j;
}

} // namespace polygraph
