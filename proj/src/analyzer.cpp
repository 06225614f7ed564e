#include "polygraph/analyzer.hpp"

#include <algorithm>

#include "polygraph/rootfind.hpp"

namespace polygraph {

namespace {

using UniQ = UniPoly<GaussRat>;
using UniC = UniPoly<Complex>;

/// |p(z)| / sum |c_k| |z|^k, the backward error of z as a root of p.
double relative_residual(const UniC& p, Complex z)
{
    double bound = 0.0, az = std::abs(z);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        bound = bound * az + std::abs(*it);
    return bound > 0.0 ? std::abs(p(z)) / bound : 0.0;
}

struct ZeroTest
{
    bool zero;
    bool uncertain;
};

ZeroTest classify_norm(double norm, double scale)
{
    if (scale <= 0.0)
        return {true, false};
    double rel = norm / scale;
    return {rel <= float_zero_tol, rel <= float_uncertain_tol && rel > float_zero_tol};
}

/// Product of (x - r) over the roots shared by every polynomial in ps.
std::pair<UniC, bool> approx_common_factor(const std::vector<UniC>& ps)
{
    std::vector<UniC> nonzero;
    for (const auto& p : ps)
        if (!p.is_zero())
            nonzero.push_back(p);
    if (nonzero.empty())
        return {UniC{}, false};
    auto smallest = std::min_element(nonzero.begin(), nonzero.end(),
                                     [](const UniC& l, const UniC& r) { return l.degree() < r.degree(); });
    if (smallest->degree() == 0)
        return {UniC({Complex(1.0, 0.0)}), false};
    UniC common({Complex(1.0, 0.0)});
    bool uncertain = false;
    for (const auto& r : roots(*smallest).roots) {
        double worst = 0.0;
        for (const auto& p : nonzero)
            worst = std::max(worst, relative_residual(p, r.value));
        if (worst <= float_zero_tol) {
            for (int m = 0; m < r.multiplicity; ++m)
                common = common * UniC::linear_root(r.value);
        } else if (worst <= float_uncertain_tol) {
            uncertain = true;
        }
    }
    return {common, uncertain};
}

template <class F>
void finish(StandardReport<F>& rep)
{
    rep.S = rep.L * rep.D * rep.E;
    rep.is_standard = rep.failure_reasons.empty();
}

std::vector<Complex> distinct_roots(const UniC& p)
{
    std::vector<Complex> out;
    if (p.degree() < 1)
        return out;
    for (const auto& r : roots(p).roots)
        out.push_back(r.value);
    return out;
}

std::vector<Complex> distinct_roots(const UniQ& p)
{
    if (p.degree() < 1)
        return {};
    return distinct_roots(squarefree_part(p).to_float());
}

int loop_multiplicity(const FloatPoly& phi, Complex u)
{
    UniC out = phi.eval_partial(u, Axis::x);
    if (out.degree() < 1)
        return 0;
    int best_mult = 0;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : roots(out).roots) {
        double dist = std::abs(r.value - u);
        if (dist < best) {
            best = dist;
            best_mult = r.multiplicity;
        }
    }
    return best_mult;
}

void add_loops(SingularInventory& inv, const FloatPoly& phi, const std::vector<Complex>& loop_vertices)
{
    for (Complex u : loop_vertices)
        inv.loops.push_back({u, loop_multiplicity(phi, u)});
}

template <class F>
void require_standard(const StandardReport<F>& report)
{
    if (!report.is_standard)
        throw DomainError("singular inventory requires a standard polynomial");
}

} // namespace

const char* to_string(Failure f)
{
    switch (f) {
    case Failure::Constant:
        return "Constant";
    case Failure::UniversalSource:
        return "UniversalSource";
    case Failure::UniversalSink:
        return "UniversalSink";
    case Failure::NonRadicalY:
        return "NonRadicalY";
    case Failure::NonRadicalX:
        return "NonRadicalX";
    case Failure::LoopEverywhere:
        return "LoopEverywhere";
    }
    return "?";
}

template <class F>
bool StandardReport<F>::has(Failure f) const
{
    return std::find(failure_reasons.begin(), failure_reasons.end(), f) != failure_reasons.end();
}

template struct StandardReport<GaussRat>;
template struct StandardReport<Complex>;

ExactReport analyze(const ExactPoly& phi)
{
    ExactReport rep;
    rep.d = phi.deg_y();
    rep.e = phi.deg_x();
    rep.L = phi.diagonal();
    if (phi.is_constant()) {
        rep.failure_reasons.push_back(Failure::Constant);
        finish(rep);
        return rep;
    }
    rep.A = gcd_all(phi.coeff_polys(Axis::y));
    rep.B = gcd_all(phi.coeff_polys(Axis::x));
    rep.D = resultant(phi, phi.derivative(Axis::y), Axis::y);
    rep.E = resultant(phi, phi.derivative(Axis::x), Axis::x);
    if (rep.A.degree() > 0)
        rep.failure_reasons.push_back(Failure::UniversalSource);
    if (rep.B.degree() > 0)
        rep.failure_reasons.push_back(Failure::UniversalSink);
    if (rep.D.is_zero())
        rep.failure_reasons.push_back(Failure::NonRadicalY);
    if (rep.E.is_zero())
        rep.failure_reasons.push_back(Failure::NonRadicalX);
    if (rep.L.is_zero())
        rep.failure_reasons.push_back(Failure::LoopEverywhere);
    finish(rep);
    return rep;
}

FloatReport analyze(const FloatPoly& phi)
{
    FloatReport rep;
    rep.d = phi.deg_y();
    rep.e = phi.deg_x();
    const double norm = phi.norm_inf();
    UniC diag = phi.diagonal();
    ZeroTest l_test = classify_norm(diag.norm_inf(), norm);
    rep.L = l_test.zero ? UniC{} : trimmed(diag, 1e-12);
    if (phi.is_constant() || phi.is_zero()) {
        rep.failure_reasons.push_back(Failure::Constant);
        finish(rep);
        return rep;
    }
    auto [a, a_unc] = approx_common_factor(phi.coeff_polys(Axis::y));
    auto [b, b_unc] = approx_common_factor(phi.coeff_polys(Axis::x));
    rep.A = a;
    rep.B = b;
    auto d_res = resultant_scaled(phi, phi.derivative(Axis::y), Axis::y);
    auto e_res = resultant_scaled(phi, phi.derivative(Axis::x), Axis::x);
    ZeroTest d_test = classify_norm(d_res.poly.norm_inf(), d_res.scale);
    ZeroTest e_test = classify_norm(e_res.poly.norm_inf(), e_res.scale);
    rep.D = d_test.zero ? UniC{} : d_res.poly;
    rep.E = e_test.zero ? UniC{} : e_res.poly;
    rep.numerically_uncertain = a_unc || b_unc || d_test.uncertain || e_test.uncertain || l_test.uncertain;
    if (rep.A.degree() > 0)
        rep.failure_reasons.push_back(Failure::UniversalSource);
    if (rep.B.degree() > 0)
        rep.failure_reasons.push_back(Failure::UniversalSink);
    if (rep.D.is_zero())
        rep.failure_reasons.push_back(Failure::NonRadicalY);
    if (rep.E.is_zero())
        rep.failure_reasons.push_back(Failure::NonRadicalX);
    if (rep.L.is_zero())
        rep.failure_reasons.push_back(Failure::LoopEverywhere);
    finish(rep);
    return rep;
}

std::vector<Complex> SingularInventory::all_vertices(double tol) const
{
    std::vector<Complex> out;
    auto add = [&](Complex z) {
        for (Complex w : out)
            if (std::abs(w - z) <= tol * (1.0 + std::abs(z)))
                return;
        out.push_back(z);
    };
    for (const auto& l : loops)
        add(l.vertex);
    for (const auto* list : {&multi_arc_origins, &multi_arc_ends, &out_defective, &in_defective})
        for (Complex z : *list)
            add(z);
    return out;
}

SingularInventory singular_inventory(const ExactPoly& phi, const ExactReport& report, double)
{
    require_standard(report);
    SingularInventory inv;
    const FloatPoly phif = phi.to_float();
    add_loops(inv, phif, distinct_roots(report.L));

    auto split = [](const UniQ& disc, const UniQ& lead, std::vector<Complex>& defective,
                    std::vector<Complex>& multiple) {
        if (disc.degree() < 1)
            return;
        UniQ sf = squarefree_part(disc);
        UniQ g = gcd(sf, lead);
        defective = distinct_roots(g);
        multiple = distinct_roots(divide_exact(sf, g));
    };
    split(report.D, phi.lead_coeff(Axis::y), inv.out_defective, inv.multi_arc_origins);
    split(report.E, phi.lead_coeff(Axis::x), inv.in_defective, inv.multi_arc_ends);
    return inv;
}

SingularInventory singular_inventory(const FloatPoly& phi, const FloatReport& report, double tol)
{
    require_standard(report);
    SingularInventory inv;
    inv.numerically_uncertain = report.numerically_uncertain;
    add_loops(inv, phi, distinct_roots(report.L));

    auto split = [&](const UniC& disc, const UniC& lead, std::vector<Complex>& defective,
                     std::vector<Complex>& multiple) {
        for (Complex u : distinct_roots(disc)) {
            double r = relative_residual(lead, u);
            if (r <= tol) {
                defective.push_back(u);
            } else {
                multiple.push_back(u);
                if (r <= 100.0 * tol)
                    inv.numerically_uncertain = true;
            }
        }
    };
    split(report.D, phi.lead_coeff(Axis::y), inv.out_defective, inv.multi_arc_origins);
    split(report.E, phi.lead_coeff(Axis::x), inv.in_defective, inv.multi_arc_ends);
    return inv;
}

Diagnosis diagnose(const Polynomial& phi, double tol)
{
    Diagnosis out;
    phi.visit([&](const auto& p) {
        auto rep = analyze(p);
        out.is_standard = rep.is_standard;
        out.numerically_uncertain = rep.numerically_uncertain;
        out.failure_reasons = rep.failure_reasons;
        out.report = to_json(rep);
        if (rep.is_standard) {
            out.inventory = singular_inventory(p, rep, tol);
            out.numerically_uncertain = out.numerically_uncertain || out.inventory.numerically_uncertain;
        }
    });
    return out;
}

std::pair<ExactPoly, std::vector<AppliedStep>> standardize(const ExactPoly& phi)
{
    if (phi.is_constant())
        throw DomainError("cannot standardize a constant polynomial");
    ExactReport rep = analyze(phi);
    if (rep.has(Failure::UniversalSource))
        throw DomainError("polynomial has universal source vertices (roots of A(x) = " + rep.A.to_string('x') + ")");
    if (rep.has(Failure::UniversalSink))
        throw DomainError("polynomial has universal sink vertices (roots of B(y) = " + rep.B.to_string('y') + ")");
    std::vector<AppliedStep> steps;
    ExactPoly cur = phi;
    if (rep.has(Failure::NonRadicalY) || rep.has(Failure::NonRadicalX)) {
        cur = squarefree_part(cur);
        steps.push_back({AppliedStep::Kind::TookRadical, 0});
    }
    const ExactPoly loop_factor = ExactPoly::y() - ExactPoly::x();
    int removed = 0;
    while (!cur.is_constant() && cur.diagonal().is_zero()) {
        cur = divide_exact(cur, loop_factor);
        ++removed;
    }
    if (removed > 0)
        steps.push_back({AppliedStep::Kind::RemovedLoopFactor, removed});
    if (cur.is_constant())
        throw DomainError("nothing remains after removing the (y - x) factors");
    ExactReport after = analyze(cur);
    if (!after.is_standard) {
        std::string why;
        for (Failure f : after.failure_reasons)
            why += std::string(why.empty() ? "" : ", ") + to_string(f);
        throw DomainError("standardization left a non-standard polynomial: " + why);
    }
    return {cur, steps};
}

namespace {

template <class F>
json report_json(const StandardReport<F>& r)
{
    json reasons = json::array();
    for (Failure f : r.failure_reasons)
        reasons.push_back(to_string(f));
    auto poly = [](const UniPoly<F>& p, char var) { return p.to_string(var); };
    return {{"mode", FieldTraits<F>::mode},
            {"is_standard", r.is_standard},
            {"failure_reasons", reasons},
            {"numerically_uncertain", r.numerically_uncertain},
            {"d", r.d},
            {"e", r.e},
            {"A", poly(r.A, 'x')},
            {"B", poly(r.B, 'y')},
            {"D", poly(r.D, 'x')},
            {"E", poly(r.E, 'y')},
            {"L", poly(r.L, 'x')},
            {"S", poly(r.S, 'x')}};
}

json vertex_list(const std::vector<Complex>& vs)
{
    json out = json::array();
    for (Complex z : vs)
        out.push_back(complex_to_json(z));
    return out;
}

} // namespace

json to_json(const ExactReport& r)
{
    return report_json(r);
}

json to_json(const FloatReport& r)
{
    return report_json(r);
}

json to_json(const SingularInventory& inv)
{
    json loops = json::array();
    for (const auto& l : inv.loops) {
        json v = complex_to_json(l.vertex);
        v["multiplicity"] = l.multiplicity;
        loops.push_back(v);
    }
    return {{"loops", loops},
            {"multi_arc_origins", vertex_list(inv.multi_arc_origins)},
            {"multi_arc_ends", vertex_list(inv.multi_arc_ends)},
            {"out_defective", vertex_list(inv.out_defective)},
            {"in_defective", vertex_list(inv.in_defective)},
            {"numerically_uncertain", inv.numerically_uncertain}};
}

json to_json(const std::vector<AppliedStep>& steps)
{
    json out = json::array();
    for (const auto& s : steps) {
        if (s.kind == AppliedStep::Kind::TookRadical)
            out.push_back({{"step", "TookRadical"}});
        else
            out.push_back({{"step", "RemovedLoopFactor"}, {"count", s.count}});
    }
    return out;
}

} // namespace polygraph
