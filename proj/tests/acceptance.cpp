// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "polygraph/analyzer.hpp"
#include "polygraph/explorer.hpp"
#include "polygraph/moebius.hpp"
#include "polygraph/probe.hpp"
#include "polygraph/quadratic.hpp"
#include "polygraph/rootfind.hpp"
#include "polygraph/synthesis.hpp"
#include "support.hpp"
#include "table1.hpp"

using namespace polygraph;
using namespace polygraph::test;

namespace {

struct Outcome
{
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body)
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream time;
    time.precision(3);
    time << secs << " s";
    o.require(secs < limit_s, "runtime " + time.str() + " over " + std::to_string(int(limit_s)) + " s");
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " (" << time.str() << ")\n";
    for (const auto& n : o.notes)
        std::cout << "       " << n << '\n';
    failures += o.pass ? 0 : 1;
}

std::string labels_of(const ProbeResult& r)
{
    std::map<std::string, int> count;
    for (const auto& l : r.labels)
        ++count[l.to_string()];
    std::string s;
    for (const auto& [k, v] : count)
        s += (s.empty() ? "" : ", ") + std::to_string(v) + "x " + k;
    return s;
}

bool all_labels(const ProbeResult& r, const ShapeLabel& want)
{
    return std::all_of(r.labels.begin(), r.labels.end(), [&](const ShapeLabel& l) { return same_shape(l, want); });
}

// --- oracles -----------------------------------------------------------

/// Entries of the symbolic matrix power (a b; c d)^n.
std::array<SymPoly, 4> symbolic_power(int n)
{
    const SymPoly a = SymPoly::a(), b = SymPoly::b(), c = SymPoly::c(), d = SymPoly::d();
    std::array<SymPoly, 4> m{a, b, c, d};
    for (int k = 1; k < n; ++k)
        m = {m[0] * a + m[1] * c, m[0] * b + m[1] * d, m[2] * a + m[3] * c, m[2] * b + m[3] * d};
    return m;
}

/// n-cycle condition from matrix powers: c_n / c with the conditions of
/// the proper divisors divided out, computed recursively.
SymPoly oracle_condition(int n, std::map<int, SymPoly>& memo)
{
    if (auto it = memo.find(n); it != memo.end())
        return it->second;
    auto f = symbolic_power(n)[2].divide(SymPoly::c());
    if (!f)
        throw std::runtime_error("c does not divide c_n");
    SymPoly rest = *f;
    for (int k = 2; k < n; ++k)
        if (n % k == 0) {
            auto q = rest.divide(oracle_condition(k, memo));
            if (!q)
                throw std::runtime_error("divisor condition does not divide");
            rest = *q;
        }
    memo.emplace(n, rest);
    return rest;
}

double two_cos(int k, int n)
{
    return 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
}

Polynomial six_cycle_poly()
{
    return parse_polynomial("(x - 1 + 1.7320508075688772)*y - (x - 2 + 1.7320508075688772)");
}

} // namespace

int main()
{
    std::cout.setf(std::ios::boolalpha);

    criterion(1, "n-cycle conditions against the printed table and the matrix-power oracle", 1.0, [](Outcome& o) {
        std::map<int, SymPoly> memo;
        for (int n = 2; n <= 10; ++n)
            o.require(cycle_condition(n) == oracle_condition(n, memo), "n=" + std::to_string(n) + " differs from oracle");
        for (int n : {2, 3, 4, 6, 8, 10})
            o.require(cycle_condition(n) == SymPoly::parse(printed_table().at(n)),
                      "n=" + std::to_string(n) + " differs from the printed row");
        for (int n : {7, 9})
            o.require(oracle_condition(n, memo) == SymPoly::parse(printed_table().at(n)),
                      "n=" + std::to_string(n) + " printed row differs from oracle");
        const SymPoly diff = oracle_condition(5, memo) - SymPoly::parse(printed_table().at(5));
        o.require(diff == SymPoly::parse("4*a*b*c*d - 4*a*b^2*d"), "n=5 diff is " + diff.to_string());
        o.note("n=5 oracle minus printed row: " + diff.to_string() + " (printed 4abbd, oracle 4abcd)");
        o.note("cycle-condition 6 = " + cycle_condition(6).to_string());
    });

    criterion(2, "K3 synthesis round trip", 1.0, [](Outcome& o) {
        auto k3 = FiniteDigraph::with_default_values(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}, {2, 1}, {1, 0}});
        const UniPoly<GaussRat> l1({Q(-2), Q(11, 2), Q(-3, 2)}), l2({Q(8), Q(-13, 2), Q(3, 2)});
        auto fac = one_factorization(k3);
        o.require(fac.factors.size() == 2, "two factors");
        std::vector<UniPoly<GaussRat>> ls;
        for (const auto& perm : fac.factors)
            ls.push_back(interpolate_factor(perm, k3.values));
        bool match = ls.size() == 2 && ((ls[0] == l1 && ls[1] == l2) || (ls[0] == l2 && ls[1] == l1));
        o.require(match, "L1, L2 reproduced exactly");
        const ExactPoly phi = digraph_to_poly(k3);
        o.require(phi == P("(y - (-3/2*x^2 + 11/2*x - 2))*(y - (3/2*x^2 - 13/2*x + 8))"), "product of the factors");
        auto s = explore_strong_component(phi, 1.0);
        ExploredDigraph want;
        want.vertices = {1.0, 2.0, 3.0};
        for (auto [u, v] : k3.arcs)
            want.arcs.push_back({u, v, 1});
        o.require(!s.truncated && is_isomorphic(s, want), "strong component of 1 is K3");
        Budget b;
        b.max_depth = 2;
        auto w = explore_component(phi, 1.0, b);
        o.require(w.truncated, "depth-2 weak exploration truncated");
        o.note("L = " + ls.at(0).to_string('x') + " ; " + ls.at(1).to_string('x') + "; weak prefix " +
               std::to_string(w.vertices.size()) + " vertices");
    });

    criterion(3, "six-cycle Moebius example", 5.0, [](Outcome& o) {
        const Polynomial phi = six_cycle_poly();
        o.require(!phi.is_exact(), "float mode");
        const Mobius m = from_poly(phi);
        o.require(check_condition(m, 6, 1e-9), "check_condition(., 6)");
        auto order = projective_order(m);
        o.require(order && *order == 6, "projective_order = 6");
        auto r = probe_conjecture(phi, {10, {}, 1, 4});
        o.require(all_labels(r, {ShapeLabel::Kind::DirectedCycle, 6}) && r.labels.size() == 10, "10 seeds DirectedCycle(6)");
        o.require(r.all_isomorphic.value_or(false), "all_isomorphic");
        o.note("probe: " + labels_of(r));
    });

    criterion(4, "grid (y-x)^4 - 1", 5.0, [](Outcome& o) {
        const Polynomial phi = parse_polynomial("(y-x)^4 - 1");
        Diagnosis d = diagnose(phi);
        o.require(d.is_standard, "standard");
        o.require(d.inventory.all_vertices().empty(), "no singular vertices");
        Budget b;
        b.max_depth = 3;
        auto g = explore_component(phi, 0.0, b);
        std::set<std::pair<long, long>> got;
        bool integral = true;
        for (Complex z : g.vertices) {
            long re = std::lround(z.real()), im = std::lround(z.imag());
            integral = integral && std::abs(z - Complex(double(re), double(im))) < 1e-9;
            got.insert({re, im});
        }
        o.require(integral, "vertex values within 1e-9 of Gaussian integers");
        bool unit_steps = true;
        for (const auto& a : g.arcs) {
            Complex step = g.vertices[std::size_t(a.to)] - g.vertices[std::size_t(a.from)];
            unit_steps = unit_steps && std::abs(std::abs(step) - 1.0) < 1e-9 &&
                         (std::abs(step.real()) < 1e-9 || std::abs(step.imag()) < 1e-9);
        }
        o.require(unit_steps, "arcs are 4-neighbour steps");
        std::set<std::pair<long, long>> chebyshev, manhattan;
        for (long re = -3; re <= 3; ++re)
            for (long im = -3; im <= 3; ++im) {
                chebyshev.insert({re, im});
                if (std::abs(re) + std::abs(im) <= 3)
                    manhattan.insert({re, im});
            }
        o.require(got == chebyshev, "depth-3 vertex set equals the Chebyshev ball (" + std::to_string(chebyshev.size()) +
                                        " points); explored " + std::to_string(got.size()));
        o.note(std::string("explored set equals the Manhattan ball |re|+|im| <= 3 (") +
               std::to_string(manhattan.size()) + " points): " + (got == manhattan ? "yes" : "no") +
               "; with 4-neighbour arcs, BFS depth 3 reaches exactly graph distance 3");
    });

    criterion(5, "multiplicative Cayley constructors", 10.0, [](Outcome& o) {
        for (int n : {3, 4, 5}) {
            auto r = probe_conjecture(complete(n), {10, {}, std::uint64_t(n), 4});
            o.require(r.truncated_count == 0 && all_labels(r, {ShapeLabel::Kind::CompleteK, n}),
                      "complete(" + std::to_string(n) + ") gives CompleteK(" + std::to_string(n) + ")");
            o.note("complete(" + std::to_string(n) + "): " + labels_of(r));
        }
        for (int d : {2, 3}) {
            auto r = probe_conjecture(bipartite(d), {10, {}, std::uint64_t(10 + d), 4});
            o.require(r.truncated_count == 0 && all_labels(r, {ShapeLabel::Kind::CompleteBipartite, d}),
                      "bipartite(" + std::to_string(d) + ") gives CompleteBipartite(" + std::to_string(d) + ")");
            o.note("bipartite(" + std::to_string(d) + "): " + labels_of(r));
        }
    });

    criterion(6, "degree-2 classification", 20.0, [](Outcome& o) {
        for (auto [n, k] : {std::pair{3, 1}, {4, 1}, {5, 1}, {5, 2}, {7, 3}}) {
            QuadSym q = QuadSym::make(Scalar(two_cos(k, n)), Scalar(0.0), Scalar(1.0));
            QuadReport rep = classify_deg2(q);
            auto r = probe_conjecture(q.to_poly(), {5, {}, std::uint64_t(100 + n * 10 + k), 4});
            const std::string tag = "a=2cos(2pi*" + std::to_string(k) + "/" + std::to_string(n) + ")";
            o.require(rep.verdict() == "Cycle(" + std::to_string(n) + ")",
                      tag + ": classify_deg2 Cycle(" + std::to_string(n) + "), got " + rep.verdict());
            o.require(r.truncated_count == 0 && all_labels(r, {ShapeLabel::Kind::Cycle, n}),
                      tag + ": probed seeds Cycle(" + std::to_string(n) + ")");
            o.note(tag + ": verdict " + rep.verdict() + ", probe " + labels_of(r));
        }
        for (Scalar a : {Scalar(3L), Scalar(2.5), Scalar(Complex(1.0, 1.0))}) {
            QuadSym q = QuadSym::make(a, Scalar(0L), Scalar(1L));
            QuadReport rep = classify_deg2(q);
            auto r = probe_conjecture(q.to_poly(), {5, Budget{200, 30, 1e-6}, 7, 4});
            o.require(rep.verdict() == "DoubleRay", "a=" + a.to_string() + ": DoubleRay");
            o.require(r.truncated_count == 5 && all_labels(r, {ShapeLabel::Kind::DoubleRayPrefix, 0}),
                      "a=" + a.to_string() + ": DoubleRayPrefix explorations");
            o.note("a=" + a.to_string() + ": verdict " + rep.verdict() + ", probe " + labels_of(r));
        }
    });

    criterion(7, "property suites", 60.0, [](Outcome& o) {
        std::mt19937_64 rng(2024);
        {
            // degree one: standard iff ad - bc != 0 and the map is not the identity
            std::uniform_int_distribution<long> u(-3, 3);
            int bad = 0;
            for (int t = 0; t < 500; ++t) {
                long a = u(rng), b = u(rng), c = u(rng), d = u(rng);
                if (t % 25 == 0)
                    b = 0, c = 0, d = a;
                bool want = (a * d - b * c != 0) && !(b == 0 && c == 0 && d == a);
                auto x = ExactPoly::x(), y = ExactPoly::y();
                auto phi = (GaussRat(c) * x + ExactPoly::constant(d)) * y - (GaussRat(a) * x + ExactPoly::constant(b));
                Mobius m{Scalar(a), Scalar(b), Scalar(c), Scalar(d)};
                bad += (analyze(phi).is_standard != want || deg1_failure(m).has_value() == want) ? 1 : 0;
            }
            o.require(bad == 0, "degree-one predicate on 500 quadruples: " + std::to_string(bad) + " mismatches");
        }
        {
            int tested = 0, bad = 0;
            while (tested < 200) {
                auto phi = random_exact(rng, 1 + tested % 3, 1 + (tested / 3) % 3, 3, 0.7);
                auto rep = analyze(phi);
                if (!rep.is_standard)
                    continue;
                ++tested;
                auto [q, r] = rep.D.divmod(phi.lead_coeff(Axis::y));
                bad += r.is_zero() ? 0 : 1;
            }
            o.require(bad == 0, "a_d | D on 200 standard polynomials: " + std::to_string(bad) + " failures");
        }
        {
            const SymPoly a = SymPoly::a(), b = SymPoly::b(), c = SymPoly::c(), d = SymPoly::d();
            int bad = 0;
            for (int n = 2; n <= 12; ++n) {
                auto m = symbolic_power(n);
                SymPoly f = cycle_polynomial(n);
                bad += (m[2] == f * c && m[1] == f * b && m[3] - m[0] == f * (d - a)) ? 0 : 1;
            }
            o.require(bad == 0, "F_n identities for n <= 12");
        }
        {
            std::uniform_int_distribution<int> deg(1, 12);
            double worst = 0.0;
            for (int t = 0; t < 200; ++t) {
                int n = deg(rng);
                std::vector<Complex> rts;
                while (int(rts.size()) < n) {
                    Complex z = random_complex(rng, 2.0);
                    if (std::all_of(rts.begin(), rts.end(), [&](Complex w) { return std::abs(w - z) > 0.25; }))
                        rts.push_back(z);
                }
                auto p = expand(rts, random_complex(rng, 3.0) + 0.5);
                auto rs = roots(p);
                auto back = poly_from_roots(rs, p.lead());
                double err = 0.0;
                for (int k = 0; k <= n; ++k)
                    err = std::max(err, std::abs(back.coeff(k) - p.coeff(k)));
                worst = std::max(worst, err / p.norm_inf());
            }
            std::ostringstream s;
            s << worst;
            o.require(worst <= 1e-8, "root reconstruction worst relative error " + s.str());
            o.note("root reconstruction worst relative error " + s.str());
        }
        {
            int bad = 0;
            for (int t = 0; t < 100; ++t) {
                int n = 1 + int(rng() % 8), d = 1 + int(rng() % 4);
                auto g = random_regular(rng, n, d);
                auto f = one_factorization(g);
                std::map<std::pair<int, int>, int> want, got;
                for (auto a : g.arcs)
                    ++want[a];
                bool ok = int(f.factors.size()) == d;
                for (const auto& perm : f.factors) {
                    std::vector<int> sorted = perm;
                    std::sort(sorted.begin(), sorted.end());
                    for (int v = 0; v < n; ++v)
                        ok = ok && sorted[std::size_t(v)] == v;
                    for (int u = 0; u < n; ++u)
                        ++got[{u, perm[std::size_t(u)]}];
                }
                bad += (ok && want == got) ? 0 : 1;
            }
            o.require(bad == 0, "1-factorization on 100 regular digraphs: " + std::to_string(bad) + " failures");
        }
    });

    criterion(8, "conjecture probe battery", 60.0, [](Outcome& o) {
        const Complex w3 = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
        std::vector<std::pair<std::string, Polynomial>> battery{
            {"complete(3)", complete(3)},
            {"complete(4)", complete(4)},
            {"complete(5)", complete(5)},
            {"bipartite(2)", bipartite(2)},
            {"bipartite(3)", bipartite(3)},
            {"circulant(5,{1,2})", circulant(5, {1, 2})},
            {"circulant(6,{1,3})", circulant(6, {1, 3})},
            {"prism(3)", prism(3)},
            {"prism(4)", prism(4)},
            {"dihedral(3)", dihedral(3)},
            {"dihedral(4)", dihedral(4)},
            {"cayley_additive{1,i}", cayley_additive({Scalar(1L), Scalar(GaussRat::i())})},
            {"cayley_multiplicative{2,3}", cayley_multiplicative({Scalar(2L), Scalar(3L)})},
            {"six-cycle", six_cycle_poly()},
            {"xy - 2", parse_polynomial("x*y - 2")},
            {"y - x - 1", parse_polynomial("y - x - 1")},
            {"cayley_mobius{w3 z, 2/z}",
             cayley_mobius({Mobius{Scalar(w3), Scalar(0.0), Scalar(0.0), Scalar(1.0)},
                            Mobius{Scalar(0L), Scalar(2L), Scalar(1L), Scalar(0L)}},
                           5)
                 .phi},
            {"K3 synthesis", Polynomial(digraph_to_poly(
                                 FiniteDigraph::with_default_values(3, {{0, 1}, {1, 2}, {2, 0}, {0, 2}, {2, 1}, {1, 0}})))},
            {"quadratic a=1", QuadSym::make(Scalar(1L), Scalar(1L), Scalar(1L)).to_poly()},
            {"quadratic a=3", QuadSym::make(Scalar(3L), Scalar(0L), Scalar(1L)).to_poly()},
        };
        int undefined = 0;
        for (std::size_t i = 0; i < battery.size(); ++i) {
            const auto& [name, phi] = battery[i];
            ProbeOptions opts{6, Budget{300, 20, 1e-6}, 1000 + i, 4};
            auto r = probe_conjecture(phi, opts);
            const std::string state =
                r.all_isomorphic ? (*r.all_isomorphic ? "all_isomorphic=true" : "all_isomorphic=false") : "undefined";
            undefined += r.all_isomorphic ? 0 : 1;
            o.note(name + ": " + state + ", truncated " + std::to_string(r.truncated_count) + "/6; " + labels_of(r));
            if (r.all_isomorphic && !*r.all_isomorphic) {
                o.require(false, "counterexample candidate for " + name);
                o.note("reproduction: " + to_json(r).dump());
            }
        }
        o.require(battery.size() == 20, "battery of 20");
        o.note(std::to_string(battery.size()) + " polynomials, " + std::to_string(undefined) +
               " with infinite components (no verdict)");
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria FAILED") << '\n';
    return failures == 0 ? 0 : 1;
}
