#include <doctest.h>

#include <algorithm>

#include "polygraph/analyzer.hpp"
#include "polygraph/rootfind.hpp"
#include "support.hpp"

using namespace polygraph;
using namespace polygraph::test;

namespace {

bool contains(const std::vector<Complex>& vs, Complex z, double tol = 1e-8)
{
    return std::any_of(vs.begin(), vs.end(), [&](Complex w) { return std::abs(w - z) <= tol; });
}

ExactPoly mobius_poly(long a, long b, long c, long d)
{
    // (c x + d) y - (a x + b)
    auto x = ExactPoly::x(), y = ExactPoly::y();
    return (GaussRat(c) * x + ExactPoly::constant(d)) * y - (GaussRat(a) * x + ExactPoly::constant(b));
}

} // namespace

TEST_CASE("analyze: examples")
{
    auto grid = analyze(P("(y-x)^4 - 1"));
    CHECK(grid.is_standard);
    CHECK(grid.S.degree() == 0);
    CHECK(grid.d == 4);
    CHECK(grid.e == 4);

    auto sq = analyze(P("(y-x)^2"));
    CHECK_FALSE(sq.is_standard);
    CHECK(sq.has(Failure::NonRadicalY));
    CHECK(sq.D.is_zero());

    auto loop = analyze(P("y - x"));
    CHECK(loop.has(Failure::LoopEverywhere));
    CHECK(loop.failure_reasons.size() == 1);

    auto lin = analyze(mobius_poly(2, 1, 1, 3));
    CHECK(lin.is_standard);

    CHECK(analyze(P("7")).failure_reasons == std::vector<Failure>{Failure::Constant});
    CHECK(analyze(P("(x-1)*y + (x-1)")).has(Failure::UniversalSource));
    CHECK(analyze(P("(y-2)*x + y - 2")).has(Failure::UniversalSink));
}

TEST_CASE("analyze: float mode agrees on clear-cut inputs")
{
    auto grid = analyze(PF("(y-x)^4 - 1"));
    CHECK(grid.is_standard);
    CHECK_FALSE(grid.numerically_uncertain);
    auto sq = analyze(PF("(y-x)^2*(y+x+1)"));
    CHECK(sq.has(Failure::NonRadicalY));
    CHECK(sq.has(Failure::NonRadicalX));
    auto us = analyze(PF("(x-0.5)*(y^2+x*y+1)"));
    CHECK(us.has(Failure::UniversalSource));
    CHECK(us.A.degree() == 1);
    CHECK(std::abs(us.A(0.5)) < 1e-9);
}

TEST_CASE("singular_inventory: examples")
{
    auto grid = P("(y-x)^4 - 1");
    auto inv = singular_inventory(grid, analyze(grid));
    CHECK(inv.all_vertices().empty());

    auto hom = P("y^2 + x*y + x^2");
    auto hinv = singular_inventory(hom, analyze(hom));
    auto all = hinv.all_vertices();
    REQUIRE(all.size() == 1);
    CHECK(std::abs(all[0]) < 1e-12);
    REQUIRE(hinv.loops.size() == 1);
    CHECK(hinv.loops[0].multiplicity == 2);

    auto hom3 = P("y^3 - 2*x^3");
    auto h3 = singular_inventory(hom3, analyze(hom3));
    REQUIRE(h3.loops.size() == 1);
    CHECK(h3.loops[0].multiplicity == 3);

    auto dih = P("(y - i*x)*(x*y - 2)");
    auto dinv = singular_inventory(dih, analyze(dih));
    std::vector<Complex> loops;
    for (auto& l : dinv.loops)
        loops.push_back(l.vertex);
    CHECK(loops.size() == 3);
    CHECK(contains(loops, 0.0));
    CHECK(contains(loops, std::sqrt(2.0)));
    CHECK(contains(loops, -std::sqrt(2.0)));

    CHECK_THROWS_AS(singular_inventory(P("y-x"), analyze(P("y-x"))), DomainError);
}

TEST_CASE("singular_inventory: float matches exact")
{
    auto phi = P("(y - i*x)*(x*y - 2)");
    auto ex = singular_inventory(phi, analyze(phi)).all_vertices();
    auto fl_poly = phi.to_float();
    auto fl = singular_inventory(fl_poly, analyze(fl_poly)).all_vertices(1e-6);
    REQUIRE(ex.size() == fl.size());
    for (Complex z : ex)
        CHECK(contains(fl, z, 1e-6));
}

TEST_CASE("diagnose dispatches on mode")
{
    auto d = diagnose(parse_polynomial("(y-x)^4 - 1"));
    CHECK(d.is_standard);
    CHECK(d.report["mode"] == "exact");
    auto f = diagnose(parse_polynomial("(y-x)^2 - 0.5"));
    CHECK(f.report["mode"] == "float");
    CHECK(f.is_standard);
    auto n = diagnose(parse_polynomial("y-x"));
    CHECK_FALSE(n.is_standard);
    CHECK(n.report["failure_reasons"][0] == "LoopEverywhere");
}

TEST_CASE("standardize: examples")
{
    auto [phi, steps] = standardize(P("(y-x)^2*((y-x)^2-1)"));
    CHECK(make_monic(phi) == make_monic(P("(y-x)^2 - 1")));
    REQUIRE(steps.size() == 2);
    CHECK(steps[0].kind == AppliedStep::Kind::TookRadical);
    CHECK(steps[1].kind == AppliedStep::Kind::RemovedLoopFactor);
    CHECK(steps[1].count == 1);

    auto [same, none] = standardize(P("(y-x)^4 - 1"));
    CHECK(same == P("(y-x)^4 - 1"));
    CHECK(none.empty());

    CHECK_THROWS_AS(standardize(P("3*(y-x)")), DomainError);
    CHECK_THROWS_AS(standardize(P("5")), DomainError);
    CHECK_THROWS_AS(standardize(P("(x-1)*(y+1)")), DomainError);
}

TEST_CASE("properties: degree-one standardness matches the closed form")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> u(-3, 3);
    for (int t = 0; t < 500; ++t) {
        long a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        if (t % 25 == 0) {
            // plant the y - x case and singular matrices often enough to matter
            b = 0, c = 0, d = a;
        }
        bool want = (a * d - b * c != 0) && !(b == 0 && c == 0 && d == a);
        auto phi = mobius_poly(a, b, c, d);
        CHECK_MESSAGE(analyze(phi).is_standard == want, a, " ", b, " ", c, " ", d);
    }
}

TEST_CASE("properties: leading coefficient a_d divides D")
{
    std::mt19937_64 rng(32);
    int tested = 0;
    while (tested < 200) {
        auto phi = random_exact(rng, 1 + tested % 3, 1 + tested % 4, 3, 0.7);
        if (phi.deg_y() < 1)
            continue;
        ++tested;
        auto rep = analyze(phi);
        if (rep.D.is_zero())
            continue;
        auto ad = phi.lead_coeff(Axis::y);
        auto [q, r] = rep.D.divmod(ad);
        CHECK(r.is_zero());
    }
}

TEST_CASE("properties: degree law at non-singular vertices")
{
    std::mt19937_64 rng(33);
    int tested = 0;
    while (tested < 40) {
        auto phi = random_exact(rng, 2, 2, 3, 0.8);
        auto rep = analyze(phi);
        if (!rep.is_standard)
            continue;
        ++tested;
        auto fphi = phi.to_float();
        for (int k = 0; k < 5; ++k) {
            Complex u = random_complex(rng, 2.0);
            if (std::abs(rep.S.to_float()(u)) < 1e-3 * rep.S.norm_inf())
                continue;
            CHECK(roots(fphi.eval_partial(u, Axis::x)).total_multiplicity() == rep.d);
            CHECK(roots(fphi.eval_partial(u, Axis::y)).total_multiplicity() == rep.e);
        }
    }
}

TEST_CASE("properties: singular vertices move with affine maps")
{
    std::mt19937_64 rng(34);
    std::uniform_int_distribution<long> u(-3, 3);
    int tested = 0;
    while (tested < 30) {
        auto phi = random_exact(rng, 2, 2, 3, 0.8);
        auto rep = analyze(phi);
        if (!rep.is_standard || rep.S.degree() < 1)
            continue;
        GaussRat a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng));
        if (a.is_zero() || c.is_zero())
            continue;
        ++tested;
        auto psi = phi.affine_transform(a, b, c);
        auto prep = analyze(psi);
        REQUIRE(prep.is_standard);
        // v is singular for psi iff a v + b is singular for phi
        auto lhs = squarefree_part(prep.S);
        auto rhs = squarefree_part(rep.S.compose_affine(a, b));
        CHECK(lhs == rhs);
    }
}
