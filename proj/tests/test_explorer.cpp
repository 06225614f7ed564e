#include <doctest.h>

#include <algorithm>

#include "polygraph/analyzer.hpp"
#include "polygraph/explorer.hpp"
#include "support.hpp"

using namespace polygraph;
using namespace polygraph::test;

namespace {

using K = ShapeLabel::Kind;

const char* k3_text = "(y - (-3/2*x^2 + 11/2*x - 2))*(y - (3/2*x^2 - 13/2*x + 8))";

bool has_value(const std::vector<Complex>& vs, Complex z, double tol = 1e-9)
{
    return std::any_of(vs.begin(), vs.end(), [&](Complex w) { return std::abs(w - z) <= tol; });
}

std::vector<Complex> values(const std::vector<Neighbor>& ns)
{
    std::vector<Complex> out;
    for (const auto& n : ns)
        for (int k = 0; k < n.multiplicity; ++k)
            out.push_back(n.value);
    return out;
}

ExploredDigraph cycle_graph(int n, bool directed, Complex offset = 0.0)
{
    ExploredDigraph g;
    for (int v = 0; v < n; ++v)
        g.vertices.push_back(offset + Complex(v, 0));
    for (int v = 0; v < n; ++v) {
        g.arcs.push_back({v, (v + 1) % n, 1});
        if (!directed)
            g.arcs.push_back({(v + 1) % n, v, 1});
    }
    return g;
}

bool is_gaussian_integer(Complex z)
{
    return std::abs(z.real() - std::round(z.real())) < 1e-9 && std::abs(z.imag() - std::round(z.imag())) < 1e-9;
}

} // namespace

TEST_CASE("out_neighbors and in_neighbors: examples")
{
    auto grid = PF("(y-x)^4 - 1");
    auto out0 = values(out_neighbors(grid, 0.0));
    REQUIRE(out0.size() == 4);
    for (Complex z : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
        CHECK(has_value(out0, z));
        CHECK(has_value(values(in_neighbors(grid, 0.0)), -z));
    }

    auto k3 = PF(k3_text);
    auto o1 = values(out_neighbors(k3, 1.0));
    CHECK(o1.size() == 2);
    CHECK(has_value(o1, 2.0));
    CHECK(has_value(o1, 3.0));
    auto i1 = values(in_neighbors(k3, 1.0));
    CHECK(has_value(i1, 2.0 / 3.0));
    CHECK(has_value(i1, 3.0));

    auto shift = PF("y - x - 1");
    Complex z(0.25, -1.5);
    CHECK(has_value(values(out_neighbors(shift, z)), z + 1.0));
    CHECK(has_value(values(in_neighbors(shift, z)), z - 1.0));
}

TEST_CASE("neighbours: degree drop and universal vertices")
{
    // a_1(x) = x vanishes at 0, so the y-degree drops there
    auto phi = PF("x*y - 1");
    CHECK(out_neighbors(phi, 0.0).empty());
    CHECK_THROWS_AS(out_neighbors(PF("(x-2)*y + x - 2"), 2.0), DomainError);
    CHECK_THROWS_AS(in_neighbors(PF("(y-2)*x + y - 2"), 2.0), DomainError);
}

TEST_CASE("explore_component: grid from 0 at depth 2")
{
    // BFS over unit steps reaches exactly the Gaussian integers with
    // |re| + |im| <= depth.
    Budget b;
    b.max_depth = 2;
    auto g = explore_component(parse_polynomial("(y-x)^4 - 1"), 0.0, b);
    CHECK(g.truncated);
    CHECK(g.vertices.size() == 13);
    for (Complex z : g.vertices) {
        CHECK(is_gaussian_integer(z));
        CHECK(std::abs(z.real()) + std::abs(z.imag()) <= 2.0 + 1e-9);
    }
    for (const auto& a : g.arcs) {
        CHECK(a.mult == 1);
        CHECK(std::abs(std::abs(g.vertices[static_cast<std::size_t>(a.to)] - g.vertices[static_cast<std::size_t>(a.from)]) - 1.0) < 1e-9);
    }
    // 4 interior vertices of degree 4 on the Manhattan ball: 2 * 16 grid edges
    CHECK(g.arcs.size() == 32);
    CHECK(classify(g).kind == K::GridPrefix);
}

TEST_CASE("explore_component: K3 synthesis polynomial is infinite")
{
    Budget b;
    b.max_depth = 1;
    auto g = explore_component(parse_polynomial(k3_text), 1.0, b);
    CHECK(g.truncated);
    CHECK(has_value(g.vertices, 1.0));
    CHECK(has_value(g.vertices, 2.0));
    CHECK(has_value(g.vertices, 3.0));
    CHECK(has_value(g.vertices, 2.0 / 3.0));
}

TEST_CASE("explore_component: complete K3 form closes")
{
    auto g = explore_component(parse_polynomial("y^2 + x*y + x^2"), 1.0);
    CHECK_FALSE(g.truncated);
    REQUIRE(g.vertices.size() == 3);
    Complex w = std::polar(1.0, 2.0 * M_PI / 3.0);
    CHECK(has_value(g.vertices, 1.0));
    CHECK(has_value(g.vertices, w));
    CHECK(has_value(g.vertices, w * w));
    CHECK(classify(g) == ShapeLabel{K::CompleteK, 3});
}

TEST_CASE("explore_strong_component: examples")
{
    auto k3 = explore_strong_component(parse_polynomial(k3_text), 1.0);
    CHECK_FALSE(k3.truncated);
    REQUIRE(k3.vertices.size() == 3);
    CHECK(k3.arcs.size() == 6);
    CHECK(classify(k3) == ShapeLabel{K::CompleteK, 3});

    Budget small;
    small.max_depth = 6;
    auto shift = explore_strong_component(parse_polynomial("y - x - 1"), 0.0, small);
    CHECK(shift.vertices.size() == 1);
    CHECK(shift.arcs.empty());

    small.max_depth = 3;
    auto grid_s = explore_strong_component(parse_polynomial("(y-x)^4 - 1"), 0.0, small);
    auto grid_w = explore_component(parse_polynomial("(y-x)^4 - 1"), 0.0, small);
    CHECK(grid_s.vertices.size() == grid_w.vertices.size());
    CHECK(grid_s.truncated);
}

TEST_CASE("classify: examples")
{
    CHECK(classify(cycle_graph(5, true)) == ShapeLabel{K::DirectedCycle, 5});
    CHECK(classify(cycle_graph(6, false)) == ShapeLabel{K::Cycle, 6});
    CHECK(classify(cycle_graph(4, false)) == ShapeLabel{K::CompleteBipartite, 2});

    Budget b;
    b.max_depth = 5;
    auto ray = explore_component(parse_polynomial("(x+y)^2 + 1"), Complex(0.3, 0.1), b);
    CHECK(ray.truncated);
    CHECK(classify(ray).kind == K::DoubleRayPrefix);

    auto path = explore_component(parse_polynomial("y - x - 1"), 0.0, b);
    CHECK(classify(path).kind == K::DirectedPathPrefix);

    auto bip = explore_component(parse_polynomial("y^3 + x^3"), 1.0);
    CHECK(classify(bip) == ShapeLabel{K::CompleteBipartite, 3});

    ExploredDigraph odd = cycle_graph(4, true);
    odd.arcs.push_back({0, 2, 1});
    CHECK(classify(odd).kind == K::Unknown);
}

TEST_CASE("same_shape equivalences")
{
    CHECK(same_shape({K::CompleteK, 3}, {K::Cycle, 3}));
    CHECK(same_shape({K::CompleteBipartite, 2}, {K::Cycle, 4}));
    CHECK(same_shape({K::DoubleRayPrefix, 9}, {K::DoubleRayPrefix, 11}));
    CHECK_FALSE(same_shape({K::Cycle, 5}, {K::DirectedCycle, 5}));
}

TEST_CASE("is_isomorphic: examples")
{
    CHECK(is_isomorphic(cycle_graph(6, true), cycle_graph(6, true, Complex(3, 7))));
    CHECK_FALSE(is_isomorphic(cycle_graph(3, true), cycle_graph(3, false)));
    CHECK_FALSE(is_isomorphic(cycle_graph(3, false), cycle_graph(4, false)));

    // relabelled 6-cycle with chords is still isomorphic
    auto g = cycle_graph(6, false);
    g.arcs.push_back({0, 3, 2});
    ExploredDigraph h = g;
    std::vector<int> perm{4, 2, 0, 5, 1, 3};
    for (auto& a : h.arcs) {
        a.from = perm[static_cast<std::size_t>(a.from)];
        a.to = perm[static_cast<std::size_t>(a.to)];
    }
    CHECK(is_isomorphic(g, h));
    h.arcs.back().mult = 1;
    CHECK_FALSE(is_isomorphic(g, h));

    CHECK_THROWS_AS(is_isomorphic(cycle_graph(13, true), cycle_graph(13, true)), DomainError);
    auto open = cycle_graph(3, true);
    open.truncated = true;
    CHECK_THROWS_AS(is_isomorphic(open, open), DomainError);
}

TEST_CASE("export: DOT and JSON")
{
    ExploredDigraph loop;
    loop.vertices = {0.0};
    loop.arcs = {{0, 0, 1}};
    CHECK(to_dot(loop).find("0 -> 0") != std::string::npos);

    auto c2 = to_dot(cycle_graph(2, true));
    CHECK(c2.find("0 -> 1") != std::string::npos);
    CHECK(c2.find("1 -> 0") != std::string::npos);

    auto k3 = explore_strong_component(parse_polynomial(k3_text), 1.0);
    auto dot = to_dot(k3);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 6);
    CHECK(dot.find("label=\"2\"") != std::string::npos);

    ExploredDigraph labelled;
    labelled.vertices = {Complex(1.0 / 3.0, -2.0)};
    CHECK(to_dot(labelled).find("0.333333-2i") != std::string::npos);

    auto j = to_json(k3);
    CHECK(j["seed"] == 0);
    CHECK(j["truncated"] == false);
    CHECK(j["vertices"].size() == 3);
    CHECK(j["arcs"].size() == 6);
    auto back = explored_from_json(j);
    CHECK(back.arcs == k3.arcs);
    CHECK(back.vertices == k3.vertices);
    CHECK_THROWS_AS(explored_from_json(json::parse(R"({"seed":0})")), DomainError);
}

TEST_CASE("properties: determinism")
{
    Budget b;
    b.max_depth = 3;
    auto phi = parse_polynomial("(y-x)^3 - x*y + 2");
    auto g1 = explore_component(phi, Complex(0.7, 0.2), b);
    auto g2 = explore_component(phi, Complex(0.7, 0.2), b);
    CHECK(g1.vertices == g2.vertices);
    CHECK(g1.arcs == g2.arcs);
}

TEST_CASE("properties: degree law on closed explorations")
{
    for (const char* text : {"y^2 + x*y + x^2", "y^4 + x^4", "y^3 + x^3", "y^2 - x*y + x^2"}) {
        auto phi = parse_polynomial(text);
        auto rep = diagnose(phi);
        REQUIRE(rep.is_standard);
        auto g = explore_component(phi, Complex(1.0, 0.5));
        REQUIRE_FALSE(g.truncated);
        const int d = phi.deg_y(), e = phi.deg_x();
        for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
            CHECK(g.out_degree(v) == d);
            CHECK(g.in_degree(v) == e);
        }
    }
}

TEST_CASE("properties: dedup keeps planted pairs apart")
{
    Budget b;
    b.max_depth = 1;
    for (int t = 0; t < 20; ++t) {
        double shift = 1.0 + 0.37 * t;
        double gap = 10.0 * b.dedup_eps;
        FloatPoly x = FloatPoly::x(), y = FloatPoly::y();
        FloatPoly phi = (y - x - FloatPoly::constant(shift)) * (y - x - FloatPoly::constant(shift + gap));
        auto g = explore_component(phi, 0.0, b);
        CHECK(has_value(g.vertices, shift, 1e-9));
        CHECK(has_value(g.vertices, shift + gap, 1e-9));
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
                CHECK(std::abs(g.vertices[i] - g.vertices[j]) > b.dedup_eps);
    }
}

TEST_CASE("properties: strong component inside weak component")
{
    Budget b;
    b.max_depth = 4;
    b.max_vertices = 400;
    std::mt19937_64 rng(41);
    for (const char* text : {"(y-x)^4 - 1", k3_text, "(x+y)^2 + 1", "y^2 + x*y + x^2", "x*y - 2 + y"}) {
        auto phi = parse_polynomial(text);
        Complex seed = random_complex(rng, 1.0);
        auto s = explore_strong_component(phi, seed, b);
        auto w = explore_component(phi, seed, b);
        for (Complex z : s.vertices)
            CHECK(has_value(w.vertices, z, b.dedup_eps));
    }
}
