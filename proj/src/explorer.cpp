#include "polygraph/explorer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

#include "polygraph/rootfind.hpp"

namespace polygraph {

namespace {

using UniC = UniPoly<Complex>;

// Coefficients below this fraction of their evaluation bound count as zero.
constexpr double fiber_zero_tol = 1e-12;

/// Phi restricted to fibers x = u or y = v. For exact Phi the coefficients
/// are evaluated in exact arithmetic at the (dyadic) double u and rounded
/// once, which avoids the cancellation of high-degree terms.
class Fibers
{
  public:
    explicit Fibers(const Polynomial& phi)
    {
        FloatPoly f = phi.to_float();
        float_ = {f.coeff_polys(Axis::y), f.coeff_polys(Axis::x)};
        if (phi.is_exact())
            exact_ = {phi.exact().coeff_polys(Axis::y), phi.exact().coeff_polys(Axis::x)};
    }

    /// Coefficients of Phi(u, y) for var = y, of Phi(x, u) for var = x.
    UniC at(Complex u, Axis var) const
    {
        const std::size_t side = var == Axis::y ? 0 : 1;
        const auto& cs = float_[side];
        std::vector<Complex> out(cs.size());
        const double au = std::abs(u);
        GaussRat uq;
        if (exact_) {
            require_finite(u, "vertex value");
            uq = GaussRat(Rational(u.real()), Rational(u.imag()));
        }
        for (std::size_t i = 0; i < cs.size(); ++i) {
            double bound = 0.0;
            for (auto it = cs[i].coeffs().rbegin(); it != cs[i].coeffs().rend(); ++it)
                bound = bound * au + std::abs(*it);
            Complex v = exact_ ? (*exact_)[side][i](uq).to_complex() : cs[i](u);
            require_finite(v, "neighbour polynomial");
            out[i] = std::abs(v) <= fiber_zero_tol * bound ? Complex(0.0, 0.0) : v;
        }
        return UniC(std::move(out));
    }

  private:
    std::array<std::vector<UniC>, 2> float_;
    std::optional<std::array<std::vector<UniPoly<GaussRat>>, 2>> exact_;
};

std::vector<Neighbor> solve_fiber(const UniC& p)
{
    std::vector<Neighbor> out;
    if (p.degree() < 1)
        return out;
    for (const auto& r : roots(p).roots)
        out.push_back({polish_root(p, r.value, r.multiplicity), r.multiplicity});
    return out;
}

std::vector<Neighbor> neighbors(const Fibers& phi, Complex u, Axis var)
{
    UniC p = phi.at(u, var);
    if (p.is_zero())
        throw DomainError(std::string("universal ") + (var == Axis::y ? "source" : "sink") + " vertex at " +
                          format_complex(u));
    return solve_fiber(p);
}

/// Spatial hash with cells of side eps; the first value stored near a point
/// is its canonical representative.
class VertexStore
{
  public:
    explicit VertexStore(double eps) : eps_(eps) {}

    int find(Complex z) const
    {
        auto [cx, cy] = cell(z);
        int best = -1;
        double best_d = eps_;
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = cells_.find(key(cx + dx, cy + dy));
                if (it == cells_.end())
                    continue;
                for (int id : it->second) {
                    double d = std::abs(values_[static_cast<std::size_t>(id)] - z);
                    if (d <= best_d) {
                        best_d = d;
                        best = id;
                    }
                }
            }
        return best;
    }

    int add(Complex z)
    {
        require_finite(z, "vertex value");
        int id = static_cast<int>(values_.size());
        values_.push_back(z);
        auto [cx, cy] = cell(z);
        cells_[key(cx, cy)].push_back(id);
        return id;
    }

    std::size_t size() const { return values_.size(); }
    const std::vector<Complex>& values() const { return values_; }

  private:
    std::pair<long long, long long> cell(Complex z) const
    {
        return {static_cast<long long>(std::floor(z.real() / eps_)),
                static_cast<long long>(std::floor(z.imag() / eps_))};
    }
    static std::uint64_t key(long long x, long long y)
    {
        return static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(y);
    }

    double eps_;
    std::vector<Complex> values_;
    std::unordered_map<std::uint64_t, std::vector<int>> cells_;
};

void check_budget(const Budget& b)
{
    if (b.max_vertices < 1 || b.max_depth < 0 || !(b.dedup_eps > 0.0) || !(b.max_modulus > 0.0))
        throw DomainError("budget values must be positive");
}

ExploredDigraph search(const Fibers& phi, Complex seed, const Budget& budget, bool use_out, bool use_in)
{
    check_budget(budget);
    VertexStore store(budget.dedup_eps);
    std::vector<int> depth;
    // value: multiplicity, and whether it came from the source's out side
    std::map<std::pair<int, int>, std::pair<int, bool>> arcs;
    bool truncated = false;

    auto snapshot = [&] {
        ExploredDigraph g;
        g.vertices = store.values();
        for (const auto& [k, v] : arcs)
            g.arcs.push_back({k.first, k.second, v.first});
        g.truncated = true;
        return g;
    };

    store.add(seed);
    depth.push_back(0);
    std::deque<int> queue{0};

    auto locate = [&](Complex z, int from_depth) {
        int w = store.find(z);
        if (w >= 0)
            return w;
        if (from_depth >= budget.max_depth || static_cast<int>(store.size()) >= budget.max_vertices ||
            std::abs(z) > budget.max_modulus) {
            truncated = true;
            return -1;
        }
        w = store.add(z);
        depth.push_back(from_depth + 1);
        queue.push_back(w);
        return w;
    };

    try {
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            Complex u = store.values()[static_cast<std::size_t>(v)];
            int dv = depth[static_cast<std::size_t>(v)];
            if (use_out)
                for (const auto& nb : neighbors(phi, u, Axis::y)) {
                    int w = locate(nb.value, dv);
                    if (w >= 0)
                        arcs[{v, w}] = {nb.multiplicity, true};
                }
            if (use_in)
                for (const auto& nb : neighbors(phi, u, Axis::x)) {
                    int w = locate(nb.value, dv);
                    if (w >= 0)
                        arcs.try_emplace({w, v}, nb.multiplicity, false);
                }
        }
    } catch (const DomainError&) {
        throw;
    } catch (const NumericalError& e) {
        throw ExplorationError(std::string("exploration aborted: ") + e.what(), snapshot());
    }

    ExploredDigraph g = snapshot();
    g.truncated = truncated;
    return g;
}

/// Arcs among `values` as seen from each vertex's out-neighbours.
ExploredDigraph induced_out(const Fibers& phi, const std::vector<Complex>& values, double eps)
{
    VertexStore store(eps);
    for (Complex z : values)
        store.add(z);
    ExploredDigraph g;
    g.vertices = values;
    for (std::size_t v = 0; v < values.size(); ++v)
        for (const auto& nb : neighbors(phi, values[v], Axis::y)) {
            int w = store.find(nb.value);
            if (w >= 0)
                g.arcs.push_back({static_cast<int>(v), w, nb.multiplicity});
        }
    std::sort(g.arcs.begin(), g.arcs.end(),
              [](const ExploredArc& a, const ExploredArc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
    return g;
}

std::vector<bool> reach(const ExploredDigraph& g, int start, bool forward)
{
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (const auto& a : g.arcs)
        (forward ? adj[static_cast<std::size_t>(a.from)] : adj[static_cast<std::size_t>(a.to)])
            .push_back(forward ? a.to : a.from);
    std::vector<bool> seen(g.vertices.size(), false);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
    }
    return seen;
}

/// Subgraph induced by `keep`, ids renumbered in their original order.
ExploredDigraph restrict(const ExploredDigraph& g, const std::vector<bool>& keep)
{
    std::vector<int> remap(g.vertices.size(), -1);
    ExploredDigraph out;
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (keep[v]) {
            remap[v] = static_cast<int>(out.vertices.size());
            out.vertices.push_back(g.vertices[v]);
        }
    for (const auto& a : g.arcs) {
        int f = remap[static_cast<std::size_t>(a.from)], t = remap[static_cast<std::size_t>(a.to)];
        if (f >= 0 && t >= 0)
            out.arcs.push_back({f, t, a.mult});
    }
    out.seed_id = remap[static_cast<std::size_t>(g.seed_id)];
    out.truncated = g.truncated;
    return out;
}

ExploredDigraph seed_scc(const ExploredDigraph& g)
{
    auto fwd = reach(g, g.seed_id, true);
    auto bwd = reach(g, g.seed_id, false);
    std::vector<bool> both(fwd.size());
    for (std::size_t i = 0; i < both.size(); ++i)
        both[i] = fwd[i] && bwd[i];
    return restrict(g, both);
}

// Adjacency helpers for classification.
struct Structure
{
    int n = 0;
    std::vector<std::map<int, int>> out; // neighbour -> multiplicity
    std::vector<std::map<int, int>> in;

    explicit Structure(const ExploredDigraph& g) : n(static_cast<int>(g.vertices.size())), out(g.vertices.size()), in(g.vertices.size())
    {
        for (const auto& a : g.arcs) {
            out[static_cast<std::size_t>(a.from)][a.to] += a.mult;
            in[static_cast<std::size_t>(a.to)][a.from] += a.mult;
        }
    }

    int out_deg(int v) const
    {
        int s = 0;
        for (auto [w, m] : out[static_cast<std::size_t>(v)])
            s += m;
        return s;
    }
    int in_deg(int v) const
    {
        int s = 0;
        for (auto [w, m] : in[static_cast<std::size_t>(v)])
            s += m;
        return s;
    }

    /// Every arc has multiplicity 1, no loops, and u->v implies v->u.
    bool symmetric_simple() const
    {
        for (int v = 0; v < n; ++v)
            for (auto [w, m] : out[static_cast<std::size_t>(v)]) {
                if (w == v || m != 1)
                    return false;
                auto it = out[static_cast<std::size_t>(w)].find(v);
                if (it == out[static_cast<std::size_t>(w)].end() || it->second != 1)
                    return false;
            }
        return true;
    }

    bool weakly_connected() const
    {
        if (n == 0)
            return false;
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::vector<int> stack{0};
        seen[0] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto* side : {&out, &in})
                for (auto [w, m] : (*side)[static_cast<std::size_t>(v)])
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = true;
                        ++count;
                        stack.push_back(w);
                    }
        }
        return count == n;
    }

    /// 2-colouring of the symmetric graph, empty if odd cycle.
    std::vector<int> two_colouring() const
    {
        std::vector<int> colour(static_cast<std::size_t>(n), -1);
        for (int s = 0; s < n; ++s) {
            if (colour[static_cast<std::size_t>(s)] >= 0)
                continue;
            colour[static_cast<std::size_t>(s)] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto [w, m] : out[static_cast<std::size_t>(v)]) {
                    int& cw = colour[static_cast<std::size_t>(w)];
                    if (cw < 0) {
                        cw = 1 - colour[static_cast<std::size_t>(v)];
                        stack.push_back(w);
                    } else if (cw == colour[static_cast<std::size_t>(v)]) {
                        return {};
                    }
                }
            }
        }
        return colour;
    }

    std::size_t undirected_degree(int v) const { return out[static_cast<std::size_t>(v)].size(); }
};

bool is_grid_prefix(const Structure& s)
{
    if (!s.symmetric_simple() || !s.weakly_connected() || s.two_colouring().empty())
        return false;
    int interior = 0;
    for (int v = 0; v < s.n; ++v) {
        if (s.undirected_degree(v) > 4)
            return false;
        if (s.undirected_degree(v) != 4)
            continue;
        std::vector<int> nbrs;
        for (auto [w, m] : s.out[static_cast<std::size_t>(v)])
            nbrs.push_back(w);
        if (!std::all_of(nbrs.begin(), nbrs.end(), [&](int w) { return s.undirected_degree(w) == 4; }))
            continue;
        ++interior;
        // In the square lattice each neighbour closes a square with exactly
        // two of the other three (the perpendicular ones).
        for (int a : nbrs) {
            int squares = 0;
            for (int b : nbrs) {
                if (a == b)
                    continue;
                bool shared = false;
                for (auto [w, m] : s.out[static_cast<std::size_t>(a)])
                    if (w != v && s.out[static_cast<std::size_t>(b)].count(w))
                        shared = true;
                squares += shared;
            }
            if (squares != 2)
                return false;
        }
    }
    return interior > 0;
}

ShapeLabel classify_closed(const Structure& s)
{
    using K = ShapeLabel::Kind;
    const int n = s.n;
    if (!s.weakly_connected())
        return {};
    bool permutation = true;
    for (int v = 0; v < n; ++v)
        permutation = permutation && s.out_deg(v) == 1 && s.in_deg(v) == 1;
    if (permutation)
        return {K::DirectedCycle, n};
    if (!s.symmetric_simple())
        return {};
    bool all_deg = [&](std::size_t d) {
        for (int v = 0; v < n; ++v)
            if (s.undirected_degree(v) != d)
                return false;
        return true;
    }(static_cast<std::size_t>(n - 1));
    if (n >= 2 && all_deg)
        return {K::CompleteK, n};
    auto colour = s.two_colouring();
    if (!colour.empty() && n % 2 == 0) {
        int d = n / 2;
        int side0 = static_cast<int>(std::count(colour.begin(), colour.end(), 0));
        bool complete = side0 == d;
        for (int v = 0; v < n && complete; ++v)
            complete = static_cast<int>(s.undirected_degree(v)) == d;
        if (complete)
            return {K::CompleteBipartite, d};
    }
    bool two_regular = n >= 3;
    for (int v = 0; v < n && two_regular; ++v)
        two_regular = s.undirected_degree(v) == 2;
    if (two_regular)
        return {K::Cycle, n};
    return {};
}

ShapeLabel classify_prefix(const Structure& s, std::size_t arc_count)
{
    using K = ShapeLabel::Kind;
    if (!s.weakly_connected())
        return {};
    bool path = static_cast<int>(arc_count) == s.n - 1;
    for (int v = 0; v < s.n && path; ++v)
        path = s.out_deg(v) <= 1 && s.in_deg(v) <= 1 && !s.out[static_cast<std::size_t>(v)].count(v);
    if (path)
        return {K::DirectedPathPrefix, s.n};
    if (s.symmetric_simple()) {
        bool ray = static_cast<int>(arc_count) == 2 * (s.n - 1);
        for (int v = 0; v < s.n && ray; ++v)
            ray = s.undirected_degree(v) <= 2;
        if (ray)
            return {K::DoubleRayPrefix, s.n};
    }
    if (is_grid_prefix(s))
        return {K::GridPrefix, s.n};
    return {};
}

std::string clean_label(Complex z)
{
    const double floor = 1e-12 * std::max(1.0, std::abs(z));
    double re = std::abs(z.real()) <= floor ? 0.0 : z.real();
    double im = std::abs(z.imag()) <= floor ? 0.0 : z.imag();
    return format_complex({re, im}, 6);
}

} // namespace

std::vector<Neighbor> out_neighbors(const Polynomial& phi, Complex u)
{
    return neighbors(Fibers(phi), u, Axis::y);
}

std::vector<Neighbor> in_neighbors(const Polynomial& phi, Complex v)
{
    return neighbors(Fibers(phi), v, Axis::x);
}

int ExploredDigraph::out_degree(int v) const
{
    int s = 0;
    for (const auto& a : arcs)
        if (a.from == v)
            s += a.mult;
    return s;
}

int ExploredDigraph::in_degree(int v) const
{
    int s = 0;
    for (const auto& a : arcs)
        if (a.to == v)
            s += a.mult;
    return s;
}

ExploredDigraph explore_component(const Polynomial& phi, Complex seed, const Budget& budget)
{
    return search(Fibers(phi), seed, budget, true, true);
}

ExploredDigraph explore_strong_component(const Polynomial& poly, Complex seed, const Budget& budget)
{
    const Fibers phi(poly);
    ExploredDigraph fwd = search(phi, seed, budget, true, false);
    if (!fwd.truncated)
        return seed_scc(fwd);
    ExploredDigraph bwd = search(phi, seed, budget, false, true);
    if (!bwd.truncated)
        return seed_scc(induced_out(phi, bwd.vertices, budget.dedup_eps));

    VertexStore back(budget.dedup_eps);
    for (Complex z : bwd.vertices)
        back.add(z);
    std::vector<Complex> common;
    for (Complex z : fwd.vertices)
        if (back.find(z) >= 0)
            common.push_back(z);
    ExploredDigraph g = seed_scc(induced_out(phi, common, budget.dedup_eps));
    g.truncated = true;
    return g;
}

std::string ShapeLabel::to_string() const
{
    switch (kind) {
    case Kind::DirectedCycle:
        return "DirectedCycle(" + std::to_string(n) + ")";
    case Kind::Cycle:
        return "Cycle(" + std::to_string(n) + ")";
    case Kind::CompleteK:
        return "CompleteK(" + std::to_string(n) + ")";
    case Kind::CompleteBipartite:
        return "CompleteBipartite(" + std::to_string(n) + ")";
    case Kind::DoubleRayPrefix:
        return "DoubleRayPrefix";
    case Kind::DirectedPathPrefix:
        return "DirectedPathPrefix";
    case Kind::GridPrefix:
        return "GridPrefix";
    case Kind::Unknown:
        return "Unknown";
    }
    return "Unknown";
}

ShapeLabel classify(const ExploredDigraph& g)
{
    if (g.vertices.empty())
        return {};
    Structure s(g);
    return g.truncated ? classify_prefix(s, g.arcs.size()) : classify_closed(s);
}

bool same_shape(const ShapeLabel& a, const ShapeLabel& b)
{
    using K = ShapeLabel::Kind;
    auto canon = [](ShapeLabel l) {
        if (l.kind == K::CompleteK && l.n == 3)
            return ShapeLabel{K::Cycle, 3};
        if (l.kind == K::CompleteBipartite && l.n == 2)
            return ShapeLabel{K::Cycle, 4};
        if (l.kind == K::CompleteK && l.n == 2)
            return ShapeLabel{K::DirectedCycle, 2};
        if (l.kind == K::DoubleRayPrefix || l.kind == K::DirectedPathPrefix || l.kind == K::GridPrefix)
            l.n = 0; // prefix sizes depend on the budget
        return l;
    };
    return canon(a) == canon(b);
}

bool is_isomorphic(const ExploredDigraph& g, const ExploredDigraph& h)
{
    constexpr std::size_t limit = 12;
    if (g.truncated || h.truncated)
        throw DomainError("is_isomorphic needs closed graphs; compare classify() labels instead");
    if (g.vertices.size() > limit || h.vertices.size() > limit)
        throw DomainError("is_isomorphic handles at most 12 vertices; compare classify() labels instead");
    if (g.vertices.size() != h.vertices.size())
        return false;
    const int n = static_cast<int>(g.vertices.size());
    auto matrix = [n](const ExploredDigraph& x) {
        std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        for (const auto& a : x.arcs)
            m[static_cast<std::size_t>(a.from)][static_cast<std::size_t>(a.to)] += a.mult;
        return m;
    };
    auto mg = matrix(g), mh = matrix(h);
    auto signature = [n](const std::vector<std::vector<int>>& m, int v) {
        int o = 0, i = 0;
        for (int w = 0; w < n; ++w) {
            o += m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
            i += m[static_cast<std::size_t>(w)][static_cast<std::size_t>(v)];
        }
        return std::array<int, 3>{o, i, m[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]};
    };
    std::vector<std::array<int, 3>> sg, sh;
    for (int v = 0; v < n; ++v) {
        sg.push_back(signature(mg, v));
        sh.push_back(signature(mh, v));
    }
    {
        auto a = sg, b = sh;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return false;
    }
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::function<bool(int)> extend = [&](int v) {
        if (v == n)
            return true;
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || sg[static_cast<std::size_t>(v)] != sh[static_cast<std::size_t>(w)])
                continue;
            bool ok = true;
            for (int k = 0; k < v && ok; ++k) {
                auto mk = static_cast<std::size_t>(map[static_cast<std::size_t>(k)]);
                ok = mg[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)] == mh[static_cast<std::size_t>(w)][mk] &&
                     mg[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] == mh[mk][static_cast<std::size_t>(w)];
            }
            if (!ok)
                continue;
            map[static_cast<std::size_t>(v)] = w;
            used[static_cast<std::size_t>(w)] = true;
            if (extend(v + 1))
                return true;
            used[static_cast<std::size_t>(w)] = false;
        }
        return false;
    };
    return extend(0);
}

std::string to_dot(const ExploredDigraph& g)
{
    std::string out = "digraph G {\n";
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        out += "  " + std::to_string(v) + " [label=\"" + clean_label(g.vertices[v]) + "\"];\n";
    for (const auto& a : g.arcs)
        out += "  " + std::to_string(a.from) + " -> " + std::to_string(a.to) + " [label=\"" + std::to_string(a.mult) +
               "\"];\n";
    out += "}\n";
    return out;
}

json to_json(const ExploredDigraph& g)
{
    json vs = json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        vs.push_back({{"id", v}, {"re", g.vertices[v].real()}, {"im", g.vertices[v].imag()}});
    json as = json::array();
    for (const auto& a : g.arcs)
        as.push_back({{"from", a.from}, {"to", a.to}, {"mult", a.mult}});
    return {{"seed", g.seed_id}, {"truncated", g.truncated}, {"vertices", vs}, {"arcs", as}};
}

ExploredDigraph explored_from_json(const json& j)
{
    try {
        ExploredDigraph g;
        g.seed_id = j.at("seed").get<int>();
        g.truncated = j.at("truncated").get<bool>();
        const auto& vs = j.at("vertices");
        g.vertices.resize(vs.size());
        for (const auto& v : vs) {
            auto id = v.at("id").get<std::size_t>();
            if (id >= g.vertices.size())
                throw DomainError("vertex id out of range");
            g.vertices[id] = {v.at("re").get<double>(), v.at("im").get<double>()};
        }
        for (const auto& a : j.at("arcs")) {
            ExploredArc arc{a.at("from").get<int>(), a.at("to").get<int>(), a.at("mult").get<int>()};
            if (arc.from < 0 || arc.to < 0 || arc.from >= static_cast<int>(g.vertices.size()) ||
                arc.to >= static_cast<int>(g.vertices.size()) || arc.mult < 1)
                throw DomainError("arc refers to a missing vertex or has multiplicity < 1");
            g.arcs.push_back(arc);
        }
        return g;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed graph JSON: ") + e.what());
    }
}

} // namespace polygraph
