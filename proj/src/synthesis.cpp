#include "polygraph/synthesis.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "polygraph/parse.hpp"

namespace polygraph {

namespace {

using UniQ = UniPoly<GaussRat>;

std::string vertex_name(const FiniteDigraph& d, int v)
{
    return std::to_string(v) + " (value " + d.values[static_cast<std::size_t>(v)].to_string() + ")";
}

void check_arcs(const FiniteDigraph& d)
{
    for (auto [u, v] : d.arcs)
        if (u < 0 || v < 0 || u >= d.order() || v >= d.order())
            throw DomainError("arc (" + std::to_string(u) + ", " + std::to_string(v) + ") refers to a missing vertex");
}

void check_distinct(const std::vector<GaussRat>& values)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (values[i] == values[j])
                throw DomainError("vertices " + std::to_string(i) + " and " + std::to_string(j) +
                                  " share the value " + values[i].to_string());
}

bool strongly_connected(const FiniteDigraph& d)
{
    const auto n = static_cast<std::size_t>(d.order());
    auto reach = [&](bool forward) {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, v] : d.arcs)
            adj[static_cast<std::size_t>(forward ? u : v)].push_back(forward ? v : u);
        std::vector<bool> seen(n, false);
        std::vector<int> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[static_cast<std::size_t>(v)])
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n;
    };
    return n > 0 && reach(true) && reach(false);
}

template <class F>
BiPoly<F> product_of_lines(const std::vector<F>& s, bool additive)
{
    using B = BiPoly<F>;
    B acc = B::constant(F(1));
    for (const auto& v : s)
        acc = acc * (additive ? B::y() - B::x() - B::constant(v) : B::y() - v * B::x());
    return acc;
}

template <class Check>
Polynomial lines(const std::vector<Scalar>& s, bool additive, Check check)
{
    if (s.empty())
        throw DomainError("generator set is empty");
    for (std::size_t i = 0; i < s.size(); ++i) {
        check(s[i]);
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            bool same = s[i].is_exact() && s[j].is_exact() ? s[i].exact() == s[j].exact()
                                                           : std::abs(s[i].to_complex() - s[j].to_complex()) <=
                                                                 1e-12 * (1.0 + std::abs(s[i].to_complex()));
            if (same)
                throw DomainError("generator " + s[i].to_string() + " is repeated");
        }
    }
    bool exact = std::all_of(s.begin(), s.end(), [](const Scalar& v) { return v.is_exact(); });
    if (exact) {
        std::vector<GaussRat> e;
        for (const auto& v : s)
            e.push_back(v.exact());
        return product_of_lines(e, additive);
    }
    std::vector<Complex> c;
    for (const auto& v : s)
        c.push_back(v.to_complex());
    return product_of_lines(c, additive);
}

template <class F>
BiPoly<F> additive_lift(const UniPoly<F>& f)
{
    using B = BiPoly<F>;
    return B::from_uni(f, Axis::y).substitute_linear(B::x(), B::y() - B::x());
}

template <class F>
std::string form_name(typename FormRecognition<F>::Kind k)
{
    using K = typename FormRecognition<F>::Kind;
    return k == K::AdditiveDifference ? "AdditiveDifference" : k == K::Homogeneous ? "Homogeneous" : "Neither";
}

void require_order(int n, int min, const char* what)
{
    if (n < min)
        throw DomainError(std::string(what) + " needs n >= " + std::to_string(min));
}

} // namespace

FiniteDigraph FiniteDigraph::with_default_values(int n, std::vector<std::pair<int, int>> arcs)
{
    FiniteDigraph d;
    for (int v = 1; v <= n; ++v)
        d.values.emplace_back(static_cast<long>(v));
    d.arcs = std::move(arcs);
    return d;
}

Factorization one_factorization(const FiniteDigraph& d)
{
    check_arcs(d);
    const int n = d.order();
    if (n == 0)
        throw DomainError("digraph has no vertices");
    std::vector<std::vector<int>> count(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    std::vector<int> outdeg(static_cast<std::size_t>(n), 0), indeg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : d.arcs) {
        ++count[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        ++outdeg[static_cast<std::size_t>(u)];
        ++indeg[static_cast<std::size_t>(v)];
    }
    const int deg = outdeg[0];
    for (int v = 0; v < n; ++v) {
        if (outdeg[static_cast<std::size_t>(v)] != deg)
            throw DomainError("digraph is not regular: vertex " + vertex_name(d, v) + " has out-degree " +
                              std::to_string(outdeg[static_cast<std::size_t>(v)]) + ", expected " +
                              std::to_string(deg));
        if (indeg[static_cast<std::size_t>(v)] != deg)
            throw DomainError("digraph is not regular: vertex " + vertex_name(d, v) + " has in-degree " +
                              std::to_string(indeg[static_cast<std::size_t>(v)]) + ", expected " +
                              std::to_string(deg));
    }

    Factorization out;
    for (int round = 0; round < deg; ++round) {
        std::vector<int> owner(static_cast<std::size_t>(n), -1); // in-copy vertex -> out-copy vertex
        std::vector<bool> visited;
        std::function<bool(int)> augment = [&](int u) {
            for (int v = 0; v < n; ++v) {
                if (count[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] == 0 ||
                    visited[static_cast<std::size_t>(v)])
                    continue;
                visited[static_cast<std::size_t>(v)] = true;
                if (owner[static_cast<std::size_t>(v)] < 0 || augment(owner[static_cast<std::size_t>(v)])) {
                    owner[static_cast<std::size_t>(v)] = u;
                    return true;
                }
            }
            return false;
        };
        for (int u = 0; u < n; ++u) {
            visited.assign(static_cast<std::size_t>(n), false);
            if (!augment(u))
                throw Error("internal", "regular bipartite multigraph without a perfect matching");
        }
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            int u = owner[static_cast<std::size_t>(v)];
            perm[static_cast<std::size_t>(u)] = v;
            --count[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        }
        out.factors.push_back(std::move(perm));
    }
    return out;
}

UniQ interpolate_factor(const std::vector<int>& perm, const std::vector<GaussRat>& values)
{
    if (perm.size() != values.size())
        throw DomainError("permutation and value list differ in length");
    check_distinct(values);
    UniQ acc;
    for (std::size_t k = 0; k < values.size(); ++k) {
        int target = perm[k];
        if (target < 0 || static_cast<std::size_t>(target) >= values.size())
            throw DomainError("permutation entry out of range");
        UniQ basis = UniQ::constant(GaussRat(1));
        GaussRat denom(1);
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (j == k)
                continue;
            basis = basis * UniQ::linear_root(values[j]);
            denom *= values[k] - values[j];
        }
        acc = acc + (values[static_cast<std::size_t>(target)] / denom) * basis;
    }
    return acc;
}

ExactPoly digraph_to_poly(const FiniteDigraph& d)
{
    if (d.order() < 2)
        throw DomainError("digraph needs at least two vertices");
    check_arcs(d);
    check_distinct(d.values);
    if (!strongly_connected(d))
        throw DomainError("digraph is not strongly connected");
    ExactPoly acc = ExactPoly::constant(GaussRat(1));
    for (const auto& perm : one_factorization(d).factors)
        acc = acc * (ExactPoly::y() - ExactPoly::from_uni(interpolate_factor(perm, d.values), Axis::x));
    return acc;
}

Polynomial cayley_additive(const std::vector<Scalar>& s)
{
    return lines(s, true, [](const Scalar& v) {
        if (v.is_zero())
            throw DomainError("0 cannot be a generator: every vertex would carry a loop");
    });
}

Polynomial cayley_multiplicative(const std::vector<Scalar>& s)
{
    return lines(s, false, [](const Scalar& v) {
        if (v.is_zero())
            throw DomainError("0 cannot be a multiplicative generator");
        if ((v - Scalar(1L)).is_zero(v.is_exact() ? 0.0 : 1e-12))
            throw DomainError("1 cannot be a multiplicative generator: every vertex would carry a loop");
    });
}

Scalar root_of_unity(int n, long k)
{
    if (n < 1)
        throw DomainError("root of unity order must be positive");
    long r = ((k % n) + n) % n;
    // Gaussian integer cases: the quarter turns
    if ((4 * r) % n == 0) {
        switch ((4 * r) / n) {
        case 0:
            return Scalar(GaussRat(1));
        case 1:
            return Scalar(GaussRat::i());
        case 2:
            return Scalar(GaussRat(-1));
        default:
            return Scalar(-GaussRat::i());
        }
    }
    return Scalar(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / n));
}

Polynomial complete(int n)
{
    require_order(n, 3, "complete");
    // prod_{k=1}^{n-1} (y - w^k x) = (y^n - x^n) / (y - x)
    ExactPoly acc;
    for (int k = 0; k < n; ++k)
        acc = acc + ExactPoly::monomial(GaussRat(1), n - 1 - k, k);
    return acc;
}

Polynomial bipartite(int d)
{
    require_order(d, 1, "bipartite");
    // the odd powers of a primitive 2d-th root are the roots of s^d = -1
    return ExactPoly::monomial(GaussRat(1), 0, d) + ExactPoly::monomial(GaussRat(1), d, 0);
}

Polynomial circulant(int n, const std::vector<int>& s)
{
    require_order(n, 2, "circulant");
    if (s.empty())
        throw DomainError("circulant needs a nonempty connection set");
    long g = n;
    std::vector<Scalar> gens;
    for (int v : s) {
        int r = ((v % n) + n) % n;
        if (r == 0)
            throw DomainError("circulant connection set may not contain 0");
        g = std::gcd(g, static_cast<long>(r));
        gens.push_back(root_of_unity(n, r));
    }
    if (g != 1)
        throw DomainError("connection set does not generate Z_" + std::to_string(n));
    return cayley_multiplicative(gens);
}

Polynomial prism(int n)
{
    require_order(n, 3, "prism");
    Polynomial rot = cayley_multiplicative({root_of_unity(n, 1), root_of_unity(n, n - 1)});
    return rot.visit([](const auto& p) -> Polynomial {
        using B = std::decay_t<decltype(p)>;
        using F = typename B::Field;
        return p * (B::x() * B::y() - B::constant(F(2)));
    });
}

Polynomial dihedral(int n)
{
    require_order(n, 3, "dihedral");
    Polynomial rot = cayley_multiplicative({root_of_unity(n, 1)});
    return rot.visit([](const auto& p) -> Polynomial {
        using B = std::decay_t<decltype(p)>;
        using F = typename B::Field;
        return p * (B::x() * B::y() - B::constant(F(2)));
    });
}

FormRecognition<GaussRat> recognize_form(const ExactPoly& phi)
{
    using K = FormRecognition<GaussRat>::Kind;
    FormRecognition<GaussRat> out;
    UniQ f = phi.eval_partial(GaussRat(0), Axis::x);
    if (!phi.is_constant() && additive_lift(f) == phi) {
        out.kind = K::AdditiveDifference;
        out.f = f;
    } else if (!phi.is_zero() && phi.is_homogeneous()) {
        out.kind = K::Homogeneous;
    }
    return out;
}

FormRecognition<Complex> recognize_form(const FloatPoly& phi, double tol)
{
    using K = FormRecognition<Complex>::Kind;
    FormRecognition<Complex> out;
    if (phi.is_zero())
        return out;
    const double scale = phi.norm_inf();
    auto f = phi.eval_partial(Complex(0.0), Axis::x);
    if (!phi.is_constant() && (additive_lift(f) - phi).norm_inf() <= tol * scale) {
        out.kind = K::AdditiveDifference;
        out.f = f;
        return out;
    }
    // homogeneous when every term off the top total degree is negligible
    int top = phi.total_degree();
    double off = 0.0;
    for (const auto& [i, j, v] : phi.terms())
        if (i + j != top)
            off = std::max(off, std::abs(v));
    if (off <= tol * scale)
        out.kind = K::Homogeneous;
    return out;
}

json recognize_form_json(const Polynomial& phi)
{
    return phi.visit([](const auto& p) {
        auto r = recognize_form(p);
        using F = typename std::decay_t<decltype(p)>::Field;
        json j{{"form", form_name<F>(r.kind)}};
        if (r.kind == FormRecognition<F>::Kind::AdditiveDifference)
            j["f"] = r.f.to_string('s');
        return j;
    });
}

json to_json(const FiniteDigraph& d)
{
    json vs = json::array();
    for (const auto& v : d.values)
        vs.push_back(v.to_string());
    json as = json::array();
    for (auto [u, v] : d.arcs)
        as.push_back({u, v});
    return {{"vertices", vs}, {"arcs", as}};
}

FiniteDigraph finite_digraph_from_json(const json& j)
{
    try {
        FiniteDigraph d;
        for (const auto& a : j.at("arcs"))
            d.arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
        if (j.contains("vertices")) {
            for (const auto& v : j.at("vertices")) {
                Scalar s = parse_scalar(v.is_string() ? v.get<std::string>() : v.dump());
                if (!s.is_exact())
                    throw DomainError("vertex value " + s.to_string() + " is not exact");
                d.values.push_back(s.exact());
            }
        } else {
            d = FiniteDigraph::with_default_values(j.at("n").get<int>(), d.arcs);
        }
        check_arcs(d);
        return d;
    } catch (const json::exception& e) {
        throw DomainError(std::string("malformed digraph JSON: ") + e.what());
    }
}

} // namespace polygraph
