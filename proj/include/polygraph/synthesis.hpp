#ifndef POLYGRAPH_SYNTHESIS_HPP
#define POLYGRAPH_SYNTHESIS_HPP

#include <utility>
#include <vector>

#include "polygraph/bipoly.hpp"
#include "polygraph/serialize.hpp"

namespace polygraph {

/// Finite digraph with exact vertex values; arcs may repeat.
struct FiniteDigraph
{
    std::vector<GaussRat> values;
    std::vector<std::pair<int, int>> arcs;

    int order() const { return static_cast<int>(values.size()); }

    /// n vertices valued 1..n.
    static FiniteDigraph with_default_values(int n, std::vector<std::pair<int, int>> arcs);
};

/// factors[k][u] is the image of u under the k-th permutation.
struct Factorization
{
    std::vector<std::vector<int>> factors;
};

/// Split a d-regular digraph into d spanning permutations by repeated
/// bipartite perfect matching. Throws DomainError naming the first vertex
/// whose in- or out-degree differs from d.
Factorization one_factorization(const FiniteDigraph& d);

/// The polynomial of degree < n with L(values[u]) = values[perm[u]].
UniPoly<GaussRat> interpolate_factor(const std::vector<int>& perm, const std::vector<GaussRat>& values);

/// prod_k (y - L_k(x)) over a 1-factorization.
ExactPoly digraph_to_poly(const FiniteDigraph& d);

/// f(y - x) with f(s) = prod (s - s_i). Exact when every s_i is.
Polynomial cayley_additive(const std::vector<Scalar>& s);
/// prod (y - s_i x). Exact when every s_i is.
Polynomial cayley_multiplicative(const std::vector<Scalar>& s);

/// e^(2 pi i k / n); exact when the value is a Gaussian integer.
Scalar root_of_unity(int n, long k);

Polynomial complete(int n);
Polynomial bipartite(int d);
Polynomial circulant(int n, const std::vector<int>& s);
Polynomial prism(int n);
Polynomial dihedral(int n);

template <class F>
struct FormRecognition
{
    enum class Kind { AdditiveDifference, Homogeneous, Neither };
    Kind kind = Kind::Neither;
    UniPoly<F> f; // set for AdditiveDifference
};

/// Phi = f(y - x) is tested first, so c (y - x)^k counts as additive.
FormRecognition<GaussRat> recognize_form(const ExactPoly& phi);
FormRecognition<Complex> recognize_form(const FloatPoly& phi, double tol = 1e-12);
/// {"form": "AdditiveDifference", "f": "s^4 - 1"} and similar.
json recognize_form_json(const Polynomial& phi);

json to_json(const FiniteDigraph& d);
FiniteDigraph finite_digraph_from_json(const json& j);

} // namespace polygraph

#endif
