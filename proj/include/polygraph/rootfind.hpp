#ifndef POLYGRAPH_ROOTFIND_HPP
#define POLYGRAPH_ROOTFIND_HPP

#include <vector>

#include "polygraph/unipoly.hpp"

namespace polygraph {

struct Root
{
    Complex value;
    int multiplicity = 1;
    /// |p(value)| relative to sum |c_k| |value|^k.
    double residual = 0.0;
};

struct RootSet
{
    std::vector<Root> roots;
    /// Every root's residual is at most this value.
    double residual_bound = 0.0;
    /// max_k |c_k - c'_k| / max_k |c_k| where c' is rebuilt from the roots.
    double reconstruction_error = 0.0;
    int iterations = 0;

    int total_multiplicity() const;
};

struct RootOptions
{
    double tol = 1e-12;
    int max_iters = 200;
};

/// Raised when Aberth iteration does not settle; carries the last iterate.
class RootFindError : public NumericalError
{
  public:
    RootFindError(const std::string& message, std::vector<Complex> best)
        : NumericalError(message), best_(std::move(best))
    {
    }
    const std::vector<Complex>& best_iterate() const { return best_; }

  private:
    std::vector<Complex> best_;
};

/// All roots of p with multiplicities (Aberth–Ehrlich). Exact zero
/// low-order coefficients are split off as an exact root at 0. Roots
/// closer than tol^(1/m)(1+|z|) for a tentative cluster size m are merged.
RootSet roots(const UniPoly<Complex>& p, const RootOptions& opts = {});
RootSet roots(const UniPoly<GaussRat>& p, const RootOptions& opts = {});

/// lead * prod (x - r)^m.
UniPoly<Complex> poly_from_roots(const RootSet& rs, Complex lead);

/// Newton refinement of a root of known multiplicity m, applied to the
/// (m-1)-th derivative; keeps the input when no step improves it.
Complex polish_root(const UniPoly<Complex>& p, Complex z, int multiplicity, int steps = 3);

} // namespace polygraph

#endif
