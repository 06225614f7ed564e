#ifndef POLYGRAPH_POLYALG_HPP
#define POLYGRAPH_POLYALG_HPP

#include "polygraph/bipoly.hpp"

namespace polygraph {

/// Sylvester resultant of p and q with respect to `var`, as a polynomial in
/// the other variable. Exact: Bareiss fraction-free elimination over
/// polynomial entries. Float: evaluation at roots of unity followed by
/// inverse DFT, with degree bound degX(p)degY(q) + degX(q)degY(p).
/// A zero-degree argument gives the usual power convention; a single zero
/// argument gives 0; both zero throws DomainError.
UniPoly<GaussRat> resultant(const ExactPoly& p, const ExactPoly& q, Axis var);
UniPoly<Complex> resultant(const FloatPoly& p, const FloatPoly& q, Axis var);

/// Float resultant together with the largest Hadamard bound seen at the
/// sample points, the natural scale for deciding whether it vanishes.
struct ScaledResultant
{
    UniPoly<Complex> poly;
    double scale = 0.0;
};
ScaledResultant resultant_scaled(const FloatPoly& p, const FloatPoly& q, Axis var);

/// Runtime-mode wrapper; float input gives a float result.
Polynomial resultant(const Polynomial& p, const Polynomial& q, Axis var);

/// gcd of the coefficient polynomials of p with respect to `var` (monic).
UniPoly<GaussRat> content(const ExactPoly& p, Axis var);

/// p with its `var`-content divided out.
ExactPoly primitive_part(const ExactPoly& p, Axis var);

/// Quotient p / d in K[x][y]; throws Error("internal") if d does not divide p.
ExactPoly divide_exact(const ExactPoly& p, const ExactPoly& d);

/// Greatest common divisor in K[x][y], normalized so its leading term is 1.
ExactPoly gcd(const ExactPoly& p, const ExactPoly& q);

/// Radical: every irreducible factor to the first power, leading term 1.
ExactPoly squarefree_part(const ExactPoly& p);
/// Throws ModeError for float input.
ExactPoly squarefree_part(const Polynomial& p);

/// Scales p so that its leading term (highest y power, then highest x
/// power) is 1.
ExactPoly make_monic(const ExactPoly& p);

} // namespace polygraph

#endif
