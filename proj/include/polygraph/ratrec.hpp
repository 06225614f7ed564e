#ifndef POLYGRAPH_RATREC_HPP
#define POLYGRAPH_RATREC_HPP

#include <optional>

namespace polygraph {

struct Fraction
{
    long num = 0;
    long den = 1;
};

/// First continued-fraction convergent p/q of x with q <= q_max and
/// |x - p/q| <= tol, examining at most `depth` partial quotients.
std::optional<Fraction> recognize_rational(double x, long q_max, double tol, int depth = 20);

} // namespace polygraph

#endif
