#include "polygraph/ratrec.hpp"

#include <cmath>

namespace polygraph {

std::optional<Fraction> recognize_rational(double x, long q_max, double tol, int depth)
{
    if (!std::isfinite(x) || q_max < 1)
        return std::nullopt;
    // convergents h/k via h_n = a_n h_{n-1} + h_{n-2}
    long h_prev = 1, h_prev2 = 0, k_prev = 0, k_prev2 = 1;
    double rest = x;
    for (int step = 0; step < depth; ++step) {
        double a = std::floor(rest);
        if (std::abs(a) > 1e15)
            break;
        long ai = static_cast<long>(a);
        long h = ai * h_prev + h_prev2;
        long k = ai * k_prev + k_prev2;
        if (k > q_max)
            break;
        if (std::abs(x - static_cast<double>(h) / static_cast<double>(k)) <= tol)
            return Fraction{h, k};
        double frac = rest - a;
        if (frac == 0.0)
            break;
        rest = 1.0 / frac;
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
    }
    return std::nullopt;
}

} // namespace polygraph
