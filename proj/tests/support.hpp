#ifndef POLYGRAPH_TESTS_SUPPORT_HPP
#define POLYGRAPH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>

#include "polygraph/bipoly.hpp"
#include "polygraph/parse.hpp"
#include "polygraph/synthesis.hpp"

namespace polygraph::test {

inline ExactPoly P(const char* text)
{
    return parse_polynomial(text).exact();
}

inline FloatPoly PF(const char* text)
{
    return parse_polynomial(text).to_float();
}

inline UniPoly<GaussRat> UQ(std::initializer_list<long> ascending)
{
    std::vector<GaussRat> c;
    for (long v : ascending)
        c.emplace_back(v);
    return UniPoly<GaussRat>(std::move(c));
}

inline GaussRat Q(long num, long den = 1)
{
    return GaussRat(Rational(num, den));
}

/// Random integer-coefficient polynomial with partial degrees <= (ex, ey).
inline ExactPoly random_exact(std::mt19937_64& rng, int ex, int ey, int range = 3, double density = 0.7)
{
    std::uniform_int_distribution<int> coef(-range, range);
    std::bernoulli_distribution keep(density);
    std::vector<std::vector<GaussRat>> rows(static_cast<std::size_t>(ex) + 1,
                                            std::vector<GaussRat>(static_cast<std::size_t>(ey) + 1, GaussRat(0)));
    for (auto& row : rows)
        for (auto& v : row)
            if (keep(rng))
                v = GaussRat(coef(rng));
    return ExactPoly(std::move(rows));
}

inline Complex random_complex(std::mt19937_64& rng, double radius = 2.0)
{
    std::uniform_real_distribution<double> u(-radius, radius);
    return {u(rng), u(rng)};
}

/// Random d-regular digraph: union of d random permutations.
inline FiniteDigraph random_regular(std::mt19937_64& rng, int n, int d)
{
    std::vector<std::pair<int, int>> arcs;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int k = 0; k < d; ++k) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int u = 0; u < n; ++u)
            arcs.emplace_back(u, perm[static_cast<std::size_t>(u)]);
    }
    std::shuffle(arcs.begin(), arcs.end(), rng);
    return FiniteDigraph::with_default_values(n, arcs);
}

/// lead * prod (t - r).
inline UniPoly<Complex> expand(const std::vector<Complex>& rts, Complex lead)
{
    auto acc = UniPoly<Complex>::constant(lead);
    for (auto r : rts)
        acc = acc * UniPoly<Complex>::linear_root(r);
    return acc;
}

} // namespace polygraph::test

#endif
