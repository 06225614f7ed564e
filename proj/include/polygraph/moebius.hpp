#ifndef POLYGRAPH_MOEBIUS_HPP
#define POLYGRAPH_MOEBIUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polygraph/bipoly.hpp"
#include "polygraph/serialize.hpp"
#include "polygraph/sympoly.hpp"

namespace polygraph {

/// f(z) = (a z + b) / (c z + d), stored as its matrix (a b; c d).
struct Mobius
{
    Scalar a, b, c, d;

    bool is_exact() const;
    Scalar det() const;
    Scalar trace() const;
    Complex operator()(Complex z) const;

    /// Matrix product: (f * g)(z) = f(g(z)).
    friend Mobius operator*(const Mobius& f, const Mobius& g);
    Mobius pow(int n) const;

    /// Exact: the matrix is exactly a multiple of I. Float: b, c and a - d
    /// are within tol of zero relative to max(|a|, |d|).
    bool is_scalar_matrix(double tol = 1e-9) const;

    static Mobius identity() { return {Scalar(1L), Scalar(0L), Scalar(0L), Scalar(1L)}; }
};

/// Coefficients of (c x + d) y - (a x + b), without standardness checks.
/// Throws DomainError unless both partial degrees are at most 1.
Mobius coefficients_deg1(const Polynomial& phi);

/// Empty when (c x + d) y - (a x + b) is standard, else the failed
/// condition ("ad - bc = 0" or "divisible by y - x").
std::optional<std::string> deg1_failure(const Mobius& m, double tol = 1e-9);

/// Throws DomainError on degree mismatch or when the polynomial is not
/// standard.
Mobius from_poly(const Polynomial& phi);
Polynomial to_poly(const Mobius& m);

/// Least n <= n_max with A^n a multiple of I, found from the angle between
/// the eigenvalues and confirmed by matrix powering. Throws
/// AmbiguousError when a float matrix is within 1e-8 of parabolic.
std::optional<int> projective_order(const Mobius& m, int n_max = 512);

struct Deg1Verdict
{
    enum class Kind { DirectedCycles, InfinitePaths, NotStandard };
    Kind kind = Kind::NotStandard;
    int n = 0;
    std::string reason; // NotStandard only

    std::string to_string() const;
};

Deg1Verdict classify_deg1(const Polynomial& phi, int n_max = 512);

/// F_n = U_n(a + d, ad - bc), the polynomial with c_n = F_n c for A^n.
SymPoly cycle_polynomial(int n);
/// F_n with every factor F_k, k | n, 2 <= k < n, divided out.
SymPoly cycle_condition(int n);

/// cycle_condition(n) at the entries scaled to max modulus 1; exact zero
/// test for exact entries, |value| < tol otherwise.
bool check_condition(const Mobius& m, int n, double tol = 1e-9);

struct MobiusCayley
{
    Polynomial phi;
    Complex seed;
};

/// Product of the generators' polynomials plus a seed drawn from the disk
/// |z| <= 2 at distance >= 1e-3 from every loop or defective vertex of
/// every factor.
MobiusCayley cayley_mobius(const std::vector<Mobius>& generators, std::uint64_t rng_seed = 0);

json to_json(const Mobius& m);
json to_json(const Deg1Verdict& v);

} // namespace polygraph

#endif
