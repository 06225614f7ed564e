#ifndef POLYGRAPH_QUADRATIC_HPP
#define POLYGRAPH_QUADRATIC_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polygraph/bipoly.hpp"
#include "polygraph/explorer.hpp"
#include "polygraph/serialize.hpp"

namespace polygraph {

/// x^2 + y^2 + a x y + b (x + y) + c.
struct QuadSym
{
    Scalar a, b, c;

    /// Throws DomainError unless the polynomial is standard.
    static QuadSym make(Scalar a, Scalar b, Scalar c);

    bool is_exact() const { return a.is_exact() && b.is_exact() && c.is_exact(); }
    Polynomial to_poly() const;
    /// b (x + y) moved into the constant by the shift z -> z - b / (a + 2).
    Scalar shift() const;
};

/// Throws DomainError when a = -2.
QuadSym normalize(const QuadSym& q);

/// v0, v1 and `steps` further iterates of v' = -a v - u - b. Throws
/// DomainError unless Phi(v0, v1) = 0 up to 1e-9 relative.
std::vector<Complex> recurrence_orbit(const QuadSym& q, Complex v0, Complex v1, int steps);

/// Roots of t^2 + a t + 1.
std::pair<Complex, Complex> characteristic_roots(const QuadSym& q);

struct CosineWitness
{
    int n = 0;
    int k = 0;
};

/// Least n <= n_max with a = 2 cos(2 pi k / n), gcd(k, n) = 1 and k < n / 2.
/// Rational a is decided exactly; float a through the angle's continued
/// fraction, confirmed to tol. a = +-2 never has a witness.
std::optional<CosineWitness> cosine_recognize(const Scalar& a, int n_max = 512, double tol = 1e-9);

struct QuadReport
{
    enum class Case { AMinus2, APlus2, Generic };
    Case kase = Case::Generic;
    std::vector<Complex> loops;
    std::vector<int> loop_multiplicities;
    std::vector<Complex> double_arc_origins;
    bool singular_components_finite = true;
    /// The finiteness flag came from exploration rather than the cosine test.
    bool finiteness_explored = false;
    /// Witness for a itself.
    std::optional<CosineWitness> cosine_witness;
    /// Witness for -a: the roots of t^2 + a t + 1 are e^(+-2 pi i k / n),
    /// so this n is the length of every non-singular cycle.
    std::optional<CosineWitness> root_witness;
    int cycle_length = 0; // 0 means DoubleRay

    bool is_cycle() const { return cycle_length > 0; }
    std::string verdict() const;
};

/// Case split and singular vertices in the original coordinates; verdict
/// and finiteness are left at their defaults.
QuadReport singular_inventory_quad(const QuadSym& q);

/// Full report. The verdict is Cycle(n) when -a = 2 cos(2 pi k / n): for
/// odd n, a = 2 cos(2 pi k / n) itself gives cycles of length 2n. Float a within 1e-9 of +-2 but not within 1e-12, or a
/// cosine match off by between tol and 10 tol, raises AmbiguousError.
QuadReport classify_deg2(const QuadSym& q, int n_max = 512, const Budget& budget = {400, 50, 1e-6});

json to_json(const QuadReport& r);

} // namespace polygraph

#endif
