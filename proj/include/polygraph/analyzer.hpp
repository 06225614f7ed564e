#ifndef POLYGRAPH_ANALYZER_HPP
#define POLYGRAPH_ANALYZER_HPP

#include <string>
#include <vector>

#include "polygraph/polyalg.hpp"
#include "polygraph/serialize.hpp"

namespace polygraph {

enum class Failure { Constant, UniversalSource, UniversalSink, NonRadicalY, NonRadicalX, LoopEverywhere };

const char* to_string(Failure f);

/// Diagnosis of Phi(x, y) = sum a_i(x) y^i = sum b_j(y) x^j.
///
/// A and B are the gcds of the a_i and b_j (universal sources and sinks),
/// D = Res_y(Phi, dPhi/dy), E = Res_x(Phi, dPhi/dx), L(x) = Phi(x, x) and
/// S = L D E, whose roots are the singular vertices. E is a polynomial in y
/// but is stored, like the others, as a plain univariate polynomial.
template <class F>
struct StandardReport
{
    UniPoly<F> A, B, D, E, L, S;
    int d = 0; // degree in y
    int e = 0; // degree in x
    bool is_standard = false;
    std::vector<Failure> failure_reasons;
    /// Float mode only: some tested quantity was within 1e-7 (relative) of
    /// zero, so the verdict may flip under a small perturbation.
    bool numerically_uncertain = false;

    bool has(Failure f) const;
};

using ExactReport = StandardReport<GaussRat>;
using FloatReport = StandardReport<Complex>;

/// Exact verdicts.
ExactReport analyze(const ExactPoly& phi);
/// Same machinery at tolerance 1e-9 relative; resultants by interpolation.
FloatReport analyze(const FloatPoly& phi);

/// Relative thresholds used by the float analysis.
inline constexpr double float_zero_tol = 1e-9;
inline constexpr double float_uncertain_tol = 1e-7;

struct LoopVertex
{
    Complex vertex;
    int multiplicity = 1;
};

struct SingularInventory
{
    std::vector<LoopVertex> loops;
    std::vector<Complex> multi_arc_origins;
    std::vector<Complex> multi_arc_ends;
    std::vector<Complex> out_defective;
    std::vector<Complex> in_defective;
    bool numerically_uncertain = false;

    /// Every vertex of every list, duplicates removed within tol.
    std::vector<Complex> all_vertices(double tol = 1e-9) const;
};

/// Loops, multiple-arc endpoints and defective vertices of a standard
/// polynomial. Throws DomainError if the report is not standard.
SingularInventory singular_inventory(const ExactPoly& phi, const ExactReport& report, double tol = 1e-7);
SingularInventory singular_inventory(const FloatPoly& phi, const FloatReport& report, double tol = 1e-7);

/// Mode-dispatching convenience: analyze, then inventory (empty lists and
/// `is_standard = false` when the polynomial is not standard).
struct Diagnosis
{
    bool is_standard = false;
    bool numerically_uncertain = false;
    std::vector<Failure> failure_reasons;
    SingularInventory inventory;
    json report;
};
Diagnosis diagnose(const Polynomial& phi, double tol = 1e-7);

struct AppliedStep
{
    enum class Kind { TookRadical, RemovedLoopFactor };
    Kind kind;
    int count = 0; // number of (y - x) factors removed
};

/// Radical with every (y - x) factor removed, plus the steps applied.
/// Throws DomainError for constant input, universal vertices, or when
/// nothing but (y - x) factors remains.
std::pair<ExactPoly, std::vector<AppliedStep>> standardize(const ExactPoly& phi);

json to_json(const ExactReport& r);
json to_json(const FloatReport& r);
json to_json(const SingularInventory& inv);
json to_json(const std::vector<AppliedStep>& steps);

} // namespace polygraph

#endif
