#include "polygraph/polyalg.hpp"

#include <cmath>
#include <numbers>

namespace polygraph {

namespace {

using UniQ = UniPoly<GaussRat>;
using UniC = UniPoly<Complex>;

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Sylvester matrix of coefficient sequences given in ascending order.
template <class T>
Matrix<T> sylvester(const std::vector<T>& p, const std::vector<T>& q, const T& zero)
{
    int m = static_cast<int>(p.size()) - 1;
    int n = static_cast<int>(q.size()) - 1;
    int size = m + n;
    Matrix<T> s(static_cast<std::size_t>(size), std::vector<T>(static_cast<std::size_t>(size), zero));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k)
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = p[static_cast<std::size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k)
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] = q[static_cast<std::size_t>(n - k)];
    return s;
}

UniQ bareiss_det(Matrix<UniQ> m)
{
    std::size_t n = m.size();
    if (n == 0)
        return UniQ::constant(GaussRat(1));
    bool negate = false;
    UniQ prev = UniQ::constant(GaussRat(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero())
                ++pivot;
            if (pivot == n)
                return {};
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = UniQ{};
        }
        prev = m[k][k];
    }
    UniQ det = m[n - 1][n - 1];
    return negate ? -det : det;
}

/// Determinant by partial-pivot LU, also returning the Hadamard bound.
std::pair<Complex, double> lu_det(Matrix<Complex> m)
{
    std::size_t n = m.size();
    double hadamard = 1.0;
    for (const auto& row : m) {
        double s = 0.0;
        for (const auto& v : row)
            s += std::norm(v);
        hadamard *= std::sqrt(s);
    }
    Complex det(1.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m[i][k]) > std::abs(m[piv][k]))
                piv = i;
        if (m[piv][k] == Complex(0.0, 0.0))
            return {Complex(0.0, 0.0), hadamard};
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            Complex f = m[i][k] / m[k][k];
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] -= f * m[k][j];
        }
    }
    return {det, hadamard};
}

} // namespace

UniQ resultant(const ExactPoly& p0, const ExactPoly& q0, Axis var)
{
    if (p0.is_zero() && q0.is_zero())
        throw DomainError("resultant of two zero polynomials");
    if (p0.is_zero() || q0.is_zero())
        return {};
    const ExactPoly p = var == Axis::y ? p0 : p0.swapped();
    const ExactPoly q = var == Axis::y ? q0 : q0.swapped();
    auto s = sylvester(p.coeff_polys(Axis::y), q.coeff_polys(Axis::y), UniQ{});
    return bareiss_det(std::move(s));
}

ScaledResultant resultant_scaled(const FloatPoly& p0, const FloatPoly& q0, Axis var)
{
    if (p0.is_zero() && q0.is_zero())
        throw DomainError("resultant of two zero polynomials");
    if (p0.is_zero() || q0.is_zero())
        return {};
    const FloatPoly p = var == Axis::y ? p0 : p0.swapped();
    const FloatPoly q = var == Axis::y ? q0 : q0.swapped();
    int bound = p.deg_x() * q.deg_y() + q.deg_x() * p.deg_y();
    auto pc = p.coeff_polys(Axis::y);
    auto qc = q.coeff_polys(Axis::y);
    int samples = bound + 1;
    std::vector<Complex> values(static_cast<std::size_t>(samples));
    std::vector<Complex> nodes(static_cast<std::size_t>(samples));
    double scale = 0.0;
    for (int k = 0; k < samples; ++k) {
        Complex xk = std::polar(1.0, 2.0 * std::numbers::pi * k / samples);
        nodes[static_cast<std::size_t>(k)] = xk;
        std::vector<Complex> pv, qv;
        for (const auto& c : pc)
            pv.push_back(c(xk));
        for (const auto& c : qc)
            qv.push_back(c(xk));
        auto [det, had] = lu_det(sylvester(pv, qv, Complex(0.0, 0.0)));
        require_finite(det, "float resultant");
        values[static_cast<std::size_t>(k)] = det;
        scale = std::max(scale, had);
    }
    // Inverse DFT: c_j = (1/N) sum_k R(x_k) x_k^{-j}.
    std::vector<Complex> coeffs(static_cast<std::size_t>(samples), Complex(0.0, 0.0));
    for (int j = 0; j < samples; ++j) {
        Complex acc(0.0, 0.0);
        for (int k = 0; k < samples; ++k)
            acc += values[static_cast<std::size_t>(k)] *
                   std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) * k / samples);
        coeffs[static_cast<std::size_t>(j)] = acc / static_cast<double>(samples);
    }
    for (auto& c : coeffs)
        if (std::abs(c) <= 1e-12 * scale)
            c = Complex(0.0, 0.0);
    return {UniC(std::move(coeffs)), scale};
}

UniC resultant(const FloatPoly& p, const FloatPoly& q, Axis var)
{
    return resultant_scaled(p, q, var).poly;
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, Axis var)
{
    Axis other_axis = other(var);
    if (p.is_exact() && q.is_exact())
        return ExactPoly::from_uni(resultant(p.exact(), q.exact(), var), other_axis);
    return FloatPoly::from_uni(resultant(p.to_float(), q.to_float(), var), other_axis);
}

UniQ content(const ExactPoly& p, Axis var)
{
    return gcd_all(p.coeff_polys(var));
}

ExactPoly primitive_part(const ExactPoly& p, Axis var)
{
    if (p.is_zero())
        return p;
    UniQ c = content(p, var);
    auto cs = p.coeff_polys(var);
    for (auto& v : cs)
        v = divide_exact(v, c);
    return ExactPoly::from_coeff_polys(cs, var);
}

ExactPoly divide_exact(const ExactPoly& p, const ExactPoly& d)
{
    if (d.is_zero())
        throw DomainError("bivariate division by zero");
    ExactPoly quotient;
    ExactPoly rem = p;
    const UniQ lead_d = d.lead_coeff(Axis::y);
    while (!rem.is_zero() && rem.deg_y() >= d.deg_y()) {
        UniQ t = divide_exact(rem.lead_coeff(Axis::y), lead_d);
        std::vector<UniQ> shifted(static_cast<std::size_t>(rem.deg_y() - d.deg_y()) + 1);
        shifted.back() = t;
        ExactPoly term = ExactPoly::from_coeff_polys(shifted, Axis::y);
        quotient = quotient + term;
        rem = rem - term * d;
    }
    if (!rem.is_zero())
        throw Error("internal", "inexact bivariate division");
    return quotient;
}

ExactPoly make_monic(const ExactPoly& p)
{
    if (p.is_zero())
        return p;
    GaussRat lead = p.lead_coeff(Axis::y).lead();
    return (GaussRat(1) / lead) * p;
}

namespace {

/// Sparse pseudo-remainder of a by b in K[x][y].
ExactPoly prem(ExactPoly a, const ExactPoly& b)
{
    const ExactPoly lb = ExactPoly::from_uni(b.lead_coeff(Axis::y), Axis::x);
    while (!a.is_zero() && a.deg_y() >= b.deg_y()) {
        int shift = a.deg_y() - b.deg_y();
        ExactPoly la = ExactPoly::from_uni(a.lead_coeff(Axis::y), Axis::x);
        a = lb * a - la * ExactPoly::monomial(GaussRat(1), 0, shift) * b;
    }
    return a;
}

} // namespace

ExactPoly gcd(const ExactPoly& p, const ExactPoly& q)
{
    if (p.is_zero())
        return make_monic(q);
    if (q.is_zero())
        return make_monic(p);
    UniQ c = gcd(content(p, Axis::y), content(q, Axis::y));
    ExactPoly a = primitive_part(p, Axis::y);
    ExactPoly b = primitive_part(q, Axis::y);
    if (a.deg_y() < b.deg_y())
        std::swap(a, b);
    while (!b.is_zero()) {
        if (b.deg_y() == 0) {
            a = ExactPoly::constant(GaussRat(1));
            break;
        }
        ExactPoly r = prem(a, b);
        a = std::move(b);
        b = primitive_part(r, Axis::y);
    }
    return make_monic(ExactPoly::from_uni(c, Axis::x) * primitive_part(a, Axis::y));
}

ExactPoly squarefree_part(const ExactPoly& p)
{
    if (p.is_zero())
        return p;
    if (p.is_constant())
        return ExactPoly::constant(GaussRat(1));
    UniQ c = content(p, Axis::y);
    ExactPoly pp = primitive_part(p, Axis::y);
    ExactPoly rad_pp = pp;
    if (pp.deg_y() > 0)
        rad_pp = divide_exact(pp, gcd(pp, pp.derivative(Axis::y)));
    ExactPoly rad_c = ExactPoly::from_uni(squarefree_part(c), Axis::x);
    return make_monic(rad_c * rad_pp);
}

ExactPoly squarefree_part(const Polynomial& p)
{
    if (!p.is_exact())
        throw ModeError("squarefree_part requires exact coefficients");
    return squarefree_part(p.exact());
}

UniPoly<Complex> trimmed(const UniPoly<Complex>& p, double rel_tol)
{
    double m = p.norm_inf();
    std::vector<Complex> c = p.coeffs();
    for (auto& v : c)
        if (std::abs(v) <= rel_tol * m)
            v = Complex(0.0, 0.0);
    return UniPoly<Complex>(std::move(c));
}

} // namespace polygraph
