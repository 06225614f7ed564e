#include "polygraph/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace polygraph {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

struct Eval
{
    Complex value;
    Complex deriv;
    double bound; // sum |c_k| |z|^k
};

Eval horner(const std::vector<Complex>& c, Complex z)
{
    Complex p(0.0, 0.0), dp(0.0, 0.0);
    double b = 0.0, az = std::abs(z);
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
        b = b * az + std::abs(*it);
    }
    return {p, dp, b};
}

std::vector<Complex> aberth(const std::vector<Complex>& c, const RootOptions& opts, int& iterations)
{
    const int n = static_cast<int>(c.size()) - 1;
    const double radius = std::pow(std::abs(c.front()) / std::abs(c.back()), 1.0 / n);
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        z[static_cast<std::size_t>(k)] = std::polar(radius, 2.0 * std::numbers::pi * k / n + 0.4);
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (iterations = 1; iterations <= opts.max_iters; ++iterations) {
        bool all_done = true;
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (done[k])
                continue;
            Eval e = horner(c, z[k]);
            if (std::abs(e.value) <= 4.0 * n * eps * e.bound) {
                done[k] = true;
                continue;
            }
            Complex sum(0.0, 0.0);
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k)
                    sum += 1.0 / (z[k] - z[j]);
            Complex step;
            if (e.deriv == Complex(0.0, 0.0)) {
                step = std::polar(1e-3 * (1.0 + std::abs(z[k])), 0.7 * static_cast<double>(k + 1));
            } else {
                Complex w = e.value / e.deriv;
                step = w / (1.0 - w * sum);
            }
            z[k] -= step;
            require_finite(z[k], "Aberth iteration");
            if (std::abs(step) < opts.tol * (1.0 + std::abs(z[k])))
                done[k] = true;
            else
                all_done = false;
        }
        if (all_done)
            return z;
    }
    throw RootFindError("root finding did not converge in " + std::to_string(opts.max_iters) + " iterations",
                        z);
}

/// Greedy grouping: each cluster takes the largest m such that its m nearest
/// unassigned iterates lie within tol^(1/m)(1+|z|).
std::vector<Root> cluster(const std::vector<Complex>& z, double tol)
{
    std::vector<Root> out;
    std::vector<bool> used(z.size(), false);
    for (std::size_t k = 0; k < z.size(); ++k) {
        if (used[k])
            continue;
        std::vector<std::pair<double, std::size_t>> dist;
        for (std::size_t j = 0; j < z.size(); ++j)
            if (!used[j])
                dist.emplace_back(std::abs(z[j] - z[k]), j);
        std::sort(dist.begin(), dist.end());
        std::size_t m = 1;
        for (std::size_t cand = 2; cand <= dist.size(); ++cand) {
            double radius = std::pow(tol, 1.0 / static_cast<double>(cand)) * (1.0 + std::abs(z[k]));
            if (dist[cand - 1].first <= radius)
                m = cand;
        }
        Complex centre(0.0, 0.0);
        for (std::size_t t = 0; t < m; ++t) {
            used[dist[t].second] = true;
            centre += z[dist[t].second];
        }
        out.push_back({centre / static_cast<double>(m), static_cast<int>(m), 0.0});
    }
    return out;
}

} // namespace

int RootSet::total_multiplicity() const
{
    int t = 0;
    for (const auto& r : roots)
        t += r.multiplicity;
    return t;
}

RootSet roots(const UniPoly<Complex>& p, const RootOptions& opts)
{
    if (p.is_zero())
        throw DomainError("roots of the zero polynomial");
    if (p.degree() < 1)
        throw DomainError("roots of a constant polynomial");
    for (const auto& v : p.coeffs())
        require_finite(v, "root finding input");

    RootSet rs;
    const auto& c = p.coeffs();
    std::size_t zeros = 0;
    while (c[zeros] == Complex(0.0, 0.0))
        ++zeros;
    if (zeros > 0)
        rs.roots.push_back({Complex(0.0, 0.0), static_cast<int>(zeros), 0.0});
    std::vector<Complex> rest(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
    if (rest.size() == 2) {
        rs.roots.push_back({-rest[0] / rest[1], 1, 0.0});
    } else if (rest.size() > 2) {
        auto z = aberth(rest, opts, rs.iterations);
        for (auto& r : cluster(z, opts.tol))
            rs.roots.push_back(r);
    }
    for (auto& r : rs.roots) {
        Eval e = horner(c, r.value);
        r.residual = e.bound > 0.0 ? std::abs(e.value) / e.bound : 0.0;
        rs.residual_bound = std::max(rs.residual_bound, r.residual);
    }
    UniPoly<Complex> rebuilt = poly_from_roots(rs, p.lead());
    double err = 0.0;
    for (int k = 0; k <= p.degree(); ++k)
        err = std::max(err, std::abs(rebuilt.coeff(k) - p.coeff(k)));
    rs.reconstruction_error = err / p.norm_inf();
    return rs;
}

RootSet roots(const UniPoly<GaussRat>& p, const RootOptions& opts)
{
    return roots(p.to_float(), opts);
}

UniPoly<Complex> poly_from_roots(const RootSet& rs, Complex lead)
{
    UniPoly<Complex> acc = UniPoly<Complex>::constant(lead);
    for (const auto& r : rs.roots)
        for (int m = 0; m < r.multiplicity; ++m)
            acc = acc * UniPoly<Complex>::linear_root(r.value);
    return acc;
}

Complex polish_root(const UniPoly<Complex>& p, Complex z, int multiplicity, int steps)
{
    UniPoly<Complex> q = p;
    for (int k = 1; k < multiplicity; ++k)
        q = q.derivative();
    if (q.degree() < 1)
        return z;
    const auto& c = q.coeffs();
    Eval e = horner(c, z);
    double best = std::abs(e.value);
    for (int s = 0; s < steps && best > 0.0; ++s) {
        if (e.deriv == Complex(0.0, 0.0))
            break;
        Complex cand = z - e.value / e.deriv;
        Eval ec = horner(c, cand);
        if (!(std::abs(ec.value) < best))
            break;
        z = cand;
        e = ec;
        best = std::abs(ec.value);
    }
    return z;
}

} // namespace polygraph
