#include "polygraph/probe.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "polygraph/analyzer.hpp"

namespace polygraph {

namespace {

constexpr double inner_radius = 0.5;
constexpr std::size_t iso_limit = 12;

std::vector<Complex> sample_seeds(const ProbeOptions& o, double radius, const std::vector<Complex>& avoid)
{
    std::mt19937_64 rng(o.rng_seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r0 = inner_radius * inner_radius, r1 = radius * radius;
    std::vector<Complex> seeds;
    int attempts = 0;
    while (static_cast<int>(seeds.size()) < o.n_seeds) {
        if (++attempts > 1000 * std::max(1, o.n_seeds))
            throw DomainError("could not place seeds away from the singular vertices");
        // uniform by area
        const double r = std::sqrt(r0 + unit(rng) * (r1 - r0));
        const double t = 2.0 * std::numbers::pi * unit(rng);
        const Complex z = std::polar(r, t);
        if (std::any_of(avoid.begin(), avoid.end(), [&](Complex s) { return std::abs(s - z) < o.margin; }))
            continue;
        seeds.push_back(z);
    }
    return seeds;
}

std::vector<int> degree_profile(const ExploredDigraph& g)
{
    std::vector<int> p;
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
        p.push_back(g.out_degree(v) * 1000 + g.in_degree(v));
    std::sort(p.begin(), p.end());
    return p;
}

enum class Verdict { Same, Different, Undecided };

Verdict compare(const ExploredDigraph& g, const ShapeLabel& lg, const ExploredDigraph& h, const ShapeLabel& lh)
{
    using K = ShapeLabel::Kind;
    if (lg.kind != K::Unknown && lh.kind != K::Unknown)
        return same_shape(lg, lh) ? Verdict::Same : Verdict::Different;
    if (g.vertices.size() != h.vertices.size() || degree_profile(g) != degree_profile(h))
        return Verdict::Different;
    if (g.vertices.size() <= iso_limit)
        return is_isomorphic(g, h) ? Verdict::Same : Verdict::Different;
    return Verdict::Undecided;
}

} // namespace

double probe_radius(const Polynomial& phi)
{
    FloatPoly p = phi.to_float();
    double top = 0.0, lead = 0.0;
    for (const auto& [i, j, v] : p.terms()) {
        top = std::max(top, std::abs(v));
        if (j == p.deg_y())
            lead = std::max(lead, std::abs(v));
    }
    if (lead == 0.0)
        return 2.0;
    return std::clamp(1.0 + top / lead, 2.0, 10.0);
}

ProbeResult probe_conjecture(const Polynomial& phi, const ProbeOptions& o)
{
    if (o.n_seeds < 1)
        throw DomainError("probe needs at least one seed");
    if (o.workers < 1)
        throw DomainError("worker count must be positive");
    auto diag = diagnose(phi);
    if (!diag.is_standard)
        throw DomainError("probe needs a standard polynomial");

    ProbeResult r;
    r.polynomial = phi;
    r.options = o;
    r.radius = probe_radius(phi);
    r.seeds = sample_seeds(o, r.radius, diag.inventory.all_vertices());

    const std::size_t n = r.seeds.size();
    r.components.resize(n);
    r.labels.resize(n);
    r.errors.resize(n);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                r.components[i] = explore_component(phi, r.seeds[i], o.budget);
            } catch (const ExplorationError& e) {
                r.components[i] = e.partial();
                r.errors[i] = e.what();
            }
            r.labels[i] = classify(r.components[i]);
        }
    };
    const int threads = std::min<int>(o.workers, static_cast<int>(n));
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(work);
    }

    for (const auto& g : r.components)
        r.truncated_count += g.truncated ? 1 : 0;
    if (r.truncated_count > 0)
        return r;

    bool undecided = false;
    for (std::size_t j = 1; j < n; ++j) {
        Verdict v = compare(r.components[0], r.labels[0], r.components[j], r.labels[j]);
        if (v == Verdict::Different) {
            r.all_isomorphic = false;
            r.counterexample = ProbeCounterexample{
                0, static_cast<int>(j),
                r.labels[0].to_string() + " (" + std::to_string(r.components[0].vertices.size()) + " vertices) vs " +
                    r.labels[j].to_string() + " (" + std::to_string(r.components[j].vertices.size()) +
                    " vertices)"};
            return r;
        }
        undecided = undecided || v == Verdict::Undecided;
    }
    if (!undecided)
        r.all_isomorphic = true;
    return r;
}

json to_json(const ProbeResult& r)
{
    json seeds = json::array(), labels = json::array();
    for (Complex z : r.seeds)
        seeds.push_back(complex_to_json(z));
    for (const auto& l : r.labels)
        labels.push_back(l.to_string());
    json j{{"polynomial", to_json(r.polynomial)},
           {"seeds", seeds},
           {"labels", labels},
           {"truncated_count", r.truncated_count},
           {"radius", r.radius},
           {"reproduction",
            {{"rng_seed", r.options.rng_seed},
             {"n_seeds", r.options.n_seeds},
             {"margin", r.options.margin},
             {"max_vertices", r.options.budget.max_vertices},
             {"max_depth", r.options.budget.max_depth},
             {"dedup_eps", r.options.budget.dedup_eps},
             {"max_modulus", r.options.budget.max_modulus}}}};
    if (r.all_isomorphic)
        j["all_isomorphic"] = *r.all_isomorphic;
    if (std::any_of(r.errors.begin(), r.errors.end(), [](const std::string& e) { return !e.empty(); }))
        j["errors"] = r.errors;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        j["counterexample"] = {{"seed_indices", {c.first, c.second}},
                               {"seeds", {complex_to_json(r.seeds[std::size_t(c.first)]),
                                          complex_to_json(r.seeds[std::size_t(c.second)])}},
                               {"reason", c.reason},
                               {"components",
                                {to_json(r.components[std::size_t(c.first)]),
                                 to_json(r.components[std::size_t(c.second)])}}};
    }
    return j;
}

} // namespace polygraph
