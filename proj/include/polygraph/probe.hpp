#ifndef POLYGRAPH_PROBE_HPP
#define POLYGRAPH_PROBE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polygraph/explorer.hpp"

namespace polygraph {

struct ProbeOptions
{
    int n_seeds = 10;
    Budget budget{};
    std::uint64_t rng_seed = 0;
    int workers = 1;
    /// Seeds closer than this to a singular vertex are redrawn. A heuristic
    /// that keeps seeds off singular components, not a certificate.
    double margin = 1e-3;
};

struct ProbeCounterexample
{
    int first = 0;
    int second = 0;
    std::string reason;
};

struct ProbeResult
{
    Polynomial polynomial;
    ProbeOptions options;
    double radius = 0.0;
    std::vector<Complex> seeds;
    std::vector<ShapeLabel> labels;
    std::vector<ExploredDigraph> components;
    std::vector<std::string> errors; // per seed, empty when exploration succeeded
    /// Present only when every component closed and every pair was decided.
    std::optional<bool> all_isomorphic;
    int truncated_count = 0;
    std::optional<ProbeCounterexample> counterexample;
};

/// Outer radius of the sampling annulus 0.5 <= |z| <= R: 1 plus the largest
/// coefficient modulus over the largest leading (y^d) coefficient modulus,
/// clamped to [2, 10].
double probe_radius(const Polynomial& phi);

/// Deterministic in (phi, options) whatever the worker count. Throws
/// DomainError when phi is not standard.
ProbeResult probe_conjecture(const Polynomial& phi, const ProbeOptions& options = {});

/// Compact form: polynomial, seeds, labels, all_isomorphic (omitted when
/// undefined), truncated_count and the reproduction data.
json to_json(const ProbeResult& r);

} // namespace polygraph

#endif
