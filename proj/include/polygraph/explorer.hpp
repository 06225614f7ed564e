#ifndef POLYGRAPH_EXPLORER_HPP
#define POLYGRAPH_EXPLORER_HPP

#include <string>
#include <vector>

#include "polygraph/bipoly.hpp"
#include "polygraph/serialize.hpp"

namespace polygraph {

struct Neighbor
{
    Complex value;
    int multiplicity = 1;
};

/// Roots of Phi(u, y) with multiplicity. Empty when the y-degree drops to
/// zero at u. Exact polynomials are evaluated exactly at the double u.
/// Throws DomainError if Phi(u, y) vanishes identically.
std::vector<Neighbor> out_neighbors(const Polynomial& phi, Complex u);
/// Roots of Phi(x, v); throws DomainError at a universal sink.
std::vector<Neighbor> in_neighbors(const Polynomial& phi, Complex v);

struct Budget
{
    int max_vertices = 5000;
    int max_depth = 50;
    double dedup_eps = 1e-6;
    /// Vertices beyond this modulus are left out (and the result flagged
    /// truncated): float roots there are no longer accurate to dedup_eps.
    double max_modulus = 1e6;
};

struct ExploredArc
{
    int from = 0;
    int to = 0;
    int mult = 1;
    friend bool operator==(const ExploredArc&, const ExploredArc&) = default;
};

/// Vertex ids are indices into `vertices`, in BFS discovery order.
struct ExploredDigraph
{
    std::vector<Complex> vertices;
    std::vector<ExploredArc> arcs;
    bool truncated = false;
    int seed_id = 0;

    int out_degree(int v) const;
    int in_degree(int v) const;
};

/// Thrown when root finding fails mid-exploration; keeps what was found.
class ExplorationError : public NumericalError
{
  public:
    ExplorationError(const std::string& message, ExploredDigraph partial)
        : NumericalError(message), partial_(std::move(partial))
    {
    }
    const ExploredDigraph& partial() const { return partial_; }

  private:
    ExploredDigraph partial_;
};

/// Weak component of seed: BFS over out- and in-neighbours. Vertices at
/// max_depth are still checked for arcs into the explored set, but add
/// nothing new; truncated is set when anything was left outside.
ExploredDigraph explore_component(const Polynomial& phi, Complex seed, const Budget& budget = {});

/// Strong component of seed. Exact when the forward or the backward search
/// closes; otherwise the strong component of seed inside the intersection
/// of both searches, flagged truncated.
ExploredDigraph explore_strong_component(const Polynomial& phi, Complex seed, const Budget& budget = {});

struct ShapeLabel
{
    enum class Kind {
        DirectedCycle,
        Cycle,
        CompleteK,
        CompleteBipartite,
        DoubleRayPrefix,
        DirectedPathPrefix,
        GridPrefix,
        Unknown
    };
    Kind kind = Kind::Unknown;
    int n = 0; // cycle length, K_n order or K_{d,d} part size

    std::string to_string() const;
    friend bool operator==(const ShapeLabel&, const ShapeLabel&) = default;
};

ShapeLabel classify(const ExploredDigraph& g);

/// Same digraph under two labels, e.g. K_3 and C_3, or K_{2,2} and C_4.
bool same_shape(const ShapeLabel& a, const ShapeLabel& b);

/// Multiplicity-preserving isomorphism test by backtracking. Both graphs
/// must be closed with at most 12 vertices (DomainError otherwise).
bool is_isomorphic(const ExploredDigraph& g, const ExploredDigraph& h);

std::string to_dot(const ExploredDigraph& g);
json to_json(const ExploredDigraph& g);
ExploredDigraph explored_from_json(const json& j);

} // namespace polygraph

#endif
