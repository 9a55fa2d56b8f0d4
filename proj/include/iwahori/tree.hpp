#pragma once

#include <string>
#include <utility>
#include <vector>

#include "iwahori/padic_core.hpp"

namespace iwahori {

/// Homothety class of a Z_p-lattice in Q_p^2, i.e. a vertex of the (p+1)-regular
/// tree, i.e. a coset in G/KZ. The class is represented by the lattice
/// (p^n a; 0 1) Z_p^2 where a = sum digit * p^i over the stored digits; this
/// representative is unique, so VertexKey equality is lattice-class equality.
struct VertexKey {
    long long n = 0;
    /// sorted by exponent, exponents strictly below n, digits in {1,...,p-1}
    std::vector<std::pair<long long, int>> digits;

    bool operator==(const VertexKey& o) const { return n == o.n && digits == o.digits; }
    bool operator!=(const VertexKey& o) const { return !(*this == o); }
    bool operator<(const VertexKey& o) const {
        return n != o.n ? n < o.n : digits < o.digits;
    }
    std::string str() const;
};

inline VertexKey base_vertex() { return VertexKey{}; }

/// Oriented edge of the tree as an ordered pair of adjacent vertices; these are
/// in bijection with G/IZ.
struct EdgeKey {
    VertexKey origin;
    VertexKey terminal;

    bool operator==(const EdgeKey& o) const {
        return origin == o.origin && terminal == o.terminal;
    }
    bool operator!=(const EdgeKey& o) const { return !(*this == o); }
    bool operator<(const EdgeKey& o) const {
        return origin != o.origin ? origin < o.origin : terminal < o.terminal;
    }
    std::string str() const { return origin.str() + "->" + terminal.str(); }
};

/// The distinguished edge (Z_p^2, alpha Z_p^2).
EdgeKey base_edge(int p);

/// The canonical matrix (p^n a; 0 1) of the stored representative.
Mat2 canonical_matrix(const VertexKey& v, int p);

/// Key of the homothety class of g Z_p^2; invariant under g -> g k for k in KZ.
VertexKey vertex_normal_form(const Mat2& g);

/// True iff g Z_p^2 and h Z_p^2 are homothetic. Decided by the valuation
/// criterion for h^-1 g in p^Z GL_2(Z_p); independent of the column reduction
/// used by vertex_normal_form.
bool lattice_equal(const Mat2& g, const Mat2& h);

/// The p+1 adjacent vertices: the p index-p sublattice directions for
/// lambda = 0,...,p-1, then the superlattice direction.
std::vector<VertexKey> neighbors(const VertexKey& v, int p);

bool adjacent(const VertexKey& u, const VertexKey& v, int p);

/// (vertex of g, vertex of g*alpha); constant on cosets g IZ.
EdgeKey edge_from_group(const Mat2& g);

inline EdgeKey reverse(const EdgeKey& e) { return EdgeKey{e.terminal, e.origin}; }

/// All edges e' with origin(e') = terminal(e) and e' != reverse(e), in neighbor order.
std::vector<EdgeKey> continuations(const EdgeKey& e, int p);

/// Deterministic section of G -> G/IZ: edge_from_group(coset_rep(e)) == e.
Mat2 coset_rep(const EdgeKey& e, int p);

VertexKey act_vertex(const Mat2& g, const VertexKey& v);
EdgeKey act_edge(const Mat2& g, const EdgeKey& e);

/// Vertices at distance <= radius from the base vertex, BFS order.
std::vector<VertexKey> ball(int p, int radius);
/// Oriented edges with both endpoints in ball(p, radius).
std::vector<EdgeKey> edge_ball(int p, int radius);

/// Undirected Graphviz rendering of a ball.
std::string dot_ball(int p, int radius);
/// Directed rendering of the ball's edges with the given edge sets highlighted.
std::string dot_support(int p, int radius, const std::vector<EdgeKey>& red,
                        const std::vector<EdgeKey>& blue);

}  // namespace iwahori
