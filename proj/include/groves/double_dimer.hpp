#pragma once

#include <map>
#include <vector>

#include "groves/matrix.hpp"
#include "groves/multipoly.hpp"
#include "groves/partition.hpp"
#include "groves/partition_algebra.hpp"
#include "groves/rational.hpp"

namespace groves {

// Bipartite planar graph with 2n boundary nodes (ccw order) and an explicit
// combinatorial embedding: bounded faces listed as vertex cycles, which is
// what the Kasteleyn signing consumes.
struct BipartiteNetwork {
    struct Edge {
        int u, v;
        Rational weight;
    };

    int vertex_count = 0;
    std::vector<char> color;  // per vertex, 'B' or 'W'
    std::vector<Edge> edges;
    std::vector<int> nodes;                   // 2n boundary vertices, ccw
    std::vector<std::vector<int>> faces;      // bounded faces as vertex cycles

    void validate() const;
    int pair_count() const { return static_cast<int>(nodes.size()) / 2; }
};

// Vertex-induced dimer subgraph with the inherited Kasteleyn signs.
struct DimerGraph {
    std::vector<int> black, white;           // kept vertex ids
    struct Edge {
        int u, v;  // u black, v white
        Rational weight;
        int sign;
    };
    std::vector<Edge> edges;
};

// Weighted perfect-matching sum |det| of the signed biadjacency matrix;
// 0 when the color classes are unbalanced.
Rational dimer_partition_function(const DimerGraph& g);

// The subgraph keeping internal vertices plus the nodes that are black-odd
// or white-even; gbw_ij toggles membership of nodes i and j.
DimerGraph gbw(const BipartiteNetwork& g);
DimerGraph gbw_ij(const BipartiteNetwork& g, int i, int j);

// X_{i,j} = Z^BW_{i,j} / Z^BW for opposite-parity node pairs; structural
// zeros elsewhere.
struct XMatrix {
    Matrix<Rational> x;  // indexed by node position (0-based), symmetric
    int n() const { return static_cast<int>(x.rows()); }
};

XMatrix x_matrix(const BipartiteNetwork& g);

// Normalized double-dimer pairing probability of the tripartite pairing for
// the given coloring: det[ 1_{colored differently} X_{i,j} ] with rows the
// odd nodes and column k the partner of row k's node.
Rational dd_tripartite_prob(const XMatrix& x, const ColorSpec& c);

// Same determinant built symbolically over X variables (used to reproduce
// the printed example shapes).
MultiPoly dd_tripartite_symbolic(const ColorSpec& c);

// L_{i,j} -> 0 for equal parity, else (-1)^{(|i-j|-1)/2} X_{i,j}.
MultiPoly l_to_x_substitute(const MultiPoly& p);

// Sign of the pairing: the permutation of the even items when parts are
// listed by increasing odd item (the global sign in the determinant
// bookkeeping of the tripartite double-dimer theorem).
int pairing_even_permutation_sign(const Partition& pairing);

// Exhaustive double-dimer table: Z^DD(pi) for every boundary pairing pi,
// doubled edges carrying squared weight and each loop a factor 2.
std::map<Partition, Rational> dd_bruteforce(const BipartiteNetwork& g, std::size_t max_edges = 26);

}  // namespace groves
