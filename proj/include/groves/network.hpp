#pragma once

#include <string>
#include <vector>

#include "groves/matrix.hpp"
#include "groves/rational.hpp"

namespace groves {

// Weighted graph with an ordered list of boundary nodes (counterclockwise).
// Vertices are 1-based; self-loops are rejected, parallel edges allowed.
struct Network {
    struct Edge {
        int u, v;
        Rational conductance;
    };

    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<int> nodes;  // distinct boundary vertices, ccw order

    void validate() const;
    std::size_t node_count() const { return nodes.size(); }
};

// n x n, symmetric, zero row sums; the negated Schur complement of the
// weighted Laplacian onto the nodes.
struct ResponseMatrix {
    Matrix<Rational> m;
    int n() const { return static_cast<int>(m.rows()); }
    void validate() const;
};

// Pairwise effective resistances; symmetric with zero diagonal.
struct ResistanceMatrix {
    Matrix<Rational> m;
    int n() const { return static_cast<int>(m.rows()); }
};

// Weighted Laplacian K: K[u][u] = sum of incident conductances,
// K[u][v] = -(sum of conductances of u-v edges).
Matrix<Rational> laplacian(const Network& net);

// L = -(K_NN - K_NI K_II^-1 K_IN); requires every interior component to
// reach a node.
ResponseMatrix response_matrix(const Network& net);

// R_ij = -(d_i - d_j)^T L^+ (d_i - d_j) via kernel-aware solves.
ResistanceMatrix resistance_matrix(const ResponseMatrix& L);

// Response matrix of the planar dual, from L alone:
// L*_{i',j'} = (d_i - d_{i+1}) L^+ (d_j - d_{j+1}), indices mod n.
ResponseMatrix dual_response(const ResponseMatrix& L);

enum class Move { Series, Parallel, PendantRemoval, WyeDelta, DeltaWye };

Move move_from_string(const std::string& name);
std::string move_to_string(Move m);

// Applies one electrical transformation at the given location:
//   Series          {v}      interior degree-2 vertex
//   Parallel        {u, v}   merge all parallel u-v edges
//   PendantRemoval  {v}      interior degree-1 vertex
//   WyeDelta        {v}      interior degree-3 vertex
//   DeltaWye        {p,q,r}  triangle (one edge between each pair)
// The response matrix is preserved exactly.
Network apply_transform(const Network& net, Move move, const std::vector<int>& location);

// Geometry of the standard graph: columns of vertices, tallest on the left,
// with the two boundary staircases carrying the nodes.  Column c (1-based,
// m = ceil(n/2) columns) spans heights -(m-c)..(m-c) for odd n and
// -(m-c)..(m-c)+1 for even n.  Node c is the bottom of column c and node
// n+1-c its top; for odd n node m is the right tip.
struct SigmaLayout {
    int n = 0;           // number of nodes
    int m = 0;           // number of columns
    int vertex_count = 0;
    std::vector<std::vector<int>> column_vertex;  // [c-1][y - bottom(c)] -> vertex id
    std::vector<int> bottom, top;                 // height range per column, 1-based c

    int vertex_at(int c, int y) const;
    bool has_vertex(int c, int y) const;
    struct EdgeRef {
        bool vertical;  // vertical: column c, heights y..y+1; horizontal: row y, columns c..c+1
        int c, y;
    };
    std::vector<EdgeRef> edge_order;  // canonical edge order used everywhere
};

SigmaLayout sigma_layout(int n);

// The standard graph on n nodes; conductances follow the canonical edge
// order of sigma_layout(n) when provided (all ones otherwise).
Network standard_graph(int n, const std::vector<Rational>* conductances = nullptr);

// rows x cols grid of unit squares' vertices (so rows*cols vertices),
// vertices numbered row-major from 1; the node list must be boundary
// vertices in ccw order.
Network grid_graph(int rows, int cols, std::vector<int> nodes,
                   const std::vector<Rational>* conductances = nullptr);

// Boundary vertices of the grid in counterclockwise order starting at the
// bottom-left corner (row-major ids, row 0 drawn at the top).
std::vector<int> grid_boundary_ccw(int rows, int cols);

// Triangular portion of the triangular lattice with 3N boundary nodes and
// unit conductances.
Network cs_graph(int N);

}  // namespace groves
