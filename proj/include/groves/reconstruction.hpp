#pragma once

#include <map>
#include <vector>

#include "groves/network.hpp"
#include "groves/partition.hpp"
#include "groves/rational.hpp"

namespace groves {

// A face of the standard graph, as reconstruction sees it: the bounded unit
// squares, the squares left of the first column, and the remaining external
// squares (right/top/bottom), which all share one partition.
struct SigmaFace {
    enum Kind { Bounded, LeftExternal, OtherExternal } kind;
    int c = 0;  // for Bounded: between columns c and c+1
    int y = 0;  // square spans heights y..y+1 (Bounded/LeftExternal)

    bool operator<(const SigmaFace& o) const {
        if (kind != o.kind) return kind < o.kind;
        if (c != o.c) return c < o.c;
        return y < o.y;
    }
};

// Precomputed combinatorics of Sigma_n: the connection partitions of the
// unique groves associated with interior vertices and faces, and each edge's
// endpoints and flanking faces.
struct StandardGraphAnnotation {
    int n = 0;
    SigmaLayout layout;
    Network sigma;  // unit conductances

    struct EdgeInfo {
        SigmaLayout::EdgeRef ref;
        int v1, v2;                // endpoint vertex ids
        bool v1_interior, v2_interior;
        SigmaFace f1, f2;
    };
    std::vector<EdgeInfo> edges;   // canonical edge order

    std::map<int, Partition> pi_v;        // interior vertex id -> tripod partition
    std::map<SigmaFace, Partition> pi_f;  // face -> tripartite partition
    Partition parallel;                   // (1,n|2,n-1|...): node endpoints and
                                          // non-left external faces
};

StandardGraphAnnotation annotate_standard_graph(int n);

// Tripod partition of the interior vertex at (column c, height y): the
// tripleton joins the column's bottom and top nodes with the node at the
// right end of the vertex's row; the remaining nodes pair up nested within
// the three arcs (odd arcs leave a middle singleton).
Partition sigma_pi_v(const SigmaLayout& lay, int c, int y);

// Tripartite partition of a face: columns left of the face keep their
// bottom-top pairing; the remaining nodes split along the face's height into
// a lower and an upper nested sequence.
Partition sigma_pi_f(const SigmaLayout& lay, const SigmaFace& f);

// Recovers the edge conductances of Sigma_n from its response matrix via
// a_e = pu(pi_v1) pu(pi_v2) / (pu(pi_f1) pu(pi_f2)), node endpoints
// contributing the parallel partition.  Output follows the canonical edge
// order of sigma_layout(n).
std::vector<Rational> reconstruct(const ResponseMatrix& L, int n);

}  // namespace groves
