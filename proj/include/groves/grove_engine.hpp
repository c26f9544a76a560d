#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "groves/network.hpp"
#include "groves/partition.hpp"
#include "groves/partition_algebra.hpp"
#include "groves/tpoly.hpp"

namespace groves {

// Pr(sigma)/Pr(1|2|...|n) versus Pr(sigma)/Pr(12...n); the two normalizations
// the closed forms produce.  Conversions go through uncrossing_tree_ratio.
enum class Normalization { PerUncrossing, PerTree };

struct GroveProbability {
    Rational value;
    Normalization norm;
};

// Z(12...n)/Z(1|2|...|n) = det(-L~) with the last row and column deleted.
Rational uncrossing_tree_ratio(const ResponseMatrix& L);

// A contiguous tricoloring (values 0,1,2 per node) under which every
// doubleton of p is bichromatic and its tripleton, if any, trichromatic.
// Searches all arc boundary triples; std::nullopt when none exists.
std::optional<std::vector<int>> infer_tripartite_colors(const Partition& p);

// pu for a noncrossing pairing possibly with singletons: singletons are
// dropped (their rows of the projection matrix coincide), the rest is the
// block Pfaffian in the entries of L.
Rational pairing_partition_pu(const ResponseMatrix& L, const Partition& p);

// pu for a tripod (one tripleton, doubletons, possibly singletons):
// singletons are split into a node plus a unit-conductance leaf of a fresh
// color, then the Pfaffianoid formula applies to the augmented response
// matrix with sign (-1)^{sum of tripleton positions}.
Rational tripod_partition_pu(const ResponseMatrix& L, const Partition& p);

// Dispatch on the partition shape (pairing-with-singletons vs tripod).
Rational partition_pu(const ResponseMatrix& L, const Partition& p);

GroveProbability tripartite_pairing_prob(const ResponseMatrix& L, const ColorSpec& c);
GroveProbability tripod_prob(const ResponseMatrix& L, const ColorSpec& c);

// Tripod probability through the dual graph: the dual partition is a pairing
// (plus singletons), evaluated on dual_response(L), times the tree ratio.
GroveProbability tripod_prob_via_dual(const ResponseMatrix& L, const ColorSpec& c);

// det L_{(A u C),(B u C)} together with the signed grove sum it equals:
//   (-1)^{|C|} sum_pi sgn(pi) Z(pairs a_k b_{pi(k)}, D singletons, C riding
//   along, no pure-C parts) / Z(uncrossing),
// the grove side evaluated by brute-force enumeration of the network.
// A, B, C, D are disjoint 1-based node lists covering all nodes, |A| = |B|.
std::pair<Rational, Rational> minor_grove_identity(const Network& net, std::vector<int> A,
                                                   std::vector<int> B, std::vector<int> C,
                                                   std::vector<int> D);

// [t] det [t - R_ij/2]_{i in A, j in B} for disjoint equinumerous A, B
// covering the nodes; equals (Z(uncrossing)/Z(tree)) det L_{A,B}.
GroveProbability pairing_prob_from_resistances(const ResistanceMatrix& R, std::vector<int> A,
                                               std::vector<int> B);

// [t] Pf of the antisymmetric matrix with entries t - R_ij/2 for differently
// colored i<j and 0 for same-colored pairs; the Pfaffian is asserted linear
// in t.  Returns Pr(sigma)/Pr(12...n).
GroveProbability tripartite_prob_from_resistances(const ResistanceMatrix& R, const ColorSpec& c);

namespace engine_detail {

// Antisymmetric matrix over the node sequence `order` (original labels)
// whose (i,j) entry for i<j (positions) is entry(order[i], order[j]) when the
// colors differ and 0 otherwise.  This is the block matrix of the tripartite
// theorems once `order` starts at the red arc.
template <class T, class F>
AntisymmetricMatrix<T> color_block_matrix(const std::vector<int>& order,
                                          const std::vector<int>& color_of_node, F&& entry) {
    AntisymmetricMatrix<T> m(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const int a = order[i], b = order[j];
            if (color_of_node[static_cast<std::size_t>(a - 1)] ==
                color_of_node[static_cast<std::size_t>(b - 1)])
                continue;
            m.set(i, j, entry(a, b));
        }
    return m;
}

}  // namespace engine_detail

}  // namespace groves
