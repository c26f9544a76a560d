#pragma once

#include <map>

#include "groves/multipoly.hpp"
#include "groves/network.hpp"
#include "groves/partition.hpp"

namespace groves {

// Z(sigma) for every partition type arising from some grove, plus the total
// grove weight.
struct GroveTable {
    std::map<Partition, Rational> z;
    Rational total;
};

// Exhaustive weighted grove enumeration by recursive edge
// deletion/contraction with dead-component pruning.  Desk scale only.
GroveTable enumerate_groves(const Network& net, std::size_t max_edges = 26);

// Independent second oracle: iterate all edge subsets directly.
GroveTable enumerate_groves_subsets(const Network& net, std::size_t max_edges = 20);

// Symbolic grove sums: Z(sigma) as a polynomial in one variable per edge
// (variable {u,v} for the edge's endpoints; requires no parallel edges).
std::map<Partition, MultiPoly> enumerate_groves_symbolic(const Network& net,
                                                         std::size_t max_edges = 26);

// Z(1|2|...|n): the interior principal minor of the Laplacian (all-minors
// matrix-tree theorem).
Rational forest_count_interior_rooted(const Network& net);

// Weighted spanning-tree count Z(12...n): Laplacian minor deleting one row
// and column.
Rational spanning_tree_weight(const Network& net);

// The side-tricolored partition of the Carroll-Speyer graph: a tripod for
// even N, a pairing for odd N, with the three corners as singletons.
Partition cs_partition(int N);

// Number of Carroll-Speyer groves: pu(cs_partition) * Z(uncrossing),
// asserted to be an integer.
Integer cs_count(int N);

// Evaluates the root-of-unity product for the interior-rooted forest count
// in 256-bit arithmetic, rounds to the nearest integer, and verifies the
// residual; raises InvariantError when precision is insufficient.
Integer forest_count_product_formula(int N);

}  // namespace groves
