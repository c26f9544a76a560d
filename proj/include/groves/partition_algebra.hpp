#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "groves/matrix.hpp"
#include "groves/partition.hpp"
#include "groves/rational.hpp"

namespace groves {

// Circularly contiguous tricoloring of the nodes 1..n.  A color class may be
// empty; split nodes are not modeled (callers emulate them by node
// splitting).
class ColorSpec {
public:
    enum Color { Red = 0, Green = 1, Blue = 2 };

    ColorSpec(int n, std::vector<int> color_of_node);

    // Builds from circular ranges, e.g. red 1..2, green 3..4, blue 5..6;
    // a range may wrap (lo > hi) and a class may be absent (lo = 0).
    static ColorSpec from_ranges(int n, std::pair<int, int> red, std::pair<int, int> green,
                                 std::pair<int, int> blue);

    int n() const { return n_; }
    int color(int node) const { return colors_[static_cast<std::size_t>(node - 1)]; }
    std::vector<int> class_sizes() const;

private:
    int n_;
    std::vector<int> colors_;  // per node, values in {0,1,2}
};

// The unique minimal noncrossing partition with no monochromatic part for the
// given contiguous coloring: a pairing when n is even, a tripod (single
// tripleton) when n is odd.  Throws PreconditionError when the class sizes
// violate the triangle inequality.
Partition tripartite_partition(const ColorSpec& c);

// Planar dual partition on dual nodes 1'..n' (i' sits between i and i+1):
// the Kreweras complement, the maximal planar partition compatible with p.
Partition kreweras_dual(const Partition& p);

// Image of t under the projection onto planar partitions along the kernel of
// the bilinear form: repeated uncrossing rewrites until every term is planar.
PartitionSum project(const Partition& t);

// Same projection with randomized witness/anchor choices; the result is
// independent of the order (tested), which is the correctness guarantee for
// the rewriting strategy.
PartitionSum project_randomized(const Partition& t, std::uint64_t seed);

// Coefficient of planar s in project(t).
Integer projection_coefficient(const Partition& s, const Partition& t);

// L_tau = sum over spanning forests of the complete graph whose trees span
// the parts of tau of the product of entry(i,j) over forest edges.
template <class T>
T l_tau_polynomial(const Partition& tau, const std::function<T(int, int)>& entry);

// pu(s) = sum_tau P_{s,tau} L_tau over all partitions tau of {1..n}; the
// generic (Bell-enumeration) path, bounded to small n.
Rational grove_prob_generic(const Partition& s, const Matrix<Rational>& L, int max_n = 8);

// Spanning trees of the complete graph on the given labels (Prufer
// bijection); each tree is an edge list.
std::vector<std::vector<std::pair<int, int>>> spanning_trees_of_complete_graph(
    const std::vector<int>& labels);

template <class T>
T l_tau_polynomial(const Partition& tau, const std::function<T(int, int)>& entry) {
    T result(1);
    for (const auto& part : tau.parts()) {
        if (part.size() == 1) continue;
        T part_sum(0);
        for (const auto& tree : spanning_trees_of_complete_graph(part)) {
            T w(1);
            for (const auto& [i, j] : tree) w = w * entry(i, j);
            part_sum += w;
        }
        result = result * part_sum;
    }
    return result;
}

}  // namespace groves
