#pragma once

#include <map>
#include <string>
#include <vector>

#include "groves/rational.hpp"

namespace groves {

// Set partition of the nodes {1..n}, stored canonically: parts sorted by
// minimum element, elements ascending within each part.  Text form joins
// parts with '|'; elements are concatenated when n <= 9 and comma-separated
// otherwise (e.g. "1|278|345|6", "3,9,15").
class Partition {
public:
    Partition() : n_(0) {}
    Partition(int n, std::vector<std::vector<int>> parts);

    // Parses either element style; n is the total number of elements.
    static Partition parse(const std::string& text);

    // All singletons 1|2|...|n.
    static Partition singletons(int n);
    // The single part 12...n.
    static Partition whole(int n);

    int n() const { return n_; }
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    std::size_t part_count() const { return parts_.size(); }

    // 0-based index into parts() of the part containing node i.
    std::size_t part_of(int i) const;

    bool is_planar() const;

    // Part sizes as a sorted multiset check helpers.
    bool all_parts_at_most(std::size_t k) const;
    std::vector<int> singleton_elements() const;
    std::vector<std::vector<int>> parts_of_size(std::size_t k) const;

    std::string to_string() const;

    bool operator==(const Partition& o) const { return n_ == o.n_ && parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const;

private:
    int n_;
    std::vector<std::vector<int>> parts_;
};

// Formal integer combination of partitions (an element of W_n); zero
// coefficients are never stored.
using PartitionSum = std::map<Partition, Integer>;

void add_to(PartitionSum& sum, const Partition& p, const Integer& c);

// <t,s>_t: 1 iff part counts add to n+1 and the union relation is connected.
int inner_product_t(const Partition& t, const Partition& s);

// All partitions of {1..n} via restricted growth strings (Bell enumeration).
std::vector<Partition> all_partitions(int n);

// All planar (noncrossing) partitions of {1..n}.
std::vector<Partition> planar_partitions(int n);

}  // namespace groves
