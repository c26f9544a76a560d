#include "groves/oracle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "groves/errors.hpp"
#include "groves/grove_engine.hpp"
#include "groves/linalg.hpp"

namespace groves {

namespace {

// Deletion/contraction enumeration shared by the rational and symbolic
// tables.  Components are tracked with an undo-able union-find; a component
// with no boundary node and no unprocessed edge can never join a node, so
// the branch dies early.
template <class T, class WeightOf>
class GroveEnumerator {
public:
    GroveEnumerator(const Network& net, WeightOf weight_of)
        : net_(net), weight_of_(weight_of), parent_(net.vertex_count + 1),
          has_node_(net.vertex_count + 1, 0), pending_(net.vertex_count + 1, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
        for (int v : net.nodes) has_node_[static_cast<std::size_t>(v)] = 1;
        for (const auto& e : net.edges) {
            ++pending_[static_cast<std::size_t>(e.u)];
            ++pending_[static_cast<std::size_t>(e.v)];
        }
        node_index_.assign(static_cast<std::size_t>(net.vertex_count) + 1, 0);
        for (std::size_t k = 0; k < net.nodes.size(); ++k)
            node_index_[static_cast<std::size_t>(net.nodes[k])] = static_cast<int>(k) + 1;
    }

    std::map<Partition, T> run() {
        recurse(0, T(1));
        return std::move(table_);
    }

private:
    int find(int x) const {
        while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
        return x;
    }

    void recurse(std::size_t k, T weight) {
        if (k == net_.edges.size()) {
            emit(std::move(weight));
            return;
        }
        const auto& e = net_.edges[k];
        const int ru = find(e.u), rv = find(e.v);

        // include (contract): only when it does not close a cycle
        if (ru != rv) {
            parent_[static_cast<std::size_t>(ru)] = rv;
            const char old_node = has_node_[static_cast<std::size_t>(rv)];
            const int old_pending = pending_[static_cast<std::size_t>(rv)];
            has_node_[static_cast<std::size_t>(rv)] =
                old_node | has_node_[static_cast<std::size_t>(ru)];
            pending_[static_cast<std::size_t>(rv)] =
                old_pending + pending_[static_cast<std::size_t>(ru)] - 2;
            if (has_node_[static_cast<std::size_t>(rv)] || pending_[static_cast<std::size_t>(rv)] > 0)
                recurse(k + 1, weight * weight_of_(k));
            parent_[static_cast<std::size_t>(ru)] = ru;
            has_node_[static_cast<std::size_t>(rv)] = old_node;
            pending_[static_cast<std::size_t>(rv)] = old_pending;
        }

        // exclude (delete)
        {
            const int a = ru, b = rv;
            pending_[static_cast<std::size_t>(a)] -= 1;
            pending_[static_cast<std::size_t>(b)] -= 1;
            const bool dead =
                (!has_node_[static_cast<std::size_t>(a)] && pending_[static_cast<std::size_t>(a)] == 0) ||
                (!has_node_[static_cast<std::size_t>(b)] && pending_[static_cast<std::size_t>(b)] == 0);
            if (!dead) recurse(k + 1, std::move(weight));
            pending_[static_cast<std::size_t>(a)] += 1;
            pending_[static_cast<std::size_t>(b)] += 1;
        }
    }

    void emit(T weight) {
        // every component must contain a node; group node positions by root
        const int n = static_cast<int>(net_.node_count());
        std::map<int, std::vector<int>> groups;
        for (int v = 1; v <= net_.vertex_count; ++v) {
            const int r = find(v);
            if (node_index_[static_cast<std::size_t>(v)] > 0)
                groups[r].push_back(node_index_[static_cast<std::size_t>(v)]);
        }
        // a vertex in a nodeless component: reject (should be pruned already)
        for (int v = 1; v <= net_.vertex_count; ++v)
            if (!groups.count(find(v))) return;
        std::vector<std::vector<int>> parts;
        for (auto& [root, members] : groups) parts.push_back(std::move(members));
        Partition p(n, std::move(parts));
        auto it = table_.find(p);
        if (it == table_.end()) {
            table_.emplace(std::move(p), std::move(weight));
        } else {
            it->second += weight;
        }
    }

    const Network& net_;
    WeightOf weight_of_;
    std::vector<int> parent_;
    std::vector<char> has_node_;
    std::vector<int> pending_;  // unprocessed edge endpoints per component root
    std::vector<int> node_index_;
    std::map<Partition, T> table_;
};

}  // namespace

GroveTable enumerate_groves(const Network& net, std::size_t max_edges) {
    net.validate();
    if (net.edges.size() > max_edges)
        throw PreconditionError("network too large for grove enumeration");
    auto weight_of = [&](std::size_t k) { return net.edges[k].conductance; };
    GroveEnumerator<Rational, decltype(weight_of)> en(net, weight_of);
    GroveTable out;
    out.z = en.run();
    out.total = Rational(0);
    for (const auto& [p, w] : out.z) out.total += w;
    return out;
}

GroveTable enumerate_groves_subsets(const Network& net, std::size_t max_edges) {
    net.validate();
    const std::size_t m = net.edges.size();
    if (m > max_edges) throw PreconditionError("network too large for subset enumeration");
    GroveTable out;
    out.total = Rational(0);
    const int n = static_cast<int>(net.node_count());
    std::vector<int> node_index(static_cast<std::size_t>(net.vertex_count) + 1, 0);
    for (std::size_t k = 0; k < net.nodes.size(); ++k)
        node_index[static_cast<std::size_t>(net.nodes[k])] = static_cast<int>(k) + 1;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<int> parent(static_cast<std::size_t>(net.vertex_count) + 1);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        bool forest = true;
        Rational weight(1);
        for (std::size_t k = 0; k < m && forest; ++k) {
            if (!(mask & (1ull << k))) continue;
            int ru = find(net.edges[k].u), rv = find(net.edges[k].v);
            if (ru == rv) {
                forest = false;
            } else {
                parent[static_cast<std::size_t>(ru)] = rv;
                weight *= net.edges[k].conductance;
            }
        }
        if (!forest) continue;
        std::map<int, std::vector<int>> groups;
        bool valid = true;
        for (int v = 1; v <= net.vertex_count && valid; ++v) {
            int r = find(v);
            if (node_index[static_cast<std::size_t>(v)] > 0)
                groups[r].push_back(node_index[static_cast<std::size_t>(v)]);
        }
        for (int v = 1; v <= net.vertex_count && valid; ++v)
            if (!groups.count(find(v))) valid = false;
        if (!valid) continue;
        std::vector<std::vector<int>> parts;
        for (auto& [root, members] : groups) parts.push_back(std::move(members));
        Partition p(n, std::move(parts));
        auto it = out.z.find(p);
        if (it == out.z.end()) {
            out.z.emplace(std::move(p), weight);
        } else {
            it->second += weight;
        }
        out.total += weight;
    }
    return out;
}

std::map<Partition, MultiPoly> enumerate_groves_symbolic(const Network& net,
                                                         std::size_t max_edges) {
    net.validate();
    if (net.edges.size() > max_edges)
        throw PreconditionError("network too large for grove enumeration");
    {
        std::set<std::pair<int, int>> seen;
        for (const auto& e : net.edges)
            if (!seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second)
                throw PreconditionError("symbolic enumeration requires no parallel edges");
    }
    auto weight_of = [&](std::size_t k) {
        return MultiPoly::variable(net.edges[k].u, net.edges[k].v);
    };
    GroveEnumerator<MultiPoly, decltype(weight_of)> en(net, weight_of);
    return en.run();
}

Rational forest_count_interior_rooted(const Network& net) {
    Matrix<Rational> k = laplacian(net);
    std::vector<char> is_node(static_cast<std::size_t>(net.vertex_count) + 1, 0);
    for (int v : net.nodes) is_node[static_cast<std::size_t>(v)] = 1;
    std::vector<std::size_t> interior;
    for (int v = 1; v <= net.vertex_count; ++v)
        if (!is_node[static_cast<std::size_t>(v)]) interior.push_back(static_cast<std::size_t>(v - 1));
    return det(k.submatrix(interior, interior));
}

Rational spanning_tree_weight(const Network& net) {
    Matrix<Rational> k = laplacian(net);
    std::vector<std::size_t> keep;
    for (int v = 1; v < net.vertex_count; ++v) keep.push_back(static_cast<std::size_t>(v - 1));
    return det(k.submatrix(keep, keep));
}

Partition cs_partition(int N) {
    if (N < 2) throw PreconditionError("carroll-speyer partition needs N >= 2");
    const int n = 3 * N;
    std::vector<std::vector<int>> parts;
    auto wrap = [n](int v) { return (v - 1 + n) % n + 1; };
    for (int side = 0; side < 3; ++side) {
        const int corner = (side + 1) * N;
        parts.push_back({corner});
        for (int j = 1; j <= (N - 1) / 2; ++j) parts.push_back({wrap(corner - j), wrap(corner + j)});
    }
    if (N % 2 == 0) parts.push_back({N / 2, N + N / 2, 2 * N + N / 2});
    return Partition(n, std::move(parts));
}

Integer cs_count(int N) {
    const Network net = cs_graph(N);
    const ResponseMatrix L = response_matrix(net);
    const Partition sigma = cs_partition(N);
    const Rational pu = partition_pu(L, sigma);
    const Rational count = pu * forest_count_interior_rooted(net);
    if (!is_integer(count)) throw InvariantError("carroll-speyer grove count is not an integer");
    return count.get_num();
}

Integer forest_count_product_formula(int N) {
    if (N < 2) throw PreconditionError("product formula needs N >= 2");
    const int q = 3 * N;
    // alpha = z^a, beta = z^b, gamma = z^c for z = e^{2 pi i / 3N}, with
    // b == a (mod 3), c = -(a+b), all distinct; unordered triples {a,b,c}.
    std::set<std::array<int, 3>> triples;
    for (int a = 0; a < q; ++a)
        for (int b = a % 3; b < q; b += 3) {
            const int c = ((-(a + b)) % q + q) % q;
            if (a == b || a == c || b == c) continue;
            std::array<int, 3> t = {a, b, c};
            std::sort(t.begin(), t.end());
            triples.insert(t);
        }

    const mpfr_prec_t prec = 256;
    mpfr_t pi, angle, cosv, factor, product, tmp;
    mpfr_inits2(prec, pi, angle, cosv, factor, product, tmp, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_ui(product, 1, MPFR_RNDN);
    for (const auto& t : triples) {
        mpfr_set_ui(factor, 6, MPFR_RNDN);
        for (int idx : t) {
            // factor -= 2 cos(2 pi idx / q)
            mpfr_mul_ui(angle, pi, 2 * static_cast<unsigned long>(idx), MPFR_RNDN);
            mpfr_div_ui(angle, angle, static_cast<unsigned long>(q), MPFR_RNDN);
            mpfr_cos(cosv, angle, MPFR_RNDN);
            mpfr_mul_ui(tmp, cosv, 2, MPFR_RNDN);
            mpfr_sub(factor, factor, tmp, MPFR_RNDN);
        }
        mpfr_mul(product, product, factor, MPFR_RNDN);
    }
    // round to nearest integer and check the residual
    mpfr_round(tmp, product);
    mpz_class result;
    mpfr_get_z(result.get_mpz_t(), tmp, MPFR_RNDN);
    mpfr_sub(tmp, product, tmp, MPFR_RNDN);
    mpfr_abs(tmp, tmp, MPFR_RNDN);
    const double residual = mpfr_get_d(tmp, MPFR_RNDN);
    mpfr_clears(pi, angle, cosv, factor, product, tmp, static_cast<mpfr_ptr>(nullptr));
    if (residual > 1e-30)
        throw InvariantError("product formula residual too large; precision insufficient");
    return result;
}

}  // namespace groves
