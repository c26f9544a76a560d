#include "groves/double_dimer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "groves/errors.hpp"
#include "groves/linalg.hpp"

namespace groves {

void BipartiteNetwork::validate() const {
    if (vertex_count < 0) throw ShapeError("negative vertex count");
    if (color.size() != static_cast<std::size_t>(vertex_count))
        throw ShapeError("color list size mismatch");
    for (char c : color)
        if (c != 'B' && c != 'W') throw ShapeError("vertex color must be 'B' or 'W'");
    if (nodes.empty() || nodes.size() % 2 != 0)
        throw ShapeError("bipartite network needs a positive even number of nodes");
    std::set<int> seen;
    for (int v : nodes) {
        if (v < 1 || v > vertex_count) throw ShapeError("node id out of range");
        if (!seen.insert(v).second) throw ShapeError("duplicate node");
    }
    for (const auto& e : edges) {
        if (e.u < 1 || e.u > vertex_count || e.v < 1 || e.v > vertex_count)
            throw ShapeError("edge endpoint out of range");
        if (color[static_cast<std::size_t>(e.u - 1)] == color[static_cast<std::size_t>(e.v - 1)])
            throw ShapeError("edges must join oppositely colored vertices");
        if (e.weight <= 0) throw ShapeError("edge weights must be positive");
    }
    for (const auto& f : faces) {
        if (f.size() < 4 || f.size() % 2 != 0)
            throw ShapeError("bounded faces of a bipartite graph have even length >= 4");
        for (int v : f)
            if (v < 1 || v > vertex_count) throw ShapeError("face vertex out of range");
    }
}

namespace {

std::size_t edge_index(const BipartiteNetwork& g, int a, int b) {
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const auto& e = g.edges[k];
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return k;
    }
    throw ShapeError("face names a missing edge");
}

// Kasteleyn signs: the product of signs around a bounded face of length l
// must be (-1)^{l/2+1} (odd number of negatives on quadrilaterals).  Solved
// as a GF(2) system, one equation per bounded face.
std::vector<int> kasteleyn_signs(const BipartiteNetwork& g) {
    const std::size_t m = g.edges.size();
    std::vector<std::vector<char>> rows;
    std::vector<char> rhs;
    for (const auto& f : g.faces) {
        std::vector<char> row(m, 0);
        for (std::size_t i = 0; i < f.size(); ++i)
            row[edge_index(g, f[i], f[(i + 1) % f.size()])] ^= 1;
        rows.push_back(std::move(row));
        rhs.push_back(static_cast<char>((f.size() / 2 + 1) % 2));
    }
    // GF(2) elimination
    const std::size_t nrows = rows.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && !rows[p][c]) ++p;
        if (p == nrows) continue;
        std::swap(rows[p], rows[r]);
        std::swap(rhs[p], rhs[r]);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i != r && rows[i][c]) {
                for (std::size_t j = 0; j < m; ++j) rows[i][j] ^= rows[r][j];
                rhs[i] ^= rhs[r];
            }
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < nrows; ++i)
        if (rhs[i]) throw InvariantError("kasteleyn sign system inconsistent (bad embedding?)");
    std::vector<int> sign(m, 1);
    for (std::size_t i = 0; i < r; ++i)
        if (rhs[i]) sign[pivot_col[i]] = -1;
    return sign;
}

bool node_is_kept_in_gbw(const BipartiteNetwork& g, std::size_t node_pos) {
    const int v = g.nodes[node_pos];
    const bool odd = node_pos % 2 == 0;  // node numbers are 1-based: position 0 is node 1
    const bool black = g.color[static_cast<std::size_t>(v - 1)] == 'B';
    return (black && odd) || (!black && !odd);
}

DimerGraph induced_subgraph(const BipartiteNetwork& g, const std::vector<char>& keep) {
    const std::vector<int> signs = kasteleyn_signs(g);
    DimerGraph out;
    for (int v = 1; v <= g.vertex_count; ++v) {
        if (!keep[static_cast<std::size_t>(v)]) continue;
        if (g.color[static_cast<std::size_t>(v - 1)] == 'B') {
            out.black.push_back(v);
        } else {
            out.white.push_back(v);
        }
    }
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        const auto& e = g.edges[k];
        if (!keep[static_cast<std::size_t>(e.u)] || !keep[static_cast<std::size_t>(e.v)]) continue;
        int b = e.u, w = e.v;
        if (g.color[static_cast<std::size_t>(b - 1)] != 'B') std::swap(b, w);
        out.edges.push_back({b, w, e.weight, signs[k]});
    }
    return out;
}

}  // namespace

Rational dimer_partition_function(const DimerGraph& g) {
    if (g.black.size() != g.white.size()) return Rational(0);
    const std::size_t n = g.black.size();
    if (n == 0) return Rational(1);
    std::map<int, std::size_t> bpos, wpos;
    for (std::size_t i = 0; i < n; ++i) bpos[g.black[i]] = i;
    for (std::size_t i = 0; i < n; ++i) wpos[g.white[i]] = i;
    Matrix<Rational> k(n, n);
    for (const auto& e : g.edges)
        k(bpos.at(e.u), wpos.at(e.v)) += Rational(e.sign) * e.weight;
    Rational d = det(k);
    return d < 0 ? -d : d;
}

DimerGraph gbw(const BipartiteNetwork& g) {
    g.validate();
    std::vector<char> keep(static_cast<std::size_t>(g.vertex_count) + 1, 1);
    for (std::size_t pos = 0; pos < g.nodes.size(); ++pos)
        keep[static_cast<std::size_t>(g.nodes[pos])] = node_is_kept_in_gbw(g, pos) ? 1 : 0;
    return induced_subgraph(g, keep);
}

DimerGraph gbw_ij(const BipartiteNetwork& g, int i, int j) {
    g.validate();
    if (i == j) throw PreconditionError("gbw_ij needs two distinct nodes");
    const int n2 = static_cast<int>(g.nodes.size());
    if (i < 1 || i > n2 || j < 1 || j > n2) throw PreconditionError("node index out of range");
    std::vector<char> keep(static_cast<std::size_t>(g.vertex_count) + 1, 1);
    for (std::size_t pos = 0; pos < g.nodes.size(); ++pos) {
        bool kept = node_is_kept_in_gbw(g, pos);
        if (static_cast<int>(pos) + 1 == i || static_cast<int>(pos) + 1 == j) kept = !kept;
        keep[static_cast<std::size_t>(g.nodes[pos])] = kept ? 1 : 0;
    }
    return induced_subgraph(g, keep);
}

XMatrix x_matrix(const BipartiteNetwork& g) {
    g.validate();
    const int n2 = static_cast<int>(g.nodes.size());
    const Rational zbw = dimer_partition_function(gbw(g));
    if (zbw == 0) throw PreconditionError("Z^BW vanishes; X matrix undefined");
    XMatrix out{Matrix<Rational>(static_cast<std::size_t>(n2), static_cast<std::size_t>(n2))};
    for (int i = 1; i <= n2; ++i)
        for (int j = i + 1; j <= n2; ++j) {
            if ((i + j) % 2 == 0) continue;  // same parity: structural zero
            Rational z = dimer_partition_function(gbw_ij(g, i, j)) / zbw;
            out.x(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = z;
            out.x(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1)) = z;
        }
    return out;
}

namespace {

// rows: odd nodes ascending; column k: the partner of the k-th odd node.
template <class T, class EntryFn>
Matrix<T> dd_matrix(const ColorSpec& c, EntryFn&& entry) {
    Partition sigma = tripartite_partition(c);
    if (!sigma.parts_of_size(3).empty() || !sigma.singleton_elements().empty())
        throw PreconditionError("double-dimer theorem needs a tripartite pairing");
    const int n2 = c.n();
    std::vector<int> partner(static_cast<std::size_t>(n2) + 1, 0);
    for (const auto& part : sigma.parts()) {
        partner[static_cast<std::size_t>(part[0])] = part[1];
        partner[static_cast<std::size_t>(part[1])] = part[0];
    }
    const std::size_t n = static_cast<std::size_t>(n2) / 2;
    Matrix<T> m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const int i = 2 * static_cast<int>(r) + 1;
        for (std::size_t col = 0; col < n; ++col) {
            const int j = partner[static_cast<std::size_t>(2 * col + 1)];
            if (c.color(i) == c.color(j)) continue;  // indicator zero
            m(r, col) = entry(i, j);
        }
    }
    return m;
}

}  // namespace

Rational dd_tripartite_prob(const XMatrix& x, const ColorSpec& c) {
    if (x.n() != c.n()) throw ShapeError("X matrix and color spec disagree on 2n");
    auto m = dd_matrix<Rational>(c, [&](int i, int j) {
        return x.x(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    });
    return det(m);
}

MultiPoly dd_tripartite_symbolic(const ColorSpec& c) {
    auto m = dd_matrix<MultiPoly>(c, [](int i, int j) { return MultiPoly::variable(i, j); });
    return det(m);
}

MultiPoly l_to_x_substitute(const MultiPoly& p) {
    MultiPoly out;
    for (const auto& [mono, coef] : p.terms()) {
        MultiPoly term(coef);
        bool zero = false;
        for (MultiPoly::Var v : mono) {
            auto [i, j] = MultiPoly::var_indices(v);
            if ((i + j) % 2 == 0) {
                zero = true;
                break;
            }
            const int d = std::abs(i - j);
            term *= MultiPoly::variable(i, j);
            if (((d - 1) / 2) % 2 == 1) term = -term;
        }
        if (!zero) out += term;
    }
    return out;
}

int pairing_even_permutation_sign(const Partition& pairing) {
    std::vector<int> evens;
    for (const auto& part : pairing.parts()) {
        if (part.size() != 2) throw PreconditionError("not a pairing");
        const int a = part[0], b = part[1];
        evens.push_back(a % 2 == 0 ? a : b);
    }
    // parts are already sorted by their minimum = odd item
    int inversions = 0;
    for (std::size_t i = 0; i < evens.size(); ++i)
        for (std::size_t j = i + 1; j < evens.size(); ++j)
            if (evens[i] > evens[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

std::map<Partition, Rational> dd_bruteforce(const BipartiteNetwork& g, std::size_t max_edges) {
    std::map<Partition, Rational> out;
    if (g.vertex_count == 0 && g.nodes.empty()) {
        out.emplace(Partition(0, {}), Rational(1));
        return out;
    }
    g.validate();
    if (g.edges.size() > max_edges)
        throw PreconditionError("graph too large for double-dimer enumeration");
    const int n2 = static_cast<int>(g.nodes.size());

    std::vector<int> target(static_cast<std::size_t>(g.vertex_count) + 1, 2);
    for (int v : g.nodes) target[static_cast<std::size_t>(v)] = 1;
    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count) + 1, 0);
    std::vector<int> remaining(static_cast<std::size_t>(g.vertex_count) + 1, 0);
    for (const auto& e : g.edges) {
        remaining[static_cast<std::size_t>(e.u)] += 2;
        remaining[static_cast<std::size_t>(e.v)] += 2;
    }
    std::vector<int> mult(g.edges.size(), 0);

    auto record = [&](const Rational& weight) {
        // multiplicity-1 edges decompose into node-to-node paths and loops
        std::vector<std::vector<std::pair<int, std::size_t>>> adj(
            static_cast<std::size_t>(g.vertex_count) + 1);
        for (std::size_t k = 0; k < g.edges.size(); ++k)
            if (mult[k] == 1) {
                adj[static_cast<std::size_t>(g.edges[k].u)].push_back({g.edges[k].v, k});
                adj[static_cast<std::size_t>(g.edges[k].v)].push_back({g.edges[k].u, k});
            }
        std::vector<char> used_edge(g.edges.size(), 0);
        std::vector<int> node_pos(static_cast<std::size_t>(g.vertex_count) + 1, 0);
        for (std::size_t p = 0; p < g.nodes.size(); ++p)
            node_pos[static_cast<std::size_t>(g.nodes[p])] = static_cast<int>(p) + 1;
        std::vector<std::vector<int>> parts;
        // trace paths from nodes
        for (int start : g.nodes) {
            bool has_free = false;
            for (auto [w, k] : adj[static_cast<std::size_t>(start)])
                if (!used_edge[k]) has_free = true;
            if (!has_free) continue;
            int cur = start, prev_edge = -1;
            while (true) {
                bool advanced = false;
                for (auto [w, k] : adj[static_cast<std::size_t>(cur)]) {
                    if (used_edge[k] || static_cast<int>(k) == prev_edge) continue;
                    used_edge[k] = 1;
                    cur = w;
                    prev_edge = static_cast<int>(k);
                    advanced = true;
                    break;
                }
                if (!advanced) break;
                if (node_pos[static_cast<std::size_t>(cur)] > 0) break;
            }
            parts.push_back({node_pos[static_cast<std::size_t>(start)],
                             node_pos[static_cast<std::size_t>(cur)]});
        }
        // leftover degree-2 cycles are loops, each weighing 2
        int loops = 0;
        for (std::size_t k = 0; k < g.edges.size(); ++k) {
            if (mult[k] != 1 || used_edge[k]) continue;
            int cur = g.edges[k].u, prev_edge = -1;
            while (true) {
                bool advanced = false;
                for (auto [w, kk] : adj[static_cast<std::size_t>(cur)]) {
                    if (used_edge[kk] || static_cast<int>(kk) == prev_edge) continue;
                    used_edge[kk] = 1;
                    cur = w;
                    prev_edge = static_cast<int>(kk);
                    advanced = true;
                    break;
                }
                if (!advanced) break;
            }
            ++loops;
        }
        Rational w = weight;
        for (int l = 0; l < loops; ++l) w *= 2;
        Partition p(n2, parts);
        auto it = out.find(p);
        if (it == out.end()) {
            out.emplace(std::move(p), w);
        } else {
            it->second += w;
        }
    };

    auto rec = [&](auto&& self, std::size_t k, Rational weight) -> void {
        if (k == g.edges.size()) {
            for (int v = 1; v <= g.vertex_count; ++v)
                if (degree[static_cast<std::size_t>(v)] != target[static_cast<std::size_t>(v)]) return;
            record(weight);
            return;
        }
        const auto& e = g.edges[k];
        const std::size_t u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
        remaining[u] -= 2;
        remaining[v] -= 2;
        for (int m = 0; m <= 2; ++m) {
            if (degree[u] + m > target[u] || degree[v] + m > target[v]) break;
            degree[u] += m;
            degree[v] += m;
            const bool feasible = degree[u] + remaining[u] >= target[u] &&
                                  degree[v] + remaining[v] >= target[v];
            if (feasible) {
                Rational w = weight;
                for (int t = 0; t < m; ++t) w *= e.weight;
                mult[k] = m;
                self(self, k + 1, w);
            }
            degree[u] -= m;
            degree[v] -= m;
        }
        mult[k] = 0;
        remaining[u] += 2;
        remaining[v] += 2;
    };
    rec(rec, 0, Rational(1));
    return out;
}

}  // namespace groves
