#include "groves/network.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "groves/errors.hpp"
#include "groves/linalg.hpp"

namespace groves {

void Network::validate() const {
    if (vertex_count < 0) throw ShapeError("negative vertex count");
    if (nodes.empty()) throw ShapeError("network must have at least one node");
    std::set<int> seen;
    for (int v : nodes) {
        if (v < 1 || v > vertex_count) throw ShapeError("node id out of range");
        if (!seen.insert(v).second) throw ShapeError("duplicate node");
    }
    for (const auto& e : edges) {
        if (e.u < 1 || e.u > vertex_count || e.v < 1 || e.v > vertex_count)
            throw ShapeError("edge endpoint out of range");
        if (e.u == e.v) throw ShapeError("self-loops are not allowed");
        if (e.conductance <= 0) throw ShapeError("conductances must be positive");
    }
}

void ResponseMatrix::validate() const {
    if (!m.square()) throw InvariantError("response matrix must be square");
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational row_sum(0);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) != m(j, i)) throw InvariantError("response matrix must be symmetric");
            row_sum += m(i, j);
        }
        if (row_sum != 0) throw InvariantError("response matrix rows must sum to zero");
    }
}

Matrix<Rational> laplacian(const Network& net) {
    net.validate();
    const std::size_t v = static_cast<std::size_t>(net.vertex_count);
    Matrix<Rational> k(v, v);
    for (const auto& e : net.edges) {
        const std::size_t a = static_cast<std::size_t>(e.u - 1), b = static_cast<std::size_t>(e.v - 1);
        k(a, a) += e.conductance;
        k(b, b) += e.conductance;
        k(a, b) -= e.conductance;
        k(b, a) -= e.conductance;
    }
    return k;
}

ResponseMatrix response_matrix(const Network& net) {
    Matrix<Rational> k = laplacian(net);
    std::vector<std::size_t> node_idx;
    for (int v : net.nodes) node_idx.push_back(static_cast<std::size_t>(v - 1));
    Matrix<Rational> schur;
    try {
        schur = schur_complement(k, node_idx);
    } catch (const SingularError&) {
        throw PreconditionError("interior component not connected to any node");
    }
    const std::size_t n = node_idx.size();
    ResponseMatrix out{Matrix<Rational>(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.m(i, j) = -schur(i, j);
    out.validate();
    return out;
}

ResistanceMatrix resistance_matrix(const ResponseMatrix& L) {
    const std::size_t n = static_cast<std::size_t>(L.n());
    ResistanceMatrix out{Matrix<Rational>(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<Rational> rhs(n, Rational(0));
            rhs[i] = 1;
            rhs[j] = -1;
            auto x = solve_kernel_aware(L.m, rhs);
            Rational r = -(x[i] - x[j]);
            out.m(i, j) = r;
            out.m(j, i) = r;
        }
    return out;
}

ResponseMatrix dual_response(const ResponseMatrix& L) {
    const std::size_t n = static_cast<std::size_t>(L.n());
    ResponseMatrix out{Matrix<Rational>(n, n)};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> rhs(n, Rational(0));
        rhs[j] += 1;
        rhs[(j + 1) % n] -= 1;
        auto x = solve_kernel_aware(L.m, rhs);
        for (std::size_t i = 0; i < n; ++i) out.m(i, j) = x[i] - x[(i + 1) % n];
    }
    out.validate();
    return out;
}

Move move_from_string(const std::string& name) {
    if (name == "series") return Move::Series;
    if (name == "parallel") return Move::Parallel;
    if (name == "pendant") return Move::PendantRemoval;
    if (name == "wye-delta") return Move::WyeDelta;
    if (name == "delta-wye") return Move::DeltaWye;
    throw ParseError("unknown transform: " + name);
}

std::string move_to_string(Move m) {
    switch (m) {
        case Move::Series: return "series";
        case Move::Parallel: return "parallel";
        case Move::PendantRemoval: return "pendant";
        case Move::WyeDelta: return "wye-delta";
        case Move::DeltaWye: return "delta-wye";
    }
    throw InvariantError("bad move enum");
}

namespace {

bool is_node(const Network& net, int v) {
    return std::find(net.nodes.begin(), net.nodes.end(), v) != net.nodes.end();
}

std::vector<std::size_t> incident_edges(const Network& net, int v) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < net.edges.size(); ++k)
        if (net.edges[k].u == v || net.edges[k].v == v) out.push_back(k);
    return out;
}

// Removes a vertex, renumbering the tail to keep ids contiguous.
Network drop_vertex(Network net, int v) {
    if (is_node(net, v)) throw PreconditionError("cannot remove a boundary node");
    Network out;
    out.vertex_count = net.vertex_count - 1;
    auto remap = [v](int w) { return w > v ? w - 1 : w; };
    for (const auto& e : net.edges) {
        if (e.u == v || e.v == v) throw InvariantError("dangling edge while dropping vertex");
        out.edges.push_back({remap(e.u), remap(e.v), e.conductance});
    }
    for (int w : net.nodes) out.nodes.push_back(remap(w));
    return out;
}

}  // namespace

Network apply_transform(const Network& net, Move move, const std::vector<int>& location) {
    net.validate();
    switch (move) {
        case Move::Series: {
            if (location.size() != 1) throw PreconditionError("series expects one vertex");
            const int v = location[0];
            if (is_node(net, v)) throw PreconditionError("series vertex must be interior");
            auto inc = incident_edges(net, v);
            if (inc.size() != 2) throw PreconditionError("series vertex must have degree 2");
            const auto& e1 = net.edges[inc[0]];
            const auto& e2 = net.edges[inc[1]];
            const int u = e1.u == v ? e1.v : e1.u;
            const int w = e2.u == v ? e2.v : e2.u;
            if (u == w) throw PreconditionError("series endpoints coincide");
            Network tmp;
            tmp.vertex_count = net.vertex_count;
            tmp.nodes = net.nodes;
            for (std::size_t k = 0; k < net.edges.size(); ++k)
                if (k != inc[0] && k != inc[1]) tmp.edges.push_back(net.edges[k]);
            const Rational a = e1.conductance, b = e2.conductance;
            tmp.edges.push_back({u, w, a * b / (a + b)});
            return drop_vertex(tmp, v);
        }
        case Move::Parallel: {
            if (location.size() != 2) throw PreconditionError("parallel expects two vertices");
            const int u = std::min(location[0], location[1]);
            const int v = std::max(location[0], location[1]);
            Network out;
            out.vertex_count = net.vertex_count;
            out.nodes = net.nodes;
            Rational sum(0);
            int count = 0;
            for (const auto& e : net.edges) {
                if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
                    sum += e.conductance;
                    ++count;
                } else {
                    out.edges.push_back(e);
                }
            }
            if (count < 2) throw PreconditionError("no parallel edges between the given vertices");
            out.edges.push_back({u, v, sum});
            return out;
        }
        case Move::PendantRemoval: {
            if (location.size() != 1) throw PreconditionError("pendant expects one vertex");
            const int v = location[0];
            if (is_node(net, v)) throw PreconditionError("pendant vertex must be interior");
            auto inc = incident_edges(net, v);
            if (inc.size() != 1) throw PreconditionError("pendant vertex must have degree 1");
            Network tmp;
            tmp.vertex_count = net.vertex_count;
            tmp.nodes = net.nodes;
            for (std::size_t k = 0; k < net.edges.size(); ++k)
                if (k != inc[0]) tmp.edges.push_back(net.edges[k]);
            return drop_vertex(tmp, v);
        }
        case Move::WyeDelta: {
            if (location.size() != 1) throw PreconditionError("wye-delta expects the center vertex");
            const int v = location[0];
            if (is_node(net, v)) throw PreconditionError("wye center must be interior");
            auto inc = incident_edges(net, v);
            if (inc.size() != 3) throw PreconditionError("wye center must have degree 3");
            int p[3];
            Rational c[3];
            for (int k = 0; k < 3; ++k) {
                const auto& e = net.edges[inc[static_cast<std::size_t>(k)]];
                p[k] = e.u == v ? e.v : e.u;
                c[k] = e.conductance;
            }
            if (p[0] == p[1] || p[0] == p[2] || p[1] == p[2])
                throw PreconditionError("wye legs must reach distinct vertices");
            Network tmp;
            tmp.vertex_count = net.vertex_count;
            tmp.nodes = net.nodes;
            for (std::size_t k = 0; k < net.edges.size(); ++k)
                if (std::find(inc.begin(), inc.end(), k) == inc.end())
                    tmp.edges.push_back(net.edges[k]);
            const Rational s = c[0] + c[1] + c[2];
            tmp.edges.push_back({p[0], p[1], c[0] * c[1] / s});
            tmp.edges.push_back({p[0], p[2], c[0] * c[2] / s});
            tmp.edges.push_back({p[1], p[2], c[1] * c[2] / s});
            return drop_vertex(tmp, v);
        }
        case Move::DeltaWye: {
            if (location.size() != 3) throw PreconditionError("delta-wye expects three vertices");
            const int p = location[0], q = location[1], r = location[2];
            auto find_edge = [&](int a, int b) -> std::size_t {
                for (std::size_t k = 0; k < net.edges.size(); ++k) {
                    const auto& e = net.edges[k];
                    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return k;
                }
                throw PreconditionError("delta edge missing");
            };
            const std::size_t epq = find_edge(p, q), epr = find_edge(p, r), eqr = find_edge(q, r);
            const Rational cpq = net.edges[epq].conductance;
            const Rational cpr = net.edges[epr].conductance;
            const Rational cqr = net.edges[eqr].conductance;
            Network out;
            out.vertex_count = net.vertex_count + 1;
            out.nodes = net.nodes;
            const int center = out.vertex_count;
            for (std::size_t k = 0; k < net.edges.size(); ++k)
                if (k != epq && k != epr && k != eqr) out.edges.push_back(net.edges[k]);
            const Rational s = cpq * cpr + cpq * cqr + cpr * cqr;
            out.edges.push_back({p, center, s / cqr});
            out.edges.push_back({q, center, s / cpr});
            out.edges.push_back({r, center, s / cpq});
            return out;
        }
    }
    throw InvariantError("bad move enum");
}

int SigmaLayout::vertex_at(int c, int y) const {
    if (!has_vertex(c, y)) throw ShapeError("no vertex at that position");
    return column_vertex[static_cast<std::size_t>(c - 1)]
                        [static_cast<std::size_t>(y - bottom[static_cast<std::size_t>(c - 1)])];
}

bool SigmaLayout::has_vertex(int c, int y) const {
    if (c < 1 || c > m) return false;
    return y >= bottom[static_cast<std::size_t>(c - 1)] && y <= top[static_cast<std::size_t>(c - 1)];
}

SigmaLayout sigma_layout(int n) {
    if (n < 1) throw PreconditionError("standard graph needs n >= 1");
    SigmaLayout lay;
    lay.n = n;
    lay.m = (n + 1) / 2;
    const bool even = n % 2 == 0;
    int next_id = 1;
    for (int c = 1; c <= lay.m; ++c) {
        const int lo = -(lay.m - c);
        const int hi = (lay.m - c) + (even ? 1 : 0);
        lay.bottom.push_back(lo);
        lay.top.push_back(hi);
        std::vector<int> col;
        for (int y = lo; y <= hi; ++y) col.push_back(next_id++);
        lay.column_vertex.push_back(std::move(col));
    }
    lay.vertex_count = next_id - 1;
    for (int c = 1; c <= lay.m; ++c)
        for (int y = lay.bottom[static_cast<std::size_t>(c - 1)];
             y < lay.top[static_cast<std::size_t>(c - 1)]; ++y)
            lay.edge_order.push_back({true, c, y});
    for (int c = 1; c < lay.m; ++c)
        for (int y = lay.bottom[static_cast<std::size_t>(c)]; y <= lay.top[static_cast<std::size_t>(c)];
             ++y)
            lay.edge_order.push_back({false, c, y});
    return lay;
}

Network standard_graph(int n, const std::vector<Rational>* conductances) {
    SigmaLayout lay = sigma_layout(n);
    Network net;
    net.vertex_count = lay.vertex_count;
    if (conductances && conductances->size() != lay.edge_order.size())
        throw ShapeError("conductance list does not match the standard graph edge count");
    for (std::size_t k = 0; k < lay.edge_order.size(); ++k) {
        const auto& e = lay.edge_order[k];
        const Rational c = conductances ? (*conductances)[k] : Rational(1);
        if (e.vertical) {
            net.edges.push_back({lay.vertex_at(e.c, e.y), lay.vertex_at(e.c, e.y + 1), c});
        } else {
            net.edges.push_back({lay.vertex_at(e.c, e.y), lay.vertex_at(e.c + 1, e.y), c});
        }
    }
    // Node k is the bottom of column k, node n+1-k the top of column k; for
    // odd n the tip is node m.
    net.nodes.resize(static_cast<std::size_t>(n));
    for (int c = 1; c <= lay.m; ++c) {
        const int bottom_id = lay.vertex_at(c, lay.bottom[static_cast<std::size_t>(c - 1)]);
        const int top_id = lay.vertex_at(c, lay.top[static_cast<std::size_t>(c - 1)]);
        net.nodes[static_cast<std::size_t>(c - 1)] = bottom_id;
        if (n % 2 == 1 && c == lay.m) continue;  // tip occupies a single slot
        net.nodes[static_cast<std::size_t>(n - c)] = top_id;
    }
    net.validate();
    return net;
}

std::vector<int> grid_boundary_ccw(int rows, int cols) {
    // Row-major ids with row 0 at the top; ccw starting at the bottom-left.
    auto id = [cols](int r, int c) { return r * cols + c + 1; };
    std::vector<int> out;
    for (int c = 0; c < cols; ++c) out.push_back(id(rows - 1, c));            // bottom, left->right
    for (int r = rows - 2; r >= 1; --r) out.push_back(id(r, cols - 1));       // right, up
    for (int c = cols - 1; c >= 0; --c) out.push_back(id(0, c));              // top, right->left
    for (int r = 1; r <= rows - 2; ++r) out.push_back(id(r, 0));              // left, down
    return out;
}

Network grid_graph(int rows, int cols, std::vector<int> nodes,
                   const std::vector<Rational>* conductances) {
    if (rows < 1 || cols < 1) throw PreconditionError("grid needs positive dimensions");
    Network net;
    net.vertex_count = rows * cols;
    auto id = [cols](int r, int c) { return r * cols + c + 1; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) net.edges.push_back({id(r, c), id(r, c + 1), Rational(1)});
            if (r + 1 < rows) net.edges.push_back({id(r, c), id(r + 1, c), Rational(1)});
        }
    if (conductances) {
        if (conductances->size() != net.edges.size())
            throw ShapeError("conductance list does not match grid edge count");
        for (std::size_t k = 0; k < net.edges.size(); ++k)
            net.edges[k].conductance = (*conductances)[k];
    }
    net.nodes = std::move(nodes);
    net.validate();
    return net;
}

Network cs_graph(int N) {
    if (N < 2) throw PreconditionError("carroll-speyer graph needs N >= 2");
    // Triangular array with N+1 vertices per side; rows r = 0..N (apex at 0),
    // row r holds positions 0..r.
    const int k = N + 1;
    std::vector<std::vector<int>> id(static_cast<std::size_t>(k));
    int next = 1;
    for (int r = 0; r < k; ++r)
        for (int j = 0; j <= r; ++j) id[static_cast<std::size_t>(r)].push_back(next++);
    Network net;
    net.vertex_count = next - 1;
    for (int r = 0; r < k; ++r)
        for (int j = 0; j <= r; ++j) {
            if (j + 1 <= r)
                net.edges.push_back({id[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                                     id[static_cast<std::size_t>(r)][static_cast<std::size_t>(j + 1)],
                                     Rational(1)});
            if (r + 1 < k) {
                net.edges.push_back({id[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                                     id[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(j)],
                                     Rational(1)});
                net.edges.push_back({id[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                                     id[static_cast<std::size_t>(r + 1)][static_cast<std::size_t>(j + 1)],
                                     Rational(1)});
            }
        }
    // Nodes counterclockwise: bottom side left->right (1..N-1 plus the
    // bottom-right corner as node N), right side upward (corner = apex at
    // 2N), left side downward (corner = bottom-left at 3N).
    for (int j = 1; j <= N - 1; ++j)
        net.nodes.push_back(id[static_cast<std::size_t>(N)][static_cast<std::size_t>(j)]);
    net.nodes.push_back(id[static_cast<std::size_t>(N)][static_cast<std::size_t>(N)]);
    for (int r = N - 1; r >= 1; --r)
        net.nodes.push_back(id[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)]);
    net.nodes.push_back(id[0][0]);
    for (int r = 1; r <= N - 1; ++r)
        net.nodes.push_back(id[static_cast<std::size_t>(r)][0]);
    net.nodes.push_back(id[static_cast<std::size_t>(N)][0]);
    net.validate();
    return net;
}

}  // namespace groves
