#include "groves/reconstruction.hpp"

#include <algorithm>

#include "groves/errors.hpp"
#include "groves/grove_engine.hpp"

namespace groves {

namespace {

// Height of node k on the boundary staircases: node c is the bottom of
// column c, node n+1-c the top of column c; heights rise monotonically with
// the ccw numbering.
int node_height(const SigmaLayout& lay, int node) {
    if (node <= lay.m) return lay.bottom[static_cast<std::size_t>(node - 1)];
    const int c = lay.n + 1 - node;
    return lay.top[static_cast<std::size_t>(c - 1)];
}

// Nested pairing of a consecutive run of nodes; an odd run leaves its middle
// element as a singleton.
void append_nested(std::vector<std::vector<int>>& parts, const std::vector<int>& arc) {
    std::size_t lo = 0, hi = arc.size();
    while (hi - lo >= 2) {
        parts.push_back({arc[lo], arc[hi - 1]});
        ++lo;
        --hi;
    }
    if (hi - lo == 1) parts.push_back({arc[lo]});
}

}  // namespace

Partition sigma_pi_v(const SigmaLayout& lay, int c, int y) {
    const int n = lay.n, m = lay.m;
    if (!lay.has_vertex(c, y)) throw PreconditionError("no vertex at that position");
    if (y == lay.bottom[static_cast<std::size_t>(c - 1)] || y == lay.top[static_cast<std::size_t>(c - 1)])
        throw PreconditionError("vertex is a boundary node, not interior");
    const int v_down = c;
    const int v_up = n + 1 - c;
    const int v_right = m + y;
    std::vector<std::vector<int>> parts;
    parts.push_back({v_down, v_right, v_up});
    std::vector<int> arc;
    for (int k = v_down + 1; k < v_right; ++k) arc.push_back(k);
    append_nested(parts, arc);
    arc.clear();
    for (int k = v_right + 1; k < v_up; ++k) arc.push_back(k);
    append_nested(parts, arc);
    // wrap arc between v_up and v_down pairs (c-j, n+1-c+j)
    for (int j = 1; j <= c - 1; ++j) parts.push_back({c - j, n + 1 - c + j});
    return Partition(n, std::move(parts));
}

Partition sigma_pi_f(const SigmaLayout& lay, const SigmaFace& f) {
    const int n = lay.n;
    std::vector<std::vector<int>> parts;
    int g = 0;   // columns 1..g keep their bottom-top pairs
    int cut = 0; // remaining nodes split by height <= cut
    bool split = true;
    switch (f.kind) {
        case SigmaFace::Bounded:
            g = f.c;
            cut = f.y;
            break;
        case SigmaFace::LeftExternal:
            g = 0;
            cut = f.y;
            break;
        case SigmaFace::OtherExternal:
            g = 0;
            split = false;  // the full parallel pairing
            break;
    }
    for (int c = 1; c <= g; ++c) parts.push_back({c, n + 1 - c});
    std::vector<int> lower, upper;
    for (int k = g + 1; k <= n - g; ++k) {
        if (!split) {
            lower.push_back(k);
        } else if (node_height(lay, k) <= cut) {
            lower.push_back(k);
        } else {
            upper.push_back(k);
        }
    }
    if (!split) {
        // nested pairing of everything = (1,n|2,n-1|...)
        append_nested(parts, lower);
    } else {
        append_nested(parts, lower);
        append_nested(parts, upper);
    }
    return Partition(n, std::move(parts));
}

StandardGraphAnnotation annotate_standard_graph(int n) {
    if (n < 2) throw PreconditionError("reconstruction needs n >= 2");
    StandardGraphAnnotation ann;
    ann.n = n;
    ann.layout = sigma_layout(n);
    ann.sigma = standard_graph(n);
    const auto& lay = ann.layout;

    ann.parallel = sigma_pi_f(lay, {SigmaFace::OtherExternal, 0, 0});

    for (int c = 1; c <= lay.m; ++c)
        for (int y = lay.bottom[static_cast<std::size_t>(c - 1)] + 1;
             y <= lay.top[static_cast<std::size_t>(c - 1)] - 1; ++y)
            ann.pi_v.emplace(lay.vertex_at(c, y), sigma_pi_v(lay, c, y));

    auto face_of = [&](int c, int y) -> SigmaFace {
        // square spanning columns c..c+1, heights y..y+1
        if (c == 0) return {SigmaFace::LeftExternal, 0, y};
        if (c >= lay.m) return {SigmaFace::OtherExternal, 0, 0};
        const bool covered = y >= lay.bottom[static_cast<std::size_t>(c)] &&
                             y + 1 <= lay.top[static_cast<std::size_t>(c)];
        if (!covered) return {SigmaFace::OtherExternal, 0, 0};
        return {SigmaFace::Bounded, c, y};
    };

    for (const auto& e : lay.edge_order) {
        StandardGraphAnnotation::EdgeInfo info;
        info.ref = e;
        if (e.vertical) {
            info.v1 = lay.vertex_at(e.c, e.y);
            info.v2 = lay.vertex_at(e.c, e.y + 1);
            info.f1 = face_of(e.c - 1, e.y);
            info.f2 = face_of(e.c, e.y);
        } else {
            info.v1 = lay.vertex_at(e.c, e.y);
            info.v2 = lay.vertex_at(e.c + 1, e.y);
            info.f1 = face_of(e.c, e.y);      // above
            info.f2 = face_of(e.c, e.y - 1);  // below
        }
        info.v1_interior = ann.pi_v.count(info.v1) > 0;
        info.v2_interior = ann.pi_v.count(info.v2) > 0;
        for (const SigmaFace& f : {info.f1, info.f2})
            if (!ann.pi_f.count(f)) ann.pi_f.emplace(f, sigma_pi_f(lay, f));
        ann.edges.push_back(std::move(info));
    }
    return ann;
}

std::vector<Rational> reconstruct(const ResponseMatrix& L, int n) {
    if (L.n() != n) throw ShapeError("response matrix size does not match n");
    StandardGraphAnnotation ann = annotate_standard_graph(n);

    // Every partition's pu is conductance-dependent but shared across edges.
    std::map<Partition, Rational> pu_cache;
    auto pu_of = [&](const Partition& p) -> const Rational& {
        auto it = pu_cache.find(p);
        if (it == pu_cache.end()) it = pu_cache.emplace(p, partition_pu(L, p)).first;
        return it->second;
    };

    std::vector<Rational> out;
    for (const auto& e : ann.edges) {
        const Partition& pv1 = e.v1_interior ? ann.pi_v.at(e.v1) : ann.parallel;
        const Partition& pv2 = e.v2_interior ? ann.pi_v.at(e.v2) : ann.parallel;
        const Partition& pf1 = ann.pi_f.at(e.f1);
        const Partition& pf2 = ann.pi_f.at(e.f2);
        const Rational num = pu_of(pv1) * pu_of(pv2);
        const Rational den = pu_of(pf1) * pu_of(pf2);
        if (den == 0 || num == 0)
            throw PreconditionError(
                "response matrix is not realizable by the standard graph with positive "
                "conductances");
        out.push_back(num / den);
    }
    return out;
}

}  // namespace groves
