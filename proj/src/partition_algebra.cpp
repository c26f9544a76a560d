#include "groves/partition_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "groves/errors.hpp"

namespace groves {

ColorSpec::ColorSpec(int n, std::vector<int> color_of_node) : n_(n), colors_(std::move(color_of_node)) {
    if (n < 0 || colors_.size() != static_cast<std::size_t>(n))
        throw ShapeError("color vector size mismatch");
    for (int c : colors_)
        if (c < 0 || c > 2) throw ShapeError("color out of range");
    // Each class must be a contiguous circular arc: the color sequence has at
    // most one circular "run start" per class.
    for (int c = 0; c < 3; ++c) {
        int starts = 0;
        for (int i = 0; i < n; ++i) {
            int prev = colors_[static_cast<std::size_t>((i + n - 1) % n)];
            if (colors_[static_cast<std::size_t>(i)] == c && prev != c) ++starts;
        }
        if (starts > 1) throw PreconditionError("color class is not circularly contiguous");
    }
}

ColorSpec ColorSpec::from_ranges(int n, std::pair<int, int> red, std::pair<int, int> green,
                                 std::pair<int, int> blue) {
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    auto paint = [&](std::pair<int, int> range, int c) {
        if (range.first == 0) return;  // absent class
        int i = range.first;
        while (true) {
            if (i < 1 || i > n) throw ShapeError("color range out of bounds");
            if (colors[static_cast<std::size_t>(i - 1)] != -1)
                throw ShapeError("color ranges overlap");
            colors[static_cast<std::size_t>(i - 1)] = c;
            if (i == range.second) break;
            i = i % n + 1;
        }
    };
    paint(red, Red);
    paint(green, Green);
    paint(blue, Blue);
    for (int v : colors)
        if (v == -1) throw ShapeError("color ranges do not cover all nodes");
    return ColorSpec(n, std::move(colors));
}

std::vector<int> ColorSpec::class_sizes() const {
    std::vector<int> sizes(3, 0);
    for (int c : colors_) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
}

Partition tripartite_partition(const ColorSpec& c) {
    const int n = c.n();
    if (n == 0) throw PreconditionError("empty color spec");

    // Decompose the circle into color runs in counterclockwise order.
    struct Run {
        int color;
        std::vector<int> nodes;  // ccw
    };
    std::vector<Run> runs;
    int start = 0;
    while (start < n && c.color(start + 1) == c.color((start == 0 ? n : start)))
        ++start;  // find a run boundary; start stays 0 for a monochromatic circle
    if (start == n) {
        // single color only
        throw PreconditionError("triangle inequality violated for color class sizes");
    }
    for (int k = 0, i = start; k < n;) {
        Run run;
        run.color = c.color(i + 1);
        while (k < n && c.color(i + 1) == run.color) {
            run.nodes.push_back(i + 1);
            i = (i + 1) % n;
            ++k;
        }
        runs.push_back(std::move(run));
    }

    std::vector<std::vector<int>> parts;
    if (runs.size() == 1) {
        throw PreconditionError("triangle inequality violated for color class sizes");
    }
    if (runs.size() == 2) {
        // Parallel pairing between the two arcs.
        const auto& a = runs[0].nodes;
        const auto& b = runs[1].nodes;
        if (a.size() != b.size())
            throw PreconditionError("triangle inequality violated for color class sizes");
        for (std::size_t i = 0; i < a.size(); ++i)
            parts.push_back({a[a.size() - 1 - i], b[i]});
        return Partition(n, std::move(parts));
    }
    if (runs.size() != 3) throw PreconditionError("colors do not form three contiguous arcs");

    const long r = static_cast<long>(runs[0].nodes.size());
    const long g = static_cast<long>(runs[1].nodes.size());
    const long b = static_cast<long>(runs[2].nodes.size());
    const bool odd = (n % 2) != 0;
    const long adjust = odd ? 1 : 0;
    const long x01 = (r + g - b - adjust) / 2;
    const long x12 = (g + b - r - adjust) / 2;
    const long x20 = (b + r - g - adjust) / 2;
    if (x01 < 0 || x12 < 0 || x20 < 0)
        throw PreconditionError("triangle inequality violated for color class sizes");

    auto pair_runs = [&](const Run& u, const Run& v, long count) {
        // nested pairs around the boundary where u ends and v begins
        for (long i = 1; i <= count; ++i)
            parts.push_back({u.nodes[u.nodes.size() - static_cast<std::size_t>(i)],
                             v.nodes[static_cast<std::size_t>(i - 1)]});
    };
    pair_runs(runs[0], runs[1], x01);
    pair_runs(runs[1], runs[2], x12);
    pair_runs(runs[2], runs[0], x20);
    if (odd) {
        parts.push_back({runs[0].nodes[static_cast<std::size_t>(x20)],
                         runs[1].nodes[static_cast<std::size_t>(x01)],
                         runs[2].nodes[static_cast<std::size_t>(x12)]});
    }
    return Partition(n, std::move(parts));
}

Partition kreweras_dual(const Partition& p) {
    if (!p.is_planar()) throw PreconditionError("kreweras dual requires a planar partition");
    const int n = p.n();
    // sigma_p maps each element to the next element of its part, cyclically.
    std::vector<int> next(static_cast<std::size_t>(n) + 1);
    for (const auto& part : p.parts())
        for (std::size_t i = 0; i < part.size(); ++i)
            next[static_cast<std::size_t>(part[i])] = part[(i + 1) % part.size()];
    std::vector<int> inv(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) inv[static_cast<std::size_t>(next[static_cast<std::size_t>(i)])] = i;
    // Dual parts are the cycles of sigma_p^{-1} composed with the rotation.
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> parts;
    for (int s = 1; s <= n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> cycle;
        int i = s;
        while (!seen[static_cast<std::size_t>(i)]) {
            seen[static_cast<std::size_t>(i)] = 1;
            cycle.push_back(i);
            i = inv[static_cast<std::size_t>(i % n + 1)];
        }
        parts.push_back(std::move(cycle));
    }
    return Partition(n, std::move(parts));
}

namespace {

struct Crossing {
    int a, b, c, d;           // a<b<c<d, a,c in one part, b,d in another
    std::size_t pa, pb;       // part indices
};

std::vector<Crossing> find_crossings(const Partition& p) {
    std::vector<Crossing> out;
    const int n = p.n();
    std::vector<std::size_t> owner(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < p.parts().size(); ++k)
        for (int e : p.parts()[k]) owner[static_cast<std::size_t>(e)] = k;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (owner[b] == owner[a]) continue;
            for (int c = b + 1; c <= n; ++c) {
                if (owner[c] != owner[a]) continue;
                for (int d = c + 1; d <= n; ++d)
                    if (owner[d] == owner[b])
                        out.push_back({a, b, c, d, owner[a], owner[b]});
            }
        }
    return out;
}

// The uncrossing rewrite: lift of
//   P(13|24) = 1|234 + 2|134 + 3|124 + 4|123 - 12|34 - 14|23
// to full partitions.  The leftover elements of the two crossing parts ride
// along with a chosen anchor token (anchor_a in {a,c}, anchor_b in {b,d});
// all remaining parts are untouched.  Any anchor choice yields an equivalent
// sum; the planar end result is the same.
std::vector<std::pair<Integer, Partition>> expand_crossing(const Partition& p, const Crossing& x,
                                                           int anchor_a, int anchor_b) {
    std::vector<int> rest_a, rest_b;
    for (int e : p.parts()[x.pa])
        if (e != x.a && e != x.c) rest_a.push_back(e);
    for (int e : p.parts()[x.pb])
        if (e != x.b && e != x.d) rest_b.push_back(e);

    // The six token partitions of {a,b,c,d} with their signs.
    const std::vector<std::pair<int, std::vector<std::vector<int>>>> base = {
        {+1, {{x.a}, {x.b, x.c, x.d}}}, {+1, {{x.b}, {x.a, x.c, x.d}}},
        {+1, {{x.c}, {x.a, x.b, x.d}}}, {+1, {{x.d}, {x.a, x.b, x.c}}},
        {-1, {{x.a, x.b}, {x.c, x.d}}}, {-1, {{x.a, x.d}, {x.b, x.c}}}};

    std::vector<std::pair<Integer, Partition>> out;
    for (const auto& [sign, token_parts] : base) {
        std::vector<std::vector<int>> parts;
        for (auto tp : token_parts) {
            bool has_anchor_a = std::find(tp.begin(), tp.end(), anchor_a) != tp.end();
            bool has_anchor_b = std::find(tp.begin(), tp.end(), anchor_b) != tp.end();
            if (has_anchor_a) tp.insert(tp.end(), rest_a.begin(), rest_a.end());
            if (has_anchor_b) tp.insert(tp.end(), rest_b.begin(), rest_b.end());
            parts.push_back(std::move(tp));
        }
        for (std::size_t k = 0; k < p.parts().size(); ++k)
            if (k != x.pa && k != x.pb) parts.push_back(p.parts()[k]);
        out.emplace_back(sign, Partition(p.n(), std::move(parts)));
    }
    return out;
}

PartitionSum project_impl(const Partition& t, std::mt19937_64* rng) {
    PartitionSum result, work;
    add_to(work, t, 1);
    std::size_t steps = 0;
    while (!work.empty()) {
        if (++steps > 2000000) throw InvariantError("projection rewrite did not terminate");
        // Pick a term; move planar ones to the result.
        auto it = work.begin();
        if (rng && work.size() > 1) {
            std::uniform_int_distribution<std::size_t> dist(0, work.size() - 1);
            std::advance(it, dist(*rng));
        }
        const Partition p = it->first;
        const Integer coef = it->second;
        work.erase(it);
        auto crossings = find_crossings(p);
        if (crossings.empty()) {
            add_to(result, p, coef);
            continue;
        }
        std::size_t pick = 0;
        int anchor_a, anchor_b;
        if (rng) {
            pick = std::uniform_int_distribution<std::size_t>(0, crossings.size() - 1)(*rng);
            anchor_a = ((*rng)() & 1) ? crossings[pick].a : crossings[pick].c;
            anchor_b = ((*rng)() & 1) ? crossings[pick].b : crossings[pick].d;
        } else {
            anchor_a = crossings[pick].a;
            anchor_b = crossings[pick].b;
        }
        for (const auto& [sign, term] : expand_crossing(p, crossings[pick], anchor_a, anchor_b))
            add_to(work, term, coef * sign);
    }
    return result;
}

}  // namespace

PartitionSum project(const Partition& t) { return project_impl(t, nullptr); }

PartitionSum project_randomized(const Partition& t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return project_impl(t, &rng);
}

Integer projection_coefficient(const Partition& s, const Partition& t) {
    if (!s.is_planar()) throw PreconditionError("projection coefficient requires planar row");
    if (s.n() != t.n()) throw ShapeError("node count mismatch");
    PartitionSum ps = project(t);
    auto it = ps.find(s);
    return it == ps.end() ? Integer(0) : it->second;
}

std::vector<std::vector<std::pair<int, int>>> spanning_trees_of_complete_graph(
    const std::vector<int>& labels) {
    const std::size_t k = labels.size();
    std::vector<std::vector<std::pair<int, int>>> out;
    if (k == 0) return out;
    if (k == 1) {
        out.push_back({});
        return out;
    }
    if (k > 12) throw PreconditionError("part too large for spanning-tree enumeration");
    // Prufer sequences of length k-2 over 0..k-1.
    std::vector<std::size_t> seq(k >= 2 ? k - 2 : 0, 0);
    while (true) {
        // Decode.
        std::vector<int> degree(k, 1);
        for (auto s : seq) ++degree[s];
        std::vector<std::pair<int, int>> edges;
        std::vector<char> used(k, 0);
        std::vector<int> deg = degree;
        for (auto s : seq) {
            std::size_t leaf = 0;
            while (leaf < k && !(deg[leaf] == 1 && !used[leaf])) ++leaf;
            edges.emplace_back(labels[leaf], labels[s]);
            used[leaf] = 1;
            --deg[s];
        }
        std::vector<std::size_t> last;
        for (std::size_t i = 0; i < k; ++i)
            if (!used[i]) last.push_back(i);
        edges.emplace_back(labels[last[0]], labels[last[1]]);
        out.push_back(std::move(edges));
        // Next sequence.
        std::size_t pos = seq.size();
        while (pos > 0 && seq[pos - 1] == k - 1) seq[--pos] = 0;
        if (pos == 0) break;
        ++seq[pos - 1];
    }
    return out;
}

Rational grove_prob_generic(const Partition& s, const Matrix<Rational>& L, int max_n) {
    const int n = s.n();
    if (n > max_n) throw PreconditionError("node count exceeds generic-path bound");
    if (!s.is_planar()) throw PreconditionError("grove probability of a non-planar partition");
    if (L.rows() != static_cast<std::size_t>(n) || L.cols() != static_cast<std::size_t>(n))
        throw ShapeError("response matrix size mismatch");
    std::function<Rational(int, int)> entry = [&](int i, int j) { return L(i - 1, j - 1); };
    Rational acc(0);
    for (const auto& tau : all_partitions(n)) {
        if (tau.part_count() != s.part_count()) continue;  // projection preserves part count
        PartitionSum ps = project(tau);
        auto it = ps.find(s);
        if (it == ps.end()) continue;
        acc += Rational(it->second) * l_tau_polynomial<Rational>(tau, entry);
    }
    return acc;
}

}  // namespace groves
