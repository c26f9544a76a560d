#include "groves/grove_engine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "groves/errors.hpp"
#include "groves/linalg.hpp"
#include "groves/oracle.hpp"

namespace groves {

Rational uncrossing_tree_ratio(const ResponseMatrix& L) {
    const std::size_t n = static_cast<std::size_t>(L.n());
    if (n == 0) throw PreconditionError("empty response matrix");
    Matrix<Rational> neg(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j + 1 < n; ++j) neg(i, j) = -L.m(i, j);
    return det(neg);
}

std::optional<std::vector<int>> infer_tripartite_colors(const Partition& p) {
    const int n = p.n();
    if (n == 0) return std::nullopt;
    std::vector<std::size_t> owner(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < p.parts().size(); ++k)
        for (int e : p.parts()[k]) owner[static_cast<std::size_t>(e)] = k;
    // Arc boundaries sit in the gaps after positions g1 <= g2 <= g3 (1-based
    // nodes; gap g means between node g and g+1, cyclically).  Equal gaps
    // give an empty class.
    for (int g1 = 1; g1 <= n; ++g1)
        for (int g2 = g1; g2 <= n; ++g2)
            for (int g3 = g2; g3 <= n; ++g3) {
                std::vector<int> color(static_cast<std::size_t>(n));
                for (int v = 1; v <= n; ++v) {
                    // classify v by which arc (g1, g2], (g2, g3], (g3, g1]
                    // it falls into, walking cyclically
                    int c;
                    if (v > g1 && v <= g2) {
                        c = 1;
                    } else if (v > g2 && v <= g3) {
                        c = 2;
                    } else {
                        c = 0;
                    }
                    color[static_cast<std::size_t>(v - 1)] = c;
                }
                bool ok = true;
                for (const auto& part : p.parts()) {
                    if (part.size() == 2) {
                        if (color[static_cast<std::size_t>(part[0] - 1)] ==
                            color[static_cast<std::size_t>(part[1] - 1)])
                            ok = false;
                    } else if (part.size() == 3) {
                        int c0 = color[static_cast<std::size_t>(part[0] - 1)];
                        int c1 = color[static_cast<std::size_t>(part[1] - 1)];
                        int c2 = color[static_cast<std::size_t>(part[2] - 1)];
                        if (c0 == c1 || c0 == c2 || c1 == c2) ok = false;
                    } else {
                        ok = false;  // singletons handled before inference
                    }
                    if (!ok) break;
                }
                if (ok) return color;
            }
    return std::nullopt;
}

namespace {

// Rotation of 1..n starting right after the last node of color class 0's
// predecessor, i.e. at the start of the red arc.
std::vector<int> order_from_red_start(const std::vector<int>& color) {
    const int n = static_cast<int>(color.size());
    int start = 0;
    for (int i = 0; i < n; ++i) {
        int prev = (i + n - 1) % n;
        if (color[static_cast<std::size_t>(i)] == 0 && color[static_cast<std::size_t>(prev)] != 0) {
            start = i;
            break;
        }
    }
    std::vector<int> order;
    for (int k = 0; k < n; ++k) order.push_back((start + k) % n + 1);
    return order;
}

// Deletes singleton parts and renumbers the remaining nodes along the circle.
// Returns the reduced pairing plus the map from new labels to old.
std::pair<Partition, std::vector<int>> drop_singletons(const Partition& p) {
    std::vector<int> keep;
    for (const auto& part : p.parts())
        if (part.size() >= 2) keep.insert(keep.end(), part.begin(), part.end());
    std::sort(keep.begin(), keep.end());
    std::vector<int> new_label(static_cast<std::size_t>(p.n()) + 1, 0);
    for (std::size_t k = 0; k < keep.size(); ++k)
        new_label[static_cast<std::size_t>(keep[k])] = static_cast<int>(k) + 1;
    std::vector<std::vector<int>> parts;
    for (const auto& part : p.parts()) {
        if (part.size() < 2) continue;
        std::vector<int> np;
        for (int e : part) np.push_back(new_label[static_cast<std::size_t>(e)]);
        parts.push_back(std::move(np));
    }
    return {Partition(static_cast<int>(keep.size()), std::move(parts)), keep};
}

bool is_pairing_with_singletons(const Partition& p) {
    for (const auto& part : p.parts())
        if (part.size() > 2) return false;
    return true;
}

bool is_tripod_shape(const Partition& p) {
    int tripletons = 0;
    for (const auto& part : p.parts()) {
        if (part.size() == 3) ++tripletons;
        else if (part.size() > 3) return false;
    }
    return tripletons == 1;
}

}  // namespace

Rational pairing_partition_pu(const ResponseMatrix& L, const Partition& p) {
    if (p.n() != L.n()) throw ShapeError("partition and response matrix disagree on n");
    if (!p.is_planar()) throw PreconditionError("partition must be noncrossing");
    if (!is_pairing_with_singletons(p))
        throw PreconditionError("expected a pairing with optional singletons");
    auto [reduced, old_label] = drop_singletons(p);
    if (reduced.n() == 0) return Rational(1);
    auto colors = infer_tripartite_colors(reduced);
    if (!colors) throw PreconditionError("partition is not a tripartite pairing");
    auto order = order_from_red_start(*colors);
    auto m = engine_detail::color_block_matrix<Rational>(
        order, *colors, [&](int a, int b) {
            return L.m(static_cast<std::size_t>(old_label[static_cast<std::size_t>(a - 1)] - 1),
                       static_cast<std::size_t>(old_label[static_cast<std::size_t>(b - 1)] - 1));
        });
    return pfaffian(m);
}

namespace {

// Splits each singleton {s} into the pair {s, leaf} where the leaf hangs off
// s with unit conductance; the augmented response matrix gains a mostly-zero
// row and column per leaf and the partition becomes singleton-free with the
// same pu.
struct Augmented {
    Matrix<Rational> L;
    Partition partition;
};

Augmented split_singletons(const ResponseMatrix& L, const Partition& p) {
    const int n = p.n();
    const auto singles = p.singleton_elements();
    const int n2 = n + static_cast<int>(singles.size());
    // new index of old node i: i + (number of singletons before i)
    std::vector<int> shift(static_cast<std::size_t>(n) + 1, 0);
    for (int s : singles)
        for (int i = s + 1; i <= n; ++i) ++shift[static_cast<std::size_t>(i)];
    auto new_of = [&](int i) { return i + shift[static_cast<std::size_t>(i)]; };

    Matrix<Rational> L2(static_cast<std::size_t>(n2), static_cast<std::size_t>(n2));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            L2(static_cast<std::size_t>(new_of(i) - 1), static_cast<std::size_t>(new_of(j) - 1)) =
                L.m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    for (int s : singles) {
        const std::size_t a = static_cast<std::size_t>(new_of(s) - 1);
        const std::size_t leaf = a + 1;
        L2(leaf, leaf) = Rational(-1);
        L2(leaf, a) = Rational(1);
        L2(a, leaf) = Rational(1);
        L2(a, a) -= Rational(1);
    }

    std::vector<std::vector<int>> parts;
    for (const auto& part : p.parts()) {
        std::vector<int> np;
        for (int e : part) np.push_back(new_of(e));
        if (part.size() == 1) np.push_back(np[0] + 1);  // pair the node with its leaf
        parts.push_back(std::move(np));
    }
    return {std::move(L2), Partition(n2, std::move(parts))};
}

}  // namespace

Rational tripod_partition_pu(const ResponseMatrix& L, const Partition& p) {
    if (p.n() != L.n()) throw ShapeError("partition and response matrix disagree on n");
    if (!p.is_planar()) throw PreconditionError("partition must be noncrossing");
    if (!is_tripod_shape(p)) throw PreconditionError("expected exactly one tripleton part");

    ResponseMatrix work{L.m};
    Partition sigma = p;
    if (!p.singleton_elements().empty()) {
        Augmented aug = split_singletons(L, p);
        work.m = std::move(aug.L);
        sigma = std::move(aug.partition);
    }
    auto colors = infer_tripartite_colors(sigma);
    if (!colors) throw PreconditionError("partition is not a tripod for any contiguous coloring");
    auto order = order_from_red_start(*colors);
    auto m = engine_detail::color_block_matrix<Rational>(order, *colors, [&](int a, int b) {
        return work.m(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
    });
    // position (1-based) of each tripleton member in the red-start order
    const auto& tripleton = sigma.parts_of_size(3).front();
    long pos_sum = 0;
    for (int t : tripleton) {
        auto it = std::find(order.begin(), order.end(), t);
        pos_sum += static_cast<long>(it - order.begin()) + 1;
    }
    Rational pfd = pfaffianoid(m);
    return pos_sum % 2 == 0 ? pfd : -pfd;
}

Rational partition_pu(const ResponseMatrix& L, const Partition& p) {
    if (is_pairing_with_singletons(p)) return pairing_partition_pu(L, p);
    if (is_tripod_shape(p)) return tripod_partition_pu(L, p);
    throw PreconditionError("no closed form for this partition shape");
}

GroveProbability tripartite_pairing_prob(const ResponseMatrix& L, const ColorSpec& c) {
    Partition sigma = tripartite_partition(c);
    if (!sigma.parts_of_size(3).empty())
        throw PreconditionError("tripod partition: use tripod_prob");
    std::vector<int> colors;
    for (int i = 1; i <= c.n(); ++i) colors.push_back(c.color(i));
    auto order = order_from_red_start(colors);
    auto m = engine_detail::color_block_matrix<Rational>(order, colors, [&](int a, int b) {
        return L.m(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1));
    });
    return {pfaffian(m), Normalization::PerUncrossing};
}

GroveProbability tripod_prob(const ResponseMatrix& L, const ColorSpec& c) {
    Partition sigma = tripartite_partition(c);
    if (sigma.parts_of_size(3).empty())
        throw PreconditionError("no tripleton: use tripartite_pairing_prob");
    return {tripod_partition_pu(L, sigma), Normalization::PerUncrossing};
}

GroveProbability tripod_prob_via_dual(const ResponseMatrix& L, const ColorSpec& c) {
    Partition sigma = tripartite_partition(c);
    if (sigma.parts_of_size(3).empty())
        throw PreconditionError("no tripleton: use tripartite_pairing_prob");
    Partition dual = kreweras_dual(sigma);
    ResponseMatrix Lstar = dual_response(L);
    Rational dual_pu = pairing_partition_pu(Lstar, dual);
    return {dual_pu * uncrossing_tree_ratio(L), Normalization::PerUncrossing};
}

std::pair<Rational, Rational> minor_grove_identity(const Network& net, std::vector<int> A,
                                                   std::vector<int> B, std::vector<int> C,
                                                   std::vector<int> D) {
    const int n = static_cast<int>(net.node_count());
    std::sort(A.begin(), A.end());
    std::sort(B.begin(), B.end());
    std::sort(C.begin(), C.end());
    std::sort(D.begin(), D.end());
    if (A.size() != B.size()) throw PreconditionError("|A| must equal |B|");
    {
        std::vector<int> all;
        for (const auto* s : {&A, &B, &C, &D}) all.insert(all.end(), s->begin(), s->end());
        std::sort(all.begin(), all.end());
        std::vector<int> expect(static_cast<std::size_t>(n));
        std::iota(expect.begin(), expect.end(), 1);
        if (all != expect) throw PreconditionError("A,B,C,D must partition the node set");
    }

    ResponseMatrix L = response_matrix(net);
    std::vector<std::size_t> rows, cols;
    for (int a : A) rows.push_back(static_cast<std::size_t>(a - 1));
    for (int c : C) rows.push_back(static_cast<std::size_t>(c - 1));
    for (int b : B) cols.push_back(static_cast<std::size_t>(b - 1));
    for (int c : C) cols.push_back(static_cast<std::size_t>(c - 1));
    Rational det_side = det(L.m.submatrix(rows, cols));

    GroveTable table = enumerate_groves(net);
    const Rational z_unc = table.z.count(Partition::singletons(n))
                               ? table.z.at(Partition::singletons(n))
                               : Rational(0);
    if (z_unc == 0) throw PreconditionError("network has no uncrossing grove");

    std::vector<char> in_c(static_cast<std::size_t>(n) + 1, 0), in_d(static_cast<std::size_t>(n) + 1, 0);
    for (int c : C) in_c[static_cast<std::size_t>(c)] = 1;
    for (int d : D) in_d[static_cast<std::size_t>(d)] = 1;
    std::map<int, int> b_rank;
    for (std::size_t k = 0; k < B.size(); ++k) b_rank[B[k]] = static_cast<int>(k);

    Rational grove_sum(0);
    std::vector<int> perm(A.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        const int sgn = inversions % 2 == 0 ? 1 : -1;

        Rational z(0);
        for (const auto& [partition, weight] : table.z) {
            bool match = true;
            for (const auto& part : partition.parts()) {
                std::vector<int> stripped;
                for (int e : part)
                    if (!in_c[static_cast<std::size_t>(e)]) stripped.push_back(e);
                if (stripped.empty()) {
                    match = false;  // pure-C parts would not survive internalizing C
                } else if (stripped.size() == 1) {
                    if (!in_d[static_cast<std::size_t>(stripped[0])]) match = false;
                } else if (stripped.size() == 2) {
                    auto ia = std::find(A.begin(), A.end(), stripped[0]);
                    auto ib = b_rank.find(stripped[1]);
                    if (ia == A.end() || ib == b_rank.end()) {
                        std::swap(stripped[0], stripped[1]);
                        ia = std::find(A.begin(), A.end(), stripped[0]);
                        ib = b_rank.find(stripped[1]);
                    }
                    if (ia == A.end() || ib == b_rank.end() ||
                        perm[static_cast<std::size_t>(ia - A.begin())] != ib->second)
                        match = false;
                } else {
                    match = false;
                }
                if (!match) break;
            }
            if (match) z += weight;
        }
        grove_sum += Rational(sgn) * z;
    } while (std::next_permutation(perm.begin(), perm.end()));

    grove_sum /= z_unc;
    if (C.size() % 2 == 1) grove_sum = -grove_sum;
    return {det_side, grove_sum};
}

GroveProbability pairing_prob_from_resistances(const ResistanceMatrix& R, std::vector<int> A,
                                               std::vector<int> B) {
    std::sort(A.begin(), A.end());
    std::sort(B.begin(), B.end());
    if (A.size() != B.size()) throw PreconditionError("|A| must equal |B|");
    {
        std::vector<int> all;
        all.insert(all.end(), A.begin(), A.end());
        all.insert(all.end(), B.begin(), B.end());
        std::sort(all.begin(), all.end());
        std::vector<int> expect(static_cast<std::size_t>(R.n()));
        std::iota(expect.begin(), expect.end(), 1);
        if (all != expect) throw PreconditionError("A,B must partition the node set");
    }
    Matrix<TPoly> m(A.size(), B.size());
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j)
            m(i, j) = TPoly::t() - TPoly(R.m(static_cast<std::size_t>(A[i] - 1),
                                             static_cast<std::size_t>(B[j] - 1)) /
                                         2);
    TPoly d = det(m);
    return {d.coeff(1), Normalization::PerTree};
}

GroveProbability tripartite_prob_from_resistances(const ResistanceMatrix& R, const ColorSpec& c) {
    Partition sigma = tripartite_partition(c);
    if (!sigma.parts_of_size(3).empty() || !sigma.singleton_elements().empty())
        throw PreconditionError("resistance pfaffian requires a tripartite pairing");
    const std::size_t n = static_cast<std::size_t>(c.n());
    if (static_cast<int>(R.m.rows()) != c.n()) throw ShapeError("size mismatch");
    AntisymmetricMatrix<TPoly> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (c.color(static_cast<int>(i) + 1) == c.color(static_cast<int>(j) + 1)) continue;
            m.set(i, j, TPoly::t() - TPoly(R.m(i, j) / 2));
        }
    TPoly pf = pfaffian(m);
    if (pf.degree() > 1)
        throw InvariantError("resistance pfaffian is not linear in t");
    return {pf.coeff(1), Normalization::PerTree};
}

}  // namespace groves
