#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "groves/multipoly.hpp"
#include "groves/partition.hpp"
#include "groves/partition_algebra.hpp"

using namespace groves;

namespace {

// Compatibility of a partition p on primal nodes with a partition q on dual
// nodes: interleave them on a 2n circle (i -> 2i-1, i' -> 2i) and require the
// union to be noncrossing.
bool compatible_with_dual(const Partition& p, const Partition& q) {
    const int n = p.n();
    std::vector<std::vector<int>> parts;
    for (const auto& part : p.parts()) {
        std::vector<int> lifted;
        for (int e : part) lifted.push_back(2 * e - 1);
        parts.push_back(lifted);
    }
    for (const auto& part : q.parts()) {
        std::vector<int> lifted;
        for (int e : part) lifted.push_back(2 * e);
        parts.push_back(lifted);
    }
    return Partition(2 * n, parts).is_planar();
}

}  // namespace

TEST_SUITE_BEGIN("partition algebra");

TEST_CASE("canonical form, parsing, printing") {
    Partition p = Partition::parse("278|345|1|6");
    CHECK(p.to_string() == "1|278|345|6");
    CHECK(p.n() == 8);
    CHECK(p.part_count() == 4);

    Partition cs = Partition::parse("1,17|2,16|3,9,15|4,8|5,7|10,14|11,13|6|12|18");
    CHECK(cs.n() == 18);
    CHECK(cs.to_string() == "1,17|2,16|3,9,15|4,8|5,7|6|10,14|11,13|12|18");

    Partition singles = Partition::parse("1|2|3|4|5|6|7|8|9|10");
    CHECK(singles.part_count() == 10);
    CHECK(singles.to_string() == "1|2|3|4|5|6|7|8|9|10");

    CHECK_THROWS_AS(Partition::parse("12|4"), ParseError);
    CHECK_THROWS_AS(Partition::parse("12||34"), ParseError);
    CHECK_THROWS_AS(Partition::parse("11|2"), ParseError);
}

TEST_CASE("planarity") {
    CHECK_FALSE(Partition::parse("13|24").is_planar());
    CHECK(Partition::parse("12|34").is_planar());
    CHECK(Partition::parse("1|278|345|6").is_planar());
    // 13|24 is the only non-planar partition on 4 nodes
    int nonplanar = 0;
    for (const auto& p : all_partitions(4))
        if (!p.is_planar()) ++nonplanar;
    CHECK(nonplanar == 1);
    // Catalan numbers count the planar partitions
    CHECK(planar_partitions(4).size() == 14);
    CHECK(planar_partitions(5).size() == 42);
    CHECK(planar_partitions(6).size() == 132);
}

TEST_CASE("bilinear form") {
    CHECK(inner_product_t(Partition::parse("123|4"), Partition::parse("24|1|3")) == 1);
    CHECK(inner_product_t(Partition::parse("12|34"), Partition::parse("12|3|4")) == 0);
    for (int n : {2, 3, 4, 5})
        CHECK(inner_product_t(Partition::singletons(n), Partition::whole(n)) == 1);
    CHECK_THROWS_AS(inner_product_t(Partition::singletons(3), Partition::singletons(4)), ShapeError);
}

TEST_CASE("projection golden examples") {
    PartitionSum got = project(Partition::parse("13|24"));
    PartitionSum expected;
    for (const char* s : {"1|234", "2|134", "3|124", "4|123"})
        add_to(expected, Partition::parse(s), 1);
    add_to(expected, Partition::parse("12|34"), -1);
    add_to(expected, Partition::parse("14|23"), -1);
    CHECK(got == expected);

    PartitionSum got5 = project(Partition::parse("13|245"));
    PartitionSum expected5;
    for (const char* s : {"1|2345", "2|1345", "3|1245", "45|123"})
        add_to(expected5, Partition::parse(s), 1);
    add_to(expected5, Partition::parse("12|345"), -1);
    add_to(expected5, Partition::parse("145|23"), -1);
    CHECK(got5 == expected5);

    // planar fixed point
    PartitionSum fixed = project(Partition::parse("12|34"));
    CHECK(fixed.size() == 1);
    CHECK(fixed.at(Partition::parse("12|34")) == 1);
}

TEST_CASE("projection coefficients") {
    CHECK(projection_coefficient(Partition::parse("12|34"), Partition::parse("13|24")) == -1);
    CHECK(projection_coefficient(Partition::parse("1|234"), Partition::parse("13|24")) == 1);
    Partition planar = Partition::parse("12|3|4");
    CHECK(projection_coefficient(planar, planar) == 1);
    CHECK_THROWS_AS(projection_coefficient(Partition::parse("13|24"), Partition::parse("13|24")),
                    PreconditionError);
}

TEST_CASE("projection preserves the inner product against planar partitions") {
    for (int n : {3, 4, 5, 6}) {
        auto planars = planar_partitions(n);
        for (const auto& tau : all_partitions(n)) {
            if (tau.is_planar()) continue;
            PartitionSum proj = project(tau);
            for (const auto& [term, coef] : proj) {
                CHECK(term.is_planar());
                CHECK(term.part_count() == tau.part_count());
            }
            for (const auto& sigma : planars) {
                Integer lhs(0);
                for (const auto& [term, coef] : proj)
                    if (inner_product_t(term, sigma)) lhs += coef;
                CHECK(lhs == inner_product_t(tau, sigma));
            }
        }
    }
}

TEST_CASE("projection is idempotent on its own support") {
    for (const auto& tau : all_partitions(5)) {
        for (const auto& [term, coef] : project(tau)) {
            PartitionSum again = project(term);
            CHECK(again.size() == 1);
            CHECK(again.at(term) == 1);
        }
    }
}

TEST_CASE("projection is independent of rewrite order") {
    std::mt19937_64 seeds(4242);
    for (int n : {5, 6, 7}) {
        auto partitions = all_partitions(n);
        std::shuffle(partitions.begin(), partitions.end(), seeds);
        int checked = 0;
        for (const auto& tau : partitions) {
            if (tau.is_planar()) continue;
            PartitionSum reference = project(tau);
            for (int rep = 0; rep < 3; ++rep)
                CHECK(project_randomized(tau, seeds()) == reference);
            if (++checked >= 12) break;
        }
    }
}

TEST_CASE("projection terminates on every partition up to n = 8") {
    for (int n : {7, 8}) {
        for (const auto& tau : all_partitions(n)) {
            PartitionSum proj = project(tau);
            CHECK(!proj.empty());
        }
    }
}

TEST_CASE("drop-singletons lemma for pairings with singletons") {
    // sigma = 14|23|5 vs sigma' = 14|23 after deleting the singleton; the
    // projection coefficients agree for correspondingly renumbered columns.
    Partition sigma = Partition::parse("14|23|5");
    Partition tau = Partition::parse("13|24|5");
    Partition sigma_small = Partition::parse("14|23");
    Partition tau_small = Partition::parse("13|24");
    CHECK(projection_coefficient(sigma, tau) == projection_coefficient(sigma_small, tau_small));

    Partition sigma2 = Partition::parse("15|24|3");
    Partition tau2 = Partition::parse("14|25|3");
    CHECK(projection_coefficient(sigma2, tau2) ==
          projection_coefficient(Partition::parse("14|23"), Partition::parse("13|24")));
}

TEST_CASE("l_tau polynomials") {
    std::function<MultiPoly(int, int)> var = [](int i, int j) { return MultiPoly::variable(i, j); };
    MultiPoly l1 = l_tau_polynomial<MultiPoly>(Partition::parse("1|234"), var);
    MultiPoly expected = MultiPoly::variable(2, 3) * MultiPoly::variable(3, 4) +
                         MultiPoly::variable(2, 3) * MultiPoly::variable(2, 4) +
                         MultiPoly::variable(2, 4) * MultiPoly::variable(3, 4);
    CHECK(l1 == expected);
    CHECK(l_tau_polynomial<MultiPoly>(Partition::parse("13|24"), var) ==
          MultiPoly::variable(1, 3) * MultiPoly::variable(2, 4));
    CHECK(l_tau_polynomial<MultiPoly>(Partition::singletons(5), var) == MultiPoly(1));
}

TEST_CASE("tripartite partitions") {
    // n=6, sizes (2,2,2)
    ColorSpec c222 = ColorSpec::from_ranges(6, {1, 2}, {3, 4}, {5, 6});
    CHECK(tripartite_partition(c222) == Partition::parse("16|23|45"));

    // one empty class: parallel pairing i <-> 2k+1-i
    ColorSpec parallel = ColorSpec::from_ranges(8, {1, 4}, {5, 8}, {0, 0});
    CHECK(tripartite_partition(parallel) == Partition::parse("18|27|36|45"));

    // sizes (1,2,1)
    ColorSpec c121 = ColorSpec::from_ranges(4, {1, 1}, {2, 3}, {4, 4});
    CHECK(tripartite_partition(c121) == Partition::parse("12|34"));

    // triangle inequality violation
    ColorSpec bad = ColorSpec::from_ranges(6, {1, 4}, {5, 5}, {6, 6});
    CHECK_THROWS_AS(tripartite_partition(bad), PreconditionError);

    // wrapped red arc
    ColorSpec wrapped = ColorSpec::from_ranges(6, {6, 1}, {2, 4}, {5, 5});
    CHECK(tripartite_partition(wrapped) == Partition::parse("12|36|45"));
}

TEST_CASE("tripartite partition is minimal and unique (exhaustive, small n)") {
    for (int n : {4, 5, 6, 7, 8}) {
        auto planars = planar_partitions(n);
        // a couple of representative colorings per n
        std::vector<std::vector<int>> sizes_list;
        if (n % 2 == 0) {
            sizes_list.push_back({n / 2, n / 2, 0});
            sizes_list.push_back({n / 2 - 1, n / 2 - 1, 2});
        } else {
            sizes_list.push_back({(n - 1) / 2, (n - 1) / 2, 1});
            sizes_list.push_back({n - 4, 2, 2});
        }
        for (const auto& sizes : sizes_list) {
            if (sizes[0] <= 0 || sizes[0] > sizes[1] + sizes[2]) continue;
            std::vector<int> colors;
            for (int k = 0; k < 3; ++k)
                for (int i = 0; i < sizes[static_cast<std::size_t>(k)]; ++i) colors.push_back(k);
            ColorSpec spec(n, colors);
            Partition best = tripartite_partition(spec);
            CHECK(best.is_planar());
            // no monochromatic non-singleton part, minimal part count, unique
            std::size_t min_parts = static_cast<std::size_t>(n);
            std::vector<Partition> argmin;
            for (const auto& p : planars) {
                bool mono = false;
                for (const auto& part : p.parts()) {
                    if (part.size() < 2) continue;
                    int c0 = spec.color(part[0]);
                    bool all_same = std::all_of(part.begin(), part.end(),
                                                [&](int e) { return spec.color(e) == c0; });
                    if (all_same) mono = true;
                }
                if (mono) continue;
                if (p.part_count() < min_parts) {
                    min_parts = p.part_count();
                    argmin.clear();
                }
                if (p.part_count() == min_parts) argmin.push_back(p);
            }
            REQUIRE(argmin.size() == 1);
            CHECK(argmin[0] == best);
        }
    }
}

TEST_CASE("kreweras dual") {
    CHECK(kreweras_dual(Partition::singletons(5)) == Partition::whole(5));
    CHECK(kreweras_dual(Partition::whole(5)) == Partition::singletons(5));
    CHECK_THROWS_AS(kreweras_dual(Partition::parse("13|24")), PreconditionError);

    // maximal compatible planar partition, exhaustively for small n
    for (int n : {3, 4, 5, 6}) {
        auto planars = planar_partitions(n);
        for (const auto& p : planars) {
            Partition dual = kreweras_dual(p);
            CHECK(dual.is_planar());
            CHECK(p.part_count() + dual.part_count() == static_cast<std::size_t>(n) + 1);
            CHECK(inner_product_t(p, dual) == 1);
            CHECK(compatible_with_dual(p, dual));
            // maximality: every compatible q with more parts than... none may
            // beat the complement's part count, and the complement is the
            // unique compatible partition with that many parts
            for (const auto& q : planars) {
                if (!compatible_with_dual(p, q)) continue;
                CHECK(q.part_count() <= dual.part_count());
                if (q.part_count() == dual.part_count()) CHECK(q == dual);
            }
        }
    }
}

TEST_CASE("grove probability via the generic path: degenerate cases") {
    // single edge network response matrix, n = 2
    Matrix<Rational> L{{Rational(-2), Rational(2)}, {Rational(2), Rational(-2)}};
    CHECK(grove_prob_generic(Partition::parse("12"), L) == Rational(2));
    CHECK(grove_prob_generic(Partition::parse("1|2"), L) == Rational(1));
    CHECK_THROWS_AS(grove_prob_generic(Partition::singletons(9), Matrix<Rational>(9, 9)),
                    PreconditionError);
}

TEST_SUITE_END();
