#pragma once

// Shared test-only helpers: independent reference implementations used as
// oracles against the production kernels, plus small random generators.

#include <random>
#include <vector>

#include "groves/linalg.hpp"
#include "groves/matrix.hpp"
#include "groves/partition.hpp"
#include "groves/rational.hpp"

namespace groves::testing {

inline Rational random_positive_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 9) {
    std::uniform_int_distribution<int> num(1, max_num), den(1, max_den);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Rational random_rational(std::mt19937_64& rng, int span = 9) {
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

template <class T>
AntisymmetricMatrix<T> random_antisymmetric(std::size_t n, std::mt19937_64& rng) {
    AntisymmetricMatrix<T> m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, random_rational(rng));
    return m;
}

// Direct sum over near-pairings (one ordered tripleton x<z with middle y,
// rest doubletons), each weighted by the sign of its canonical permutation.
// Reference implementation of the pfaffianoid, independent of the
// triple-expansion production path.
template <class T>
T pfaffianoid_direct(const AntisymmetricMatrix<T>& m) {
    const int n = static_cast<int>(m.size());
    T acc(0);
    std::vector<int> perm;  // pi_1..pi_{2k} pairs then x,y,z
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto permutation_sign = [](const std::vector<int>& p) {
        int inv = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inv;
        return inv % 2 == 0 ? 1 : -1;
    };

    std::vector<int> triple;
    auto rec = [&](auto&& self, int pairs_left) -> void {
        if (pairs_left == 0) {
            std::vector<int> full = perm;
            full.insert(full.end(), triple.begin(), triple.end());
            T w = m(static_cast<std::size_t>(triple[0]), static_cast<std::size_t>(triple[1])) *
                  m(static_cast<std::size_t>(triple[1]), static_cast<std::size_t>(triple[2]));
            for (std::size_t k = 0; k + 1 < perm.size(); k += 2)
                w = w * m(static_cast<std::size_t>(perm[k]), static_cast<std::size_t>(perm[k + 1]));
            if (permutation_sign(full) > 0) {
                acc += w;
            } else {
                acc -= w;
            }
            return;
        }
        // First free element opens the next doubleton (pi_1 < pi_3 < ...).
        int first = 0;
        while (used[static_cast<std::size_t>(first)]) ++first;
        used[static_cast<std::size_t>(first)] = 1;
        perm.push_back(first);
        for (int j = first + 1; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(j)] = 1;
            perm.push_back(j);
            self(self, pairs_left - 1);
            perm.pop_back();
            used[static_cast<std::size_t>(j)] = 0;
        }
        perm.pop_back();
        used[static_cast<std::size_t>(first)] = 0;
    };

    // Choose the tripleton (x,y,z) with x < z first, then pair the rest.
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r) {
                const std::vector<std::vector<int>> orders = {{p, q, r}, {p, r, q}, {q, p, r}};
                for (const auto& t : orders) {
                    triple = t;
                    used[static_cast<std::size_t>(p)] = used[static_cast<std::size_t>(q)] =
                        used[static_cast<std::size_t>(r)] = 1;
                    rec(rec, (n - 3) / 2);
                    used[static_cast<std::size_t>(p)] = used[static_cast<std::size_t>(q)] =
                        used[static_cast<std::size_t>(r)] = 0;
                }
            }
    return acc;
}

}  // namespace groves::testing
