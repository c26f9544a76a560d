#pragma once

#include <cstdint>
#include <vector>

#include "groves/matrix.hpp"
#include "groves/rational.hpp"

namespace groves {

// Scalars with exact division (the rationals) get elimination-based kernels;
// everything else (polynomial rings) goes through division-free expansions.
template <class T>
struct is_field : std::false_type {};
template <>
struct is_field<Rational> : std::true_type {};

namespace detail {

// Fraction-free Bareiss elimination; divisions are exact at every step.
inline Rational det_bareiss(Matrix<Rational> m) {
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    Rational prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return Rational(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

// Laplace expansion over column subsets with memoization: O(n * 2^n) ring
// operations, fine for the symbolic matrices at desk scale.
template <class T>
T det_expansion(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n > 20) throw ShapeError("expansion determinant limited to n <= 20");
    const std::uint32_t full = (n == 32 ? 0xffffffffu : ((1u << n) - 1));
    std::vector<T> memo(full + 1, T(0));
    std::vector<char> done(full + 1, 0);
    memo[0] = T(1);
    done[0] = 1;
    // D(S) = det of the submatrix on rows n-|S|..n-1 and column set S.
    auto rec = [&](auto&& self, std::uint32_t s) -> const T& {
        if (done[s]) return memo[s];
        const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(s));
        T acc(0);
        int sgn = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(s & (1u << j))) continue;
            if (!(m(row, j) == T(0)))
                acc += (sgn > 0 ? m(row, j) : -m(row, j)) * self(self, s & ~(1u << j));
            sgn = -sgn;  // sign tracks the column's rank within s
        }
        memo[s] = acc;
        done[s] = 1;
        return memo[s];
    };
    return rec(rec, full);
}

// Skew-symmetric elimination: clears the first row beyond the pivot with
// congruence updates (which leave the pfaffian unchanged), multiplies the
// pivot, and recurses on the trailing block.
inline Rational pfaffian_elimination(Matrix<Rational> m) {
    const std::size_t n = m.rows();
    Rational result(1);
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t p = k + 1;
        while (p < n && m(k, p) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k + 1, j), m(p, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k + 1), m(i, p));
            result = -result;
        }
        const Rational pivot = m(k, k + 1);
        result *= pivot;
        for (std::size_t i = k + 2; i < n; ++i) {
            if (m(k, i) == 0) continue;
            const Rational f = m(k, i) / pivot;
            for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(k + 1, j);
            for (std::size_t j = 0; j < n; ++j) m(j, i) -= f * m(j, k + 1);
        }
    }
    return result;
}

// Expansion along the first remaining index with memoization on the index
// subset; division-free, so valid over any commutative ring.
template <class T>
T pfaffian_expansion(const Matrix<T>& m) {
    const std::size_t n = m.rows();
    if (n == 0) return T(1);
    if (n > 20) throw ShapeError("expansion pfaffian limited to n <= 20");
    const std::uint32_t full = (1u << n) - 1;
    std::vector<T> memo(full + 1, T(0));
    std::vector<char> done(full + 1, 0);
    memo[0] = T(1);
    done[0] = 1;
    auto rec = [&](auto&& self, std::uint32_t s) -> const T& {
        if (done[s]) return memo[s];
        const std::size_t first = static_cast<std::size_t>(__builtin_ctz(s));
        const std::uint32_t rest = s & ~(1u << first);
        T acc(0);
        int sgn = 1;
        for (std::size_t j = first + 1; j < n; ++j) {
            if (!(rest & (1u << j))) continue;
            if (!(m(first, j) == T(0)))
                acc += (sgn > 0 ? m(first, j) : -m(first, j)) * self(self, rest & ~(1u << j));
            sgn = -sgn;
        }
        memo[s] = acc;
        done[s] = 1;
        return memo[s];
    };
    return rec(rec, full);
}

}  // namespace detail

// Exact determinant.  det of the 0x0 matrix is 1.
template <class T>
T det(const Matrix<T>& m) {
    if (!m.square()) throw ShapeError("determinant of non-square matrix");
    if constexpr (is_field<T>::value) {
        return detail::det_bareiss(m);
    } else {
        return detail::det_expansion(m);
    }
}

// Exact inverse via Gauss-Jordan; SingularError when det = 0.
inline Matrix<Rational> inverse(const Matrix<Rational>& m) {
    if (!m.square()) throw ShapeError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<Rational> a(m), inv = Matrix<Rational>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) throw SingularError("matrix is singular");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        }
        const Rational piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const Rational f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

// m[keep][keep] - m[keep][drop] * m[drop][drop]^-1 * m[drop][keep].
// `keep` holds 0-based row/column indices (m square, symmetric not assumed).
inline Matrix<Rational> schur_complement(const Matrix<Rational>& m,
                                         const std::vector<std::size_t>& keep) {
    if (!m.square()) throw ShapeError("schur complement of non-square matrix");
    std::vector<char> kept(m.rows(), 0);
    for (auto i : keep) {
        if (i >= m.rows()) throw ShapeError("keep index out of range");
        kept[i] = 1;
    }
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!kept[i]) drop.push_back(i);
    if (drop.empty()) return m.submatrix(keep, keep);
    Matrix<Rational> a = m.submatrix(keep, keep);
    Matrix<Rational> b = m.submatrix(keep, drop);
    Matrix<Rational> c = m.submatrix(drop, keep);
    Matrix<Rational> d = m.submatrix(drop, drop);
    Matrix<Rational> dinv;
    try {
        dinv = inverse(d);
    } catch (const SingularError&) {
        throw SingularError("singular interior block in schur complement");
    }
    return a - b * dinv * c;
}

// Solves L x = b for singular L with one-dimensional all-ones kernel by
// grounding the last variable; throws SingularError when b is not in the
// image (disconnected network).
inline std::vector<Rational> solve_kernel_aware(const Matrix<Rational>& L,
                                                const std::vector<Rational>& b) {
    if (!L.square() || L.rows() != b.size()) throw ShapeError("solve shape mismatch");
    const std::size_t n = L.rows();
    if (n == 0) return {};
    // Augmented elimination on the first n-1 equations with x_{n-1} = 0.
    Matrix<Rational> a(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = 0; j + 1 < n; ++j) a(i, j) = L(i, j);
        a(i, n - 1) = b[i];
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p + 1 < n && a(p, k) == 0) ++p;
        if (p + 1 == n) throw SingularError("kernel-aware solve: reduced system singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
        const Rational piv = a(k, k);
        for (std::size_t i = k + 1; i + 1 < n; ++i) {
            if (a(i, k) == 0) continue;
            const Rational f = a(i, k) / piv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = n - 1; i-- > 0;) {
        Rational s = a(i, n - 1);
        for (std::size_t j = i + 1; j + 1 < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    // Consistency of the grounded row certifies b lies in the image.
    Rational last(0);
    for (std::size_t j = 0; j < n; ++j) last += L(n - 1, j) * x[j];
    if (last != b[n - 1]) throw SingularError("right-hand side not in image of L");
    return x;
}

// Pfaffian of an even antisymmetric matrix; Pf(m)^2 = det(m).
template <class T>
T pfaffian(const AntisymmetricMatrix<T>& m) {
    if (m.size() % 2 != 0) throw ShapeError("pfaffian requires even size");
    if constexpr (is_field<T>::value) {
        return detail::pfaffian_elimination(m.matrix());
    } else {
        return detail::pfaffian_expansion(m.matrix());
    }
}

// Pfaffianoid of an odd antisymmetric matrix, via the triple expansion
//   Pfd M = sum_{a<b<c} (-1)^{a+b+c} (M_ab M_bc + M_bc M_ac + M_ac M_ab)
//           * Pf(M with rows/columns a,b,c removed)
// with 1-based a,b,c.
template <class T>
T pfaffianoid(const AntisymmetricMatrix<T>& m) {
    const std::size_t n = m.size();
    if (n % 2 != 1 || n < 3) throw ShapeError("pfaffianoid requires odd size >= 3");
    T acc(0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                T triple = m(a, b) * m(b, c) + m(b, c) * m(a, c) + m(a, c) * m(a, b);
                if (triple == T(0)) continue;
                T pf = pfaffian(m.minor_without({a, b, c}));
                if (pf == T(0)) continue;
                // (-1)^{(a+1)+(b+1)+(c+1)} for 0-based a,b,c.
                if ((a + b + c) % 2 == 1) {
                    acc += triple * pf;
                } else {
                    acc -= triple * pf;
                }
            }
    return acc;
}

}  // namespace groves
