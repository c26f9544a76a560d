#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "groves/rational.hpp"

namespace groves {

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients.  Variables are indexed by unordered node pairs {i,j}, i<j,
// as in the entries of a symmetric response matrix; a monomial is a multiset
// of variables kept sorted.  Zero coefficients are never stored, so equality
// is map equality and the map's lexicographic key order is the canonical
// term order used for display.
class MultiPoly {
public:
    using Var = std::uint32_t;
    using Monomial = std::vector<Var>;
    using Terms = std::map<Monomial, Integer>;

    MultiPoly() = default;
    MultiPoly(long c) {
        if (c != 0) terms_[{}] = c;
    }
    explicit MultiPoly(const Integer& c) {
        if (c != 0) terms_[{}] = c;
    }

    static Var var_pair(int i, int j);
    static std::pair<int, int> var_indices(Var v);

    // The polynomial consisting of the single variable {i,j}.
    static MultiPoly variable(int i, int j);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator*=(const MultiPoly& o);

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return terms_ != o.terms_; }

    void add_term(const Monomial& m, const Integer& c);

    // Substitutes each variable by a value from `f : (i,j) -> T`; T must be a
    // commutative ring element type constructible from Integer.
    template <class T, class F>
    T evaluate(F&& f) const {
        T acc(0);
        for (const auto& [mono, coef] : terms_) {
            T term{T(coef)};
            for (Var v : mono) {
                auto [i, j] = var_indices(v);
                term = term * f(i, j);
            }
            acc = acc + term;
        }
        return acc;
    }

    // Canonical display, e.g. "L[1,3]*L[2,5] - 2*L[1,4]".  Terms in map key
    // order; golden files depend on this exact format.
    std::string to_string(const std::string& symbol = "L") const;

private:
    Terms terms_;
};

}  // namespace groves
