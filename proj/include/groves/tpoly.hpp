#pragma once

#include <vector>

#include "groves/rational.hpp"

namespace groves {

// Dense univariate polynomial in t over the rationals.  Used for the
// resistance-form determinants/Pfaffians whose entries are t - R/2.
class TPoly {
public:
    TPoly() = default;
    TPoly(long c) {
        if (c != 0) coeffs_.push_back(Rational(c));
    }
    explicit TPoly(const Integer& c) {
        if (c != 0) coeffs_.push_back(Rational(c));
    }
    explicit TPoly(const Rational& c) {
        if (c != 0) coeffs_.push_back(c);
    }

    static TPoly t() {
        TPoly p;
        p.coeffs_ = {Rational(0), Rational(1)};
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rational(0);
    }

    TPoly operator-() const {
        TPoly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    TPoly operator+(const TPoly& o) const {
        TPoly r(*this);
        if (o.coeffs_.size() > r.coeffs_.size()) r.coeffs_.resize(o.coeffs_.size());
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) r.coeffs_[k] += o.coeffs_[k];
        r.trim();
        return r;
    }
    TPoly operator-(const TPoly& o) const { return *this + (-o); }
    TPoly operator*(const TPoly& o) const {
        if (is_zero() || o.is_zero()) return TPoly();
        TPoly r;
        r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (std::size_t a = 0; a < coeffs_.size(); ++a)
            for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
                r.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
        r.trim();
        return r;
    }
    TPoly& operator+=(const TPoly& o) { return *this = *this + o; }
    TPoly& operator-=(const TPoly& o) { return *this = *this - o; }
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    bool operator==(const TPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const TPoly& o) const { return coeffs_ != o.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;  // coeffs_[k] multiplies t^k; trailing zeros trimmed
};

}  // namespace groves
