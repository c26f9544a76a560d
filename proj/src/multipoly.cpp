#include "groves/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "groves/errors.hpp"

namespace groves {

MultiPoly::Var MultiPoly::var_pair(int i, int j) {
    if (i == j || i < 1 || j < 1 || i > 0xffff || j > 0xffff)
        throw ShapeError("variable index pair out of range");
    if (i > j) std::swap(i, j);
    return (static_cast<Var>(i) << 16) | static_cast<Var>(j);
}

std::pair<int, int> MultiPoly::var_indices(Var v) {
    return {static_cast<int>(v >> 16), static_cast<int>(v & 0xffff)};
}

MultiPoly MultiPoly::variable(int i, int j) {
    MultiPoly p;
    p.terms_[{var_pair(i, j)}] = 1;
    return p;
}

void MultiPoly::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r(*this);
    r += o;
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r(*this);
    r -= o;
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    Monomial prod;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            prod.clear();
            prod.resize(m1.size() + m2.size());
            std::merge(m1.begin(), m1.end(), m2.begin(), m2.end(), prod.begin());
            r.add_term(prod, c1 * c2);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

std::string MultiPoly::to_string(const std::string& symbol) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coef] : terms_) {
        Integer a = coef;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool need_star = false;
        if (a != 1 || mono.empty()) {
            out << a.get_str();
            need_star = true;
        }
        std::size_t k = 0;
        while (k < mono.size()) {
            std::size_t run = 1;
            while (k + run < mono.size() && mono[k + run] == mono[k]) ++run;
            if (need_star) out << "*";
            auto [i, j] = var_indices(mono[k]);
            out << symbol << "[" << i << "," << j << "]";
            if (run > 1) out << "^" << run;
            need_star = true;
            k += run;
        }
    }
    return out.str();
}

}  // namespace groves
