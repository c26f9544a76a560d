#pragma once

#include <gmpxx.h>

#include <string>

#include "groves/errors.hpp"

namespace groves {

// Exact arbitrary-precision rational, always in lowest terms with positive
// denominator (mpq_class canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q" with q > 0 after canonicalization.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::size_t pos = 0;
    if (s[pos] == '-' || s[pos] == '+') ++pos;
    bool digits = false, slash = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c >= '0' && c <= '9') {
            digits = true;
        } else if (c == '/' && digits && !slash) {
            slash = true;
            digits = false;
        } else {
            throw ParseError("bad rational literal: " + s);
        }
    }
    if (!digits) throw ParseError("bad rational literal: " + s);
    Rational q(s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

// "p/q" in lowest terms, "/1" omitted.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace groves
