// Copyright 2026 The nonloc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NONLOC_RATIONAL_HPP
#define NONLOC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nonloc {

/// Exact rational scalar used throughout the rational pathway.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Serializes as "p/q", or just "p" when the denominator is 1.
inline std::string to_fraction_string(const Rational &q) {
    return q.get_str();
}

inline Rational rational_from_string(std::string_view s) {
    Rational q;
    if (s.empty() || mpq_set_str(q.get_mpq_t(), std::string(s).c_str(), 10) != 0) {
        throw std::invalid_argument("malformed rational literal: '" + std::string(s) + "'");
    }
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0) {
        throw std::invalid_argument("rational with zero denominator: '" + std::string(s) + "'");
    }
    q.canonicalize();
    return q;
}

inline double to_double(const Rational &q) {
    return q.get_d();
}

/// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double v) {
    return Rational(v);
}

struct RationalHash {
    size_t operator()(const Rational &q) const {
        return std::hash<std::string>{}(q.get_str());
    }
};

/// Numeric-mode traits shared by the rational and floating pathways.
template <typename T>
struct NumTraits;

template <>
struct NumTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char *mode_name = "rational";
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational &v, const Rational & /*eps*/) { return sgn(v) == 0; }
    static bool is_nonneg(const Rational &v, const Rational & /*eps*/) { return sgn(v) >= 0; }
    static double residual(const Rational &v) { return to_double(abs(v)); }
};

template <>
struct NumTraits<double> {
    static constexpr bool exact = false;
    static constexpr const char *mode_name = "float";
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool is_zero(double v, double eps) { return v <= eps && v >= -eps; }
    static bool is_nonneg(double v, double eps) { return v >= -eps; }
    static double residual(double v) { return v < 0 ? -v : v; }
};

}  // namespace nonloc

#endif
