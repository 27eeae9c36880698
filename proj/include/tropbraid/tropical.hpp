#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <utility>

#include "tropbraid/errors.hpp"

namespace tropbraid {

// Exact rational arithmetic keeps equality of labels decidable: invariant
// comparison is literal equality, never tolerance-based.
using Rational = boost::multiprecision::cpp_rational;

// Element of the max-plus semifield over the rationals:
// addition is max, multiplication is rational +. All values are finite,
// so tropical division (ordinary subtraction) is total.
struct TropicalValue {
    Rational value;

    TropicalValue() : value(0) {}
    TropicalValue(long long v) : value(v) {}
    explicit TropicalValue(Rational v) : value(std::move(v)) {}

    bool operator==(const TropicalValue& o) const { return value == o.value; }
    bool operator!=(const TropicalValue& o) const { return value != o.value; }
    bool operator<(const TropicalValue& o) const { return value < o.value; }
    bool operator<=(const TropicalValue& o) const { return value <= o.value; }
    bool operator>(const TropicalValue& o) const { return value > o.value; }
    bool operator>=(const TropicalValue& o) const { return value >= o.value; }
};

// x (+) y = max(x, y)
inline TropicalValue trop_add(const TropicalValue& x, const TropicalValue& y) {
    return x.value >= y.value ? x : y;
}

// x (*) y = x + y
inline TropicalValue trop_mul(const TropicalValue& x, const TropicalValue& y) {
    return TropicalValue(x.value + y.value);
}

/*
 * Labels of a quadrilateral sitting around a flippable diagonal:
 *
 *      P2 ----- b ----- P3
 *      /              . /
 *     a          x     c      boundary a,b,c,d in cyclic order,
 *    / .               /      diagonal x = P1P3,
 *   P1 ----- d ----- P4       opposite pairs (a,c) and (b,d)
 */
struct QuadLabels {
    TropicalValue a, b, c, d; // cyclic boundary labels
    TropicalValue x;          // diagonal label
};

// Label of the replacement diagonal: x' = max(a + c, b + d) - x.
// The boundary labels are untouched by a flip, which makes the update an
// involution: applying it again with x' recovers x.
inline TropicalValue flip_label(const QuadLabels& q) {
    Rational ac = q.a.value + q.c.value;
    Rational bd = q.b.value + q.d.value;
    return TropicalValue(std::max(ac, bd) - q.x.value);
}

// Parses "p", "-p" or "p/q" (q > 0 after normalization).
inline Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw FileFormatError("empty string is not a rational number");
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw FileFormatError("not a rational number: \"" + text + "\"");
    }
}

inline std::string format_rational(const Rational& r) { return r.str(); }

} // namespace tropbraid
