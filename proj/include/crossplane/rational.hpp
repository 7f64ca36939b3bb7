#ifndef CROSSPLANE_RATIONAL_HPP
#define CROSSPLANE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace crossplane {

// Exact arithmetic backbone. big_rat is always reduced with positive
// denominator; rounding happens only through the explicit floor/ceil
// helpers below.
using big_int = boost::multiprecision::cpp_int;
using big_rat = boost::multiprecision::cpp_rational;

// Floor/ceil division for b > 0.
inline big_int floor_div(const big_int& a, const big_int& b) {
    big_int q = a / b, r = a % b;
    if (r != 0 && a < 0) --q;
    return q;
}

inline big_int ceil_div(const big_int& a, const big_int& b) {
    big_int q = a / b, r = a % b;
    if (r != 0 && a > 0) ++q;
    return q;
}

inline big_int floor_rat(const big_rat& x) {
    return floor_div(numerator(x), denominator(x));
}

inline big_int ceil_rat(const big_rat& x) {
    return ceil_div(numerator(x), denominator(x));
}

inline bool is_integer(const big_rat& x) { return denominator(x) == 1; }

// "num/den" for proper fractions, plain "num" for integers.
std::string rat_to_string(const big_rat& x);

// Accepts "num", "num/den" with optional sign; throws crossplane::error on
// malformed input or zero denominator.
big_rat rat_from_string(std::string_view s);

// Rounds up at two decimals and trims trailing zeros: 290/72 -> "4.03",
// 216/72 -> "3", 108/8 -> "13.5".
std::string format_factor(const big_rat& x);

} // namespace crossplane

#endif
