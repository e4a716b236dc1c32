#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace epicat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a computation would exceed the configured size cap.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rat& q) { return rat_den(q) == 1; }

// floor(q) as an exact integer.
inline Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

// "p/q" reduced, denominator omitted when 1. Parsing accepts both forms.
std::string rat_str(const Rat& q);
Rat rat_parse(const std::string& s);

Int binomial(long n, long k);

// Sign of a permutation given by its value list (distinct entries).
int signature(const std::vector<int>& p);

// floor division for machine integers (values stay tiny throughout).
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace epicat
