#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace cdtorus {

// Exact scalars. Every algebraic computation in the library runs on these;
// floating point appears only in the elliptic module.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& n) { return n.str(); }

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Seed used by every randomized-but-reproducible check unless the caller
// overrides it (CLI reads CDTORUS_SEED).
inline constexpr std::uint64_t kDefaultSeed = 1728;

}  // namespace cdtorus
