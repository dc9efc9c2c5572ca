#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hkm {

using BigInt = boost::multiprecision::cpp_int;

// Always normalized: lowest terms, positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline BigInt numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denom(const Rat& r) { return boost::multiprecision::denominator(r); }

// Floor division and non-negative remainder for b > 0.
BigInt floorDiv(const BigInt& a, const BigInt& b);
BigInt ceilDiv(const BigInt& a, const BigInt& b);
BigInt floorMod(const BigInt& a, const BigInt& b);

BigInt ipow(const BigInt& base, unsigned exp);

// Canonical "p/q" (or "p" when q == 1).
std::string toString(const Rat& r);
std::string toString(const BigInt& n);

// Accepts "p", "-p", "p/q" with arbitrary-size integers. Throws hkm::Error(BadInput).
Rat parseRat(std::string_view text);
BigInt parseBigInt(std::string_view text);

// Decimal rendering with `digits` significant digits; display only.
std::string toDecimal(const Rat& r, int digits = 12);

} // namespace hkm
