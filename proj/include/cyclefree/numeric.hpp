#ifndef CYCLEFREE_NUMERIC_HPP
#define CYCLEFREE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclefree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an operation would exceed its documented work budget.
// The CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed input files. The CLI maps this to exit code 2.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// n*(n-1)*...*(n-k+1)
BigInt falling_factorial(unsigned n, unsigned k);

// Binomials used for subset ranking fit in 64 bits for n <= 64
// (C(64,32) < 2^61); throws std::overflow_error beyond that.
std::uint64_t binomial_u64(unsigned n, unsigned k);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& r);

} // namespace cyclefree

#endif
