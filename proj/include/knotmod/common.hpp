#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace knotmod {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Rejected input: malformed PD text, variable mismatch, bad modulus,
/// state space over the cap, and similar contract violations.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation contradicted a congruence the library asserts as a theorem
/// (for example a constructed power failing its modular check). Seeing this
/// exception means the input falsified a proposition, not that the input was
/// malformed.
class InternalCheckError : public std::logic_error {
 public:
  explicit InternalCheckError(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace knotmod
