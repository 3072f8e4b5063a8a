#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace coarsek {

using Integer = std::int64_t;

/// Vertex of a graph; integer positions on the line double as ids.
struct VertexId {
  Integer value = 0;
  auto operator<=>(const VertexId&) const = default;
};

/// Edge of a graph. For finite graphs this is the position in the edge list,
/// for the integer line it is the cell index c of the edge [c, c+1].
struct EdgeId {
  Integer value = 0;
  auto operator<=>(const EdgeId&) const = default;
};

/// Malformed input: unparsable files, unknown ids, inconsistent fields.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operators over different ambient bases were combined.
class BasisMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact integer arithmetic left the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace coarsek

template <>
struct std::hash<coarsek::VertexId> {
  std::size_t operator()(const coarsek::VertexId& v) const noexcept {
    return std::hash<coarsek::Integer>{}(v.value);
  }
};

template <>
struct std::hash<coarsek::EdgeId> {
  std::size_t operator()(const coarsek::EdgeId& e) const noexcept {
    return std::hash<coarsek::Integer>{}(e.value);
  }
};
