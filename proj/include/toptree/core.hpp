#ifndef TOPTREE_CORE_HPP
#define TOPTREE_CORE_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace toptree {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;

// Weight-or-Absent. Absent stands in for +/-inf sentinels; arithmetic
// never touches an absent value.
using OptWeight = std::optional<Weight>;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

enum class Errc {
  unknown_vertex,
  unknown_edge,
  same_tree,
  not_same_tree,
  self_loop,
  same_vertex,
  isolated_vertex,
  non_positive_weight,
  out_of_range,
  empty_tree,
  empty_path,
  invalid_composite,
  busy_search,
  parse_error,
};

const char* errc_name(Errc c);

class ForestError : public std::runtime_error {
 public:
  ForestError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& what) {
  throw ForestError(code, what);
}

// Debug-checked signed addition. Overflow on aggregation is a caller
// contract; release builds wrap like plain int64 arithmetic.
inline Weight checked_add(Weight a, Weight b) {
#ifndef NDEBUG
  Weight out;
  if (__builtin_add_overflow(a, b, &out)) {
    raise(Errc::out_of_range, "weight overflow in aggregation");
  }
  return out;
#else
  return a + b;
#endif
}

inline Weight checked_mul(Weight a, Weight b) {
#ifndef NDEBUG
  Weight out;
  if (__builtin_mul_overflow(a, b, &out)) {
    raise(Errc::out_of_range, "weight overflow in aggregation");
  }
  return out;
#else
  return a * b;
#endif
}

}  // namespace toptree

#endif  // TOPTREE_CORE_HPP
