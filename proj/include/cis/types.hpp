#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace cis {

/// Hard order cap: a vertex subset fits in one 64-bit word.
inline constexpr int kMaxOrder = 64;

/// Exact counter. Subgraph counts reach 2^64 - 1 at the order cap, so all
/// counts are arbitrary precision from the start.
using BigCount = boost::multiprecision::cpp_int;

/// Malformed textual input (graph6 strings, edge lists, catalog files).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cis
