#pragma once

#include <cstddef>
#include <cstdint>

namespace saxl {

/// Resource caps. Every cap is a hard limit: exceeding it raises
/// UnsupportedError.
struct Limits {
  /// Largest permitted action degree |Omega|.
  std::size_t point_cap = 100'000;
  /// Largest group order for which full element enumeration is allowed.
  std::uint64_t group_cap = 10'000'000;
  /// Largest conjugacy class that is materialised as an element set.
  std::uint64_t class_cap = 2'000'000;
  /// Largest degree for which the full Saxl graph adjacency is built.
  std::size_t graph_cap = 20'000;
  /// Largest degree for exact clique / independence number search.
  std::size_t exact_cap = 2'000;
  /// Budget (in 32-bit entries) for explicit transversal storage.
  std::uint64_t transversal_budget = std::uint64_t{1} << 27;
  /// Worker threads for data-parallel loops; 0 means hardware concurrency.
  unsigned threads = 1;
};

/// Process-wide defaults used when callers do not pass explicit limits.
const Limits& default_limits();
void set_default_limits(const Limits& limits);

}  // namespace saxl
