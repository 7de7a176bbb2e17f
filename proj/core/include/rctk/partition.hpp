#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rctk/common.hpp"

namespace rctk {

enum class Kind;

/// Integer partition: weakly decreasing positive parts, empty allowed.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;    // number of boxes
  int length() const { return static_cast<int>(parts.size()); }
  int part(int i) const;  // 1-based; 0 beyond the last part
  bool empty() const { return parts.empty(); }

  /// true iff inner fits inside this diagram row by row
  bool contains(const Partition& inner) const;

  auto operator<=>(const Partition&) const = default;
  std::string to_string() const;
};

Partition conjugate(const Partition& p);

/// Halve every column height; requires all column heights even.
Partition halve_columns(const Partition& p);

/// Can the diagram of p be tiled by the given symbol?
/// Empty: only the empty diagram. SingleBox: always. HDomino: all rows even.
/// VDomino: all column heights even.
bool is_tileable(const Partition& p, Kind kind);

/// All partitions of N, reverse-lexicographic (largest part first).
std::vector<Partition> all_partitions(int N);

/// { p of N : is_tileable(p, kind) }, same order as all_partitions.
std::vector<Partition> partitions_of(int N, Kind kind);

}  // namespace rctk
