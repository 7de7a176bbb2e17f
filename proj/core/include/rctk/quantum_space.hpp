#pragma once

#include <map>
#include <utility>

namespace rctk {

/// Matrix L of tensor-factor multiplicities: L[(a,i)] counts factors of
/// node a and width i. |L| = sum a*i*L_i^{(a)}.
struct QuantumSpace {
  std::map<std::pair<int, int>, long long> counts;

  long long at(int a, int i) const {
    auto it = counts.find({a, i});
    return it == counts.end() ? 0 : it->second;
  }
  void add(int a, int i, long long c) {
    if (c != 0) counts[{a, i}] += c;
    if (counts.count({a, i}) && counts[{a, i}] == 0) counts.erase({a, i});
  }

  long long size() const {
    long long s = 0;
    for (auto& [k, c] : counts) s += static_cast<long long>(k.first) * k.second * c;
    return s;
  }

  int max_node() const {
    int m = 0;
    for (auto& [k, c] : counts)
      if (c > 0 && k.first > m) m = k.first;
    return m;
  }

  bool operator==(const QuantumSpace&) const = default;
};

}  // namespace rctk
