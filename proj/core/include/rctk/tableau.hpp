#pragma once

#include <span>
#include <vector>

#include "rctk/common.hpp"
#include "rctk/partition.hpp"

namespace rctk {

/// Skew tableau of shape outer/inner with row-wise fillings.
/// rows[r] holds the letters in columns inner_r+1 .. outer_r of row r+1.
struct SkewTableau {
  Partition inner;
  Partition outer;
  std::vector<std::vector<int>> rows;

  SkewTableau() = default;
  SkewTableau(Partition inner_, Partition outer_, std::vector<std::vector<int>> rows_);

  bool empty_filling() const;
  int cell_count() const;  // |outer| - |inner|
  bool operator==(const SkewTableau&) const = default;
};

/// Rows top to bottom, each read right to left (fixed by the convention that
/// reproduces the word 1123142234 on the standard example).
std::vector<int> reverse_row_word(const SkewTableau& t);

/// Every prefix contains at least as many i's as (i+1)'s, for all i.
bool is_yamanouchi(std::span<const int> word);

bool is_semistandard(const SkewTableau& t);

/// Littlewood-Richardson: semistandard with Yamanouchi reverse row word.
bool is_lr(const SkewTableau& t);

/// Letter multiplicities, trailing zeros stripped. A partition iff t is LR.
std::vector<int> weight_composition(const SkewTableau& t);

/// weight_composition as a Partition; throws invalid_input if not weakly decreasing.
Partition weight_of(const SkewTableau& t);

/// All LR tableaux of shape eta/lambda and weight mu, ordered
/// lexicographically by the row-major filling.
std::vector<SkewTableau> enumerate_lr(const Partition& eta, const Partition& lambda,
                                      const Partition& mu, Budget* budget = nullptr);

/// c_{lambda,mu}^eta
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& eta);

}  // namespace rctk
