#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rctk/common.hpp"
#include "rctk/partition.hpp"
#include "rctk/quantum_space.hpp"

namespace rctk {

/// The seven nonexceptional affine families:
/// A1 = A_n^(1), B1 = B_n^(1), C1 = C_n^(1), D1 = D_n^(1),
/// A2Even = A_{2n}^(2), A2Odd = A_{2n-1}^(2), D2 = D_{n+1}^(2).
enum class Family { A1, B1, C1, D1, A2Even, A2Odd, D2 };

/// Attachment symbol of the affine node 0.
enum class Kind { Empty, SingleBox, HDomino, VDomino };

struct AffineType {
  Family family;
  int rank;

  AffineType(Family f, int n);  // throws invalid_input if n below the family minimum

  bool operator==(const AffineType&) const = default;
  std::string to_string() const;    // serialized name, e.g. "D1"
  std::string display_name() const; // e.g. "D_8^(1)"
};

int family_min_rank(Family f);
Family parse_family(const std::string& s);
std::string family_name(Family f);

Kind kind_of(Family f);
Kind kind_of(const AffineType& t);
Kind parse_kind(const std::string& s);
std::string kind_name(Kind k);

/// Cells in the symbol: 1 box, 2 for either domino. Undefined for Empty.
int cell_count(Kind k);
/// Columns occupied by the symbol: single box 1, horizontal domino 2,
/// vertical domino 1. Undefined for Empty.
int tile_width(Kind k);

/// The representative algebra per kind: A_n^(1), D_{n+1}^(2), C_n^(1), D_n^(1).
AffineType canonical_algebra(Kind k, int rank);

/// Static per-type data, all exact. Node indices are 1-based over I0 = {1..n}.
struct TypeConstants {
  Family family = Family::A1;
  int rank = 1;

  std::vector<int> t;         // t_a
  std::vector<int> t_check;   // t^v_a
  std::vector<int> epsilon;   // eps_a (2 only for A2Even at a=n)
  std::vector<int> upsilon2;  // 2 * upsilon_a, in {1,2,4}
  int gamma = 1;              // 2 for A2Even, D2
  int a_diamond = 1;          // n-1 (single box / hdomino), n-2 (vdomino), n (empty)
  int a_stop = 1;             // last node where the weight formula applies

  std::vector<std::vector<Rational>> pairing;         // (alpha~_a | alpha~_b)
  std::vector<std::vector<Rational>> weight_pairing;  // (Lambda~_a | Lambda~_b)

  /// Integer weights of the physical charge form:
  /// 2c(nu) = 1/2 sum_{a,b} charge_coeff[a][b] sum_rows min(len2, len2') - L part.
  std::vector<std::vector<long long>> charge_coeff;

  /// Vacancy formula per node: p(a, len2) = Lterm + 1/2 sum (w * Q2_b(len2)).
  /// Encodes both the generic three-term formula and the per-family special
  /// blocks at the tail nodes.
  std::vector<std::vector<std::pair<int, int>>> vacancy_weights;

  /// Nodes where only the special vacancy block applies and the box width is
  /// not 1; the quantum space must vanish there.
  std::vector<int> forbidden_l_nodes;

  int upsilon2_at(int a) const { return upsilon2[a]; }
};

/// Cached per (family, rank).
const TypeConstants& constants_of(const AffineType& t);

/// Smallest rank n with l(lambda) + ceil((|L|-|lambda|)/width) <= a_diamond(n),
/// clamped to the canonical family minimum. Requires kind != Empty, |L| >= |lambda|.
int minimum_rank(Kind kind, const Partition& lambda, long long l_size);
int minimum_rank(Kind kind, const Partition& lambda, const QuantumSpace& L);

}  // namespace rctk
