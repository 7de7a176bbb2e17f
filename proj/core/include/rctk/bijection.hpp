#pragma once

#include <map>
#include <vector>

#include "rctk/rigged.hpp"
#include "rctk/tableau.hpp"

namespace rctk {

/// Result of one box-removal map delta_l.
struct DeltaOutcome {
  RiggedConfiguration rc;
  int stop_node = 0;               // k: node where the selection chain stopped
  std::map<int, int> removed_len2; // node -> pre-removal doubled length
};

/// delta_l: removes one box per chosen row from the top node down to the stop
/// node. l2 is the doubled physical length of a row of nu^(n) (nu^(n-1) or
/// nu^(n) for the vertical-domino fork). Throws bijection_error when no
/// admissible row exists.
DeltaOutcome delta(const RiggedConfiguration& rc, const QuantumSpace& L, int l2);

/// Two chained deltas; only entry point that leaves a clean state for the
/// vertical-domino kind. Checks the chain inequality l^(a-1) <= l'^(a).
std::pair<DeltaOutcome, DeltaOutcome> delta_pair(const RiggedConfiguration& rc,
                                                 const QuantumSpace& L, int l2);

/// Box-addition map, inverse of delta. k <= a_diamond.
RiggedConfiguration delta_tilde(const RiggedConfiguration& rc, const QuantumSpace& L, int k);

struct PsiStep {
  int column = 0;       // l of the delta_l batch (physical units)
  int letter = 0;       // position within the batch, 1..h
  int stop_node = 0;    // row of T receiving the letter
  long long charge2_after = 0;
  RiggedConfiguration state;
  SkewTableau tableau;
};

struct PsiResult {
  RiggedConfiguration rc_a;  // type-A image
  SkewTableau tableau;
  Partition lambda;  // wt(input)
  Partition mu;      // nu^(a_diamond) of the input
  Partition eta;     // wt(output)
  long long charge2_in = 0;
  long long charge2_out = 0;
  bool rank_condition_met = true;  // l(wt) + l(nu^(a_diamond)) <= a_diamond
  std::vector<PsiStep> steps;
};

/// The bijection Psi: batches delta_l^{h_l} ... delta_1^{h_1} driven by the
/// columns of nu^(a_diamond), recording stop nodes into the growing tableau.
/// On the Empty kind returns the input unchanged with an empty tableau.
/// The rank inequality is diagnosed in rank_condition_met; a failing delta
/// step throws bijection_error quoting it.
PsiResult psi(const RiggedConfiguration& rc, const QuantumSpace& L);

struct GroupEntry {
  int letter = 0;
  int row = 0;  // row of T containing this group member
};

/// Group decomposition of an LR tableau: repeatedly fix the rightmost
/// occurrence of each letter 1..h (max column, then topmost row).
struct GroupDecomposition {
  std::vector<std::vector<GroupEntry>> groups;  // cardinalities h_1 >= h_2 >= ...

  /// delta_tilde subscripts in application order (within each group, letters
  /// processed from largest to smallest).
  std::vector<int> application_order() const;
};

GroupDecomposition group_tableau(const SkewTableau& t);

/// The inverse map Psi~: applies the delta_tilde sequence read off T to a
/// type-A rigged configuration embedded into the canonical algebra of `kind`
/// at rank `rank`. Preconditions (LR tableau, outer shape = wt, tileable
/// weight, rank) are reported individually.
RiggedConfiguration psi_tilde(const RiggedConfiguration& rc_a, const SkewTableau& t,
                              Kind kind, int rank, const QuantumSpace& L);

}  // namespace rctk
