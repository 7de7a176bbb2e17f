#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rctk/affine.hpp"
#include "rctk/partition.hpp"
#include "rctk/quantum_space.hpp"

namespace rctk {

/// One row of a node's quasipartition: doubled physical length plus rigging.
struct Row {
  int len2;
  int rig;
  auto operator<=>(const Row&) const = default;
};

/// Physical shapes per node: doubled lengths, descending. Index 0 unused.
using Shapes = std::vector<std::vector<int>>;

/// Rigged configuration. nodes[a] (a = 1..rank) holds the rows of nu^(a) in
/// canonical order (len2 desc, rigging desc). The relaxed flag marks the
/// vertical-domino mid-pair state where the longest row of nu^(n) may carry
/// vacancy -1 with rigging 0.
struct RiggedConfiguration {
  AffineType type;
  std::vector<std::vector<Row>> nodes;
  bool relaxed = false;

  explicit RiggedConfiguration(AffineType t);

  int rank() const { return type.rank; }
  void canonicalize();
  Shapes shapes() const;
  long long total_area2() const;

  /// Physical shape of nu^(a) as a partition; throws if any length is not
  /// a whole number of units.
  Partition node_partition(int a) const;

  bool same_content(const RiggedConfiguration& other) const;  // ignores relaxed flag
};

/// Area (doubled) of the first len2/2 physical columns.
long long q2_area(const std::vector<int>& shape2, long long len2);

/// Vacancy number p at node a, doubled physical length len2.
int vacancy(const TypeConstants& tc, const Shapes& shapes, const QuantumSpace& L,
            int a, int len2);

/// Node areas (abstract box counts) forced by the configuration condition;
/// nullopt when no configuration exists (non-integral or negative).
std::optional<std::vector<long long>> node_areas(const TypeConstants& tc,
                                                 const Partition& lambda,
                                                 const QuantumSpace& L);

/// Structural check: box counts per node, vacancy nonnegativity at occupied
/// lengths (all lengths when strict), riggings within [0, p], quasipartition
/// widths, quantum space support. Returns human-readable violations.
std::vector<std::string> validate(const RiggedConfiguration& rc, const Partition& lambda,
                                  const QuantumSpace& L, bool strict = false);

/// wt(nu,J) from the stable weight formula (physical areas, nodes <= a_stop).
Partition rc_weight(const RiggedConfiguration& rc, const QuantumSpace& L);

/// Same formula truncated to nodes <= a_diamond; valid on psi intermediates.
Partition rc_weight_lower(const RiggedConfiguration& rc, const QuantumSpace& L);

/// 2*c(nu) of the configuration statistic.
long long charge2_config(const TypeConstants& tc, const Shapes& shapes, const QuantumSpace& L);

/// 2*|J| with the t^v weights.
long long rigging_mass2(const RiggedConfiguration& rc);

/// 2*c(nu,J). On a vertical-domino generalized state (fork areas out of
/// balance) the statistic is offset by -gamma/2 so that every delta changes
/// the charge by exactly gamma/2.
long long charge2(const RiggedConfiguration& rc, const QuantumSpace& L);

/// 2*c(nu) via the truncated form of the stability proposition; nu_star2 is
/// substituted at halved tail nodes. Must agree with charge2_config on every
/// stable configuration.
long long charge2_stable(const TypeConstants& tc, const Shapes& shapes, const QuantumSpace& L,
                         int l_star, const std::vector<int>& nu_star2);

struct StableProfile {
  int k = 0;          // max node carrying weight or quantum space
  Partition nu_star;  // stable tail partition
  int l_star = 0;     // k + l(nu_star)
};

/// Reads the profile off the configuration and verifies the stability
/// statements (tail shape / halved tails, zero vacancies beyond l_star,
/// Q_max chain, equal-width singular chain). Throws invalid_input with the
/// violated equality if the configuration is not stable.
StableProfile stable_profile(const RiggedConfiguration& rc, const Partition& lambda,
                             const QuantumSpace& L);

/// All admissible lambda-configurations (shapes only), canonical order.
std::vector<Shapes> enumerate_configs(const AffineType& type, const Partition& lambda,
                                      const QuantumSpace& L, Budget* budget = nullptr);

/// All rigged configurations RC(lambda, L), canonical order.
std::vector<RiggedConfiguration> enumerate_rc(const AffineType& type, const Partition& lambda,
                                              const QuantumSpace& L, Budget* budget = nullptr);

}  // namespace rctk
