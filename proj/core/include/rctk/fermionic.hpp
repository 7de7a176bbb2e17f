#pragma once

#include <vector>

#include "rctk/qpoly.hpp"
#include "rctk/rigged.hpp"

namespace rctk {

struct ConfigContribution {
  Shapes shapes;
  long long charge2;
  QPolynomial term;
};

struct FermionicResult {
  QPolynomial polynomial;  // = sum of contributions
  std::vector<ConfigContribution> per_configuration;
};

/// M(lambda, L; q) as the closed-form sum over admissible configurations of
/// q^c(nu) * prod [p+m choose m]_{q^{t^v}}.
FermionicResult fermionic_M(const AffineType& type, const Partition& lambda,
                            const QuantumSpace& L, Budget* budget = nullptr);

/// M(lambda, L; q) as the plain sum of q^charge over all rigged configurations.
QPolynomial M_by_enumeration(const AffineType& type, const Partition& lambda,
                             const QuantumSpace& L, Budget* budget = nullptr);

/// Stable M^kind(lambda, L; q): fermionic_M over the canonical algebra at
/// rank minimum_rank + margin. Rank-independent for margin >= 0.
QPolynomial stable_M(Kind kind, const Partition& lambda, const QuantumSpace& L,
                     int margin = 1, Budget* budget = nullptr);

struct IdentityWitness {
  Partition mu;
  Partition eta;
  long long coefficient;
};

struct IdentityReport {
  QPolynomial lhs;
  QPolynomial rhs;
  bool equal = false;
  std::vector<IdentityWitness> witnesses;
};

/// Checks M^kind(lambda,L;q) = q^{-(gamma/2)(|L|-|lambda|)} *
/// sum_{mu,eta} c_{lambda,mu}^eta M^empty(eta,L;q^gamma) exactly.
/// mu runs over kind-tileable partitions of |L|-|lambda|; an empty sum makes
/// the right side 0.
IdentityReport verify_identity(Kind kind, const Partition& lambda, const QuantumSpace& L,
                               int margin = 1, Budget* budget = nullptr);

}  // namespace rctk
