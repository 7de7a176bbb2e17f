#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "rctk/bijection.hpp"
#include "rctk/fermionic.hpp"
#include "rctk/qpoly.hpp"
#include "rctk/rigged.hpp"
#include "rctk/tableau.hpp"

namespace rctk {

using Json = nlohmann::ordered_json;

/// Self-contained instance: a rigged configuration plus its quantum space.
struct RcInstance {
  RiggedConfiguration rc;
  QuantumSpace L;
};

// Partitions serialize as integer arrays.
Json partition_to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// Quantum space as sorted [a, i, count] triples.
Json quantum_space_to_json(const QuantumSpace& L);
QuantumSpace quantum_space_from_json(const Json& j);

// Rigged configuration files:
// {"type","rank","L":[[a,i,c],...],"nodes":[{"a":1,"rows":[[len,rig],...]}]}
// with physical lengths, halves rendered as "k/2" strings.
Json rc_to_json(const RiggedConfiguration& rc, const QuantumSpace& L);
RcInstance rc_from_json(const Json& j);

// Skew tableaux as {"inner","outer","rows":[[letters]]}.
Json tableau_to_json(const SkewTableau& t);
SkewTableau tableau_from_json(const Json& j);

// Polynomials as sorted [exponent_numerator_over_2, coefficient] pairs.
Json polynomial_to_json(const QPolynomial& p);
QPolynomial polynomial_from_json(const Json& j);

// Charges / half-integers: integers exact, halves as "p/2" strings.
Json half_to_json(long long doubled);
long long half_from_json(const Json& j);

Json psi_result_to_json(const PsiResult& r, const QuantumSpace& L, bool trace);
Json identity_report_to_json(const IdentityReport& r);

// Human-readable renderings (--format pretty).
std::string render_rc(const RiggedConfiguration& rc, const QuantumSpace& L);
std::string render_tableau(const SkewTableau& t);
std::string render_polynomial(const QPolynomial& p);

Json load_json_file(const std::string& path);  // "-" reads stdin

}  // namespace rctk
