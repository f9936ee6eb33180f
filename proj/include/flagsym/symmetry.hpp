#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagsym/diagram.hpp"
#include "flagsym/flag.hpp"

namespace flagsym {

/// Onishchik's three families where G is a proper subgroup of the full
/// isometry group: (a) Sp(n+1)/U(1)xSp(n), (b) SO(2n-1)/U(n-1), (c) G2/U(2).
enum class ExceptionTag { A, B, C };

char to_char(ExceptionTag tag);

/// The leaf of symmetry as a Hermitian symmetric pair (u, k) with
/// u = k + p and k = [p, p].
struct LeafDescriptor {
  SimpleType u_type;
  std::vector<SimpleType> k_semisimple_type;
  int k_center_dim = 0;
  RootSet r_u;
  RootSet r_k;
  int toral_rank = 0;
  std::string family;  // e.g. "complex Grassmannian"
  std::string name;    // e.g. "CP^2"

  int dim_u() const { return toral_rank + static_cast<int>(r_u.size()); }
  int dim_k() const { return toral_rank + static_cast<int>(r_k.size()); }
};

struct SymmetryReport {
  FlagData flag;
  RootSet r_p_plus;
  int index = 0;
  int coindex = 0;
  LeafDescriptor leaf;
  RootSet h_prime_roots;
  std::optional<ExceptionTag> exception;
};

/// Roots a of R_m^+ with (a + R_m^+) cap R empty.
RootSet symmetry_roots(const FlagData& f);

/// Root support of the center of the nilradical m^{1,0}. Computed by an
/// independent pair scan; throws ConsistencyError if the result is not abelian.
RootSet center_of_nilradical(const FlagData& f);

/// Roots a - b (a, b symmetry roots) that are roots: the roots of k = [p, p].
RootSet symmetric_isotropy_roots(const FlagData& f, const RootSet& p_plus);

/// Builds (u, k), checks that it is an irreducible Hermitian symmetric pair
/// and names it. Throws ConsistencyError when any of those checks fails.
LeafDescriptor leaf_pair(const FlagData& f);

/// Component of the extended diagram, minus the black nodes, that contains -theta.
Diagram leaf_via_diagram(const PaintedDiagram& pd);

/// R_h cup R_p. Throws ConsistencyError if it is not closed under addition.
RootSet h_prime(const FlagData& f);

/// No root of R_h outside R_k can be added to a symmetry root.
bool k_prime_check(const FlagData& f);

/// Everything above in one pass; exception is left unset.
SymmetryReport symmetry_report(const FlagData& f);

struct HermitianName {
  std::string family;
  std::string name;
};

/// Looks (u, semisimple part of k) up in the table of irreducible Hermitian
/// symmetric pairs.
std::optional<HermitianName> hermitian_pair_name(SimpleType u, const std::vector<SimpleType>& k);

/// Simple factors of a closed symmetric subsystem.
std::vector<SimpleType> subsystem_types(const RootSystem& rs, const RootSet& subsystem);

}  // namespace flagsym
