#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "flagsym/rootsys.hpp"

namespace flagsym {

/// Structure constants [E_a, E_b] = n(a, b) E_{a+b} of a Chevalley basis,
/// with [E_a, E_{-a}] = H_a (the coroot) and n(-a, -b) = -n(a, b).
///
/// Signs follow the extraspecial-pair convention: for every positive
/// non-simple root r, the pair (a_i, r - a_i) with i minimal gets
/// n = +(p + 1). All other constants follow from the Chevalley relations.
class ChevalleyTable {
 public:
  explicit ChevalleyTable(const RootSystem& rs);

  int size() const { return size_; }

  /// Zero when a + b is not a root.
  int n(RootId a, RootId b) const { return table_[index(a, b)]; }
  bool defined(RootId a, RootId b) const { return table_[index(a, b)] != 0; }

  /// Killing-form factor B(E_d, E_-d) up to a global scale: 2 / (d, d).
  Rational b(RootId d) const { return b_[static_cast<std::size_t>(d)]; }

  /// Test hook: overwrite one constant (used for mutation tests).
  void set(RootId a, RootId b, int value) { table_[index(a, b)] = static_cast<std::int8_t>(value); }

 private:
  std::size_t index(RootId a, RootId b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(b);
  }

  int size_;
  std::vector<std::int8_t> table_;
  std::vector<Rational> b_;
};

ChevalleyTable build_constants(const RootSystem& rs);

/// First Jacobi failure among root-vector triples, if any.
struct JacobiFailure {
  RootId x, y, z;
};

/// Exhaustive Jacobi scan over all ordered triples of root vectors.
std::optional<JacobiFailure> find_jacobi_failure(const ChevalleyTable& t, const RootSystem& rs);

/// Jacobi scan over `samples` pseudo-random triples.
std::optional<JacobiFailure> find_jacobi_failure_sampled(const ChevalleyTable& t, const RootSystem& rs,
                                                         std::uint64_t samples, std::uint64_t seed);

/// n(a,b) b(c) = n(b,c) b(a) = n(c,a) b(b) for every a + b + c = 0.
bool weighted_cyclic_holds(const ChevalleyTable& t, const RootSystem& rs);

/// |n(a,b)| = p + 1 for every defined pair, and zero exactly when a + b is not a root.
bool magnitudes_hold(const ChevalleyTable& t, const RootSystem& rs);

/// Jacobi on all triples plus the weighted cyclic identity.
bool sign_convention_check(const ChevalleyTable& t, const RootSystem& rs);

/// "a,b,n" lines (root ids) for every defined pair, with a header row.
void write_csv(std::ostream& os, const ChevalleyTable& t, const RootSystem& rs);

}  // namespace flagsym
