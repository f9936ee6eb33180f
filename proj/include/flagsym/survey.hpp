#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagsym/chevalley.hpp"
#include "flagsym/symmetry.hpp"

namespace flagsym {

/// Onishchik exception tag by (family, rank, painted set), Bourbaki numbering:
///   (a) C_{n+1} painted {1}; for n = 1 this is sp(2) = so(5), i.e. B_2 painted {2}
///   (b) B_{n-1} painted {n-1}, n >= 4
///   (c) G_2 painted {2} (white node long)
std::optional<ExceptionTag> onishchik_exception(Family family, int rank, const std::vector<int>& painted);

/// dim g from the closed-form table.
int dim_g(Family family, int rank);

struct EntryChecks {
  bool oracle_agree = false;
  bool diagram_agree = false;
  bool hprime_closed = false;
  bool kprime_commutes = false;

  bool all() const { return oracle_agree && diagram_agree && hprime_closed && kprime_commutes; }
};

/// One painted diagram with its symmetry data and cross-check outcomes.
struct EnumerationEntry {
  SimpleType type;
  std::vector<int> painted;
  int dim_g = 0;
  int dim_m = 0;
  bool symmetric = false;
  std::optional<ExceptionTag> exception;
  int index = 0;
  int coindex = 0;
  std::vector<Root> symmetry_roots;
  std::optional<LeafDescriptor> leaf;
  std::string leaf_error;
  std::string leaf_diagram;  // type read off the extended diagram
  EntryChecks checks;
  std::vector<KahlerParam> xi_sample;
  std::vector<std::string> failures;

  std::string spec() const;
};

/// Deterministic sample of `count` Kahler parameters derived from `seed`.
std::vector<KahlerParam> kahler_sample(const FlagData& f, std::uint64_t seed, int count);

/// Runs every root-level construction and cross-check on one painting. The
/// oracle is evaluated on each element of `xis`.
EnumerationEntry analyze_painting(const PaintedDiagram& pd, const ChevalleyTable& t,
                                  const std::vector<KahlerParam>& xis);

struct EnumerationOptions {
  int max_rank = 6;
  std::vector<Family> families;  // empty: all
  bool dedup_automorphisms = false;
  std::uint64_t seed = 0;
  int xi_samples = 5;
};

struct EnumerationSummary {
  int entries = 0;
  int symmetric = 0;
  int exceptions = 0;
  std::vector<std::string> failed_checks;  // "<spec>: <check>"
};

struct EnumerationReport {
  std::vector<EnumerationEntry> entries;
  EnumerationSummary summary;
};

/// Hard bound on --max-rank.
inline constexpr int kMaxEnumerationRank = kMaxRank;

/// All nonempty paintings of all simple types up to max_rank, ordered by
/// (family, rank, painted set). Throws InvalidInput if max_rank is out of range.
EnumerationReport enumerate(const EnumerationOptions& options);

/// All nonempty paintings of one type, lexicographically ordered; with
/// dedup, only the least painting of each diagram-automorphism orbit.
std::vector<std::vector<int>> all_paintings(const RootSystem& rs, bool dedup_automorphisms);

struct Violation {
  std::string entry;
  std::string check;
  std::string detail;
};

struct VerificationResult {
  bool passed = true;
  std::vector<Violation> violations;
};

/// Checks the main theorem on every entry that is neither a symmetric coset
/// nor an Onishchik exception: Hermitian irreducible leaf, metric-independent
/// transvections equal to the symmetry roots, k >= 6, dim g <= k(k-1)/2 and
/// k = 6 only for A3 painted {1,2} or {2,3}. Root-level cross-checks are
/// asserted on every non-exception entry.
VerificationResult verify_theorem(const EnumerationReport& report);

}  // namespace flagsym
