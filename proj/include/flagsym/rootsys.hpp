#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "flagsym/rational.hpp"

namespace flagsym {

/// Largest rank the engine constructs (E_8).
inline constexpr int kMaxRank = 8;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline constexpr Family kAllFamilies[] = {Family::A, Family::B, Family::C, Family::D,
                                          Family::E, Family::F, Family::G};

char to_char(Family f);
std::optional<Family> family_from_char(char c);

/// A simple type such as A3 or G2.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  std::string label() const;
  auto operator<=>(const SimpleType&) const = default;
};

/// A_n n>=1, B_n n>=2, C_n n>=3, D_n n>=4, E_6..E_8, F_4, G_2.
bool is_valid_type(Family family, int rank);

/// Thrown when a caller hands in an inadmissible type, root or painting.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal cross-check fails. Always a bug, never a valid outcome.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Integer vector in the simple-root basis. Roots of a simple system are all
/// nonnegative or all nonpositive; arbitrary integer combinations are allowed
/// here so that sums can be formed before a membership lookup.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coords);

  const std::vector<int>& coords() const { return coords_; }
  int rank() const { return static_cast<int>(coords_.size()); }
  int height() const { return height_; }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  Root operator-() const;
  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;

  bool operator==(const Root& other) const { return coords_ == other.coords_; }
  auto operator<=>(const Root& other) const { return coords_ <=> other.coords_; }

  /// "a1+a2+2a3" style; "-(a1+a2)" for negative roots.
  std::string to_string() const;

 private:
  std::vector<int> coords_;
  int height_ = 0;
};

/// Index of a root inside its RootSystem.
using RootId = int;
/// Sorted list of root ids.
using RootSet = std::vector<RootId>;

/// Result of root_string: b - p a, ..., b + q a are the roots of the a-string through b.
struct RootString {
  int p = 0;
  int q = 0;
};

/// Finite reduced root system of a simple type with Bourbaki node numbering
/// (except G_2, where node 1 is the long root).
///
/// Roots are numbered so that ids [0, P) are the positive roots ordered by
/// height (simple roots first, in node order) and id k + P is the negative of
/// root k. Immutable after construction.
class RootSystem {
 public:
  RootSystem(Family family, int rank);

  SimpleType type() const { return {family_, rank_}; }
  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// c_ij = 2(a_i, a_j) / (a_j, a_j), zero-based indices.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_positive_; }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(RootId id) const { return roots_[static_cast<std::size_t>(id)]; }

  bool is_positive(RootId id) const { return id < num_positive_; }
  RootId negate(RootId id) const {
    return id < num_positive_ ? id + num_positive_ : id - num_positive_;
  }
  /// Simple root of 1-based node i.
  RootId simple(int node) const { return node - 1; }
  RootId highest() const { return highest_; }

  std::optional<RootId> find(const Root& r) const;

  /// Id of a + b when the coordinate sum is a root.
  std::optional<RootId> sum(RootId a, RootId b) const {
    const int s = sum_[static_cast<std::size_t>(a * size() + b)];
    if (s < 0) return std::nullopt;
    return s;
  }
  bool sum_is_root(RootId a, RootId b) const {
    return sum_[static_cast<std::size_t>(a * size() + b)] >= 0;
  }

  /// Symmetrized Cartan pairing; long roots have squared length 2.
  Rational inner_product(const Root& a, const Root& b) const;
  Rational inner_product(RootId a, RootId b) const { return inner_product(root(a), root(b)); }
  Rational length2(RootId id) const { return lengths_[static_cast<std::size_t>(id)]; }
  bool is_long(RootId id) const { return length2(id) == Rational(2); }

  /// <b, a^vee> = 2(b, a)/(a, a).
  int cartan_integer(RootId b, RootId a) const;

  /// a-string through b. Throws InvalidInput when a = +-b.
  RootString root_string(RootId a, RootId b) const;

 private:
  Family family_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> gram_;
  std::vector<Root> roots_;
  std::vector<Rational> lengths_;
  std::map<std::vector<int>, RootId> index_;
  std::vector<int> sum_;
  int num_positive_ = 0;
  RootId highest_ = 0;
};

/// Throws InvalidInput for an invalid (family, rank).
RootSystem build_root_system(Family family, int rank);

/// Integer Cartan matrix in the documented node numbering.
std::vector<std::vector<int>> cartan_matrix(Family family, int rank);

/// Rank of a set of roots as vectors over Q.
int span_rank(const RootSystem& rs, const RootSet& roots);

/// Positive members of a closed symmetric subsystem that are not sums of two
/// positive members.
RootSet simple_roots_of(const RootSystem& rs, const RootSet& subsystem);

/// True when (S + S) cap R is contained in S.
bool is_closed(const RootSystem& rs, const RootSet& roots);

std::string format_roots(const RootSystem& rs, const RootSet& roots);

}  // namespace flagsym
