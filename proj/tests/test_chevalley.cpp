#include <algorithm>
#include <map>
#include <sstream>

#include "doctest.h"
#include "flagsym/chevalley.hpp"

using namespace flagsym;

namespace {

// Root e_i - e_j of A_n in simple coordinates, 0-based i != j.
Root a_root(int n, int i, int j) {
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  const int lo = std::min(i, j), hi = std::max(i, j), s = i < j ? 1 : -1;
  for (int k = lo; k < hi; ++k) c[static_cast<std::size_t>(k)] = s;
  return Root(std::move(c));
}

// Realizes the table inside gl(n+1): E_{e_i - e_j} = s_ij * (matrix unit ij)
// with s_ij = s_ji = +-1. Signs are fixed on simple roots and propagated along
// one decomposition per root, then every constant is compared with the
// matrix commutator [s E_ij, s' E_jk] = s s' E_ik.
bool realized_by_matrices(const ChevalleyTable& t, const RootSystem& rs) {
  const int n = rs.rank();
  std::map<std::pair<int, int>, int> sign;
  for (int i = n; i >= 0; --i) {
    for (int j = i + 1; j <= n; ++j) {
      if (j == i + 1) {
        sign[{i, j}] = 1;
        continue;
      }
      const int s1 = sign[{i, i + 1}], s2 = sign[{i + 1, j}];
      const RootId x = *rs.find(a_root(n, i, i + 1));
      const RootId y = *rs.find(a_root(n, i + 1, j));
      sign[{i, j}] = t.n(x, y) * s1 * s2;
    }
  }
  auto s = [&](int i, int j) { return i < j ? sign[{i, j}] : sign[{j, i}]; };
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      if (i == j) continue;
      for (int k = 0; k <= n; ++k) {
        for (int l = 0; l <= n; ++l) {
          if (k == l) continue;
          const RootId x = *rs.find(a_root(n, i, j));
          const RootId y = *rs.find(a_root(n, k, l));
          // [E_ij, E_kl] = d_jk E_il - d_li E_kj
          int expected = 0;
          if (j == k && i != l) expected = s(i, j) * s(k, l) * s(i, l);
          else if (l == i && k != j) expected = -s(i, j) * s(k, l) * s(k, j);
          if (t.n(x, y) != expected) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("A_n constants are realized by gl(n+1) matrix units") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    const RootSystem rs = build_root_system(Family::A, n);
    CHECK(realized_by_matrices(build_constants(rs), rs));
  }
}

TEST_CASE("Jacobi, cyclic and magnitude identities, rank <= 4") {
  for (Family f : kAllFamilies) {
    for (int n = 1; n <= 4; ++n) {
      if (!is_valid_type(f, n)) continue;
      INFO(SimpleType{f, n}.label());
      const RootSystem rs = build_root_system(f, n);
      const ChevalleyTable t = build_constants(rs);
      CHECK_FALSE(find_jacobi_failure(t, rs).has_value());
      CHECK(weighted_cyclic_holds(t, rs));
      CHECK(magnitudes_hold(t, rs));
    }
  }
}

TEST_CASE("large types: sampled Jacobi") {
  for (auto [f, n] : {std::pair{Family::E, 7}, {Family::E, 8}, {Family::B, 7}}) {
    const RootSystem rs = build_root_system(f, n);
    const ChevalleyTable t = build_constants(rs);
    CHECK_FALSE(find_jacobi_failure_sampled(t, rs, 200000, 7).has_value());
    CHECK(magnitudes_hold(t, rs));
  }
}

TEST_CASE("extraspecial pairs are positive and negation flips signs") {
  for (auto [f, n] : {std::pair{Family::G, 2}, {Family::F, 4}, {Family::D, 5}}) {
    const RootSystem rs = build_root_system(f, n);
    const ChevalleyTable t = build_constants(rs);
    for (RootId xi = 0; xi < rs.num_positive(); ++xi) {
      if (rs.root(xi).height() < 2) continue;
      for (int node = 1; node <= n; ++node) {
        auto rest = rs.sum(xi, rs.negate(rs.simple(node)));
        if (!rest) continue;
        CHECK(t.n(rs.simple(node), *rest) == rs.root_string(rs.simple(node), *rest).p + 1);
        break;
      }
    }
    for (RootId a = 0; a < rs.size(); ++a) {
      for (RootId b = 0; b < rs.size(); ++b) {
        REQUIRE(t.n(rs.negate(a), rs.negate(b)) == -t.n(a, b));
        REQUIRE(t.n(a, b) == -t.n(b, a));
      }
    }
  }
}

TEST_CASE("G2 has constants of magnitude 3 and b(short) = 3") {
  const RootSystem rs = build_root_system(Family::G, 2);
  const ChevalleyTable t = build_constants(rs);
  const RootId a2 = rs.simple(2);
  const RootId a1_2a2 = *rs.find(Root({1, 2}));
  const RootId a1_a2 = *rs.find(Root({1, 1}));
  CHECK(std::abs(t.n(a2, a1_2a2)) == 3);
  CHECK(t.b(a1_2a2) == Rational(3));
  CHECK(t.b(*rs.find(Root({1, 3}))) == Rational(1));
  CHECK(t.b(rs.highest()) == Rational(1));
  CHECK(std::abs(t.n(a2, a1_a2)) == 2);
}

TEST_CASE("a single flipped sign is detected") {
  const RootSystem rs = build_root_system(Family::B, 3);
  const ChevalleyTable good = build_constants(rs);
  REQUIRE(sign_convention_check(good, rs));
  int flips = 0;
  for (RootId a = 0; a < rs.size(); ++a) {
    for (RootId b = 0; b < rs.size(); ++b) {
      if (!good.defined(a, b)) continue;
      ChevalleyTable bad = good;
      bad.set(a, b, -good.n(a, b));
      CHECK_FALSE(sign_convention_check(bad, rs));
      ++flips;
    }
  }
  CHECK(flips > 0);
}

TEST_CASE("CSV export") {
  const RootSystem rs = build_root_system(Family::A, 2);
  std::ostringstream os;
  write_csv(os, build_constants(rs), rs);
  const std::string csv = os.str();
  CHECK(csv.rfind("a,b,n,root_a,root_b\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 12);
}
