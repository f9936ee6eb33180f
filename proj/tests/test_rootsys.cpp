#include <algorithm>
#include <set>

#include "doctest.h"
#include "flagsym/rootsys.hpp"

using namespace flagsym;

namespace {

// Euclidean model: simple roots as integer vectors, (x, y) = dot(x, y) / scale.
struct Model {
  std::vector<std::vector<int>> simple;
  std::set<std::vector<int>> roots;
  int scale = 1;
};

std::vector<int> unit(int dim, int i, int s = 1) {
  std::vector<int> v(static_cast<std::size_t>(dim), 0);
  v[static_cast<std::size_t>(i)] = s;
  return v;
}

std::vector<int> add(std::vector<int> a, const std::vector<int>& b, int s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

Model classical(Family f, int n) {
  Model m;
  const int dim = f == Family::A ? n + 1 : n;
  for (int i = 0; i + 1 < n; ++i) m.simple.push_back(add(unit(dim, i), unit(dim, i + 1), -1));
  switch (f) {
    case Family::A: m.simple.push_back(add(unit(dim, n - 1), unit(dim, n), -1)); break;
    case Family::B: m.simple.push_back(unit(dim, n - 1)); break;
    case Family::C: m.simple.push_back(unit(dim, n - 1, 2)); m.scale = 2; break;
    case Family::D: m.simple.push_back(add(unit(dim, n - 2), unit(dim, n - 1))); break;
    default: break;
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      if (i == j) continue;
      m.roots.insert(add(unit(dim, i), unit(dim, j), -1));
      if (f != Family::A && i < j) {
        for (int s : {1, -1}) m.roots.insert(add(unit(dim, i, s), unit(dim, j, s)));
      }
    }
    if (f == Family::B) {
      m.roots.insert(unit(dim, i));
      m.roots.insert(unit(dim, i, -1));
    }
    if (f == Family::C) {
      m.roots.insert(unit(dim, i, 2));
      m.roots.insert(unit(dim, i, -2));
    }
  }
  return m;
}

std::vector<int> embed(const Model& m, const Root& r) {
  std::vector<int> v(m.simple[0].size(), 0);
  for (int i = 0; i < r.rank(); ++i) v = add(v, m.simple[static_cast<std::size_t>(i)], r[i]);
  return v;
}

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int positive_count(Family f, int n) {
  switch (f) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

}  // namespace

TEST_CASE("classical root systems match the euclidean model") {
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = 1; n <= 7; ++n) {
      if (!is_valid_type(f, n)) continue;
      INFO(SimpleType{f, n}.label());
      const RootSystem rs = build_root_system(f, n);
      const Model m = classical(f, n);
      std::set<std::vector<int>> got;
      for (const Root& r : rs.roots()) got.insert(embed(m, r));
      CHECK(got == m.roots);
      for (RootId a = 0; a < rs.size(); a += 3) {
        for (RootId b = 0; b < rs.size(); ++b) {
          const Rational expected = make_rational(dot(embed(m, rs.root(a)), embed(m, rs.root(b))), m.scale);
          REQUIRE(rs.inner_product(a, b) == expected);
        }
      }
    }
  }
}

TEST_CASE("root counts and highest roots") {
  const std::vector<std::pair<SimpleType, std::vector<int>>> theta = {
      {{Family::A, 4}, {1, 1, 1, 1}},
      {{Family::B, 4}, {1, 2, 2, 2}},
      {{Family::C, 4}, {2, 2, 2, 1}},
      {{Family::D, 5}, {1, 2, 2, 1, 1}},
      {{Family::E, 6}, {1, 2, 2, 3, 2, 1}},
      {{Family::E, 7}, {2, 2, 3, 4, 3, 2, 1}},
      {{Family::E, 8}, {2, 3, 4, 6, 5, 4, 3, 2}},
      {{Family::F, 4}, {2, 3, 4, 2}},
      {{Family::G, 2}, {2, 3}},
  };
  for (const auto& [type, coords] : theta) {
    CAPTURE(type.label());
    const RootSystem rs = build_root_system(type.family, type.rank);
    CHECK(rs.num_positive() == positive_count(type.family, type.rank));
    CHECK(rs.root(rs.highest()).coords() == coords);
    CHECK(rs.is_long(rs.highest()));
  }
}

TEST_CASE("G2 positive roots, node 1 long") {
  const RootSystem rs = build_root_system(Family::G, 2);
  std::set<std::vector<int>> got;
  for (RootId a = 0; a < rs.num_positive(); ++a) got.insert(rs.root(a).coords());
  const std::set<std::vector<int>> expected = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(got == expected);
  CHECK(rs.cartan()[0][1] == -3);
  CHECK(rs.cartan()[1][0] == -1);
  CHECK(rs.length2(rs.simple(1)) == Rational(2));
  CHECK(rs.length2(rs.simple(2)) == make_rational(2, 3));
  // long: a1, a1+3a2, 2a1+3a2
  for (RootId a = 0; a < rs.num_positive(); ++a) {
    const auto& c = rs.root(a).coords();
    CHECK(rs.is_long(a) == (c[1] % 3 == 0));
  }
}

TEST_CASE("Cartan matrix convention") {
  for (Family f : kAllFamilies) {
    for (int n = 1; n <= kMaxRank; ++n) {
      if (!is_valid_type(f, n)) continue;
      const RootSystem rs = build_root_system(f, n);
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          REQUIRE(rs.cartan()[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] ==
                  rs.cartan_integer(rs.simple(i), rs.simple(j)));
        }
      }
    }
  }
  const RootSystem b3 = build_root_system(Family::B, 3);
  CHECK(b3.cartan()[1][2] == -2);  // node 3 short
  const RootSystem c3 = build_root_system(Family::C, 3);
  CHECK(c3.cartan()[2][1] == -2);  // node 3 long
}

TEST_CASE("root strings and sums") {
  const RootSystem rs = build_root_system(Family::G, 2);
  const RootId a1 = rs.simple(1), a2 = rs.simple(2);
  const RootString s = rs.root_string(a2, a1);
  CHECK(s.p == 0);
  CHECK(s.q == 3);
  CHECK_THROWS_AS(rs.root_string(a1, a1), InvalidInput);
  CHECK_THROWS_AS(rs.root_string(a1, rs.negate(a1)), InvalidInput);
  for (RootId a = 0; a < rs.size(); ++a) {
    CHECK(rs.negate(rs.negate(a)) == a);
    CHECK(rs.root(rs.negate(a)) == -rs.root(a));
    CHECK_FALSE(rs.sum(a, rs.negate(a)).has_value());
    for (RootId b = 0; b < rs.size(); ++b) {
      const auto z = rs.find(rs.root(a) + rs.root(b));
      CHECK(rs.sum(a, b) == z);
      if (a != b && a != rs.negate(b)) {
        const RootString st = rs.root_string(a, b);
        CHECK(st.p - st.q == rs.cartan_integer(b, a));
      }
    }
  }
}

TEST_CASE("span rank, closure and formatting") {
  const RootSystem rs = build_root_system(Family::A, 3);
  const RootId a1 = rs.simple(1), a2 = rs.simple(2);
  const RootId a12 = *rs.sum(a1, a2);
  CHECK(span_rank(rs, {a1, a2, a12}) == 2);
  CHECK(span_rank(rs, {}) == 0);
  RootSet closed = {a1, a2, a12, rs.negate(a1), rs.negate(a2), rs.negate(a12)};
  std::sort(closed.begin(), closed.end());
  CHECK(is_closed(rs, closed));
  CHECK_FALSE(is_closed(rs, {a1, a2}));
  CHECK(simple_roots_of(rs, closed) == RootSet{a1, a2});
  CHECK(rs.root(a12).to_string() == "a1+a2");
  CHECK(rs.root(rs.negate(a12)).to_string() == "-(a1+a2)");
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(build_root_system(Family::C, 2), InvalidInput);
  CHECK_THROWS_AS(build_root_system(Family::D, 3), InvalidInput);
  CHECK_THROWS_AS(build_root_system(Family::E, 5), InvalidInput);
  CHECK_THROWS_AS(build_root_system(Family::A, 0), InvalidInput);
  CHECK_THROWS_AS(build_root_system(Family::A, kMaxRank + 1), InvalidInput);
  CHECK(family_from_char('H') == std::nullopt);
}

TEST_CASE("rational helpers") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK(to_integer(Rational(7)) == 7);
  CHECK_THROWS(to_integer(make_rational(1, 2)));
}
