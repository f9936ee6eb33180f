#include "flagsym/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace flagsym {

char to_char(Family f) { return static_cast<char>(f); }

std::optional<Family> family_from_char(char c) {
  for (Family f : kAllFamilies) {
    if (to_char(f) == c) return f;
  }
  return std::nullopt;
}

std::string SimpleType::label() const { return std::string(1, to_char(family)) + std::to_string(rank); }

bool is_valid_type(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1 && rank <= kMaxRank;
    case Family::B: return rank >= 2 && rank <= kMaxRank;
    case Family::C: return rank >= 3 && rank <= kMaxRank;
    case Family::D: return rank >= 4 && rank <= kMaxRank;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Root

Root::Root(std::vector<int> coords)
    : coords_(std::move(coords)), height_(std::accumulate(coords_.begin(), coords_.end(), 0)) {}

Root Root::operator-() const {
  std::vector<int> c(coords_);
  for (int& x : c) x = -x;
  return Root(std::move(c));
}

Root Root::operator+(const Root& other) const {
  std::vector<int> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return Root(std::move(c));
}

Root Root::operator-(const Root& other) const { return *this + (-other); }

std::string Root::to_string() const {
  if (height_ < 0) return "-(" + (-*this).to_string() + ")";
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const int c = coords_[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    const int a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Cartan matrices
//
//   A_n  1 - 2 - ... - n
//   B_n  1 - 2 - ... - (n-1) => n        node n short
//   C_n  1 - 2 - ... - (n-1) <= n        node n long
//   D_n  1 - ... - (n-2) - (n-1), (n-2) - n
//   E_n  1 - 3 - 4 - 5 - 6 (- 7 - 8), 2 - 4
//   F_4  1 - 2 => 3 - 4                  nodes 1, 2 long
//   G_2  1 => 2                          node 1 long

std::vector<std::vector<int>> cartan_matrix(Family family, int rank) {
  if (!is_valid_type(family, rank)) {
    throw InvalidInput("invalid simple type " + SimpleType{family, rank}.label());
  }
  const auto n = static_cast<std::size_t>(rank);
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) {  // 1-based, simple bond
    c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = -1;
    c[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = -1;
  };
  auto set = [&](int i, int j, int v) {
    c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
  };
  switch (family) {
    case Family::A:
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      set(rank - 1, rank, -2);
      break;
    case Family::C:
      for (int i = 1; i < rank; ++i) bond(i, i + 1);
      set(rank, rank - 1, -2);
      break;
    case Family::D:
      for (int i = 1; i < rank - 1; ++i) bond(i, i + 1);
      bond(rank - 2, rank);
      break;
    case Family::E:
      bond(1, 3);
      bond(2, 4);
      for (int i = 3; i < rank; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3);
      bond(3, 4);
      set(2, 3, -2);
      break;
    case Family::G:
      bond(1, 2);
      set(1, 2, -3);
      break;
  }
  return c;
}

namespace {

// Squared lengths d_i with c_ij d_j = c_ji d_i, normalized so the longest is 2.
std::vector<Rational> simple_lengths(const std::vector<std::vector<int>>& c) {
  const std::size_t n = c.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = Rational(1);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || c[i][j] == 0 || d[j] != 0) continue;
      d[j] = Rational(c[j][i]) * d[i] / Rational(c[i][j]);
      queue.push_back(j);
    }
  }
  const Rational longest = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x = x * Rational(2) / longest;
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(Family family, int rank)
    : family_(family), rank_(rank), cartan_(cartan_matrix(family, rank)) {
  const auto n = static_cast<std::size_t>(rank);
  const auto d = simple_lengths(cartan_);
  gram_.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram_[i][j] = Rational(cartan_[i][j]) * d[j] / Rational(2);
  }

  // Positive roots by extending root strings from the simple roots, one height at a time.
  std::vector<Root> positive;
  std::map<std::vector<int>, int> seen;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.emplace(e, static_cast<int>(positive.size()));
    positive.emplace_back(std::move(e));
  }
  for (std::size_t k = 0; k < positive.size(); ++k) {
    const Root beta = positive[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (beta.height() == 1 && beta[static_cast<int>(i)] == 1) continue;  // 2 a_i is not a root
      int p = 0;
      for (std::vector<int> down = beta.coords();;) {
        down[i] -= 1;
        if (!seen.contains(down)) break;
        ++p;
      }
      int pairing = 0;  // <beta, a_i^vee>
      for (std::size_t j = 0; j < n; ++j) pairing += beta[static_cast<int>(j)] * cartan_[j][i];
      if (p - pairing > 0) {
        std::vector<int> up = beta.coords();
        up[i] += 1;
        if (!seen.contains(up)) {
          seen.emplace(up, static_cast<int>(positive.size()));
          positive.emplace_back(std::move(up));
        }
      }
    }
  }

  std::stable_sort(positive.begin(), positive.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords() > b.coords();
  });

  num_positive_ = static_cast<int>(positive.size());
  roots_ = positive;
  for (const Root& r : positive) roots_.push_back(-r);
  for (int id = 0; id < size(); ++id) index_.emplace(roots_[static_cast<std::size_t>(id)].coords(), id);

  lengths_.reserve(roots_.size());
  for (const Root& r : roots_) lengths_.push_back(inner_product(r, r));

  const int total = size();
  sum_.assign(static_cast<std::size_t>(total * total), -1);
  for (int a = 0; a < total; ++a) {
    for (int b = 0; b < total; ++b) {
      if (auto s = find(root(a) + root(b))) sum_[static_cast<std::size_t>(a * total + b)] = *s;
    }
  }

  highest_ = num_positive_ - 1;
  for (int id = 0; id < num_positive_ - 1; ++id) {
    if (root(id).height() == root(highest_).height()) {
      throw ConsistencyError("highest root is not unique in " + type().label());
    }
  }
}

std::optional<RootId> RootSystem::find(const Root& r) const {
  auto it = index_.find(r.coords());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Rational RootSystem::inner_product(const Root& a, const Root& b) const {
  Rational total(0);
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b[j] == 0) continue;
      total += Rational(a[i] * b[j]) * gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return total;
}

int RootSystem::cartan_integer(RootId b, RootId a) const {
  const Rational v = Rational(2) * inner_product(b, a) / length2(a);
  if (v.get_den() != 1) throw ConsistencyError("non-integral Cartan integer");
  return static_cast<int>(to_integer(v));
}

RootString RootSystem::root_string(RootId a, RootId b) const {
  if (a == b || a == negate(b)) throw InvalidInput("root string through +-a is degenerate");
  RootString s;
  for (Root r = root(b) - root(a); find(r); r = r - root(a)) ++s.p;
  for (Root r = root(b) + root(a); find(r); r = r + root(a)) ++s.q;
  return s;
}

RootSystem build_root_system(Family family, int rank) {
  if (!is_valid_type(family, rank)) {
    throw InvalidInput("invalid simple type " + SimpleType{family, rank}.label());
  }
  return RootSystem(family, rank);
}

// ---------------------------------------------------------------------------
// Subsystem helpers

int span_rank(const RootSystem& rs, const RootSet& roots) {
  std::vector<std::vector<Rational>> rows;
  rows.reserve(roots.size());
  for (RootId id : roots) {
    std::vector<Rational> row;
    for (int c : rs.root(id).coords()) row.emplace_back(c);
    rows.push_back(std::move(row));
  }
  int rank = 0;
  const int cols = rs.rank();
  for (int col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [col](const auto& r) { return r[static_cast<std::size_t>(col)] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      const Rational f = rows[r][static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= f * prow[k];
    }
    ++rank;
  }
  return rank;
}

RootSet simple_roots_of(const RootSystem& rs, const RootSet& subsystem) {
  RootSet positive;
  for (RootId id : subsystem) {
    if (rs.is_positive(id)) positive.push_back(id);
  }
  std::vector<char> decomposable(static_cast<std::size_t>(rs.size()), 0);
  for (RootId a : positive) {
    for (RootId b : positive) {
      if (auto s = rs.sum(a, b)) decomposable[static_cast<std::size_t>(*s)] = 1;
    }
  }
  RootSet simple;
  for (RootId id : positive) {
    if (!decomposable[static_cast<std::size_t>(id)]) simple.push_back(id);
  }
  return simple;
}

bool is_closed(const RootSystem& rs, const RootSet& roots) {
  std::vector<char> member(static_cast<std::size_t>(rs.size()), 0);
  for (RootId id : roots) member[static_cast<std::size_t>(id)] = 1;
  for (RootId a : roots) {
    for (RootId b : roots) {
      auto s = rs.sum(a, b);
      if (s && !member[static_cast<std::size_t>(*s)]) return false;
    }
  }
  return true;
}

std::string format_roots(const RootSystem& rs, const RootSet& roots) {
  std::string out = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out += ", ";
    out += rs.root(roots[i]).to_string();
  }
  return out + "}";
}

}  // namespace flagsym
