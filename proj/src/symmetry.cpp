#include "flagsym/symmetry.hpp"

#include <algorithm>

namespace flagsym {

char to_char(ExceptionTag tag) {
  switch (tag) {
    case ExceptionTag::A: return 'a';
    case ExceptionTag::B: return 'b';
    case ExceptionTag::C: return 'c';
  }
  return '?';
}

RootSet symmetry_roots(const FlagData& f) {
  const RootSystem& rs = f.rs();
  RootSet out;
  for (RootId a : f.r_m_plus()) {
    const bool isolated = std::none_of(f.r_m_plus().begin(), f.r_m_plus().end(),
                                       [&](RootId b) { return rs.sum_is_root(a, b); });
    if (isolated) out.push_back(a);
  }
  return out;
}

RootSet center_of_nilradical(const FlagData& f) {
  // [E_b, E_c] != 0 for b, c in R_m^+ exactly when the coordinate sum is a
  // root; both factors of such a bracket are then non-central.
  const RootSystem& rs = f.rs();
  const auto& plus = f.r_m_plus();
  std::vector<char> central(static_cast<std::size_t>(rs.size()), 0);
  for (RootId a : plus) central[static_cast<std::size_t>(a)] = 1;
  for (std::size_t i = 0; i < plus.size(); ++i) {
    for (std::size_t j = i; j < plus.size(); ++j) {
      if (rs.find(rs.root(plus[i]) + rs.root(plus[j]))) {
        central[static_cast<std::size_t>(plus[i])] = 0;
        central[static_cast<std::size_t>(plus[j])] = 0;
      }
    }
  }
  RootSet z;
  for (RootId a : plus) {
    if (central[static_cast<std::size_t>(a)]) z.push_back(a);
  }
  for (RootId a : z) {
    for (RootId b : z) {
      if (rs.find(rs.root(a) + rs.root(b))) throw ConsistencyError("center of the nilradical is not abelian");
    }
  }
  return z;
}

RootSet symmetric_isotropy_roots(const FlagData& f, const RootSet& p_plus) {
  const RootSystem& rs = f.rs();
  RootSet out;
  for (RootId a : p_plus) {
    for (RootId b : p_plus) {
      if (a == b) continue;
      if (auto d = rs.sum(a, rs.negate(b))) out.push_back(*d);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SimpleType> subsystem_types(const RootSystem& rs, const RootSet& subsystem) {
  if (subsystem.empty()) return {};
  return classify(diagram_of_roots(rs, simple_roots_of(rs, subsystem)));
}

std::optional<HermitianName> hermitian_pair_name(SimpleType u, const std::vector<SimpleType>& k) {
  const int n = u.rank;
  auto only = [&](SimpleType t) { return k.size() == 1 && k.front() == t; };
  // Small-rank coincidences: B1 = A1, D3 = A3.
  auto b_type = [](int r) { return r == 1 ? SimpleType{Family::A, 1} : SimpleType{Family::B, r}; };
  auto d_type = [](int r) { return r == 3 ? SimpleType{Family::A, 3} : SimpleType{Family::D, r}; };

  switch (u.family) {
    case Family::A: {
      if (k.size() > 2) return std::nullopt;
      int total = 0;
      for (const auto& t : k) {
        if (t.family != Family::A) return std::nullopt;
        total += t.rank;
      }
      if (total != n - 1) return std::nullopt;
      if (k.size() < 2) return HermitianName{"complex Grassmannian", "CP^" + std::to_string(n)};
      const int p = std::min(k[0].rank, k[1].rank) + 1;
      return HermitianName{"complex Grassmannian", "Gr(" + std::to_string(p) + "," + std::to_string(n + 1) + ")"};
    }
    case Family::B:
      if (only(b_type(n - 1))) return HermitianName{"odd quadric", "Q_" + std::to_string(2 * n - 1)};
      return std::nullopt;
    case Family::C:
      if (only({Family::A, n - 1})) {
        return HermitianName{"Lagrangian type", "Sp(" + std::to_string(n) + ")/U(" + std::to_string(n) + ")"};
      }
      return std::nullopt;
    case Family::D:
      if (only(d_type(n - 1))) return HermitianName{"even quadric", "Q_" + std::to_string(2 * n - 2)};
      if (only({Family::A, n - 1})) {
        return HermitianName{"orthogonal type",
                             "SO(" + std::to_string(2 * n) + ")/U(" + std::to_string(n) + ")"};
      }
      return std::nullopt;
    case Family::E:
      if (n == 6 && only({Family::D, 5})) return HermitianName{"E III", "E6/Spin(10)U(1)"};
      if (n == 7 && only({Family::E, 6})) return HermitianName{"E VII", "E7/E6U(1)"};
      return std::nullopt;
    case Family::F:
    case Family::G:
      return std::nullopt;
  }
  return std::nullopt;
}

LeafDescriptor leaf_pair(const FlagData& f) {
  const RootSystem& rs = f.rs();
  const std::string where = " for " + f.painted().to_string();
  const RootSet p_plus = symmetry_roots(f);

  LeafDescriptor leaf;
  leaf.r_k = symmetric_isotropy_roots(f, p_plus);
  for (RootId g : leaf.r_k) {
    if (!f.in_h(g)) throw ConsistencyError("[p,p] leaves h" + where);
  }
  leaf.r_u = leaf.r_k;
  for (RootId a : p_plus) {
    leaf.r_u.push_back(a);
    leaf.r_u.push_back(rs.negate(a));
  }
  std::sort(leaf.r_u.begin(), leaf.r_u.end());
  if (!is_closed(rs, leaf.r_u)) throw ConsistencyError("k + p is not a subalgebra" + where);

  leaf.toral_rank = span_rank(rs, p_plus);
  const auto u_types = subsystem_types(rs, leaf.r_u);
  if (u_types.size() != 1) throw ConsistencyError("leaf algebra u is not simple" + where);
  leaf.u_type = u_types.front();
  if (leaf.u_type.rank != leaf.toral_rank) throw ConsistencyError("rank(u) != rank(k)" + where);

  leaf.k_semisimple_type = subsystem_types(rs, leaf.r_k);
  leaf.k_center_dim = leaf.toral_rank - span_rank(rs, leaf.r_k);
  if (leaf.k_center_dim != 1) throw ConsistencyError("center of k is not one-dimensional" + where);

  // p irreducible under k: a single k-highest vector among the symmetry roots, namely theta.
  std::vector<char> in_p(static_cast<std::size_t>(rs.size()), 0);
  for (RootId a : p_plus) in_p[static_cast<std::size_t>(a)] = 1;
  RootSet highest;
  for (RootId a : p_plus) {
    const bool top = std::none_of(leaf.r_k.begin(), leaf.r_k.end(), [&](RootId g) {
      if (!rs.is_positive(g)) return false;
      auto s = rs.sum(a, g);
      return s && in_p[static_cast<std::size_t>(*s)];
    });
    if (top) highest.push_back(a);
  }
  if (highest.size() != 1 || highest.front() != rs.highest()) {
    throw ConsistencyError("p is not an irreducible k-module with highest weight theta" + where);
  }

  auto name = hermitian_pair_name(leaf.u_type, leaf.k_semisimple_type);
  if (!name) {
    throw ConsistencyError("(" + leaf.u_type.label() + ", " + format_types(leaf.k_semisimple_type) +
                           "+T1) is not an irreducible Hermitian symmetric pair" + where);
  }
  leaf.family = name->family;
  leaf.name = name->name;
  return leaf;
}

Diagram leaf_via_diagram(const PaintedDiagram& pd) {
  const Diagram extended = extended_diagram(*pd.rs);
  const std::set<int> black(pd.painted.begin(), pd.painted.end());
  return component_of(remove_nodes(extended, black), kAffineNode);
}

RootSet h_prime(const FlagData& f) {
  const RootSystem& rs = f.rs();
  RootSet out = f.r_h();
  for (RootId a : symmetry_roots(f)) {
    out.push_back(a);
    out.push_back(rs.negate(a));
  }
  std::sort(out.begin(), out.end());
  if (!is_closed(rs, out)) throw ConsistencyError("h + p is not a subalgebra for " + f.painted().to_string());
  return out;
}

bool k_prime_check(const FlagData& f) {
  const RootSystem& rs = f.rs();
  const RootSet p_plus = symmetry_roots(f);
  const RootSet r_k = symmetric_isotropy_roots(f, p_plus);
  for (RootId g : f.r_h()) {
    if (std::binary_search(r_k.begin(), r_k.end(), g)) continue;
    for (RootId a : p_plus) {
      if (rs.sum_is_root(g, a) || rs.sum_is_root(g, rs.negate(a))) return false;
    }
  }
  return true;
}

SymmetryReport symmetry_report(const FlagData& f) {
  SymmetryReport report{f, symmetry_roots(f), 0, 0, {}, {}, std::nullopt};
  if (center_of_nilradical(f) != report.r_p_plus) {
    throw ConsistencyError("symmetry roots differ from the center of the nilradical for " + f.painted().to_string());
  }
  if (!std::binary_search(report.r_p_plus.begin(), report.r_p_plus.end(), f.rs().highest())) {
    throw ConsistencyError("highest root is not a symmetry root for " + f.painted().to_string());
  }
  report.index = 2 * static_cast<int>(report.r_p_plus.size());
  report.coindex = f.dim() - report.index;
  report.leaf = leaf_pair(f);
  report.h_prime_roots = h_prime(f);
  return report;
}

}  // namespace flagsym
