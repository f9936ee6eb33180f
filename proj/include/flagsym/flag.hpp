#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "flagsym/rootsys.hpp"

namespace flagsym {

/// Dynkin diagram of g with a nonempty set of black (painted) nodes. White
/// nodes generate the semisimple part of h; black nodes span the center c.
struct PaintedDiagram {
  std::shared_ptr<const RootSystem> rs;
  std::vector<int> painted;  // sorted, 1-based

  bool is_painted(int node) const;
  /// "A3:{2,3}"
  std::string to_string() const;
};

/// Validates the painting (nonempty, in range, no repeats) and sorts it.
PaintedDiagram make_painted(std::shared_ptr<const RootSystem> rs, std::vector<int> painted);

/// Parses "<Family><rank>:{i,j,...}", e.g. "A3:{2,3}" or "G2:{1}".
PaintedDiagram parse_painted(std::string_view text);

enum class Region : std::uint8_t { H, MPlus, MMinus };

/// Roots of R_m^+ sharing one restriction to the center.
struct TModule {
  std::vector<int> fingerprint;  // coefficients on the painted nodes
  RootSet roots;
};

/// Root-level description of the flag manifold G/H with its canonical
/// invariant ordering R_m^+ = R^+ cap R_m.
class FlagData {
 public:
  explicit FlagData(PaintedDiagram pd);

  const PaintedDiagram& painted() const { return pd_; }
  const RootSystem& rs() const { return *pd_.rs; }

  const RootSet& r_h() const { return r_h_; }
  const RootSet& r_m() const { return r_m_; }
  const RootSet& r_m_plus() const { return r_m_plus_; }
  const std::vector<TModule>& t_modules() const { return t_modules_; }
  int center_dim() const { return static_cast<int>(pd_.painted.size()); }
  /// Real dimension of M, |R_m|.
  int dim() const { return static_cast<int>(r_m_.size()); }

  Region region(RootId id) const { return region_[static_cast<std::size_t>(id)]; }
  bool in_h(RootId id) const { return region(id) == Region::H; }
  bool in_m(RootId id) const { return region(id) != Region::H; }
  bool in_m_plus(RootId id) const { return region(id) == Region::MPlus; }

 private:
  PaintedDiagram pd_;
  std::vector<Region> region_;
  RootSet r_h_, r_m_, r_m_plus_;
  std::vector<TModule> t_modules_;
};

FlagData make_flag(PaintedDiagram pd);

/// Element xi of the Weyl chamber in c, given by its pairing with each
/// painted simple root. Every coefficient is strictly positive.
struct KahlerParam {
  std::map<int, Rational> coeffs;  // painted node -> a_node(xi)
};

/// Checks one positive coefficient per painted node.
KahlerParam make_kahler_param(const FlagData& f, const std::vector<Rational>& values);

/// Deterministic in seed; coefficients lie in (0, 10].
KahlerParam random_kahler_param(const FlagData& f, std::uint64_t seed);

/// a(xi).
Rational eval_root(const FlagData& f, const KahlerParam& xi, RootId a);

/// +1 on R_m^+, -1 on R_m^-. Throws InvalidInput for roots of h.
int epsilon(const FlagData& f, RootId a);

/// [m, m] in h, i.e. no two roots of R_m^+ sum to a root.
bool is_symmetric_coset(const FlagData& f);

std::string to_string(const KahlerParam& xi);

}  // namespace flagsym
