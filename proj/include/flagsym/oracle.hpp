#pragma once

#include <optional>
#include <string>

#include "flagsym/chevalley.hpp"
#include "flagsym/flag.hpp"

namespace flagsym {

/// r(d) with <E_d, E_-d> = -i r(d) for the Kahler metric of xi. The factor -i
/// is common to every pairing and is dropped.
struct PairingValue {
  Rational value;
};

/// eps_d * d(xi) * b(d). Throws InvalidInput for roots of h.
PairingValue pairing(const FlagData& f, const KahlerParam& xi, const ChevalleyTable& t, RootId d);

/// A decomposition -a = beta + gamma that violates the transvection condition.
struct TransvectionWitness {
  RootId alpha;
  RootId beta;
  RootId gamma;
  Rational residual;  // value of the offending sum
  KahlerParam xi;

  std::string describe(const RootSystem& rs) const;
};

/// First violating decomposition of the Levi-Civita condition for E_a, using
/// structure constants: n(b,c) r(a) + n(a,c) r(b) + n(b,a) r(c) over all
/// b, c in R_m with b + c = -a. Exact, no tolerance.
std::optional<TransvectionWitness> transvection_witness(const FlagData& f, const KahlerParam& xi,
                                                        const ChevalleyTable& t, RootId a);

/// E_a (a in R_m^+) is a transvection for the metric of xi.
bool transvection_check(const FlagData& f, const KahlerParam& xi, const ChevalleyTable& t, RootId a);

/// Same condition in reduced form: ((1 + eps_c) c + (1 + eps_b) b)(xi) = 0
/// for every decomposition -a = b + c in R_m. No structure constants.
bool transvection_check_shortcut(const FlagData& f, const KahlerParam& xi, RootId a);

RootSet transvection_set(const FlagData& f, const KahlerParam& xi, const ChevalleyTable& t);
RootSet transvection_set_shortcut(const FlagData& f, const KahlerParam& xi);

}  // namespace flagsym
