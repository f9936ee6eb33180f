#include "flagsym/oracle.hpp"

namespace flagsym {

PairingValue pairing(const FlagData& f, const KahlerParam& xi, const ChevalleyTable& t, RootId d) {
  const Rational value = Rational(epsilon(f, d)) * eval_root(f, xi, d) * t.b(d);
  const RootId minus = f.rs().negate(d);
  const Rational mirrored = Rational(epsilon(f, minus)) * eval_root(f, xi, minus) * t.b(minus);
  if (value != mirrored) throw ConsistencyError("pairing is not symmetric under d -> -d");
  return {value};
}

std::string TransvectionWitness::describe(const RootSystem& rs) const {
  return "alpha=" + rs.root(alpha).to_string() + " beta=" + rs.root(beta).to_string() +
         " gamma=" + rs.root(gamma).to_string() + " xi=" + to_string(xi) + " residual=" + to_string(residual);
}

std::optional<TransvectionWitness> transvection_witness(const FlagData& f, const KahlerParam& xi,
                                                        const ChevalleyTable& t, RootId a) {
  const RootSystem& rs = f.rs();
  if (!f.in_m_plus(a)) throw InvalidInput("transvection check needs a root of R_m^+");
  const RootId minus_a = rs.negate(a);
  const Rational ra = pairing(f, xi, t, a).value;
  for (RootId beta : f.r_m()) {
    auto gamma = rs.sum(minus_a, rs.negate(beta));
    if (!gamma || !f.in_m(*gamma)) continue;
    const RootId g = *gamma;
    const Rational sum = Rational(t.n(beta, g)) * ra + Rational(t.n(a, g)) * pairing(f, xi, t, beta).value +
                         Rational(t.n(beta, a)) * pairing(f, xi, t, g).value;
    if (sum != 0) return TransvectionWitness{a, beta, g, sum, xi};
  }
  return std::nullopt;
}

bool transvection_check(const FlagData& f, const KahlerParam& xi, const ChevalleyTable& t, RootId a) {
  return !transvection_witness(f, xi, t, a);
}

bool transvection_check_shortcut(const FlagData& f, const KahlerParam& xi, RootId a) {
  const RootSystem& rs = f.rs();
  if (!f.in_m_plus(a)) throw InvalidInput("transvection check needs a root of R_m^+");
  const RootId minus_a = rs.negate(a);
  for (RootId beta : f.r_m()) {
    auto gamma = rs.sum(minus_a, rs.negate(beta));
    if (!gamma || !f.in_m(*gamma)) continue;
    const Rational lhs = Rational(1 + epsilon(f, *gamma)) * eval_root(f, xi, *gamma) +
                         Rational(1 + epsilon(f, beta)) * eval_root(f, xi, beta);
    if (lhs != 0) return false;
  }
  return true;
}

RootSet transvection_set(const FlagData& f, const KahlerParam& xi, const ChevalleyTable& t) {
  RootSet out;
  for (RootId a : f.r_m_plus()) {
    if (transvection_check(f, xi, t, a)) out.push_back(a);
  }
  return out;
}

RootSet transvection_set_shortcut(const FlagData& f, const KahlerParam& xi) {
  RootSet out;
  for (RootId a : f.r_m_plus()) {
    if (transvection_check_shortcut(f, xi, a)) out.push_back(a);
  }
  return out;
}

}  // namespace flagsym
