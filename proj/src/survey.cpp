#include "flagsym/survey.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "flagsym/oracle.hpp"

namespace flagsym {

std::optional<ExceptionTag> onishchik_exception(Family family, int rank, const std::vector<int>& painted) {
  auto is = [&](std::initializer_list<int> nodes) { return painted == std::vector<int>(nodes); };
  if (family == Family::C && rank >= 3 && is({1})) return ExceptionTag::A;
  if (family == Family::B && rank == 2 && is({2})) return ExceptionTag::A;
  if (family == Family::B && rank >= 3 && painted == std::vector<int>{rank}) return ExceptionTag::B;
  if (family == Family::G && is({2})) return ExceptionTag::C;
  return std::nullopt;
}

int dim_g(Family family, int rank) {
  if (!is_valid_type(family, rank)) throw InvalidInput("invalid simple type " + SimpleType{family, rank}.label());
  const int n = rank;
  switch (family) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::E: return n == 6 ? 78 : n == 7 ? 133 : 248;
    case Family::F: return 52;
    case Family::G: return 14;
  }
  return 0;
}

std::string EnumerationEntry::spec() const {
  std::string out = type.label() + ":{";
  for (std::size_t i = 0; i < painted.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(painted[i]);
  }
  return out + "}";
}

std::vector<KahlerParam> kahler_sample(const FlagData& f, std::uint64_t seed, int count) {
  std::vector<KahlerParam> out;
  for (int k = 0; k < count; ++k) {
    out.push_back(random_kahler_param(f, seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(k)));
  }
  return out;
}

EnumerationEntry analyze_painting(const PaintedDiagram& pd, const ChevalleyTable& t,
                                  const std::vector<KahlerParam>& xis) {
  const RootSystem& rs = *pd.rs;
  const FlagData f = make_flag(pd);

  EnumerationEntry e;
  e.type = rs.type();
  e.painted = pd.painted;
  e.dim_g = dim_g(rs.family(), rs.rank());
  e.dim_m = f.dim();
  e.symmetric = is_symmetric_coset(f);
  e.exception = onishchik_exception(rs.family(), rs.rank(), pd.painted);
  e.xi_sample = xis;

  const RootSet p_plus = symmetry_roots(f);
  e.index = 2 * static_cast<int>(p_plus.size());
  e.coindex = e.dim_m - e.index;
  for (RootId a : p_plus) e.symmetry_roots.push_back(rs.root(a));

  if (!std::binary_search(p_plus.begin(), p_plus.end(), rs.highest())) {
    e.failures.push_back("highest root is not a symmetry root");
  }
  if (e.symmetric != (e.coindex == 0)) e.failures.push_back("coindex 0 does not match the symmetric-coset test");

  // Four routes to R_p^+ must agree for every xi.
  e.checks.oracle_agree = true;
  RootSet center;
  try {
    center = center_of_nilradical(f);
  } catch (const ConsistencyError& err) {
    e.failures.push_back(err.what());
    e.checks.oracle_agree = false;
  }
  if (center != p_plus) {
    e.checks.oracle_agree = false;
    e.failures.push_back("center of nilradical " + format_roots(rs, center) + " != symmetry roots " +
                         format_roots(rs, p_plus));
  }
  for (const auto& xi : xis) {
    const RootSet full = transvection_set(f, xi, t);
    const RootSet shortcut = transvection_set_shortcut(f, xi);
    if (full != p_plus || shortcut != p_plus) {
      e.checks.oracle_agree = false;
      std::string what = "transvections at xi=" + to_string(xi) + ": oracle " + format_roots(rs, full) +
                         ", shortcut " + format_roots(rs, shortcut) + ", combinatorial " + format_roots(rs, p_plus);
      for (RootId a : p_plus) {
        if (auto w = transvection_witness(f, xi, t, a)) what += "; witness " + w->describe(rs);
      }
      e.failures.push_back(what);
    }
  }

  try {
    e.leaf = leaf_pair(f);
  } catch (const ConsistencyError& err) {
    e.leaf_error = err.what();
    e.failures.push_back(err.what());
  }

  const Diagram via_diagram = leaf_via_diagram(pd);
  try {
    e.leaf_diagram = classify_connected(via_diagram).label();
  } catch (const InvalidInput& err) {
    e.failures.push_back(std::string("extended-diagram leaf is not of finite type: ") + err.what());
  }
  if (e.leaf) {
    const RootSystem u = build_root_system(e.leaf->u_type.family, e.leaf->u_type.rank);
    e.checks.diagram_agree = isomorphic(via_diagram, dynkin_diagram(u));
    if (!e.checks.diagram_agree) {
      e.failures.push_back("extended-diagram leaf " + e.leaf_diagram + " != leaf algebra " + e.leaf->u_type.label());
    }
  }

  try {
    h_prime(f);
    e.checks.hprime_closed = true;
  } catch (const ConsistencyError& err) {
    e.failures.push_back(err.what());
  }
  e.checks.kprime_commutes = k_prime_check(f);
  if (!e.checks.kprime_commutes) e.failures.push_back("[k', p] != 0 at root level");
  return e;
}

std::vector<std::vector<int>> all_paintings(const RootSystem& rs, bool dedup_automorphisms) {
  const int n = rs.rank();
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> painted;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) painted.push_back(i + 1);
    }
    out.push_back(std::move(painted));
  }
  std::sort(out.begin(), out.end());
  if (!dedup_automorphisms) return out;

  const auto autos = diagram_automorphisms(rs);
  std::vector<std::vector<int>> kept;
  for (const auto& painted : out) {
    bool least = true;
    for (const auto& perm : autos) {
      std::vector<int> image;
      for (int node : painted) image.push_back(perm[static_cast<std::size_t>(node - 1)]);
      std::sort(image.begin(), image.end());
      if (image < painted) {
        least = false;
        break;
      }
    }
    if (least) kept.push_back(painted);
  }
  return kept;
}

EnumerationReport enumerate(const EnumerationOptions& options) {
  if (options.max_rank < 1 || options.max_rank > kMaxEnumerationRank) {
    throw InvalidInput("max rank must lie in [1, " + std::to_string(kMaxEnumerationRank) + "]");
  }
  if (options.xi_samples < 1) throw InvalidInput("need at least one xi sample");
  std::vector<Family> families = options.families;
  if (families.empty()) families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  std::sort(families.begin(), families.end(),
            [](Family a, Family b) { return to_char(a) < to_char(b); });
  families.erase(std::unique(families.begin(), families.end()), families.end());

  EnumerationReport report;
  for (Family family : families) {
    for (int rank = 1; rank <= options.max_rank; ++rank) {
      if (!is_valid_type(family, rank)) continue;
      auto rs = std::make_shared<const RootSystem>(build_root_system(family, rank));
      const ChevalleyTable table = build_constants(*rs);
      for (auto& painted : all_paintings(*rs, options.dedup_automorphisms)) {
        const PaintedDiagram pd = make_painted(rs, std::move(painted));
        const auto xis = kahler_sample(make_flag(pd), options.seed, options.xi_samples);
        report.entries.push_back(analyze_painting(pd, table, xis));
      }
    }
  }

  auto& s = report.summary;
  for (const auto& e : report.entries) {
    ++s.entries;
    if (e.symmetric) ++s.symmetric;
    if (e.exception) ++s.exceptions;
    const std::pair<bool, const char*> checks[] = {{e.checks.oracle_agree, "oracle_agree"},
                                                   {e.checks.diagram_agree, "diagram_agree"},
                                                   {e.checks.hprime_closed, "hprime_closed"},
                                                   {e.checks.kprime_commutes, "kprime_commutes"},
                                                   {e.leaf.has_value(), "leaf_pair"}};
    for (const auto& [ok, name] : checks) {
      if (!ok) s.failed_checks.push_back(e.spec() + ": " + name);
    }
  }
  return report;
}

namespace {

bool is_su4_special(const EnumerationEntry& e) {
  return e.type == SimpleType{Family::A, 3} &&
         (e.painted == std::vector<int>{1, 2} || e.painted == std::vector<int>{2, 3});
}

}  // namespace

VerificationResult verify_theorem(const EnumerationReport& report) {
  VerificationResult result;
  auto fail = [&](const EnumerationEntry& e, std::string check, std::string detail) {
    result.violations.push_back({e.spec(), std::move(check), std::move(detail)});
  };

  for (const auto& e : report.entries) {
    if (e.exception) continue;

    if (!e.checks.hprime_closed) fail(e, "hprime_closed", "h + p is not a subalgebra");
    if (!e.checks.kprime_commutes) fail(e, "kprime_commutes", "[k', p] != 0");
    if (!e.checks.diagram_agree) fail(e, "diagram_agree", "leaf types disagree: diagram " + e.leaf_diagram);
    if (e.symmetric != (e.coindex == 0)) fail(e, "coindex", "coindex 0 does not match symmetric coset");
    if (e.symmetric) continue;

    if (!e.leaf) fail(e, "hermitian_leaf", e.leaf_error);
    if (!e.checks.oracle_agree) {
      fail(e, "oracle_agree", e.failures.empty() ? std::string("transvection sets disagree") : e.failures.front());
    }
    const int k = e.coindex;
    if (k < 6) fail(e, "coindex>=6", "k = " + std::to_string(k));
    if (2 * e.dim_g > k * (k - 1)) {
      fail(e, "dim_g<=k(k-1)/2",
           "dim g = " + std::to_string(e.dim_g) + " > " + std::to_string(k * (k - 1) / 2) + " (k = " +
               std::to_string(k) + ")");
    }
    if (k == 6 && !is_su4_special(e)) fail(e, "k=6_only_su4", "k = 6 outside A3 painted {1,2} or {2,3}");
    if (is_su4_special(e) && k != 6) fail(e, "k=6_only_su4", "expected k = 6, got " + std::to_string(k));
  }
  result.passed = result.violations.empty();
  return result;
}

}  // namespace flagsym
