#include "flagsym/flag.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <regex>

namespace flagsym {

bool PaintedDiagram::is_painted(int node) const {
  return std::binary_search(painted.begin(), painted.end(), node);
}

std::string PaintedDiagram::to_string() const {
  std::string out = rs->type().label() + ":{";
  for (std::size_t i = 0; i < painted.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(painted[i]);
  }
  return out + "}";
}

PaintedDiagram make_painted(std::shared_ptr<const RootSystem> rs, std::vector<int> painted) {
  if (!rs) throw InvalidInput("painted diagram without a root system");
  if (painted.empty()) throw InvalidInput("painting must contain at least one node");
  std::sort(painted.begin(), painted.end());
  if (std::adjacent_find(painted.begin(), painted.end()) != painted.end()) {
    throw InvalidInput("painted node listed twice");
  }
  if (painted.front() < 1 || painted.back() > rs->rank()) {
    throw InvalidInput("painted node out of range for " + rs->type().label());
  }
  return {std::move(rs), std::move(painted)};
}

PaintedDiagram parse_painted(std::string_view text) {
  static const std::regex grammar(R"(^\s*([A-G])(\d+)\s*:\s*\{([0-9,\s]*)\}\s*$)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, grammar)) {
    throw InvalidInput("malformed painted diagram '" + std::string(text) + "' (expected e.g. A3:{2,3})");
  }
  const Family family = *family_from_char(m[1].str()[0]);
  const int rank = std::stoi(m[2].str());
  if (!is_valid_type(family, rank)) {
    throw InvalidInput("invalid simple type " + SimpleType{family, rank}.label());
  }
  std::vector<int> painted;
  const std::string list = m[3].str();
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = std::min(list.find(',', start), list.size());
    std::string item = list.substr(start, comma - start);
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (!item.empty()) painted.push_back(std::stoi(item));
    else if (comma < list.size()) throw InvalidInput("empty entry in painted set");
    start = comma + 1;
  }
  return make_painted(std::make_shared<const RootSystem>(build_root_system(family, rank)), std::move(painted));
}

FlagData::FlagData(PaintedDiagram pd) : pd_(std::move(pd)) {
  const RootSystem& rs = *pd_.rs;
  region_.resize(static_cast<std::size_t>(rs.size()));
  std::map<std::vector<int>, RootSet> modules;
  for (RootId id = 0; id < rs.size(); ++id) {
    std::vector<int> fp;
    for (int node : pd_.painted) fp.push_back(rs.root(id)[node - 1]);
    const bool vanishes = std::all_of(fp.begin(), fp.end(), [](int c) { return c == 0; });
    if (vanishes) {
      region_[static_cast<std::size_t>(id)] = Region::H;
      r_h_.push_back(id);
      continue;
    }
    r_m_.push_back(id);
    if (rs.is_positive(id)) {
      region_[static_cast<std::size_t>(id)] = Region::MPlus;
      r_m_plus_.push_back(id);
      modules[fp].push_back(id);
    } else {
      region_[static_cast<std::size_t>(id)] = Region::MMinus;
    }
  }
  for (auto& [fp, roots] : modules) t_modules_.push_back({fp, std::move(roots)});
}

FlagData make_flag(PaintedDiagram pd) { return FlagData(std::move(pd)); }

KahlerParam make_kahler_param(const FlagData& f, const std::vector<Rational>& values) {
  const auto& painted = f.painted().painted;
  if (values.size() != painted.size()) {
    throw InvalidInput("xi needs " + std::to_string(painted.size()) + " coefficients, got " +
                       std::to_string(values.size()));
  }
  KahlerParam xi;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) throw InvalidInput("xi coefficients must be strictly positive");
    xi.coeffs[painted[i]] = values[i];
  }
  return xi;
}

KahlerParam random_kahler_param(const FlagData& f, std::uint64_t seed) {
  // Raw engine output only, so the sample is identical across standard libraries.
  std::mt19937_64 rng(seed);
  KahlerParam xi;
  for (int node : f.painted().painted) {
    const auto den = static_cast<std::int64_t>(1 + rng() % 12);
    const auto num = static_cast<std::int64_t>(1 + rng() % static_cast<std::uint64_t>(10 * den));
    xi.coeffs[node] = make_rational(num, den);
  }
  return xi;
}

Rational eval_root(const FlagData& f, const KahlerParam& xi, RootId a) {
  const Root& r = f.rs().root(a);
  Rational total(0);
  for (const auto& [node, c] : xi.coeffs) total += Rational(r[node - 1]) * c;
  return total;
}

int epsilon(const FlagData& f, RootId a) {
  switch (f.region(a)) {
    case Region::MPlus: return 1;
    case Region::MMinus: return -1;
    case Region::H: break;
  }
  throw InvalidInput("epsilon is undefined on the isotropy root " + f.rs().root(a).to_string());
}

bool is_symmetric_coset(const FlagData& f) {
  const RootSystem& rs = f.rs();
  for (RootId a : f.r_m_plus()) {
    for (RootId b : f.r_m_plus()) {
      if (rs.sum_is_root(a, b)) return false;
    }
  }
  return true;
}

std::string to_string(const KahlerParam& xi) {
  std::string out = "(";
  bool first = true;
  for (const auto& [node, c] : xi.coeffs) {
    if (!first) out += ",";
    first = false;
    out += flagsym::to_string(c);
  }
  return out + ")";
}

}  // namespace flagsym
