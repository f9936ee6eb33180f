#include "flagsym/report_io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "flagsym/diagram.hpp"

namespace flagsym {

namespace {

Json leaf_json(const EnumerationEntry& e) {
  if (!e.leaf) return nullptr;
  Json k = Json::array();
  for (const auto& t : e.leaf->k_semisimple_type) k.push_back(t.label());
  return Json{{"u", e.leaf->u_type.label()}, {"k_factors", k}, {"name", e.leaf->name}};
}

Json exception_json(const EnumerationEntry& e) {
  if (!e.exception) return nullptr;
  return std::string(1, to_char(*e.exception));
}

}  // namespace

Json to_json(const EnumerationEntry& e) {
  Json j;
  j["family"] = std::string(1, to_char(e.type.family));
  j["rank"] = e.type.rank;
  j["painted"] = e.painted;
  j["dim_g"] = e.dim_g;
  j["dim_M"] = e.dim_m;
  j["symmetric"] = e.symmetric;
  j["exception"] = exception_json(e);
  j["index"] = e.index;
  j["coindex"] = e.coindex;
  j["leaf"] = leaf_json(e);
  j["checks"] = Json{{"oracle_agree", e.checks.oracle_agree},
                     {"diagram_agree", e.checks.diagram_agree},
                     {"hprime_closed", e.checks.hprime_closed},
                     {"kprime_commutes", e.checks.kprime_commutes}};
  return j;
}

Json to_detailed_json(const EnumerationEntry& e) {
  Json j;
  j["spec"] = e.spec();
  const Json base = to_json(e);
  for (const auto& [key, value] : base.items()) j[key] = value;
  Json roots = Json::array();
  for (const auto& r : e.symmetry_roots) roots.push_back(r.to_string());
  j["symmetry_roots"] = roots;
  if (e.leaf) {
    j["leaf"]["family"] = e.leaf->family;
    j["leaf"]["k_center_dim"] = e.leaf->k_center_dim;
    j["leaf"]["dim_u"] = e.leaf->dim_u();
    j["leaf"]["dim_k"] = e.leaf->dim_k();
  }
  j["leaf_via_diagram"] = e.leaf_diagram;
  Json xis = Json::array();
  for (const auto& xi : e.xi_sample) {
    Json one = Json::array();
    for (const auto& [node, c] : xi.coeffs) one.push_back(to_string(c));
    xis.push_back(one);
  }
  j["xi"] = xis;
  j["failures"] = e.failures;
  return j;
}

Json to_json(const EnumerationReport& report) {
  Json entries = Json::array();
  for (const auto& e : report.entries) entries.push_back(to_json(e));
  Json summary{{"entries", report.summary.entries},
               {"symmetric", report.summary.symmetric},
               {"exceptions", report.summary.exceptions},
               {"failed_checks", report.summary.failed_checks}};
  return Json{{"entries", entries}, {"summary", summary}};
}

Json to_json(const VerificationResult& result) {
  Json list = Json::array();
  for (const auto& v : result.violations) {
    list.push_back(Json{{"entry", v.entry}, {"check", v.check}, {"detail", v.detail}});
  }
  return Json{{"passed", result.passed}, {"violations", list}};
}

std::string describe(const EnumerationEntry& e) {
  std::ostringstream os;
  os << e.spec() << "\n";
  os << "  dim g = " << e.dim_g << ", dim M = " << e.dim_m << (e.symmetric ? " (symmetric coset)" : "") << "\n";
  if (e.exception) os << "  Onishchik exception (" << to_char(*e.exception) << ")\n";
  os << "  index = " << e.index << ", coindex = " << e.coindex << "\n";
  os << "  symmetry roots:";
  for (const auto& r : e.symmetry_roots) os << " " << r.to_string();
  os << "\n";
  if (e.leaf) {
    os << "  leaf: u = " << e.leaf->u_type.label() << ", k = ";
    for (const auto& t : e.leaf->k_semisimple_type) os << t.label() << " + ";
    os << "T" << e.leaf->k_center_dim << ", " << e.leaf->name << " (" << e.leaf->family << ")\n";
  } else {
    os << "  leaf: unavailable: " << e.leaf_error << "\n";
  }
  os << "  extended-diagram leaf: " << e.leaf_diagram << "\n";
  os << "  checks: oracle " << e.checks.oracle_agree << ", diagram " << e.checks.diagram_agree << ", h' closed "
     << e.checks.hprime_closed << ", [k',p]=0 " << e.checks.kprime_commutes << "\n";
  for (const auto& f : e.failures) os << "  failure: " << f << "\n";
  return os.str();
}

void write_dot_files(const PaintedDiagram& pd, const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::string stem = pd.rs->type().label() + "_";
  for (std::size_t i = 0; i < pd.painted.size(); ++i) {
    if (i) stem += "-";
    stem += std::to_string(pd.painted[i]);
  }
  const std::set<int> black(pd.painted.begin(), pd.painted.end());
  const auto base = std::filesystem::path(dir);
  std::ofstream(base / (stem + ".dot")) << to_dot(dynkin_diagram(*pd.rs), black, pd.to_string());
  std::ofstream(base / (stem + "_extended.dot"))
      << to_dot(extended_diagram(*pd.rs), black, pd.to_string() + " extended");
}

}  // namespace flagsym
