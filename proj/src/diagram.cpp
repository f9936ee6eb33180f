#include "flagsym/diagram.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace flagsym {

bool Diagram::contains(int label) const {
  return std::find(nodes.begin(), nodes.end(), label) != nodes.end();
}

namespace {

DiagramEdge make_edge(int a, int b, int c_ab, int c_ba) {
  const int x = std::abs(c_ab);
  const int y = std::abs(c_ba);
  DiagramEdge e{a, b, std::max(x, y), Arrow::None};
  if (x > y) e.arrow = Arrow::ToB;
  else if (y > x) e.arrow = Arrow::ToA;
  else if (x > 1) e.arrow = Arrow::Both;
  return e;
}

// |generalized Cartan entries| indexed by node position; w[i][j] is large when node j is short.
using Weights = std::vector<std::vector<int>>;

Weights weights(const Diagram& d) {
  const auto n = static_cast<std::size_t>(d.size());
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[d.nodes[i]] = i;
  Weights w(n, std::vector<int>(n, 0));
  for (const auto& e : d.edges) {
    const auto a = pos.at(e.a);
    const auto b = pos.at(e.b);
    int ab = 1;
    int ba = 1;
    switch (e.arrow) {
      case Arrow::None: ab = ba = e.multiplicity; break;
      case Arrow::ToB: ab = e.multiplicity; break;
      case Arrow::ToA: ba = e.multiplicity; break;
      case Arrow::Both: ab = ba = e.multiplicity; break;
    }
    w[a][b] = ab;
    w[b][a] = ba;
  }
  return w;
}

std::vector<int> degrees(const Weights& w) {
  std::vector<int> deg(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) deg[i] += (i != j && w[i][j] > 0) ? 1 : 0;
  }
  return deg;
}

// Colour refinement with canonically numbered colour classes.
std::vector<int> refine_colours(const Weights& w) {
  const std::size_t n = w.size();
  std::vector<int> colour(n, 0);
  std::size_t classes = 1;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::array<int, 3>> nbrs;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && w[i][j] > 0) nbrs.push_back({w[i][j], w[j][i], colour[j]});
      }
      std::sort(nbrs.begin(), nbrs.end());
      sig[i].push_back(colour[i]);
      for (const auto& t : nbrs) sig[i].insert(sig[i].end(), t.begin(), t.end());
    }
    std::vector<std::vector<int>> distinct(sig);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < n; ++i) {
      colour[i] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[i]) - distinct.begin());
    }
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return colour;
}

}  // namespace

Diagram dynkin_diagram(const RootSystem& rs) {
  Diagram d;
  const auto& c = rs.cartan();
  for (int i = 1; i <= rs.rank(); ++i) d.nodes.push_back(i);
  for (int i = 0; i < rs.rank(); ++i) {
    for (int j = i + 1; j < rs.rank(); ++j) {
      const int cij = c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const int cji = c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (cij != 0) d.edges.push_back(make_edge(i + 1, j + 1, cij, cji));
    }
  }
  return d;
}

Diagram extended_diagram(const RootSystem& rs) {
  Diagram d = dynkin_diagram(rs);
  d.nodes.insert(d.nodes.begin(), kAffineNode);
  const RootId low = rs.negate(rs.highest());
  for (int i = 1; i <= rs.rank(); ++i) {
    const RootId s = rs.simple(i);
    const int c0i = rs.cartan_integer(low, s);
    const int ci0 = rs.cartan_integer(s, low);
    if (c0i != 0) d.edges.push_back(make_edge(kAffineNode, i, c0i, ci0));
  }
  return d;
}

Diagram diagram_of_roots(const RootSystem& rs, const RootSet& simple) {
  Diagram d;
  const int k = static_cast<int>(simple.size());
  for (int i = 1; i <= k; ++i) d.nodes.push_back(i);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const RootId a = simple[static_cast<std::size_t>(i)];
      const RootId b = simple[static_cast<std::size_t>(j)];
      const int cab = rs.cartan_integer(a, b);
      if (cab != 0) d.edges.push_back(make_edge(i + 1, j + 1, cab, rs.cartan_integer(b, a)));
    }
  }
  return d;
}

Diagram remove_nodes(const Diagram& d, const std::set<int>& labels) {
  Diagram out;
  for (int v : d.nodes) {
    if (!labels.contains(v)) out.nodes.push_back(v);
  }
  for (const auto& e : d.edges) {
    if (!labels.contains(e.a) && !labels.contains(e.b)) out.edges.push_back(e);
  }
  return out;
}

Diagram component_of(const Diagram& d, int label) {
  if (!d.contains(label)) throw InvalidInput("diagram has no node " + std::to_string(label));
  std::set<int> reached{label};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& e : d.edges) {
      if (reached.contains(e.a) != reached.contains(e.b)) {
        reached.insert(e.a);
        reached.insert(e.b);
        grew = true;
      }
    }
  }
  Diagram out;
  for (int v : d.nodes) {
    if (reached.contains(v)) out.nodes.push_back(v);
  }
  for (const auto& e : d.edges) {
    if (reached.contains(e.a)) out.edges.push_back(e);
  }
  return out;
}

std::vector<Diagram> components(const Diagram& d) {
  std::vector<Diagram> out;
  std::set<int> done;
  for (int v : d.nodes) {
    if (done.contains(v)) continue;
    Diagram c = component_of(d, v);
    done.insert(c.nodes.begin(), c.nodes.end());
    out.push_back(std::move(c));
  }
  return out;
}

SimpleType classify_connected(const Diagram& d) {
  const int n = d.size();
  if (n == 0) throw InvalidInput("empty diagram");
  if (n == 1) return {Family::A, 1};
  const Weights w = weights(d);
  const auto deg = degrees(w);
  const auto un = static_cast<std::size_t>(n);
  if (static_cast<int>(d.edges.size()) != n - 1) throw InvalidInput("diagram is not a tree");

  int heavy = 0;
  std::size_t hu = 0, hv = 0;  // w[hu][hv] > 1, so hv is the short end of the multiple bond
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) {
      if (i == j || w[i][j] <= 1) continue;
      if (w[j][i] > 1) throw InvalidInput("not a finite-type diagram");
      ++heavy;
      hu = i;
      hv = j;
    }
  }
  const int max_deg = *std::max_element(deg.begin(), deg.end());
  if (heavy > 1) throw InvalidInput("more than one multiple bond");
  if (heavy == 1) {
    if (max_deg > 2) throw InvalidInput("branched diagram with a multiple bond");
    if (w[hu][hv] == 3) {
      if (n != 2) throw InvalidInput("triple bond outside G2");
      return {Family::G, 2};
    }
    if (n == 2) return {Family::B, 2};
    if (deg[hu] == 2 && deg[hv] == 2) {
      if (n != 4) throw InvalidInput("interior double bond outside F4");
      return {Family::F, 4};
    }
    return deg[hv] == 1 ? SimpleType{Family::B, n} : SimpleType{Family::C, n};
  }
  if (max_deg <= 2) return {Family::A, n};
  if (max_deg > 3 || std::count(deg.begin(), deg.end(), 3) != 1) {
    throw InvalidInput("not a finite-type diagram");
  }
  const auto branch = static_cast<std::size_t>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
  std::vector<int> arms;
  for (std::size_t start = 0; start < un; ++start) {
    if (w[branch][start] == 0 || start == branch) continue;
    int len = 1;
    std::size_t prev = branch, cur = start;
    for (;;) {
      std::size_t next = un;
      for (std::size_t j = 0; j < un; ++j) {
        if (j != cur && j != prev && w[cur][j] > 0) next = j;
      }
      if (next == un) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, n};
  throw InvalidInput("not a finite-type diagram");
}

std::vector<SimpleType> classify(const Diagram& d) {
  std::vector<SimpleType> out;
  for (const auto& c : components(d)) out.push_back(classify_connected(c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> canonical_form(const Diagram& d) {
  const Weights w = weights(d);
  const std::size_t n = w.size();
  const auto colour = refine_colours(w);

  std::vector<std::size_t> slots(n);  // slot k must hold a node of colour slot_colour[k]
  std::vector<int> slot_colour(colour);
  std::sort(slot_colour.begin(), slot_colour.end());

  std::vector<int> best;
  std::vector<std::size_t> order;
  std::vector<char> used(n, 0);
  std::function<void()> search = [&]() {
    if (order.size() == n) {
      std::vector<int> code;
      code.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) code.push_back(w[order[i]][order[j]]);
      }
      if (best.empty() || code < best) best = std::move(code);
      return;
    }
    const int want = slot_colour[order.size()];
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || colour[v] != want) continue;
      used[v] = 1;
      order.push_back(v);
      search();
      order.pop_back();
      used[v] = 0;
    }
  };
  search();

  std::vector<int> out{static_cast<int>(n)};
  out.insert(out.end(), slot_colour.begin(), slot_colour.end());
  out.insert(out.end(), best.begin(), best.end());
  return out;
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs) {
  const auto& c = rs.cartan();
  const auto n = static_cast<std::size_t>(rs.rank());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        ok = c[i][j] == c[static_cast<std::size_t>(perm[i])][static_cast<std::size_t>(perm[j])];
      }
    }
    if (ok) {
      std::vector<int> one_based(n);
      for (std::size_t i = 0; i < n; ++i) one_based[i] = perm[i] + 1;
      out.push_back(std::move(one_based));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string to_dot(const Diagram& d, const std::set<int>& black, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n  node [shape=circle, fixedsize=true, width=0.5];\n";
  for (int v : d.nodes) {
    os << "  n" << v << " [label=\"" << (v == kAffineNode ? std::string("-theta") : "a" + std::to_string(v))
       << "\"";
    if (black.contains(v)) os << ", style=filled, fillcolor=black, fontcolor=white";
    os << "];\n";
  }
  for (const auto& e : d.edges) {
    os << "  n" << e.a << " -- n" << e.b;
    if (e.multiplicity > 1) {
      std::string colour = "black";
      for (int k = 1; k < e.multiplicity; ++k) colour += ":black";
      os << " [color=\"" << colour << "\"";
      switch (e.arrow) {
        case Arrow::ToB: os << ", dir=forward"; break;
        case Arrow::ToA: os << ", dir=back"; break;
        case Arrow::Both: os << ", dir=both"; break;
        case Arrow::None: break;
      }
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string format_types(const std::vector<SimpleType>& types) {
  std::string out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) out += "+";
    out += types[i].label();
  }
  return out;
}

}  // namespace flagsym
