#pragma once

#include <set>
#include <string>
#include <vector>

#include "flagsym/rootsys.hpp"

namespace flagsym {

/// Node label used for the extra node (-theta) of an extended diagram.
inline constexpr int kAffineNode = 0;

/// Arrow of a multiple bond, pointing at the shorter root.
enum class Arrow { None, ToA, ToB, Both };

struct DiagramEdge {
  int a = 0;
  int b = 0;
  int multiplicity = 1;
  Arrow arrow = Arrow::None;
};

/// Dynkin diagram. Nodes carry simple-root labels 1..n, plus kAffineNode in
/// extended form.
struct Diagram {
  std::vector<int> nodes;
  std::vector<DiagramEdge> edges;

  int size() const { return static_cast<int>(nodes.size()); }
  bool contains(int label) const;
};

Diagram dynkin_diagram(const RootSystem& rs);

/// Appends the node for -theta, bonded to each a_i by the Cartan integers of
/// the pair (-theta, a_i).
Diagram extended_diagram(const RootSystem& rs);

/// Diagram whose nodes are the given roots (labelled 1..k in order) and whose
/// bonds come from their Cartan integers.
Diagram diagram_of_roots(const RootSystem& rs, const RootSet& simple);

/// Removes the given labels and every incident edge.
Diagram remove_nodes(const Diagram& d, const std::set<int>& labels);

/// Connected component containing `label`.
Diagram component_of(const Diagram& d, int label);

std::vector<Diagram> components(const Diagram& d);

/// Identifies a connected finite-type diagram. Throws InvalidInput otherwise.
SimpleType classify_connected(const Diagram& d);

/// Types of all components, sorted.
std::vector<SimpleType> classify(const Diagram& d);

/// Label-independent canonical encoding; equal iff the diagrams are isomorphic
/// (bond multiplicities and arrow directions respected).
std::vector<int> canonical_form(const Diagram& d);

bool isomorphic(const Diagram& a, const Diagram& b);

/// All node permutations of the Dynkin diagram of rs preserving its Cartan
/// matrix; each entry maps 1-based node i to perm[i-1].
std::vector<std::vector<int>> diagram_automorphisms(const RootSystem& rs);

/// Graphviz rendering; nodes in `black` are filled.
std::string to_dot(const Diagram& d, const std::set<int>& black, const std::string& name);

std::string format_types(const std::vector<SimpleType>& types);

}  // namespace flagsym
