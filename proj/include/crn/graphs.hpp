#ifndef CRN_GRAPHS_HPP
#define CRN_GRAPHS_HPP

#include <optional>
#include <string>
#include <vector>

#include "crn/model.hpp"
#include "crn/rational.hpp"

namespace crn {

// Species vertices are 0..n-1, reaction vertices n..n+m-1, in one id space.

/// Undirected bipartite species-reaction graph. An edge {S_i, R_j} exists
/// iff N_ij != 0 and carries the label -sign(N_ij).
struct SRGraph {
  int n_species = 0;
  int n_reactions = 0;
  std::vector<std::string> species_names;
  std::vector<std::string> reaction_names;
  // adj[v] = (neighbor, label) sorted by neighbor; label in {+1, -1}
  std::vector<std::vector<std::pair<int, int>>> adj;

  int vertex_count() const { return n_species + n_reactions; }
  bool is_species(int v) const { return v < n_species; }
  int reaction_vertex(int j) const { return n_species + j; }
  const std::string& vertex_name(int v) const;
  std::optional<int> edge_label(int u, int v) const;
  int edge_count() const;
};

/// Directed variant. Species -> reaction edges encode rate dependence:
/// for an irreversible reaction only its reactants point at it, for a
/// reversible reaction every participating species does. Reaction ->
/// species edges exist for every participating species.
struct DirectedSRGraph {
  int n_species = 0;
  int n_reactions = 0;
  std::vector<std::string> species_names;
  std::vector<std::string> reaction_names;
  std::vector<std::vector<std::pair<int, int>>> out;  // (head, label)

  int vertex_count() const { return n_species + n_reactions; }
  bool is_species(int v) const { return v < n_species; }
  int reaction_vertex(int j) const { return n_species + j; }
  const std::string& vertex_name(int v) const;
  bool has_edge(int tail, int head) const;
};

/// Sign set attached to an R-graph edge; never empty on a stored edge.
struct RLabelSet {
  bool plus = false;
  bool minus = false;

  bool both() const { return plus && minus; }
  bool singleton() const { return plus != minus; }
  int the_label() const { return plus ? 1 : -1; }  // only when singleton
  std::string text() const;                        // "+", "-", or "+,-"
};

/// Reaction-reaction projection: an edge joins two reactions sharing a
/// species; its label set collects -sign(N_ij N_ik) over shared species.
struct RGraph {
  int n_reactions = 0;
  std::vector<std::string> reaction_names;
  std::vector<std::vector<std::pair<int, RLabelSet>>> adj;  // sorted

  struct Edge {
    int a, b;  // a < b
    RLabelSet labels;
  };
  std::vector<Edge> edges;  // sorted by (a, b)

  std::optional<RLabelSet> edge_labels(int a, int b) const;
};

/// Orthant sign pattern over reactions, one entry in {+1, -1} each.
using SignPattern = std::vector<int>;

enum class LoopParity { ELoop, OLoop, OddRLoop };

/// A simple loop as a closed vertex sequence (front() == back()), plus its
/// parity verdict. SR loops alternate species/reaction vertices; R-graph
/// witnesses hold reaction vertices only.
struct LoopWitness {
  std::vector<int> vertices;
  LoopParity parity = LoopParity::ELoop;
};

SRGraph build_sr_graph(const ReactionNetwork& net, const RationalMatrix& stoich);
DirectedSRGraph build_directed_sr_graph(const ReactionNetwork& net,
                                        const RationalMatrix& stoich);
RGraph build_r_graph(const ReactionNetwork& net, const RationalMatrix& stoich);

/// Undirected connectivity over every vertex; empty and single-vertex
/// graphs count as connected.
bool graph_connected(const SRGraph& g);
bool graph_connected(const RGraph& g);
int component_count(const RGraph& g);

/// Every ordered pair of reaction vertices joined by a directed path.
bool r_strongly_connected(const DirectedSRGraph& g);

/// Positive loop property: every simple loop of the R-graph carries an
/// even number of negative labels for every label choice. A {+,-} edge
/// fails outright (it always induces an odd 4-loop in the SR-graph);
/// otherwise a signed BFS balance check runs per component.
struct PlpResult {
  bool holds = false;
  std::optional<LoopWitness> witness;  // odd loop, reaction vertices
};

PlpResult positive_loop_property(const RGraph& rg);

/// Per connected component: the smallest reaction index gets +1 and signs
/// propagate as products of edge labels. Requires the positive loop
/// property; throws std::invalid_argument otherwise.
SignPattern sign_pattern(const RGraph& rg);

/// Classifies a simple SR loop of length 2*lambda: e-loop iff the product
/// of its edge labels equals (-1)^lambda. Throws std::invalid_argument if
/// the sequence is not a simple loop of the graph.
LoopParity classify_loop(const SRGraph& sr, const std::vector<int>& loop);

/// Exhaustive simple-loop enumeration, one witness per loop up to
/// rotation and reflection. Throws std::invalid_argument when the graph
/// has more than max_vertices vertices.
std::vector<LoopWitness> enumerate_simple_loops(const SRGraph& sr,
                                                int max_vertices = 24);

/// True when the closed undirected loop can be traversed as a directed
/// cycle of `dsr` in at least one of its two orientations.
bool loop_is_directed(const DirectedSRGraph& dsr,
                      const std::vector<int>& loop);

std::string export_dot(const SRGraph& g);
std::string export_dot(const DirectedSRGraph& g);
std::string export_dot(const RGraph& g);

}  // namespace crn

#endif
