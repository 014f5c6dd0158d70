#include "crn/graphs.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crn {

namespace {

std::vector<std::string> reaction_names_of(const ReactionNetwork& net) {
  std::vector<std::string> names;
  names.reserve(net.reactions.size());
  for (int j = 0; j < net.reaction_count(); ++j) {
    const std::string& label = net.reactions[static_cast<std::size_t>(j)].label;
    names.push_back(label.empty() ? "R" + std::to_string(j + 1) : label);
  }
  return names;
}

void sort_adjacency(std::vector<std::vector<std::pair<int, int>>>& adj) {
  for (auto& list : adj) std::sort(list.begin(), list.end());
}

}  // namespace

const std::string& SRGraph::vertex_name(int v) const {
  return is_species(v) ? species_names[static_cast<std::size_t>(v)]
                       : reaction_names[static_cast<std::size_t>(v - n_species)];
}

std::optional<int> SRGraph::edge_label(int u, int v) const {
  for (const auto& [w, label] : adj[static_cast<std::size_t>(u)])
    if (w == v) return label;
  return std::nullopt;
}

int SRGraph::edge_count() const {
  std::size_t half_edges = 0;
  for (const auto& list : adj) half_edges += list.size();
  return static_cast<int>(half_edges / 2);
}

const std::string& DirectedSRGraph::vertex_name(int v) const {
  return is_species(v) ? species_names[static_cast<std::size_t>(v)]
                       : reaction_names[static_cast<std::size_t>(v - n_species)];
}

bool DirectedSRGraph::has_edge(int tail, int head) const {
  for (const auto& [w, _] : out[static_cast<std::size_t>(tail)])
    if (w == head) return true;
  return false;
}

std::string RLabelSet::text() const {
  if (both()) return "+,-";
  return plus ? "+" : "-";
}

std::optional<RLabelSet> RGraph::edge_labels(int a, int b) const {
  for (const auto& [w, labels] : adj[static_cast<std::size_t>(a)])
    if (w == b) return labels;
  return std::nullopt;
}

SRGraph build_sr_graph(const ReactionNetwork& net,
                       const RationalMatrix& stoich) {
  SRGraph g;
  g.n_species = net.species_count();
  g.n_reactions = net.reaction_count();
  g.species_names = net.species;
  g.reaction_names = reaction_names_of(net);
  g.adj.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int i = 0; i < g.n_species; ++i) {
    for (int j = 0; j < g.n_reactions; ++j) {
      if (stoich(i, j) == 0) continue;
      const int label = -sign(stoich(i, j));
      const int rv = g.reaction_vertex(j);
      g.adj[static_cast<std::size_t>(i)].emplace_back(rv, label);
      g.adj[static_cast<std::size_t>(rv)].emplace_back(i, label);
    }
  }
  sort_adjacency(g.adj);
  return g;
}

DirectedSRGraph build_directed_sr_graph(const ReactionNetwork& net,
                                        const RationalMatrix& stoich) {
  DirectedSRGraph g;
  g.n_species = net.species_count();
  g.n_reactions = net.reaction_count();
  g.species_names = net.species;
  g.reaction_names = reaction_names_of(net);
  g.out.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int j = 0; j < g.n_reactions; ++j) {
    const Reaction& r = net.reactions[static_cast<std::size_t>(j)];
    const int rv = g.reaction_vertex(j);
    for (int i = 0; i < g.n_species; ++i) {
      const bool in_reactant = r.reactant.contains(i);
      const bool participates = in_reactant || r.product.contains(i);
      if (!participates) continue;
      const int label = -sign(stoich(i, j));
      // species -> reaction: rate dependence
      if (r.reversible || in_reactant)
        g.out[static_cast<std::size_t>(i)].emplace_back(rv, label);
      // reaction -> species: participation
      g.out[static_cast<std::size_t>(rv)].emplace_back(i, label);
    }
  }
  sort_adjacency(g.out);
  return g;
}

RGraph build_r_graph(const ReactionNetwork& net, const RationalMatrix& stoich) {
  RGraph g;
  g.n_reactions = net.reaction_count();
  g.reaction_names = reaction_names_of(net);
  g.adj.resize(static_cast<std::size_t>(g.n_reactions));
  const int n = net.species_count();
  for (int j = 0; j < g.n_reactions; ++j) {
    for (int k = j + 1; k < g.n_reactions; ++k) {
      RLabelSet labels;
      for (int i = 0; i < n; ++i) {
        const Rational prod = stoich(i, j) * stoich(i, k);
        if (prod == 0) continue;
        if (prod < 0)
          labels.plus = true;
        else
          labels.minus = true;
      }
      if (!labels.plus && !labels.minus) continue;
      g.adj[static_cast<std::size_t>(j)].emplace_back(k, labels);
      g.adj[static_cast<std::size_t>(k)].emplace_back(j, labels);
      g.edges.push_back({j, k, labels});
    }
  }
  for (auto& list : g.adj)
    std::sort(list.begin(), list.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  return g;
}

namespace {

template <typename AdjacencyFn>
int count_components(int vertex_count, AdjacencyFn&& neighbors) {
  std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
  int components = 0;
  for (int s = 0; s < vertex_count; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++components;
    std::queue<int> frontier;
    frontier.push(s);
    seen[static_cast<std::size_t>(s)] = true;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (int w : neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          frontier.push(w);
        }
      }
    }
  }
  return components;
}

}  // namespace

bool graph_connected(const SRGraph& g) {
  return count_components(g.vertex_count(), [&](int v) {
           std::vector<int> out;
           for (const auto& [w, _] : g.adj[static_cast<std::size_t>(v)])
             out.push_back(w);
           return out;
         }) <= 1;
}

int component_count(const RGraph& g) {
  return count_components(g.n_reactions, [&](int v) {
    std::vector<int> out;
    for (const auto& [w, _] : g.adj[static_cast<std::size_t>(v)])
      out.push_back(w);
    return out;
  });
}

bool graph_connected(const RGraph& g) { return component_count(g) <= 1; }

bool r_strongly_connected(const DirectedSRGraph& g) {
  // Tarjan; all reaction vertices must share one strongly connected
  // component (paths through species vertices are free).
  const int n = g.vertex_count();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int next_index = 0, next_comp = 0;

  struct Frame {
    int v;
    std::size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[static_cast<std::size_t>(root)] =
        low[static_cast<std::size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto& edges = g.out[static_cast<std::size_t>(f.v)];
      if (f.edge < edges.size()) {
        const int w = edges[f.edge++].first;
        if (index[static_cast<std::size_t>(w)] == -1) {
          index[static_cast<std::size_t>(w)] =
              low[static_cast<std::size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = true;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)],
                       index[static_cast<std::size_t>(w)]);
        }
      } else {
        const int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[static_cast<std::size_t>(frames.back().v)] =
              std::min(low[static_cast<std::size_t>(frames.back().v)],
                       low[static_cast<std::size_t>(v)]);
        if (low[static_cast<std::size_t>(v)] ==
            index[static_cast<std::size_t>(v)]) {
          for (;;) {
            const int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = false;
            comp[static_cast<std::size_t>(w)] = next_comp;
            if (w == v) break;
          }
          ++next_comp;
        }
      }
    }
  }

  int reaction_comp = -1;
  for (int j = 0; j < g.n_reactions; ++j) {
    const int c = comp[static_cast<std::size_t>(g.reaction_vertex(j))];
    if (reaction_comp == -1) reaction_comp = c;
    if (c != reaction_comp) return false;
  }
  return true;
}

PlpResult positive_loop_property(const RGraph& rg) {
  // A doubly labeled edge always induces an odd loop over its two label
  // choices; report the edge itself as the witness.
  for (const auto& e : rg.edges) {
    if (e.labels.both()) {
      LoopWitness w;
      w.vertices = {e.a, e.b, e.a};
      w.parity = LoopParity::OddRLoop;
      return {false, w};
    }
  }

  // Signed balance check: assign +-1 per vertex by BFS; a non-tree edge
  // whose label disagrees with the endpoint product closes an odd loop.
  const int n = rg.n_reactions;
  std::vector<int> assigned(static_cast<std::size_t>(n), 0);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (int root = 0; root < n; ++root) {
    if (assigned[static_cast<std::size_t>(root)] != 0) continue;
    assigned[static_cast<std::size_t>(root)] = 1;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (const auto& [w, labels] : rg.adj[static_cast<std::size_t>(v)]) {
        const int label = labels.the_label();
        if (assigned[static_cast<std::size_t>(w)] == 0) {
          assigned[static_cast<std::size_t>(w)] =
              assigned[static_cast<std::size_t>(v)] * label;
          parent[static_cast<std::size_t>(w)] = v;
          depth[static_cast<std::size_t>(w)] =
              depth[static_cast<std::size_t>(v)] + 1;
          frontier.push(w);
        } else if (assigned[static_cast<std::size_t>(v)] *
                       assigned[static_cast<std::size_t>(w)] !=
                   label) {
          // Tree paths to the lowest common ancestor plus this edge form
          // a simple loop with an odd number of negative labels.
          std::vector<int> up_v{v}, up_w{w};
          int a = v, b = w;
          while (depth[static_cast<std::size_t>(a)] >
                 depth[static_cast<std::size_t>(b)])
            up_v.push_back(a = parent[static_cast<std::size_t>(a)]);
          while (depth[static_cast<std::size_t>(b)] >
                 depth[static_cast<std::size_t>(a)])
            up_w.push_back(b = parent[static_cast<std::size_t>(b)]);
          while (a != b) {
            up_v.push_back(a = parent[static_cast<std::size_t>(a)]);
            up_w.push_back(b = parent[static_cast<std::size_t>(b)]);
          }
          LoopWitness witness;
          witness.vertices.assign(up_v.begin(), up_v.end());
          for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it)
            witness.vertices.push_back(*it);
          witness.vertices.push_back(v);
          witness.parity = LoopParity::OddRLoop;
          return {false, witness};
        }
      }
    }
  }
  return {true, std::nullopt};
}

SignPattern sign_pattern(const RGraph& rg) {
  const PlpResult plp = positive_loop_property(rg);
  if (!plp.holds)
    throw std::invalid_argument(
        "sign pattern requires the positive loop property");
  const int n = rg.n_reactions;
  SignPattern sigma(static_cast<std::size_t>(n), 0);
  for (int root = 0; root < n; ++root) {
    if (sigma[static_cast<std::size_t>(root)] != 0) continue;
    sigma[static_cast<std::size_t>(root)] = 1;  // lowest index in component
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (const auto& [w, labels] : rg.adj[static_cast<std::size_t>(v)]) {
        if (sigma[static_cast<std::size_t>(w)] != 0) continue;
        sigma[static_cast<std::size_t>(w)] =
            sigma[static_cast<std::size_t>(v)] * labels.the_label();
        frontier.push(w);
      }
    }
  }
  return sigma;
}

LoopParity classify_loop(const SRGraph& sr, const std::vector<int>& loop) {
  if (loop.size() < 5 || loop.front() != loop.back())
    throw std::invalid_argument("not a closed loop");
  const std::size_t edges = loop.size() - 1;
  if (edges % 2 != 0) throw std::invalid_argument("loop length must be even");
  std::set<int> seen(loop.begin(), loop.end() - 1);
  if (seen.size() != edges)
    throw std::invalid_argument("loop repeats a vertex");

  int product = 1;
  for (std::size_t k = 0; k + 1 < loop.size(); ++k) {
    if (sr.is_species(loop[k]) == sr.is_species(loop[k + 1]))
      throw std::invalid_argument("loop does not alternate vertex kinds");
    const auto label = sr.edge_label(loop[k], loop[k + 1]);
    if (!label) throw std::invalid_argument("loop uses a missing edge");
    product *= *label;
  }
  const std::size_t lambda = edges / 2;
  const bool e_loop = product == (lambda % 2 == 0 ? 1 : -1);

  // Independent parity route: the loop is an e-loop exactly when an even
  // number of its reaction-centered segments carry equal labels.
  int same_sign_segments = 0;
  for (std::size_t k = 0; k < edges; ++k) {
    if (sr.is_species(loop[k])) continue;
    const std::size_t prev = k == 0 ? edges - 1 : k - 1;
    const int before = *sr.edge_label(loop[prev], loop[k]);
    const int after = *sr.edge_label(loop[k], loop[k + 1]);
    if (before == after) ++same_sign_segments;
  }
  if ((same_sign_segments % 2 == 0) != e_loop)
    throw std::logic_error("loop parity routes disagree");

  return e_loop ? LoopParity::ELoop : LoopParity::OLoop;
}

std::vector<LoopWitness> enumerate_simple_loops(const SRGraph& sr,
                                                int max_vertices) {
  const int n = sr.vertex_count();
  if (n > max_vertices)
    throw std::invalid_argument("graph too large for loop enumeration");

  std::vector<LoopWitness> out;
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);

  // Each simple loop is found once: rooted at its smallest vertex, walked
  // only through larger vertices, with the direction fixed by requiring
  // the second vertex to be smaller than the last.
  auto extend = [&](auto&& self, int start, int v) -> void {
    for (const auto& [w, _] : sr.adj[static_cast<std::size_t>(v)]) {
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) {
          LoopWitness witness;
          witness.vertices = path;
          witness.vertices.push_back(start);
          witness.parity = classify_loop(sr, witness.vertices);
          out.push_back(std::move(witness));
        }
      } else if (w > start && !on_path[static_cast<std::size_t>(w)]) {
        path.push_back(w);
        on_path[static_cast<std::size_t>(w)] = true;
        self(self, start, w);
        on_path[static_cast<std::size_t>(w)] = false;
        path.pop_back();
      }
    }
  };

  for (int start = 0; start < n; ++start) {
    path = {start};
    on_path[static_cast<std::size_t>(start)] = true;
    extend(extend, start, start);
    on_path[static_cast<std::size_t>(start)] = false;
  }
  return out;
}

bool loop_is_directed(const DirectedSRGraph& dsr,
                      const std::vector<int>& loop) {
  if (loop.size() < 2 || loop.front() != loop.back()) return false;
  const auto traversable = [&](bool forward) {
    for (std::size_t k = 0; k + 1 < loop.size(); ++k) {
      const int tail = forward ? loop[k] : loop[k + 1];
      const int head = forward ? loop[k + 1] : loop[k];
      if (!dsr.has_edge(tail, head)) return false;
    }
    return true;
  };
  return traversable(true) || traversable(false);
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string label_text(int label) { return label > 0 ? "+" : "-"; }

}  // namespace

std::string export_dot(const SRGraph& g) {
  std::ostringstream os;
  os << "graph SR {\n";
  for (int i = 0; i < g.n_species; ++i)
    os << "  s" << i << " [shape=ellipse, label=" << quote(g.species_names[static_cast<std::size_t>(i)]) << "];\n";
  for (int j = 0; j < g.n_reactions; ++j)
    os << "  r" << j << " [shape=box, label=" << quote(g.reaction_names[static_cast<std::size_t>(j)]) << "];\n";
  for (int i = 0; i < g.n_species; ++i)
    for (const auto& [w, label] : g.adj[static_cast<std::size_t>(i)])
      os << "  s" << i << " -- r" << (w - g.n_species)
         << " [label=" << quote(label_text(label)) << "];\n";
  os << "}\n";
  return os.str();
}

std::string export_dot(const DirectedSRGraph& g) {
  std::ostringstream os;
  os << "digraph DSR {\n";
  for (int i = 0; i < g.n_species; ++i)
    os << "  s" << i << " [shape=ellipse, label=" << quote(g.species_names[static_cast<std::size_t>(i)]) << "];\n";
  for (int j = 0; j < g.n_reactions; ++j)
    os << "  r" << j << " [shape=box, label=" << quote(g.reaction_names[static_cast<std::size_t>(j)]) << "];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (const auto& [w, label] : g.out[static_cast<std::size_t>(v)]) {
      const auto id = [&](int u) {
        return (g.is_species(u) ? "s" + std::to_string(u)
                                : "r" + std::to_string(u - g.n_species));
      };
      os << "  " << id(v) << " -> " << id(w)
         << " [label=" << quote(label_text(label)) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string export_dot(const RGraph& g) {
  std::ostringstream os;
  os << "graph R {\n";
  for (int j = 0; j < g.n_reactions; ++j)
    os << "  r" << j << " [shape=box, label=" << quote(g.reaction_names[static_cast<std::size_t>(j)]) << "];\n";
  for (const auto& e : g.edges)
    os << "  r" << e.a << " -- r" << e.b
       << " [label=" << quote(e.labels.text()) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace crn
