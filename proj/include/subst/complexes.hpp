#pragma once

// Barge-Diamond and (modified) Anderson-Putnam complexes as directed
// labelled multigraphs, plus DOT / TikZ export.

#include <string>
#include <vector>

#include "subst/language.hpp"
#include "subst/word.hpp"

namespace subst {

enum class ComplexKind { BD, BDSubcomplex, AP };
std::string to_string(ComplexKind kind);

struct GraphVertex {
  std::string name;   // stable node id: p<i>, m<i> or w<ij>
  std::string label;  // v<i>+, v<i>- or the two-letter word
};

struct GraphEdge {
  std::size_t source = 0, target = 0;
  std::string label;  // letter, two-letter or three-letter word
};

struct ComplexGraph {
  ComplexKind kind = ComplexKind::BD;
  std::vector<GraphVertex> vertices;  // shortlex by name
  std::vector<GraphEdge> edges;       // shortlex by label

  std::size_t vertex_index(const std::string& name) const;
  std::size_t edge_index(const std::string& label) const;
  // Undirected connected components, by union-find.
  std::size_t components() const;
  // Rank of H^1 counted as E - V + k.
  long long euler_rank() const { return static_cast<long long>(edges.size()) - static_cast<long long>(vertices.size()) + static_cast<long long>(components()); }
};

struct GraphMorphism {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;
};

ComplexGraph barge_diamond(const Substitution& phi);

struct EventualRange {
  ComplexGraph subcomplex;  // S: the transition edges
  GraphMorphism map;        // [ij] -> [r(i) l(j)] on S
  ComplexGraph range;       // ER, the stable image
  std::size_t components = 0;
  long long rank = 0;       // m = E - V + k on ER
};

EventualRange bd_subcomplex_and_eventual_range(const Substitution& phi);

ComplexGraph anderson_putnam(const Substitution& phi);

// Edge [ijk] goes to the windows [i_last j1 j2][j1 j2 j3]...[j_{n-1} j_n k_1].
std::vector<std::vector<std::size_t>> collared_substitution_on_edges(const Substitution& phi, const ComplexGraph& ap);

enum class GraphFormat { DOT, TikZ };
// Full documents: a Graphviz digraph or a standalone LaTeX file.
std::string export_graph(const ComplexGraph& g, GraphFormat format);
// Just the tikzpicture environment, for embedding.
std::string tikz_picture(const ComplexGraph& g);

}  // namespace subst
