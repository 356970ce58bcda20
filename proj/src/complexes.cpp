#include "subst/complexes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "subst/error.hpp"
#include "subst/matrix.hpp"

namespace subst {

std::string to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::BD: return "BD";
    case ComplexKind::BDSubcomplex: return "BD-subcomplex";
    case ComplexKind::AP: return "AP";
  }
  return "?";
}

namespace {

bool shortlex_string(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Sorts vertices and edges into canonical order and fixes edge endpoints.
struct GraphBuilder {
  ComplexKind kind;
  std::vector<GraphVertex> vertices;
  struct PendingEdge {
    std::string source, target, label;
  };
  std::vector<PendingEdge> edges;

  ComplexGraph build() {
    std::sort(vertices.begin(), vertices.end(),
              [](const GraphVertex& a, const GraphVertex& b) { return shortlex_string(a.name, b.name); });
    std::sort(edges.begin(), edges.end(),
              [](const PendingEdge& a, const PendingEdge& b) { return shortlex_string(a.label, b.label); });
    ComplexGraph g;
    g.kind = kind;
    g.vertices = vertices;
    for (const auto& e : edges) g.edges.push_back({g.vertex_index(e.source), g.vertex_index(e.target), e.label});
    return g;
  }
};

std::string plus_name(Letter a) { return std::string("p") + glyph(a); }
std::string minus_name(Letter a) { return std::string("m") + glyph(a); }

}  // namespace

std::size_t ComplexGraph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i].name == name) return i;
  throw ContractViolation("no vertex " + name);
}

std::size_t ComplexGraph::edge_index(const std::string& label) const {
  const auto it = std::lower_bound(edges.begin(), edges.end(), label,
                                   [](const GraphEdge& e, const std::string& l) { return shortlex_string(e.label, l); });
  if (it == edges.end() || it->label != label) throw ContractViolation("no edge " + label);
  return static_cast<std::size_t>(it - edges.begin());
}

std::size_t ComplexGraph::components() const {
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = vertices.size();
  for (const auto& e : edges) {
    const std::size_t a = find(e.source), b = find(e.target);
    if (a != b) {
      parent[a] = b;
      --count;
    }
  }
  return count;
}

ComplexGraph barge_diamond(const Substitution& phi) {
  GraphBuilder b{ComplexKind::BD, {}, {}};
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const Letter a = static_cast<Letter>(i);
    b.vertices.push_back({plus_name(a), std::string("v") + glyph(a) + "+"});
    b.vertices.push_back({minus_name(a), std::string("v") + glyph(a) + "-"});
    b.edges.push_back({plus_name(a), minus_name(a), std::string(1, glyph(a))});
  }
  for (const Word& w : admitted_words(phi, 2)) b.edges.push_back({minus_name(w[0]), plus_name(w[1]), to_string(w)});
  return b.build();
}

namespace {

ComplexGraph transition_graph(ComplexKind kind, const std::set<Word>& edges) {
  GraphBuilder b{kind, {}, {}};
  std::set<std::string> names;
  for (const Word& w : edges) {
    for (const auto& [name, label] : {std::pair{minus_name(w[0]), std::string("v") + glyph(w[0]) + "-"},
                                      std::pair{plus_name(w[1]), std::string("v") + glyph(w[1]) + "+"}})
      if (names.insert(name).second) b.vertices.push_back({name, label});
    b.edges.push_back({minus_name(w[0]), plus_name(w[1]), to_string(w)});
  }
  return b.build();
}

}  // namespace

EventualRange bd_subcomplex_and_eventual_range(const Substitution& phi) {
  const WordSet l2 = admitted_words(phi, 2);
  const auto image = [&](const Word& w) { return Word{phi[w[0]].back(), phi[w[1]].front()}; };
  std::set<Word> current(l2.begin(), l2.end());
  EventualRange er;
  er.subcomplex = transition_graph(ComplexKind::BDSubcomplex, current);
  const ComplexGraph& s = er.subcomplex;
  for (const auto& v : s.vertices) {
    const Letter a = static_cast<Letter>(parse_word(v.name.substr(1))[0]);
    const bool plus = v.name[0] == 'p';
    // v+ goes to v_{l(a)}+, v- to v_{r(a)}-
    er.map.vertex_map.push_back(s.vertex_index(plus ? plus_name(phi[a].front()) : minus_name(phi[a].back())));
  }
  for (const auto& e : s.edges) {
    const Word target = image(parse_word(e.label));
    if (!contains(l2, target)) throw ContractViolation("edge image " + to_string(target) + " is not admitted");
    er.map.edge_map.push_back(s.edge_index(to_string(target)));
  }
  while (true) {
    std::set<Word> next;
    for (const Word& w : current) next.insert(image(w));
    if (next == current) break;
    current = std::move(next);
  }
  er.range = transition_graph(ComplexKind::BDSubcomplex, current);
  er.components = er.range.components();
  er.rank = er.range.euler_rank();
  return er;
}

ComplexGraph anderson_putnam(const Substitution& phi) {
  GraphBuilder b{ComplexKind::AP, {}, {}};
  for (const Word& w : admitted_words(phi, 2)) b.vertices.push_back({"w" + to_string(w), to_string(w)});
  for (const Word& w : admitted_words(phi, 3))
    b.edges.push_back({"w" + to_string(Word{w[0], w[1]}), "w" + to_string(Word{w[1], w[2]}), to_string(w)});
  return b.build();
}

std::vector<std::vector<std::size_t>> collared_substitution_on_edges(const Substitution& phi, const ComplexGraph& ap) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& e : ap.edges) {
    const Word ijk = parse_word(e.label);
    Word collared{phi[ijk[0]].back()};
    collared.insert(collared.end(), phi[ijk[1]].begin(), phi[ijk[1]].end());
    collared.push_back(phi[ijk[2]].front());
    std::vector<std::size_t> path;
    for (std::size_t i = 0; i + 3 <= collared.size(); ++i)
      path.push_back(ap.edge_index(to_string(Word(collared.begin() + static_cast<long>(i), collared.begin() + static_cast<long>(i + 3)))));
    out.push_back(std::move(path));
  }
  return out;
}

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

std::string tikz_label(const std::string& label) {
  std::string out;
  for (char c : label) {
    if (c == '+' || c == '-') {
      out += std::string("^{") + c + "}";
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace

std::string tikz_picture(const ComplexGraph& g) {
  std::string out = "\\begin{tikzpicture}[>=stealth, shorten >=1pt, auto, node distance=2cm,\n"
                    "  vertex/.style={circle, draw, minimum size=7mm, inner sep=1pt}]\n";
  const double pi = std::acos(-1.0);
  const std::size_t n = g.vertices.size();
  const double radius = 1.0 + 0.5 * static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = pi / 2 - 2 * pi * static_cast<double>(i) / static_cast<double>(std::max<std::size_t>(n, 1));
    out += "  \\node[vertex] (" + g.vertices[i].name + ") at (" + fixed(radius * std::cos(angle)) + "," +
           fixed(radius * std::sin(angle)) + ") {$" + tikz_label(g.vertices[i].label) + "$};\n";
  }
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  for (const auto& e : g.edges) {
    const std::string& s = g.vertices[e.source].name;
    const std::string& t = g.vertices[e.target].name;
    const int k = seen[{std::min(e.source, e.target), std::max(e.source, e.target)}]++;
    std::string how;
    if (e.source == e.target)
      how = "to[loop, out=" + std::to_string(60 + 40 * k) + ", in=" + std::to_string(120 + 40 * k) + ", looseness=8]";
    else
      how = "to[bend left=" + std::to_string(10 + 15 * k) + "]";
    out += "  \\draw[->] (" + s + ") " + how + " node {\\scriptsize $" + e.label + "$} (" + t + ");\n";
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

std::string export_graph(const ComplexGraph& g, GraphFormat format) {
  if (format == GraphFormat::TikZ)
    return "\\documentclass[tikz,border=4pt]{standalone}\n\\begin{document}\n" + tikz_picture(g) + "\\end{document}\n";
  std::string out = "digraph \"" + to_string(g.kind) + "\" {\n";
  for (const auto& v : g.vertices) out += "  \"" + v.name + "\" [label=\"" + v.label + "\"];\n";
  for (const auto& e : g.edges)
    out += "  \"" + g.vertices[e.source].name + "\" -> \"" + g.vertices[e.target].name + "\" [label=\"" + e.label + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace subst
