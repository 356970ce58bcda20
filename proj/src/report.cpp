#include "subst/report.hpp"

#include <chrono>
#include <limits>

#include "subst/cohomology.hpp"
#include "subst/complexes.hpp"
#include "subst/error.hpp"
#include "subst/language.hpp"
#include "subst/matrix.hpp"
#include "subst/pf.hpp"
#include "subst/properize.hpp"
#include "subst/recognizability.hpp"

namespace subst {

using nlohmann::json;

const std::vector<std::string>& stage_names() {
  static const std::vector<std::string> names = {
      "matrix",        "pf",            "complexity",        "words",         "recognizability", "complexes",
      "cohomology_bd", "cohomology_ap", "cohomology_proper", "properization", "pisot",           "coincidence",
  };
  return names;
}

std::string to_string(StageStatus s) {
  switch (s) {
    case StageStatus::Ok: return "ok";
    case StageStatus::Refused: return "refused";
    case StageStatus::Budget: return "budget";
    case StageStatus::NotRequested: return "not_requested";
  }
  return "?";
}

namespace {

StageStatus status_from_string(const std::string& s) {
  for (auto v : {StageStatus::Ok, StageStatus::Refused, StageStatus::Budget, StageStatus::NotRequested})
    if (to_string(v) == s) return v;
  throw ParseError("unknown stage status: " + s);
}

// Words longer than this are left out of reports.
constexpr std::size_t kShownWordLength = 4096;

json number(const BigInt& v) {
  static const BigInt lo(std::numeric_limits<std::int64_t>::min()), hi(std::numeric_limits<std::int64_t>::max());
  if (v < lo || v > hi) return v.str();
  return v.to_int64();
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(number(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json words_json(const std::vector<Word>& words) {
  json a = json::array();
  for (const auto& w : words) a.push_back(to_string(w));
  return a;
}

// a0 + a1*L + ... with L = lambda_PF.
std::string exact_element(const NumberField::Element& e) {
  std::string s;
  const auto& c = e.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    std::string term = c[k].str();
    if (k > 0) term += k == 1 ? "*L" : "*L^" + std::to_string(k);
    if (!s.empty()) s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    else s = term;
  }
  return s.empty() ? "0" : s;
}

json graph_json(const ComplexGraph& g) {
  json vs = json::array(), es = json::array();
  for (const auto& v : g.vertices) vs.push_back({{"name", v.name}, {"label", v.label}});
  for (const auto& e : g.edges) es.push_back({{"source", e.source}, {"target", e.target}, {"label", e.label}});
  return {{"kind", to_string(g.kind)}, {"vertices", vs}, {"edges", es},
          {"components", g.components()}, {"euler_rank", g.euler_rank()}};
}

ComplexGraph graph_from_json(const json& j) {
  ComplexGraph g;
  const std::string kind = j.at("kind");
  bool known = false;
  for (auto k : {ComplexKind::BD, ComplexKind::BDSubcomplex, ComplexKind::AP})
    if (to_string(k) == kind) g.kind = k, known = true;
  if (!known) throw ParseError("unknown complex kind: " + kind);
  for (const auto& v : j.at("vertices")) g.vertices.push_back({v.at("name"), v.at("label")});
  for (const auto& e : j.at("edges")) g.edges.push_back({e.at("source"), e.at("target"), e.at("label")});
  return g;
}

json presentation_json(const CohomologyPresentation& p) {
  return {{"method", to_string(p.method)}, {"rendered", p.render()},     {"human", p.render_human()},
          {"core", matrix_json(p.core)},    {"quotient_rank", p.quotient_rank}, {"free_rank", p.free_rank},
          {"total_rank", p.total_rank},     {"char_poly", to_string(char_poly(p.core))}, {"note", p.note}};
}

json matrix_stage(const Substitution& phi) {
  const IntMatrix m = substitution_matrix(phi);
  const Primitivity prim = is_primitive(m);
  return {{"letters", phi.size()},
          {"matrix", matrix_json(m)},
          {"primitive", prim.primitive},
          {"power", prim.power},
          {"char_poly", to_string(char_poly(m))},
          {"eventual_rank", eventual_rank(m)}};
}

json pf_stage(const Substitution& phi, int digits) {
  const PFData pf = pf_data(substitution_matrix(phi));
  json left = json::array(), right = json::array();
  for (const auto& x : pf.left) left.push_back(exact_element(x));
  for (const auto& x : pf.right) right.push_back(exact_element(x));
  return {{"lambda", pf.field.to_decimal(pf.lambda_element(), digits)},
          {"minimal_polynomial", to_string(pf.minimal_polynomial())},
          {"degree", pf.field.degree()},
          {"left", left},
          {"right", right},
          {"left_decimal", render_vector(pf.field, pf.left, digits)},
          {"right_decimal", render_vector(pf.field, pf.right, digits)}};
}

json complexity_stage(const Substitution& phi, std::size_t n_max, std::size_t budget) {
  const auto p = complexity(phi, n_max, budget);
  return {{"n_max", n_max}, {"values", p}, {"periodic", complexity_indicates_periodic(p)}};
}

json words_stage(const Substitution& phi, const std::vector<std::size_t>& lengths, std::size_t budget) {
  json out = json::array();
  for (std::size_t n : lengths) out.push_back({{"n", n}, {"words", words_json(admitted_words(phi, n, budget))}});
  return {{"lengths", out}};
}

json recognizability_stage(const Substitution& phi, std::size_t budget) {
  const Recognizability r = check_recognizability(phi, budget);
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json x = {{"first", p.first}, {"second", p.second}, {"equal", p.equal()}};
    if (p.forward.size() <= kShownWordLength && p.backward.size() <= kShownWordLength) {
      x["forward"] = to_string(p.forward);
      x["backward"] = to_string(p.backward);
    }
    pairs.push_back(x);
  }
  json j = {{"recognizable", r.recognizable},
            {"fixed_letter", std::string(1, glyph(r.returns.fixed.letter))},
            {"order", r.returns.fixed.order},
            {"return_words", words_json(r.returns.words)},
            {"power", r.power},
            {"pairs", pairs},
            {"mixed", r.mixed}};
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return j;
}

json complexes_stage(const Substitution& phi) {
  const EventualRange er = bd_subcomplex_and_eventual_range(phi);
  json bd = graph_json(barge_diamond(phi));
  json er_edges = json::array();
  for (const auto& e : er.range.edges) er_edges.push_back(e.label);
  bd["eventual_range"] = {{"edges", er_edges}, {"components", er.components}, {"rank", er.rank}};
  return {{"bd", bd}, {"ap", graph_json(anderson_putnam(phi))}};
}

json properization_stage(const Substitution& phi, std::size_t budget) {
  const Properization p = full_properize(phi, kDefaultProperizationCap, budget);
  json j = {{"return_words", render_return_alphabet(p.pre.returns)},
            {"eta", serialize(p.pre.eta)},
            {"n", p.left.n}};
  auto shown = [&](const char* key, const Substitution& s) {
    if (s.total_length() <= kShownWordLength) j[key] = serialize(s);
    else j[key] = nullptr;
  };
  shown("left_power", p.left.power);
  shown("right_conjugate", p.right);
  shown("full", p.full);
  return j;
}

json pisot_stage(const Substitution& phi) {
  const PisotVerdict v = classify_pisot(phi);
  if (!v.primitive) throw Refused("substitution is not primitive");
  if (v.reason == PisotReason::Periodic) throw Refused("substitution is periodic");
  if (!v.decided) throw Refused("undecided-exact: characteristic polynomial beyond the factorization degree cap");
  json j = {{"char_poly", to_string(v.char_poly)},
            {"minimal_polynomial", to_string(v.minimal_polynomial)},
            {"char_poly_irreducible", v.char_poly_irreducible},
            {"pisot", v.pisot},
            {"irreducible_pisot", v.irreducible_pisot},
            {"reason", to_string(v.reason)}};
  std::string pds = "not-applicable";
  json pairs = nullptr;
  if (v.irreducible_pisot) {
    const auto bp = balanced_pair_algorithm(phi, parse_word("01"), parse_word("10"));
    pds = !bp.terminates ? "unknown" : bp.coincidence ? "true" : "false";
    if (bp.terminates && bp.pairs.size() <= 64) {
      pairs = json::array();
      for (const auto& p : bp.pairs) pairs.push_back(to_string(p));
    }
  }
  j["pure_discrete_spectrum"] = pds;
  j["balanced_pairs"] = pairs;
  return j;
}

json coincidence_stage(const Substitution& phi, int cap, std::size_t budget) {
  const CoincidenceReport r = strong_coincidence(phi, cap, budget);
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json x = {{"i", std::string(1, glyph(p.i))}, {"j", std::string(1, glyph(p.j))}, {"found", p.witness.has_value()}};
    if (p.witness) {
      x["n"] = p.witness->n;
      x["position"] = p.witness->position;
      x["letter"] = std::string(1, glyph(p.witness->letter));
      x["prefix"] = p.witness->prefix;
    }
    pairs.push_back(x);
  }
  return {{"strongly_coincident", r.strongly_coincident},
          {"iteration", r.iteration},
          {"cap", r.cap},
          {"budget_exceeded", r.budget_exceeded},
          {"pairs", pairs}};
}

}  // namespace

bool AnalysisOptions::runs(const std::string& stage) const {
  return everything() || stage == "matrix" || requested.count(stage) > 0;
}

AnalysisOptions options_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("options must be an object");
  AnalysisOptions o;
  auto positive = [&](const json& v, const char* what, long long hi) {
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > hi)
      throw ParseError(std::string(what) + " must be an integer in [1, " + std::to_string(hi) + "]");
    return static_cast<std::size_t>(v.get<long long>());
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "complexity") {
      o.complexity_max = positive(value, "complexity", 200);
      o.requested.insert("complexity");
    } else if (key == "words") {
      o.word_lengths.clear();
      if (value.is_array()) {
        for (const auto& n : value) o.word_lengths.push_back(positive(n, "words", 16));
      } else {
        o.word_lengths.push_back(positive(value, "words", 16));
      }
      o.requested.insert("words");
    } else if (key == "cohomology") {
      if (!value.is_string()) throw ParseError("cohomology must be bd, ap, proper or all");
      const std::string m = value;
      if (m == "all") {
        o.requested.insert({"cohomology_bd", "cohomology_ap", "cohomology_proper"});
      } else if (m == "bd" || m == "ap" || m == "proper") {
        o.requested.insert("cohomology_" + m);
      } else {
        throw ParseError("cohomology must be bd, ap, proper or all");
      }
    } else if (key == "precision") {
      o.precision = static_cast<int>(positive(value, "precision", 200));
      o.requested.insert("pf");
    } else if (key == "cap") {
      o.coincidence_cap = static_cast<int>(positive(value, "cap", 200));
    } else if (key == "pisot" || key == "coincidence" || key == "pf" || key == "recognizability" ||
               key == "complexes" || key == "properization") {
      if (!value.is_boolean()) throw ParseError(key + " must be a boolean");
      if (value.get<bool>()) o.requested.insert(key);
    } else {
      throw ParseError("unknown option: " + key);
    }
  }
  return o;
}

const Stage& AnalysisReport::stage(const std::string& name) const {
  const auto it = stages.find(name);
  if (it == stages.end()) throw ContractViolation("no stage " + name);
  return it->second;
}

AnalysisReport analyze(const std::string& share, const AnalysisOptions& o) {
  const Substitution phi = parse_substitution(share);
  AnalysisReport r;
  r.input = serialize(phi);
  auto run = [&](const std::string& name, auto&& body) {
    Stage& s = r.stages[name];
    if (!o.runs(name)) return;
    const auto start = std::chrono::steady_clock::now();
    try {
      s.data = body();
      s.status = StageStatus::Ok;
      if (s.data.value("budget_exceeded", false)) {
        s.status = StageStatus::Budget;
        s.reason = "scan budget exceeded";
      }
    } catch (const Refused& e) {
      s = {StageStatus::Refused, e.what(), json::object()};
    } catch (const UndecidedExact& e) {
      s = {StageStatus::Refused, std::string("undecided-exact: ") + e.what(), json::object()};
    } catch (const BudgetExceeded& e) {
      s = {StageStatus::Budget, e.what(), json::object()};
    }
    r.timings_ms[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  run("matrix", [&] { return matrix_stage(phi); });
  run("pf", [&] { return pf_stage(phi, o.precision); });
  run("complexity", [&] { return complexity_stage(phi, o.complexity_max, o.budget); });
  run("words", [&] { return words_stage(phi, o.word_lengths, o.budget); });
  run("recognizability", [&] { return recognizability_stage(phi, o.budget); });
  run("complexes", [&] { return complexes_stage(phi); });
  run("cohomology_bd", [&] { return presentation_json(cohomology_bd(phi)); });
  run("cohomology_ap", [&] { return presentation_json(cohomology_ap(phi)); });
  run("cohomology_proper", [&] { return presentation_json(cohomology_proper(phi)); });
  run("properization", [&] { return properization_stage(phi, o.budget); });
  run("pisot", [&] { return pisot_stage(phi); });
  run("coincidence", [&] { return coincidence_stage(phi, o.coincidence_cap, o.budget); });
  return r;
}

json to_json(const AnalysisReport& r) {
  json stages = json::object();
  for (const auto& [name, s] : r.stages)
    stages[name] = {{"status", to_string(s.status)}, {"reason", s.reason}, {"data", s.data}};
  return {{"schema", r.schema}, {"input", r.input}, {"stages", stages}, {"timings_ms", r.timings_ms}};
}

AnalysisReport report_from_json(const json& j) {
  AnalysisReport r;
  try {
    r.schema = j.at("schema");
    if (r.schema != kReportSchema) throw ParseError("unsupported report schema");
    r.input = j.at("input");
    for (const auto& [name, s] : j.at("stages").items())
      r.stages[name] = {status_from_string(s.at("status")), s.at("reason"), s.at("data")};
    if (j.contains("timings_ms")) r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return r;
}

int report_exit_code(const AnalysisReport& r, const AnalysisOptions& o) {
  int code = 0;
  for (const auto& name : o.requested) {
    const auto it = r.stages.find(name);
    if (it == r.stages.end()) continue;
    if (it->second.status == StageStatus::Budget) return 4;
    if (it->second.status == StageStatus::Refused) code = 3;
  }
  return code;
}

namespace {

std::string rows_text(const json& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ",[" : "[";
    for (std::size_t k = 0; k < m[i].size(); ++k) s += (k ? "," : "") + m[i][k].dump();
    s += "]";
  }
  return s + "]";
}

std::string join(const json& a, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? sep : "") + (a[i].is_string() ? a[i].get<std::string>() : a[i].dump());
  return s;
}

std::string display(const std::string& share) {
  const Substitution phi = parse_substitution(share);
  std::string s;
  for (std::size_t a = 0; a < phi.size(); ++a)
    s += (a ? ", " : "") + std::string(1, glyph(static_cast<Letter>(a))) + " -> " + to_string(phi[a]);
  return s;
}

std::string stage_text(const std::string& name, const json& d) {
  std::string s;
  if (name == "matrix") {
    s += "matrix: " + rows_text(d["matrix"]) + "\n";
    s += d["primitive"].get<bool>() ? "primitive: yes (power " + d["power"].dump() + ")\n" : "primitive: no\n";
    s += "char poly: " + d["char_poly"].get<std::string>() + "\n";
  } else if (name == "pf") {
    s += "lambda_PF: " + d["lambda"].get<std::string>() + " (root of " + d["minimal_polynomial"].get<std::string>() + ")\n";
    s += "left PF vector: (" + join(d["left"], ", ") + ") ~ " + d["left_decimal"].get<std::string>() + "\n";
    s += "right PF vector: (" + join(d["right"], ", ") + ") ~ " + d["right_decimal"].get<std::string>() + "\n";
  } else if (name == "complexity") {
    s += "complexity: " + join(d["values"], ",") + (d["periodic"].get<bool>() ? " (periodic)" : "") + "\n";
  } else if (name == "words") {
    for (const auto& l : d["lengths"]) s += "L^" + l["n"].dump() + ": {" + join(l["words"], ", ") + "}\n";
  } else if (name == "recognizability") {
    s += std::string("recognizable: ") + (d["recognizable"].get<bool>() ? "yes" : "no") + "\n";
    s += "fixed letter: " + d["fixed_letter"].get<std::string>() + " (order " + d["order"].dump() + ")\n";
    s += "return words: {" + join(d["return_words"], ", ") + "}\n";
  } else if (name == "complexes") {
    for (const char* k : {"bd", "ap"})
      s += std::string(k == std::string("bd") ? "BD" : "AP") + " complex: " + std::to_string(d[k]["vertices"].size()) +
           " vertices, " + std::to_string(d[k]["edges"].size()) + " edges, " + d[k]["components"].dump() + " component(s)\n";
    const auto& er = d["bd"]["eventual_range"];
    s += "eventual range: " + std::to_string(er["edges"].size()) + " edges, k=" + er["components"].dump() +
         ", m=" + er["rank"].dump() + "\n";
  } else if (name.rfind("cohomology_", 0) == 0) {
    s += "H^1 (" + d["method"].get<std::string>() + "): " + d["human"].get<std::string>() + ", rank " +
         d["total_rank"].dump() + "\n";
  } else if (name == "properization") {
    s += "return alphabet: " + d["return_words"].get<std::string>() + "\n";
    s += "eta: " + d["eta"].get<std::string>() + ", left-proper power " + d["n"].dump() + "\n";
    if (d["full"].is_string()) s += "full properization: " + d["full"].get<std::string>() + "\n";
  } else if (name == "pisot") {
    const bool ip = d["irreducible_pisot"], p = d["pisot"];
    s += std::string("pisot: ") + (ip ? "irreducible Pisot" : p ? "Pisot, not irreducible" : "not Pisot") + " (" +
         d["reason"].get<std::string>() + ")\n";
    s += "minimal polynomial of lambda_PF: " + d["minimal_polynomial"].get<std::string>() + "\n";
    if (ip) s += "pure discrete spectrum: " + d["pure_discrete_spectrum"].get<std::string>() + "\n";
  } else if (name == "coincidence") {
    if (d["strongly_coincident"].get<bool>())
      s += "strong coincidence: yes, after " + d["iteration"].dump() + " iteration(s)\n";
    else if (d["budget_exceeded"].get<bool>())
      s += "strong coincidence: not found within the scan budget\n";
    else
      s += "strong coincidence: not found up to n=" + d["cap"].dump() + "\n";
    for (const auto& p : d["pairs"])
      if (p["found"].get<bool>())
        s += "  pair " + p["i"].get<std::string>() + "," + p["j"].get<std::string>() + ": n=" + p["n"].dump() +
             ", position " + p["position"].dump() + ", letter " + p["letter"].get<std::string>() + "\n";
  }
  return s;
}

std::string latex_matrix(const json& m) {
  std::string s = "\\begin{pmatrix}";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += " \\\\ ";
    for (std::size_t k = 0; k < m[i].size(); ++k) s += (k ? " & " : "") + m[i][k].dump();
  }
  return s + "\\end{pmatrix}";
}

std::string latex_text(const std::string& t) {
  std::string out;
  for (char c : t) {
    if (c == '_' || c == '%' || c == '&' || c == '#' || c == '$' || c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

std::string latex_poly(std::string p) {
  std::string out;
  for (char c : p) out += c == 'x' ? std::string("\\lambda") : std::string(1, c);
  return out;
}

}  // namespace

std::string render_text(const AnalysisReport& r) {
  std::string s = "substitution: " + display(r.input) + "\n";
  for (const auto& name : stage_names()) {
    const auto it = r.stages.find(name);
    if (it == r.stages.end() || it->second.status == StageStatus::NotRequested) continue;
    const Stage& st = it->second;
    if (st.status == StageStatus::Ok || (st.status == StageStatus::Budget && !st.data.empty())) s += stage_text(name, st.data);
    if (st.status != StageStatus::Ok) s += name + ": " + to_string(st.status) + " (" + st.reason + ")\n";
  }
  return s;
}

std::string export_complexes(const AnalysisReport& r, bool tikz) {
  const Stage& st = r.stage("complexes");
  if (st.status != StageStatus::Ok) throw Refused("complexes unavailable: " + st.reason);
  const ComplexGraph bd = graph_from_json(st.data["bd"]), ap = graph_from_json(st.data["ap"]);
  if (!tikz) return export_graph(bd, GraphFormat::DOT) + export_graph(ap, GraphFormat::DOT);
  return "\\documentclass[tikz,border=4pt]{standalone}\n\\begin{document}\n" + tikz_picture(bd) + tikz_picture(ap) +
         "\\end{document}\n";
}

std::string export_latex(const AnalysisReport& r) {
  const Substitution phi = parse_substitution(r.input);
  std::string s = "\\documentclass{article}\n\\usepackage{amsmath}\n\\usepackage{tikz}\n\\begin{document}\n";
  s += "\\section*{Substitution analysis}\n\\[\\phi\\colon ";
  for (std::size_t a = 0; a < phi.size(); ++a)
    s += (a ? ",\\ " : "") + std::string(1, glyph(static_cast<Letter>(a))) + " \\mapsto " + to_string(phi[a]);
  s += "\\]\n";
  auto ok = [&](const char* name) -> const json* {
    const auto it = r.stages.find(name);
    return it != r.stages.end() && it->second.status == StageStatus::Ok ? &it->second.data : nullptr;
  };
  if (const json* d = ok("matrix")) {
    s += "\\subsection*{Substitution matrix}\n\\[M_\\phi = " + latex_matrix((*d)["matrix"]) + ",\\quad p_{M_\\phi} = " +
         latex_poly((*d)["char_poly"]) + "\\]\n";
    s += (*d)["primitive"].get<bool>() ? "Primitive; $M_\\phi^{" + (*d)["power"].dump() + "}$ is positive.\n"
                                       : "Not primitive.\n";
  }
  if (const json* d = ok("pf")) {
    s += "\\subsection*{Perron-Frobenius data}\n\\begin{tabular}{ll}\n";
    s += "$\\lambda_{PF}$ & " + (*d)["lambda"].get<std::string>() + " \\\\\n";
    s += "minimal polynomial & $" + latex_poly((*d)["minimal_polynomial"]) + "$ \\\\\n";
    s += "left & $" + (*d)["left_decimal"].get<std::string>() + "$ \\\\\n";
    s += "right & $" + (*d)["right_decimal"].get<std::string>() + "$ \\\\\n\\end{tabular}\n";
  }
  if (const json* d = ok("complexity")) s += "\\subsection*{Complexity}\n$p_\\phi(n)$: " + join((*d)["values"], ", ") + "\n";
  if (const json* d = ok("words")) {
    s += "\\subsection*{Admitted words}\n\\begin{tabular}{ll}\n";
    for (const auto& l : (*d)["lengths"]) s += "$\\mathcal{L}^{" + l["n"].dump() + "}$ & " + join(l["words"], ", ") + " \\\\\n";
    s += "\\end{tabular}\n";
  }
  if (const json* d = ok("recognizability")) {
    s += "\\subsection*{Recognizability}\n";
    s += std::string((*d)["recognizable"].get<bool>() ? "Recognizable" : "Not recognizable") + "; return words to " +
         (*d)["fixed_letter"].get<std::string>() + ": " + join((*d)["return_words"], ", ") + ".\n";
  }
  bool any_cohomology = false;
  for (const char* name : {"cohomology_bd", "cohomology_ap", "cohomology_proper"}) {
    const json* d = ok(name);
    if (!d) continue;
    if (!any_cohomology) s += "\\subsection*{Cohomology}\n\\begin{tabular}{lll}\nmethod & matrix & rank \\\\\n";
    any_cohomology = true;
    std::string extra;
    if ((*d)["quotient_rank"].get<long long>() > 0) extra += " / \\mathbb{Z}^{" + (*d)["quotient_rank"].dump() + "}";
    if ((*d)["free_rank"].get<long long>() > 0) extra += " \\oplus \\mathbb{Z}^{" + (*d)["free_rank"].dump() + "}";
    s += (*d)["method"].get<std::string>() + " & $\\varinjlim " + latex_matrix((*d)["core"]) + extra + "$ & " +
         (*d)["total_rank"].dump() + " \\\\\n";
  }
  if (any_cohomology) s += "\\end{tabular}\n";
  if (const json* d = ok("properization")) {
    s += "\\subsection*{Properization}\nReturn alphabet " + (*d)["return_words"].get<std::string>() + ", $\\eta = " +
         (*d)["eta"].get<std::string>() + "$, $\\eta^{" + (*d)["n"].dump() + "}$ left-proper.\n";
  }
  if (const json* d = ok("pisot")) {
    s += "\\subsection*{Pisot}\n";
    s += (*d)["irreducible_pisot"].get<bool>() ? "Irreducible Pisot" : (*d)["pisot"].get<bool>() ? "Pisot, not irreducible" : "Not Pisot";
    s += "; minimal polynomial of $\\lambda_{PF}$: $" + latex_poly((*d)["minimal_polynomial"]) + "$.\n";
  }
  if (const json* d = ok("coincidence")) {
    s += "\\subsection*{Strong coincidence}\n";
    s += (*d)["strongly_coincident"].get<bool>() ? "Strongly coincident after " + (*d)["iteration"].dump() + " iterations.\n"
                                                  : "No strong coincidence up to $n = " + (*d)["cap"].dump() + "$.\n";
  }
  if (const json* d = ok("complexes")) {
    s += "\\subsection*{Barge-Diamond complex}\n\\begin{center}\n" + tikz_picture(graph_from_json((*d)["bd"])) + "\\end{center}\n";
    s += "\\subsection*{Anderson-Putnam complex}\n\\begin{center}\n" + tikz_picture(graph_from_json((*d)["ap"])) + "\\end{center}\n";
  }
  bool refusals = false;
  for (const auto& name : stage_names()) {
    const auto it = r.stages.find(name);
    if (it == r.stages.end() || it->second.status == StageStatus::Ok || it->second.status == StageStatus::NotRequested) continue;
    if (!refusals) s += "\\subsection*{Not computed}\n\\begin{itemize}\n";
    refusals = true;
    s += "\\item " + latex_text(name) + ": " + latex_text(it->second.reason) + "\n";
  }
  if (refusals) s += "\\end{itemize}\n";
  return s + "\\end{document}\n";
}

}  // namespace subst
