#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "subst/error.hpp"
#include "subst/report.hpp"
#include "subst/search.hpp"
#include "subst/service.hpp"

using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBudget = 4;

struct AnalyzeArgs {
  std::string sub;
  std::optional<int> complexity;
  std::vector<int> words;
  std::string cohomology;
  bool pisot = false;
  bool coincidence = false;
  std::optional<int> cap;
  std::optional<int> precision;
  std::string format;
  std::string out;
};

bool emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream f(out, std::ios::binary);
  f << text;
  if (!f) std::cerr << "error: cannot write " << out << "\n";
  return static_cast<bool>(f);
}

// Flags become the same options object the HTTP service accepts.
json options_json(const AnalyzeArgs& a) {
  json o = json::object();
  if (a.complexity) o["complexity"] = *a.complexity;
  if (!a.words.empty()) o["words"] = a.words;
  if (!a.cohomology.empty()) o["cohomology"] = a.cohomology;
  if (a.pisot) o["pisot"] = true;
  if (a.coincidence) o["coincidence"] = true;
  if (a.cap) o["cap"] = *a.cap;
  if (a.precision) o["precision"] = *a.precision;
  if ((a.format == "dot" || a.format == "tikz") && !o.empty()) o["complexes"] = true;
  return o;
}

int analyze_command(const AnalyzeArgs& a) {
  try {
    const subst::AnalysisOptions options = subst::options_from_json(options_json(a));
    const subst::AnalysisReport report = subst::analyze(a.sub, options);
    std::string text;
    if (a.format == "json") {
      text = subst::to_json(report).dump(2) + "\n";
    } else if (a.format == "latex") {
      text = subst::export_latex(report);
    } else if (a.format == "dot" || a.format == "tikz") {
      text = subst::export_complexes(report, a.format == "tikz");
    } else {
      text = subst::render_text(report);
    }
    if (!emit(text, a.out)) return 1;
    return subst::report_exit_code(report, options);
  } catch (const subst::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const subst::Refused& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  }
}

int search_command(const subst::SearchOptions& o) {
  try {
    const subst::SearchResult r = subst::run_search(o);
    std::cout << "enumerated " << r.enumerated << " canonical substitutions in " << r.chunks << " chunks";
    if (r.chunks_resumed) std::cout << " (" << r.chunks_resumed << " from checkpoint)";
    std::cout << "\nirreducible Pisot: " << r.records.size() << "\n";
    for (const auto& [n, count] : r.histogram) std::cout << "  n=" << n << ": " << count << "\n";
    std::cout << "cap-outs: " << r.cap_outs.size() << ", budget-outs: " << r.budget_outs.size()
              << ", undecided: " << r.undecided.size() << "\n";
    for (const auto& rec : r.cap_outs) std::cout << "  no coincidence by n=" << o.cap << ": " << rec.share << "\n";
    if (!r.complete) {
      std::cout << "stopped early; rerun with --resume\n";
      return 1;
    }
    return r.budget_outs.empty() ? 0 : kExitBudget;
  } catch (const subst::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Substitution tiling analysis"};
  app.require_subcommand(1);

  AnalyzeArgs a;
  auto* analyze = app.add_subcommand("analyze", "Analyze one substitution given as a share-string");
  analyze->add_option("--sub", a.sub, "Images separated by commas, e.g. 01,10")->required();
  analyze->add_option("--complexity", a.complexity, "Complexity prefix up to n")->check(CLI::Range(1, 200));
  analyze->add_option("--words", a.words, "Admitted words of these lengths")->delimiter(',')->check(CLI::Range(1, 16));
  analyze->add_option("--cohomology", a.cohomology, "Cohomology method")
      ->check(CLI::IsMember({"bd", "ap", "proper", "all"}));
  analyze->add_flag("--pisot", a.pisot, "Pisot classification and balanced pairs");
  analyze->add_flag("--coincidence", a.coincidence, "Strong coincidence");
  analyze->add_option("--cap", a.cap, "Iteration cap for strong coincidence")->check(CLI::Range(1, 200));
  analyze->add_option("--precision", a.precision, "Decimal digits for Perron-Frobenius data")->check(CLI::Range(1, 200));
  analyze->add_option("--export", a.format, "Output format")->check(CLI::IsMember({"dot", "tikz", "latex", "json"}));
  analyze->add_option("--out", a.out, "Write output to this file");

  subst::SearchOptions s;
  std::size_t stop_after = 0;
  std::string out_dir;
  auto* search = app.add_subcommand("search", "Search canonical substitutions for strong coincidence failures");
  search->add_option("--letters", s.letters, "Alphabet size")->check(CLI::Range(2, 6));
  search->add_option("--from", s.from, "First canonical index");
  search->add_option("--count", s.count, "Number of canonical substitutions")->required();
  search->add_option("--cap", s.cap, "Iteration cap")->check(CLI::Range(1, 200));
  search->add_option("--workers", s.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  search->add_option("--out", out_dir, "Output directory");
  search->add_option("--chunk-size", s.chunk_size, "Substitutions per chunk")->check(CLI::Range(1, 100'000'000));
  search->add_flag("--resume", s.resume, "Continue from the checkpoint in --out");
  search->add_option("--stop-after-chunks", stop_after)->group("");
  s.workers = std::max(1u, std::thread::hardware_concurrency());

  std::string bind = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Serve the JSON API");
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  serve->add_option("--bind", bind, "Address to bind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (*analyze) return analyze_command(a);
  if (*search) {
    s.out = out_dir;
    if (stop_after) s.stop_after_chunks = stop_after;
    if (s.resume && out_dir.empty()) {
      std::cerr << "error: --resume needs --out\n";
      return kExitParse;
    }
    return search_command(s);
  }
  if (!subst::serve(bind, port)) {
    std::cerr << "error: cannot bind " << bind << ":" << port << "\n";
    return 1;
  }
  return 0;
}
