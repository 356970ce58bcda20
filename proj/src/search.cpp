#include "subst/search.hpp"

#include <atomic>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "subst/enumeration.hpp"
#include "subst/error.hpp"

namespace subst {

namespace fs = std::filesystem;

std::string to_csv(const SearchRecord& r) {
  std::string verdict = r.outcome == SearchOutcome::Undecided ? "undecided" : "true";
  std::string n;
  switch (r.outcome) {
    case SearchOutcome::Coincident: n = std::to_string(r.iteration); break;
    case SearchOutcome::CapReached: n = "cap"; break;
    case SearchOutcome::Budget: n = "budget"; break;
    case SearchOutcome::Undecided: n = "-"; break;
  }
  return std::to_string(r.index) + ",\"" + r.share + "\"," + verdict + "," + n;
}

SearchRecord parse_csv_record(const std::string& line) {
  SearchRecord r;
  const auto q1 = line.find(",\"");
  const auto q2 = line.find("\",", q1 == std::string::npos ? 0 : q1 + 2);
  if (q1 == std::string::npos || q2 == std::string::npos) throw ParseError("malformed search record: " + line);
  try {
    r.index = std::stoull(line.substr(0, q1));
  } catch (const std::exception&) {
    throw ParseError("malformed search record: " + line);
  }
  r.share = line.substr(q1 + 2, q2 - q1 - 2);
  const std::string rest = line.substr(q2 + 2);
  const auto comma = rest.find(',');
  if (comma == std::string::npos) throw ParseError("malformed search record: " + line);
  const std::string verdict = rest.substr(0, comma), n = rest.substr(comma + 1);
  if (verdict == "undecided") {
    r.outcome = SearchOutcome::Undecided;
  } else if (n == "cap") {
    r.outcome = SearchOutcome::CapReached;
  } else if (n == "budget") {
    r.outcome = SearchOutcome::Budget;
  } else {
    r.outcome = SearchOutcome::Coincident;
    r.iteration = std::stoi(n);
  }
  return r;
}

namespace {

std::optional<SearchRecord> examine(std::uint64_t index, const Substitution& phi, const SearchOptions& o) {
  SearchRecord r;
  r.index = index;
  r.share = serialize(phi);
  try {
    if (!is_irreducible_pisot(phi)) return std::nullopt;
  } catch (const UndecidedExact&) {
    r.outcome = SearchOutcome::Undecided;
    return r;
  }
  const auto c = strong_coincidence(phi, o.cap, o.budget);
  if (c.strongly_coincident) {
    r.iteration = c.iteration;
  } else {
    r.outcome = c.budget_exceeded ? SearchOutcome::Budget : SearchOutcome::CapReached;
  }
  return r;
}

void write_atomically(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::string run_signature(const SearchOptions& o) {
  nlohmann::json j = {{"letters", o.letters}, {"from", o.from}, {"count", o.count},
                      {"cap", o.cap}, {"chunk_size", o.chunk_size}, {"budget", o.budget}};
  return j.dump() + "\n";
}

// chunk_id:last_index lines of completed chunks.
std::map<std::size_t, std::uint64_t> read_checkpoint(const fs::path& path) {
  std::map<std::size_t, std::uint64_t> done;
  std::ifstream f(path);
  std::string line;
  while (std::getline(f, line)) {
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    done[std::stoul(line.substr(0, colon))] = std::stoull(line.substr(colon + 1));
  }
  return done;
}

std::string chunk_name(std::size_t id) { return "chunk_" + std::to_string(id) + ".csv"; }

}  // namespace

SearchResult run_search(const SearchOptions& o) {
  if (o.letters < 2) throw ParseError("search needs at least two letters");
  if (o.chunk_size == 0) throw ParseError("chunk size must be positive");
  const bool on_disk = !o.out.empty();
  const fs::path chunk_dir = o.out / "chunks", checkpoint = o.out / "checkpoint.txt", run_file = o.out / "run.json";

  SearchResult result;
  result.enumerated = o.count;
  result.chunks = static_cast<std::size_t>((o.count + o.chunk_size - 1) / o.chunk_size);

  std::map<std::size_t, std::uint64_t> done;
  if (on_disk) {
    fs::create_directories(chunk_dir);
    if (o.resume && fs::exists(run_file)) {
      if (read_file(run_file) != run_signature(o)) throw ParseError("resume with different search parameters");
      done = read_checkpoint(checkpoint);
    } else {
      for (const auto& e : fs::directory_iterator(chunk_dir)) fs::remove(e.path());
      fs::remove(checkpoint);
      write_atomically(run_file, run_signature(o));
    }
  }
  auto chunk_end = [&](std::size_t id) { return std::min(o.count, (id + 1) * o.chunk_size); };
  auto chunk_done = [&](std::size_t id) {
    const auto it = done.find(id);
    return it != done.end() && it->second == o.from + chunk_end(id) - 1 && fs::exists(chunk_dir / chunk_name(id));
  };

  std::vector<std::size_t> pending;
  for (std::size_t id = 0; id < result.chunks; ++id) {
    if (chunk_done(id))
      ++result.chunks_resumed;
    else
      pending.push_back(id);
  }

  const std::vector<Substitution> list = enumerate_substitutions(o.letters, o.from, o.count);
  std::vector<std::vector<SearchRecord>> per_chunk(result.chunks);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> completed{0};
  std::mutex checkpoint_mutex;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      for (;;) {
        if (o.stop_after_chunks && completed.load() >= *o.stop_after_chunks) return;
        const std::size_t k = next.fetch_add(1);
        if (k >= pending.size()) return;
        const std::size_t id = pending[k];
        std::vector<SearchRecord>& records = per_chunk[id];
        for (std::uint64_t i = id * o.chunk_size; i < chunk_end(id); ++i)
          if (auto r = examine(o.from + i, list[static_cast<std::size_t>(i)], o)) records.push_back(std::move(*r));
        if (on_disk) {
          std::string text;
          for (const auto& r : records) text += to_csv(r) + "\n";
          write_atomically(chunk_dir / chunk_name(id), text);
          std::lock_guard lock(checkpoint_mutex);
          done[id] = o.from + chunk_end(id) - 1;
          std::string lines;
          for (const auto& [cid, last] : done) lines += std::to_string(cid) + ":" + std::to_string(last) + "\n";
          write_atomically(checkpoint, lines);
        }
        ++completed;
      }
    } catch (...) {
      std::lock_guard lock(checkpoint_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  const unsigned n_workers = std::max(1u, o.workers);
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < n_workers; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  result.complete = next.load() >= pending.size() && completed.load() == pending.size();
  if (!result.complete) return result;

  // Merge from the chunk files so resumed and fresh runs agree.
  for (std::size_t id = 0; id < result.chunks; ++id) {
    if (on_disk) {
      std::ifstream f(chunk_dir / chunk_name(id));
      std::string line;
      while (std::getline(f, line))
        if (!line.empty()) result.records.push_back(parse_csv_record(line));
    } else {
      for (auto& r : per_chunk[id]) result.records.push_back(std::move(r));
    }
  }
  for (const auto& r : result.records) {
    switch (r.outcome) {
      case SearchOutcome::Coincident:
        ++result.histogram[r.iteration];
        result.max_iteration = std::max(result.max_iteration, r.iteration);
        break;
      case SearchOutcome::CapReached: result.cap_outs.push_back(r); break;
      case SearchOutcome::Budget: result.budget_outs.push_back(r); break;
      case SearchOutcome::Undecided: result.undecided.push_back(r); break;
    }
  }
  if (on_disk) {
    std::string csv = std::string(kSearchCsvHeader) + "\n";
    for (const auto& r : result.records) csv += to_csv(r) + "\n";
    write_atomically(o.out / "results.csv", csv);
    write_atomically(o.out / "histogram.json", histogram_json(result, o));
  }
  return result;
}

std::string histogram_json(const SearchResult& r, const SearchOptions& o) {
  auto list = [](const std::vector<SearchRecord>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back({{"index", x.index}, {"sub", x.share}});
    return a;
  };
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [n, c] : r.histogram) hist.push_back({{"iterations", n}, {"count", c}});
  std::uint64_t pisot = r.records.size() - r.undecided.size();
  nlohmann::json j = {
      {"schema", 1},           {"letters", o.letters},    {"from", o.from},
      {"count", o.count},      {"cap", o.cap},            {"enumerated", r.enumerated},
      {"irreducible_pisot", pisot}, {"histogram", hist},  {"max_iteration", r.max_iteration},
      {"cap_outs", list(r.cap_outs)}, {"budget_outs", list(r.budget_outs)}, {"undecided", list(r.undecided)},
  };
  return j.dump(2) + "\n";
}

}  // namespace subst
