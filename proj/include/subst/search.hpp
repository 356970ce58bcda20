#pragma once

// Chunked, resumable, multi-threaded search for irreducible Pisot
// substitutions that fail strong coincidence.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subst/pisot.hpp"

namespace subst {

inline constexpr std::uint64_t kDefaultChunkSize = 10'000;

struct SearchOptions {
  std::size_t letters = 3;
  std::uint64_t from = 0;
  std::uint64_t count = 0;
  int cap = kDefaultCoincidenceCap;
  unsigned workers = 1;
  std::filesystem::path out;  // empty: keep everything in memory
  bool resume = false;
  std::uint64_t chunk_size = kDefaultChunkSize;
  std::size_t budget = kDefaultWordBudget;
  // Stop handing out chunks after this many complete (simulated kill).
  std::optional<std::size_t> stop_after_chunks;
};

enum class SearchOutcome { Coincident, CapReached, Budget, Undecided };

struct SearchRecord {
  std::uint64_t index = 0;  // canonical index
  std::string share;
  SearchOutcome outcome = SearchOutcome::Coincident;
  int iteration = 0;
  friend bool operator==(const SearchRecord&, const SearchRecord&) = default;
};

// index,"share",irreducible_pisot,coincidence_n
std::string to_csv(const SearchRecord& r);
SearchRecord parse_csv_record(const std::string& line);
inline constexpr const char* kSearchCsvHeader = "index,share_string,irreducible_pisot,coincidence_n";

struct SearchResult {
  bool complete = false;
  std::uint64_t enumerated = 0;
  std::size_t chunks = 0;
  std::size_t chunks_resumed = 0;  // taken from a checkpoint
  std::vector<SearchRecord> records;  // irreducible Pisot, by index
  std::map<int, std::uint64_t> histogram;
  std::vector<SearchRecord> cap_outs, budget_outs, undecided;
  int max_iteration = 0;
};

// Writes chunks/, checkpoint.txt, results.csv and histogram.json under
// options.out when set. Results do not depend on the worker count.
SearchResult run_search(const SearchOptions& options);

std::string histogram_json(const SearchResult& result, const SearchOptions& options);

}  // namespace subst
