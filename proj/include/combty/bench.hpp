#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "combty/infer.hpp"
#include "combty/term.hpp"

namespace combty {

// One metrics row: term label, has-type verdict, size, apply_type calls and
// the calls/size ratio.
struct BenchRow {
  std::string label;
  std::string verdict;  // "yes", "no" or "budget"
  std::uint64_t size = 0;
  std::uint64_t calls = 0;
  double ratio = 0.0;
};

struct CorpusEntry {
  std::string label;
  Term term;
};

// S applied to itself n times (n+1 operator leaves).
Term s_power(unsigned n);

// The built-in corpus: every reference metrics row except the two large
// compiler rows, which are replaced by medium_corpus().
std::vector<CorpusEntry> builtin_corpus();

// A bundled medium-sized program of nested prelude code (a few thousand
// operators) standing in for the large-compiler rows.
std::vector<CorpusEntry> medium_corpus();

BenchRow run_row(const CorpusEntry& entry, std::uint64_t budget_factor);
std::vector<BenchRow> run_corpus(const std::vector<CorpusEntry>& corpus,
                                 std::uint64_t budget_factor);

// Corpus file format: one surface term per line; a line starting with '#'
// labels the next term; blank lines are ignored. Lines that fail to parse
// are reported through errors (when given) and skipped, never aborting the
// load. Throws only when the file cannot be opened.
std::vector<CorpusEntry> load_corpus_file(const std::string& path,
                                          std::vector<std::string>* errors = nullptr);

}  // namespace combty
