#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "combty/bench.hpp"
#include "combty/infer.hpp"
#include "combty/prelude.hpp"
#include "combty/surface.hpp"
#include "json.hpp"

namespace {

using namespace combty;
using nlohmann::json;

constexpr int kExitTyped = 0;
constexpr int kExitUntypable = 1;
constexpr int kExitOutOfBudget = 2;
constexpr int kExitParseError = 3;
constexpr int kExitUsage = 64;

void usage() {
  std::cerr <<
      "usage: combty <command> [flags] <input>\n"
      "\n"
      "commands:\n"
      "  infer <term>     infer a type; exits 0 typed, 1 untypable, 2 out of budget\n"
      "      --budget-factor N   calls limit = N * size (default 100)\n"
      "      --limit N           absolute calls limit (overrides factor)\n"
      "      --context \"x:TY,..\"  variable typings\n"
      "      --format text|json\n"
      "  reduce <term>    reduce to normal form\n"
      "      --steps N            step limit (default 1000000)\n"
      "      --trace              print each contraction\n"
      "  desugar <term>   print the elaborated combinator and its size\n"
      "  bench            run the metrics corpus\n"
      "      --corpus builtin|medium|<file>   (default builtin)\n"
      "      --budget-factor N    (default 100)\n"
      "      --format text|json\n";
}

struct Args {
  std::vector<std::string> positional;
  std::uint64_t budget_factor = 100;
  std::uint64_t limit = 0;
  bool has_limit = false;
  std::string context;
  std::string format = "text";
  std::uint64_t steps = 1000000;
  bool trace = false;
  std::string corpus = "builtin";
};

bool parse_u64(const std::string& s, std::uint64_t& out) {
  try {
    size_t idx = 0;
    unsigned long long v = std::stoull(s, &idx);
    if (idx != s.size()) return false;
    out = v;
    return true;
  } catch (...) {
    return false;
  }
}

int parse_args(int argc, char** argv, int start, Args& args) {
  for (int i = start; i < argc; ++i) {
    std::string a = argv[i];
    auto need_value = [&](const char* flag) -> const char* {
      if (i + 1 >= argc) {
        std::cerr << "combty: " << flag << " needs a value\n";
        return nullptr;
      }
      return argv[++i];
    };
    if (a == "--budget-factor") {
      const char* v = need_value("--budget-factor");
      if (!v || !parse_u64(v, args.budget_factor) || args.budget_factor == 0) return kExitUsage;
    } else if (a == "--limit") {
      const char* v = need_value("--limit");
      if (!v || !parse_u64(v, args.limit)) return kExitUsage;
      args.has_limit = true;
    } else if (a == "--context") {
      const char* v = need_value("--context");
      if (!v) return kExitUsage;
      args.context = v;
    } else if (a == "--format") {
      const char* v = need_value("--format");
      if (!v) return kExitUsage;
      args.format = v;
      if (args.format != "text" && args.format != "json") {
        std::cerr << "combty: --format must be text or json\n";
        return kExitUsage;
      }
    } else if (a == "--steps") {
      const char* v = need_value("--steps");
      if (!v || !parse_u64(v, args.steps)) return kExitUsage;
    } else if (a == "--trace") {
      args.trace = true;
    } else if (a == "--corpus") {
      const char* v = need_value("--corpus");
      if (!v) return kExitUsage;
      args.corpus = v;
    } else if (a == "--help" || a == "-h") {
      usage();
      return -1;
    } else if (!a.empty() && a[0] == '-') {
      std::cerr << "combty: unknown flag " << a << "\n";
      return kExitUsage;
    } else {
      args.positional.push_back(a);
    }
  }
  return 0;
}

std::string joined_input(const Args& args) {
  std::string input;
  for (const auto& p : args.positional) {
    if (!input.empty()) input += ' ';
    input += p;
  }
  return input;
}

bool parse_context(const std::string& spec, Context& ctx, std::string& err) {
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    pos = comma == std::string::npos ? spec.size() : comma + 1;
    std::size_t colon = item.find(':');
    if (colon == std::string::npos) {
      err = "context entry needs name:TYPE, got '" + item + "'";
      return false;
    }
    std::string name = item.substr(0, colon);
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    while (!name.empty() && name.back() == ' ') name.pop_back();
    if (name.empty()) {
      err = "empty variable name in context";
      return false;
    }
    try {
      ctx.bind(name, parse_type(item.substr(colon + 1)));
    } catch (const ParseError& e) {
      err = "bad type for " + name + ": " + e.what();
      return false;
    }
  }
  return true;
}

int cmd_infer(const Args& args) {
  std::string input = joined_input(args);
  Context ctx;
  std::string err;
  if (!parse_context(args.context, ctx, err)) {
    std::cerr << "combty: " << err << "\n";
    return kExitParseError;
  }
  Term t;
  try {
    t = elaborate(parse_term(input));
  } catch (const ParseError& e) {
    std::cerr << "combty: parse error at " << e.position() << ": " << e.what() << "\n";
    return kExitParseError;
  }
  std::uint64_t limit = args.has_limit ? args.limit : default_limit(t, args.budget_factor);
  InferReport rep = infer(ctx, t, limit);

  const char* verdict = rep.verdict == Verdict::Typed        ? "yes"
                        : rep.verdict == Verdict::Untypable ? "no"
                                                            : "budget";
  if (args.format == "json") {
    json out = {
        {"input", input},    {"size", rep.term_size}, {"verdict", verdict},
        {"calls", rep.calls}, {"ratio", rep.ratio},    {"limit", rep.limit},
    };
    if (rep.verdict == Verdict::Typed) out["type"] = print_type(rep.type);
    std::cout << out.dump() << "\n";
  } else {
    switch (rep.verdict) {
      case Verdict::Typed:
        std::cout << print_type(rep.type) << "\n";
        break;
      case Verdict::Untypable:
        std::cout << "untypable at "
                  << (rep.untypable_path.empty() ? "root" : rep.untypable_path) << "\n";
        break;
      case Verdict::OutOfBudget:
        std::cout << "out of budget (limit " << rep.limit << ")\n";
        break;
    }
    std::cout << "size " << rep.term_size << ", calls " << rep.calls << ", ratio " << std::fixed
              << std::setprecision(2) << rep.ratio << "\n";
  }
  switch (rep.verdict) {
    case Verdict::Typed:
      return kExitTyped;
    case Verdict::Untypable:
      return kExitUntypable;
    case Verdict::OutOfBudget:
      return kExitOutOfBudget;
  }
  return kExitTyped;
}

int cmd_reduce(const Args& args) {
  Term t;
  try {
    t = elaborate(parse_term(joined_input(args)));
  } catch (const ParseError& e) {
    std::cerr << "combty: parse error at " << e.position() << ": " << e.what() << "\n";
    return kExitParseError;
  }
  if (args.trace) {
    Term cur = t;
    std::uint64_t step = 0;
    std::cout << print_term(cur) << "\n";
    while (step < args.steps) {
      auto next = reduce_step(cur);
      if (!next) break;
      cur = *next;
      ++step;
      std::cout << "-> " << print_term(cur) << "\n";
    }
    if (!cur->normal()) {
      std::cout << "stopped after " << step << " steps (not normal)\n";
    }
    return 0;
  }
  ReduceResult r = reduce(t, args.steps);
  if (r.normal) {
    std::cout << print_term(r.term) << "\n";
  } else {
    std::cout << "no normal form within " << args.steps << " steps\n";
  }
  return 0;
}

int cmd_desugar(const Args& args) {
  Term t;
  try {
    t = elaborate(parse_term(joined_input(args)));
  } catch (const ParseError& e) {
    std::cerr << "combty: parse error at " << e.position() << ": " << e.what() << "\n";
    return kExitParseError;
  }
  std::cout << print_term_compact(t) << ", size " << printed_size(t) << "\n";
  return 0;
}

int cmd_bench(const Args& args) {
  std::vector<CorpusEntry> corpus;
  std::vector<std::string> row_errors;
  try {
    if (args.corpus == "builtin") {
      corpus = builtin_corpus();
    } else if (args.corpus == "medium") {
      corpus = medium_corpus();
    } else {
      corpus = load_corpus_file(args.corpus, &row_errors);
    }
  } catch (const std::exception& e) {
    std::cerr << "combty: " << e.what() << "\n";
    return kExitParseError;
  }
  for (const std::string& err : row_errors) {
    std::cerr << "combty: skipped corpus row, " << err << "\n";
  }

  double max_ratio = 0.0;
  std::string max_label;
  std::size_t width = 5;
  for (const auto& e : corpus) width = std::max(width, e.label.size());

  if (args.format == "text") {
    std::cout << std::left << std::setw(static_cast<int>(width)) << "term"
              << "  verdict  size      calls     ratio\n";
  }
  for (const auto& entry : corpus) {
    BenchRow row = run_row(entry, args.budget_factor);
    if (row.verdict == "yes" && row.ratio > max_ratio) {
      max_ratio = row.ratio;
      max_label = row.label;
    }
    if (args.format == "json") {
      json out = {{"label", row.label},
                  {"verdict", row.verdict},
                  {"size", row.size},
                  {"calls", row.calls},
                  {"ratio", row.ratio}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << std::left << std::setw(static_cast<int>(width)) << row.label << "  "
                << std::setw(7) << row.verdict << "  " << std::setw(8) << row.size << "  "
                << std::setw(8) << row.calls << "  " << std::fixed << std::setprecision(2)
                << row.ratio << "\n";
    }
  }
  if (args.format == "text") {
    std::cout << "max ratio (typed rows): " << std::fixed << std::setprecision(2) << max_ratio
              << " (" << max_label << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    usage();
    return kExitUsage;
  }
  std::string cmd = argv[1];
  Args args;
  int rc = parse_args(argc, argv, 2, args);
  if (rc == -1) return 0;
  if (rc != 0) return rc;

  if (cmd == "infer") return cmd_infer(args);
  if (cmd == "reduce") return cmd_reduce(args);
  if (cmd == "desugar") return cmd_desugar(args);
  if (cmd == "bench") return cmd_bench(args);
  usage();
  return kExitUsage;
}
