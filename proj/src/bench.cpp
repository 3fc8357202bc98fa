#include "combty/bench.hpp"

#include <fstream>
#include <stdexcept>

#include "combty/prelude.hpp"
#include "combty/surface.hpp"

namespace combty {

using namespace prelude;

Term s_power(unsigned n) {
  Term t = op_s();
  for (unsigned i = 0; i < n; ++i) t = app(t, op_s());
  return t;
}

namespace {

Term sii_sii() {
  Term sii = app(op_s(), I(), I());
  return app(sii, sii);
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> rows;
  auto add = [&](std::string label, Term t) { rows.push_back({std::move(label), std::move(t)}); };

  add("cond tt ff tt", app(cond(), tt(), ff(), tt()));
  add("cond tt tt zero", app(cond(), tt(), tt(), zero()));
  add("cond (cond tt ff tt) ff tt", app(cond(), app(cond(), tt(), ff(), tt()), ff(), tt()));
  add("pair ff tt", app(pair(), ff(), tt()));
  add("snd (pair ff tt)", app(snd(), app(pair(), ff(), tt())));
  add("pair (pair ff tt) tt", app(pair(), app(pair(), ff(), tt()), tt()));
  add("successor tt", app(successor(), tt()));
  add("successor zero", numeral(1));
  add("successor^3 zero", numeral(3));
  add("successor^1000 zero", numeral(1000));
  add("predecessor zero", app(predecessor(), zero()));
  add("isZero", is_zero());
  add("isZero zero", app(is_zero(), zero()));
  add("isZero (successor zero)", app(is_zero(), numeral(1)));
  add("isZero tt", app(is_zero(), tt()));
  add("case (pair isZero I) (inl (pair zero tt))",
      app(case_(), app(pair(), is_zero(), I()), app(inl(), app(pair(), zero(), tt()))));
  add("case (pair isZero I) (inr (pair zero tt))",
      app(case_(), app(pair(), is_zero(), I()), app(inr(), app(pair(), zero(), tt()))));
  add("case (pair I I) (inr (pair zero tt))",
      app(case_(), app(pair(), I(), I()), app(inr(), app(pair(), zero(), tt()))));
  add("lam x (isZero x) zero", lam("x", app(is_zero(), var("x")), zero()));
  add("lam x x zero zero", app(lam("x", var("x"), zero()), zero()));
  add("lam x x zero tt", app(lam("x", var("x"), zero()), tt()));
  add("cond_mono{zero}", cond_mono(zero()));
  add("cond_mono{zero} tt", app(cond_mono(zero()), tt()));
  add("cond_mono{zero} tt zero", app(cond_mono(zero()), tt(), zero()));
  add("cond_mono{zero} tt ff", app(cond_mono(zero()), tt(), ff()));
  add("plus (successor zero)", app(plus(), numeral(1)));
  add("plus (successor zero) zero", app(plus(), numeral(1), zero()));
  add("plus (successor zero) tt", app(plus(), numeral(1), tt()));
  add("cons (pair ff (nil zero))",
      app(cons(), app(pair(), ff(), app(nil(), zero()))));
  add("cons (pair ff (nil tt))", app(cons(), app(pair(), ff(), app(nil(), tt()))));
  add("cons (pair ff (cons (pair tt (nil tt))))",
      app(cons(), app(pair(), ff(), app(cons(), app(pair(), tt(), app(nil(), tt()))))));
  add("fold_left{plus}", fold_left(plus()));
  add("S^4", s_power(4));
  add("S^10", s_power(10));
  add("S^100", s_power(100));
  add("(SII)(SII)", sii_sii());
  return rows;
}

std::vector<CorpusEntry> medium_corpus() {
  // A nested prelude program: fold a short list of numerals with plus, then
  // branch on the sum, route it through a sum type and a function type.
  Term lst = app(nil(), zero());
  for (unsigned n : {2u, 0u, 3u, 1u, 2u}) {
    lst = app(cons(), app(pair(), numeral(n), lst));
  }
  Term total = app(fold_left(plus()), app(pair(), zero(), lst));
  Term branch = app(cond(), app(is_zero(), total), numeral(1), app(predecessor(), total));
  Term routed = app(case_(), app(pair(), I(), I()), app(inr(), app(pair(), zero(), total)));
  Term summed = app(plus(), branch, routed);
  Term through_fun = app(lam("x", app(plus(), var("x"), numeral(2)), zero()), summed);
  return {{"medium corpus program", through_fun}};
}

BenchRow run_row(const CorpusEntry& entry, std::uint64_t budget_factor) {
  BenchRow row;
  row.label = entry.label;
  InferReport rep = infer(Context{}, entry.term, default_limit(entry.term, budget_factor));
  row.size = rep.term_size;
  row.calls = rep.calls;
  row.ratio = rep.ratio;
  switch (rep.verdict) {
    case Verdict::Typed:
      row.verdict = "yes";
      break;
    case Verdict::Untypable:
      row.verdict = "no";
      break;
    case Verdict::OutOfBudget:
      row.verdict = "budget";
      break;
  }
  return row;
}

std::vector<BenchRow> run_corpus(const std::vector<CorpusEntry>& corpus,
                                 std::uint64_t budget_factor) {
  std::vector<BenchRow> rows;
  rows.reserve(corpus.size());
  for (const auto& entry : corpus) rows.push_back(run_row(entry, budget_factor));
  return rows;
}

std::vector<CorpusEntry> load_corpus_file(const std::string& path,
                                          std::vector<std::string>* errors) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::vector<CorpusEntry> rows;
  std::string line;
  std::string pending_label;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::size_t l = line.find_first_not_of(" \t", start + 1);
      pending_label = l == std::string::npos ? "" : line.substr(l);
      continue;
    }
    CorpusEntry entry;
    entry.label = pending_label.empty() ? line.substr(start) : pending_label;
    pending_label.clear();
    try {
      entry.term = elaborate(parse_term(line));
    } catch (const ParseError& e) {
      if (errors) {
        errors->push_back("line " + std::to_string(lineno) + ": " + e.what());
      }
      continue;
    }
    rows.push_back(std::move(entry));
  }
  return rows;
}

}  // namespace combty
