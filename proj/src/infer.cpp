#include "combty/infer.hpp"

#include <utility>
#include <vector>

namespace combty {

namespace {

struct InferRun {
  const Context& gamma;
  Budget budget;
  Verdict fail = Verdict::Typed;  // Typed means "no failure yet"
  std::vector<char> path;
  std::string fail_path;

  explicit InferRun(const Context& g, std::uint64_t limit) : gamma(g) { budget.limit = limit; }

  void record_failure(Verdict v) {
    if (fail != Verdict::Typed) return;  // keep the first failure in traversal order
    fail = v;
    fail_path.clear();
    for (size_t i = 0; i < path.size(); ++i) {
      if (i > 0) fail_path += '.';
      fail_path += (path[i] == 'f') ? "fun" : "arg";
    }
  }

  // Returns the type, or null after recording a failure. Both sides of an
  // application are inferred even if one fails, matching the eager pair
  // evaluation of the reference algorithm (counts are unaffected by failure
  // order, reports take the first failing node).
  Type run(const Term& m) {
    switch (m->kind()) {
      case TermKind::S:
        return s0();
      case TermKind::K:
        return k0();
      case TermKind::Var: {
        auto ty = gamma.lookup(m->name());
        if (!ty) {
          record_failure(Verdict::Untypable);
          return nullptr;
        }
        return *ty;
      }
      case TermKind::App: {
        path.push_back('f');
        Type f = run(m->fun());
        path.back() = 'a';
        Type a = run(m->arg());
        path.pop_back();
        if (!f || !a) return nullptr;
        AppResult r = apply_type(std::move(f), std::move(a), budget);
        if (!r.ok()) {
          record_failure(r.failure().kind == AppErrorKind::BudgetExhausted ? Verdict::OutOfBudget
                                                                           : Verdict::Untypable);
          return nullptr;
        }
        return r.type();
      }
    }
    return nullptr;
  }
};

}  // namespace

InferReport infer(const Context& gamma, const Term& m, std::uint64_t limit) {
  InferRun run(gamma, limit);
  Type ty = run.run(m);
  InferReport rep;
  rep.term_size = term_size(m);
  rep.limit = limit;
  rep.calls = run.budget.used;
  rep.ratio = rep.term_size > 0 ? static_cast<double>(rep.calls) / static_cast<double>(rep.term_size)
                                : 0.0;
  if (ty) {
    rep.verdict = Verdict::Typed;
    rep.type = std::move(ty);
  } else {
    rep.verdict = run.fail;
    rep.untypable_path = run.fail_path;
  }
  return rep;
}

std::uint64_t default_limit(const Term& t, std::uint64_t factor) {
  return factor * term_size(t);
}

bool check_derivation(const Context& gamma, const Term& m, const Type& claimed,
                      std::uint64_t limit) {
  // Explicit-stack postorder synthesis; shares only apply_type with infer.
  Budget budget;
  budget.limit = limit;
  std::vector<std::pair<const TermNode*, bool>> work;  // (node, children done)
  std::vector<Type> values;
  work.emplace_back(m.get(), false);
  while (!work.empty()) {
    const TermNode* n = work.back().first;
    if (!work.back().second && n->kind() == TermKind::App) {
      work.back().second = true;
      work.emplace_back(n->fun().get(), false);
      work.emplace_back(n->arg().get(), false);
      continue;
    }
    work.pop_back();
    switch (n->kind()) {
      case TermKind::S:
        values.push_back(s0());
        break;
      case TermKind::K:
        values.push_back(k0());
        break;
      case TermKind::Var: {
        auto ty = gamma.lookup(n->name());
        if (!ty) return false;
        values.push_back(*ty);
        break;
      }
      case TermKind::App: {
        // arg was pushed last, so it completed first; fun's type is on top.
        Type fun_ty_ = std::move(values.back());
        values.pop_back();
        Type arg_ty = std::move(values.back());
        values.pop_back();
        AppResult r = apply_type(std::move(fun_ty_), std::move(arg_ty), budget);
        if (!r.ok()) return false;
        values.push_back(r.type());
        break;
      }
    }
  }
  return values.size() == 1 && equal(values.back(), claimed);
}

}  // namespace combty
