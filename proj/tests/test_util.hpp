#pragma once

#include <random>
#include <vector>

#include "combty/prelude.hpp"
#include "combty/term.hpp"

namespace combty::testutil {

// True iff f can take one more argument without creating a redex.
inline bool can_extend(const Term& f) {
  return !(f->head() == TermKind::K && f->spine_args() >= 1) &&
         !(f->head() == TermKind::S && f->spine_args() >= 2);
}

// All closed normal terms with exactly n operator leaves.
inline const std::vector<std::vector<Term>>& normal_terms_by_size(std::size_t max_leaves) {
  static std::vector<std::vector<Term>> by_size;  // by_size[n]
  if (by_size.size() < max_leaves + 1) {
    if (by_size.empty()) {
      by_size.push_back({});
      by_size.push_back({op_s(), op_k()});
    }
    for (std::size_t n = by_size.size(); n <= max_leaves; ++n) {
      std::vector<Term> terms;
      for (std::size_t i = 1; i < n; ++i) {
        for (const Term& f : by_size[i]) {
          if (!can_extend(f)) continue;
          for (const Term& a : by_size[n - i]) terms.push_back(app(f, a));
        }
      }
      by_size.push_back(std::move(terms));
    }
  }
  return by_size;
}

inline std::vector<Term> enumerate_normal_closed(std::size_t max_leaves) {
  const auto& by_size = normal_terms_by_size(max_leaves);
  std::vector<Term> all;
  for (std::size_t n = 1; n <= max_leaves; ++n) {
    all.insert(all.end(), by_size[n].begin(), by_size[n].end());
  }
  return all;
}

// Subterm matcher for applications of S(S(KK)f), the shapes whose types feed
// unpack_constructor. Inference on terms without such subterms stays in the
// plain combinatory arms.
inline bool has_constructor_candidate(const Term& t) {
  if (t->kind() != TermKind::App) return false;
  const Term& f = t->fun();
  if (f->kind() == TermKind::App && f->fun()->kind() == TermKind::S &&
      f->arg()->kind() == TermKind::App) {
    static const Term s_kk = app(op_s(), app(op_k(), op_k()));
    if (equal(f->arg()->fun(), s_kk)) return true;
  }
  return has_constructor_candidate(t->fun()) || has_constructor_candidate(t->arg());
}

// Random closed S/K tree with the given leaf count.
inline Term random_sk_term(std::mt19937& rng, int leaves) {
  if (leaves <= 1) return rng() % 2 == 0 ? op_s() : op_k();
  int left = 1 + static_cast<int>(rng() % static_cast<unsigned>(leaves - 1));
  return app(random_sk_term(rng, left), random_sk_term(rng, leaves - left));
}

// Random closed normal program with at most the given leaf count.
inline Term random_normal_program(std::mt19937& rng, std::size_t max_leaves) {
  const auto& by_size = normal_terms_by_size(max_leaves);
  std::size_t n = 1 + rng() % max_leaves;
  const auto& pool = by_size[n];
  return pool[rng() % pool.size()];
}

// Random term mixing raw S/K trees with prelude programs and small
// constructor applications; exercises both combinatory and abstract arms.
inline Term random_mixed_term(std::mt19937& rng, int depth = 3) {
  using namespace prelude;
  switch (rng() % 10) {
    case 0:
      return random_sk_term(rng, 2 + static_cast<int>(rng() % 8));
    case 1:
      return rng() % 2 ? tt() : ff();
    case 2:
      return numeral(static_cast<unsigned>(rng() % 3));
    case 3:
      return depth > 0 ? app(pair(), random_mixed_term(rng, depth - 1),
                             random_mixed_term(rng, depth - 1))
                       : zero();
    case 4:
      return depth > 0 ? app(rng() % 2 ? fst() : snd(), random_mixed_term(rng, depth - 1))
                       : fst();
    case 5:
      return depth > 0 ? app(cond(), random_mixed_term(rng, depth - 1),
                             random_mixed_term(rng, depth - 1),
                             random_mixed_term(rng, depth - 1))
                       : cond();
    case 6:
      return depth > 0 ? app(rng() % 2 ? is_zero() : predecessor(),
                             random_mixed_term(rng, depth - 1))
                       : is_zero();
    case 7:
      return depth > 0 ? app(successor(), random_mixed_term(rng, depth - 1)) : successor();
    case 8:
      return depth > 0 ? app(random_mixed_term(rng, depth - 1), random_mixed_term(rng, depth - 1))
                       : I();
    default:
      return random_sk_term(rng, 1 + static_cast<int>(rng() % 5));
  }
}

}  // namespace combty::testutil
