#include "combty/term.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace combty {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return h;
}

std::uint64_t leaf_hash(TermKind k, const std::string& name) {
  std::uint64_t h = 0x2545f4914f6cdd1dULL + static_cast<std::uint64_t>(k);
  if (!name.empty()) h = mix(h, std::hash<std::string>{}(name));
  return h;
}

}  // namespace

TermNode::TermNode(TermKind kind, Term fun, Term arg, std::string name)
    : kind_(kind), fun_(std::move(fun)), arg_(std::move(arg)), name_(std::move(name)) {
  switch (kind_) {
    case TermKind::S:
    case TermKind::K:
      size_ = 1;
      hash_ = leaf_hash(kind_, "");
      head_ = kind_;
      spine_args_ = 0;
      closed_ = true;
      normal_ = true;
      break;
    case TermKind::Var:
      size_ = 1;
      hash_ = leaf_hash(kind_, name_);
      head_ = TermKind::Var;
      spine_args_ = 0;
      closed_ = false;
      normal_ = true;
      break;
    case TermKind::App:
      size_ = fun_->size_ + arg_->size_;
      hash_ = mix(mix(0xc2b2ae3d27d4eb4fULL, fun_->hash_), arg_->hash_);
      head_ = fun_->head_;
      spine_args_ = static_cast<std::uint8_t>(fun_->spine_args_ >= 3 ? 3 : fun_->spine_args_ + 1);
      closed_ = fun_->closed_ && arg_->closed_;
      normal_ = fun_->normal_ && arg_->normal_ && !is_redex();
      break;
  }
}

bool TermNode::is_redex() const {
  if (kind_ != TermKind::App) return false;
  const TermNode& f = *fun_;
  return (f.head_ == TermKind::K && f.spine_args_ == 1) ||
         (f.head_ == TermKind::S && f.spine_args_ == 2);
}

Term op_s() {
  static const Term t = std::make_shared<const TermNode>(TermKind::S, nullptr, nullptr, "");
  return t;
}

Term op_k() {
  static const Term t = std::make_shared<const TermNode>(TermKind::K, nullptr, nullptr, "");
  return t;
}

Term var(std::string name) {
  return std::make_shared<const TermNode>(TermKind::Var, nullptr, nullptr, std::move(name));
}

Term app(Term fun, Term arg) {
  return std::make_shared<const TermNode>(TermKind::App, std::move(fun), std::move(arg), "");
}

Term app(Term a, Term b, Term c) { return app(app(std::move(a), std::move(b)), std::move(c)); }

Term app(Term a, Term b, Term c, Term d) {
  return app(app(app(std::move(a), std::move(b)), std::move(c)), std::move(d));
}

bool equal(const Term& a, const Term& b) {
  std::vector<std::pair<const TermNode*, const TermNode*>> work;
  work.emplace_back(a.get(), b.get());
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x == y) continue;
    if (x == nullptr || y == nullptr) return false;
    if (x->kind() != y->kind() || x->hash() != y->hash() || x->size() != y->size()) return false;
    switch (x->kind()) {
      case TermKind::S:
      case TermKind::K:
        break;
      case TermKind::Var:
        if (x->name() != y->name()) return false;
        break;
      case TermKind::App:
        work.emplace_back(x->fun().get(), y->fun().get());
        work.emplace_back(x->arg().get(), y->arg().get());
        break;
    }
  }
  return true;
}

std::uint64_t term_size(const Term& t) { return t->size(); }

bool is_normal(const Term& t) { return t->normal(); }

bool is_combinator(const Term& t) { return t->closed(); }

VarSet fv(const Term& t) {
  VarSet out;
  std::vector<const TermNode*> work{t.get()};
  while (!work.empty()) {
    const TermNode* n = work.back();
    work.pop_back();
    if (n->closed()) continue;
    switch (n->kind()) {
      case TermKind::Var:
        out.insert(n->name());
        break;
      case TermKind::App:
        work.push_back(n->fun().get());
        work.push_back(n->arg().get());
        break;
      default:
        break;
    }
  }
  return out;
}

bool has_free(const Term& t, const std::string& x) {
  std::vector<const TermNode*> work{t.get()};
  while (!work.empty()) {
    const TermNode* n = work.back();
    work.pop_back();
    if (n->closed()) continue;
    switch (n->kind()) {
      case TermKind::Var:
        if (n->name() == x) return true;
        break;
      case TermKind::App:
        work.push_back(n->fun().get());
        work.push_back(n->arg().get());
        break;
      default:
        break;
    }
  }
  return false;
}

namespace {

// The node is a redex root; contract it.
Term contract(const Term& t) {
  const Term& f = t->fun();
  if (f->head() == TermKind::K) {
    // (K m) n -> m
    return f->arg();
  }
  // ((S m) n) p -> m p (n p)
  const Term& m = f->fun()->arg();
  const Term& n = f->arg();
  const Term& p = t->arg();
  return app(app(m, p), app(n, p));
}

}  // namespace

std::optional<Term> reduce_step(const Term& t) {
  if (t->normal()) return std::nullopt;
  // Descend to the leftmost-outermost redex, remembering the path.
  std::vector<std::pair<Term, bool>> path;  // (node, went into arg)
  Term cur = t;
  while (!cur->is_redex()) {
    if (!cur->fun()->normal()) {
      path.emplace_back(cur, false);
      cur = cur->fun();
    } else {
      path.emplace_back(cur, true);
      cur = cur->arg();
    }
  }
  Term result = contract(cur);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    result = it->second ? app(it->first->fun(), result) : app(result, it->first->arg());
  }
  return result;
}

ReduceResult reduce(Term t, std::uint64_t max_steps) {
  ReduceResult r;
  r.term = std::move(t);
  while (r.steps < max_steps && !r.term->normal()) {
    auto next = reduce_step(r.term);
    if (!next) break;
    r.term = std::move(*next);
    ++r.steps;
  }
  r.normal = r.term->normal();
  return r;
}

Term substitute(const Term& t, const std::string& x, const Term& u) {
  if (t->closed()) return t;
  switch (t->kind()) {
    case TermKind::Var:
      return t->name() == x ? u : t;
    case TermKind::App: {
      Term f = substitute(t->fun(), x, u);
      Term a = substitute(t->arg(), x, u);
      if (f == t->fun() && a == t->arg()) return t;
      return app(std::move(f), std::move(a));
    }
    default:
      return t;
  }
}

namespace {

Term i_term() {
  static const Term t = app(op_s(), op_k(), op_k());
  return t;
}

}  // namespace

Term bracket_abs(const std::string& x, const Term& t) {
  switch (t->kind()) {
    case TermKind::Var:
      return t->name() == x ? i_term() : app(op_k(), t);
    case TermKind::S:
    case TermKind::K:
      return app(op_k(), t);
    case TermKind::App:
      return app(op_s(), bracket_abs(x, t->fun()), bracket_abs(x, t->arg()));
  }
  throw std::logic_error("unreachable");
}

Term star_abs(const std::string& x, const Term& t) {
  switch (t->kind()) {
    case TermKind::Var:
      return t->name() == x ? i_term() : app(op_k(), t);
    case TermKind::S:
    case TermKind::K:
      return app(op_k(), t);
    case TermKind::App:
      if (!has_free(t, x)) return app(op_k(), t);
      return app(op_s(), star_abs(x, t->fun()), star_abs(x, t->arg()));
  }
  throw std::logic_error("unreachable");
}

Term tag_term() {
  static const Term t = app(op_s(), app(op_s(), app(op_k(), op_k()), app(op_k(), op_k())));
  return t;
}

Term mk_tag(Term n) { return app(tag_term(), std::move(n)); }

Term mk_tagged(Term f, Term t) {
  return app(app(op_s(), app(app(op_s(), app(op_k(), op_k())), std::move(f))),
             mk_tag(app(op_k(), std::move(t))));
}

Term mk_wait(Term m, Term n) {
  return app(op_s(), app(op_s(), app(op_k(), std::move(m)), app(op_k(), std::move(n))), i_term());
}

Term mk_wait2(Term m, Term n, Term p) {
  return app(op_s(),
             app(op_s(), app(op_s(), app(op_k(), std::move(m)), app(op_k(), std::move(n))),
                 app(op_k(), std::move(p))),
             i_term());
}

bool is_tagged_term(const Term& t) {
  // S(S(KK)f)(tag(Kt'))
  if (t->kind() != TermKind::App) return false;
  const Term& left = t->fun();
  const Term& right = t->arg();
  if (left->kind() != TermKind::App || left->fun()->kind() != TermKind::S) return false;
  const Term& skk_f = left->arg();  // S(KK) f
  if (skk_f->kind() != TermKind::App) return false;
  const Term& skk = skk_f->fun();
  static const Term s_kk = app(op_s(), app(op_k(), op_k()));
  if (!equal(skk, s_kk)) return false;
  if (right->kind() != TermKind::App || !equal(right->fun(), tag_term())) return false;
  const Term& kt = right->arg();
  return kt->kind() == TermKind::App && kt->fun()->kind() == TermKind::K;
}

}  // namespace combty
