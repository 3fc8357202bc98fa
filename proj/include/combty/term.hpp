#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace combty {

// SK-combinator terms: S, K, applications and named free variables.
// Nodes are immutable and shared; all derived data (size, hash, normality,
// spine head/arity) is computed once at construction.
enum class TermKind : std::uint8_t { S, K, App, Var };

class TermNode;
using Term = std::shared_ptr<const TermNode>;

class TermNode {
public:
  TermNode(TermKind kind, Term fun, Term arg, std::string name);

  TermKind kind() const { return kind_; }
  const Term& fun() const { return fun_; }
  const Term& arg() const { return arg_; }
  const std::string& name() const { return name_; }

  std::uint64_t size() const { return size_; }
  std::uint64_t hash() const { return hash_; }
  bool closed() const { return closed_; }
  bool normal() const { return normal_; }

  // Head operator of the application spine and its argument count
  // (capped at 3; only 0..2 matter for redex detection).
  TermKind head() const { return head_; }
  std::uint8_t spine_args() const { return spine_args_; }

  // True iff this node is itself a contractible redex root
  // (S with exactly three arguments or K with exactly two).
  bool is_redex() const;

private:
  TermKind kind_;
  Term fun_;
  Term arg_;
  std::string name_;
  std::uint64_t size_;
  std::uint64_t hash_;
  TermKind head_;
  std::uint8_t spine_args_;
  bool closed_;
  bool normal_;
};

Term op_s();
Term op_k();
Term var(std::string name);
Term app(Term fun, Term arg);
Term app(Term a, Term b, Term c);
Term app(Term a, Term b, Term c, Term d);

bool equal(const Term& a, const Term& b);

// Number of operator and variable leaves (applications count zero).
std::uint64_t term_size(const Term& t);

bool is_normal(const Term& t);
bool is_combinator(const Term& t);

using VarSet = std::set<std::string>;
VarSet fv(const Term& t);
bool has_free(const Term& t, const std::string& x);

// Contracts the leftmost-outermost redex; absent iff t is normal.
std::optional<Term> reduce_step(const Term& t);

struct ReduceResult {
  Term term;
  std::uint64_t steps = 0;
  bool normal = false;
};

ReduceResult reduce(Term t, std::uint64_t max_steps);

// Plain replacement of Var x by u (terms have no binders). Test oracle.
Term substitute(const Term& t, const std::string& x, const Term& u);

// Bracket abstraction [x]t and the smaller star abstraction \x.t (no eta).
Term bracket_abs(const std::string& x, const Term& t);
Term star_abs(const std::string& x, const Term& t);

// tag = S(S(KK)(KK));  mk_tag(n) = tag n
// mk_tagged(f,t) = S(S(KK)f)(tag(Kt))
// mk_wait(m,n) = S(S(Km)(Kn))I;  mk_wait2(m,n,p) = S(S(S(Km)(Kn))(Kp))I
Term tag_term();
Term mk_tag(Term n);
Term mk_tagged(Term f, Term t);
Term mk_wait(Term m, Term n);
Term mk_wait2(Term m, Term n, Term p);

// Structural matcher for mk_tagged(f,t) shapes.
bool is_tagged_term(const Term& t);

}  // namespace combty
