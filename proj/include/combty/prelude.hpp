#pragma once

#include <string>
#include <vector>

#include "combty/term.hpp"

namespace combty::prelude {

// Fixed programs. Every accessor returns a closed normal term; results are
// built once and shared.
Term I();            // SKK
Term product_tag();  // SS
Term bool_tag();     // SK
Term nat_tag();      // SKK
Term sum_tag();      // SKS
Term z_tag();        // K

Term pair();
Term fst();
Term snd();
Term tt();
Term ff();
Term cond();
Term mk_sum();
Term inl();
Term inr();
Term case_();
Term mk_fun();
Term omega();
Term zero();
Term successor();
Term is_zero();
Term predecessor();
Term nil();
Term cons();
Term plus();

// Term families. Parameters are spliced into the shape (not applied), so the
// results are normal whenever the parameters are.
Term fun_tagged(Term f, Term d);  // S(S(KK)f)(Kd)
Term Z(Term f);                   // tagged{wait2{omega,omega,f}, z_tag}
Term lam(const std::string& x, Term body, Term dummy);
Term cond_mono(Term dummy);
Term primrec0(Term g, Term h);
Term primrec(Term g, Term h, Term u);
Term minrec(Term f, Term u);
Term fold_left(Term f);

// Numeral convenience: successor applied n times to zero (an application
// tree, not a normal form).
Term numeral(unsigned n);

// Name-based access. get throws on unknown names; build throws on unknown
// names or arity mismatches.
Term get(const std::string& name);
Term build(const std::string& name, const std::vector<Term>& args);
const std::vector<std::string>& names();

struct TheoremResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Runs the reduction theorems on concrete instances and the typing theorems
// on concrete type instances; failures are reported, not thrown.
std::vector<TheoremResult> check_theorems();

}  // namespace combty::prelude
