#include "combty/surface.hpp"

#include <random>

#include "combty/prelude.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace combty;

TEST_CASE("parse_term basics") {
  Surface t = parse_term("S K K");
  CHECK(t->kind == SurfaceKind::Apply);
  CHECK(t->child1->kind == SurfaceKind::Apply);
  CHECK(t->child1->child1->kind == SurfaceKind::OpS);
  CHECK(t->child2->kind == SurfaceKind::OpK);
  CHECK(equal(elaborate(t), app(op_s(), op_k(), op_k())));

  Surface lam = parse_term("\\x. K S S x");
  CHECK(lam->kind == SurfaceKind::Lambda);
  CHECK(lam->name == "x");

  Surface c = parse_term("cond tt ff tt");
  CHECK(c->kind == SurfaceKind::Apply);
  CHECK(equal(elaborate(c),
              app(prelude::cond(), prelude::tt(), prelude::ff(), prelude::tt())));
}

TEST_CASE("operator runs split, identifiers do not") {
  CHECK(equal(elaborate(parse_term("SKK")), prelude::I()));
  CHECK(equal(elaborate(parse_term("S(KK)")), app(op_s(), app(op_k(), op_k()))));
  // "Sx" is an identifier, not S x.
  Term t = elaborate(parse_term("Sx"));
  CHECK(t->kind() == TermKind::Var);
  CHECK(t->name() == "Sx");
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_term("(S K"), ParseError);
  CHECK_THROWS_AS(parse_term("\\. x"), ParseError);
  CHECK_THROWS_AS(parse_term("let x = in x"), ParseError);
  CHECK_THROWS_AS(parse_term(""), ParseError);
  try {
    parse_term("S K )");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 4);
  }
}

TEST_CASE("elaboration of lambda and let") {
  // \x. K S S x elaborates to S(K(KSS))I.
  Term expected = app(app(op_s(), app(op_k(), app(app(op_k(), op_s()), op_s()))), prelude::I());
  CHECK(equal(elaborate(parse_term("\\x. K S S x")), expected));

  CHECK(equal(elaborate(parse_term("S")), op_s()));

  // let f = I in f f elaborates to (\f. f f) SKK = (SII) I shaped.
  Term let_term = elaborate(parse_term("let f = SKK in f f"));
  Term direct = app(star_abs("f", app(var("f"), var("f"))), prelude::I());
  CHECK(equal(let_term, direct));
  ReduceResult r = reduce(let_term, 100);
  CHECK(r.normal);
  CHECK(equal(r.term, prelude::I()));
}

TEST_CASE("binders shadow prelude names") {
  // 'cond' bound by lambda is a variable, not the program.
  Term t = elaborate(parse_term("\\cond. cond"));
  CHECK(equal(t, prelude::I()));

  // Unknown identifiers stay free.
  Term u = elaborate(parse_term("mystery K"));
  CHECK(u->fun()->kind() == TermKind::Var);
  CHECK(fv(u) == VarSet{"mystery"});
}

TEST_CASE("parse_type and print_type") {
  CHECK(equal(parse_type("S2 K0 K0"), s2(k0(), k0())));
  CHECK(print_type(product_ty(bool_ty(), nat_ty())) == "Bool*Nat");
  CHECK(equal(parse_type("List{Nat}"), list_ty(nat_ty())));
  CHECK(equal(parse_type("Bool*Nat->Nat"), fun_ty(product_ty(bool_ty(), nat_ty()), nat_ty())));
  CHECK(equal(parse_type("Rec{K0}"), rec_ty(k0())));
  CHECK(equal(parse_type("Abs2{S1 S0, K0, S0}"), product_ty(k0(), s0())));
  CHECK(print_type(s1(s2(k0(), s0()))) == "S1 (S2 K0 S0)");
  CHECK_THROWS_AS(parse_type("S2 K0"), ParseError);
  CHECK_THROWS_AS(parse_type("Bool extra"), ParseError);
}

namespace {

Type random_type(std::mt19937& rng, int depth) {
  if (depth == 0) {
    switch (rng() % 4) {
      case 0: return s0();
      case 1: return k0();
      case 2: return bool_ty();
      default: return nat_ty();
    }
  }
  switch (rng() % 10) {
    case 0: return s1(random_type(rng, depth - 1));
    case 1: return k1(random_type(rng, depth - 1));
    case 2: return s2(random_type(rng, depth - 1), random_type(rng, depth - 1));
    case 3: return product_ty(random_type(rng, depth - 1), random_type(rng, depth - 1));
    case 4: return sum_ty(random_type(rng, depth - 1), random_type(rng, depth - 1));
    case 5: return fun_ty(random_type(rng, depth - 1), random_type(rng, depth - 1));
    case 6: return rec_ty(random_type(rng, depth - 1));
    case 7: return list_ty(random_type(rng, depth - 1));
    case 8: return abs1(random_type(rng, depth - 1), random_type(rng, depth - 1));
    default: return abs0(random_type(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("type printing round-trips") {
  std::mt19937 rng(53);
  for (int i = 0; i < 1000; ++i) {
    Type t = random_type(rng, 4);
    CHECK(equal(parse_type(print_type(t)), t));
  }
}

TEST_CASE("term printing round-trips through elaboration") {
  std::mt19937 rng(59);
  for (int i = 0; i < 1000; ++i) {
    Term t = testutil::random_sk_term(rng, 1 + static_cast<int>(rng() % 12));
    CHECK(equal(elaborate(parse_term(print_term(t))), t));
  }
  // Prelude programs round-trip too.
  for (const std::string& name : prelude::names()) {
    Term t = prelude::get(name);
    CHECK(equal(elaborate(parse_term(print_term(t))), t));
  }
}

TEST_CASE("lambda elaborations are never tagged shapes") {
  std::mt19937 rng(61);
  for (int i = 0; i < 300; ++i) {
    Term body = testutil::random_sk_term(rng, 5);
    if (rng() % 2) body = app(body, var("v"));
    CHECK_FALSE(is_tagged_term(star_abs("v", body)));
  }
}

TEST_CASE("compact printing abbreviates SKK") {
  Term t = elaborate(parse_term("\\x. K S S x"));
  CHECK(print_term_compact(t) == "S(K(KSS))I");
  CHECK(printed_size(t) == 6);
  CHECK(print_term(op_s()) == "S");
  CHECK(printed_size(op_s()) == 1);
}
