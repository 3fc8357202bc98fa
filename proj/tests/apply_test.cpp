#include "combty/apply.hpp"

#include <random>

#include "combty/prelude.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace combty;

namespace {

Type apply_ok(Type t, Type v, Budget& b) {
  AppResult r = apply_type(std::move(t), std::move(v), b);
  REQUIRE(r.ok());
  return r.type();
}

}  // namespace

TEST_CASE("base combinatory arms") {
  Budget b;
  CHECK(equal(apply_ok(k0(), s0(), b), k1(s0())));
  CHECK(equal(apply_ok(k1(s0()), k0(), b), s0()));
  CHECK(equal(apply_ok(s0(), k0(), b), s1(k0())));
  CHECK(equal(apply_ok(s1(k0()), s0(), b), s2(k0(), s0())));

  // (S2 K0 K0)(T) = K0(T)(K0(T)) = T, the identity at type level.
  CHECK(equal(apply_ok(i0(), bool_ty(), b), bool_ty()));
  CHECK(equal(apply_ok(i0(), product_ty(nat_ty(), nat_ty()), b),
              product_ty(nat_ty(), nat_ty())));
}

TEST_CASE("budget exhaustion on the divergent self-application") {
  Type sii = s2(i0(), i0());
  Budget b;
  b.limit = 10000;
  AppResult r = apply_type(sii, sii, b);
  REQUIRE_FALSE(r.ok());
  CHECK(r.failure().kind == AppErrorKind::BudgetExhausted);
  CHECK(b.used == 10000);
}

TEST_CASE("Bool elimination") {
  Budget b;
  CHECK(equal(apply_ok(bool_ty(), product_ty(nat_ty(), nat_ty()), b), nat_ty()));

  AppResult bad = apply_type(bool_ty(), product_ty(nat_ty(), bool_ty()), b);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.failure().kind == AppErrorKind::NoRule);
}

TEST_CASE("boolean introduction through the S1 arm") {
  // tagged_tyl{|fst|} applied to tag_ty{|bool_tag|} introduces Bool.
  Type fst_ty = type_of_program(prelude::fst());
  Type bool_tag_ty = type_of_program(prelude::bool_tag());
  Budget b;
  CHECK(equal(apply_ok(tagged_tyl(fst_ty), tag_ty(bool_tag_ty), b), bool_ty()));

  // Unknown tag label: a tagged term without a rule has no type.
  AppResult bad = apply_type(tagged_tyl(fst_ty), tag_ty(s1(s1(s0()))), b);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.failure().kind == AppErrorKind::NoRule);
}

TEST_CASE("the tag builder's own application stays combinatory") {
  // tagged_tyl{K1 K0} (K1 T) is tag_ty{T}, not a function type.
  Budget b;
  Type r = apply_ok(tagged_tyl(k1(k0())), k1(bool_ty()), b);
  CHECK(equal(r, tag_ty(bool_ty())));
  CHECK_FALSE(as_fun(r).has_value());
}

TEST_CASE("function introduction and elimination") {
  Budget b;
  // tagged_tyl{I0} (K1 Nat) = Nat -> Nat since I0(Nat) = Nat.
  Type fn = apply_ok(tagged_tyl(i0()), k1(nat_ty()), b);
  CHECK(equal(fn, fun_ty(nat_ty(), nat_ty())));

  CHECK(equal(apply_ok(fn, nat_ty(), b), nat_ty()));
  AppResult bad = apply_type(fn, bool_ty(), b);
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.failure().kind == AppErrorKind::NoRule);
}

TEST_CASE("product elimination mirrors pairing") {
  Budget b;
  // (U*V)(T) = T(U)(V): with T = K1 K0 shaped selectors this projects.
  Type p = product_ty(nat_ty(), bool_ty());
  // fst's selector |\x.\y.x| = S2(K1 K0) I0: (U*V)(|sel|) = U
  Type sel_fst = s2(k1(k0()), i0());
  CHECK(equal(apply_ok(p, sel_fst, b), nat_ty()));
  // snd's selector |\x.\y.y| = K1 I0: gives V
  Type sel_snd = k1(i0());
  CHECK(equal(apply_ok(p, sel_snd, b), bool_ty()));
}

TEST_CASE("apply_type_multi folds left") {
  Type cond_ty = type_of_program(prelude::cond());
  Budget b;
  AppResult r = apply_type_multi(cond_ty, {bool_ty(), nat_ty(), nat_ty()}, b);
  REQUIRE(r.ok());
  CHECK(equal(r.type(), nat_ty()));

  AppResult empty = apply_type_multi(k0(), {}, b);
  REQUIRE(empty.ok());
  CHECK(equal(empty.type(), k0()));

  // H(U)(Nat)(T) = T for the primrec step type.
  Term h = star_abs("u", star_abs("n", star_abs("r", app(prelude::successor(), var("r")))));
  AppResult hr = apply_type_multi(type_of_program(h), {nat_ty(), nat_ty(), nat_ty()}, b);
  REQUIRE(hr.ok());
  CHECK(equal(hr.type(), nat_ty()));
}

TEST_CASE("determinism and budget monotonicity") {
  std::mt19937 rng(17);
  for (int i = 0; i < 500; ++i) {
    Type t = type_of_program(testutil::random_normal_program(rng, 5));
    Type v = type_of_program(testutil::random_normal_program(rng, 4));

    Budget b1{0, 200};
    AppResult r1 = apply_type(t, v, b1);
    Budget b2{0, 200};
    AppResult r2 = apply_type(t, v, b2);
    CHECK(r1.ok() == r2.ok());
    CHECK(b1.used == b2.used);
    if (r1.ok()) CHECK(equal(r1.type(), r2.type()));

    // Doubling the limit never flips a success or a NoRule.
    Budget b3{0, 400};
    AppResult r3 = apply_type(t, v, b3);
    if (r1.ok()) {
      REQUIRE(r3.ok());
      CHECK(equal(r1.type(), r3.type()));
    } else if (r1.failure().kind == AppErrorKind::NoRule) {
      REQUIRE_FALSE(r3.ok());
      CHECK(r3.failure().kind == AppErrorKind::NoRule);
    }
  }
}

TEST_CASE("S1 applications never produce a tagged type") {
  std::mt19937 rng(19);
  for (int i = 0; i < 500; ++i) {
    Type u = type_of_program(testutil::random_normal_program(rng, 4));
    Type v = type_of_program(testutil::random_normal_program(rng, 4));
    Budget b{0, 1000};
    AppResult r = apply_type(s1(u), v, b);
    if (r.ok()) CHECK_FALSE(is_tagged_ty(r.type()));
  }
  // Also through the prelude's constructor types.
  Budget b;
  Type fst_ty = type_of_program(prelude::fst());
  AppResult r = apply_type(tagged_tyl(fst_ty), tag_ty(type_of_program(prelude::nat_tag())), b);
  REQUIRE(r.ok());
  CHECK_FALSE(is_tagged_ty(r.type()));
}

TEST_CASE("type application mirrors reduction on plain combinatory terms") {
  // For closed normal p, q with p q normalizing to r and no constructor
  // shapes arising along the trace, |p|(|q|) = |r|.
  std::size_t checked = 0;
  for (const Term& p : testutil::enumerate_normal_closed(4)) {
    for (const Term& q : testutil::enumerate_normal_closed(3)) {
      Term t = app(p, q);
      bool candidate = testutil::has_constructor_candidate(t);
      ReduceResult red{t, 0, t->normal()};
      while (!candidate && !red.normal) {
        auto next = reduce_step(red.term);
        if (!next) break;
        red.term = *next;
        red.normal = red.term->normal();
        candidate = testutil::has_constructor_candidate(red.term);
        if (++red.steps > 2000) break;
      }
      if (candidate || !red.normal) continue;
      Budget b{0, 100000};
      AppResult r = apply_type(type_of_program(p), type_of_program(q), b);
      REQUIRE(r.ok());
      CHECK(equal(r.type(), type_of_program(red.term)));
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("call accounting counts every invocation") {
  // The S^4 chain costs exactly 1, 1, 4 and 4 calls per application.
  Budget b;
  Type t = s0();
  const std::uint64_t expected[] = {1, 1, 4, 4};
  for (std::uint64_t step : expected) {
    std::uint64_t before = b.used;
    AppResult r = apply_type(t, s0(), b);
    REQUIRE(r.ok());
    t = r.type();
    CHECK(b.used - before == step);
  }
  CHECK(b.used == 10);
}

TEST_CASE("apply cache reproduces uncached results") {
  std::mt19937 rng(29);
  ApplyCache cache;
  for (int i = 0; i < 300; ++i) {
    Type t = type_of_program(testutil::random_normal_program(rng, 5));
    Type v = type_of_program(testutil::random_normal_program(rng, 3));
    Budget plain{0, 500};
    AppResult a = apply_type(t, v, plain);
    Budget cached{0, Budget::unlimited};
    AppResult c = apply_type(t, v, cached, &cache);
    if (a.ok()) {
      REQUIRE(c.ok());
      CHECK(equal(a.type(), c.type()));
    } else if (a.failure().kind == AppErrorKind::NoRule) {
      REQUIRE_FALSE(c.ok());
    }
  }
}
