#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>

#include "combty/term.hpp"

namespace combty {

// Combinatory types S0/S1/S2/K0/K1 plus labelled abstract forms Abs0/Abs1/Abs2.
// Labels are themselves types. Structural equality is the only type equality.
enum class TypeKind : std::uint8_t { S0, S1, S2, K0, K1, Abs0, Abs1, Abs2 };

class TypeNode;
using Type = std::shared_ptr<const TypeNode>;

class TypeNode {
public:
  TypeNode(TypeKind kind, Type a, Type b, Type c);

  TypeKind kind() const { return kind_; }
  // S1: a = argument. S2: a, b. K1: a.
  // Abs0: a = label. Abs1: a = label, b. Abs2: a = label, b, c.
  const Type& a() const { return a_; }
  const Type& b() const { return b_; }
  const Type& c() const { return c_; }

  std::uint64_t hash() const { return hash_; }
  std::uint64_t size() const { return size_; }

private:
  TypeKind kind_;
  Type a_, b_, c_;
  std::uint64_t hash_;
  std::uint64_t size_;
};

Type s0();
Type s1(Type a);
Type s2(Type a, Type b);
Type k0();
Type k1(Type a);
Type abs0(Type label);
Type abs1(Type label, Type b);
Type abs2(Type label, Type b, Type c);

bool equal(const Type& a, const Type& b);

// Fixed alias table. All seven labels are pairwise distinct.
Type product_ty(Type u, Type v);  // Abs2{S1 S0} U V
Type bool_ty();                   // Abs0{S1 K0}
Type nat_ty();                    // Abs0{S2 K0 K0}
Type sum_ty(Type u, Type v);      // Abs2{S2 K0 S0} U V
Type fun_ty(Type u, Type v);      // Abs2{K1 K0} U V
Type rec_ty(Type f);              // Abs1{K0} F
Type list_ty(Type u);             // Abs1{S2 (S1 S0) S0} U

Type product_label();
Type bool_label();
Type nat_label();
Type sum_label();
Type fun_label();
Type rec_label();
Type list_label();

std::optional<std::pair<Type, Type>> as_product(const Type& t);
std::optional<std::pair<Type, Type>> as_sum(const Type& t);
std::optional<std::pair<Type, Type>> as_fun(const Type& t);
std::optional<Type> as_rec(const Type& t);
std::optional<Type> as_list(const Type& t);

// |p| -- the combinatory type mirroring the structure of a normal closed
// combinator. Throws std::invalid_argument on open or non-normal input.
Type type_of_program(const Term& p);

// tag_ty{T}     = S2 (S2(K1 K0)(K1 K0)) (K1 T)
// tagged_tyl{F} = S1 (S2(K1 K0) F)
// tagged_ty{F,T} = S2 (S2(K1 K0) F) (tag_ty{T})
// wait2_ty{U,V,W} = S2 (S2 (S2(K1 U)(K1 V)) (K1 W)) I0
// zty{F}       = wait2_ty{|omega|, |omega|, F}
Type tag_ty(Type t);
Type tagged_tyl(Type f);
Type tagged_ty(Type f, Type t);
Type wait2_ty(Type u, Type v, Type w);
Type zty(Type f);

Type i0();  // S2 K0 K0

// Recognizes the broad constructor shape S2(S2(K1 K0) F) X for any X and
// returns (F, X). This is wider than the tagged_ty{F,T} shape: the function
// and list introduction rules match second components that are not tag_ty
// shaped (K1 V and S2(S1 S0) U), so a strict tagged_ty recognizer could not
// serve them.
std::optional<std::pair<Type, Type>> unpack_constructor(const Type& t);

// True iff t is structurally tagged_ty{F,T} for some F, T (the second
// component must itself be tag_ty shaped).
bool is_tagged_ty(const Type& t);

// If t = tag_ty{T}, returns T.
std::optional<Type> as_tag_ty(const Type& t);

// If t = S2 (S1 S0) U (the list tag shape), returns U.
std::optional<Type> as_list_tag(const Type& t);

}  // namespace combty
