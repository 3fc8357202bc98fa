#include "combty/types.hpp"

#include <stdexcept>
#include <vector>

#include "combty/prelude.hpp"

namespace combty {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

}  // namespace

TypeNode::TypeNode(TypeKind kind, Type a, Type b, Type c)
    : kind_(kind), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  hash_ = 0x9ae16a3b2f90404fULL + static_cast<std::uint64_t>(kind_);
  size_ = 1;
  for (const Type* child : {&a_, &b_, &c_}) {
    if (*child) {
      hash_ = mix(hash_, (*child)->hash());
      size_ += (*child)->size();
    }
  }
}

Type s0() {
  static const Type t = std::make_shared<const TypeNode>(TypeKind::S0, nullptr, nullptr, nullptr);
  return t;
}

Type k0() {
  static const Type t = std::make_shared<const TypeNode>(TypeKind::K0, nullptr, nullptr, nullptr);
  return t;
}

Type s1(Type a) {
  return std::make_shared<const TypeNode>(TypeKind::S1, std::move(a), nullptr, nullptr);
}

Type s2(Type a, Type b) {
  return std::make_shared<const TypeNode>(TypeKind::S2, std::move(a), std::move(b), nullptr);
}

Type k1(Type a) {
  return std::make_shared<const TypeNode>(TypeKind::K1, std::move(a), nullptr, nullptr);
}

Type abs0(Type label) {
  return std::make_shared<const TypeNode>(TypeKind::Abs0, std::move(label), nullptr, nullptr);
}

Type abs1(Type label, Type b) {
  return std::make_shared<const TypeNode>(TypeKind::Abs1, std::move(label), std::move(b), nullptr);
}

Type abs2(Type label, Type b, Type c) {
  return std::make_shared<const TypeNode>(TypeKind::Abs2, std::move(label), std::move(b),
                                          std::move(c));
}

bool equal(const Type& a, const Type& b) {
  std::vector<std::pair<const TypeNode*, const TypeNode*>> work;
  work.emplace_back(a.get(), b.get());
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x == y) continue;
    if (x == nullptr || y == nullptr) return false;
    if (x->kind() != y->kind() || x->hash() != y->hash() || x->size() != y->size()) return false;
    work.emplace_back(x->a().get(), y->a().get());
    work.emplace_back(x->b().get(), y->b().get());
    work.emplace_back(x->c().get(), y->c().get());
  }
  return true;
}

Type product_label() {
  static const Type t = s1(s0());
  return t;
}
Type bool_label() {
  static const Type t = s1(k0());
  return t;
}
Type nat_label() {
  static const Type t = s2(k0(), k0());
  return t;
}
Type sum_label() {
  static const Type t = s2(k0(), s0());
  return t;
}
Type fun_label() {
  static const Type t = k1(k0());
  return t;
}
Type rec_label() { return k0(); }
Type list_label() {
  static const Type t = s2(s1(s0()), s0());
  return t;
}

Type product_ty(Type u, Type v) { return abs2(product_label(), std::move(u), std::move(v)); }
Type bool_ty() {
  static const Type t = abs0(bool_label());
  return t;
}
Type nat_ty() {
  static const Type t = abs0(nat_label());
  return t;
}
Type sum_ty(Type u, Type v) { return abs2(sum_label(), std::move(u), std::move(v)); }
Type fun_ty(Type u, Type v) { return abs2(fun_label(), std::move(u), std::move(v)); }
Type rec_ty(Type f) { return abs1(rec_label(), std::move(f)); }
Type list_ty(Type u) { return abs1(list_label(), std::move(u)); }

std::optional<std::pair<Type, Type>> as_product(const Type& t) {
  if (t->kind() == TypeKind::Abs2 && equal(t->a(), product_label())) {
    return std::make_pair(t->b(), t->c());
  }
  return std::nullopt;
}

std::optional<std::pair<Type, Type>> as_sum(const Type& t) {
  if (t->kind() == TypeKind::Abs2 && equal(t->a(), sum_label())) {
    return std::make_pair(t->b(), t->c());
  }
  return std::nullopt;
}

std::optional<std::pair<Type, Type>> as_fun(const Type& t) {
  if (t->kind() == TypeKind::Abs2 && equal(t->a(), fun_label())) {
    return std::make_pair(t->b(), t->c());
  }
  return std::nullopt;
}

std::optional<Type> as_rec(const Type& t) {
  if (t->kind() == TypeKind::Abs1 && equal(t->a(), rec_label())) return t->b();
  return std::nullopt;
}

std::optional<Type> as_list(const Type& t) {
  if (t->kind() == TypeKind::Abs1 && equal(t->a(), list_label())) return t->b();
  return std::nullopt;
}

Type type_of_program(const Term& p) {
  if (!p->closed()) throw std::invalid_argument("type_of_program: term has free variables");
  if (!p->normal()) throw std::invalid_argument("type_of_program: term is not in normal form");
  switch (p->kind()) {
    case TermKind::S:
      return s0();
    case TermKind::K:
      return k0();
    case TermKind::App: {
      Type f = type_of_program(p->fun());
      Type a = type_of_program(p->arg());
      switch (f->kind()) {
        case TypeKind::S0:
          return s1(std::move(a));
        case TypeKind::S1:
          return s2(f->a(), std::move(a));
        case TypeKind::K0:
          return k1(std::move(a));
        default:
          // Normal forms never apply a saturated head.
          throw std::invalid_argument("type_of_program: term is not in normal form");
      }
    }
    default:
      throw std::invalid_argument("type_of_program: term has free variables");
  }
}

Type i0() {
  static const Type t = s2(k0(), k0());
  return t;
}

Type tag_ty(Type t) {
  static const Type head = s2(k1(k0()), k1(k0()));
  return s2(head, k1(std::move(t)));
}

Type tagged_tyl(Type f) { return s1(s2(k1(k0()), std::move(f))); }

Type tagged_ty(Type f, Type t) { return s2(s2(k1(k0()), std::move(f)), tag_ty(std::move(t))); }

Type wait2_ty(Type u, Type v, Type w) {
  return s2(s2(s2(k1(std::move(u)), k1(std::move(v))), k1(std::move(w))), i0());
}

Type zty(Type f) {
  static const Type omega_ty = type_of_program(prelude::omega());
  return wait2_ty(omega_ty, omega_ty, std::move(f));
}

std::optional<std::pair<Type, Type>> unpack_constructor(const Type& t) {
  static const Type k1k0 = k1(k0());
  if (t->kind() != TypeKind::S2) return std::nullopt;
  const Type& left = t->a();
  if (left->kind() != TypeKind::S2 || !equal(left->a(), k1k0)) return std::nullopt;
  return std::make_pair(left->b(), t->b());
}

std::optional<Type> as_tag_ty(const Type& t) {
  static const Type head = s2(k1(k0()), k1(k0()));
  if (t->kind() == TypeKind::S2 && equal(t->a(), head) && t->b()->kind() == TypeKind::K1) {
    return t->b()->a();
  }
  return std::nullopt;
}

bool is_tagged_ty(const Type& t) {
  auto unpacked = unpack_constructor(t);
  return unpacked && as_tag_ty(unpacked->second).has_value();
}

std::optional<Type> as_list_tag(const Type& t) {
  static const Type head = s1(s0());
  if (t->kind() == TypeKind::S2 && equal(t->a(), head)) return t->b();
  return std::nullopt;
}

}  // namespace combty
