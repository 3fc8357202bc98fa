#include "combty/apply.hpp"

#include <utility>

#include "combty/prelude.hpp"

namespace combty {

const AppResult* ApplyCache::find(const Type& t, const Type& v) const {
  auto it = map_.find(Key{t, v});
  return it == map_.end() ? nullptr : &it->second;
}

void ApplyCache::store(const Type& t, const Type& v, const AppResult& r) {
  if (r.ok() || r.failure().kind == AppErrorKind::NoRule) {
    map_.emplace(Key{t, v}, r);
  }
}

namespace {

const Type& fst_program_ty() {
  static const Type t = type_of_program(prelude::fst());
  return t;
}

const Type& snd_program_ty() {
  static const Type t = type_of_program(prelude::snd());
  return t;
}

const Type& omega_program_ty() {
  static const Type t = type_of_program(prelude::omega());
  return t;
}

AppFailure no_rule(Type head, Type arg, const Budget& b) {
  return AppFailure{AppErrorKind::NoRule, std::move(head), std::move(arg), b.used};
}

// Zty{F} = S2 (S2 (S2(K1 |omega|)(K1 |omega|)) (K1 F)) I0; yields F.
std::optional<Type> match_zty(const Type& f) {
  if (f->kind() != TypeKind::S2 || !equal(f->b(), i0())) return std::nullopt;
  const Type& l = f->a();
  if (l->kind() != TypeKind::S2 || l->b()->kind() != TypeKind::K1) return std::nullopt;
  const Type& ll = l->a();
  if (ll->kind() != TypeKind::S2 || ll->a()->kind() != TypeKind::K1 ||
      ll->b()->kind() != TypeKind::K1) {
    return std::nullopt;
  }
  if (!equal(ll->a()->a(), omega_program_ty()) || !equal(ll->b()->a(), omega_program_ty())) {
    return std::nullopt;
  }
  return l->b()->a();
}

// Product content |\f. f x y| = S2 (S2 I0 (K1 U)) (K1 V); yields (U, V).
std::optional<std::pair<Type, Type>> match_pair_content(const Type& f) {
  if (f->kind() != TypeKind::S2 || f->b()->kind() != TypeKind::K1) return std::nullopt;
  const Type& l = f->a();
  if (l->kind() != TypeKind::S2 || !equal(l->a(), i0()) || l->b()->kind() != TypeKind::K1) {
    return std::nullopt;
  }
  return std::make_pair(l->b()->a(), f->b()->a());
}

// Successor content |S snd (K n)| = S2 |snd| (K1 Nat).
bool match_successor_content(const Type& f) {
  return f->kind() == TypeKind::S2 && equal(f->a(), snd_program_ty()) &&
         f->b()->kind() == TypeKind::K1 && equal(f->b()->a(), nat_ty());
}

// Cons content |S(S(K snd)I)(K p)| = S2 (S2(K1 |snd|) I0) (K1 (U * List U)).
bool match_cons_content(const Type& f, const Type& elem) {
  if (f->kind() != TypeKind::S2 || f->b()->kind() != TypeKind::K1) return false;
  const Type& l = f->a();
  if (l->kind() != TypeKind::S2 || l->a()->kind() != TypeKind::K1 ||
      !equal(l->a()->a(), snd_program_ty()) || !equal(l->b(), i0())) {
    return false;
  }
  auto p = as_product(f->b()->a());
  if (!p) return false;
  auto rest = as_list(p->second);
  return rest && equal(p->first, elem) && equal(*rest, elem);
}

}  // namespace

namespace {

struct DepthGuard {
  Budget& budget;
  explicit DepthGuard(Budget& b) : budget(b) { ++budget.depth; }
  ~DepthGuard() { --budget.depth; }
};

}  // namespace

AppResult apply_type(Type t, Type v, Budget& budget, ApplyCache* cache) {
  if (budget.depth >= budget.depth_limit) {
    return AppResult::failure(
        AppFailure{AppErrorKind::BudgetExhausted, nullptr, nullptr, budget.used});
  }
  DepthGuard guard(budget);
  // The "result position" applications (the S2 arm's outer application, the
  // product and sum eliminations) loop instead of recursing, so pathological
  // self-applications burn budget at constant stack depth.
  for (;;) {
    if (budget.used >= budget.limit) {
      return AppResult::failure(AppFailure{AppErrorKind::BudgetExhausted, nullptr, nullptr,
                                           budget.used});
    }
    ++budget.used;

    if (cache != nullptr) {
      if (const AppResult* hit = cache->find(t, v)) return *hit;
    }
    const Type t_in = t;
    const Type v_in = v;
    AppResult out = AppResult::failure(no_rule(t, v, budget));
    bool tail = false;

    switch (t->kind()) {
      case TypeKind::K0:
        out = AppResult::success(k1(v));
        break;
      case TypeKind::K1:
        out = AppResult::success(t->a());
        break;
      case TypeKind::S0:
        out = AppResult::success(s1(v));
        break;
      case TypeKind::S2: {
        // S2 U W (V) = U(V)(W(V))
        AppResult uv = apply_type(t->a(), v, budget, cache);
        if (!uv.ok()) return uv;
        AppResult wv = apply_type(t->b(), v, budget, cache);
        if (!wv.ok()) return wv;
        t = uv.type();
        v = wv.type();
        tail = true;
        break;
      }
      case TypeKind::S1: {
        Type r = s2(t->a(), v);
        auto unpacked = unpack_constructor(r);
        if (!unpacked) {
          out = AppResult::success(std::move(r));
          break;
        }
        const Type& f = unpacked->first;
        const Type& x = unpacked->second;
        if (as_tag_ty(r)) {
          // The tag builder applied to K t': the result is tag_ty{t'} itself,
          // consumed later by a tagged_tyl application.
          out = AppResult::success(std::move(r));
          break;
        }
        if (auto tag = as_tag_ty(x)) {
          // Data constructor introduction rules, keyed on the tag's label type.
          const Type& label = *tag;
          if (equal(label, product_label())) {
            if (auto uv = match_pair_content(f)) {
              out = AppResult::success(product_ty(uv->first, uv->second));
              break;
            }
          } else if (equal(label, bool_label())) {
            if (equal(f, fst_program_ty()) || equal(f, snd_program_ty())) {
              out = AppResult::success(bool_ty());
              break;
            }
          } else if (equal(label, nat_label())) {
            if (equal(f, fst_program_ty()) || match_successor_content(f)) {
              out = AppResult::success(nat_ty());
              break;
            }
          } else if (equal(label, sum_label())) {
            if (auto bp = as_product(f)) {
              if (equal(bp->first, bool_ty())) {
                if (auto uv = as_product(bp->second)) {
                  out = AppResult::success(sum_ty(uv->first, uv->second));
                  break;
                }
              }
            }
          } else if (equal(label, rec_label())) {
            if (auto inner = match_zty(f)) {
              out = AppResult::success(rec_ty(*inner));
              break;
            }
          } else if (auto elem = as_list_tag(label)) {
            // List introduction: the tag label S2(S1 S0)U names the element
            // type; nil carries |fst|, cons the snd-dispatching content.
            if (equal(f, fst_program_ty()) || match_cons_content(f, *elem)) {
              out = AppResult::success(list_ty(*elem));
              break;
            }
          }
          out = AppResult::failure(no_rule(t, v, budget));
          break;
        }
        if (x->kind() == TypeKind::K1) {
          // Function introduction: S(S(KK)g)(K d) with g : F, d : V1 makes a
          // term of type V1 -> F(V1).
          AppResult w = apply_type(f, x->a(), budget, cache);
          if (!w.ok()) {
            if (w.failure().kind == AppErrorKind::BudgetExhausted) return w;
            out = AppResult::failure(no_rule(t, v, budget));
            break;
          }
          out = AppResult::success(fun_ty(x->a(), w.type()));
          break;
        }
        // Unpacked, but the second component is no constructor tag at all:
        // plain combinatory result.
        out = AppResult::success(std::move(r));
        break;
      }
      case TypeKind::Abs0:
        if (equal(t->a(), bool_label())) {
          if (auto uv = as_product(v); uv && equal(uv->first, uv->second)) {
            out = AppResult::success(uv->first);
            break;
          }
        } else if (equal(t->a(), nat_label())) {
          if (auto uv = as_product(v)) {
            AppResult r = apply_type(uv->second, nat_ty(), budget, cache);
            if (!r.ok()) {
              if (r.failure().kind == AppErrorKind::BudgetExhausted) return r;
            } else if (equal(r.type(), uv->first)) {
              out = AppResult::success(uv->first);
              break;
            }
          }
        }
        out = AppResult::failure(no_rule(t, v, budget));
        break;
      case TypeKind::Abs1:
        if (equal(t->a(), rec_label())) {
          // Rec{F}(V1*V2) = V1 if F(V1*V2 -> V1)(V1*V2) = V1
          if (auto uv = as_product(v)) {
            AppResult r =
                apply_type_multi(t->b(), {fun_ty(v, uv->first), v}, budget, cache);
            if (!r.ok()) {
              if (r.failure().kind == AppErrorKind::BudgetExhausted) return r;
            } else if (equal(r.type(), uv->first)) {
              out = AppResult::success(uv->first);
              break;
            }
          }
        } else if (equal(t->a(), list_label())) {
          // List{U}(V1*V2) = V1 if V2(U * List{U}) = V1
          if (auto uv = as_product(v)) {
            AppResult r =
                apply_type(uv->second, product_ty(t->b(), list_ty(t->b())), budget, cache);
            if (!r.ok()) {
              if (r.failure().kind == AppErrorKind::BudgetExhausted) return r;
            } else if (equal(r.type(), uv->first)) {
              out = AppResult::success(uv->first);
              break;
            }
          }
        }
        out = AppResult::failure(no_rule(t, v, budget));
        break;
      case TypeKind::Abs2:
        if (equal(t->a(), product_label())) {
          // (U1*U2)(V) = V(U1)(U2)
          AppResult r = apply_type(v, t->b(), budget, cache);
          if (!r.ok()) return r;
          t = r.type();
          v = t_in->c();
          tail = true;
          break;
        }
        if (equal(t->a(), sum_label())) {
          // (U1+U2)(V) = (Bool*(U1*U2))(V)
          t = product_ty(bool_ty(), product_ty(t->b(), t->c()));
          tail = true;
          break;
        }
        if (equal(t->a(), fun_label())) {
          if (equal(t->b(), v)) {
            out = AppResult::success(t->c());
            break;
          }
        }
        out = AppResult::failure(no_rule(t, v, budget));
        break;
    }

    if (tail) continue;
    if (cache != nullptr) cache->store(t_in, v_in, out);
    return out;
  }
}

AppResult apply_type_multi(Type t, const std::vector<Type>& args, Budget& budget,
                           ApplyCache* cache) {
  AppResult r = AppResult::success(std::move(t));
  for (const Type& a : args) {
    r = apply_type(r.type(), a, budget, cache);
    if (!r.ok()) return r;
  }
  return r;
}

}  // namespace combty
