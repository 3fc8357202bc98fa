#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "combty/types.hpp"

namespace combty {

// Call counter with a configurable ceiling. Every apply_type invocation
// increments used by one on entry; an invocation that would exceed the limit
// fails instead, so used <= limit always holds. A Budget must not be shared
// across concurrent inferences.
//
// depth tracks the native recursion depth of apply_type (self-applications
// burn calls at constant depth, but adversarial types can nest side
// conditions arbitrarily). Exceeding depth_limit fails the same way as
// exceeding the call limit.
struct Budget {
  static constexpr std::uint64_t unlimited = UINT64_MAX;
  std::uint64_t used = 0;
  std::uint64_t limit = unlimited;
  std::uint32_t depth = 0;
  std::uint32_t depth_limit = 10000;
};

enum class AppErrorKind : std::uint8_t {
  NoRule,           // permanent: no larger budget changes it
  BudgetExhausted,  // may succeed with a larger limit
};

struct AppFailure {
  AppErrorKind kind = AppErrorKind::NoRule;
  Type head;  // NoRule only
  Type arg;   // NoRule only
  std::uint64_t used = 0;
};

class AppResult {
public:
  static AppResult success(Type t) {
    AppResult r;
    r.type_ = std::move(t);
    return r;
  }
  static AppResult failure(AppFailure f) {
    AppResult r;
    r.failure_ = std::move(f);
    r.failed_ = true;
    return r;
  }

  bool ok() const { return !failed_; }
  const Type& type() const { return type_; }
  const AppFailure& failure() const { return failure_; }

private:
  Type type_;
  AppFailure failure_;
  bool failed_ = false;
};

// Optional memo for unmetered runs. Only successes and NoRule outcomes are
// cached (both are budget-independent); never use a cache when call counts
// matter, since hits skip the recursion that would have been counted.
class ApplyCache {
public:
  const AppResult* find(const Type& t, const Type& v) const;
  void store(const Type& t, const Type& v, const AppResult& r);
  std::size_t size() const { return map_.size(); }

private:
  struct Key {
    Type t, v;
    bool operator==(const Key& o) const { return equal(t, o.t) && equal(v, o.v); }
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return static_cast<std::size_t>(k.t->hash() * 0x9e3779b97f4a7c15ULL ^ k.v->hash());
    }
  };
  std::unordered_map<Key, AppResult, KeyHash> map_;
};

// The type application T(V): combinatory arms, the guarded S1 arm with the
// abstract-type introduction rules, and the elimination rules on abstract
// heads. Partial; side conditions recurse under the same Budget.
AppResult apply_type(Type t, Type v, Budget& budget, ApplyCache* cache = nullptr);

// Left fold of apply_type over args, short-circuiting on failure.
AppResult apply_type_multi(Type t, const std::vector<Type>& args, Budget& budget,
                           ApplyCache* cache = nullptr);

}  // namespace combty
