#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combty/apply.hpp"
#include "combty/term.hpp"
#include "combty/types.hpp"

namespace combty {

// Ordered list of variable typings; the most recent binding shadows.
class Context {
public:
  Context() = default;
  void bind(std::string name, Type ty) { bindings_.emplace_back(std::move(name), std::move(ty)); }
  std::optional<Type> lookup(const std::string& name) const {
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
      if (it->first == name) return it->second;
    }
    return std::nullopt;
  }
  bool empty() const { return bindings_.empty(); }
  const std::vector<std::pair<std::string, Type>>& bindings() const { return bindings_; }

private:
  std::vector<std::pair<std::string, Type>> bindings_;
};

enum class Verdict : std::uint8_t { Typed, Untypable, OutOfBudget };

struct InferReport {
  std::uint64_t term_size = 0;
  Verdict verdict = Verdict::Untypable;
  Type type;                   // set iff verdict == Typed
  std::string untypable_path;  // dotted fun/arg path to the failing node
  std::uint64_t calls = 0;     // apply_type invocations
  double ratio = 0.0;          // calls / term_size
  std::uint64_t limit = Budget::unlimited;
};

// Structural inference under a context: Var looks up gamma, S => S0, K => K0,
// applications infer both sides and call apply_type. calls counts apply_type
// invocations only.
InferReport infer(const Context& gamma, const Term& m, std::uint64_t limit = Budget::unlimited);

// factor * term_size(t); the recommended floor for factor is 3.
std::uint64_t default_limit(const Term& t, std::uint64_t factor);

// Re-derives gamma |- m : claimed in an independent pass (explicit-stack
// traversal sharing only apply_type with infer) and compares.
bool check_derivation(const Context& gamma, const Term& m, const Type& claimed,
                      std::uint64_t limit = Budget::unlimited);

}  // namespace combty
