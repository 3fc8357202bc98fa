#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "combty/term.hpp"
#include "combty/types.hpp"

namespace combty {

// Surface language of terms:
//   term := app ; app := atom+ (left-assoc)
//   atom := 'S' | 'K' | ident | '\' ident '.' term
//         | 'let' ident '=' term 'in' term | '(' term ')'
// Runs of S/K capitals split into operator tokens, so printed forms like
// "S(KK)" read back; every other identifier resolves against the prelude or
// enclosing binders, and unknown free identifiers become Var nodes.
enum class SurfaceKind : std::uint8_t { OpS, OpK, Name, Lambda, Let, Apply };

struct SurfaceTerm;
using Surface = std::shared_ptr<const SurfaceTerm>;

struct SurfaceTerm {
  SurfaceKind kind;
  std::string name;    // Name binder for Lambda/Let, identifier for Name
  Surface child1;      // Lambda body / Let bound / Apply fun
  Surface child2;      // Let body / Apply arg
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

Surface parse_term(std::string_view src);

// Lambda(x,b) => star_abs(x, ...); Let(x,u,b) => (star_abs(x, ...)) u;
// names substitute prelude terms. The result contains only S/K/App/Var.
Term elaborate(const Surface& t);

// Concrete type syntax: S0, K0, S1 T, K1 T, S2 T U, Bool, Nat, T*U, T+U,
// T->U, Rec{T}, List{T}, Abs0{T}, Abs1{T,U}, Abs2{T,U,V}.
Type parse_type(std::string_view src);
std::string print_type(const Type& t);

// Minimal-parenthesis left-associative application; parse_term(print_term(t))
// elaborates back to t for closed terms.
std::string print_term(const Term& t);

// Display variant used by desugar: prints SKK as I.
std::string print_term_compact(const Term& t);

// Leaf count of the compact printed form (I counts as one).
std::uint64_t printed_size(const Term& t);

}  // namespace combty
