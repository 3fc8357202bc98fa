#include "combty/surface.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <vector>

#include "combty/prelude.hpp"

namespace combty {

namespace {

Surface make_surface(SurfaceKind kind, std::string name, Surface c1, Surface c2) {
  auto node = std::make_shared<SurfaceTerm>();
  node->kind = kind;
  node->name = std::move(name);
  node->child1 = std::move(c1);
  node->child2 = std::move(c2);
  return node;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool pure_op_run(const std::string& s) {
  for (char c : s) {
    if (c != 'S' && c != 'K') return false;
  }
  return !s.empty();
}

struct TermParser {
  std::string_view text;
  std::size_t pos = 0;

  explicit TermParser(std::string_view t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      pos++;
      return true;
    }
    return false;
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !ident_start(text[pos])) fail("expected identifier");
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) pos++;
    return std::string(text.substr(start, pos - start));
  }

  // Atoms pending from a split S/K run, emitted before advancing the cursor.
  std::vector<Surface> pending;

  Surface atom_or_null() {
    if (!pending.empty()) {
      Surface s = pending.front();
      pending.erase(pending.begin());
      return s;
    }
    skip_ws();
    if (pos >= text.size()) return nullptr;
    char c = text[pos];
    if (c == '(') {
      pos++;
      Surface inner = term();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (c == '\\') {
      pos++;
      std::string binder = ident();
      if (!consume('.')) fail("expected '.' after lambda binder");
      Surface body = term();
      return make_surface(SurfaceKind::Lambda, std::move(binder), std::move(body), nullptr);
    }
    if (!ident_start(c)) return nullptr;
    std::size_t save = pos;
    std::string word = ident();
    if (word == "let") {
      std::string binder = ident();
      if (!consume('=')) fail("expected '=' in let");
      Surface bound = term();
      std::string kw = ident();
      if (kw != "in") fail("expected 'in'");
      Surface body = term();
      return make_surface(SurfaceKind::Let, std::move(binder), std::move(bound), std::move(body));
    }
    if (word == "in") {  // belongs to an enclosing let
      pos = save;
      return nullptr;
    }
    if (pure_op_run(word)) {
      for (char op : word) {
        pending.push_back(make_surface(op == 'S' ? SurfaceKind::OpS : SurfaceKind::OpK, "",
                                       nullptr, nullptr));
      }
      Surface s = pending.front();
      pending.erase(pending.begin());
      return s;
    }
    return make_surface(SurfaceKind::Name, std::move(word), nullptr, nullptr);
  }

  Surface term() {
    Surface acc = atom_or_null();
    if (!acc) fail("expected a term");
    for (;;) {
      if (pending.empty()) {
        skip_ws();
        if (pos >= text.size()) break;
        char c = text[pos];
        if (c == ')') break;
      }
      Surface next = atom_or_null();
      if (!next) break;
      acc = make_surface(SurfaceKind::Apply, "", std::move(acc), std::move(next));
    }
    return acc;
  }
};

}  // namespace

Surface parse_term(std::string_view src) {
  TermParser p(src);
  Surface t = p.term();
  if (!p.pending.empty()) throw ParseError("unexpected trailing operators", p.pos);
  if (!p.eof()) throw ParseError("unexpected trailing input", p.pos);
  return t;
}

namespace {

Term elaborate_rec(const Surface& t, std::set<std::string>& bound) {
  switch (t->kind) {
    case SurfaceKind::OpS:
      return op_s();
    case SurfaceKind::OpK:
      return op_k();
    case SurfaceKind::Name: {
      if (bound.count(t->name)) return var(t->name);
      try {
        return prelude::get(t->name);
      } catch (const std::invalid_argument&) {
        return var(t->name);
      }
    }
    case SurfaceKind::Lambda: {
      bool fresh = bound.insert(t->name).second;
      Term body = elaborate_rec(t->child1, bound);
      if (fresh) bound.erase(t->name);
      return star_abs(t->name, body);
    }
    case SurfaceKind::Let: {
      Term bound_term = elaborate_rec(t->child1, bound);
      bool fresh = bound.insert(t->name).second;
      Term body = elaborate_rec(t->child2, bound);
      if (fresh) bound.erase(t->name);
      return app(star_abs(t->name, body), bound_term);
    }
    case SurfaceKind::Apply:
      return app(elaborate_rec(t->child1, bound), elaborate_rec(t->child2, bound));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

Term elaborate(const Surface& t) {
  std::set<std::string> bound;
  return elaborate_rec(t, bound);
}

// ---------------------------------------------------------------------------
// Types
// ---------------------------------------------------------------------------

namespace {

struct TypeParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

  bool consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      pos++;
      return true;
    }
    return false;
  }

  bool consume_arrow() {
    skip_ws();
    if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
      pos += 2;
      return true;
    }
    return false;
  }

  std::string word() {
    skip_ws();
    if (pos >= text.size() || !ident_start(text[pos])) return "";
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      pos++;
    }
    return std::string(text.substr(start, pos - start));
  }

  Type braced() {
    if (!consume('{')) fail("expected '{'");
    Type t = type();
    if (!consume('}')) fail("expected '}'");
    return t;
  }

  Type atom() {
    skip_ws();
    if (consume('(')) {
      Type t = type();
      if (!consume(')')) fail("expected ')'");
      return t;
    }
    std::size_t save = pos;
    std::string w = word();
    if (w == "S0") return s0();
    if (w == "K0") return k0();
    if (w == "Bool") return bool_ty();
    if (w == "Nat") return nat_ty();
    if (w == "S1") return s1(atom());
    if (w == "K1") return k1(atom());
    if (w == "S2") {
      Type a = atom();
      Type b = atom();
      return s2(std::move(a), std::move(b));
    }
    if (w == "Rec") return rec_ty(braced());
    if (w == "List") return list_ty(braced());
    if (w == "Abs0") return abs0(braced());
    if (w == "Abs1") {
      if (!consume('{')) fail("expected '{'");
      Type label = type();
      if (!consume(',')) fail("expected ','");
      Type b = type();
      if (!consume('}')) fail("expected '}'");
      return abs1(std::move(label), std::move(b));
    }
    if (w == "Abs2") {
      if (!consume('{')) fail("expected '{'");
      Type label = type();
      if (!consume(',')) fail("expected ','");
      Type b = type();
      if (!consume(',')) fail("expected ','");
      Type c = type();
      if (!consume('}')) fail("expected '}'");
      return abs2(std::move(label), std::move(b), std::move(c));
    }
    pos = save;
    fail("expected a type");
  }

  Type product() {
    Type t = atom();
    while (consume('*')) t = product_ty(std::move(t), atom());
    return t;
  }

  Type sum() {
    Type t = product();
    while (consume('+')) t = sum_ty(std::move(t), product());
    return t;
  }

  Type type() {
    Type t = sum();
    if (consume_arrow()) return fun_ty(std::move(t), type());
    return t;
  }
};

// Precedence levels for printing: 0 arrow, 1 sum, 2 product, 3 prefix, 4 atom.
void print_type_rec(std::ostringstream& os, const Type& t, int level) {
  auto parens = [&](int mine, auto&& body) {
    if (mine < level) {
      os << '(';
      body();
      os << ')';
    } else {
      body();
    }
  };
  switch (t->kind()) {
    case TypeKind::S0:
      os << "S0";
      return;
    case TypeKind::K0:
      os << "K0";
      return;
    case TypeKind::S1:
      parens(3, [&] {
        os << "S1 ";
        print_type_rec(os, t->a(), 4);
      });
      return;
    case TypeKind::K1:
      parens(3, [&] {
        os << "K1 ";
        print_type_rec(os, t->a(), 4);
      });
      return;
    case TypeKind::S2:
      parens(3, [&] {
        os << "S2 ";
        print_type_rec(os, t->a(), 4);
        os << ' ';
        print_type_rec(os, t->b(), 4);
      });
      return;
    case TypeKind::Abs0:
      if (equal(t, bool_ty())) {
        os << "Bool";
      } else if (equal(t, nat_ty())) {
        os << "Nat";
      } else {
        os << "Abs0{";
        print_type_rec(os, t->a(), 0);
        os << '}';
      }
      return;
    case TypeKind::Abs1:
      if (auto f = as_rec(t)) {
        os << "Rec{";
        print_type_rec(os, *f, 0);
        os << '}';
      } else if (auto u = as_list(t)) {
        os << "List{";
        print_type_rec(os, *u, 0);
        os << '}';
      } else {
        os << "Abs1{";
        print_type_rec(os, t->a(), 0);
        os << ',';
        print_type_rec(os, t->b(), 0);
        os << '}';
      }
      return;
    case TypeKind::Abs2:
      if (auto uv = as_product(t)) {
        parens(2, [&] {
          print_type_rec(os, uv->first, 2);
          os << '*';
          print_type_rec(os, uv->second, 3);
        });
      } else if (auto uv2 = as_sum(t)) {
        parens(1, [&] {
          print_type_rec(os, uv2->first, 1);
          os << '+';
          print_type_rec(os, uv2->second, 2);
        });
      } else if (auto uv3 = as_fun(t)) {
        parens(0, [&] {
          print_type_rec(os, uv3->first, 1);
          os << "->";
          print_type_rec(os, uv3->second, 0);
        });
      } else {
        os << "Abs2{";
        print_type_rec(os, t->a(), 0);
        os << ',';
        print_type_rec(os, t->b(), 0);
        os << ',';
        print_type_rec(os, t->c(), 0);
        os << '}';
      }
      return;
  }
}

}  // namespace

Type parse_type(std::string_view src) {
  TypeParser p{src};
  Type t = p.type();
  p.skip_ws();
  if (p.pos < src.size()) throw ParseError("unexpected trailing input", p.pos);
  return t;
}

std::string print_type(const Type& t) {
  std::ostringstream os;
  print_type_rec(os, t, 0);
  return os.str();
}

// ---------------------------------------------------------------------------
// Term printing
// ---------------------------------------------------------------------------

namespace {

bool is_word_token(const std::string& s) { return !s.empty() && ident_start(s.front()); }

struct TermPrinter {
  bool compact_i = false;
  std::ostringstream os;
  // Token kind of the previously emitted atom: 0 none/paren, 1 operator, 2 ident.
  int prev = 0;

  void emit_atom(const std::string& tok, bool is_op) {
    int kind = is_op ? 1 : 2;
    if (prev != 0 && (prev == 2 || kind == 2)) os << ' ';
    os << tok;
    prev = kind;
  }

  void open() {
    os << '(';
    prev = 0;
  }
  void close() {
    os << ')';
    prev = 1;  // a closing paren juxtaposes like an operator
  }

  void print(const Term& t, bool arg_position) {
    if (compact_i && t->kind() == TermKind::App) {
      static const Term i = app(op_s(), op_k(), op_k());
      if (equal(t, i)) {
        emit_atom("I", true);
        return;
      }
    }
    switch (t->kind()) {
      case TermKind::S:
        emit_atom("S", true);
        return;
      case TermKind::K:
        emit_atom("K", true);
        return;
      case TermKind::Var:
        emit_atom(t->name(), false);
        return;
      case TermKind::App:
        if (arg_position) {
          open();
          print(t->fun(), false);
          print(t->arg(), true);
          close();
        } else {
          print(t->fun(), false);
          print(t->arg(), true);
        }
        return;
    }
  }
};

}  // namespace

std::string print_term(const Term& t) {
  TermPrinter p;
  p.print(t, false);
  return p.os.str();
}

std::string print_term_compact(const Term& t) {
  TermPrinter p;
  p.compact_i = true;
  p.print(t, false);
  return p.os.str();
}

std::uint64_t printed_size(const Term& t) {
  static const Term i = app(op_s(), op_k(), op_k());
  if (equal(t, i)) return 1;
  if (t->kind() == TermKind::App) return printed_size(t->fun()) + printed_size(t->arg());
  return 1;
}

}  // namespace combty
