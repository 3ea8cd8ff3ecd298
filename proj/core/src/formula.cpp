#include "ld/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ld {

FormulaPtr atom_c(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::AtomC;
  f->name = std::move(name);
  return f;
}

FormulaPtr atom_a(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::AtomA;
  f->name = std::move(name);
  return f;
}

FormulaPtr mk(FKind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

FormulaPtr meta(std::string name, bool fa_only) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Meta;
  f->name = std::move(name);
  f->meta_fa = fa_only;
  return f;
}

FormulaPtr top() {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Top;
  return f;
}

FormulaPtr not_c(FormulaPtr x) { return mk(FKind::NotC, std::move(x)); }
FormulaPtr neg_a(FormulaPtr x) { return mk(FKind::NegA, std::move(x)); }
FormulaPtr imp_c(FormulaPtr a, FormulaPtr b) { return mk(FKind::ImpC, std::move(a), std::move(b)); }
FormulaPtr and_c(FormulaPtr a, FormulaPtr b) { return mk(FKind::AndC, std::move(a), std::move(b)); }
FormulaPtr or_c(FormulaPtr a, FormulaPtr b) { return mk(FKind::OrC, std::move(a), std::move(b)); }
FormulaPtr iff_c(FormulaPtr a, FormulaPtr b) { return mk(FKind::IffC, std::move(a), std::move(b)); }
FormulaPtr imp_a(FormulaPtr a, FormulaPtr b) { return mk(FKind::ImpA, std::move(a), std::move(b)); }
FormulaPtr plus(FormulaPtr a) { return mk(FKind::Plus, std::move(a)); }

bool is_unary(FKind k) {
  switch (k) {
    case FKind::NotC: case FKind::NegA:
    case FKind::Plus: case FKind::Ref: case FKind::Sat: case FKind::Wf:
      return true;
    default:
      return false;
  }
}

bool is_binary(FKind k) {
  switch (k) {
    case FKind::ImpC: case FKind::AndC: case FKind::OrC: case FKind::IffC:
    case FKind::ImpA: case FKind::AndA: case FKind::OrA: case FKind::IffA:
      return true;
    default:
      return false;
  }
}

bool is_alt_binary(FKind k) {
  return k == FKind::ImpA || k == FKind::AndA || k == FKind::OrA || k == FKind::IffA;
}

bool is_sugar(FKind k) {
  return k == FKind::Plus || k == FKind::Ref || k == FKind::Sat || k == FKind::Wf;
}

int compare(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  switch (a.kind) {
    case FKind::AtomC: case FKind::AtomA: case FKind::Meta:
      if (a.name != b.name) return a.name < b.name ? -1 : 1;
      if (a.meta_fa != b.meta_fa) return a.meta_fa ? 1 : -1;
      return 0;
    case FKind::Top:
      return 0;
    default: {
      if (a.lhs != b.lhs) {
        int c = compare(*a.lhs, *b.lhs);
        if (c != 0) return c;
      }
      if (a.rhs == b.rhs) return 0;
      if (!a.rhs || !b.rhs) return a.rhs ? 1 : -1;
      return compare(*a.rhs, *b.rhs);
    }
  }
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return compare(*a, *b) == 0;
}

namespace {

// Precedence levels, loosest first.
int level(FKind k) {
  switch (k) {
    case FKind::IffC: case FKind::IffA: return 0;
    case FKind::ImpC: case FKind::ImpA: return 1;
    case FKind::OrC: case FKind::OrA: return 2;
    case FKind::AndC: case FKind::AndA: return 3;
    default: return 4;  // prefix and atoms
  }
}

const char* op_token(FKind k) {
  switch (k) {
    case FKind::ImpC: return ">";
    case FKind::AndC: return "&";
    case FKind::OrC: return "|";
    case FKind::IffC: return "=";
    case FKind::ImpA: return "->";
    case FKind::AndA: return "^";
    case FKind::OrA: return "v";
    case FKind::IffA: return "<->";
    default: return "?";
  }
}

void print_rec(const FormulaPtr& f, int min_level, std::string& out) {
  FKind k = f->kind;
  switch (k) {
    case FKind::AtomC: out += f->name; return;
    case FKind::AtomA: out += "@" + f->name; return;
    case FKind::Meta: out += f->name + (f->meta_fa ? "_" : ""); return;
    case FKind::Top: out += "true"; return;
    case FKind::NotC: out += "~"; print_rec(f->lhs, 4, out); return;
    case FKind::NegA: out += "!"; print_rec(f->lhs, 4, out); return;
    case FKind::Plus: out += "+"; print_rec(f->lhs, 4, out); return;
    case FKind::Ref: out += "ref "; print_rec(f->lhs, 4, out); return;
    case FKind::Sat: out += "sat "; print_rec(f->lhs, 4, out); return;
    case FKind::Wf: out += "wf "; print_rec(f->lhs, 4, out); return;
    default: break;
  }
  int lv = level(k);
  bool paren = lv < min_level;
  if (paren) out += "(";
  bool right_assoc = (lv == 1);  // implications
  if (right_assoc) {
    print_rec(f->lhs, lv + 1, out);
    out += " ";
    out += op_token(k);
    out += " ";
    print_rec(f->rhs, lv, out);
  } else {
    print_rec(f->lhs, lv, out);
    out += " ";
    out += op_token(k);
    out += " ";
    print_rec(f->rhs, lv + 1, out);
  }
  if (paren) out += ")";
}

struct Token {
  enum Kind { Ident, AltIdent, MetaIdent, Op, LParen, RParen, End } kind;
  std::string text;
  int line, col;
};

struct Lexer {
  std::string src;
  size_t pos = 0;
  int line = 1, col = 1;
  std::vector<Token> tokens;

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col); }

  void advance(size_t n) {
    for (size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') { ++line; col = 1; } else { ++col; }
    }
  }

  void run() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
      int tl = line, tc = col;
      if (c == '(') { tokens.push_back({Token::LParen, "(", tl, tc}); advance(1); continue; }
      if (c == ')') { tokens.push_back({Token::RParen, ")", tl, tc}); advance(1); continue; }
      if (src.compare(pos, 3, "<->") == 0) { tokens.push_back({Token::Op, "<->", tl, tc}); advance(3); continue; }
      if (src.compare(pos, 2, "->") == 0) { tokens.push_back({Token::Op, "->", tl, tc}); advance(2); continue; }
      if (std::string("~!+&^|>=").find(c) != std::string::npos) {
        tokens.push_back({Token::Op, std::string(1, c), tl, tc});
        advance(1);
        continue;
      }
      if (c == '@') {
        advance(1);
        size_t s = pos;
        while (pos < src.size() && (std::islower((unsigned char)src[pos]) || std::isdigit((unsigned char)src[pos]) || src[pos] == '_')) advance(1);
        if (s == pos || !std::islower((unsigned char)src[s])) fail("expected atom name after '@'");
        tokens.push_back({Token::AltIdent, src.substr(s, pos - s), tl, tc});
        continue;
      }
      if (std::islower((unsigned char)c)) {
        size_t s = pos;
        while (pos < src.size() && (std::islower((unsigned char)src[pos]) || std::isdigit((unsigned char)src[pos]) || src[pos] == '_')) advance(1);
        std::string w = src.substr(s, pos - s);
        if (w == "v" || w == "sat" || w == "ref" || w == "wf") {
          tokens.push_back({Token::Op, w, tl, tc});
        } else {
          tokens.push_back({Token::Ident, w, tl, tc});
        }
        continue;
      }
      if (std::isupper((unsigned char)c)) {
        size_t s = pos;
        while (pos < src.size() && (std::isalnum((unsigned char)src[pos]) || src[pos] == '_')) advance(1);
        tokens.push_back({Token::MetaIdent, src.substr(s, pos - s), tl, tc});
        continue;
      }
      fail(std::string("unknown token '") + c + "'");
    }
    tokens.push_back({Token::End, "", line, col});
  }
};

struct Parser {
  std::vector<Token> ts;
  size_t i = 0;

  const Token& peek() const { return ts[i]; }
  Token next() { return ts[i++]; }
  [[noreturn]] void fail(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.col);
  }

  FormulaPtr parse_equiv() {
    FormulaPtr f = parse_impl();
    while (peek().kind == Token::Op && (peek().text == "=" || peek().text == "<->")) {
      Token t = next();
      FormulaPtr r = parse_impl();
      f = mk(t.text == "=" ? FKind::IffC : FKind::IffA, f, r);
    }
    return f;
  }

  FormulaPtr parse_impl() {
    FormulaPtr f = parse_disj();
    if (peek().kind == Token::Op && (peek().text == ">" || peek().text == "->")) {
      Token t = next();
      FormulaPtr r = parse_impl();  // right-associative
      return mk(t.text == ">" ? FKind::ImpC : FKind::ImpA, f, r);
    }
    return f;
  }

  FormulaPtr parse_disj() {
    FormulaPtr f = parse_conj();
    while (peek().kind == Token::Op && (peek().text == "|" || peek().text == "v")) {
      Token t = next();
      FormulaPtr r = parse_conj();
      f = mk(t.text == "|" ? FKind::OrC : FKind::OrA, f, r);
    }
    return f;
  }

  FormulaPtr parse_conj() {
    FormulaPtr f = parse_unary();
    while (peek().kind == Token::Op && (peek().text == "&" || peek().text == "^")) {
      Token t = next();
      FormulaPtr r = parse_unary();
      f = mk(t.text == "&" ? FKind::AndC : FKind::AndA, f, r);
    }
    return f;
  }

  FormulaPtr parse_unary() {
    const Token& t = peek();
    if (t.kind == Token::Op) {
      if (t.text == "~") { next(); return not_c(parse_unary()); }
      if (t.text == "!") { next(); return neg_a(parse_unary()); }
      if (t.text == "+") { next(); return mk(FKind::Plus, parse_unary()); }
      if (t.text == "sat") { next(); return mk(FKind::Sat, parse_unary()); }
      if (t.text == "ref") { next(); return mk(FKind::Ref, parse_unary()); }
      if (t.text == "wf") { next(); return mk(FKind::Wf, parse_unary()); }
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    Token t = next();
    switch (t.kind) {
      case Token::Ident: return atom_c(t.text);
      case Token::AltIdent: return atom_a(t.text);
      case Token::MetaIdent: {
        bool fa = !t.text.empty() && t.text.back() == '_';
        std::string name = fa ? t.text.substr(0, t.text.size() - 1) : t.text;
        return meta(name, fa);
      }
      case Token::LParen: {
        FormulaPtr f = parse_equiv();
        if (peek().kind != Token::RParen) fail("expected ')'", peek());
        next();
        return f;
      }
      case Token::End: fail("unexpected end of input", t);
      default: fail("unexpected token '" + t.text + "'", t);
    }
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Lexer lx;
  lx.src = text;
  lx.run();
  Parser p;
  p.ts = std::move(lx.tokens);
  FormulaPtr f = p.parse_equiv();
  if (p.peek().kind != Token::End)
    throw ParseError("trailing input '" + p.peek().text + "'", p.peek().line, p.peek().col);
  return f;
}

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

FormulaPtr expand_sugar(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::AtomC: case FKind::AtomA: case FKind::Meta: case FKind::Top:
      return f;
    case FKind::Plus:
      // +X = !~X
      return neg_a(not_c(expand_sugar(f->lhs)));
    case FKind::Ref:
      // ref X = ~+X
      return not_c(neg_a(not_c(expand_sugar(f->lhs))));
    case FKind::Sat:
      // sat X = ~!X
      return not_c(neg_a(expand_sugar(f->lhs)));
    case FKind::Wf: {
      // wf X = !X | +X
      FormulaPtr x = expand_sugar(f->lhs);
      return or_c(neg_a(x), neg_a(not_c(x)));
    }
    default: {
      FormulaPtr l = expand_sugar(f->lhs);
      FormulaPtr r = f->rhs ? expand_sugar(f->rhs) : nullptr;
      if (l == f->lhs && r == f->rhs) return f;
      return mk(f->kind, l, r);
    }
  }
}

FormulaPtr define_expand(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::AtomC: case FKind::AtomA: case FKind::Meta: case FKind::Top:
      return f;
    case FKind::ImpA:
      return neg_a(not_c(imp_c(define_expand(f->lhs), define_expand(f->rhs))));
    case FKind::AndA:
      return neg_a(not_c(and_c(define_expand(f->lhs), define_expand(f->rhs))));
    case FKind::OrA:
      return neg_a(not_c(or_c(define_expand(f->lhs), define_expand(f->rhs))));
    case FKind::IffA:
      return neg_a(not_c(iff_c(define_expand(f->lhs), define_expand(f->rhs))));
    case FKind::Plus: case FKind::Ref: case FKind::Sat: case FKind::Wf:
      return define_expand(expand_sugar(f));
    default: {
      FormulaPtr l = define_expand(f->lhs);
      FormulaPtr r = f->rhs ? define_expand(f->rhs) : nullptr;
      if (l == f->lhs && r == f->rhs) return f;
      return mk(f->kind, l, r);
    }
  }
}

namespace {

bool all_fc(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::AtomC: return true;
    case FKind::NotC: return all_fc(f->lhs);
    case FKind::ImpC: case FKind::AndC: case FKind::OrC: case FKind::IffC:
      return all_fc(f->lhs) && all_fc(f->rhs);
    default: return false;
  }
}

bool all_fi(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::AtomA: return true;
    case FKind::NegA: return all_fi(f->lhs);
    case FKind::ImpA: case FKind::AndA: case FKind::OrA: case FKind::IffA:
      return all_fi(f->lhs) && all_fi(f->rhs);
    default: return false;
  }
}

}  // namespace

bool is_fa_formula(const FormulaPtr& f) {
  return f->kind == FKind::NegA || f->kind == FKind::AtomA;
}

FragmentReport classify(const FormulaPtr& f) {
  FormulaPtr core = expand_sugar(f);
  FragmentReport r;
  r.is_fc = all_fc(core);
  r.is_fi = all_fi(core);
  r.is_fa = is_fa_formula(core);
  r.is_fat = core->kind == FKind::AtomC || core->kind == FKind::AtomA;
  r.is_for = true;
  return r;
}

FormulaPtr instantiate(const FormulaPtr& schema, const Bindings& b) {
  switch (schema->kind) {
    case FKind::Meta: {
      auto it = b.find(schema->name);
      if (it == b.end())
        throw std::invalid_argument("unbound metavariable " + schema->name);
      if (schema->meta_fa && !is_fa_formula(expand_sugar(it->second)))
        throw std::invalid_argument("metavariable " + schema->name + " requires an FA formula");
      return it->second;
    }
    case FKind::AtomC: case FKind::AtomA: case FKind::Top:
      return schema;
    default: {
      FormulaPtr l = instantiate(schema->lhs, b);
      FormulaPtr r = schema->rhs ? instantiate(schema->rhs, b) : nullptr;
      return mk(schema->kind, l, r);
    }
  }
}

bool match_schema(const FormulaPtr& schema, const FormulaPtr& f, Bindings& b) {
  if (schema->kind == FKind::Meta) {
    if (schema->meta_fa && !is_fa_formula(f)) return false;
    auto it = b.find(schema->name);
    if (it != b.end()) return equal(it->second, f);
    b[schema->name] = f;
    return true;
  }
  if (schema->kind != f->kind) return false;
  switch (schema->kind) {
    case FKind::AtomC: case FKind::AtomA:
      return schema->name == f->name;
    case FKind::Top:
      return true;
    default:
      if (!match_schema(schema->lhs, f->lhs, b)) return false;
      if (!schema->rhs) return !f->rhs;
      return f->rhs && match_schema(schema->rhs, f->rhs, b);
  }
}

std::vector<std::string> collect_atoms(const FormulaPtr& f) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  std::vector<const Formula*> stack{f.get()};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (g->kind == FKind::AtomC || g->kind == FKind::AtomA) {
      std::string key = (g->kind == FKind::AtomA ? "@" : "") + g->name;
      if (seen.insert(key).second) out.push_back(key);
      continue;
    }
    if (g->rhs) stack.push_back(g->rhs.get());
    if (g->lhs) stack.push_back(g->lhs.get());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains_kind(const FormulaPtr& f, FKind k) {
  if (f->kind == k) return true;
  if (f->lhs && contains_kind(f->lhs, k)) return true;
  if (f->rhs && contains_kind(f->rhs, k)) return true;
  return false;
}

}  // namespace ld
