#include "lg/semantics.hpp"

#include <atomic>
#include <cctype>
#include <fstream>
#include <sstream>

namespace lg {

// ------------------------------------------------------------ simple types

SimpleType st_e() {
  static const SimpleType e = std::make_shared<STypeNode>(STypeNode{STypeKind::E, nullptr, nullptr});
  return e;
}
SimpleType st_t() {
  static const SimpleType t = std::make_shared<STypeNode>(STypeNode{STypeKind::T, nullptr, nullptr});
  return t;
}
SimpleType st_prod(SimpleType a, SimpleType b) {
  return std::make_shared<STypeNode>(STypeNode{STypeKind::Prod, std::move(a), std::move(b)});
}
SimpleType st_arrow(SimpleType a, SimpleType b) {
  return std::make_shared<STypeNode>(STypeNode{STypeKind::Arrow, std::move(a), std::move(b)});
}

bool stype_eq(const SimpleType& a, const SimpleType& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  if (a->kind == STypeKind::E || a->kind == STypeKind::T) return true;
  return stype_eq(a->a, b->a) && stype_eq(a->b, b->b);
}

std::string show_stype(const SimpleType& t) {
  switch (t->kind) {
    case STypeKind::E: return "e";
    case STypeKind::T: return "t";
    case STypeKind::Prod: {
      auto wrap = [](const SimpleType& s) {
        const std::string inner = show_stype(s);
        return s->kind == STypeKind::E || s->kind == STypeKind::T ? inner : "(" + inner + ")";
      };
      return wrap(t->a) + " x " + wrap(t->b);
    }
    case STypeKind::Arrow: {
      const std::string lhs = show_stype(t->a);
      const bool wrap_lhs = t->a->kind == STypeKind::Arrow || t->a->kind == STypeKind::Prod;
      return (wrap_lhs ? "(" + lhs + ")" : lhs) + " -> " + show_stype(t->b);
    }
  }
  return "?";
}

namespace {

// types: 'e' | 't' | T 'x' T | T '->' T, with 'x' binding tighter and '->'
// associating to the right.
struct STypeParser {
  const std::string& src;
  std::size_t pos = 0;

  explicit STypeParser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) pos++;
  }

  SimpleType atom() {
    skip_ws();
    if (pos >= src.size()) throw ParseError("expected a simple type", pos);
    if (src[pos] == '(') {
      pos++;
      SimpleType t = arrow();
      skip_ws();
      if (pos >= src.size() || src[pos] != ')') throw ParseError("expected ')'", pos);
      pos++;
      return t;
    }
    if (src[pos] == 'e') {
      pos++;
      return st_e();
    }
    if (src[pos] == 't') {
      pos++;
      return st_t();
    }
    throw ParseError("expected 'e', 't' or '('", pos);
  }

  SimpleType prod() {
    SimpleType left = atom();
    skip_ws();
    while (pos < src.size() && src[pos] == 'x' &&
           (pos + 1 >= src.size() || !std::isalnum(static_cast<unsigned char>(src[pos + 1])))) {
      pos++;
      SimpleType right = atom();
      left = st_prod(left, right);
      skip_ws();
    }
    return left;
  }

  SimpleType arrow() {
    SimpleType left = prod();
    skip_ws();
    if (pos + 1 < src.size() && src[pos] == '-' && src[pos + 1] == '>') {
      pos += 2;
      return st_arrow(left, arrow());
    }
    return left;
  }

  SimpleType parse() {
    SimpleType t = arrow();
    skip_ws();
    if (pos != src.size()) throw ParseError("unexpected trailing input in type", pos);
    return t;
  }
};

}  // namespace

SimpleType parse_stype(const std::string& text) {
  STypeParser p(text);
  return p.parse();
}

// ------------------------------------------------------------ simple terms

STerm st_var(const Name& x) {
  return std::make_shared<STermNode>(STermNode{STermKind::Var, x, nullptr, nullptr});
}
STerm st_const(const Name& c) {
  return std::make_shared<STermNode>(STermNode{STermKind::Const, c, nullptr, nullptr});
}
STerm st_and() {
  static const STerm conj = std::make_shared<STermNode>(STermNode{STermKind::And, "", nullptr, nullptr});
  return conj;
}
STerm st_app(STerm f, STerm x) {
  return std::make_shared<STermNode>(STermNode{STermKind::App, "", std::move(f), std::move(x)});
}
STerm st_lam(const Name& x, STerm body) {
  return std::make_shared<STermNode>(STermNode{STermKind::Lam, x, std::move(body), nullptr});
}
STerm st_pair(STerm a, STerm b) {
  return std::make_shared<STermNode>(STermNode{STermKind::Pair, "", std::move(a), std::move(b)});
}
STerm st_proj1(STerm a) {
  return std::make_shared<STermNode>(STermNode{STermKind::Proj1, "", std::move(a), nullptr});
}
STerm st_proj2(STerm a) {
  return std::make_shared<STermNode>(STermNode{STermKind::Proj2, "", std::move(a), nullptr});
}

static void sfree_vars_into(const STerm& m, std::map<Name, int>& acc) {
  switch (m->kind) {
    case STermKind::Var: acc[m->name]++; return;
    case STermKind::Const:
    case STermKind::And: return;
    case STermKind::App:
    case STermKind::Pair:
      sfree_vars_into(m->a, acc);
      sfree_vars_into(m->b, acc);
      return;
    case STermKind::Lam: {
      std::map<Name, int> inner;
      sfree_vars_into(m->a, inner);
      inner.erase(m->name);
      for (auto& [k, v] : inner) acc[k] += v;
      return;
    }
    case STermKind::Proj1:
    case STermKind::Proj2: sfree_vars_into(m->a, acc); return;
  }
}

std::map<Name, int> sfree_vars(const STerm& m) {
  std::map<Name, int> acc;
  sfree_vars_into(m, acc);
  return acc;
}

static std::atomic<long> srename_counter{0};

STerm ssubst(const STerm& m, const Name& x, const STerm& n) {
  switch (m->kind) {
    case STermKind::Var: return m->name == x ? n : m;
    case STermKind::Const:
    case STermKind::And: return m;
    case STermKind::App: return st_app(ssubst(m->a, x, n), ssubst(m->b, x, n));
    case STermKind::Pair: return st_pair(ssubst(m->a, x, n), ssubst(m->b, x, n));
    case STermKind::Proj1: return st_proj1(ssubst(m->a, x, n));
    case STermKind::Proj2: return st_proj2(ssubst(m->a, x, n));
    case STermKind::Lam: {
      if (m->name == x) return m;
      if (sfree_vars(n).count(m->name)) {
        const Name fresh = m->name + "$" + std::to_string(++srename_counter);
        const STerm body = ssubst(m->a, m->name, st_var(fresh));
        return st_lam(fresh, ssubst(body, x, n));
      }
      return st_lam(m->name, ssubst(m->a, x, n));
    }
  }
  return m;
}

static bool salpha_rec(const STerm& m, const STerm& n, std::map<Name, Name>& ml,
                       std::map<Name, Name>& nl, int& depth) {
  if (m->kind != n->kind) return false;
  switch (m->kind) {
    case STermKind::Var: {
      auto im = ml.find(m->name);
      auto in = nl.find(n->name);
      if ((im == ml.end()) != (in == nl.end())) return false;
      if (im == ml.end()) return m->name == n->name;
      return im->second == in->second;
    }
    case STermKind::Const: return m->name == n->name;
    case STermKind::And: return true;
    case STermKind::App:
    case STermKind::Pair:
      return salpha_rec(m->a, n->a, ml, nl, depth) && salpha_rec(m->b, n->b, ml, nl, depth);
    case STermKind::Proj1:
    case STermKind::Proj2: return salpha_rec(m->a, n->a, ml, nl, depth);
    case STermKind::Lam: {
      const Name tag = "#" + std::to_string(depth++);
      std::map<Name, Name> ml2 = ml, nl2 = nl;
      ml2[m->name] = tag;
      nl2[n->name] = tag;
      return salpha_rec(m->a, n->a, ml2, nl2, depth);
    }
  }
  return false;
}

bool salpha_eq(const STerm& m, const STerm& n) {
  std::map<Name, Name> ml, nl;
  int depth = 0;
  return salpha_rec(m, n, ml, nl, depth);
}

static std::optional<STerm> sstep(const STerm& m) {
  // beta / projection redexes, leftmost-outermost
  if (m->kind == STermKind::App && m->a->kind == STermKind::Lam)
    return ssubst(m->a->a, m->a->name, m->b);
  if (m->kind == STermKind::Proj1 && m->a->kind == STermKind::Pair) return m->a->a;
  if (m->kind == STermKind::Proj2 && m->a->kind == STermKind::Pair) return m->a->b;
  switch (m->kind) {
    case STermKind::Var:
    case STermKind::Const:
    case STermKind::And: return std::nullopt;
    case STermKind::App:
    case STermKind::Pair: {
      if (auto r = sstep(m->a)) return m->kind == STermKind::App ? st_app(*r, m->b) : st_pair(*r, m->b);
      if (auto r = sstep(m->b)) return m->kind == STermKind::App ? st_app(m->a, *r) : st_pair(m->a, *r);
      return std::nullopt;
    }
    case STermKind::Lam:
      if (auto r = sstep(m->a)) return st_lam(m->name, *r);
      return std::nullopt;
    case STermKind::Proj1:
    case STermKind::Proj2: {
      if (auto r = sstep(m->a)) return m->kind == STermKind::Proj1 ? st_proj1(*r) : st_proj2(*r);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

STerm snormalize(const STerm& m, int fuel) {
  STerm cur = m;
  for (int i = 0; i < fuel; ++i) {
    auto next = sstep(cur);
    if (!next) return cur;
    cur = *next;
  }
  throw Diverged();
}

// ----------------------------------------------------------- term syntax

namespace {

struct STermParser {
  const std::string& src;
  std::size_t pos = 0;

  explicit STermParser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) pos++;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      pos++;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }
  bool peek_word(const std::string& w) {
    skip_ws();
    if (src.compare(pos, w.size(), w) != 0) return false;
    const std::size_t end = pos + w.size();
    if (end < src.size() && (std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
      return false;
    return true;
  }
  bool eat_word(const std::string& w) {
    if (!peek_word(w)) return false;
    pos += w.size();
    return true;
  }
  Name ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' || src[pos] == '\'' ||
            src[pos] == '$'))
      pos++;
    if (pos == start) throw ParseError("expected an identifier", pos);
    return src.substr(start, pos - start);
  }

  struct Pattern {
    Name name;
    std::unique_ptr<Pattern> a, b;
    bool is_pair() const { return a != nullptr; }
  };

  Pattern pattern() {
    skip_ws();
    if (eat('<')) {
      Pattern p;
      p.a = std::make_unique<Pattern>(pattern());
      expect(',');
      p.b = std::make_unique<Pattern>(pattern());
      expect('>');
      return p;
    }
    Pattern p;
    p.name = ident();
    return p;
  }

  static std::atomic<long> sugar_counter;

  // lam <x,y>. M desugars with projections; nested patterns recurse.
  STerm bind_pattern(const Pattern& p, const STerm& scrut, STerm body) {
    if (!p.is_pair()) return ssubst(body, p.name, scrut);
    body = bind_pattern(*p.b, st_proj2(scrut), std::move(body));
    return bind_pattern(*p.a, st_proj1(scrut), std::move(body));
  }

  STerm term() {
    skip_ws();
    if (eat_word("lam")) {
      Pattern p = pattern();
      expect('.');
      STerm body = term();
      if (!p.is_pair()) return st_lam(p.name, body);
      const Name z = "$z" + std::to_string(++sugar_counter);
      return st_lam(z, bind_pattern(p, st_var(z), body));
    }
    if (eat('<')) {
      STerm a = term();
      expect(',');
      STerm b = term();
      expect('>');
      return st_pair(a, b);
    }
    if (eat('(')) {
      STerm first = term();
      skip_ws();
      if (eat(')')) return first;
      if (pos + 1 < src.size() && src[pos] == '/' && src[pos + 1] == '\\') {
        pos += 2;
        STerm rhs = term();
        expect(')');
        return st_app(st_app(st_and(), first), rhs);
      }
      STerm second = term();
      expect(')');
      return st_app(first, second);
    }
    const Name name = ident();
    if (!name.empty() && std::isupper(static_cast<unsigned char>(name[0]))) return st_const(name);
    return st_var(name);
  }

  STerm parse() {
    STerm t = term();
    skip_ws();
    if (pos != src.size()) throw ParseError("unexpected trailing input", pos);
    return t;
  }
};

std::atomic<long> STermParser::sugar_counter{0};

}  // namespace

STerm parse_sterm(const std::string& text) {
  STermParser p(text);
  STerm t = p.parse();
  // rewrite p1/p2 applications into projection nodes
  std::function<STerm(const STerm&)> fix = [&fix](const STerm& m) -> STerm {
    switch (m->kind) {
      case STermKind::App: {
        if (m->a->kind == STermKind::Var && m->a->name == "p1") return st_proj1(fix(m->b));
        if (m->a->kind == STermKind::Var && m->a->name == "p2") return st_proj2(fix(m->b));
        return st_app(fix(m->a), fix(m->b));
      }
      case STermKind::Pair: return st_pair(fix(m->a), fix(m->b));
      case STermKind::Lam: return st_lam(m->name, fix(m->a));
      case STermKind::Proj1: return st_proj1(fix(m->a));
      case STermKind::Proj2: return st_proj2(fix(m->a));
      default: return m;
    }
  };
  return fix(t);
}

namespace {

// Pattern re-sugaring for printing: a binder used only under projections
// prints as a (possibly nested) pattern lambda.
struct PrintPattern {
  Name name;
  std::unique_ptr<PrintPattern> a, b;
  bool is_pair() const { return a != nullptr; }
  std::string show() const {
    if (!is_pair()) return name;
    return "<" + a->show() + ", " + b->show() + ">";
  }
};

bool occurs_bare(const STerm& m, const Name& x) {
  switch (m->kind) {
    case STermKind::Var: return m->name == x;
    case STermKind::Const:
    case STermKind::And: return false;
    case STermKind::App:
    case STermKind::Pair: return occurs_bare(m->a, x) || occurs_bare(m->b, x);
    case STermKind::Lam: return m->name != x && occurs_bare(m->a, x);
    case STermKind::Proj1:
    case STermKind::Proj2:
      if (m->a->kind == STermKind::Var && m->a->name == x) return false;
      return occurs_bare(m->a, x);
  }
  return false;
}

bool occurs_at_all(const STerm& m, const Name& x) { return sfree_vars(m).count(x) > 0; }

static std::atomic<long> print_counter{0};

// Split x's projected occurrences into two fresh variables; returns the new
// body, or nothing if x occurs bare.
std::optional<STerm> split_projected(const STerm& body, const Name& x, const Name& x1, const Name& x2) {
  if (occurs_bare(body, x)) return std::nullopt;
  std::function<STerm(const STerm&)> rw = [&](const STerm& m) -> STerm {
    switch (m->kind) {
      case STermKind::Proj1:
        if (m->a->kind == STermKind::Var && m->a->name == x) return st_var(x1);
        return st_proj1(rw(m->a));
      case STermKind::Proj2:
        if (m->a->kind == STermKind::Var && m->a->name == x) return st_var(x2);
        return st_proj2(rw(m->a));
      case STermKind::App: return st_app(rw(m->a), rw(m->b));
      case STermKind::Pair: return st_pair(rw(m->a), rw(m->b));
      case STermKind::Lam: return m->name == x ? m : st_lam(m->name, rw(m->a));
      default: return m;
    }
  };
  return rw(body);
}

PrintPattern build_pattern(const Name& x, STerm& body) {
  PrintPattern p;
  p.name = x;
  if (!occurs_at_all(body, x)) return p;
  const Name x1 = x + "'" + std::to_string(++print_counter);
  const Name x2 = x + "'" + std::to_string(++print_counter);
  auto split = split_projected(body, x, x1, x2);
  if (!split) return p;
  body = *split;
  p.a = std::make_unique<PrintPattern>(build_pattern(x1, body));
  p.b = std::make_unique<PrintPattern>(build_pattern(x2, body));
  // Cosmetic names for fresh components when they stayed simple.
  return p;
}

std::string show_sterm_rec(const STerm& m);

std::string show_app_chain(const STerm& m) {
  // (A /\ B) prints infix
  if (m->kind == STermKind::App && m->a->kind == STermKind::App &&
      m->a->a->kind == STermKind::And) {
    return "(" + show_sterm_rec(m->a->b) + " /\\ " + show_sterm_rec(m->b) + ")";
  }
  return "(" + show_sterm_rec(m->a) + " " + show_sterm_rec(m->b) + ")";
}

std::string show_sterm_rec(const STerm& m) {
  switch (m->kind) {
    case STermKind::Var:
    case STermKind::Const: return m->name;
    case STermKind::And: return "/\\";
    case STermKind::App: return show_app_chain(m);
    case STermKind::Pair: return "<" + show_sterm_rec(m->a) + ", " + show_sterm_rec(m->b) + ">";
    case STermKind::Proj1: return "(p1 " + show_sterm_rec(m->a) + ")";
    case STermKind::Proj2: return "(p2 " + show_sterm_rec(m->a) + ")";
    case STermKind::Lam: {
      STerm body = m->a;
      PrintPattern p = build_pattern(m->name, body);
      return "lam " + p.show() + ". " + show_sterm_rec(body);
    }
  }
  return "?";
}

}  // namespace

std::string show_sterm(const STerm& m) { return show_sterm_rec(m); }

// --------------------------------------------------------- delinearization

SimpleType delinearize_type(const LinType& t, const BaseMap& base) {
  switch (t->kind) {
    case TypeKind::Bottom: return st_t();
    case TypeKind::Atom: {
      auto it = base.find(t->atom);
      if (it == base.end())
        throw SemanticsError(SemanticsErrorKind::UnknownAtom, "atom '" + t->atom + "' has no base type");
      return it->second;
    }
    case TypeKind::Prod:
      return st_prod(delinearize_type(t->a, base), delinearize_type(t->b, base));
    case TypeKind::Neg: return st_arrow(delinearize_type(t->a, base), st_t());
  }
  throw SemanticsError(SemanticsErrorKind::UnknownAtom, "malformed linear type");
}

STerm delinearize_term(const Term& m) {
  switch (m->kind) {
    case TermKind::Var: return st_var(m->name);
    case TermKind::App: return st_app(delinearize_term(m->a), delinearize_term(m->b));
    case TermKind::Lam: return st_lam(m->name, delinearize_term(m->a));
    case TermKind::Pair: return st_pair(delinearize_term(m->a), delinearize_term(m->b));
    case TermKind::Case: {
      const STerm scrut = delinearize_term(m->a);
      STerm body = delinearize_term(m->b);
      body = ssubst(body, m->name, st_proj1(scrut));
      body = ssubst(body, m->name2, st_proj2(scrut));
      return body;
    }
  }
  return nullptr;
}

// ------------------------------------------------------------------ lexicon

namespace {

struct SimpleChecker {
  const Lexicon& lex;
  std::map<Name, SimpleType> env;

  SimpleType infer(const STerm& m) {
    switch (m->kind) {
      case STermKind::Var: {
        auto it = env.find(m->name);
        if (it == env.end())
          throw SemanticsError(SemanticsErrorKind::BadLexicon, "unbound variable " + m->name);
        return it->second;
      }
      case STermKind::Const: {
        auto it = lex.constants.find(m->name);
        if (it == lex.constants.end())
          throw SemanticsError(SemanticsErrorKind::UnknownConstant,
                               "undeclared constant " + m->name);
        return it->second;
      }
      case STermKind::And: return st_arrow(st_t(), st_arrow(st_t(), st_t()));
      case STermKind::App: {
        const SimpleType f = infer(m->a);
        if (f->kind != STypeKind::Arrow)
          throw SemanticsError(SemanticsErrorKind::BadLexicon,
                               "application head has type " + show_stype(f));
        check(m->b, f->a);
        return f->b;
      }
      case STermKind::Proj1:
      case STermKind::Proj2: {
        const SimpleType p = infer(m->a);
        if (p->kind != STypeKind::Prod)
          throw SemanticsError(SemanticsErrorKind::BadLexicon,
                               "projection from non-product type " + show_stype(p));
        return m->kind == STermKind::Proj1 ? p->a : p->b;
      }
      case STermKind::Pair: return st_prod(infer(m->a), infer(m->b));
      case STermKind::Lam:
        throw SemanticsError(SemanticsErrorKind::BadLexicon,
                             "cannot infer the type of a bare lambda");
    }
    throw SemanticsError(SemanticsErrorKind::BadLexicon, "malformed term");
  }

  void check(const STerm& m, const SimpleType& expected) {
    if (m->kind == STermKind::Lam) {
      if (expected->kind != STypeKind::Arrow)
        throw SemanticsError(SemanticsErrorKind::BadLexicon,
                             "lambda against non-function type " + show_stype(expected));
      auto saved = env.find(m->name) != env.end() ? std::optional(env[m->name]) : std::nullopt;
      env[m->name] = expected->a;
      check(m->a, expected->b);
      if (saved)
        env[m->name] = *saved;
      else
        env.erase(m->name);
      return;
    }
    if (m->kind == STermKind::Pair && expected->kind == STypeKind::Prod) {
      check(m->a, expected->a);
      check(m->b, expected->b);
      return;
    }
    const SimpleType got = infer(m);
    if (!stype_eq(got, expected))
      throw SemanticsError(SemanticsErrorKind::BadLexicon,
                           "term has type " + show_stype(got) + ", expected " + show_stype(expected));
  }
};

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) b++;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) e--;
  return s.substr(b, e - b);
}

}  // namespace

void check_simple(const Lexicon& lex, const STerm& term, const SimpleType& expected) {
  SimpleChecker checker{lex, {}};
  checker.check(term, expected);
}

Lexicon load_grammar(const std::string& text) {
  Lexicon lex;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string directive;
    ls >> directive;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    auto bad = [&](const std::string& why) {
      return SemanticsError(SemanticsErrorKind::BadLexicon,
                            "grammar line " + std::to_string(lineno) + ": " + why);
    };
    if (directive == "atom") {
      const std::size_t colon = rest.find(':');
      if (colon == std::string::npos) throw bad("expected 'atom <name> : <type>'");
      const std::string name = trim(rest.substr(0, colon));
      lex.base[name] = parse_stype(trim(rest.substr(colon + 1)));
    } else if (directive == "const") {
      const std::size_t colon = rest.find(':');
      if (colon == std::string::npos) throw bad("expected 'const <NAME> : <type>'");
      const std::string name = trim(rest.substr(0, colon));
      lex.constants[name] = parse_stype(trim(rest.substr(colon + 1)));
    } else if (directive == "word") {
      const std::size_t colon = rest.find(':');
      const std::size_t equals = rest.find('=', colon == std::string::npos ? 0 : colon);
      if (colon == std::string::npos || equals == std::string::npos)
        throw bad("expected 'word <surface> : <formula> = <term>'");
      const std::string surface = trim(rest.substr(0, colon));
      const Formula category = parse_formula(trim(rest.substr(colon + 1, equals - colon - 1)));
      const STerm meaning = parse_sterm(trim(rest.substr(equals + 1)));
      lex.words[surface].push_back({category, meaning});
    } else if (directive == "goal") {
      lex.default_goal = parse_formula(rest);
    } else {
      throw bad("unknown directive '" + directive + "'");
    }
  }
  // Every entry's meaning must be closed and well-typed at the category's
  // delinearized input type.
  for (const auto& [surface, entries] : lex.words) {
    for (const LexEntry& entry : entries) {
      if (!sfree_vars(entry.meaning).empty())
        throw SemanticsError(SemanticsErrorKind::BadLexicon,
                             "meaning of '" + surface + "' has free variables");
      const SimpleType expected = delinearize_type(input_type(entry.category), lex.base);
      try {
        check_simple(lex, entry.meaning, expected);
      } catch (const SemanticsError& e) {
        throw SemanticsError(SemanticsErrorKind::BadLexicon,
                             "entry for '" + surface + "': " + e.what());
      }
    }
  }
  return lex;
}

Lexicon load_grammar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticsError(SemanticsErrorKind::BadLexicon, "cannot open grammar " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_grammar(ss.str());
}

// ------------------------------------------------------------------ phrases

namespace {

struct PhraseParser {
  const std::string& src;
  std::size_t pos = 0;

  explicit PhraseParser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) pos++;
  }

  Phrase node() {
    skip_ws();
    if (pos < src.size() && src[pos] == '[') {
      pos++;
      std::vector<Phrase> kids;
      while (true) {
        skip_ws();
        if (pos >= src.size()) throw ParseError("expected ']'", pos);
        if (src[pos] == ']') {
          pos++;
          break;
        }
        kids.push_back(node());
      }
      if (kids.empty()) throw ParseError("empty brackets", pos);
      if (kids.size() == 1) return kids.front();
      if (kids.size() > 2) throw ParseError("bracketing must be binary", pos);
      Phrase p;
      p.l = std::make_shared<Phrase>(std::move(kids[0]));
      p.r = std::make_shared<Phrase>(std::move(kids[1]));
      return p;
    }
    std::size_t start = pos;
    while (pos < src.size() && !std::isspace(static_cast<unsigned char>(src[pos])) && src[pos] != '[' &&
           src[pos] != ']')
      pos++;
    if (pos == start) throw ParseError("expected a word", pos);
    Phrase p;
    p.word = src.substr(start, pos - start);
    return p;
  }

  Phrase parse() {
    Phrase p = node();
    skip_ws();
    if (pos != src.size()) throw ParseError("unexpected trailing input in phrase", pos);
    return p;
  }
};

void phrase_words(const Phrase& p, std::vector<std::string>& out) {
  if (p.leaf()) {
    out.push_back(p.word);
    return;
  }
  phrase_words(*p.l, out);
  phrase_words(*p.r, out);
}

std::vector<Phrase> bracketings(const std::vector<std::string>& words, std::size_t lo, std::size_t hi) {
  std::vector<Phrase> out;
  if (hi - lo == 1) {
    Phrase p;
    p.word = words[lo];
    out.push_back(p);
    return out;
  }
  for (std::size_t mid = lo + 1; mid < hi; ++mid) {
    for (const Phrase& l : bracketings(words, lo, mid))
      for (const Phrase& r : bracketings(words, mid, hi)) {
        Phrase p;
        p.l = std::make_shared<Phrase>(l);
        p.r = std::make_shared<Phrase>(r);
        out.push_back(p);
      }
  }
  return out;
}

}  // namespace

Phrase parse_phrase(const std::string& text) {
  PhraseParser p(text);
  return p.parse();
}

std::vector<Phrase> all_bracketings(const std::vector<std::string>& words) {
  if (words.empty()) throw ParseError("empty phrase", 0);
  return bracketings(words, 0, words.size());
}

// ------------------------------------------------------------------ readings

namespace {

struct WordOcc {
  std::string surface;
  Name label;
};

Struct phrase_structure(const Phrase& p, const Lexicon& lex,
                        const std::vector<const LexEntry*>& choice, std::size_t& next,
                        std::vector<WordOcc>& occs, NameGen& gen) {
  if (p.leaf()) {
    const LexEntry* entry = choice[next];
    const Name label = gen.fresh_var();
    occs.push_back({p.word, label});
    next++;
    return s_leaf(entry->category, label);
  }
  Struct l = phrase_structure(*p.l, lex, choice, next, occs, gen);
  Struct r = phrase_structure(*p.r, lex, choice, next, occs, gen);
  return s_prod(std::move(l), std::move(r));
}

}  // namespace

std::vector<Reading> readings(const Phrase& phrase, const Formula& category, const Lexicon& lex,
                              const RulePackage& pkg, const SearchLimits& lim) {
  std::vector<std::string> words;
  phrase_words(phrase, words);
  std::vector<const std::vector<LexEntry>*> options;
  for (const std::string& w : words) {
    auto it = lex.words.find(w);
    if (it == lex.words.end())
      throw SemanticsError(SemanticsErrorKind::UnknownWord, "unknown word '" + w + "'");
    options.push_back(&it->second);
  }

  std::vector<Reading> result;
  bool capped = false;

  // Cartesian product over lexical ambiguity.
  std::vector<std::size_t> pick(words.size(), 0);
  while (true) {
    std::vector<const LexEntry*> choice;
    for (std::size_t i = 0; i < words.size(); ++i) choice.push_back(&(*options[i])[pick[i]]);

    Prover prover(main_calculus(), pkg, lim);
    std::vector<WordOcc> occs;
    std::size_t next = 0;
    Struct ant = phrase_structure(phrase, lex, choice, next, occs, prover.names());
    const Name goal_label = prover.names().fresh_covar();
    const Sequent goal = unfocused(std::move(ant), c_leaf(category, goal_label));

    for (const Derivation& d : prover.prove_all(goal)) {
      STerm term = delinearize_term(d.term);
      for (std::size_t i = 0; i < occs.size(); ++i)
        term = ssubst(term, occs[i].label, choice[i]->meaning);
      term = snormalize(term);
      term = ssubst(term, goal_label, st_var("g"));
      const auto fv = sfree_vars(term);
      if (fv.size() != 1 || fv.begin()->first != "g")
        throw SemanticsError(SemanticsErrorKind::BadLexicon,
                             "reading has unexpected free variables: " + show_sterm(term));
      bool merged = false;
      for (Reading& r : result)
        if (salpha_eq(r.term, term)) {
          r.derivations++;
          merged = true;
          break;
        }
      if (!merged) result.push_back({term, 1});
    }
    capped = capped || prover.stats().capped;

    // advance the ambiguity counter
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < options[i]->size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }

  if (result.empty()) {
    if (capped) throw DepthExceeded();
    throw SemanticsError(SemanticsErrorKind::NoDerivation, "no derivation for the given category");
  }
  return result;
}

}  // namespace lg
