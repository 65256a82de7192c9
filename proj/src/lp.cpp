#include "lg/lp.hpp"

#include <atomic>
#include <cctype>
#include <sstream>

namespace lg {

// ---------------------------------------------------------------- types

LinType t_atom(const std::string& name) {
  return std::make_shared<TypeNode>(TypeNode{TypeKind::Atom, name, nullptr, nullptr});
}
LinType t_bot() {
  static const LinType bot = std::make_shared<TypeNode>(TypeNode{TypeKind::Bottom, "", nullptr, nullptr});
  return bot;
}
LinType t_prod(LinType a, LinType b) {
  return std::make_shared<TypeNode>(TypeNode{TypeKind::Prod, "", std::move(a), std::move(b)});
}
LinType t_neg(LinType a) {
  return std::make_shared<TypeNode>(TypeNode{TypeKind::Neg, "", std::move(a), nullptr});
}

bool type_eq(const LinType& a, const LinType& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TypeKind::Atom: return a->atom == b->atom;
    case TypeKind::Bottom: return true;
    case TypeKind::Prod: return type_eq(a->a, b->a) && type_eq(a->b, b->b);
    case TypeKind::Neg: return type_eq(a->a, b->a);
  }
  return false;
}

std::string show_type(const LinType& t) {
  if (!t) return "?";
  switch (t->kind) {
    case TypeKind::Atom: return t->atom;
    case TypeKind::Bottom: return "⊥";
    case TypeKind::Neg: {
      const std::string inner = show_type(t->a);
      if (t->a->kind == TypeKind::Prod) return "¬(" + inner + ")";
      return "¬" + inner;
    }
    case TypeKind::Prod: {
      auto wrap = [](const LinType& s) {
        const std::string inner = show_type(s);
        return s->kind == TypeKind::Prod ? "(" + inner + ")" : inner;
      };
      return wrap(t->a) + " * " + wrap(t->b);
    }
  }
  return "?";
}

int neg_count(const LinType& t) {
  if (!t) return 0;
  switch (t->kind) {
    case TypeKind::Atom:
    case TypeKind::Bottom: return 0;
    case TypeKind::Neg: return 1 + neg_count(t->a);
    case TypeKind::Prod: return neg_count(t->a) + neg_count(t->b);
  }
  return 0;
}

int type_size(const LinType& t) {
  if (!t) return 0;
  switch (t->kind) {
    case TypeKind::Atom:
    case TypeKind::Bottom: return 1;
    case TypeKind::Neg: return 1 + type_size(t->a);
    case TypeKind::Prod: return 1 + type_size(t->a) + type_size(t->b);
  }
  return 0;
}

// ---------------------------------------------------------------- terms

Term mk_var(const Name& x) {
  return std::make_shared<TermNode>(TermNode{TermKind::Var, x, "", nullptr, nullptr, nullptr});
}
Term mk_app(Term f, Term x) {
  return std::make_shared<TermNode>(TermNode{TermKind::App, "", "", nullptr, std::move(f), std::move(x)});
}
Term mk_lam(const Name& x, LinType ann, Term body) {
  return std::make_shared<TermNode>(TermNode{TermKind::Lam, x, "", std::move(ann), std::move(body), nullptr});
}
Term mk_pair(Term a, Term b) {
  return std::make_shared<TermNode>(TermNode{TermKind::Pair, "", "", nullptr, std::move(a), std::move(b)});
}
Term mk_case(Term scrutinee, const Name& x, const Name& y, Term body) {
  return std::make_shared<TermNode>(
      TermNode{TermKind::Case, x, y, nullptr, std::move(scrutinee), std::move(body)});
}

static void free_vars_into(const Term& m, std::map<Name, int>& acc) {
  switch (m->kind) {
    case TermKind::Var: acc[m->name]++; return;
    case TermKind::App:
    case TermKind::Pair:
      free_vars_into(m->a, acc);
      free_vars_into(m->b, acc);
      return;
    case TermKind::Lam: {
      std::map<Name, int> inner;
      free_vars_into(m->a, inner);
      inner.erase(m->name);
      for (auto& [k, v] : inner) acc[k] += v;
      return;
    }
    case TermKind::Case: {
      free_vars_into(m->a, acc);
      std::map<Name, int> inner;
      free_vars_into(m->b, inner);
      inner.erase(m->name);
      inner.erase(m->name2);
      for (auto& [k, v] : inner) acc[k] += v;
      return;
    }
  }
}

std::map<Name, int> free_vars(const Term& m) {
  std::map<Name, int> acc;
  free_vars_into(m, acc);
  return acc;
}

static std::atomic<long> rename_counter{0};

static Name freshen_name(const Name& base) {
  return base + "$" + std::to_string(++rename_counter);
}

Term subst(const Term& m, const Name& x, const Term& n) {
  switch (m->kind) {
    case TermKind::Var: return m->name == x ? n : m;
    case TermKind::App: return mk_app(subst(m->a, x, n), subst(m->b, x, n));
    case TermKind::Pair: return mk_pair(subst(m->a, x, n), subst(m->b, x, n));
    case TermKind::Lam: {
      if (m->name == x) return m;
      if (free_vars(n).count(m->name)) {
        const Name fresh = freshen_name(m->name);
        const Term body = subst(m->a, m->name, mk_var(fresh));
        return mk_lam(fresh, m->ann, subst(body, x, n));
      }
      return mk_lam(m->name, m->ann, subst(m->a, x, n));
    }
    case TermKind::Case: {
      Term scrut = subst(m->a, x, n);
      if (m->name == x || m->name2 == x) return mk_case(scrut, m->name, m->name2, m->b);
      Name b1 = m->name, b2 = m->name2;
      Term body = m->b;
      const auto nfv = free_vars(n);
      if (nfv.count(b1)) {
        const Name fresh = freshen_name(b1);
        body = subst(body, b1, mk_var(fresh));
        b1 = fresh;
      }
      if (nfv.count(b2)) {
        const Name fresh = freshen_name(b2);
        body = subst(body, b2, mk_var(fresh));
        b2 = fresh;
      }
      return mk_case(scrut, b1, b2, subst(body, x, n));
    }
  }
  return m;
}

static bool alpha_eq_rec(const Term& m, const Term& n, std::map<Name, Name>& ml, std::map<Name, Name>& nl,
                         int& depth) {
  if (m->kind != n->kind) return false;
  switch (m->kind) {
    case TermKind::Var: {
      auto im = ml.find(m->name);
      auto in = nl.find(n->name);
      if ((im == ml.end()) != (in == nl.end())) return false;
      if (im == ml.end()) return m->name == n->name;  // both free
      return im->second == in->second;
    }
    case TermKind::App:
    case TermKind::Pair:
      return alpha_eq_rec(m->a, n->a, ml, nl, depth) && alpha_eq_rec(m->b, n->b, ml, nl, depth);
    case TermKind::Lam: {
      const Name tag = "#" + std::to_string(depth++);
      auto sm = ml.find(m->name), sn = nl.find(n->name);
      const bool hm = sm != ml.end(), hn = sn != nl.end();
      const Name om = hm ? sm->second : "", on = hn ? sn->second : "";
      ml[m->name] = tag;
      nl[n->name] = tag;
      const bool ok = alpha_eq_rec(m->a, n->a, ml, nl, depth);
      if (hm) ml[m->name] = om; else ml.erase(m->name);
      if (hn) nl[n->name] = on; else nl.erase(n->name);
      return ok;
    }
    case TermKind::Case: {
      if (!alpha_eq_rec(m->a, n->a, ml, nl, depth)) return false;
      const Name t1 = "#" + std::to_string(depth++);
      const Name t2 = "#" + std::to_string(depth++);
      std::map<Name, Name> ml2 = ml, nl2 = nl;
      ml2[m->name] = t1;
      ml2[m->name2] = t2;
      nl2[n->name] = t1;
      nl2[n->name2] = t2;
      return alpha_eq_rec(m->b, n->b, ml2, nl2, depth);
    }
  }
  return false;
}

bool alpha_eq(const Term& m, const Term& n) {
  std::map<Name, Name> ml, nl;
  int depth = 0;
  return alpha_eq_rec(m, n, ml, nl, depth);
}

// One rewrite step at the root, if the root is a redex.
static std::optional<Term> step_root(const Term& m) {
  if (m->kind == TermKind::App && m->a->kind == TermKind::Lam)
    return subst(m->a->a, m->a->name, m->b);
  if (m->kind == TermKind::Case && m->a->kind == TermKind::Pair)
    return subst(subst(m->b, m->name, m->a->a), m->name2, m->a->b);
  if (m->kind == TermKind::App && m->a->kind == TermKind::Case) {
    const Term& c = m->a;
    Name b1 = c->name, b2 = c->name2;
    Term body = c->b;
    const auto arg_fv = free_vars(m->b);
    if (arg_fv.count(b1)) {
      const Name fresh = freshen_name(b1);
      body = subst(body, b1, mk_var(fresh));
      b1 = fresh;
    }
    if (arg_fv.count(b2)) {
      const Name fresh = freshen_name(b2);
      body = subst(body, b2, mk_var(fresh));
      b2 = fresh;
    }
    return mk_case(c->a, b1, b2, mk_app(body, m->b));
  }
  if (m->kind == TermKind::Case && m->a->kind == TermKind::Case) {
    const Term& c = m->a;
    // Inner binders must not capture the outer case body's free variables.
    Name b1 = c->name, b2 = c->name2;
    Term inner_body = c->b;
    const auto outer_fv = free_vars(m->b);
    if (outer_fv.count(b1)) {
      const Name fresh = freshen_name(b1);
      inner_body = subst(inner_body, b1, mk_var(fresh));
      b1 = fresh;
    }
    if (outer_fv.count(b2)) {
      const Name fresh = freshen_name(b2);
      inner_body = subst(inner_body, b2, mk_var(fresh));
      b2 = fresh;
    }
    return mk_case(c->a, b1, b2, mk_case(inner_body, m->name, m->name2, m->b));
  }
  return std::nullopt;
}

static std::optional<Term> step_leftmost(const Term& m) {
  if (auto r = step_root(m)) return r;
  switch (m->kind) {
    case TermKind::Var: return std::nullopt;
    case TermKind::App:
    case TermKind::Pair: {
      if (auto r = step_leftmost(m->a))
        return m->kind == TermKind::App ? mk_app(*r, m->b) : mk_pair(*r, m->b);
      if (auto r = step_leftmost(m->b))
        return m->kind == TermKind::App ? mk_app(m->a, *r) : mk_pair(m->a, *r);
      return std::nullopt;
    }
    case TermKind::Lam:
      if (auto r = step_leftmost(m->a)) return mk_lam(m->name, m->ann, *r);
      return std::nullopt;
    case TermKind::Case: {
      if (auto r = step_leftmost(m->a)) return mk_case(*r, m->name, m->name2, m->b);
      if (auto r = step_leftmost(m->b)) return mk_case(m->a, m->name, m->name2, *r);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

static std::optional<Term> step_rightmost_innermost(const Term& m) {
  switch (m->kind) {
    case TermKind::Var: break;
    case TermKind::App:
    case TermKind::Pair: {
      if (auto r = step_rightmost_innermost(m->b))
        return m->kind == TermKind::App ? mk_app(m->a, *r) : mk_pair(m->a, *r);
      if (auto r = step_rightmost_innermost(m->a))
        return m->kind == TermKind::App ? mk_app(*r, m->b) : mk_pair(*r, m->b);
      break;
    }
    case TermKind::Lam:
      if (auto r = step_rightmost_innermost(m->a)) return mk_lam(m->name, m->ann, *r);
      break;
    case TermKind::Case: {
      if (auto r = step_rightmost_innermost(m->b)) return mk_case(m->a, m->name, m->name2, *r);
      if (auto r = step_rightmost_innermost(m->a)) return mk_case(*r, m->name, m->name2, m->b);
      break;
    }
  }
  return step_root(m);
}

Term normalize(const Term& m, int fuel, Strategy strategy) {
  Term cur = m;
  for (int i = 0; i < fuel; ++i) {
    auto next = strategy == Strategy::LeftmostOutermost ? step_leftmost(cur) : step_rightmost_innermost(cur);
    if (!next) return cur;
    cur = *next;
  }
  throw Diverged();
}

// ---------------------------------------------------------------- typing

void Context::add(const Name& x, LinType t) {
  for (auto& [k, v] : entries_)
    if (k == x) throw TypeError(TypeErrorKind::VariableUsedTwice, "duplicate context variable " + x);
  entries_.emplace_back(x, std::move(t));
}

std::optional<LinType> Context::lookup(const Name& x) const {
  for (auto& [k, v] : entries_)
    if (k == x) return v;
  return std::nullopt;
}

namespace {

struct Checker {
  // Scope maps a name to its type; linear usage tracked per scope entry.
  struct Binding {
    LinType type;
    int uses = 0;
  };
  std::map<Name, std::vector<Binding>> scope;

  void push(const Name& x, LinType t) { scope[x].push_back({std::move(t), 0}); }
  void pop(const Name& x) {
    auto& stack = scope[x];
    if (stack.back().uses == 0)
      throw TypeError(TypeErrorKind::VariableUnused, "variable " + x + " is never used");
    if (stack.back().uses > 1)
      throw TypeError(TypeErrorKind::VariableUsedTwice, "variable " + x + " is used more than once");
    stack.pop_back();
    if (stack.empty()) scope.erase(x);
  }

  LinType infer(const Term& m) {
    switch (m->kind) {
      case TermKind::Var: {
        auto it = scope.find(m->name);
        if (it == scope.end())
          throw TypeError(TypeErrorKind::UnboundVariable, "unbound variable " + m->name);
        it->second.back().uses++;
        return it->second.back().type;
      }
      case TermKind::App: {
        const LinType f = infer(m->a);
        if (f->kind != TypeKind::Neg)
          throw TypeError(TypeErrorKind::TypeMismatch,
                          "application head has type " + show_type(f) + ", expected a negation");
        const LinType arg = infer(m->b);
        if (!type_eq(f->a, arg))
          throw TypeError(TypeErrorKind::TypeMismatch,
                          "argument has type " + show_type(arg) + ", expected " + show_type(f->a));
        return t_bot();
      }
      case TermKind::Lam: {
        if (!m->ann)
          throw TypeError(TypeErrorKind::MissingAnnotation, "lambda binder " + m->name + " lacks a type");
        push(m->name, m->ann);
        const LinType body = infer(m->a);
        pop(m->name);
        if (body->kind != TypeKind::Bottom)
          throw TypeError(TypeErrorKind::TypeMismatch,
                          "lambda body has type " + show_type(body) + ", expected ⊥");
        return t_neg(m->ann);
      }
      case TermKind::Pair: return t_prod(infer(m->a), infer(m->b));
      case TermKind::Case: {
        const LinType s = infer(m->a);
        if (s->kind != TypeKind::Prod)
          throw TypeError(TypeErrorKind::TypeMismatch,
                          "case scrutinee has type " + show_type(s) + ", expected a product");
        push(m->name, s->a);
        push(m->name2, s->b);
        const LinType body = infer(m->b);
        pop(m->name2);
        pop(m->name);
        return body;
      }
    }
    throw TypeError(TypeErrorKind::TypeMismatch, "malformed term");
  }
};

}  // namespace

LinType typecheck(const Context& ctx, const Term& m) {
  Checker c;
  for (auto& [x, t] : ctx.entries()) c.push(x, t);
  const LinType result = c.infer(m);
  for (auto it = ctx.entries().rbegin(); it != ctx.entries().rend(); ++it) c.pop(it->first);
  return result;
}

// ---------------------------------------------------------------- syntax

namespace {

struct TermParser {
  const std::string& src;
  std::size_t pos = 0;

  explicit TermParser(const std::string& s) : src(s) {}

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

  // pattern ::= name | '<' pattern ',' pattern '>'
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

  Term bind_pattern(const Pattern& p, Term scrutinee, Term body) {
    if (!p.is_pair()) return subst(body, p.name, std::move(scrutinee));
    const Name x = p.a->is_pair() ? "$p" + std::to_string(++sugar_counter) : p.a->name;
    const Name y = p.b->is_pair() ? "$p" + std::to_string(++sugar_counter) : p.b->name;
    Term inner = body;
    if (p.b->is_pair()) inner = bind_pattern(*p.b, mk_var(y), inner);
    if (p.a->is_pair()) inner = bind_pattern(*p.a, mk_var(x), inner);
    return mk_case(std::move(scrutinee), x, y, inner);
  }

  Term lambda_with_pattern(const Pattern& p) {
    expect('.');
    Term body = term();
    if (!p.is_pair()) return mk_lam(p.name, nullptr, body);
    const Name z = "$z" + std::to_string(++sugar_counter);
    return mk_lam(z, nullptr, bind_pattern(p, mk_var(z), body));
  }

  // term ::= 'lam' pattern '.' term
  //        | 'case' term 'of' pattern '.' term
  //        | '<' term ',' term '>'
  //        | '(' term term ')' | '(' term ')'
  //        | ident
  Term term() {
    skip_ws();
    if (eat_word("lam")) return lambda_with_pattern(pattern());
    if (eat_word("case")) {
      Term scrut = term();
      if (!eat_word("of")) throw ParseError("expected 'of'", pos);
      Pattern p = pattern();
      expect('.');
      Term body = term();
      if (!p.is_pair()) throw ParseError("case pattern must be a pair", pos);
      const Name x = p.a->is_pair() ? "$p" + std::to_string(++sugar_counter) : p.a->name;
      const Name y = p.b->is_pair() ? "$p" + std::to_string(++sugar_counter) : p.b->name;
      if (p.a->is_pair()) body = bind_pattern(*p.a, mk_var(x), body);
      if (p.b->is_pair()) body = bind_pattern(*p.b, mk_var(y), body);
      return mk_case(scrut, x, y, body);
    }
    if (eat('<')) {
      Term a = term();
      expect(',');
      Term b = term();
      expect('>');
      return mk_pair(a, b);
    }
    if (eat('(')) {
      Term first = term();
      skip_ws();
      if (eat(')')) return first;
      Term second = term();
      expect(')');
      return mk_app(first, second);
    }
    return mk_var(ident());
  }

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos != src.size()) throw ParseError("unexpected trailing input", pos);
    return t;
  }
};

std::atomic<long> TermParser::sugar_counter{0};

// Re-sugar lam z. case z of <x,y>. M (z not free in M) as lam <x,y>. M.
struct TermPrinter {
  std::string out;

  void show(const Term& m) {
    switch (m->kind) {
      case TermKind::Var: out += m->name; return;
      case TermKind::App:
        out += "(";
        show(m->a);
        out += " ";
        show(m->b);
        out += ")";
        return;
      case TermKind::Pair:
        out += "<";
        show(m->a);
        out += ", ";
        show(m->b);
        out += ">";
        return;
      case TermKind::Lam: {
        if (m->a->kind == TermKind::Case && m->a->a->kind == TermKind::Var && m->a->a->name == m->name &&
            free_vars(m->a->b).count(m->name) == 0) {
          out += "lam <" + m->a->name + ", " + m->a->name2 + ">. ";
          show(m->a->b);
          return;
        }
        out += "lam " + m->name + ". ";
        show(m->a);
        return;
      }
      case TermKind::Case:
        out += "case ";
        show(m->a);
        out += " of <" + m->name + ", " + m->name2 + ">. ";
        show(m->b);
        return;
    }
  }
};

}  // namespace

Term parse_term(const std::string& text) {
  TermParser p(text);
  return p.parse();
}

std::string show_term(const Term& m) {
  TermPrinter p;
  p.show(m);
  return p.out;
}

Name NameGen::fresh_var() {
  static const char* pool[] = {"x", "y", "z", "u", "v", "w"};
  const int i = vars_++;
  if (i < 6) return pool[i];
  return std::string(pool[i % 6]) + std::to_string(i / 6);
}

Name NameGen::fresh_covar() {
  static const char* pool[] = {"e", "k", "n", "d", "g"};
  const int i = covars_++;
  if (i < 5) return pool[i];
  return std::string(pool[i % 5]) + std::to_string(i / 5);
}

}  // namespace lg
