#include "lg/sequent.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <sstream>

namespace lg {

Struct s_leaf(Formula f, const Name& label) {
  return std::make_shared<SNode>(SNode{SKind::Leaf, std::move(f), label, nullptr, nullptr, nullptr});
}
Struct s_prod(Struct a, Struct b) {
  return std::make_shared<SNode>(SNode{SKind::Prod, nullptr, "", std::move(a), std::move(b), nullptr});
}
Struct s_rsub(Struct a, CoStruct b) {
  return std::make_shared<SNode>(SNode{SKind::RSubStr, nullptr, "", std::move(a), nullptr, std::move(b)});
}
Struct s_lsub(CoStruct a, Struct b) {
  return std::make_shared<SNode>(SNode{SKind::LSubStr, nullptr, "", std::move(b), nullptr, std::move(a)});
}
Struct s_rconeg(CoStruct a) {
  return std::make_shared<SNode>(SNode{SKind::RCoNegStr, nullptr, "", nullptr, nullptr, std::move(a)});
}
Struct s_lconeg(CoStruct a) {
  return std::make_shared<SNode>(SNode{SKind::LCoNegStr, nullptr, "", nullptr, nullptr, std::move(a)});
}
CoStruct c_leaf(Formula f, const Name& label) {
  return std::make_shared<CNode>(CNode{CKind::Leaf, std::move(f), label, nullptr, nullptr, nullptr});
}
CoStruct c_par(CoStruct a, CoStruct b) {
  return std::make_shared<CNode>(CNode{CKind::Par, nullptr, "", std::move(a), std::move(b), nullptr});
}
CoStruct c_under(CoStruct a, Struct b) {
  return std::make_shared<CNode>(CNode{CKind::Under, nullptr, "", std::move(a), nullptr, std::move(b)});
}
CoStruct c_over(Struct a, CoStruct b) {
  return std::make_shared<CNode>(CNode{CKind::Over, nullptr, "", std::move(b), nullptr, std::move(a)});
}
CoStruct c_lneg(Struct a) {
  return std::make_shared<CNode>(CNode{CKind::LNegStr, nullptr, "", nullptr, nullptr, std::move(a)});
}
CoStruct c_rneg(Struct a) {
  return std::make_shared<CNode>(CNode{CKind::RNegStr, nullptr, "", nullptr, nullptr, std::move(a)});
}

// Accessors that keep the argument order of the surface syntax readable.
static const Struct& rsub_left(const SNode& n) { return n.s1; }
static const CoStruct& rsub_right(const SNode& n) { return n.k1; }
static const CoStruct& lsub_left(const SNode& n) { return n.k1; }
static const Struct& lsub_right(const SNode& n) { return n.s1; }

bool struct_eq(const Struct& a, const Struct& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case SKind::Leaf: return formula_eq(a->f, b->f) && a->label == b->label;
    case SKind::Prod: return struct_eq(a->s1, b->s1) && struct_eq(a->s2, b->s2);
    case SKind::RSubStr: return struct_eq(a->s1, b->s1) && costruct_eq(a->k1, b->k1);
    case SKind::LSubStr: return costruct_eq(a->k1, b->k1) && struct_eq(a->s1, b->s1);
    case SKind::RCoNegStr:
    case SKind::LCoNegStr: return costruct_eq(a->k1, b->k1);
  }
  return false;
}

bool costruct_eq(const CoStruct& a, const CoStruct& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case CKind::Leaf: return formula_eq(a->f, b->f) && a->label == b->label;
    case CKind::Par: return costruct_eq(a->k1, b->k1) && costruct_eq(a->k2, b->k2);
    case CKind::Under: return costruct_eq(a->k1, b->k1) && struct_eq(a->s1, b->s1);
    case CKind::Over: return struct_eq(a->s1, b->s1) && costruct_eq(a->k1, b->k1);
    case CKind::LNegStr:
    case CKind::RNegStr: return struct_eq(a->s1, b->s1);
  }
  return false;
}

Formula readback(const Struct& s) {
  switch (s->kind) {
    case SKind::Leaf: return s->f;
    case SKind::Prod: return f_tensor(readback(s->s1), readback(s->s2));
    case SKind::RSubStr: return f_rsub(readback(s->s1), readback(s->k1));
    case SKind::LSubStr: return f_lsub(readback(s->k1), readback(s->s1));
    case SKind::RCoNegStr: return f_rconeg(readback(s->k1));
    case SKind::LCoNegStr: return f_lconeg(readback(s->k1));
  }
  return nullptr;
}

Formula readback(const CoStruct& s) {
  switch (s->kind) {
    case CKind::Leaf: return s->f;
    case CKind::Par: return f_par(readback(s->k2), readback(s->k1));      // S o P |-> F(P) + F(S)
    case CKind::Under: return f_under(readback(s->s1), readback(s->k1));  // P <- G |-> F(G) \ F(P)
    case CKind::Over: return f_over(readback(s->k1), readback(s->s1));    // D -> P |-> F(P) / F(D)
    case CKind::LNegStr: return f_lneg(readback(s->s1));
    case CKind::RNegStr: return f_rneg(readback(s->s1));
  }
  return nullptr;
}

Sequent unfocused(Struct ant, CoStruct con, bool swapped) {
  return Sequent{SeqKind::Unfocused, std::move(ant), std::move(con), nullptr, swapped};
}
Sequent focus_conclusion(Struct ant, Formula focus) {
  return Sequent{SeqKind::FocusC, std::move(ant), nullptr, std::move(focus), false};
}
Sequent focus_hypothesis(CoStruct con, Formula focus) {
  return Sequent{SeqKind::FocusH, nullptr, std::move(con), std::move(focus), false};
}

bool seq_eq(const Sequent& a, const Sequent& b) {
  if (a.kind != b.kind || a.swapped != b.swapped) return false;
  switch (a.kind) {
    case SeqKind::Unfocused: return struct_eq(a.ant, b.ant) && costruct_eq(a.con, b.con);
    case SeqKind::FocusC: return struct_eq(a.ant, b.ant) && formula_eq(a.focus, b.focus);
    case SeqKind::FocusH: return costruct_eq(a.con, b.con) && formula_eq(a.focus, b.focus);
  }
  return false;
}

static void collect_leaves(const CoStruct& s, std::vector<LeafRef>& out);

static void collect_leaves(const Struct& s, std::vector<LeafRef>& out) {
  switch (s->kind) {
    case SKind::Leaf: out.push_back({true, s->f, s->label}); return;
    case SKind::Prod:
      collect_leaves(s->s1, out);
      collect_leaves(s->s2, out);
      return;
    case SKind::RSubStr:
      collect_leaves(s->s1, out);
      collect_leaves(s->k1, out);
      return;
    case SKind::LSubStr:
      collect_leaves(s->k1, out);
      collect_leaves(s->s1, out);
      return;
    case SKind::RCoNegStr:
    case SKind::LCoNegStr: collect_leaves(s->k1, out); return;
  }
}

static void collect_leaves(const CoStruct& s, std::vector<LeafRef>& out) {
  switch (s->kind) {
    case CKind::Leaf: out.push_back({false, s->f, s->label}); return;
    case CKind::Par:
      collect_leaves(s->k1, out);
      collect_leaves(s->k2, out);
      return;
    case CKind::Under:
      collect_leaves(s->k1, out);
      collect_leaves(s->s1, out);
      return;
    case CKind::Over:
      collect_leaves(s->s1, out);
      collect_leaves(s->k1, out);
      return;
    case CKind::LNegStr:
    case CKind::RNegStr: collect_leaves(s->s1, out); return;
  }
}

std::vector<LeafRef> leaves_of(const Sequent& s) {
  std::vector<LeafRef> out;
  if (s.ant) collect_leaves(s.ant, out);
  if (s.con) collect_leaves(s.con, out);
  return out;
}

Context context_of(const Sequent& s) {
  Context ctx;
  for (const LeafRef& leaf : leaves_of(s))
    ctx.add(leaf.label, leaf.input ? input_type(leaf.f) : output_type(leaf.f));
  return ctx;
}

// ------------------------------------------------------------- postulates

std::vector<Sequent> display_moves(const Sequent& s) {
  std::vector<Sequent> out;
  if (s.kind != SeqKind::Unfocused) return out;
  const Struct& a = s.ant;
  const CoStruct& c = s.con;
  out.push_back(unfocused(a, c, !s.swapped));  // antecedent/consequent swap
  switch (a->kind) {
    case SKind::Prod:
      out.push_back(unfocused(a->s1, c_over(a->s2, c), s.swapped));   // G.D |- P  =>  G |- D -> P
      out.push_back(unfocused(a->s2, c_under(c, a->s1), s.swapped));  // G.D |- P  =>  D |- P <- G
      break;
    case SKind::RSubStr:  // G </ S |- P  =>  G |- S o P
      out.push_back(unfocused(rsub_left(*a), c_par(rsub_right(*a), c), s.swapped));
      break;
    case SKind::LSubStr:  // P /> G |- S  =>  G |- S o P
      out.push_back(unfocused(lsub_right(*a), c_par(c, lsub_left(*a)), s.swapped));
      break;
    case SKind::LCoNegStr:  // LC{S} |- P  =>  RC{P} |- S
      out.push_back(unfocused(s_rconeg(c), a->k1, s.swapped));
      break;
    case SKind::RCoNegStr:  // RC{P} |- S  =>  LC{S} |- P
      out.push_back(unfocused(s_lconeg(c), a->k1, s.swapped));
      break;
    case SKind::Leaf: break;
  }
  switch (c->kind) {
    case CKind::Over:  // G |- D -> P  =>  G.D |- P
      out.push_back(unfocused(s_prod(a, c->s1), c->k1, s.swapped));
      break;
    case CKind::Under:  // D |- P <- G  =>  G.D |- P
      out.push_back(unfocused(s_prod(c->s1, a), c->k1, s.swapped));
      break;
    case CKind::Par:  // G |- S o P  =>  G </ S |- P   and   P /> G |- S
      out.push_back(unfocused(s_rsub(a, c->k1), c->k2, s.swapped));
      out.push_back(unfocused(s_lsub(c->k2, a), c->k1, s.swapped));
      break;
    case CKind::LNegStr:  // G |- LN{D}  =>  D |- RN{G}
      out.push_back(unfocused(c->s1, c_rneg(a), s.swapped));
      break;
    case CKind::RNegStr:  // D |- RN{G}  =>  G |- LN{D}
      out.push_back(unfocused(c->s1, c_lneg(a), s.swapped));
      break;
    case CKind::Leaf: break;
  }
  return out;
}

DisplayClass display_class(const Sequent& s, std::size_t cap) {
  DisplayClass cls;
  Sequent start = s;
  start.swapped = false;
  std::set<std::string> seen;
  std::deque<Sequent> queue{start};
  seen.insert(show_sequent(start));
  while (!queue.empty()) {
    Sequent cur = queue.front();
    queue.pop_front();
    cls.members.push_back(cur);
    if (cls.members.size() + queue.size() > cap) {
      cls.capped = true;
      break;
    }
    for (Sequent& next : display_moves(cur)) {
      if (next.swapped) continue;  // presentation twin, same arrangement
      const std::string key = show_sequent(next);
      if (seen.insert(key).second) queue.push_back(next);
    }
  }
  return cls;
}

std::optional<Sequent> display(const DisplayClass& cls, const Name& leaf_label) {
  for (const Sequent& m : cls.members) {
    if (m.ant->kind == SKind::Leaf && m.ant->label == leaf_label) return m;
    if (m.con->kind == CKind::Leaf && m.con->label == leaf_label) return m;
  }
  return std::nullopt;
}

std::optional<Sequent> display(const Sequent& s, const Name& leaf_label, std::size_t cap) {
  return display(display_class(s, cap), leaf_label);
}

std::string canonical(const Sequent& s, std::size_t cap) {
  const DisplayClass cls = display_class(s, cap);
  std::string best;
  for (const Sequent& m : cls.members) {
    Sequent swapped = m;
    swapped.swapped = true;
    for (const std::string& cand : {show_sequent(m), show_sequent(swapped)})
      if (best.empty() || cand < best) best = cand;
  }
  return best;
}

std::string canonical_key(const DisplayClass& cls) {
  std::string best;
  for (const Sequent& m : cls.members) {
    std::map<Name, std::string> renames;
    std::string serialized = show_sequent(m);
    // Rename labels by first occurrence so alpha-variant states share a key.
    std::string out;
    out.reserve(serialized.size());
    for (std::size_t i = 0; i < serialized.size();) {
      if (serialized[i] == '^') {
        out += '^';
        i++;
        std::size_t j = i;
        while (j < serialized.size() &&
               (std::isalnum(static_cast<unsigned char>(serialized[j])) || serialized[j] == '_' ||
                serialized[j] == '\'' || serialized[j] == '$'))
          j++;
        const Name label = serialized.substr(i, j - i);
        auto [it, fresh] = renames.emplace(label, "L" + std::to_string(renames.size()));
        out += it->second;
        i = j;
      } else {
        out += serialized[i++];
      }
    }
    if (best.empty() || out < best) best = out;
  }
  return best;
}

// ------------------------------------------------------------- dualization

static CoStruct dual_s(const Struct& s);
static Struct dual_c(const CoStruct& s);

static CoStruct dual_s(const Struct& s) {
  switch (s->kind) {
    case SKind::Leaf: return c_leaf(dual(s->f), s->label);
    case SKind::Prod: return c_par(dual_s(s->s1), dual_s(s->s2));
    case SKind::RSubStr: return c_under(dual_s(s->s1), dual_c(s->k1));
    case SKind::LSubStr: return c_over(dual_c(s->k1), dual_s(s->s1));
    case SKind::RCoNegStr: return c_lneg(dual_c(s->k1));
    case SKind::LCoNegStr: return c_rneg(dual_c(s->k1));
  }
  return nullptr;
}

static Struct dual_c(const CoStruct& s) {
  switch (s->kind) {
    case CKind::Leaf: return s_leaf(dual(s->f), s->label);
    case CKind::Par: return s_prod(dual_c(s->k1), dual_c(s->k2));
    case CKind::Under: return s_rsub(dual_c(s->k1), dual_s(s->s1));
    case CKind::Over: return s_lsub(dual_s(s->s1), dual_c(s->k1));
    case CKind::LNegStr: return s_rconeg(dual_s(s->s1));
    case CKind::RNegStr: return s_lconeg(dual_s(s->s1));
  }
  return nullptr;
}

Sequent dualize(const Sequent& s) {
  return unfocused(dual_c(s.con), dual_s(s.ant));
}

// ------------------------------------------------------------- printing

static std::string show_leaf_formula(const Formula& f) {
  const std::string body = show_formula(f);
  return f->conn == Conn::Atom || f->conn == Conn::LNeg || f->conn == Conn::RNeg ||
                 f->conn == Conn::LCoNeg || f->conn == Conn::RCoNeg
             ? body
             : "(" + body + ")";
}

std::string show_struct(const Struct& s, bool top) {
  auto wrap = [top](const std::string& inner) { return top ? inner : "(" + inner + ")"; };
  switch (s->kind) {
    case SKind::Leaf: return show_leaf_formula(s->f) + "^" + s->label;
    case SKind::Prod: return wrap(show_struct(s->s1) + " . " + show_struct(s->s2));
    case SKind::RSubStr: return wrap(show_struct(rsub_left(*s)) + " </ " + show_costruct(rsub_right(*s)));
    case SKind::LSubStr: return wrap(show_costruct(lsub_left(*s)) + " /> " + show_struct(lsub_right(*s)));
    case SKind::RCoNegStr: return "RC{" + show_costruct(s->k1, true) + "}";
    case SKind::LCoNegStr: return "LC{" + show_costruct(s->k1, true) + "}";
  }
  return "?";
}

std::string show_costruct(const CoStruct& s, bool top) {
  auto wrap = [top](const std::string& inner) { return top ? inner : "(" + inner + ")"; };
  switch (s->kind) {
    case CKind::Leaf: return show_leaf_formula(s->f) + "^" + s->label;
    case CKind::Par: return wrap(show_costruct(s->k1) + " o " + show_costruct(s->k2));
    case CKind::Under: return wrap(show_costruct(s->k1) + " <- " + show_struct(s->s1));
    case CKind::Over: return wrap(show_struct(s->s1) + " -> " + show_costruct(s->k1));
    case CKind::LNegStr: return "LN{" + show_struct(s->s1, true) + "}";
    case CKind::RNegStr: return "RN{" + show_struct(s->s1, true) + "}";
  }
  return "?";
}

std::string show_sequent(const Sequent& s) {
  switch (s.kind) {
    case SeqKind::Unfocused:
      if (s.swapped) return show_costruct(s.con, true) + " -| " + show_struct(s.ant, true);
      return show_struct(s.ant, true) + " |- " + show_costruct(s.con, true);
    case SeqKind::FocusC: return show_struct(s.ant, true) + " |- [" + show_formula(s.focus) + "]";
    case SeqKind::FocusH: return "[" + show_formula(s.focus) + "] |- " + show_costruct(s.con, true);
  }
  return "?";
}

// ------------------------------------------------------------- parsing

namespace {

// Neutral operator tree: sides are assigned top-down after parsing.
struct Neutral {
  enum Kind { Leaf, Bin, Un } kind = Leaf;
  Formula f;            // Leaf (formula or atom)
  std::string op;       // Bin: . o -> <- </ /> * + / \ ./ .\   Un: LN RN LC RC
  std::unique_ptr<Neutral> a, b;
  std::string label;    // optional ^label (leaves only)
};

struct SeqParser {
  const std::string& src;
  std::size_t pos = 0;

  explicit SeqParser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) pos++;
  }

  bool at(const std::string& tok) {
    skip_ws();
    return src.compare(pos, tok.size(), tok) == 0;
  }
  bool eat(const std::string& tok) {
    if (!at(tok)) return false;
    pos += tok.size();
    return true;
  }

  std::string peek_binop() {
    skip_ws();
    for (const char* tok : {"./", ".\\", "</", "/>", "->", "<-"})
      if (src.compare(pos, 2, tok) == 0) return tok;
    if (pos < src.size()) {
      const char ch = src[pos];
      if (ch == '.' || ch == '*' || ch == '+' || ch == '/' || ch == '\\') return std::string(1, ch);
    }
    // identifier "o" is the structural par
    if (src.compare(pos, 1, "o") == 0) {
      const std::size_t end = pos + 1;
      if (end >= src.size() || !(std::isalnum(static_cast<unsigned char>(src[end])) || src[end] == '_'))
        return "o";
    }
    return "";
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' || src[pos] == '\''))
      pos++;
    if (pos == start) throw ParseError("expected an identifier", pos);
    return src.substr(start, pos - start);
  }

  void maybe_label(Neutral& n) {
    skip_ws();
    if (pos < src.size() && src[pos] == '^') {
      pos++;
      n.label = ident();
    }
  }

  std::unique_ptr<Neutral> item() {
    skip_ws();
    if (pos >= src.size()) throw ParseError("expected a structure or formula", pos);
    if (src[pos] == '(') {
      pos++;
      auto n = neutral();
      skip_ws();
      if (pos >= src.size() || src[pos] != ')') throw ParseError("expected ')'", pos);
      pos++;
      maybe_label(*n);
      return n;
    }
    for (const char* sn : {"LN", "RN", "LC", "RC"}) {
      if (src.compare(pos, 2, sn) == 0 && pos + 2 < src.size() && src[pos + 2] == '{') {
        pos += 3;
        auto inner = neutral();
        skip_ws();
        if (pos >= src.size() || src[pos] != '}') throw ParseError("expected '}'", pos);
        pos++;
        auto n = std::make_unique<Neutral>();
        n->kind = Neutral::Un;
        n->op = sn;
        n->a = std::move(inner);
        return n;
      }
    }
    const std::size_t start = pos;
    const std::string name = ident();
    auto n = std::make_unique<Neutral>();
    n->kind = Neutral::Leaf;
    if ((name == "ln" || name == "rn" || name == "lc" || name == "rc") && pos < src.size() &&
        src[pos] == '(') {
      // formula-level unary: re-parse the whole item with the formula parser
      int depth = 0;
      std::size_t end = pos;
      do {
        if (src[end] == '(') depth++;
        if (src[end] == ')') depth--;
        end++;
      } while (end < src.size() && depth > 0);
      if (depth > 0) throw ParseError("expected ')'", end);
      n->f = parse_formula(src.substr(start, end - start));
      pos = end;
    } else {
      n->f = f_atom(name);
    }
    maybe_label(*n);
    return n;
  }

  std::unique_ptr<Neutral> neutral() {
    auto left = item();
    const std::string op = peek_binop();
    if (op.empty()) return left;
    pos += op.size();
    auto right = item();
    if (!peek_binop().empty())
      throw ParseError("operators mix without parentheses; structural connectives are non-associative",
                       pos);
    auto n = std::make_unique<Neutral>();
    n->kind = Neutral::Bin;
    n->op = op;
    n->a = std::move(left);
    n->b = std::move(right);
    return n;
  }
};

bool is_formula_op(const std::string& op) {
  return op == "*" || op == "+" || op == "/" || op == "\\" || op == "./" || op == ".\\";
}

Formula build_formula(const Neutral& n) {
  switch (n.kind) {
    case Neutral::Leaf: return n.f;
    case Neutral::Un: throw ParseError("structural negation used inside a formula", 0);
    case Neutral::Bin: {
      if (!is_formula_op(n.op)) throw ParseError("structural operator '" + n.op + "' inside a formula", 0);
      if (!n.a->label.empty() || !n.b->label.empty())
        throw ParseError("labels are only allowed on structure leaves", 0);
      const Formula l = build_formula(*n.a);
      const Formula r = build_formula(*n.b);
      if (n.op == "*") return f_tensor(l, r);
      if (n.op == "+") return f_par(l, r);
      if (n.op == "/") return f_over(l, r);
      if (n.op == "\\") return f_under(l, r);
      if (n.op == "./") return f_rsub(l, r);
      return f_lsub(l, r);
    }
  }
  return nullptr;
}

Struct build_struct(const Neutral& n, NameGen& gen);
CoStruct build_costruct(const Neutral& n, NameGen& gen);

bool formula_like(const Neutral& n) {
  return n.kind == Neutral::Leaf || (n.kind == Neutral::Bin && is_formula_op(n.op));
}

Struct build_struct(const Neutral& n, NameGen& gen) {
  if (formula_like(n)) {
    const Name label = n.label.empty() ? gen.fresh_var() : n.label;
    if (n.kind == Neutral::Leaf) return s_leaf(n.f, label);
    return s_leaf(build_formula(n), label);
  }
  if (n.kind == Neutral::Un) {
    if (n.op == "RC") return s_rconeg(build_costruct(*n.a, gen));
    if (n.op == "LC") return s_lconeg(build_costruct(*n.a, gen));
    throw ParseError(n.op + "{...} is a consequent structure", 0);
  }
  if (n.op == ".") return s_prod(build_struct(*n.a, gen), build_struct(*n.b, gen));
  if (n.op == "</") return s_rsub(build_struct(*n.a, gen), build_costruct(*n.b, gen));
  if (n.op == "/>") return s_lsub(build_costruct(*n.a, gen), build_struct(*n.b, gen));
  throw ParseError("operator '" + n.op + "' cannot appear in an antecedent", 0);
}

CoStruct build_costruct(const Neutral& n, NameGen& gen) {
  if (formula_like(n)) {
    const Name label = n.label.empty() ? gen.fresh_covar() : n.label;
    if (n.kind == Neutral::Leaf) return c_leaf(n.f, label);
    return c_leaf(build_formula(n), label);
  }
  if (n.kind == Neutral::Un) {
    if (n.op == "LN") return c_lneg(build_struct(*n.a, gen));
    if (n.op == "RN") return c_rneg(build_struct(*n.a, gen));
    throw ParseError(n.op + "{...} is an antecedent structure", 0);
  }
  if (n.op == "o") return c_par(build_costruct(*n.a, gen), build_costruct(*n.b, gen));
  if (n.op == "->") return c_over(build_struct(*n.a, gen), build_costruct(*n.b, gen));
  if (n.op == "<-") return c_under(build_costruct(*n.a, gen), build_struct(*n.b, gen));
  throw ParseError("operator '" + n.op + "' cannot appear in a consequent", 0);
}

}  // namespace

Sequent parse_sequent(const std::string& text, NameGen& gen) {
  const std::size_t split = text.find("|-");
  if (split == std::string::npos) throw ParseError("expected '|-' in sequent", 0);
  const std::string left = text.substr(0, split);
  const std::string right = text.substr(split + 2);
  SeqParser lp(left);
  auto ln = lp.neutral();
  lp.skip_ws();
  if (lp.pos != left.size()) throw ParseError("unexpected trailing input before '|-'", lp.pos);
  SeqParser rp(right);
  auto rn = rp.neutral();
  rp.skip_ws();
  if (rp.pos != right.size()) throw ParseError("unexpected trailing input after '|-'", rp.pos);
  Struct ant = build_struct(*ln, gen);
  CoStruct con = build_costruct(*rn, gen);
  // Leaf labels must be pairwise distinct; context building enforces it.
  context_of(unfocused(ant, con));
  return unfocused(std::move(ant), std::move(con));
}

}  // namespace lg
