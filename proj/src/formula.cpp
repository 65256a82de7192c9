#include "lg/formula.hpp"

#include <cctype>

namespace lg {

static Formula mk(Conn c, std::string atom, Formula l, Formula r) {
  return std::make_shared<FNode>(FNode{c, std::move(atom), std::move(l), std::move(r)});
}

Formula f_atom(const std::string& name) { return mk(Conn::Atom, name, nullptr, nullptr); }
Formula f_tensor(Formula a, Formula b) { return mk(Conn::Tensor, "", std::move(a), std::move(b)); }
Formula f_par(Formula a, Formula b) { return mk(Conn::Par, "", std::move(a), std::move(b)); }
Formula f_over(Formula a, Formula b) { return mk(Conn::Over, "", std::move(a), std::move(b)); }
Formula f_under(Formula b, Formula a) { return mk(Conn::Under, "", std::move(b), std::move(a)); }
Formula f_rsub(Formula a, Formula b) { return mk(Conn::RSub, "", std::move(a), std::move(b)); }
Formula f_lsub(Formula b, Formula a) { return mk(Conn::LSub, "", std::move(b), std::move(a)); }
Formula f_lneg(Formula a) { return mk(Conn::LNeg, "", std::move(a), nullptr); }
Formula f_rneg(Formula a) { return mk(Conn::RNeg, "", std::move(a), nullptr); }
Formula f_lconeg(Formula a) { return mk(Conn::LCoNeg, "", std::move(a), nullptr); }
Formula f_rconeg(Formula a) { return mk(Conn::RCoNeg, "", std::move(a), nullptr); }

bool formula_eq(const Formula& a, const Formula& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->conn != b->conn) return false;
  if (a->conn == Conn::Atom) return a->atom == b->atom;
  if (!formula_eq(a->l, b->l)) return false;
  if ((a->r == nullptr) != (b->r == nullptr)) return false;
  return !a->r || formula_eq(a->r, b->r);
}

int formula_size(const Formula& a) {
  if (a->conn == Conn::Atom) return 0;
  return 1 + formula_size(a->l) + (a->r ? formula_size(a->r) : 0);
}

Formula dual(const Formula& a) {
  switch (a->conn) {
    case Conn::Atom: return a;
    case Conn::Tensor: return f_par(dual(a->r), dual(a->l));          // (A⊗B)∞ = B∞ ⊕ A∞
    case Conn::Par: return f_tensor(dual(a->r), dual(a->l));          // (A⊕B)∞ = B∞ ⊗ A∞
    case Conn::Over: return f_lsub(dual(a->r), dual(a->l));           // (A/B)∞ = B∞ ⦸ A∞
    case Conn::LSub: return f_over(dual(a->r), dual(a->l));           // (B⦸A)∞ = A∞ / B∞
    case Conn::Under: return f_rsub(dual(a->r), dual(a->l));          // (B\A)∞ = A∞ ⊘ B∞
    case Conn::RSub: return f_under(dual(a->r), dual(a->l));          // (A⊘B)∞ = B∞ \ A∞
    case Conn::LNeg: return f_rconeg(dual(a->l));
    case Conn::RNeg: return f_lconeg(dual(a->l));
    case Conn::RCoNeg: return f_lneg(dual(a->l));
    case Conn::LCoNeg: return f_rneg(dual(a->l));
  }
  return a;
}

Polarity polarity(const Formula& a) {
  switch (a->conn) {
    case Conn::Atom:  // positive bias
    case Conn::Tensor:
    case Conn::RSub:
    case Conn::LSub:
    case Conn::LCoNeg:
    case Conn::RCoNeg: return Polarity::Pos;
    case Conn::Par:
    case Conn::Over:
    case Conn::Under:
    case Conn::LNeg:
    case Conn::RNeg: return Polarity::Neg;
  }
  return Polarity::Pos;
}

LinType input_type(const Formula& a) {
  const LinType t = translate(a);
  return polarity(a) == Polarity::Pos ? t : t_neg(t);
}

LinType output_type(const Formula& a) {
  const LinType t = translate(a);
  return polarity(a) == Polarity::Neg ? t : t_neg(t);
}

LinType translate(const Formula& a) {
  switch (a->conn) {
    case Conn::Atom: return t_atom(a->atom);
    case Conn::Tensor: return t_prod(input_type(a->l), input_type(a->r));    // i(A) ⊗ i(B)
    case Conn::Par: return t_prod(output_type(a->r), output_type(a->l));     // o(B) ⊗ o(A)
    case Conn::Over: return t_prod(input_type(a->r), output_type(a->l));     // A/B: i(B) ⊗ o(A)
    case Conn::Under: return t_prod(output_type(a->r), input_type(a->l));    // B\A: o(A) ⊗ i(B)
    case Conn::RSub: return t_prod(input_type(a->l), output_type(a->r));     // A⊘B: i(A) ⊗ o(B)
    case Conn::LSub: return t_prod(output_type(a->l), input_type(a->r));     // B⦸A: o(B) ⊗ i(A)
    case Conn::LNeg:
    case Conn::RNeg: return input_type(a->l);
    case Conn::LCoNeg:
    case Conn::RCoNeg: return output_type(a->l);
  }
  return t_bot();
}

// ---------------------------------------------------------------- syntax

namespace {

// Formula tokens: atoms, '*' '+' '/' '\' './' '.\', ln/rn/lc/rc, parens.
// Binary operators are non-associative and of equal precedence.
struct FormulaParser {
  const std::string& src;
  std::size_t pos = 0;

  explicit FormulaParser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) pos++;
  }

  // Returns a binary-operator token at the cursor without consuming it.
  std::string peek_op() {
    skip_ws();
    if (pos >= src.size()) return "";
    if (src.compare(pos, 2, "./") == 0) return "./";
    if (src.compare(pos, 2, ".\\") == 0) return ".\\";
    const char c = src[pos];
    if (c == '*' || c == '+' || c == '/' || c == '\\') return std::string(1, c);
    return "";
  }

  Formula operand() {
    skip_ws();
    if (pos >= src.size()) throw ParseError("expected a formula", pos);
    if (src[pos] == '(') {
      pos++;
      Formula f = formula();
      skip_ws();
      if (pos >= src.size() || src[pos] != ')') throw ParseError("expected ')'", pos);
      pos++;
      return f;
    }
    if (!std::isalpha(static_cast<unsigned char>(src[pos])))
      throw ParseError("expected an atom or '('", pos);
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' || src[pos] == '\''))
      pos++;
    const std::string name = src.substr(start, pos - start);
    if (name == "ln" || name == "rn" || name == "lc" || name == "rc") {
      skip_ws();
      if (pos < src.size() && src[pos] == '(') {
        pos++;
        Formula arg = formula();
        skip_ws();
        if (pos >= src.size() || src[pos] != ')') throw ParseError("expected ')'", pos);
        pos++;
        if (name == "ln") return f_lneg(arg);
        if (name == "rn") return f_rneg(arg);
        if (name == "lc") return f_lconeg(arg);
        return f_rconeg(arg);
      }
    }
    return f_atom(name);
  }

  Formula formula() {
    Formula left = operand();
    const std::string op = peek_op();
    if (op.empty()) return left;
    pos += op.size();
    Formula right = operand();
    const std::string trailing = peek_op();
    if (!trailing.empty())
      throw ParseError("operators mix without parentheses; formula connectives are non-associative", pos);
    if (op == "*") return f_tensor(left, right);
    if (op == "+") return f_par(left, right);
    if (op == "/") return f_over(left, right);
    if (op == "\\") return f_under(left, right);
    if (op == "./") return f_rsub(left, right);
    return f_lsub(left, right);  // ".\"
  }

  Formula parse() {
    Formula f = formula();
    skip_ws();
    if (pos != src.size()) throw ParseError("unexpected trailing input", pos);
    return f;
  }
};

}  // namespace

Formula parse_formula(const std::string& text) {
  FormulaParser p(text);
  return p.parse();
}

std::string show_formula(const Formula& a) {
  auto wrap = [](const Formula& f) {
    const std::string s = show_formula(f);
    switch (f->conn) {
      case Conn::Atom:
      case Conn::LNeg:
      case Conn::RNeg:
      case Conn::LCoNeg:
      case Conn::RCoNeg: return s;
      default: return "(" + s + ")";
    }
  };
  switch (a->conn) {
    case Conn::Atom: return a->atom;
    case Conn::Tensor: return wrap(a->l) + "*" + wrap(a->r);
    case Conn::Par: return wrap(a->l) + "+" + wrap(a->r);
    case Conn::Over: return wrap(a->l) + "/" + wrap(a->r);
    case Conn::Under: return wrap(a->l) + "\\" + wrap(a->r);
    case Conn::RSub: return wrap(a->l) + "./" + wrap(a->r);
    case Conn::LSub: return wrap(a->l) + ".\\" + wrap(a->r);
    case Conn::LNeg: return "ln(" + show_formula(a->l) + ")";
    case Conn::RNeg: return "rn(" + show_formula(a->l) + ")";
    case Conn::LCoNeg: return "lc(" + show_formula(a->l) + ")";
    case Conn::RCoNeg: return "rc(" + show_formula(a->l) + ")";
  }
  return "?";
}

}  // namespace lg
