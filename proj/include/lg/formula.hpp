#pragma once

// Lambek-Grishin formulas: atoms, tensor/par, the four (co)implications and
// the four (co)negations, together with the order-reversing duality, the
// positive/negative polarity split and the translation into LP types.

#include <memory>
#include <string>

#include "lg/lp.hpp"

namespace lg {

enum class Conn {
  Atom,
  Tensor,  // l * r
  Par,     // l + r
  Over,    // l / r          (A/B with A = l)
  Under,   // l \ r          (B\A with B = l)
  RSub,    // l ./ r         (A⊘B with A = l)
  LSub,    // l .\ r         (B⦸A with B = l)
  LNeg,    // ln(l)
  RNeg,    // rn(l)
  LCoNeg,  // lc(l)
  RCoNeg,  // rc(l)
};

struct FNode;
using Formula = std::shared_ptr<const FNode>;

struct FNode {
  Conn conn;
  std::string atom;
  Formula l, r;  // children in surface order; unary connectives use l
};

Formula f_atom(const std::string& name);
Formula f_tensor(Formula a, Formula b);
Formula f_par(Formula a, Formula b);
Formula f_over(Formula a, Formula b);   // A/B
Formula f_under(Formula b, Formula a);  // B\A
Formula f_rsub(Formula a, Formula b);   // A⊘B
Formula f_lsub(Formula b, Formula a);   // B⦸A
Formula f_lneg(Formula a);
Formula f_rneg(Formula a);
Formula f_lconeg(Formula a);
Formula f_rconeg(Formula a);

bool formula_eq(const Formula& a, const Formula& b);
int formula_size(const Formula& a);  // connective count

enum class Polarity { Pos, Neg };

Formula dual(const Formula& a);
Polarity polarity(const Formula& a);

// Table-driven interpretation of formulas by LP types, in the canonical
// component order that makes extracted terms well-typed without coercions.
LinType translate(const Formula& a);
LinType input_type(const Formula& a);   // type of a hypothesis leaf
LinType output_type(const Formula& a);  // type of a conclusion leaf

Formula parse_formula(const std::string& text);
std::string show_formula(const Formula& a);

}  // namespace lg
