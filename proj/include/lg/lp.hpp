#pragma once

// The target calculus LP: multiplicative intuitionistic linear logic in
// natural-deduction dress. Types are atoms, bottom, products and minimal
// negations; terms are the linear lambda calculus with pairs and case.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lg/errors.hpp"

namespace lg {

using Name = std::string;

// ---------------------------------------------------------------- types

enum class TypeKind { Atom, Bottom, Prod, Neg };

struct TypeNode;
using LinType = std::shared_ptr<const TypeNode>;

struct TypeNode {
  TypeKind kind;
  std::string atom;  // Atom
  LinType a, b;      // Prod(a,b), Neg(a)
};

LinType t_atom(const std::string& name);
LinType t_bot();
LinType t_prod(LinType a, LinType b);
LinType t_neg(LinType a);

bool type_eq(const LinType& a, const LinType& b);
std::string show_type(const LinType& t);
int neg_count(const LinType& t);
int type_size(const LinType& t);

// ---------------------------------------------------------------- terms

enum class TermKind { Var, App, Lam, Pair, Case };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  Name name;    // Var name; Lam binder; Case first binder
  Name name2;   // Case second binder
  LinType ann;  // Lam binder annotation (may be null for parsed terms)
  Term a, b;    // App(a b) | Lam body=a | Pair(a,b) | Case scrutinee=a body=b
};

Term mk_var(const Name& x);
Term mk_app(Term f, Term x);
Term mk_lam(const Name& x, LinType ann, Term body);
Term mk_pair(Term a, Term b);
Term mk_case(Term scrutinee, const Name& x, const Name& y, Term body);

// Free variables with occurrence counts.
std::map<Name, int> free_vars(const Term& m);

// Capture-avoiding substitution of n for free occurrences of x in m.
Term subst(const Term& m, const Name& x, const Term& n);

bool alpha_eq(const Term& m, const Term& n);

enum class Strategy { LeftmostOutermost, RightmostInnermost };

// Exhaustive beta + commutative-conversion rewriting. Throws Diverged past fuel.
Term normalize(const Term& m, int fuel = 10000, Strategy strategy = Strategy::LeftmostOutermost);

// ---------------------------------------------------------------- typing

// Multiset of type assignments; building checks for duplicate names.
class Context {
 public:
  Context() = default;
  void add(const Name& x, LinType t);
  const std::vector<std::pair<Name, LinType>>& entries() const { return entries_; }
  std::optional<LinType> lookup(const Name& x) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<Name, LinType>> entries_;
};

// Infers the type of m under ctx, enforcing that every context variable is
// used exactly once. Lam binders must carry annotations.
LinType typecheck(const Context& ctx, const Term& m);

// ---------------------------------------------------------------- syntax

Term parse_term(const std::string& text);
std::string show_term(const Term& m);

// Fresh-name supply shared by the prover and the semantics pipeline.
// Variables mimic the paper's x,y,z,...; covariables its epsilon,kappa,nu,...
class NameGen {
 public:
  Name fresh_var();
  Name fresh_covar();

 private:
  int vars_ = 0, covars_ = 0;
};

}  // namespace lg
