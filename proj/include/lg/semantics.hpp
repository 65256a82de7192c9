#pragma once

// Lexical semantics: simply-typed meaning terms, delinearization of LP types
// and terms, grammar files with word entries as nonlogical axioms, and
// reading extraction for bracketed phrases.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lg/search.hpp"

namespace lg {

// ------------------------------------------------------------ simple types

enum class STypeKind { E, T, Prod, Arrow };

struct STypeNode;
using SimpleType = std::shared_ptr<const STypeNode>;

struct STypeNode {
  STypeKind kind;
  SimpleType a, b;
};

SimpleType st_e();
SimpleType st_t();
SimpleType st_prod(SimpleType a, SimpleType b);
SimpleType st_arrow(SimpleType a, SimpleType b);

bool stype_eq(const SimpleType& a, const SimpleType& b);
std::string show_stype(const SimpleType& t);
SimpleType parse_stype(const std::string& text);

// ------------------------------------------------------------ simple terms

// Constants are uppercase identifiers; And is the logical constant for
// conjunction at type t -> t -> t, printed infix as /\.
enum class STermKind { Var, Const, And, App, Lam, Pair, Proj1, Proj2 };

struct STermNode;
using STerm = std::shared_ptr<const STermNode>;

struct STermNode {
  STermKind kind;
  Name name;  // Var, Const, Lam binder
  STerm a, b;
};

STerm st_var(const Name& x);
STerm st_const(const Name& c);
STerm st_and();
STerm st_app(STerm f, STerm x);
STerm st_lam(const Name& x, STerm body);
STerm st_pair(STerm a, STerm b);
STerm st_proj1(STerm a);
STerm st_proj2(STerm a);

bool salpha_eq(const STerm& m, const STerm& n);
STerm ssubst(const STerm& m, const Name& x, const STerm& n);
std::map<Name, int> sfree_vars(const STerm& m);
STerm snormalize(const STerm& m, int fuel = 100000);

STerm parse_sterm(const std::string& text);
std::string show_sterm(const STerm& m);

// --------------------------------------------------------- delinearization

using BaseMap = std::map<std::string, SimpleType>;

SimpleType delinearize_type(const LinType& t, const BaseMap& base);
STerm delinearize_term(const Term& m);

// ------------------------------------------------------------------ lexicon

struct LexEntry {
  Formula category;
  STerm meaning;
};

struct Lexicon {
  BaseMap base;
  std::map<std::string, SimpleType> constants;
  std::map<std::string, std::vector<LexEntry>> words;
  std::optional<Formula> default_goal;
};

// Line-oriented grammar: atom/const/word/goal directives, '#' comments.
Lexicon load_grammar(const std::string& text);
Lexicon load_grammar_file(const std::string& path);

// Simple typing for lexicon entries: checks the term against the expected
// type under the lexicon's constant signature. Throws on failure.
void check_simple(const Lexicon& lex, const STerm& term, const SimpleType& expected);

// ------------------------------------------------------------------ phrases

struct Phrase {
  std::string word;  // leaf
  std::shared_ptr<Phrase> l, r;
  bool leaf() const { return !l; }
};

Phrase parse_phrase(const std::string& text);  // "[law [that [Brouwer rejected]]]"
std::vector<Phrase> all_bracketings(const std::vector<std::string>& words);

struct Reading {
  STerm term;        // normal form, one free variable g for the goal category
  int derivations;   // how many derivations produced it
};

std::vector<Reading> readings(const Phrase& phrase, const Formula& category, const Lexicon& lex,
                              const RulePackage& pkg, const SearchLimits& lim = {});

}  // namespace lg
