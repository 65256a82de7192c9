#pragma once

// Antecedent and consequent structures, the F(.) formula readback, stoup
// sequents, display postulates with their equivalence closure, canonical
// representatives and structure-level dualization.

#include <optional>
#include <string>
#include <vector>

#include "lg/formula.hpp"
#include "lg/lp.hpp"

namespace lg {

enum class SKind { Leaf, Prod, RSubStr, LSubStr, RCoNegStr, LCoNegStr };
enum class CKind { Leaf, Par, Under, Over, LNegStr, RNegStr };

struct SNode;
struct CNode;
using Struct = std::shared_ptr<const SNode>;
using CoStruct = std::shared_ptr<const CNode>;

// Structures: A^x | G . D | G </ S | P /> G | RC{P} | LC{S}
struct SNode {
  SKind kind;
  Formula f;     // Leaf
  Name label;    // Leaf
  Struct s1, s2; // Prod(s1,s2) | RSubStr(s1, k1) | LSubStr(k1, s1)
  CoStruct k1;   // RCoNegStr(k1) | LCoNegStr(k1)
};

// Costructures: A^e | S o P | P <- G | D -> P | LN{D} | RN{G}
struct CNode {
  CKind kind;
  Formula f;       // Leaf
  Name label;      // Leaf
  CoStruct k1, k2; // Par(k1,k2) | Under(k1, s1) | Over(s1, k1)
  Struct s1;       // LNegStr(s1) | RNegStr(s1)
};

Struct s_leaf(Formula f, const Name& label);
Struct s_prod(Struct a, Struct b);
Struct s_rsub(Struct a, CoStruct b);   // a </ b
Struct s_lsub(CoStruct a, Struct b);   // a /> b
Struct s_rconeg(CoStruct a);           // RC{a}
Struct s_lconeg(CoStruct a);           // LC{a}
CoStruct c_leaf(Formula f, const Name& label);
CoStruct c_par(CoStruct a, CoStruct b);   // a o b
CoStruct c_under(CoStruct a, Struct b);   // a <- b
CoStruct c_over(Struct a, CoStruct b);    // a -> b
CoStruct c_lneg(Struct a);                // LN{a}
CoStruct c_rneg(Struct a);                // RN{a}

bool struct_eq(const Struct& a, const Struct& b);
bool costruct_eq(const CoStruct& a, const CoStruct& b);

// Formula readback.
Formula readback(const Struct& s);
Formula readback(const CoStruct& s);

enum class SeqKind { Unfocused, FocusC, FocusH };

struct Sequent {
  SeqKind kind = SeqKind::Unfocused;
  Struct ant;     // Unfocused, FocusC
  CoStruct con;   // Unfocused, FocusH
  Formula focus;  // FocusC, FocusH
  bool swapped = false;  // presentation only: prints consequent first
};

Sequent unfocused(Struct ant, CoStruct con, bool swapped = false);
Sequent focus_conclusion(Struct ant, Formula focus);
Sequent focus_hypothesis(CoStruct con, Formula focus);

bool seq_eq(const Sequent& a, const Sequent& b);

struct LeafRef {
  bool input;  // hypothesis leaf (variable) vs conclusion leaf (covariable)
  Formula f;
  Name label;
};

// Leaves in a fixed traversal order: antecedent left-to-right, then consequent.
std::vector<LeafRef> leaves_of(const Sequent& s);

// LP context interpretation: inputs at input_type, outputs at output_type.
Context context_of(const Sequent& s);

// One application of each display postulate in either direction, plus the
// antecedent/consequent swap.
std::vector<Sequent> display_moves(const Sequent& s);

struct DisplayClass {
  std::vector<Sequent> members;  // BFS order, swap presentations excluded
  bool capped = false;
};

DisplayClass display_class(const Sequent& s, std::size_t cap = 20000);

// Display-equivalent sequent with the given leaf as the whole antecedent
// (inputs) or consequent (outputs).
std::optional<Sequent> display(const Sequent& s, const Name& leaf_label, std::size_t cap = 20000);
std::optional<Sequent> display(const DisplayClass& cls, const Name& leaf_label);

// Lexicographically least serialization across the display-equivalence class.
std::string canonical(const Sequent& s, std::size_t cap = 20000);

// Like canonical, but with leaf labels renamed by first occurrence; used as a
// visited-set / memo key by the prover.
std::string canonical_key(const DisplayClass& cls);

// Structure-level mirror under the duality; swaps sides and dualizes leaves.
Sequent dualize(const Sequent& s);

std::string show_struct(const Struct& s, bool top = false);
std::string show_costruct(const CoStruct& s, bool top = false);
std::string show_sequent(const Sequent& s);

// CLI sequent syntax: "GAMMA |- PI" with auto-generated leaf labels.
Sequent parse_sequent(const std::string& text, NameGen& gen);

}  // namespace lg
