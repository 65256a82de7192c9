#pragma once

// Focused backward proof search: derivability decisions with an exhaustive
// NO / resource-capped UNKNOWN distinction, derivation enumeration, and
// term extraction.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lg/calculus.hpp"
#include "lg/structural.hpp"

namespace lg {

struct SearchLimits {
  int max_depth = 64;
  int max_derivations = 16;
  std::size_t closure_cap = 20000;
};

struct Derivation {
  std::string rule;
  Sequent sequent;
  Term term;
  std::vector<Derivation> children;
};

enum class Decision { Yes, No, Unknown };

struct SearchStats {
  bool capped = false;
  long nodes = 0;
};

class Prover {
 public:
  Prover(const CalculusBase& calc, RulePackage pkg, SearchLimits lim = {});

  // Nonlogical sequent axiom: a branch reaching a display-equivalent sequent
  // closes. Used by the structural non-derivability probes.
  void add_axiom(const Sequent& s);

  // First derivation in the deterministic search order; nullopt is a
  // definite no. Throws DepthExceeded when a cap was hit and nothing found.
  std::optional<Derivation> prove(const Sequent& goal);

  // Up to lim.max_derivations pairwise distinct derivations.
  std::vector<Derivation> prove_all(const Sequent& goal);

  // No is only reported when the search space was exhausted under the caps.
  Decision derivable(const Sequent& goal);

  const SearchStats& stats() const { return stats_; }
  NameGen& names() { return names_; }

 private:
  std::vector<Derivation> explore(const Sequent& seq, int depth, int want);
  std::vector<Derivation> explore_unfocused(const Sequent& seq, int depth, int want);
  std::vector<Derivation> explore_focused(const Sequent& seq, int depth, int want);
  std::vector<Derivation> apply(const RuleApp& app, const Sequent& at, int depth, int want);

  const CalculusBase& calc_;
  RulePackage pkg_;
  SearchLimits lim_;
  NameGen names_;
  SearchStats stats_;
  std::vector<std::string> axiom_keys_;
  std::set<std::string> path_;     // canonical keys along the current branch
  std::set<std::string> failed_;  // exhaustively refuted sequents (no cap hit)
};

// Soundness: every node's term typechecks at its sequent's context against
// bottom (unfocused) or the stoup typing (focused). Throws on failure.
// Nodes closed by a nonlogical probe axiom are exempt.
void check_derivation(const Derivation& d);

// Every node's extracted term is its own beta normal form.
bool derivation_beta_normal(const Derivation& d);

std::string derivation_to_json(const Derivation& d, int indent = 2);
std::string show_derivation(const Derivation& d);

}  // namespace lg
