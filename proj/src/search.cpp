#include "lg/search.hpp"

#include <sstream>

#include "json.hpp"

namespace lg {

Prover::Prover(const CalculusBase& calc, RulePackage pkg, SearchLimits lim)
    : calc_(calc), pkg_(pkg), lim_(lim) {}

void Prover::add_axiom(const Sequent& s) {
  axiom_keys_.push_back(canonical_key(display_class(s, lim_.closure_cap)));
}

std::optional<Derivation> Prover::prove(const Sequent& goal) {
  stats_ = {};
  path_.clear();
  failed_.clear();
  auto found = explore(goal, 0, 1);
  if (!found.empty()) return found.front();
  if (stats_.capped) throw DepthExceeded();
  return std::nullopt;
}

std::vector<Derivation> Prover::prove_all(const Sequent& goal) {
  stats_ = {};
  path_.clear();
  failed_.clear();
  return explore(goal, 0, lim_.max_derivations);
}

Decision Prover::derivable(const Sequent& goal) {
  stats_ = {};
  path_.clear();
  failed_.clear();
  auto found = explore(goal, 0, 1);
  if (!found.empty()) return Decision::Yes;
  return stats_.capped ? Decision::Unknown : Decision::No;
}

std::vector<Derivation> Prover::explore(const Sequent& seq, int depth, int want) {
  stats_.nodes++;
  if (depth > lim_.max_depth) {
    stats_.capped = true;
    return {};
  }
  if (seq.kind == SeqKind::Unfocused) return explore_unfocused(seq, depth, want);
  return explore_focused(seq, depth, want);
}

// Recurse into a rule application: derive every premise, then assemble the
// conclusion node. A dp node records the display steps when the rule fired
// on a different arrangement of the same sequent.
std::vector<Derivation> Prover::apply(const RuleApp& app, const Sequent& at, int depth, int want) {
  std::vector<std::vector<Derivation>> premise_alternatives;
  for (const Sequent& premise : app.premises) {
    auto subs = explore(premise, depth + 1, want);
    if (subs.empty()) return {};
    premise_alternatives.push_back(std::move(subs));
  }
  // Cartesian product over premise alternatives, truncated at want.
  std::vector<std::vector<const Derivation*>> combos{{}};
  for (const auto& alts : premise_alternatives) {
    std::vector<std::vector<const Derivation*>> next;
    for (const auto& combo : combos)
      for (const Derivation& d : alts) {
        next.push_back(combo);
        next.back().push_back(&d);
        if (static_cast<int>(next.size()) >= want) break;
      }
    combos = std::move(next);
    if (combos.empty()) return {};
  }
  std::vector<Derivation> out;
  for (const auto& combo : combos) {
    if (static_cast<int>(out.size()) >= want) break;
    std::vector<Term> terms;
    std::vector<Derivation> children;
    for (const Derivation* d : combo) {
      terms.push_back(d->term);
      children.push_back(*d);
    }
    Derivation node{app.rule, app.conclusion, app.build(terms), std::move(children)};
    if (!seq_eq(app.conclusion, at)) {
      Derivation dp{"dp", at, node.term, {std::move(node)}};
      out.push_back(std::move(dp));
    } else {
      out.push_back(std::move(node));
    }
  }
  return out;
}

std::vector<Derivation> Prover::explore_unfocused(const Sequent& seq, int depth, int want) {
  // Invertible phase: expand eagerly, recording each step.
  struct ChainLink {
    Sequent at;
    RuleApp app;
  };
  std::vector<ChainLink> chain;
  Sequent cur = seq;
  DisplayClass cls = display_class(cur, lim_.closure_cap);
  if (cls.capped) stats_.capped = true;
  while (auto inv = calc_.invertible_app(cur, cls, names_)) {
    chain.push_back({cur, *inv});
    cur = inv->premises.at(0);
    depth++;
    if (depth > lim_.max_depth) {
      stats_.capped = true;
      return {};
    }
    cls = display_class(cur, lim_.closure_cap);
    if (cls.capped) stats_.capped = true;
  }

  const std::string key = canonical_key(cls);
  std::vector<Derivation> results;
  if (failed_.count(key) || path_.count(key)) {
    // exhaustively refuted elsewhere, or a loop on the current branch
  } else {
    path_.insert(key);
    const bool capped_before = stats_.capped;

    // Nonlogical axiom closure (structural probe harness).
    bool axiom_hit = false;
    for (const std::string& ax : axiom_keys_)
      if (ax == key) {
        results.push_back(Derivation{"axiom", cur, mk_var("hole"), {}});
        axiom_hit = true;
        break;
      }

    if (static_cast<int>(results.size()) < want) {
      std::vector<RuleApp> candidates = calc_.unfocused_apps(cur, cls, names_);
      std::vector<RuleApp> structural = structural_expansions(cur, cls, pkg_);
      candidates.insert(candidates.end(), structural.begin(), structural.end());
      std::set<std::string> seen_premises;
      for (const RuleApp& cand : candidates) {
        if (static_cast<int>(results.size()) >= want) break;
        // Identical subgoals can be reached through different class members.
        std::string premise_key = cand.rule + ";";
        for (const Sequent& p : cand.premises) premise_key += show_sequent(p) + ";";
        if (!seen_premises.insert(premise_key).second) continue;
        auto found = apply(cand, cur, depth, want - static_cast<int>(results.size()));
        for (Derivation& d : found) results.push_back(std::move(d));
      }
    }

    path_.erase(key);
    if (results.empty() && !axiom_hit && !capped_before && !stats_.capped) failed_.insert(key);
  }

  if (results.empty()) return {};

  // Wrap the invertible chain back around each result, innermost first.
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    for (Derivation& d : results) {
      Derivation node{it->app.rule, it->app.conclusion, it->app.build({d.term}), {std::move(d)}};
      if (!seq_eq(it->app.conclusion, it->at)) {
        d = Derivation{"dp", it->at, node.term, {std::move(node)}};
      } else {
        d = std::move(node);
      }
    }
  }
  return results;
}

std::vector<Derivation> Prover::explore_focused(const Sequent& seq, int depth, int want) {
  auto app = calc_.focused_app(seq, names_);
  if (!app) return {};
  if (app->premises.empty()) {
    return {Derivation{app->rule, app->conclusion, app->build({}), {}}};
  }
  return apply(*app, seq, depth, want);
}

// ------------------------------------------------------------- validation

namespace {

void check_node(const Derivation& d) {
  if (d.rule == "axiom") return;  // probe hole, no typing claim
  const Context ctx = context_of(d.sequent);
  LinType expected;
  switch (d.sequent.kind) {
    case SeqKind::Unfocused: expected = t_bot(); break;
    case SeqKind::FocusC: expected = input_type(d.sequent.focus); break;
    case SeqKind::FocusH: expected = output_type(d.sequent.focus); break;
  }
  const LinType got = typecheck(ctx, d.term);
  if (!type_eq(got, expected))
    throw TypeError(TypeErrorKind::TypeMismatch,
                    "derivation node '" + d.rule + "' at " + show_sequent(d.sequent) + " has type " +
                        show_type(got) + ", expected " + show_type(expected));
  for (const Derivation& c : d.children) check_node(c);
}

}  // namespace

void check_derivation(const Derivation& d) { check_node(d); }

bool derivation_beta_normal(const Derivation& d) {
  if (!alpha_eq(normalize(d.term), d.term)) return false;
  for (const Derivation& c : d.children)
    if (!derivation_beta_normal(c)) return false;
  return true;
}

std::string derivation_to_json(const Derivation& d, int indent) {
  nlohmann::json j;
  std::function<nlohmann::json(const Derivation&)> conv = [&conv](const Derivation& node) {
    nlohmann::json out;
    out["rule"] = node.rule;
    out["sequent"] = show_sequent(node.sequent);
    out["term"] = show_term(node.term);
    out["children"] = nlohmann::json::array();
    for (const Derivation& c : node.children) out["children"].push_back(conv(c));
    return out;
  };
  j = conv(d);
  return j.dump(indent);
}

static void show_derivation_rec(const Derivation& d, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += d.rule + ": " + show_sequent(d.sequent) + "  ~>  " + show_term(d.term) + "\n";
  for (const Derivation& c : d.children) show_derivation_rec(c, depth + 1, out);
}

std::string show_derivation(const Derivation& d) {
  std::string out;
  show_derivation_rec(d, 0, out);
  return out;
}

// ---------------------------------------------------- instance checks

InstanceReport distributivity_instance_checks() {
  InstanceReport report;
  report.ok = true;
  NameGen gen;
  const std::vector<std::string> instances = {
      "(a+b)*c |- a+(b*c)",
      "a*(b+c) |- (a*b)+c",
      "(a+b)*c |- (a*c)+b",
      "a*(b+c) |- b+(a*c)",
  };
  RulePackage dist;
  dist.dist = true;
  for (const std::string& text : instances) {
    InstanceCheck row;
    row.sequent = text;
    {
      NameGen g1;
      Prover p(main_calculus(), dist);
      row.derivable_with_rules = p.derivable(parse_sequent(text, g1)) == Decision::Yes;
    }
    {
      NameGen g2;
      Prover p(main_calculus(), RulePackage{});
      row.derivable_without = p.derivable(parse_sequent(text, g2)) == Decision::Yes;
    }
    report.ok = report.ok && row.derivable_with_rules && !row.derivable_without;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace lg
