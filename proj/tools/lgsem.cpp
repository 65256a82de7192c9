// Command-line front end: derivability checks, phrase readings, type
// translations, term normalization and the CBN/CBV/polarized comparison.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lg/cbncbv.hpp"
#include "lg/search.hpp"
#include "lg/semantics.hpp"

namespace {

bool use_color() {
  const char* env = std::getenv("LGSEM_COLOR");
  return env == nullptr || std::string(env) != "0";
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

struct CommonOpts {
  std::string rules;
  int max_depth = 64;
  int max_derivations = 16;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--rules", opts.rules, "comma-separated structural packages (dist,halfdm)");
  cmd->add_option("--max-depth", opts.max_depth, "proof search depth cap");
  cmd->add_option("--max-derivations", opts.max_derivations, "enumeration cap");
  cmd->add_option("--format", opts.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
}

lg::SearchLimits limits_of(const CommonOpts& opts) {
  lg::SearchLimits lim;
  lim.max_depth = opts.max_depth;
  lim.max_derivations = opts.max_derivations;
  return lim;
}

int run_check(const std::string& sequent_text, const CommonOpts& opts) {
  lg::NameGen gen;
  const lg::Sequent goal = lg::parse_sequent(sequent_text, gen);
  const lg::RulePackage pkg = lg::parse_rule_package(opts.rules);
  lg::Prover prover(lg::main_calculus(), pkg, limits_of(opts));
  std::optional<lg::Derivation> derivation;
  try {
    derivation = prover.prove(goal);
  } catch (const lg::DepthExceeded&) {
    if (opts.format == "json") {
      nlohmann::json j;
      j["status"] = "UNKNOWN";
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << paint("UNKNOWN", "33") << " (search hit a resource cap)\n";
    }
    return 2;
  }
  if (!derivation) {
    if (opts.format == "json") {
      nlohmann::json j;
      j["status"] = "NOT DERIVABLE";
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << paint("NOT DERIVABLE", "31") << " (search space exhausted)\n";
    }
    return 1;
  }
  if (opts.format == "json") {
    nlohmann::json j;
    j["status"] = "DERIVABLE";
    j["term"] = lg::show_term(derivation->term);
    j["derivation"] = nlohmann::json::parse(lg::derivation_to_json(*derivation));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << paint("DERIVABLE", "32") << "\n";
    std::cout << "term: " << lg::show_term(derivation->term) << "\n";
    std::cout << lg::show_derivation(*derivation);
  }
  return 0;
}

int run_parse(const std::string& sentence, const std::string& grammar, const std::string& category,
              bool all_brackets, const CommonOpts& opts) {
  const lg::Lexicon lex = lg::load_grammar_file(grammar);
  lg::Formula cat;
  if (!category.empty())
    cat = lg::parse_formula(category);
  else if (lex.default_goal)
    cat = *lex.default_goal;
  else
    throw lg::ParseError("no --cat given and the grammar declares no goal", 0);
  const lg::RulePackage pkg = lg::parse_rule_package(opts.rules);
  const lg::SearchLimits lim = limits_of(opts);

  std::vector<lg::Phrase> phrases;
  if (sentence.find('[') != std::string::npos) {
    phrases.push_back(lg::parse_phrase(sentence));
  } else {
    std::vector<std::string> words;
    std::istringstream ws(sentence);
    std::string w;
    while (ws >> w) words.push_back(w);
    if (words.size() > 1 && !all_brackets)
      throw lg::ParseError("multiple words without brackets; pass --all-brackets to enumerate", 0);
    phrases = lg::all_bracketings(words);
  }

  std::vector<lg::Reading> merged;
  std::string first_error;
  for (const lg::Phrase& phrase : phrases) {
    try {
      for (const lg::Reading& r : lg::readings(phrase, cat, lex, pkg, lim)) {
        bool found = false;
        for (lg::Reading& m : merged)
          if (lg::salpha_eq(m.term, r.term)) {
            m.derivations += r.derivations;
            found = true;
            break;
          }
        if (!found) merged.push_back(r);
      }
    } catch (const lg::SemanticsError& e) {
      if (e.kind == lg::SemanticsErrorKind::UnknownWord) throw;
      if (first_error.empty()) first_error = e.what();
    } catch (const lg::DepthExceeded& e) {
      if (first_error.empty()) first_error = e.what();
    }
  }
  if (merged.empty()) {
    if (opts.format == "json") {
      nlohmann::json j;
      j["readings"] = nlohmann::json::array();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << paint("no readings", "31") << (first_error.empty() ? "" : ": " + first_error)
                << "\n";
    }
    return 1;
  }
  if (opts.format == "json") {
    nlohmann::json j;
    j["readings"] = nlohmann::json::array();
    for (const lg::Reading& r : merged) {
      nlohmann::json jr;
      jr["term"] = lg::show_sterm(r.term);
      jr["derivations"] = r.derivations;
      j["readings"].push_back(jr);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const lg::Reading& r : merged)
      std::cout << lg::show_sterm(r.term) << "   [" << r.derivations << " derivation"
                << (r.derivations == 1 ? "" : "s") << "]\n";
  }
  return 0;
}

int run_translate(const std::string& formula_text, const std::string& mode) {
  const lg::Formula f = lg::parse_formula(formula_text);
  lg::LinType t;
  if (mode == "cbn")
    t = lg::cbn_type(f);
  else if (mode == "cbv")
    t = lg::cbv_type(f);
  else
    t = lg::translate(f);
  std::cout << lg::show_type(t) << "\n";
  return 0;
}

int run_normalize(const std::string& term_text) {
  const lg::Term t = lg::parse_term(term_text);
  std::cout << lg::show_term(lg::normalize(t)) << "\n";
  return 0;
}

int run_compare(const std::string& formula_text, const std::string& format) {
  const lg::Formula f = lg::parse_formula(formula_text);
  lg::BaseMap base{{"s", lg::st_t()}, {"np", lg::st_e()}, {"n", lg::st_arrow(lg::st_e(), lg::st_t())}};
  const lg::CompareReport report = lg::compare(f, base);
  if (format == "json") {
    nlohmann::json j;
    for (const lg::CompareRow* row : {&report.cbn, &report.cbv, &report.polarized}) {
      nlohmann::json jr;
      jr["type"] = lg::show_type(row->lexical);
      jr["delinearized"] = lg::show_stype(row->delin);
      jr["negations"] = row->negations;
      j[row->label] = jr;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const lg::CompareRow* row : {&report.cbn, &report.cbv, &report.polarized}) {
      std::cout << row->label << ":\n";
      std::cout << "  lexical type:   " << lg::show_type(row->lexical) << "\n";
      std::cout << "  delinearized:   " << lg::show_stype(row->delin) << "\n";
      std::cout << "  negation count: " << row->negations << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Theorem prover and compositional semantics for the Lambek-Grishin calculus"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string sequent_text, sentence, grammar, category, formula_text, term_text;
  std::string mode = "polar";
  bool all_brackets = false;

  CLI::App* check = app.add_subcommand("check", "decide derivability of a sequent");
  check->add_option("sequent", sequent_text, "sequent, e.g. \"np . (np\\\\s) |- s\"")->required();
  add_common(check, opts);

  CLI::App* parse = app.add_subcommand("parse", "compute readings of a bracketed phrase");
  parse->add_option("sentence", sentence, "bracketed phrase, e.g. \"[law [that [Brouwer rejected]]]\"")
      ->required();
  parse->add_option("-g,--grammar", grammar, "grammar file")->required();
  parse->add_option("--cat", category, "goal category (defaults to the grammar's goal)");
  parse->add_flag("--all-brackets", all_brackets, "enumerate all binary bracketings");
  add_common(parse, opts);

  CLI::App* translate = app.add_subcommand("translate", "translate a formula to an LP type");
  translate->add_option("formula", formula_text, "LG formula")->required();
  translate->add_option("--mode", mode, "cbn, cbv or polar")
      ->check(CLI::IsMember({"cbn", "cbv", "polar"}));

  CLI::App* normalize = app.add_subcommand("normalize", "normalize a linear lambda term");
  normalize->add_option("term", term_text, "term, e.g. \"(lam x. x y)\"")->required();

  CLI::App* compare = app.add_subcommand("compare", "compare CBN/CBV/polarized lexical types");
  compare->add_option("formula", formula_text, "LG formula")->required();
  add_common(compare, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(sequent_text, opts);
    if (parse->parsed()) return run_parse(sentence, grammar, category, all_brackets, opts);
    if (translate->parsed()) return run_translate(formula_text, mode);
    if (normalize->parsed()) return run_normalize(term_text);
    if (compare->parsed()) return run_compare(formula_text, opts.format);
  } catch (const lg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lg::SemanticsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const lg::TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return 3;
  } catch (const lg::Diverged& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lg::DepthExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 3;
}
