#pragma once

// Call-by-name and call-by-value type translations, the LGT and LGQ display
// calculi run on the shared search engine, and the negation-economy report
// comparing the three lexical type disciplines.

#include <string>

#include "lg/calculus.hpp"
#include "lg/semantics.hpp"

namespace lg {

enum class TranslationMode { CBN, CBV, Polarized };

// Uniform-polarity double negation translations over atoms, the binary
// (co)implications, tensor and par. (Co)negations are out of table scope.
LinType cbn_type(const Formula& a);
LinType cbv_type(const Formula& a);

// LGT: all formulas treated negative; only hypotheses enter the stoup.
class LgtCalculus : public CalculusBase {
 public:
  std::optional<RuleApp> invertible_app(const Sequent&, const DisplayClass&, NameGen&) const override;
  std::vector<RuleApp> unfocused_apps(const Sequent& s, const DisplayClass& cls,
                                      NameGen& gen) const override;
  std::optional<RuleApp> focused_app(const Sequent& s, NameGen& gen) const override;
};

// LGQ: all formulas treated positive; only conclusions enter the stoup.
class LgqCalculus : public CalculusBase {
 public:
  std::optional<RuleApp> invertible_app(const Sequent&, const DisplayClass&, NameGen&) const override;
  std::vector<RuleApp> unfocused_apps(const Sequent& s, const DisplayClass& cls,
                                      NameGen& gen) const override;
  std::optional<RuleApp> focused_app(const Sequent& s, NameGen& gen) const override;
};

const LgtCalculus& lgt_calculus();
const LgqCalculus& lgq_calculus();

struct CompareRow {
  std::string label;   // "cbn", "cbv", "polarized"
  LinType lexical;     // the lexical type under that discipline
  SimpleType delin;    // its delinearization (empty basemap entries default to e)
  int negations;
};

struct CompareReport {
  CompareRow cbn, cbv, polarized;
};

CompareReport compare(const Formula& a, const BaseMap& base);

}  // namespace lg
