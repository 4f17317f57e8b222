#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "valence/lexicon.hpp"
#include "valence/text.hpp"
#include "valence/types.hpp"

namespace valence {

// Per-token valence state.  `prior` is the lexicon value; `contextual`
// starts equal to the prior and is what the rules rewrite.  A token is a
// bearer while its prior is present; absorbing rules clear the whole
// annotation.
struct ValenceAnnotation {
    std::size_t token_index = 0;
    std::optional<double> prior;
    std::optional<double> contextual;
    std::vector<std::string> applied_rules;
};

enum class RuleCondition {
    DependentNegative,  // amod-style: modifier with negative prior
    GovernorVerb,       // neg edge attached to a verb
    GovernorAdjNoun,    // neg edge attached to an adjective or noun
    IrrealisMarker,     // clause contains would/could/should/if
};

enum class RuleEffect { Flip, Neutralize, Transfer };

std::string_view to_string(RuleCondition condition);
std::string_view to_string(RuleEffect effect);

struct RuleSpec {
    std::string id;
    std::optional<Relation> relation;  // nullopt = any ("*")
    RuleCondition condition = RuleCondition::IrrealisMarker;
    RuleEffect effect = RuleEffect::Neutralize;
};

// Ordered rule inventory loaded from `id<TAB>relation<TAB>condition<TAB>effect`
// lines.  Application order is fixed by condition kind (irrealis first, then
// modifier, then negation), not by file order.
class RuleSet {
  public:
    static RuleSet builtin();
    static RuleSet load(std::istream& in);
    static RuleSet load_file(const std::filesystem::path& path);

    const std::vector<RuleSpec>& rules() const { return rules_; }
    std::size_t size() const { return rules_.size(); }

  private:
    std::vector<RuleSpec> rules_;
};

// One applied rewrite: `governor` is the token whose valence changed,
// `dependent` the token that triggered the change.
struct TraceStep {
    std::string rule_id;
    std::size_t governor = 0;
    std::size_t dependent = 0;
    double before = 0.0;
    double after = 0.0;
    RuleEffect effect = RuleEffect::Flip;
};

using RuleTrace = std::vector<TraceStep>;

std::string trace_to_text(const RuleTrace& trace, const Sentence& sentence);

// Lexicon priors copied into fresh annotations; contextual == prior.
std::vector<ValenceAnnotation> assign_prior_valences(const Sentence& sentence,
                                                     const PolarityLexicon& lexicon);

// Runs the rule passes over one sentence, rewriting contextual values and
// appending one trace step per application.
RuleTrace apply_valence_rules(std::vector<ValenceAnnotation>& annotations,
                              const Sentence& sentence, const RuleSet& rules);

// Mean of contextual values over bearers; no bearers -> (0, neutral).
Valence sentence_valence(const std::vector<ValenceAnnotation>& annotations);

// Mean of priors only; the no-rules reference the rules are compared to.
Valence lexical_baseline_valence(const Sentence& sentence, const PolarityLexicon& lexicon);

struct SentenceValenceResult {
    Valence valence;
    RuleTrace trace;
    std::vector<ValenceAnnotation> annotations;
};

SentenceValenceResult analyze_sentence_symbolic(const Sentence& sentence,
                                                const PolarityLexicon& lexicon,
                                                const RuleSet& rules);

}  // namespace valence
