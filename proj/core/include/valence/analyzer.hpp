#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valence/emotion.hpp"
#include "valence/emotionml.hpp"
#include "valence/forest.hpp"
#include "valence/symbolic.hpp"
#include "valence/text.hpp"
#include "valence/types.hpp"

namespace valence {

enum class Engine { Lexical, Symbolic, Statistical, Emotion };

std::string_view to_string(Engine engine);
std::optional<Engine> engine_from_string(std::string_view name);

struct SentenceAnalysis {
    Sentence sentence;
    Valence valence;            // value engines; emotion engine reports via `emotion`
    EmotionResolution emotion;  // emotion engine only
    RuleTrace trace;            // symbolic engine only
};

struct AnalysisResult {
    Engine engine = Engine::Lexical;
    std::vector<SentenceAnalysis> sentences;
    Valence document_valence;
    EmotionResolution document_emotion;  // emotion engine only
};

// One front door for the four engines over a shared set of immutable
// resources.  Construction loads the bundled seed data; swap in real
// lexicons, rules or a trained model before first use.  Analysis itself
// is const and safe to call concurrently.
class Analyzer {
  public:
    Analyzer() = default;

    void set_pipeline(Pipeline pipeline) { pipeline_ = std::move(pipeline); }
    void set_polarity_lexicon(PolarityLexicon lexicon) { polarity_ = std::move(lexicon); }
    void set_emotion_lexicon(EmotionLexicon lexicon) { emotion_ = std::move(lexicon); }
    void set_rules(RuleSet rules) { rules_ = std::move(rules); }
    void set_keyphrases(KeyphraseTable keyphrases) { keyphrases_ = std::move(keyphrases); }
    void set_model(ForestModel model) { model_ = std::move(model); }

    bool has_model() const { return model_.has_value(); }
    const Pipeline& pipeline() const { return pipeline_; }
    const PolarityLexicon& polarity_lexicon() const { return polarity_; }
    const EmotionLexicon& emotion_lexicon() const { return emotion_; }
    const RuleSet& rules() const { return rules_; }
    const KeyphraseTable& keyphrases() const { return keyphrases_; }
    const ForestModel& model() const;

    // Engine::Statistical without a model throws ModelUnavailableError.
    AnalysisResult analyze(std::string_view text, Engine engine) const;

    // Dimension document for the valence engines, category document for
    // the emotion engine.
    EmotionDocument to_emotionml(const AnalysisResult& result) const;

  private:
    Pipeline pipeline_;
    PolarityLexicon polarity_ = PolarityLexicon::builtin();
    EmotionLexicon emotion_ = EmotionLexicon::builtin();
    RuleSet rules_ = RuleSet::builtin();
    KeyphraseTable keyphrases_ = KeyphraseTable::builtin();
    std::optional<ForestModel> model_;
};

}  // namespace valence
