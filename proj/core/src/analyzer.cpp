#include "valence/analyzer.hpp"

#include <utility>

#include "valence/error.hpp"

namespace valence {
namespace {

Valence mean_of_sentences(const std::vector<SentenceAnalysis>& sentences) {
    if (sentences.empty()) return {};
    double sum = 0.0;
    for (const SentenceAnalysis& sentence : sentences) sum += sentence.valence.score;
    return Valence::from_score(sum / static_cast<double>(sentences.size()));
}

}  // namespace

std::string_view to_string(Engine engine) {
    switch (engine) {
        case Engine::Lexical: return "lexical";
        case Engine::Symbolic: return "symbolic";
        case Engine::Statistical: return "statistical";
        case Engine::Emotion: return "emotion";
    }
    return "lexical";
}

std::optional<Engine> engine_from_string(std::string_view name) {
    if (name == "lexical") return Engine::Lexical;
    if (name == "symbolic") return Engine::Symbolic;
    if (name == "statistical") return Engine::Statistical;
    if (name == "emotion") return Engine::Emotion;
    return std::nullopt;
}

const ForestModel& Analyzer::model() const {
    if (!model_) {
        throw ModelUnavailableError("statistical engine requested but no model is loaded");
    }
    return *model_;
}

AnalysisResult Analyzer::analyze(std::string_view text, Engine engine) const {
    AnalysisResult result;
    result.engine = engine;
    std::vector<Sentence> sentences = pipeline_.process(text);
    result.sentences.reserve(sentences.size());

    switch (engine) {
        case Engine::Lexical: {
            for (Sentence& sentence : sentences) {
                SentenceAnalysis analysis;
                analysis.valence = lexical_baseline_valence(sentence, polarity_);
                analysis.sentence = std::move(sentence);
                result.sentences.push_back(std::move(analysis));
            }
            result.document_valence = mean_of_sentences(result.sentences);
            break;
        }
        case Engine::Symbolic: {
            for (Sentence& sentence : sentences) {
                SentenceValenceResult scored =
                    analyze_sentence_symbolic(sentence, polarity_, rules_);
                SentenceAnalysis analysis;
                analysis.valence = scored.valence;
                analysis.trace = std::move(scored.trace);
                analysis.sentence = std::move(sentence);
                result.sentences.push_back(std::move(analysis));
            }
            result.document_valence = mean_of_sentences(result.sentences);
            break;
        }
        case Engine::Statistical: {
            const ForestModel& forest = model();
            for (Sentence& sentence : sentences) {
                const Prediction prediction = forest.predict(extract_features(sentence));
                SentenceAnalysis analysis;
                analysis.valence = Valence::from_score(
                    prediction.scores[static_cast<std::size_t>(TernaryLabel::Positive)] -
                    prediction.scores[static_cast<std::size_t>(TernaryLabel::Negative)]);
                analysis.sentence = std::move(sentence);
                result.sentences.push_back(std::move(analysis));
            }
            result.document_valence = mean_of_sentences(result.sentences);
            break;
        }
        case Engine::Emotion: {
            EmotionAnalysis detected =
                detect_emotion(sentences, emotion_, pipeline_.emoticons(), keyphrases_);
            for (std::size_t i = 0; i < sentences.size(); ++i) {
                SentenceAnalysis analysis;
                analysis.emotion = detected.sentences[i].resolution;
                analysis.valence = emotion_to_valence(analysis.emotion.emotion);
                analysis.sentence = std::move(sentences[i]);
                result.sentences.push_back(std::move(analysis));
            }
            result.document_emotion = detected.document;
            result.document_valence = emotion_to_valence(detected.document.emotion);
            break;
        }
    }
    return result;
}

EmotionDocument Analyzer::to_emotionml(const AnalysisResult& result) const {
    if (result.engine == Engine::Emotion) {
        return emit_category_doc(result.document_emotion.emotion,
                                 result.document_emotion.confidence);
    }
    return emit_dimension_doc(result.document_valence);
}

}  // namespace valence
