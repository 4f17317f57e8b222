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

enum class HitOrigin { Lexicon, Smiley, Keyphrase };

std::string_view to_string(HitOrigin origin);

// One detected emotion cue.  `token_index` is the matched token (the first
// token for keyphrases); `filter_id` names the matching keyphrase.
struct EmotionHit {
    EmotionLabel emotion = EmotionLabel::Neutral;
    HitOrigin origin = HitOrigin::Lexicon;
    std::optional<std::size_t> token_index;
    std::optional<std::string> filter_id;
    bool negated = false;
};

// Multi-word phrases mapped to an emotion; matches are exact on lowercase
// token sequences and exempt from negation windowing.
class KeyphraseTable {
  public:
    static KeyphraseTable builtin();
    static KeyphraseTable load(std::istream& in);
    static KeyphraseTable load_file(const std::filesystem::path& path);

    struct Entry {
        std::string phrase;
        std::vector<std::string> words;
        EmotionLabel emotion = EmotionLabel::Neutral;
    };

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

  private:
    std::vector<Entry> entries_;
};

// joy <-> sadness; fear/anger/disgust/surprise -> neutral; neutral stays.
EmotionLabel invert_emotion(EmotionLabel emotion);

// joy -> (+1, positive); the five negative emotions -> (-1, negative);
// neutral -> (0, neutral).
Valence emotion_to_valence(EmotionLabel emotion);

// Keyword, smiley and keyphrase spotting over one tagged sentence.  A hit is
// negated when one of the negation words occurs within the three preceding
// tokens (keyphrase hits are exempt).
std::vector<EmotionHit> detect_hits(const Sentence& sentence, const EmotionLexicon& lexicon,
                                    const EmoticonTable& emoticons,
                                    const KeyphraseTable& keyphrases);

struct EmotionResolution {
    EmotionLabel emotion = EmotionLabel::Neutral;
    double confidence = 1.0;
};

// Inverts negated hits, then picks the most frequent non-neutral emotion
// (ties broken joy > sadness > anger > fear > disgust > surprise).
// Confidence is the winner's share of non-neutral hits.
EmotionResolution resolve_emotion(const std::vector<EmotionHit>& hits);

struct SentenceEmotion {
    EmotionResolution resolution;
    std::vector<EmotionHit> hits;
};

struct EmotionAnalysis {
    std::vector<SentenceEmotion> sentences;
    EmotionResolution document;
};

EmotionAnalysis detect_emotion(const std::vector<Sentence>& sentences,
                               const EmotionLexicon& lexicon, const EmoticonTable& emoticons,
                               const KeyphraseTable& keyphrases);

}  // namespace valence
