#include <array>
#include <sstream>
#include <string>

#include "tsv.hpp"
#include "builtin_data.hpp"
#include "valence/emotion.hpp"

namespace valence {
namespace {

std::string ascii_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        out.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
    return out;
}

std::vector<std::string> split_words(const std::string& phrase) {
    std::vector<std::string> words;
    std::istringstream in(phrase);
    std::string word;
    while (in >> word) words.push_back(ascii_lower(word));
    return words;
}

bool negated_at(const Sentence& sentence, std::size_t index) {
    std::size_t window = 3;
    std::size_t begin = index > window ? index - window : 0;
    for (std::size_t i = begin; i < index; ++i)
        if (is_negation_word(ascii_lower(sentence.tokens[i].surface))) return true;
    return false;
}

}  // namespace

std::string_view to_string(HitOrigin origin) {
    switch (origin) {
        case HitOrigin::Lexicon: return "lexicon";
        case HitOrigin::Smiley: return "smiley";
        case HitOrigin::Keyphrase: return "keyphrase";
    }
    return "lexicon";
}

KeyphraseTable KeyphraseTable::builtin() {
    std::istringstream in{std::string(builtin_data::keyphrases())};
    return load(in);
}

KeyphraseTable KeyphraseTable::load(std::istream& in) {
    KeyphraseTable table;
    detail::for_each_tsv_line(in, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f.size() != 2) throw LoadError("expected 'phrase<TAB>emotion'", line);
        auto emotion = emotion_from_string(f[1]);
        if (!emotion || *emotion == EmotionLabel::Neutral)
            throw LoadError("unknown emotion '" + f[1] + "'", line);
        Entry entry;
        entry.phrase = f[0];
        entry.words = split_words(f[0]);
        entry.emotion = *emotion;
        if (entry.words.empty()) throw LoadError("empty phrase", line);
        table.entries_.push_back(std::move(entry));
    });
    return table;
}

KeyphraseTable KeyphraseTable::load_file(const std::filesystem::path& path) {
    auto in = detail::open_file(path);
    return load(in);
}

EmotionLabel invert_emotion(EmotionLabel emotion) {
    switch (emotion) {
        case EmotionLabel::Joy: return EmotionLabel::Sadness;
        case EmotionLabel::Sadness: return EmotionLabel::Joy;
        case EmotionLabel::Fear:
        case EmotionLabel::Anger:
        case EmotionLabel::Disgust:
        case EmotionLabel::Surprise: return EmotionLabel::Neutral;
        case EmotionLabel::Neutral: return EmotionLabel::Neutral;
    }
    return EmotionLabel::Neutral;
}

Valence emotion_to_valence(EmotionLabel emotion) {
    if (emotion == EmotionLabel::Neutral) return Valence::from_score(0.0);
    if (emotion == EmotionLabel::Joy) return Valence::from_score(1.0);
    return Valence::from_score(-1.0);
}

std::vector<EmotionHit> detect_hits(const Sentence& sentence, const EmotionLexicon& lexicon,
                                    const EmoticonTable& emoticons,
                                    const KeyphraseTable& keyphrases) {
    std::vector<EmotionHit> hits;
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
        const Token& token = sentence.tokens[i];
        if (token.pos == PosTag::Emoticon) {
            if (auto emotion = emoticons.emotion(token.surface)) {
                EmotionHit hit;
                hit.emotion = *emotion;
                hit.origin = HitOrigin::Smiley;
                hit.token_index = i;
                hit.negated = negated_at(sentence, i);
                hits.push_back(std::move(hit));
            }
            continue;
        }
        if (auto emotion = lexicon.lookup(token)) {
            EmotionHit hit;
            hit.emotion = *emotion;
            hit.origin = HitOrigin::Lexicon;
            hit.token_index = i;
            hit.negated = negated_at(sentence, i);
            hits.push_back(std::move(hit));
        }
    }
    for (const auto& entry : keyphrases.entries()) {
        std::size_t m = entry.words.size();
        if (m == 0 || m > sentence.tokens.size()) continue;
        for (std::size_t start = 0; start + m <= sentence.tokens.size(); ++start) {
            bool match = true;
            for (std::size_t k = 0; k < m; ++k) {
                if (ascii_lower(sentence.tokens[start + k].surface) != entry.words[k]) {
                    match = false;
                    break;
                }
            }
            if (!match) continue;
            EmotionHit hit;
            hit.emotion = entry.emotion;
            hit.origin = HitOrigin::Keyphrase;
            hit.token_index = start;
            hit.filter_id = entry.phrase;
            hit.negated = false;  // keyphrases bypass the negation window
            hits.push_back(std::move(hit));
        }
    }
    return hits;
}

EmotionResolution resolve_emotion(const std::vector<EmotionHit>& hits) {
    std::array<std::size_t, kEmotionCount> counts{};
    std::size_t non_neutral = 0;
    for (const auto& hit : hits) {
        EmotionLabel effective = hit.negated ? invert_emotion(hit.emotion) : hit.emotion;
        ++counts[static_cast<std::size_t>(effective)];
        if (effective != EmotionLabel::Neutral) ++non_neutral;
    }
    if (non_neutral == 0) return {EmotionLabel::Neutral, 1.0};
    EmotionLabel winner = EmotionLabel::Neutral;
    std::size_t best = 0;
    for (EmotionLabel candidate : kEmotionPriority) {
        std::size_t count = counts[static_cast<std::size_t>(candidate)];
        if (count > best) {
            best = count;
            winner = candidate;
        }
    }
    return {winner, static_cast<double>(best) / static_cast<double>(non_neutral)};
}

EmotionAnalysis detect_emotion(const std::vector<Sentence>& sentences,
                               const EmotionLexicon& lexicon, const EmoticonTable& emoticons,
                               const KeyphraseTable& keyphrases) {
    EmotionAnalysis analysis;
    std::vector<EmotionHit> winners;
    for (const auto& sentence : sentences) {
        SentenceEmotion result;
        result.hits = detect_hits(sentence, lexicon, emoticons, keyphrases);
        result.resolution = resolve_emotion(result.hits);
        EmotionHit winner;
        winner.emotion = result.resolution.emotion;
        winner.origin = HitOrigin::Lexicon;
        winners.push_back(winner);
        analysis.sentences.push_back(std::move(result));
    }
    analysis.document = resolve_emotion(winners);
    return analysis;
}

}  // namespace valence
