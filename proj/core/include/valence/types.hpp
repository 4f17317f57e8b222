#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace valence {

enum class TernaryLabel { Positive = 0, Negative = 1, Neutral = 2 };

inline constexpr std::size_t kTernaryCount = 3;

std::string_view to_string(TernaryLabel label);
std::optional<TernaryLabel> ternary_from_string(std::string_view name);

// Graded sentiment value in [-1, 1] plus the ternary label derived from it.
// The label is positive iff score > tau, negative iff score < -tau, else
// neutral; tau defaults to 0.
struct Valence {
    double score = 0.0;
    TernaryLabel label = TernaryLabel::Neutral;

    static Valence from_score(double score, double tau = 0.0);

    friend bool operator==(const Valence&, const Valence&) = default;
};

enum class EmotionLabel {
    Joy = 0,
    Fear = 1,
    Sadness = 2,
    Anger = 3,
    Disgust = 4,
    Surprise = 5,
    Neutral = 6,
};

inline constexpr std::size_t kEmotionCount = 7;

// Tie-break priority applied wherever a single winning emotion is picked.
inline constexpr std::array<EmotionLabel, 6> kEmotionPriority = {
    EmotionLabel::Joy,     EmotionLabel::Sadness,  EmotionLabel::Anger,
    EmotionLabel::Fear,    EmotionLabel::Disgust,  EmotionLabel::Surprise,
};

std::string_view to_string(EmotionLabel label);
std::optional<EmotionLabel> emotion_from_string(std::string_view name);

}  // namespace valence
