// Thirty hand-labeled sentences for the keyword-spotting detector: plain
// keyword hits, negation inversions inside the three-token window, smileys,
// and keyphrases.  Expected labels were traced by hand against the seed
// lexicons; if a seed entry changes, retrace before editing a label here.
#pragma once

#include "valence/types.hpp"

namespace valence::testsupport {

struct EmotionCase {
    const char* text;
    EmotionLabel expected;
};

inline constexpr EmotionCase kEmotionFixture[] = {
    // keyword hits, no negation in range
    {"I am happy today.", EmotionLabel::Joy},
    {"She was sad all evening.", EmotionLabel::Sadness},
    {"He is furious about the delay.", EmotionLabel::Anger},
    {"I am afraid of the dark.", EmotionLabel::Fear},
    {"That smell is disgusting.", EmotionLabel::Disgust},
    {"We were surprised by the result.", EmotionLabel::Surprise},
    {"I love this song.", EmotionLabel::Joy},
    {"He hates the new design.", EmotionLabel::Anger},
    {"She cried after the call.", EmotionLabel::Sadness},
    {"I am worried about the deadline.", EmotionLabel::Fear},
    {"The fridge smells gross.", EmotionLabel::Disgust},
    {"We were stunned by the news.", EmotionLabel::Surprise},

    // no cues at all
    {"The schedule is on the wall.", EmotionLabel::Neutral},
    {"The meeting starts at noon.", EmotionLabel::Neutral},

    // negation within three tokens before the cue
    {"I am not happy.", EmotionLabel::Sadness},
    {"I am not sad.", EmotionLabel::Joy},
    {"She is never happy here.", EmotionLabel::Sadness},
    {"Nobody was sad at the party.", EmotionLabel::Joy},
    {"No one was happy with the delay.", EmotionLabel::Sadness},
    {"They were not scared at all.", EmotionLabel::Neutral},
    {"I am not angry with you.", EmotionLabel::Neutral},
    {"We could not love the ending.", EmotionLabel::Sadness},

    // smileys
    {"Great news :)", EmotionLabel::Joy},
    {"I failed the test :(", EmotionLabel::Sadness},
    {"What is that :O", EmotionLabel::Surprise},
    {"You broke it again >:(", EmotionLabel::Anger},

    // keyphrases (negation-exempt even when they contain "no")
    {"Oh no, we lost the game.", EmotionLabel::Sadness},
    {"No way!", EmotionLabel::Surprise},
    {"How dare you speak like that!", EmotionLabel::Anger},
    {"Well done team :)", EmotionLabel::Joy},
};

inline constexpr std::size_t kEmotionFixtureSize =
    sizeof(kEmotionFixture) / sizeof(kEmotionFixture[0]);

static_assert(kEmotionFixtureSize == 30);

}  // namespace valence::testsupport
