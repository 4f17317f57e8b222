#pragma once

#include <string_view>

// Seed data compiled in from core/data/ so everything works out of the
// box with no files on disk.  Same formats as the file loaders.
namespace valence::builtin_data {

std::string_view emoticons();
std::string_view tag_lexicon();
std::string_view polarity_lexicon();
std::string_view emotion_lexicon();
std::string_view rules();
std::string_view keyphrases();
std::string_view phenomenon_corpus();

}  // namespace valence::builtin_data
