#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "valence/aggregator.hpp"
#include "valence/analyzer.hpp"
#include "valence/translate.hpp"

namespace valence {

// Runtime wiring resolved in precedence order: command-line flags over
// environment variables over the config file over built-in seed data.
struct Settings {
    int port = 8080;
    std::optional<std::filesystem::path> polarity_lexicon;
    std::optional<std::filesystem::path> emotion_lexicon;
    std::optional<std::filesystem::path> rules;
    std::optional<std::filesystem::path> model;
    std::optional<std::filesystem::path> keyphrases;
    std::optional<std::filesystem::path> emoticons;
    std::optional<std::filesystem::path> tag_lexicon;
    // "identity" or "mapping:<lang>:<path>" (word-substitution file).
    std::string translator = "identity";
    double window_seconds = kDefaultWindowSeconds;

    // `key = value` lines, '#' comments.  Unknown keys are rejected.
    void apply_file(const std::filesystem::path& path);

    // VALENCE_PORT, VALENCE_POLARITY_LEXICON, VALENCE_EMOTION_LEXICON,
    // VALENCE_RULES, VALENCE_MODEL.
    void apply_env();
};

// Loads every configured resource (built-in seed data where unset).
Analyzer make_analyzer(const Settings& settings);

std::unique_ptr<Translator> make_translator(const Settings& settings);

}  // namespace valence
