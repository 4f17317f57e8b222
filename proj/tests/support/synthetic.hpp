// Deterministic synthetic corpora for the classifier tests.  Every sentence
// carries exactly one class keyword plus label-independent filler, so the
// corpora are separable by construction and expected accuracies can be
// reasoned about without a reference run.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "valence/eval.hpp"
#include "valence/types.hpp"

namespace valence::testsupport {

inline const char* kPositiveKeywords[] = {"superb", "stellar", "glorious"};
inline const char* kNegativeKeywords[] = {"dreadful", "abysmal", "rotten"};
inline const char* kNeutralKeywords[] = {"ordinary", "routine", "standard"};

inline std::string synth_sentence(std::mt19937_64& rng, const char* keyword,
                                  const std::vector<std::string>& fillers) {
    const std::size_t lead = 1 + rng() % 3;
    const std::size_t tail = 1 + rng() % 3;
    std::string text;
    for (std::size_t i = 0; i < lead; ++i) {
        text += fillers[rng() % fillers.size()];
        text += ' ';
    }
    text += keyword;
    for (std::size_t i = 0; i < tail; ++i) {
        text += ' ';
        text += fillers[rng() % fillers.size()];
    }
    return text;
}

// `count` records cycling positive/negative/neutral, each built around one
// keyword of its class.  Same seed, same corpus.
inline std::vector<GoldRecord> separable_corpus(std::size_t count, std::uint64_t seed,
                                                const std::string& id_prefix = "s",
                                                const std::vector<std::string>& fillers = {
                                                    "the", "report", "came", "in", "today",
                                                    "from", "team", "office", "we", "read"}) {
    std::mt19937_64 rng(seed);
    std::vector<GoldRecord> records;
    records.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        GoldRecord record;
        record.id = id_prefix + std::to_string(i);
        switch (i % 3) {
            case 0:
                record.ternary = TernaryLabel::Positive;
                record.text = synth_sentence(rng, kPositiveKeywords[rng() % 3], fillers);
                break;
            case 1:
                record.ternary = TernaryLabel::Negative;
                record.text = synth_sentence(rng, kNegativeKeywords[rng() % 3], fillers);
                break;
            default:
                record.ternary = TernaryLabel::Neutral;
                record.text = synth_sentence(rng, kNeutralKeywords[rng() % 3], fillers);
                break;
        }
        records.push_back(std::move(record));
    }
    return records;
}

// Two corpora with disjoint ids and disjoint filler vocabularies that share
// only the class keywords; stand-ins for a train/test pair drawn from
// different domains.
inline std::vector<GoldRecord> restaurant_domain(std::size_t count, std::uint64_t seed) {
    return separable_corpus(count, seed, "rest",
                            {"meal", "waiter", "kitchen", "menu", "dinner", "plate"});
}

inline std::vector<GoldRecord> hotel_domain(std::size_t count, std::uint64_t seed) {
    return separable_corpus(count, seed, "hotel",
                            {"room", "lobby", "pillow", "reception", "corridor", "suite"});
}

}  // namespace valence::testsupport
