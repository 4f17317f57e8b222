#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valence/types.hpp"

namespace valence {

inline constexpr std::string_view kEmotionmlNamespace =
    "http://www.w3.org/2009/10/emotionml";
inline constexpr std::string_view kBig6Vocabulary =
    "http://www.w3.org/TR/emotion-voc/xml#big6";
inline constexpr std::string_view kFsreDimensionVocabulary =
    "http://www.w3.org/TR/emotion-voc/xml#fsre-dimensions";

struct EmotionCategory {
    std::string name;
    std::optional<double> confidence;

    friend bool operator==(const EmotionCategory&, const EmotionCategory&) = default;
};

struct EmotionDimension {
    std::string name;
    double value = 0.0;  // EmotionML dimensions live in [0,1]
    std::optional<double> confidence;

    friend bool operator==(const EmotionDimension&, const EmotionDimension&) = default;
};

struct EmotionDocument {
    std::vector<EmotionCategory> categories;
    std::vector<EmotionDimension> dimensions;
    // Vocabulary URI for each descriptor kind; must be non-empty exactly
    // when the corresponding descriptor list is non-empty.
    std::string category_vocabulary;
    std::string dimension_vocabulary;

    friend bool operator==(const EmotionDocument&, const EmotionDocument&) = default;
};

struct VocabularyRef {
    std::string uri;
    std::vector<std::string> items;
};

// Locally declared vocabularies; remote vocabulary documents are never
// fetched, so validation only succeeds against URIs registered here.
class VocabularyRegistry {
  public:
    static const VocabularyRegistry& builtin();

    void declare(VocabularyRef ref);
    const VocabularyRef* find(std::string_view uri) const;

  private:
    std::vector<VocabularyRef> entries_;
};

// Maps a valence score in [-1,1] onto one "valence" dimension via
// value = (score + 1) / 2.
EmotionDocument emit_dimension_doc(
    Valence valence, std::string_view dimension_vocabulary = kFsreDimensionVocabulary);

// Maps a detected emotion onto one category.  Neutral has no category in
// the big-six vocabulary, so it becomes a dimension document at 0.5 with
// the confidence carried over.
EmotionDocument emit_category_doc(
    EmotionLabel label, double confidence,
    std::string_view category_vocabulary = kBig6Vocabulary,
    std::string_view dimension_vocabulary = kFsreDimensionVocabulary);

// Deterministic, byte-stable XML. Throws EmotionmlError when the document
// violates an invariant (range, vocabulary membership, empty emotion).
std::string serialize(const EmotionDocument& doc,
                      const VocabularyRegistry& registry = VocabularyRegistry::builtin());

struct ParseOutcome {
    std::optional<EmotionDocument> document;  // set iff errors is empty
    // Each entry is "<code>: <detail>" with code one of: malformed-xml,
    // wrong-namespace, out-of-range, unknown-name, unknown-vocabulary,
    // no-descriptor.
    std::vector<std::string> errors;
};

ParseOutcome parse_and_validate(
    std::string_view xml,
    const VocabularyRegistry& registry = VocabularyRegistry::builtin());

}  // namespace valence
