#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "valence/emotionml.hpp"
#include "valence/error.hpp"

using namespace valence;

namespace {

const char* kBig6Names[] = {"anger", "disgust", "fear", "joy", "sadness", "surprise"};
const char* kDimensionNames[] = {"valence", "potency", "arousal", "unpredictability"};

// Valid by construction: at least one descriptor, names from the builtin
// vocabularies, values and confidences inside [0,1].
EmotionDocument random_document(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    EmotionDocument doc;
    const bool with_categories = rng() % 2 == 0;
    const bool with_dimensions = !with_categories || rng() % 2 == 0;

    if (with_categories) {
        doc.category_vocabulary = std::string(kBig6Vocabulary);
        const std::size_t count = 1 + rng() % 3;
        for (std::size_t i = 0; i < count; ++i) {
            EmotionCategory category;
            category.name = kBig6Names[rng() % 6];
            if (rng() % 2 == 0) category.confidence = unit(rng);
            doc.categories.push_back(std::move(category));
        }
    }
    if (with_dimensions) {
        doc.dimension_vocabulary = std::string(kFsreDimensionVocabulary);
        const std::size_t count = 1 + rng() % 2;
        for (std::size_t i = 0; i < count; ++i) {
            EmotionDimension dimension;
            dimension.name = kDimensionNames[rng() % 4];
            dimension.value = unit(rng);
            if (rng() % 2 == 0) dimension.confidence = unit(rng);
            doc.dimensions.push_back(std::move(dimension));
        }
    }
    return doc;
}

bool has_error_with_prefix(const ParseOutcome& outcome, const std::string& prefix) {
    for (const std::string& error : outcome.errors) {
        if (error.rfind(prefix, 0) == 0) return true;
    }
    return false;
}

}  // namespace

TEST_SUITE("emotionml") {

TEST_CASE("serialization and parsing are inverse on randomized documents") {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 1000; ++i) {
        const EmotionDocument doc = random_document(rng);
        const std::string xml = serialize(doc);
        const ParseOutcome outcome = parse_and_validate(xml);
        CAPTURE(xml);
        REQUIRE(outcome.errors.empty());
        REQUIRE(outcome.document.has_value());
        CHECK(*outcome.document == doc);
    }
}

TEST_CASE("serialization is byte-identical across calls") {
    std::mt19937_64 rng(7);
    const EmotionDocument doc = random_document(rng);
    CHECK(serialize(doc) == serialize(doc));
}

TEST_CASE("affine score mapping hits its endpoints exactly") {
    CHECK(emit_dimension_doc(Valence::from_score(-1.0)).dimensions[0].value == 0.0);
    CHECK(emit_dimension_doc(Valence::from_score(0.0)).dimensions[0].value == 0.5);
    CHECK(emit_dimension_doc(Valence::from_score(1.0)).dimensions[0].value == 1.0);
}

TEST_CASE("affine score mapping is strictly monotone and order-preserving") {
    double previous = -0.1;
    for (double score = -1.0; score <= 1.0; score += 0.125) {
        const double value = emit_dimension_doc(Valence::from_score(score)).dimensions[0].value;
        CHECK(value > previous);
        previous = value;
    }
}

TEST_CASE("category documents carry the label; neutral falls back to 0.5") {
    const EmotionDocument joy = emit_category_doc(EmotionLabel::Joy, 0.75);
    REQUIRE(joy.categories.size() == 1);
    CHECK(joy.categories[0].name == "joy");
    CHECK(joy.categories[0].confidence == 0.75);
    CHECK(joy.category_vocabulary == kBig6Vocabulary);
    CHECK(serialize(joy).find("category name=\"joy\"") != std::string::npos);

    const EmotionDocument neutral = emit_category_doc(EmotionLabel::Neutral, 0.5);
    CHECK(neutral.categories.empty());
    REQUIRE(neutral.dimensions.size() == 1);
    CHECK(neutral.dimensions[0].value == 0.5);
}

TEST_CASE("serializer refuses invariant violations") {
    EmotionDocument out_of_range;
    out_of_range.dimension_vocabulary = std::string(kFsreDimensionVocabulary);
    out_of_range.dimensions.push_back({"valence", 1.5, std::nullopt});
    CHECK_THROWS_AS(serialize(out_of_range), EmotionmlError);

    EmotionDocument empty;
    CHECK_THROWS_AS(serialize(empty), EmotionmlError);

    EmotionDocument bad_name;
    bad_name.category_vocabulary = std::string(kBig6Vocabulary);
    bad_name.categories.push_back({"bliss", std::nullopt});
    CHECK_THROWS_AS(serialize(bad_name), EmotionmlError);
}

TEST_CASE("malformed xml is reported as such") {
    CHECK(has_error_with_prefix(parse_and_validate("not xml"), "malformed-xml"));
    CHECK(has_error_with_prefix(parse_and_validate("<emotionml"), "malformed-xml"));
    CHECK(has_error_with_prefix(
        parse_and_validate("<emotionml xmlns=\"http://www.w3.org/2009/10/emotionml\">"
                           "<emotion><category name=\"joy\"/></emotion>"),
        "malformed-xml"));  // unterminated root
}

TEST_CASE("wrong or missing namespace is rejected") {
    CHECK(has_error_with_prefix(
        parse_and_validate("<emotionml><emotion><category name=\"joy\"/></emotion>"
                           "</emotionml>"),
        "wrong-namespace"));
    CHECK(has_error_with_prefix(
        parse_and_validate("<emotionml xmlns=\"http://example.com/other\">"
                           "<emotion><category name=\"joy\"/></emotion></emotionml>"),
        "wrong-namespace"));
    CHECK(has_error_with_prefix(
        parse_and_validate("<sentiment xmlns=\"http://www.w3.org/2009/10/emotionml\">"
                           "</sentiment>"),
        "wrong-namespace"));
}

TEST_CASE("out-of-range dimension values are rejected") {
    const std::string xml =
        "<emotionml xmlns=\"http://www.w3.org/2009/10/emotionml\" "
        "dimension-set=\"http://www.w3.org/TR/emotion-voc/xml#fsre-dimensions\">"
        "<emotion><dimension name=\"valence\" value=\"1.5\"/></emotion></emotionml>";
    CHECK(has_error_with_prefix(parse_and_validate(xml), "out-of-range"));
}

TEST_CASE("unknown category names are rejected against the declared vocabulary") {
    const std::string xml =
        "<emotionml xmlns=\"http://www.w3.org/2009/10/emotionml\" "
        "category-set=\"http://www.w3.org/TR/emotion-voc/xml#big6\">"
        "<emotion><category name=\"bliss\"/></emotion></emotionml>";
    CHECK(has_error_with_prefix(parse_and_validate(xml), "unknown-name"));
}

TEST_CASE("unregistered vocabularies are rejected") {
    const std::string xml =
        "<emotionml xmlns=\"http://www.w3.org/2009/10/emotionml\" "
        "category-set=\"http://example.com/private-vocab\">"
        "<emotion><category name=\"joy\"/></emotion></emotionml>";
    CHECK(has_error_with_prefix(parse_and_validate(xml), "unknown-vocabulary"));
}

TEST_CASE("an emotion with no descriptors is rejected") {
    const std::string xml =
        "<emotionml xmlns=\"http://www.w3.org/2009/10/emotionml\">"
        "<emotion></emotion></emotionml>";
    CHECK(has_error_with_prefix(parse_and_validate(xml), "no-descriptor"));
}

TEST_CASE("all violations are collected, not just the first") {
    const std::string xml =
        "<emotionml xmlns=\"http://www.w3.org/2009/10/emotionml\" "
        "dimension-set=\"http://www.w3.org/TR/emotion-voc/xml#fsre-dimensions\">"
        "<emotion>"
        "<dimension name=\"valence\" value=\"2\"/>"
        "<dimension name=\"bogus\" value=\"0.5\"/>"
        "</emotion></emotionml>";
    const ParseOutcome outcome = parse_and_validate(xml);
    CHECK(outcome.errors.size() >= 2);
    CHECK(has_error_with_prefix(outcome, "out-of-range"));
    CHECK(has_error_with_prefix(outcome, "unknown-name"));
    CHECK(!outcome.document.has_value());
}

TEST_CASE("custom vocabularies can be declared locally") {
    VocabularyRegistry registry;
    registry.declare({"urn:example:moods", {"mellow"}});
    EmotionDocument doc;
    doc.category_vocabulary = "urn:example:moods";
    doc.categories.push_back({"mellow", std::nullopt});
    const std::string xml = serialize(doc, registry);
    const ParseOutcome outcome = parse_and_validate(xml, registry);
    REQUIRE(outcome.document.has_value());
    CHECK(*outcome.document == doc);
    // The same document fails against the builtin registry.
    CHECK(!parse_and_validate(xml).document.has_value());
}

TEST_CASE("vocabulary set on the emotion element overrides the root") {
    const std::string xml =
        "<emotionml xmlns=\"http://www.w3.org/2009/10/emotionml\" "
        "category-set=\"http://example.com/other\">"
        "<emotion category-set=\"http://www.w3.org/TR/emotion-voc/xml#big6\">"
        "<category name=\"joy\"/></emotion></emotionml>";
    const ParseOutcome outcome = parse_and_validate(xml);
    REQUIRE(outcome.document.has_value());
    CHECK(outcome.document->category_vocabulary == kBig6Vocabulary);
}

}  // TEST_SUITE
