#include <doctest.h>

#include <map>
#include <string>

#include "valence/error.hpp"
#include "valence/translate.hpp"

using namespace valence;

TEST_SUITE("translate") {

TEST_CASE("language tags reduce to their primary subtag") {
    CHECK(is_english("en"));
    CHECK(is_english("EN"));
    CHECK(is_english("en-US"));
    CHECK(is_english("en_GB"));
    CHECK(is_english(""));  // unspecified defaults to English
    CHECK(!is_english("es"));
    CHECK(!is_english("fr-CA"));
    CHECK(!is_english("eng"));
}

TEST_CASE("identity backend passes English through and refuses the rest") {
    IdentityTranslator translator;
    CHECK(translator.id() == "identity");
    CHECK(translator.translate("good stuff", "en") == "good stuff");
    CHECK(translator.translate("good stuff", "en-AU") == "good stuff");
    CHECK_THROWS_AS(translator.translate("bueno", "es"), TranslationError);
    CHECK_THROWS_AS(translator.translate("bon", "fr"), TranslationError);
}

TEST_CASE("mapping backend substitutes known words and keeps the rest") {
    const MappingTranslator translator(
        "es", {{"bueno", "good"}, {"malo", "bad"}, {"no", "not"}});
    CHECK(translator.id() == "mapping:es");
    CHECK(translator.translate("bueno", "es") == "good");
    CHECK(translator.translate("es bueno", "es") == "es good");
    CHECK(translator.translate("No bueno", "es") == "not good");  // case-folded lookup
    CHECK(translator.translate("malo  bueno", "es") == "bad  good");  // spacing kept
    CHECK(translator.translate("zzz", "es") == "zzz");
}

TEST_CASE("mapping backend serves only its own language") {
    const MappingTranslator translator("es", {{"bueno", "good"}});
    CHECK(translator.translate("anything", "en") == "anything");  // English is identity
    CHECK(translator.translate("bueno", "es-MX") == "good");      // regional variant ok
    CHECK_THROWS_AS(translator.translate("bom", "pt"), TranslationError);
}

}  // TEST_SUITE
