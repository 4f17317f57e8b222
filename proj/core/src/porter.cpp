// Original Porter stemming algorithm, matching the reference implementation's
// behavior (words of length <= 2 unchanged, step 2 includes logi -> log).

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>

#include "valence/text.hpp"

namespace valence {
namespace {

bool is_consonant(const std::string& w, std::size_t i) {
    char c = w[i];
    if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return false;
    if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
    return true;
}

// Number of VC sequences in [C](VC)^m[V].
int measure(const std::string& w, std::size_t len) {
    int n = 0;
    std::size_t i = 0;
    while (i < len && is_consonant(w, i)) ++i;
    while (i < len) {
        while (i < len && !is_consonant(w, i)) ++i;
        if (i >= len) break;
        ++n;
        while (i < len && is_consonant(w, i)) ++i;
    }
    return n;
}

int measure(const std::string& w) { return measure(w, w.size()); }

bool contains_vowel(const std::string& w, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        if (!is_consonant(w, i)) return true;
    return false;
}

bool ends_double_consonant(const std::string& w) {
    auto n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: stem ends consonant-vowel-consonant and the final consonant is not
// w, x or y.
bool ends_cvc(const std::string& w) {
    auto n = w.size();
    if (n < 3) return false;
    if (!is_consonant(w, n - 1) || is_consonant(w, n - 2) || !is_consonant(w, n - 3))
        return false;
    char last = w[n - 1];
    return last != 'w' && last != 'x' && last != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
    return w.size() >= suffix.size() &&
           std::string_view(w).substr(w.size() - suffix.size()) == suffix;
}

void step1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w.erase(w.size() - 2);
    } else if (ends_with(w, "ies")) {
        w.erase(w.size() - 3);
        w += 'i';
    } else if (ends_with(w, "ss")) {
        // keep
    } else if (ends_with(w, "s")) {
        w.pop_back();
    }
}

void step1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(w, w.size() - 3) > 0) w.pop_back();
        return;
    }
    bool trimmed = false;
    if (ends_with(w, "ed") && contains_vowel(w, w.size() - 2)) {
        w.erase(w.size() - 2);
        trimmed = true;
    } else if (ends_with(w, "ing") && contains_vowel(w, w.size() - 3)) {
        w.erase(w.size() - 3);
        trimmed = true;
    }
    if (!trimmed) return;
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w += 'e';
    } else if (ends_double_consonant(w) && w.back() != 'l' && w.back() != 's' &&
               w.back() != 'z') {
        w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
        w += 'e';
    }
}

void step1c(std::string& w) {
    if (ends_with(w, "y") && contains_vowel(w, w.size() - 1)) w.back() = 'i';
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// Longest matching suffix wins; its condition decides, no shorter rule is
// tried afterwards.
void apply_rule_list(std::string& w, const Rule* rules, std::size_t count) {
    const Rule* best = nullptr;
    for (std::size_t i = 0; i < count; ++i) {
        if (ends_with(w, rules[i].suffix)) {
            if (best == nullptr || rules[i].suffix.size() > best->suffix.size())
                best = &rules[i];
        }
    }
    if (best == nullptr) return;
    std::size_t stem_len = w.size() - best->suffix.size();
    if (measure(w, stem_len) > 0) {
        w.erase(stem_len);
        w += best->replacement;
    }
}

constexpr Rule kStep2[] = {
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
    {"izer", "ize"},    {"logi", "log"},    {"abli", "able"},   {"alli", "al"},
    {"entli", "ent"},   {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"},
    {"ation", "ate"},   {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
    {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},
    {"biliti", "ble"},
};

constexpr Rule kStep3[] = {
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
};

constexpr std::string_view kStep4[] = {
    "ement", "ance", "ence", "able", "ible", "ment", "ent", "ant", "ion",
    "ism",   "ate",  "iti",  "ous",  "ive",  "ize",  "al",  "er",  "ic",
    "ou",
};

void step4(std::string& w) {
    std::string_view best;
    for (auto suffix : kStep4) {
        if (ends_with(w, suffix) && suffix.size() > best.size()) best = suffix;
    }
    if (best.empty()) return;
    std::size_t stem_len = w.size() - best.size();
    if (measure(w, stem_len) <= 1) return;
    if (best == "ion" && !(stem_len > 0 && (w[stem_len - 1] == 's' || w[stem_len - 1] == 't')))
        return;
    w.erase(stem_len);
}

void step5a(std::string& w) {
    if (!ends_with(w, "e")) return;
    std::size_t stem_len = w.size() - 1;
    int m = measure(w, stem_len);
    std::string stem_part = w.substr(0, stem_len);
    if (m > 1 || (m == 1 && !ends_cvc(stem_part))) w.pop_back();
}

void step5b(std::string& w) {
    if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l') w.pop_back();
}

std::string porter(std::string w) {
    if (w.size() <= 2) return w;
    step1a(w);
    step1b(w);
    step1c(w);
    apply_rule_list(w, kStep2, std::size(kStep2));
    apply_rule_list(w, kStep3, std::size(kStep3));
    step4(w);
    step5a(w);
    step5b(w);
    return w;
}

}  // namespace

std::string stem(std::string_view surface) {
    std::string lowered;
    lowered.reserve(surface.size());
    bool alphabetic = true;
    for (unsigned char c : surface) {
        if (c >= 'A' && c <= 'Z') c = static_cast<unsigned char>(c - 'A' + 'a');
        if (c < 'a' || c > 'z') alphabetic = false;
        lowered.push_back(static_cast<char>(c));
    }
    if (!alphabetic) return lowered;
    return porter(std::move(lowered));
}

}  // namespace valence
