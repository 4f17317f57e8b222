#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "valence/text.hpp"

namespace valence {
namespace {

bool is_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Common abbreviations that end in a period without closing a sentence.
constexpr std::string_view kAbbreviations[] = {
    "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st",  "etc", "vs", "eg",
    "ie", "cf",  "fig", "no", "al",  "inc", "ltd", "co", "dept", "approx",
};

// Word immediately preceding position `dot`, lowercased with dots removed.
std::string word_before(std::string_view text, std::size_t dot) {
    std::size_t end = dot;
    std::size_t begin = end;
    while (begin > 0) {
        unsigned char c = static_cast<unsigned char>(text[begin - 1]);
        if (is_space(c)) break;
        --begin;
    }
    std::string word;
    for (std::size_t i = begin; i < end; ++i) {
        char c = text[i];
        if (c == '.') continue;
        word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return word;
}

bool suppresses_split(std::string_view text, std::size_t dot) {
    std::string word = word_before(text, dot);
    if (word.size() == 1 && std::isalpha(static_cast<unsigned char>(word[0])))
        return true;  // initials like "J. Smith"
    return std::find(std::begin(kAbbreviations), std::end(kAbbreviations), word) !=
           std::end(kAbbreviations);
}

}  // namespace

std::vector<Span> Pipeline::split_sentences(std::string_view text) {
    std::vector<Span> spans;
    std::size_t n = text.size();

    std::size_t start = 0;
    while (start < n && is_space(static_cast<unsigned char>(text[start]))) ++start;
    if (start >= n) return spans;

    std::size_t i = start;
    while (i < n) {
        if (!is_terminator(text[i])) {
            ++i;
            continue;
        }
        std::size_t run_begin = i;
        std::size_t run_end = i;
        while (run_end + 1 < n && is_terminator(text[run_end + 1])) ++run_end;

        std::size_t after = run_end + 1;
        if (after >= n) break;  // trailing terminator, handled below
        if (!is_space(static_cast<unsigned char>(text[after]))) {
            i = after;
            continue;
        }
        std::size_t next = after;
        while (next < n && is_space(static_cast<unsigned char>(text[next]))) ++next;
        bool upper_follows = next < n && text[next] >= 'A' && text[next] <= 'Z';
        bool single_period = run_begin == run_end && text[run_begin] == '.';
        if (upper_follows && !(single_period && suppresses_split(text, run_begin))) {
            spans.push_back({start, run_end + 1});
            start = next;
            i = next;
        } else {
            i = after;
        }
    }

    std::size_t last = n;
    while (last > start && is_space(static_cast<unsigned char>(text[last - 1]))) --last;
    if (last > start) spans.push_back({start, last});
    return spans;
}

}  // namespace valence
