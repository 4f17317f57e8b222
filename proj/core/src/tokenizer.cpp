#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "valence/text.hpp"

namespace valence {
namespace {

bool is_ascii_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

bool is_ascii_alnum(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

// Bytes >= 0x80 belong to multi-byte UTF-8 letters; treat them as word
// characters so accented words stay in one piece.
bool is_word_char(unsigned char c) { return is_ascii_alnum(c) || c >= 0x80; }

bool is_apostrophe(unsigned char c) { return c == '\''; }

std::size_t utf8_len(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xe) return 3;
    if ((lead >> 3) == 0x1e) return 4;
    return 1;  // invalid lead byte, consume one byte and move on
}

std::uint32_t decode_utf8(std::string_view s, std::size_t i, std::size_t len) {
    unsigned char lead = static_cast<unsigned char>(s[i]);
    if (len == 1) return lead;
    std::uint32_t cp = lead & (0x7f >> len);
    for (std::size_t k = 1; k < len && i + k < s.size(); ++k)
        cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3f);
    return cp;
}

void encode_utf8(std::uint32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xc0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xe0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    } else {
        out.push_back(static_cast<char>(0xf0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3f)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3f)));
    }
}

struct Composition {
    char base;
    std::uint32_t mark;
    std::uint32_t composed;
};

// Latin base letter + combining mark -> precomposed codepoint.  Covers the
// Latin-1 Supplement and the Latin Extended-A letters seen in western
// European text; anything else is left as typed.
constexpr Composition kCompositions[] = {
    {'a', 0x300, 0xe0},  {'a', 0x301, 0xe1},  {'a', 0x302, 0xe2},
    {'a', 0x303, 0xe3},  {'a', 0x308, 0xe4},  {'a', 0x30a, 0xe5},
    {'e', 0x300, 0xe8},  {'e', 0x301, 0xe9},  {'e', 0x302, 0xea},
    {'e', 0x308, 0xeb},  {'i', 0x300, 0xec},  {'i', 0x301, 0xed},
    {'i', 0x302, 0xee},  {'i', 0x308, 0xef},  {'n', 0x303, 0xf1},
    {'o', 0x300, 0xf2},  {'o', 0x301, 0xf3},  {'o', 0x302, 0xf4},
    {'o', 0x303, 0xf5},  {'o', 0x308, 0xf6},  {'u', 0x300, 0xf9},
    {'u', 0x301, 0xfa},  {'u', 0x302, 0xfb},  {'u', 0x308, 0xfc},
    {'y', 0x301, 0xfd},  {'y', 0x308, 0xff},  {'c', 0x327, 0xe7},
    {'A', 0x300, 0xc0},  {'A', 0x301, 0xc1},  {'A', 0x302, 0xc2},
    {'A', 0x303, 0xc3},  {'A', 0x308, 0xc4},  {'A', 0x30a, 0xc5},
    {'E', 0x300, 0xc8},  {'E', 0x301, 0xc9},  {'E', 0x302, 0xca},
    {'E', 0x308, 0xcb},  {'I', 0x300, 0xcc},  {'I', 0x301, 0xcd},
    {'I', 0x302, 0xce},  {'I', 0x308, 0xcf},  {'N', 0x303, 0xd1},
    {'O', 0x300, 0xd2},  {'O', 0x301, 0xd3},  {'O', 0x302, 0xd4},
    {'O', 0x303, 0xd5},  {'O', 0x308, 0xd6},  {'U', 0x300, 0xd9},
    {'U', 0x301, 0xda},  {'U', 0x302, 0xdb},  {'U', 0x308, 0xdc},
    {'Y', 0x301, 0xdd},  {'c', 0x301, 0x107}, {'s', 0x301, 0x15b},
    {'z', 0x301, 0x17a}, {'C', 0x301, 0x106}, {'S', 0x301, 0x15a},
    {'Z', 0x301, 0x179},
};

std::uint32_t compose(char base, std::uint32_t mark) {
    for (const auto& c : kCompositions)
        if (c.base == base && c.mark == mark) return c.composed;
    return 0;
}

// Clitic suffixes split off the tail of a word token, longest first.
constexpr std::string_view kClitics[] = {"n't", "'re", "'ve", "'ll", "'s", "'m", "'d"};

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

bool iequals_suffix(std::string_view word, std::string_view suffix) {
    if (word.size() < suffix.size()) return false;
    std::size_t off = word.size() - suffix.size();
    for (std::size_t i = 0; i < suffix.size(); ++i)
        if (ascii_lower(word[off + i]) != suffix[i]) return false;
    return true;
}

}  // namespace

std::string normalize(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        unsigned char lead = static_cast<unsigned char>(text[i]);
        if (lead < 0x80) {
            // Peek at a following combining mark.
            std::size_t next = i + 1;
            if (next < text.size()) {
                std::size_t mark_len = utf8_len(static_cast<unsigned char>(text[next]));
                if (mark_len > 1 && next + mark_len <= text.size()) {
                    std::uint32_t mark = decode_utf8(text, next, mark_len);
                    std::uint32_t composed = compose(text[i], mark);
                    if (composed != 0) {
                        encode_utf8(composed, out);
                        i = next + mark_len;
                        continue;
                    }
                }
            }
            out.push_back(text[i]);
            ++i;
        } else {
            std::size_t len = utf8_len(lead);
            out.append(text.substr(i, len));
            i += len;
        }
    }
    return out;
}

std::vector<Token> Pipeline::tokenize(std::string_view text) const {
    std::string normalized = normalize(text);
    std::vector<Token> tokens;
    std::string_view s = normalized;

    auto push = [&](std::size_t begin, std::size_t end) {
        Token t;
        t.surface = std::string(s.substr(begin, end - begin));
        t.span = {begin, end};
        tokens.push_back(std::move(t));
    };

    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (is_ascii_space(c)) {
            ++i;
            continue;
        }
        // Emoticons win over punctuation splitting, longest match first.
        bool matched = false;
        for (const auto& emo : emoticons_.by_length()) {
            if (s.substr(i, emo.size()) == emo) {
                push(i, i + emo.size());
                i += emo.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;

        bool word_start = is_word_char(c) ||
                          (is_apostrophe(c) && i + 1 < s.size() &&
                           is_word_char(static_cast<unsigned char>(s[i + 1])));
        if (word_start) {
            std::size_t begin = i;
            if (is_apostrophe(c)) ++i;
            while (i < s.size()) {
                unsigned char w = static_cast<unsigned char>(s[i]);
                if (is_word_char(w)) {
                    ++i;
                } else if ((is_apostrophe(w) || w == '-') && i + 1 < s.size() &&
                           is_word_char(static_cast<unsigned char>(s[i + 1]))) {
                    i += 2;
                } else {
                    break;
                }
            }
            std::string_view word = s.substr(begin, i - begin);
            std::size_t split = 0;
            for (auto clitic : kClitics) {
                if (word.size() > clitic.size() && iequals_suffix(word, clitic)) {
                    split = clitic.size();
                    break;
                }
            }
            if (split > 0) {
                push(begin, i - split);
                push(i - split, i);
            } else {
                push(begin, i);
            }
            continue;
        }
        // Punctuation or a stray symbol: one character (full UTF-8 sequence).
        std::size_t len = c < 0x80 ? 1 : utf8_len(c);
        push(i, i + len);
        i += len;
    }

    for (std::size_t k = 0; k < tokens.size(); ++k) tokens[k].index = k;
    return tokens;
}

bool is_negation_word(std::string_view lowercase_surface) {
    // "no one" needs no entry of its own: its first token is "no".
    return lowercase_surface == "not" || lowercase_surface == "n't" ||
           lowercase_surface == "no" || lowercase_surface == "never" ||
           lowercase_surface == "nobody";
}

}  // namespace valence
