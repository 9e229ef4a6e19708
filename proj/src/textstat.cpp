#include "respeval/textstat.hpp"

#include <cctype>

#include <array>
#include <fstream>
#include <set>

#include "respeval/utf8.hpp"

namespace respeval::textstat {

namespace {

// Compatibility jamo for the 19 initials and 27 finals, in Unicode syllable-index order.
constexpr std::array<char32_t, 19> kInitials = {
    0x3131, 0x3132, 0x3134, 0x3137, 0x3138, 0x3139, 0x3141, 0x3142, 0x3143, 0x3145,
    0x3146, 0x3147, 0x3148, 0x3149, 0x314A, 0x314B, 0x314C, 0x314D, 0x314E,
};
constexpr char32_t kFirstMedial = 0x314F;
constexpr int kMedialCount = 21;
constexpr std::array<char32_t, 27> kFinals = {
    0x3131, 0x3132, 0x3133, 0x3134, 0x3135, 0x3136, 0x3137, 0x3139, 0x313A,
    0x313B, 0x313C, 0x313D, 0x313E, 0x313F, 0x3140, 0x3141, 0x3142, 0x3144,
    0x3145, 0x3146, 0x3147, 0x3148, 0x314A, 0x314B, 0x314C, 0x314D, 0x314E,
};
constexpr int kFinalSlots = 28;                          // 27 finals plus "none"
constexpr int kSyllablesPerInitial = kMedialCount * kFinalSlots;  // 588

template <std::size_t N>
int index_of(const std::array<char32_t, N>& table, char32_t cp) {
    for (std::size_t i = 0; i < N; ++i) {
        if (table[i] == cp) return static_cast<int>(i);
    }
    return -1;
}

bool is_ascii_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

}  // namespace

NormalizedText normalize_english(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char32_t cp : utf8::decode(text)) {
        if (utf8::is_space(cp)) {
            pending_space = !out.empty();
            continue;
        }
        char c = 0;
        if (cp >= U'a' && cp <= U'z') {
            c = static_cast<char>(cp);
        } else if (cp >= U'A' && cp <= U'Z') {
            c = static_cast<char>(cp - U'A' + U'a');
        } else {
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(c);
    }
    return NormalizedText{std::string(text), std::move(out), Language::english};
}

bool is_hangul_syllable(char32_t cp) {
    return cp >= hangul_syllable_first && cp <= hangul_syllable_last;
}

bool is_standalone_jamo(char32_t cp) {
    return (cp >= 0x3131 && cp <= 0x318E && cp != 0x3164) || (cp >= 0x1100 && cp <= 0x11FF);
}

bool is_hangul(char32_t cp) { return is_hangul_syllable(cp) || is_standalone_jamo(cp); }

std::u32string JamoSequence::jamo_stream() const {
    std::u32string out;
    out.reserve(units.size());
    for (const auto& u : units) {
        if (u.is_jamo()) out.push_back(u.cp);
    }
    return out;
}

JamoSequence decompose_jamo(std::string_view text) {
    JamoSequence seq;
    for (char32_t cp : utf8::decode(text)) {
        if (is_hangul_syllable(cp)) {
            const int index = static_cast<int>(cp - hangul_syllable_first);
            const int initial = index / kSyllablesPerInitial;
            const int medial = (index / kFinalSlots) % kMedialCount;
            const int final_slot = index % kFinalSlots;
            seq.units.push_back({kInitials[initial], JamoRole::initial});
            seq.units.push_back({kFirstMedial + static_cast<char32_t>(medial), JamoRole::medial});
            if (final_slot != 0) seq.units.push_back({kFinals[final_slot - 1], JamoRole::final_consonant});
            ++seq.source_syllable_count;
        } else if (is_standalone_jamo(cp)) {
            seq.units.push_back({cp, JamoRole::isolated});
        } else {
            seq.units.push_back({cp, JamoRole::other});
        }
    }
    return seq;
}

std::string recompose_jamo(const JamoSequence& seq) {
    std::string out;
    const auto& u = seq.units;
    std::size_t i = 0;
    while (i < u.size()) {
        const int initial = u[i].role == JamoRole::initial ? index_of(kInitials, u[i].cp) : -1;
        const bool has_medial = i + 1 < u.size() && u[i + 1].role == JamoRole::medial;
        if (initial < 0 || !has_medial) {
            utf8::append(out, u[i].cp);
            ++i;
            continue;
        }
        const int medial = static_cast<int>(u[i + 1].cp) - static_cast<int>(kFirstMedial);
        int final_slot = 0;
        std::size_t consumed = 2;
        if (i + 2 < u.size() && u[i + 2].role == JamoRole::final_consonant) {
            final_slot = index_of(kFinals, u[i + 2].cp) + 1;
            consumed = 3;
        }
        if (medial < 0 || medial >= kMedialCount || final_slot < 0) {
            utf8::append(out, u[i].cp);
            ++i;
            continue;
        }
        const auto syllable = hangul_syllable_first +
                              static_cast<char32_t>(initial * kSyllablesPerInitial + medial * kFinalSlots + final_slot);
        utf8::append(out, syllable);
        i += consumed;
    }
    return out;
}

std::size_t longest_class_run(const NormalizedText& text) {
    std::size_t best = 0;
    std::size_t run = 0;
    int prev_class = -1;  // 0 vowel, 1 consonant, -1 none
    for (char c : text.normalized) {
        if (c < 'a' || c > 'z') {
            run = 0;
            prev_class = -1;
            continue;
        }
        const int cls = is_ascii_vowel(c) ? 0 : 1;
        run = (cls == prev_class) ? run + 1 : 1;
        prev_class = cls;
        if (run > best) best = run;
    }
    return best;
}

Lexicon Lexicon::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open lexicon: " + path.string());
    Lexicon lex;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::string word = utf8::trim(line);
        // Lookups see normalized (lowercase) tokens.
        for (char& c : word) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (!word.empty()) lex.words_.insert(std::move(word));
    }
    if (lex.empty()) throw IoFailure("lexicon is empty: " + path.string());
    return lex;
}

double valid_word_ratio(const NormalizedText& text, const Lexicon& lexicon) {
    std::size_t tokens = 0;
    std::size_t valid = 0;
    std::string_view rest = text.normalized;
    while (!rest.empty()) {
        const auto start = rest.find_first_not_of(' ');
        if (start == std::string_view::npos) break;
        rest.remove_prefix(start);
        const auto end = rest.find(' ');
        const std::string_view token = rest.substr(0, end);
        ++tokens;
        if (lexicon.contains(token)) ++valid;
        if (end == std::string_view::npos) break;
        rest.remove_prefix(end);
    }
    if (tokens == 0) return 0.0;
    return static_cast<double>(valid) / static_cast<double>(tokens);
}

double hangul_syllable_ratio(std::string_view text) {
    std::size_t complete = 0;
    std::size_t hangul = 0;
    for (char32_t cp : utf8::decode(text)) {
        if (is_hangul_syllable(cp)) {
            ++complete;
            ++hangul;
        } else if (is_standalone_jamo(cp)) {
            ++hangul;
        }
    }
    if (hangul == 0) return 1.0;
    return static_cast<double>(complete) / static_cast<double>(hangul);
}

std::size_t jamo_diversity(std::string_view text) {
    const std::u32string stream = decompose_jamo(text).jamo_stream();
    return std::set<char32_t>(stream.begin(), stream.end()).size();
}

}  // namespace respeval::textstat
