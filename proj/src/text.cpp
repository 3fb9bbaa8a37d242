#include "ucdmerge/text.hpp"

namespace ucdmerge {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

// Returns the code point starting at text[i] and advances i past it.
char32_t next_code_point(std::string_view text, std::size_t& i) {
    const auto byte = [&](std::size_t k) -> unsigned char {
        return static_cast<unsigned char>(text[k]);
    };
    const unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int extra = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        extra = 1;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        extra = 2;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        extra = 3;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kReplacement;
    }
    if (i + extra >= text.size()) {
        ++i;
        return kReplacement;
    }
    for (int k = 1; k <= extra; ++k) {
        const unsigned char bk = byte(i + k);
        if ((bk & 0xC0) != 0x80) {
            ++i;
            return kReplacement;
        }
        cp = (cp << 6) | (bk & 0x3F);
    }
    i += 1 + extra;
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return kReplacement;
    // Reject overlong encodings.
    if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) ||
        (extra == 3 && cp < 0x10000)) {
        return kReplacement;
    }
    return cp;
}

char32_t fold_char(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    // Latin-1 supplement uppercase letters (except the multiplication sign).
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    return cp;
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
    std::u32string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) out.push_back(next_code_point(text, i));
    return out;
}

std::u32string casefold_utf8(std::string_view text) {
    std::u32string out = decode_utf8(text);
    for (char32_t& cp : out) cp = fold_char(cp);
    return out;
}

}  // namespace ucdmerge
