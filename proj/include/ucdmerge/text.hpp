#pragma once

#include <string>
#include <string_view>

namespace ucdmerge {

// Decodes UTF-8 into code points. Invalid byte sequences decode to U+FFFD
// so that every byte string has a well-defined decoding.
std::u32string decode_utf8(std::string_view text);

// Decode plus ASCII/Latin-1 lowercasing. All label comparisons in the
// similarity kernels and the lexicon go through this fold.
std::u32string casefold_utf8(std::string_view text);

}  // namespace ucdmerge
