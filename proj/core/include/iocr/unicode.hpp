#pragma once

#include <string>
#include <string_view>

namespace iocr {

// Decodes UTF-8 into Unicode scalar values. Metrics and the noise channel
// operate on scalars, never on raw bytes. Invalid bytes are kept as single
// code points so noisy OCR output round-trips instead of throwing.
std::u32string decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view scalars);

}  // namespace iocr
