#pragma once

#include <cstddef>
#include <string_view>

namespace iocr {

// Edit-distance and similarity metrics used by the matcher and the spelling
// baselines. All of them count Unicode scalar values, not bytes, and all are
// pure functions.

// Minimum number of single-character insertions, deletions and substitutions
// transforming s1 into s2.
std::size_t levenshtein_distance(std::string_view s1, std::string_view s2);
std::size_t levenshtein_distance(std::u32string_view s1, std::u32string_view s2);

// 1 - dist/max(|s1|,|s2|), so 1.0 is an exact match and 0.0 is total
// dissimilarity. Two empty strings score 1.0.
double levenshtein_similarity(std::string_view s1, std::string_view s2);
double levenshtein_similarity(std::u32string_view s1, std::u32string_view s2);

// Jaro similarity with the standard matching window floor(max_len/2)-1.
double jaro(std::string_view s1, std::string_view s2);
double jaro(std::u32string_view s1, std::u32string_view s2);

// jaro + l * prefix_weight * (1 - jaro), where l is the shared prefix length
// capped at max_prefix. prefix_weight outside [0, 0.25] is rejected with
// std::invalid_argument.
double jaro_winkler(std::string_view s1, std::string_view s2,
                    double prefix_weight = 0.1, std::size_t max_prefix = 4);
double jaro_winkler(std::u32string_view s1, std::u32string_view s2,
                    double prefix_weight = 0.1, std::size_t max_prefix = 4);

}  // namespace iocr
