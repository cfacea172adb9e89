#include "iocr/similarity.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "iocr/unicode.hpp"

namespace iocr {

std::size_t levenshtein_distance(std::u32string_view s1, std::u32string_view s2) {
    const std::size_t len1 = s1.size();
    const std::size_t len2 = s2.size();
    if (len1 == 0) return len2;
    if (len2 == 0) return len1;

    std::vector<std::size_t> prev(len2 + 1);
    std::vector<std::size_t> cur(len2 + 1);
    for (std::size_t j = 0; j <= len2; ++j) prev[j] = j;

    for (std::size_t i = 0; i < len1; ++i) {
        cur[0] = i + 1;
        for (std::size_t j = 0; j < len2; ++j) {
            const std::size_t sub = prev[j] + (s1[i] == s2[j] ? 0 : 1);
            cur[j + 1] = std::min({cur[j] + 1, prev[j + 1] + 1, sub});
        }
        prev.swap(cur);
    }
    return prev[len2];
}

std::size_t levenshtein_distance(std::string_view s1, std::string_view s2) {
    return levenshtein_distance(std::u32string_view(decode_utf8(s1)),
                                std::u32string_view(decode_utf8(s2)));
}

double levenshtein_similarity(std::u32string_view s1, std::u32string_view s2) {
    const std::size_t max_len = std::max(s1.size(), s2.size());
    if (max_len == 0) return 1.0;
    return 1.0 - static_cast<double>(levenshtein_distance(s1, s2)) /
                     static_cast<double>(max_len);
}

double levenshtein_similarity(std::string_view s1, std::string_view s2) {
    return levenshtein_similarity(std::u32string_view(decode_utf8(s1)),
                                  std::u32string_view(decode_utf8(s2)));
}

double jaro(std::u32string_view s1, std::u32string_view s2) {
    if (s1 == s2) return 1.0;
    if (s1.empty() || s2.empty()) return 0.0;

    const std::size_t len1 = s1.size();
    const std::size_t len2 = s2.size();
    const std::size_t max_len = std::max(len1, len2);
    const std::size_t window = max_len / 2 >= 1 ? max_len / 2 - 1 : 0;

    std::vector<char> matched1(len1, 0);
    std::vector<char> matched2(len2, 0);
    std::size_t matches = 0;
    for (std::size_t i = 0; i < len1; ++i) {
        const std::size_t lo = i > window ? i - window : 0;
        const std::size_t hi = std::min(len2, i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (!matched2[j] && s1[i] == s2[j]) {
                matched1[i] = 1;
                matched2[j] = 1;
                ++matches;
                break;
            }
        }
    }
    if (matches == 0) return 0.0;

    std::size_t half_transpositions = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < len1; ++i) {
        if (!matched1[i]) continue;
        while (!matched2[j]) ++j;
        if (s1[i] != s2[j]) ++half_transpositions;
        ++j;
    }
    const double m = static_cast<double>(matches);
    const double t = static_cast<double>(half_transpositions) / 2.0;
    return (m / static_cast<double>(len1) + m / static_cast<double>(len2) +
            (m - t) / m) /
           3.0;
}

double jaro(std::string_view s1, std::string_view s2) {
    return jaro(std::u32string_view(decode_utf8(s1)),
                std::u32string_view(decode_utf8(s2)));
}

double jaro_winkler(std::u32string_view s1, std::u32string_view s2,
                    double prefix_weight, std::size_t max_prefix) {
    if (prefix_weight < 0.0 || prefix_weight > 0.25) {
        throw std::invalid_argument("jaro_winkler: prefix_weight must be in [0, 0.25]");
    }
    const double base = jaro(s1, s2);
    std::size_t prefix = 0;
    const std::size_t limit = std::min({s1.size(), s2.size(), max_prefix});
    while (prefix < limit && s1[prefix] == s2[prefix]) ++prefix;
    return base + static_cast<double>(prefix) * prefix_weight * (1.0 - base);
}

double jaro_winkler(std::string_view s1, std::string_view s2,
                    double prefix_weight, std::size_t max_prefix) {
    return jaro_winkler(std::u32string_view(decode_utf8(s1)),
                        std::u32string_view(decode_utf8(s2)), prefix_weight,
                        max_prefix);
}

}  // namespace iocr
