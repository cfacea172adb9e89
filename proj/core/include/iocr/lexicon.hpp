#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace iocr {

// One legal printed ballot line. canonical_line is the exact text a correct
// ballot prints; the remaining fields are its parsed parts.
struct LexiconEntry {
    std::size_t contest_index = 0;
    std::string contest_title;
    std::string candidate_name;
    std::string party;
    std::optional<std::string> candidate_id;
    std::string canonical_line;

    bool operator==(const LexiconEntry&) const = default;
};

// All legal ballot lines of one election, in dictionary order. with_ids says
// whether this variant carries candidate ids ("Tom-1234" style suffixes).
struct Lexicon {
    std::vector<LexiconEntry> entries;
    bool with_ids = false;

    std::size_t lines_per_ballot() const;
    std::uint64_t fingerprint() const;

    bool operator==(const Lexicon&) const = default;
};

// Entries grouped per contest so the matcher only scores lines against the
// contest they belong to. Immutable after construction; safe to share.
struct ContestIndex {
    std::vector<std::vector<LexiconEntry>> groups;
    std::vector<LexiconEntry> entries;  // flattened, lexicon order
    std::uint64_t lexicon_fingerprint = 0;
    bool with_ids = false;

    std::size_t contest_count() const { return groups.size(); }
};

// Per-contest minimum pairwise Levenshtein separation. Contests whose closest
// pair is one edit apart (or identical) get flagged for id insertion.
struct ContestSeparation {
    std::size_t contest_index = 0;
    std::string contest_title;
    std::size_t entry_count = 0;
    std::optional<std::size_t> min_distance;  // nullopt when < 2 entries
    std::string closest_a;
    std::string closest_b;
    bool flagged = false;
};

struct SeparationReport {
    std::vector<ContestSeparation> contests;

    bool any_flagged() const;
};

// Renders the canonical ballot line format:
//   <contest_index>. <contest_title>: <candidate_name>[-<id>] (<party>)
std::string render_canonical_line(std::size_t contest_index, std::string_view title,
                                  std::string_view name,
                                  const std::optional<std::string>& candidate_id,
                                  std::string_view party);

// Dictionary file format: UTF-8, one `#contest <index> <title>` header per
// contest followed by one canonical ballot line per candidate. Blank lines
// are ignored. Rejects malformed headers, duplicate lines, non-contiguous
// contest indices, empty contests and mixed id presence, naming the offending
// line in the diagnostic.
Lexicon parse_dictionary(std::string_view text);

std::string serialize_dictionary(const Lexicon& lex);

ContestIndex build_contest_index(const Lexicon& lex);

// Gives every candidate a digit-string id such that, per contest, id lengths
// are pairwise distinct where possible and full canonical lines end up at
// pairwise Levenshtein distance >= d_min + 1. Deterministic under seed;
// throws DataError when a contest cannot be separated within the attempt
// budget.
Lexicon assign_candidate_ids(const Lexicon& lex, std::size_t d_min, std::uint64_t seed);

SeparationReport validate_lexicon(const Lexicon& lex);

// Tab-separated rendering used by `lexicon validate`.
std::string separation_report_tsv(const SeparationReport& report);

}  // namespace iocr
