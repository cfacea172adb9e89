#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iocr/lexicon.hpp"

namespace iocr {

// One cleaned OCR output line, keyed to its position on the ballot.
struct BallotLine {
    std::string ballot_id;
    std::size_t line_position = 0;
    std::string raw_text;
    std::string cleaned_text;
};

struct MatcherConfig {
    double prefix_weight = 0.1;
    std::size_t max_prefix = 4;
    // A line is a write-in only when BOTH metrics score every entry below
    // these thresholds. This check runs before the tie checks: when nothing
    // in the contest is remotely close under either metric, tie-breaking
    // among far-away entries is meaningless.
    double writein_threshold_lev = 0.65;
    double writein_threshold_jw = 0.75;
    // Lines with fewer alphanumeric characters than this are dropped as OCR
    // garbage during cleaning.
    std::size_t garbage_min_alnum = 3;
    bool case_fold = false;
    // Routes line i to contest group i (fixed printed layout). When false the
    // matcher scans every entry and derives the contest from the winner.
    bool position_keyed = true;
    bool collapse_whitespace = false;
};

enum class DecisionKind { Confident, Confusion, WriteIn, Unreadable };

enum class ConfusionReason { MetricDisagreement, LevenshteinTie, JaroWinklerTie };

std::string_view to_string(DecisionKind kind);
std::string_view to_string(ConfusionReason reason);

struct ScoredCandidate {
    LexiconEntry entry;
    double lev_similarity = 0.0;
    double jw_similarity = 0.0;
};

struct MatchDecision {
    DecisionKind kind = DecisionKind::Unreadable;
    BallotLine line;
    std::optional<LexiconEntry> matched_entry;      // present iff Confident
    std::vector<ScoredCandidate> candidates;        // >= 2 for Confusion
    std::optional<ConfusionReason> reason;          // present iff Confusion
    std::optional<std::string> captured_text;       // write-in name / raw context
};

// Drops blank and garbage lines, trims whitespace and assigns consecutive
// line positions. Throws StructuralError when position keying is on and the
// surviving count differs from lines_per_ballot.
std::vector<BallotLine> clean_lines(std::string_view raw_ocr_text, std::string_view ballot_id,
                                    std::size_t lines_per_ballot, const MatcherConfig& cfg);

// Scores one line against its contest group with both metrics and routes it:
//   1. every entry below both write-in thresholds       -> WriteIn
//   2. two or more entries at the minimum Levenshtein   -> Confusion
//   3. two or more entries at the maximum Jaro-Winkler  -> Confusion
//   4. the two metrics pick different entries           -> Confusion
//   5. otherwise                                        -> Confident
MatchDecision match_line(const BallotLine& line, const ContestIndex& index,
                         const MatcherConfig& cfg);

// clean_lines then match_line, in line order. A structural cleaning failure
// yields a full set of Unreadable decisions so no ballot drops silently.
std::vector<MatchDecision> resolve_ballot(std::string_view raw_ocr_text,
                                          std::string_view ballot_id,
                                          const ContestIndex& index,
                                          const MatcherConfig& cfg);

// Appends one tab-separated record per non-Confident decision:
//   ballot_id  line_position  raw_text  reason  [candidate  lev_sim  jw_sim]...
// Similarities are printed with six decimals; tabs/newlines inside text
// fields are escaped as \t and \n.
void write_confusion_log(std::ostream& out, std::span<const MatchDecision> decisions);

}  // namespace iocr
