#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iocr/matcher.hpp"

namespace iocr {

// Per-candidate counts keyed by (contest_index, canonical_line), write-in
// counts keyed by (contest_index, captured_text), plus review counters.
// (Tally, merge, empty) forms a commutative monoid.
struct Tally {
    std::map<std::pair<std::size_t, std::string>, std::uint64_t> counts;
    std::map<std::pair<std::size_t, std::string>, std::uint64_t> writeins;
    std::uint64_t confusion_count = 0;
    std::uint64_t unreadable_count = 0;
    // 0 means "not yet bound to a lexicon" (the merge identity).
    std::uint64_t lexicon_fingerprint = 0;

    std::uint64_t total_decisions() const;

    bool operator==(const Tally&) const = default;
};

Tally make_tally(const ContestIndex& index);

Tally accumulate(Tally t, std::span<const MatchDecision> decisions);

// Pointwise sum. Throws MergeError when both sides are bound to different
// lexicons.
Tally merge(const Tally& a, const Tally& b);

// Deterministic results text: contests ascending, then count descending, then
// lexicographic; write-ins follow the regular counts of their contest;
// confusion/unreadable/total close the report.
std::string report(const Tally& t);

// What each ballot line should have resolved to. For write-in lines, text is
// the expected captured write-in name.
struct ExpectedLine {
    bool is_writein = false;
    std::string text;

    bool operator==(const ExpectedLine&) const = default;
};

struct GroundTruth {
    std::size_t lines_per_ballot = 10;
    std::map<std::string, std::vector<ExpectedLine>> ballots;

    bool operator==(const GroundTruth&) const = default;
};

std::string ground_truth_to_json(const GroundTruth& truth);
GroundTruth ground_truth_from_json(std::string_view json_text);

struct AccuracyReport {
    std::uint64_t total_lines = 0;
    std::uint64_t correct_lines = 0;
    std::uint64_t confusion_lines = 0;
    double line_accuracy = 0.0;
    std::vector<std::string> ballot_ids;        // sorted; aligns with per_ballot_accuracy
    std::vector<double> per_ballot_accuracy;
};

using BallotDecisions = std::map<std::string, std::vector<MatchDecision>>;

// A line is correct iff its decision is Confident on the expected entry, or
// WriteIn with the expected captured text. Confusion and Unreadable lines
// count as incorrect (they await human review); adjudicate_confusions instead
// credits a Confusion whose candidate list contains the expected entry.
AccuracyReport score(const BallotDecisions& decisions, const GroundTruth& truth,
                     bool adjudicate_confusions = false);

// Raw-OCR baseline: a line is correct only via exact string equality with the
// expected text, position by position.
AccuracyReport score_exact(const std::map<std::string, std::vector<std::string>>& ballot_lines,
                           const GroundTruth& truth);

std::string accuracy_report_tsv(const AccuracyReport& report);
std::string accuracy_report_to_json(const AccuracyReport& report);
AccuracyReport accuracy_report_from_json(std::string_view json_text);

}  // namespace iocr
