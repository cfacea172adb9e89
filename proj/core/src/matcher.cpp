#include "iocr/matcher.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "iocr/errors.hpp"
#include "iocr/similarity.hpp"
#include "iocr/text.hpp"
#include "iocr/unicode.hpp"

namespace iocr {

namespace {

std::string prepare(std::string_view text, const MatcherConfig& cfg) {
    std::string out(text);
    if (cfg.collapse_whitespace) out = collapse_spaces(out);
    if (cfg.case_fold) out = ascii_fold(out);
    return out;
}

std::string escape_field(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '\t': out += "\\t"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            default: out += c;
        }
    }
    return out;
}

std::string format_similarity(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

std::vector<BallotLine> clean_lines_unchecked(std::string_view raw_ocr_text,
                                              std::string_view ballot_id,
                                              const MatcherConfig& cfg) {
    std::vector<BallotLine> lines;
    for (std::string_view raw : split_lines(raw_ocr_text)) {
        const std::string_view content = trim(raw);
        if (content.empty()) continue;
        if (count_alnum(content) < cfg.garbage_min_alnum) continue;
        BallotLine line;
        line.ballot_id = std::string(ballot_id);
        line.line_position = lines.size();
        line.raw_text = std::string(raw);
        line.cleaned_text = std::string(content);
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace

std::string_view to_string(DecisionKind kind) {
    switch (kind) {
        case DecisionKind::Confident: return "Confident";
        case DecisionKind::Confusion: return "Confusion";
        case DecisionKind::WriteIn: return "WriteIn";
        case DecisionKind::Unreadable: return "Unreadable";
    }
    return "Unknown";
}

std::string_view to_string(ConfusionReason reason) {
    switch (reason) {
        case ConfusionReason::MetricDisagreement: return "MetricDisagreement";
        case ConfusionReason::LevenshteinTie: return "LevenshteinTie";
        case ConfusionReason::JaroWinklerTie: return "JaroWinklerTie";
    }
    return "Unknown";
}

std::vector<BallotLine> clean_lines(std::string_view raw_ocr_text, std::string_view ballot_id,
                                    std::size_t lines_per_ballot, const MatcherConfig& cfg) {
    std::vector<BallotLine> lines = clean_lines_unchecked(raw_ocr_text, ballot_id, cfg);
    if (cfg.position_keyed && lines.size() != lines_per_ballot) {
        std::ostringstream msg;
        msg << "ballot '" << ballot_id << "': expected " << lines_per_ballot
            << " content lines, found " << lines.size();
        throw StructuralError(std::string(ballot_id), msg.str());
    }
    return lines;
}

MatchDecision match_line(const BallotLine& line, const ContestIndex& index,
                         const MatcherConfig& cfg) {
    const std::vector<LexiconEntry>* group = nullptr;
    if (cfg.position_keyed) {
        if (line.line_position >= index.groups.size()) {
            std::ostringstream msg;
            msg << "no contest group for line position " << line.line_position;
            throw ConfigError(msg.str());
        }
        group = &index.groups[line.line_position];
    } else {
        group = &index.entries;
    }
    if (group->empty()) {
        std::ostringstream msg;
        msg << "empty contest group for line position " << line.line_position;
        throw ConfigError(msg.str());
    }

    const std::u32string query = decode_utf8(prepare(line.cleaned_text, cfg));

    std::vector<std::size_t> distances(group->size());
    std::vector<double> lev_sims(group->size());
    std::vector<double> jw_sims(group->size());
    for (std::size_t i = 0; i < group->size(); ++i) {
        const std::u32string target = decode_utf8(prepare((*group)[i].canonical_line, cfg));
        distances[i] = levenshtein_distance(query, target);
        lev_sims[i] = levenshtein_similarity(query, target);
        jw_sims[i] = jaro_winkler(query, target, cfg.prefix_weight, cfg.max_prefix);
    }

    const auto candidate = [&](std::size_t i) {
        return ScoredCandidate{(*group)[i], lev_sims[i], jw_sims[i]};
    };

    MatchDecision decision;
    decision.line = line;

    const double max_lev_sim = *std::max_element(lev_sims.begin(), lev_sims.end());
    const double max_jw = *std::max_element(jw_sims.begin(), jw_sims.end());
    if (max_lev_sim < cfg.writein_threshold_lev && max_jw < cfg.writein_threshold_jw) {
        decision.kind = DecisionKind::WriteIn;
        decision.captured_text = line.cleaned_text;
        decision.candidates.push_back(candidate(static_cast<std::size_t>(
            std::min_element(distances.begin(), distances.end()) - distances.begin())));
        return decision;
    }

    const std::size_t min_dist = *std::min_element(distances.begin(), distances.end());
    std::vector<std::size_t> at_min_dist;
    for (std::size_t i = 0; i < distances.size(); ++i) {
        if (distances[i] == min_dist) at_min_dist.push_back(i);
    }
    if (at_min_dist.size() >= 2) {
        decision.kind = DecisionKind::Confusion;
        decision.reason = ConfusionReason::LevenshteinTie;
        for (std::size_t i : at_min_dist) decision.candidates.push_back(candidate(i));
        return decision;
    }

    std::vector<std::size_t> at_max_jw;
    for (std::size_t i = 0; i < jw_sims.size(); ++i) {
        if (jw_sims[i] == max_jw) at_max_jw.push_back(i);
    }
    if (at_max_jw.size() >= 2) {
        decision.kind = DecisionKind::Confusion;
        decision.reason = ConfusionReason::JaroWinklerTie;
        for (std::size_t i : at_max_jw) decision.candidates.push_back(candidate(i));
        return decision;
    }

    const std::size_t best_lev = at_min_dist.front();
    const std::size_t best_jw = at_max_jw.front();
    if (best_lev != best_jw) {
        decision.kind = DecisionKind::Confusion;
        decision.reason = ConfusionReason::MetricDisagreement;
        decision.candidates.push_back(candidate(best_lev));
        decision.candidates.push_back(candidate(best_jw));
        return decision;
    }

    decision.kind = DecisionKind::Confident;
    decision.matched_entry = (*group)[best_lev];
    decision.candidates.push_back(candidate(best_lev));
    return decision;
}

std::vector<MatchDecision> resolve_ballot(std::string_view raw_ocr_text,
                                          std::string_view ballot_id,
                                          const ContestIndex& index,
                                          const MatcherConfig& cfg) {
    const std::size_t lines_per_ballot = index.groups.size();
    std::vector<BallotLine> lines;
    try {
        lines = clean_lines(raw_ocr_text, ballot_id, lines_per_ballot, cfg);
    } catch (const StructuralError& err) {
        // The ballot cannot be tallied; preserve whatever survived cleaning so
        // the review log still shows the raw content.
        std::vector<BallotLine> survivors = clean_lines_unchecked(raw_ocr_text, ballot_id, cfg);
        std::vector<MatchDecision> decisions;
        for (std::size_t pos = 0; pos < lines_per_ballot; ++pos) {
            MatchDecision decision;
            decision.kind = DecisionKind::Unreadable;
            decision.line.ballot_id = std::string(ballot_id);
            decision.line.line_position = pos;
            if (pos < survivors.size()) {
                decision.line.raw_text = survivors[pos].raw_text;
                decision.line.cleaned_text = survivors[pos].cleaned_text;
            }
            decision.captured_text = err.what();
            decisions.push_back(std::move(decision));
        }
        return decisions;
    }

    std::vector<MatchDecision> decisions;
    decisions.reserve(lines.size());
    for (const BallotLine& line : lines) {
        decisions.push_back(match_line(line, index, cfg));
    }
    return decisions;
}

void write_confusion_log(std::ostream& out, std::span<const MatchDecision> decisions) {
    for (const MatchDecision& d : decisions) {
        if (d.kind == DecisionKind::Confident) continue;
        out << escape_field(d.line.ballot_id) << '\t' << d.line.line_position << '\t'
            << escape_field(d.line.raw_text) << '\t';
        if (d.reason) {
            out << to_string(*d.reason);
        } else {
            out << to_string(d.kind);
        }
        for (const ScoredCandidate& c : d.candidates) {
            out << '\t' << escape_field(c.entry.canonical_line) << '\t'
                << format_similarity(c.lev_similarity) << '\t'
                << format_similarity(c.jw_similarity);
        }
        out << '\n';
    }
}

}  // namespace iocr
