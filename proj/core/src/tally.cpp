#include "iocr/tally.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "iocr/errors.hpp"

namespace iocr {

namespace {

using CountMap = std::map<std::pair<std::size_t, std::string>, std::uint64_t>;

void add_into(CountMap& into, const CountMap& from) {
    for (const auto& [key, value] : from) into[key] += value;
}

std::uint64_t map_total(const CountMap& m) {
    std::uint64_t total = 0;
    for (const auto& [key, value] : m) total += value;
    return total;
}

// count descending, then line ascending
std::vector<std::pair<std::string, std::uint64_t>> ordered_rows(const CountMap& m,
                                                                std::size_t contest) {
    std::vector<std::pair<std::string, std::uint64_t>> rows;
    for (const auto& [key, value] : m) {
        if (key.first == contest) rows.emplace_back(key.second, value);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return rows;
}

}  // namespace

std::uint64_t Tally::total_decisions() const {
    return map_total(counts) + map_total(writeins) + confusion_count + unreadable_count;
}

Tally make_tally(const ContestIndex& index) {
    Tally t;
    t.lexicon_fingerprint = index.lexicon_fingerprint;
    return t;
}

Tally accumulate(Tally t, std::span<const MatchDecision> decisions) {
    for (const MatchDecision& d : decisions) {
        switch (d.kind) {
            case DecisionKind::Confident:
                ++t.counts[{d.matched_entry->contest_index, d.matched_entry->canonical_line}];
                break;
            case DecisionKind::WriteIn:
                ++t.writeins[{d.line.line_position, d.captured_text.value_or(d.line.cleaned_text)}];
                break;
            case DecisionKind::Confusion:
                ++t.confusion_count;
                break;
            case DecisionKind::Unreadable:
                ++t.unreadable_count;
                break;
        }
    }
    return t;
}

Tally merge(const Tally& a, const Tally& b) {
    if (a.lexicon_fingerprint != 0 && b.lexicon_fingerprint != 0 &&
        a.lexicon_fingerprint != b.lexicon_fingerprint) {
        throw MergeError("merge: tallies were built against different lexicons");
    }
    Tally out = a;
    out.lexicon_fingerprint =
        a.lexicon_fingerprint != 0 ? a.lexicon_fingerprint : b.lexicon_fingerprint;
    add_into(out.counts, b.counts);
    add_into(out.writeins, b.writeins);
    out.confusion_count += b.confusion_count;
    out.unreadable_count += b.unreadable_count;
    return out;
}

std::string report(const Tally& t) {
    std::ostringstream out;
    std::vector<std::size_t> contests;
    for (const auto& [key, value] : t.counts) contests.push_back(key.first);
    for (const auto& [key, value] : t.writeins) contests.push_back(key.first);
    std::sort(contests.begin(), contests.end());
    contests.erase(std::unique(contests.begin(), contests.end()), contests.end());

    for (std::size_t contest : contests) {
        out << "contest\t" << contest << '\n';
        for (const auto& [line, count] : ordered_rows(t.counts, contest)) {
            out << count << '\t' << line << '\n';
        }
        for (const auto& [text, count] : ordered_rows(t.writeins, contest)) {
            out << count << "\twritein\t" << text << '\n';
        }
    }
    out << "confusion\t" << t.confusion_count << '\n';
    out << "unreadable\t" << t.unreadable_count << '\n';
    out << "total\t" << t.total_decisions() << '\n';
    return out.str();
}

std::string ground_truth_to_json(const GroundTruth& truth) {
    nlohmann::json j;
    j["lines_per_ballot"] = truth.lines_per_ballot;
    nlohmann::json ballots = nlohmann::json::object();
    for (const auto& [id, lines] : truth.ballots) {
        nlohmann::json rows = nlohmann::json::array();
        for (const ExpectedLine& line : lines) {
            rows.push_back({{"writein", line.is_writein}, {"text", line.text}});
        }
        ballots[id] = std::move(rows);
    }
    j["ballots"] = std::move(ballots);
    return j.dump(2) + "\n";
}

GroundTruth ground_truth_from_json(std::string_view json_text) {
    GroundTruth truth;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
        truth.lines_per_ballot = j.at("lines_per_ballot").get<std::size_t>();
        for (const auto& [id, rows] : j.at("ballots").items()) {
            std::vector<ExpectedLine>& lines = truth.ballots[id];
            for (const auto& row : rows) {
                ExpectedLine line;
                line.is_writein = row.at("writein").get<bool>();
                line.text = row.at("text").get<std::string>();
                lines.push_back(std::move(line));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ground truth manifest: ") + e.what());
    }
    return truth;
}

namespace {

bool decision_correct(const MatchDecision& d, const ExpectedLine& expected,
                      bool adjudicate_confusions) {
    if (expected.is_writein) {
        return d.kind == DecisionKind::WriteIn && d.captured_text == expected.text;
    }
    if (d.kind == DecisionKind::Confident) {
        return d.matched_entry && d.matched_entry->canonical_line == expected.text;
    }
    if (adjudicate_confusions && d.kind == DecisionKind::Confusion) {
        return std::any_of(d.candidates.begin(), d.candidates.end(),
                           [&](const ScoredCandidate& c) {
                               return c.entry.canonical_line == expected.text;
                           });
    }
    return false;
}

}  // namespace

AccuracyReport score(const BallotDecisions& decisions, const GroundTruth& truth,
                     bool adjudicate_confusions) {
    AccuracyReport rep;
    for (const auto& [ballot_id, ballot_decisions] : decisions) {
        const auto truth_it = truth.ballots.find(ballot_id);
        if (truth_it == truth.ballots.end()) {
            throw DataError("score: unknown ballot id '" + ballot_id + "'");
        }
        const std::vector<ExpectedLine>& expected = truth_it->second;

        std::uint64_t correct = 0;
        for (std::size_t pos = 0; pos < expected.size(); ++pos) {
            const auto decision_it =
                std::find_if(ballot_decisions.begin(), ballot_decisions.end(),
                             [pos](const MatchDecision& d) { return d.line.line_position == pos; });
            if (decision_it != ballot_decisions.end()) {
                if (decision_correct(*decision_it, expected[pos], adjudicate_confusions)) ++correct;
                if (decision_it->kind == DecisionKind::Confusion) ++rep.confusion_lines;
            }
        }
        rep.total_lines += expected.size();
        rep.correct_lines += correct;
        rep.ballot_ids.push_back(ballot_id);
        rep.per_ballot_accuracy.push_back(
            expected.empty() ? 1.0
                             : static_cast<double>(correct) / static_cast<double>(expected.size()));
    }
    rep.line_accuracy = rep.total_lines == 0
                            ? 0.0
                            : static_cast<double>(rep.correct_lines) /
                                  static_cast<double>(rep.total_lines);
    return rep;
}

AccuracyReport score_exact(const std::map<std::string, std::vector<std::string>>& ballot_lines,
                           const GroundTruth& truth) {
    AccuracyReport rep;
    for (const auto& [ballot_id, lines] : ballot_lines) {
        const auto truth_it = truth.ballots.find(ballot_id);
        if (truth_it == truth.ballots.end()) {
            throw DataError("score_exact: unknown ballot id '" + ballot_id + "'");
        }
        const std::vector<ExpectedLine>& expected = truth_it->second;
        std::uint64_t correct = 0;
        for (std::size_t pos = 0; pos < expected.size(); ++pos) {
            if (pos < lines.size() && lines[pos] == expected[pos].text) ++correct;
        }
        rep.total_lines += expected.size();
        rep.correct_lines += correct;
        rep.ballot_ids.push_back(ballot_id);
        rep.per_ballot_accuracy.push_back(
            expected.empty() ? 1.0
                             : static_cast<double>(correct) / static_cast<double>(expected.size()));
    }
    rep.line_accuracy = rep.total_lines == 0
                            ? 0.0
                            : static_cast<double>(rep.correct_lines) /
                                  static_cast<double>(rep.total_lines);
    return rep;
}

std::string accuracy_report_tsv(const AccuracyReport& report) {
    char accuracy[32];
    std::snprintf(accuracy, sizeof(accuracy), "%.6f", report.line_accuracy);
    std::ostringstream out;
    out << "total_lines\t" << report.total_lines << '\n';
    out << "correct_lines\t" << report.correct_lines << '\n';
    out << "confusion_lines\t" << report.confusion_lines << '\n';
    out << "line_accuracy\t" << accuracy << '\n';
    return out.str();
}

std::string accuracy_report_to_json(const AccuracyReport& report) {
    nlohmann::json j;
    j["total_lines"] = report.total_lines;
    j["correct_lines"] = report.correct_lines;
    j["confusion_lines"] = report.confusion_lines;
    j["line_accuracy"] = report.line_accuracy;
    j["ballot_ids"] = report.ballot_ids;
    j["per_ballot_accuracy"] = report.per_ballot_accuracy;
    return j.dump(2) + "\n";
}

AccuracyReport accuracy_report_from_json(std::string_view json_text) {
    AccuracyReport rep;
    try {
        const nlohmann::json j = nlohmann::json::parse(json_text);
        rep.total_lines = j.at("total_lines").get<std::uint64_t>();
        rep.correct_lines = j.at("correct_lines").get<std::uint64_t>();
        rep.confusion_lines = j.at("confusion_lines").get<std::uint64_t>();
        rep.line_accuracy = j.at("line_accuracy").get<double>();
        rep.ballot_ids = j.at("ballot_ids").get<std::vector<std::string>>();
        rep.per_ballot_accuracy = j.at("per_ballot_accuracy").get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("accuracy report: ") + e.what());
    }
    return rep;
}

}  // namespace iocr
