#include "iocr/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>

#include "iocr/errors.hpp"
#include "iocr/hash.hpp"
#include "iocr/similarity.hpp"
#include "iocr/text.hpp"

namespace iocr {

namespace {

constexpr std::string_view kHeaderKeyword = "#contest";
constexpr std::size_t kIdLengthMin = 2;
constexpr std::size_t kIdLengthMax = 6;
constexpr int kIdAttempts = 200;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Splits "<name>[-<id>]" into its parts. The id must be a non-empty digit
// suffix joined by a hyphen.
std::pair<std::string, std::optional<std::string>> split_id_suffix(std::string_view name_seg) {
    const std::size_t dash = name_seg.rfind('-');
    if (dash != std::string_view::npos && dash > 0) {
        const std::string_view suffix = name_seg.substr(dash + 1);
        if (all_digits(suffix)) {
            return {std::string(name_seg.substr(0, dash)), std::string(suffix)};
        }
    }
    return {std::string(name_seg), std::nullopt};
}

[[noreturn]] void reject(std::size_t line_no, std::string_view line, std::string_view why) {
    std::ostringstream msg;
    msg << "dictionary line " << line_no << ": " << why << ": '" << line << "'";
    throw ParseError(msg.str());
}

}  // namespace

std::size_t Lexicon::lines_per_ballot() const {
    std::size_t max_index = 0;
    for (const auto& e : entries) max_index = std::max(max_index, e.contest_index);
    return entries.empty() ? 0 : max_index + 1;
}

std::uint64_t Lexicon::fingerprint() const {
    std::uint64_t h = fnv1a64(with_ids ? "ids" : "plain");
    for (const auto& e : entries) {
        h = fnv1a64(e.canonical_line, h);
        h = fnv1a64("\n", h);
    }
    return h;
}

bool SeparationReport::any_flagged() const {
    return std::any_of(contests.begin(), contests.end(),
                       [](const ContestSeparation& c) { return c.flagged; });
}

std::string render_canonical_line(std::size_t contest_index, std::string_view title,
                                  std::string_view name,
                                  const std::optional<std::string>& candidate_id,
                                  std::string_view party) {
    std::string line = std::to_string(contest_index);
    line += ". ";
    line += title;
    line += ": ";
    line += name;
    if (candidate_id) {
        line += '-';
        line += *candidate_id;
    }
    line += " (";
    line += party;
    line += ')';
    return line;
}

Lexicon parse_dictionary(std::string_view text) {
    Lexicon lex;
    std::optional<std::size_t> contest;
    std::string title;
    std::size_t contest_entries = 0;
    std::set<std::string, std::less<>> seen_lines;
    std::set<std::size_t> seen_contests;
    std::optional<bool> ids_expected;
    std::size_t line_no = 0;

    const auto close_contest = [&](std::size_t at_line) {
        if (contest && contest_entries == 0) {
            std::ostringstream msg;
            msg << "dictionary line " << at_line << ": contest " << *contest << " ('"
                << title << "') has no candidates";
            throw ParseError(msg.str());
        }
    };

    for (std::string_view raw : split_lines(text)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '#') {
            if (line.substr(0, kHeaderKeyword.size()) != kHeaderKeyword) {
                reject(line_no, line, "malformed contest header");
            }
            std::string_view rest = trim(line.substr(kHeaderKeyword.size()));
            const std::size_t space = rest.find(' ');
            if (rest.empty() || space == std::string_view::npos) {
                reject(line_no, line, "malformed contest header (expected '#contest <index> <title>')");
            }
            const std::string_view index_text = rest.substr(0, space);
            if (!all_digits(index_text)) {
                reject(line_no, line, "malformed contest header (index is not a non-negative integer)");
            }
            const std::string_view new_title = trim(rest.substr(space + 1));
            if (new_title.empty()) {
                reject(line_no, line, "malformed contest header (empty title)");
            }
            close_contest(line_no);
            const std::size_t index = static_cast<std::size_t>(std::stoull(std::string(index_text)));
            if (!seen_contests.insert(index).second) {
                reject(line_no, line, "duplicate contest index");
            }
            contest = index;
            title = std::string(new_title);
            contest_entries = 0;
            continue;
        }

        if (!contest) {
            reject(line_no, line, "ballot line before any contest header");
        }
        if (!seen_lines.insert(std::string(line)).second) {
            reject(line_no, line, "duplicate ballot line");
        }

        const std::size_t colon = line.find(": ");
        if (colon == std::string_view::npos) {
            reject(line_no, line, "malformed ballot line (missing ': ' separator)");
        }
        std::string_view rest = line.substr(colon + 2);
        const std::size_t open = rest.rfind(" (");
        if (open == std::string_view::npos || rest.back() != ')') {
            reject(line_no, line, "malformed ballot line (missing '(<party>)' suffix)");
        }
        const std::string_view party = rest.substr(open + 2, rest.size() - open - 3);
        const std::string_view name_seg = trim(rest.substr(0, open));
        if (party.empty() || name_seg.empty()) {
            reject(line_no, line, "malformed ballot line (empty name or party)");
        }

        auto [name, id] = split_id_suffix(name_seg);
        const bool has_id = id.has_value();
        if (!ids_expected) {
            ids_expected = has_id;
        } else if (*ids_expected != has_id) {
            reject(line_no, line,
                   has_id ? "mixed candidate-id presence (this line has an id, earlier lines do not)"
                          : "mixed candidate-id presence (this line lacks an id, earlier lines have one)");
        }

        LexiconEntry entry;
        entry.contest_index = *contest;
        entry.contest_title = title;
        entry.candidate_name = std::move(name);
        entry.party = std::string(party);
        entry.candidate_id = std::move(id);
        entry.canonical_line = std::string(line);
        lex.entries.push_back(std::move(entry));
        ++contest_entries;
    }

    close_contest(line_no);
    if (lex.entries.empty()) {
        throw ParseError("no contests");
    }
    const std::size_t max_index = *std::max_element(seen_contests.begin(), seen_contests.end());
    if (max_index + 1 != seen_contests.size()) {
        std::ostringstream msg;
        msg << "contest indices are not contiguous: " << seen_contests.size()
            << " contests but highest index is " << max_index;
        throw ParseError(msg.str());
    }
    lex.with_ids = ids_expected.value_or(false);
    return lex;
}

std::string serialize_dictionary(const Lexicon& lex) {
    const std::size_t contests = lex.lines_per_ballot();
    std::string out;
    for (std::size_t c = 0; c < contests; ++c) {
        bool header_written = false;
        for (const auto& e : lex.entries) {
            if (e.contest_index != c) continue;
            if (!header_written) {
                out += kHeaderKeyword;
                out += ' ';
                out += std::to_string(c);
                out += ' ';
                out += e.contest_title;
                out += '\n';
                header_written = true;
            }
            out += e.canonical_line;
            out += '\n';
        }
    }
    return out;
}

ContestIndex build_contest_index(const Lexicon& lex) {
    ContestIndex index;
    index.groups.resize(lex.lines_per_ballot());
    for (const auto& e : lex.entries) {
        index.groups[e.contest_index].push_back(e);
        index.entries.push_back(e);
    }
    index.lexicon_fingerprint = lex.fingerprint();
    index.with_ids = lex.with_ids;
    return index;
}

Lexicon assign_candidate_ids(const Lexicon& lex, std::size_t d_min, std::uint64_t seed) {
    if (lex.with_ids) {
        throw std::invalid_argument("assign_candidate_ids: lexicon already carries ids");
    }
    if (d_min < 1) {
        throw std::invalid_argument("assign_candidate_ids: d_min must be >= 1");
    }

    Lexicon out = lex;
    out.with_ids = true;

    const std::size_t contests = lex.lines_per_ballot();
    for (std::size_t c = 0; c < contests; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < out.entries.size(); ++i) {
            if (out.entries[i].contest_index == c) members.push_back(i);
        }
        if (members.empty()) continue;

        std::mt19937_64 rng(mix_seed(seed, c));
        std::vector<std::size_t> base_lengths;
        for (std::size_t len = kIdLengthMin; len <= kIdLengthMax; ++len) {
            base_lengths.push_back(len);
        }

        bool assigned = false;
        for (int attempt = 0; attempt < kIdAttempts && !assigned; ++attempt) {
            std::shuffle(base_lengths.begin(), base_lengths.end(), rng);
            std::vector<std::string> ids;
            std::vector<std::string> lines;
            ids.reserve(members.size());
            for (std::size_t k = 0; k < members.size(); ++k) {
                const std::size_t len = base_lengths[k % base_lengths.size()];
                std::string id;
                for (std::size_t d = 0; d < len; ++d) {
                    id += static_cast<char>('0' + rng() % 10);
                }
                const auto& e = out.entries[members[k]];
                lines.push_back(render_canonical_line(c, e.contest_title, e.candidate_name,
                                                      id, e.party));
                ids.push_back(std::move(id));
            }
            bool separated = true;
            for (std::size_t a = 0; a < lines.size() && separated; ++a) {
                for (std::size_t b = a + 1; b < lines.size(); ++b) {
                    if (levenshtein_distance(lines[a], lines[b]) < d_min + 1) {
                        separated = false;
                        break;
                    }
                }
            }
            if (!separated) continue;
            for (std::size_t k = 0; k < members.size(); ++k) {
                out.entries[members[k]].candidate_id = ids[k];
                out.entries[members[k]].canonical_line = lines[k];
            }
            assigned = true;
        }
        if (!assigned) {
            std::ostringstream msg;
            msg << "assign_candidate_ids: contest " << c
                << " could not be separated to pairwise distance >= " << d_min + 1
                << " within " << kIdAttempts << " attempts";
            throw DataError(msg.str());
        }
    }
    return out;
}

SeparationReport validate_lexicon(const Lexicon& lex) {
    SeparationReport report;
    const ContestIndex index = build_contest_index(lex);
    for (std::size_t c = 0; c < index.groups.size(); ++c) {
        const auto& group = index.groups[c];
        ContestSeparation sep;
        sep.contest_index = c;
        sep.contest_title = group.empty() ? std::string() : group.front().contest_title;
        sep.entry_count = group.size();
        for (std::size_t a = 0; a < group.size(); ++a) {
            for (std::size_t b = a + 1; b < group.size(); ++b) {
                const std::size_t d = levenshtein_distance(group[a].canonical_line,
                                                           group[b].canonical_line);
                if (!sep.min_distance || d < *sep.min_distance) {
                    sep.min_distance = d;
                    sep.closest_a = group[a].canonical_line;
                    sep.closest_b = group[b].canonical_line;
                }
            }
        }
        sep.flagged = sep.min_distance && *sep.min_distance <= 1;
        report.contests.push_back(std::move(sep));
    }
    return report;
}

std::string separation_report_tsv(const SeparationReport& report) {
    std::ostringstream out;
    out << "contest\ttitle\tentries\tmin_distance\tclosest_a\tclosest_b\tstatus\n";
    for (const auto& c : report.contests) {
        out << c.contest_index << '\t' << c.contest_title << '\t' << c.entry_count << '\t';
        if (c.min_distance) {
            out << *c.min_distance;
        } else {
            out << "n/a";
        }
        out << '\t' << c.closest_a << '\t' << c.closest_b << '\t'
            << (c.flagged ? "flagged" : "ok") << '\n';
    }
    return out.str();
}

}  // namespace iocr
