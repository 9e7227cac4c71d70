#include "hkseq/bfile.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace hkseq {

namespace {

bool parse_index(const std::string& token, std::int64_t& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_value(const std::string& token, BigInt& out) {
    if (token.empty()) return false;
    return mpz_set_str(out.get_mpz_t(), token.c_str(), 10) == 0;
}

// First "A" + 6 digits in a comment line, e.g. "# A009545 fixture ...".
std::string find_sequence_id(const std::string& comment) {
    for (std::size_t i = 0; i + 6 < comment.size(); ++i) {
        if (comment[i] != 'A') continue;
        bool digits = true;
        for (std::size_t d = 1; d <= 6; ++d) {
            if (!std::isdigit(static_cast<unsigned char>(comment[i + d]))) {
                digits = false;
                break;
            }
        }
        if (digits) return comment.substr(i, 7);
    }
    return {};
}

}  // namespace

BFile parse_bfile(std::istream& in) {
    BFile bfile;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;  // blank
        if (line[start] == '#') {
            if (bfile.sequence_id.empty()) bfile.sequence_id = find_sequence_id(line);
            continue;
        }

        std::istringstream fields(line);
        std::string index_token, value_token, extra;
        fields >> index_token >> value_token;
        if (value_token.empty() || (fields >> extra)) {
            throw BFileParseError(line_number, "malformed line, expected `index value`: " + line);
        }

        std::int64_t index = 0;
        BigInt value;
        if (!parse_index(index_token, index)) {
            throw BFileParseError(line_number, "bad index '" + index_token + "'");
        }
        if (!parse_value(value_token, value)) {
            throw BFileParseError(line_number, "bad value '" + value_token + "'");
        }

        if (!bfile.entries.empty()) {
            const std::int64_t expected = bfile.entries.back().first + 1;
            if (index != expected) {
                throw BFileParseError(line_number,
                                      "gap at index " + std::to_string(expected) +
                                          " (got " + std::to_string(index) + ")");
            }
        }
        bfile.entries.emplace_back(index, std::move(value));
    }
    return bfile;
}

BFile parse_bfile(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_bfile(in);
}

BFile load_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read b-file: " + path);
    return parse_bfile(in);
}

std::string export_bfile(const SequenceRecord& record) {
    std::string out;
    for (std::size_t m = 0; m < record.values.size(); ++m) {
        out += std::to_string(m);
        out += ' ';
        out += record.values[m].get_str();
        out += '\n';
    }
    return out;
}

OeisReport oeis_check(const FamilyParams& params, int s, const BFile& bfile,
                      std::int64_t offset) {
    validate_index(params, s);
    if (bfile.empty()) throw std::invalid_argument("oeis_check: empty b-file");

    OeisReport report;
    report.sequence_id = bfile.sequence_id;

    const std::int64_t max_m = bfile.entries.back().first - offset;
    if (max_m < 0) return report;  // nothing to compare
    const SequenceRecord computed = sequence(params, s, max_m, Method::Recurrence);

    for (const auto& [index, value] : bfile.entries) {
        const std::int64_t m = index - offset;
        if (m < 0) continue;
        ++report.compared;
        if (computed.values[static_cast<std::size_t>(m)] == value) {
            ++report.matches;
        } else {
            report.mismatch = true;
            report.mismatch_m = m;
            report.expected = value;
            report.actual = computed.values[static_cast<std::size_t>(m)];
            break;
        }
    }
    return report;
}

}  // namespace hkseq
