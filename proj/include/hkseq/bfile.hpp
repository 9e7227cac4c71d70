#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hkseq/bigint.hpp"
#include "hkseq/sequence.hpp"

namespace hkseq {

/**
 * @file bfile.hpp
 * @brief OEIS b-file import/export and sequence cross-checking.
 *
 * A b-file is plain ASCII, one `index value` pair per line, indices
 * contiguous and increasing by one. Lines starting with `#` and blank
 * lines are ignored on input.
 */

struct BFile {
    std::string sequence_id;  // "A" + 6 digits when known, else empty
    std::vector<std::pair<std::int64_t, BigInt>> entries;

    bool empty() const { return entries.empty(); }
};

class BFileParseError : public std::runtime_error {
public:
    BFileParseError(std::size_t line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line_number_(line_number) {}

    std::size_t line_number() const { return line_number_; }

private:
    std::size_t line_number_;
};

// Throws BFileParseError on a malformed line or non-contiguous indices.
// A sequence id found in a header comment is carried into the result.
BFile parse_bfile(std::istream& in);
BFile parse_bfile(std::string_view text);

// Convenience; throws std::runtime_error when the file cannot be read.
BFile load_bfile(const std::string& path);

// `m value` lines, m starting at 0, each line newline-terminated, no
// trailing blank line.
std::string export_bfile(const SequenceRecord& record);

struct OeisReport {
    std::string sequence_id;
    std::size_t compared = 0;          // entries with m = index - offset >= 0
    std::size_t matches = 0;
    bool mismatch = false;             // comparison stops at the first one
    std::int64_t mismatch_m = -1;
    BigInt expected;                   // b-file side of the first mismatch
    BigInt actual;                     // computed side

    bool full_match() const { return !mismatch && compared > 0; }
};

// Compares F_s(m,n) against the b-file value at index m + offset for every
// available m. A mismatch is a report outcome, not an error. Throws
// std::invalid_argument on an empty b-file.
OeisReport oeis_check(const FamilyParams& params, int s, const BFile& bfile,
                      std::int64_t offset);

}  // namespace hkseq
