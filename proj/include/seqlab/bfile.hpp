#pragma once

/**
 * @file bfile.hpp
 * @brief OEIS b-files: one "index value" pair per line.
 *
 * Lines starting with '#' and blank lines are ignored. Indices must be
 * strictly increasing.
 */

#include "seqlab/bigrational.hpp"
#include "seqlab/cfinite.hpp"

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqlab {

class BFileError : public std::runtime_error {
public:
    BFileError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct BFileEntry {
    long index;
    BigInt value;
};

struct BFile {
    std::vector<BFileEntry> entries;
};

BFile parse_bfile(std::istream& in);
/// Throws std::runtime_error if the file cannot be opened.
BFile read_bfile(const std::string& path);

struct BFileMismatch {
    long index;
    BigInt file_value;
    BigRational expected;
};

struct BFileComparison {
    std::size_t checked = 0;
    std::optional<BFileMismatch> first_mismatch;

    bool ok() const { return !first_mismatch; }
};

/// Compares entry (n, v) against term(s, n + shift).
BFileComparison compare_bfile(const BFile& file, const CFiniteSequence& s, long shift = 0);

}  // namespace seqlab
