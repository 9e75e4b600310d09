#include "seqlab/bfile.hpp"

#include <fstream>
#include <sstream>

namespace seqlab {

namespace {

constexpr long kMaxIndex = 1000000;

}  // namespace

BFileError::BFileError(std::size_t line, const std::string& what)
    : std::runtime_error("b-file line " + std::to_string(line) + ": " + what), line_(line) {}

BFile parse_bfile(std::istream& in) {
    BFile file;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream fields(line);
        std::string idx_text;
        std::string val_text;
        if (!(fields >> idx_text) || idx_text[0] == '#') continue;
        if (!(fields >> val_text)) throw BFileError(lineno, "missing value");
        std::string extra;
        if (fields >> extra) throw BFileError(lineno, "trailing text '" + extra + "'");

        BFileEntry e{};
        try {
            BigInt idx = parse_bigint(idx_text);
            if (!idx.fits_slong_p()) throw BFileError(lineno, "index out of range");
            e.index = idx.get_si();
            e.value = parse_bigint(val_text);
        } catch (const std::invalid_argument& ex) {
            throw BFileError(lineno, ex.what());
        }
        if (!file.entries.empty() && e.index <= file.entries.back().index) {
            throw BFileError(lineno, "index " + idx_text + " is not strictly increasing");
        }
        file.entries.push_back(std::move(e));
    }
    return file;
}

BFile read_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file '" + path + "'");
    return parse_bfile(in);
}

BFileComparison compare_bfile(const BFile& file, const CFiniteSequence& s, long shift) {
    BFileComparison cmp;
    if (file.entries.empty()) return cmp;
    const long last = file.entries.back().index + shift;
    if (last > kMaxIndex) throw std::runtime_error("b-file index " + std::to_string(last) + " is beyond the supported range");
    std::vector<BigRational> u = last >= 0 ? s.terms(static_cast<int>(last) + 1) : std::vector<BigRational>{};
    for (const auto& e : file.entries) {
        const long n = e.index + shift;
        BigRational expected = n < 0 ? BigRational(0) : u[static_cast<std::size_t>(n)];
        ++cmp.checked;
        if (expected != BigRational(e.value)) {
            cmp.first_mismatch = BFileMismatch{e.index, e.value, expected};
            break;
        }
    }
    return cmp;
}

}  // namespace seqlab
