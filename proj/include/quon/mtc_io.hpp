#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "quon/mtc.hpp"

namespace quon {

// Parsed form of the on-disk category format. Line oriented, '#' comments:
//   mtc <name>
//   labels <name>+
//   unit <label>
//   dual <label> <label>            (unlisted labels are self-dual)
//   N <a> <b> <c> <int>             (absent entries are 0)
//   S <row-index> <re> <im> ...     (one line per row; optional as a block)
//   F <a> <b> <c> <d> <e> <f> <re> <im>   (optional)
// The unit must be the first listed label so that stored indices match the
// in-memory convention (unit = index 0).
struct MtcFile {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> dual;
    std::map<std::array<int, 3>, long long> N;
    bool has_S = false;
    std::vector<cplx> S; // row-major |labels|^2 when has_S
    std::map<std::array<int, 6>, cplx> F;

    bool operator==(const MtcFile& o) const {
        return name == o.name && labels == o.labels && dual == o.dual && N == o.N &&
               has_S == o.has_S && S == o.S && F == o.F;
    }
};

struct ParseError {
    int line = 0;
    int column = 0;
    std::string message;

    std::string str() const {
        return "line " + std::to_string(line) + ", column " + std::to_string(column) +
               ": " + message;
    }
};

bool parse_mtc(const std::string& text, MtcFile& out, ParseError& err);
std::string serialize_mtc(const MtcFile& f);

MtcFile to_mtc_file(const MtcData& m);
// Builds MtcData; when S is omitted the name must resolve to a built-in.
bool to_mtc_data(const MtcFile& f, MtcData& out, std::string& err);
// Expands the F entries into a dense rank^6 table (missing entries are 0).
std::vector<cplx> dense_f_table(const MtcFile& f);

// FNV-1a hash of the canonical serialized form, as 16 hex digits.
std::string fingerprint(const MtcFile& f);
std::string fingerprint(const MtcData& m);

// Resolves a CLI argument: a built-in name or a path to an mtc file.
bool load_category(const std::string& arg, MtcData& out, std::string& err,
                   MtcFile* file_out = nullptr);

} // namespace quon
