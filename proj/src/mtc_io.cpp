#include "quon/mtc_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace quon {

namespace {

struct Tok {
    std::string text;
    int column; // 1-based start column
};

std::vector<Tok> tokenize(const std::string& line) {
    std::vector<Tok> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
               line[j] != '#')
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

bool parse_ll(const std::string& s, long long& v) {
    try {
        size_t pos = 0;
        v = std::stoll(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

bool parse_double(const std::string& s, double& v) {
    try {
        size_t pos = 0;
        v = std::stod(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

} // namespace

bool parse_mtc(const std::string& text, MtcFile& out, ParseError& err) {
    MtcFile f;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    bool saw_mtc = false, saw_labels = false, saw_unit = false;
    std::vector<char> saw_row;

    auto fail = [&](int col, std::string msg) {
        err = {lineno, col, std::move(msg)};
        return false;
    };
    auto label_index = [&](const Tok& t, int& idx) {
        for (size_t i = 0; i < f.labels.size(); ++i)
            if (f.labels[i] == t.text) {
                idx = static_cast<int>(i);
                return true;
            }
        return false;
    };

    while (std::getline(is, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0].text;

        if (key == "mtc") {
            if (saw_mtc) return fail(toks[0].column, "duplicate mtc line");
            if (toks.size() != 2) return fail(toks[0].column, "expected: mtc <name>");
            f.name = toks[1].text;
            saw_mtc = true;
        } else if (key == "labels") {
            if (saw_labels) return fail(toks[0].column, "duplicate labels line");
            if (toks.size() < 2) return fail(toks[0].column, "expected: labels <name>+");
            for (size_t i = 1; i < toks.size(); ++i) {
                for (const auto& existing : f.labels)
                    if (existing == toks[i].text)
                        return fail(toks[i].column, "duplicate label '" + toks[i].text + "'");
                f.labels.push_back(toks[i].text);
            }
            f.dual.resize(f.labels.size());
            for (size_t i = 0; i < f.dual.size(); ++i) f.dual[i] = static_cast<int>(i);
            saw_row.assign(f.labels.size(), 0);
            saw_labels = true;
        } else if (!saw_labels) {
            return fail(toks[0].column, "'" + key + "' before the labels line");
        } else if (key == "unit") {
            if (saw_unit) return fail(toks[0].column, "duplicate unit line");
            if (toks.size() != 2) return fail(toks[0].column, "expected: unit <label>");
            int idx;
            if (!label_index(toks[1], idx))
                return fail(toks[1].column, "unknown label '" + toks[1].text + "'");
            if (idx != 0)
                return fail(toks[1].column, "unit must be the first listed label");
            saw_unit = true;
        } else if (key == "dual") {
            if (toks.size() != 3) return fail(toks[0].column, "expected: dual <label> <label>");
            int a, b;
            if (!label_index(toks[1], a))
                return fail(toks[1].column, "unknown label '" + toks[1].text + "'");
            if (!label_index(toks[2], b))
                return fail(toks[2].column, "unknown label '" + toks[2].text + "'");
            f.dual[a] = b;
            f.dual[b] = a;
        } else if (key == "N") {
            if (toks.size() != 5)
                return fail(toks[0].column, "expected: N <a> <b> <c> <int>");
            int abc[3];
            for (int i = 0; i < 3; ++i)
                if (!label_index(toks[1 + i], abc[i]))
                    return fail(toks[1 + i].column,
                                "unknown label '" + toks[1 + i].text + "'");
            long long v;
            if (!parse_ll(toks[4].text, v) || v < 0)
                return fail(toks[4].column, "bad multiplicity '" + toks[4].text + "'");
            std::array<int, 3> k = {abc[0], abc[1], abc[2]};
            if (f.N.count(k)) return fail(toks[1].column, "duplicate N entry");
            if (v > 0) f.N[k] = v;
        } else if (key == "S") {
            int r = static_cast<int>(f.labels.size());
            if (toks.size() != static_cast<size_t>(2 + 2 * r))
                return fail(toks[0].column,
                            "expected: S <row-index> followed by " + std::to_string(2 * r) +
                                " numbers");
            long long row;
            if (!parse_ll(toks[1].text, row) || row < 0 || row >= r)
                return fail(toks[1].column, "bad row index '" + toks[1].text + "'");
            if (saw_row[row]) return fail(toks[1].column, "duplicate S row");
            saw_row[row] = 1;
            if (!f.has_S) {
                f.S.assign(static_cast<size_t>(r) * r, 0.0);
                f.has_S = true;
            }
            for (int cidx = 0; cidx < r; ++cidx) {
                double re, im;
                if (!parse_double(toks[2 + 2 * cidx].text, re))
                    return fail(toks[2 + 2 * cidx].column, "bad number");
                if (!parse_double(toks[3 + 2 * cidx].text, im))
                    return fail(toks[3 + 2 * cidx].column, "bad number");
                f.S[static_cast<size_t>(row) * r + cidx] = cplx(re, im);
            }
        } else if (key == "F") {
            if (toks.size() != 9)
                return fail(toks[0].column, "expected: F <a> <b> <c> <d> <e> <f> <re> <im>");
            std::array<int, 6> k{};
            for (int i = 0; i < 6; ++i)
                if (!label_index(toks[1 + i], k[i]))
                    return fail(toks[1 + i].column,
                                "unknown label '" + toks[1 + i].text + "'");
            double re, im;
            if (!parse_double(toks[7].text, re)) return fail(toks[7].column, "bad number");
            if (!parse_double(toks[8].text, im)) return fail(toks[8].column, "bad number");
            if (f.F.count(k)) return fail(toks[1].column, "duplicate F entry");
            f.F[k] = cplx(re, im);
        } else {
            return fail(toks[0].column, "unknown keyword '" + key + "'");
        }
    }
    if (!saw_mtc) {
        err = {lineno, 1, "missing mtc line"};
        return false;
    }
    if (!saw_labels) {
        err = {lineno, 1, "missing labels line"};
        return false;
    }
    if (!saw_unit) {
        err = {lineno, 1, "missing unit line"};
        return false;
    }
    if (f.has_S)
        for (size_t rix = 0; rix < saw_row.size(); ++rix)
            if (!saw_row[rix]) {
                err = {lineno, 1, "missing S row " + std::to_string(rix)};
                return false;
            }
    out = std::move(f);
    return true;
}

std::string serialize_mtc(const MtcFile& f) {
    std::ostringstream os;
    os << "mtc " << f.name << "\n";
    os << "labels";
    for (const auto& l : f.labels) os << ' ' << l;
    os << "\nunit " << f.labels[0] << "\n";
    for (size_t i = 0; i < f.dual.size(); ++i)
        if (f.dual[i] != static_cast<int>(i) && static_cast<int>(i) <= f.dual[i])
            os << "dual " << f.labels[i] << ' ' << f.labels[f.dual[i]] << "\n";
    for (const auto& [k, v] : f.N)
        os << "N " << f.labels[k[0]] << ' ' << f.labels[k[1]] << ' ' << f.labels[k[2]]
           << ' ' << v << "\n";
    if (f.has_S) {
        int r = static_cast<int>(f.labels.size());
        for (int row = 0; row < r; ++row) {
            os << "S " << row;
            for (int c = 0; c < r; ++c) {
                cplx z = f.S[static_cast<size_t>(row) * r + c];
                os << ' ' << fmt_double(z.real()) << ' ' << fmt_double(z.imag());
            }
            os << "\n";
        }
    }
    for (const auto& [k, v] : f.F) {
        os << "F";
        for (int i = 0; i < 6; ++i) os << ' ' << f.labels[k[i]];
        os << ' ' << fmt_double(v.real()) << ' ' << fmt_double(v.imag()) << "\n";
    }
    return os.str();
}

MtcFile to_mtc_file(const MtcData& m) {
    MtcFile f;
    f.name = m.name;
    f.labels = m.ring.names;
    f.dual = m.ring.dual;
    int r = m.rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                if (m.ring.n(a, b, c)) f.N[{a, b, c}] = m.ring.n(a, b, c);
    f.has_S = true;
    f.S = m.S;
    return f;
}

bool to_mtc_data(const MtcFile& f, MtcData& out, std::string& err) {
    if (!f.has_S) {
        MtcData b;
        if (builtin_category(f.name, b)) {
            out = std::move(b);
            return true;
        }
        err = "S matrix omitted and '" + f.name + "' is not a built-in category";
        return false;
    }
    MtcData m;
    m.name = f.name;
    m.ring.names = f.labels;
    m.ring.dual = f.dual;
    int r = static_cast<int>(f.labels.size());
    m.ring.N.assign(static_cast<size_t>(r) * r * r, 0);
    for (const auto& [k, v] : f.N) m.ring.n(k[0], k[1], k[2]) = v;
    m.S = f.S;
    cplx s00 = m.s(0, 0);
    if (!(s00.real() > 0.0) || std::abs(s00.imag()) > 1e-9 * std::abs(s00)) {
        err = "S_1^1 must be a positive real (got " + std::to_string(s00.real()) + "+" +
              std::to_string(s00.imag()) + "i)";
        return false;
    }
    m.delta = 1.0 / s00.real();
    m.mu = m.delta * m.delta;
    m.d.resize(r);
    for (int x = 0; x < r; ++x) {
        cplx dx = m.s(x, 0) * m.delta;
        if (std::abs(dx.imag()) > 1e-9 || dx.real() <= 0.0) {
            err = "first S column must give positive quantum dimensions";
            return false;
        }
        m.d[x] = dx.real();
    }
    out = std::move(m);
    return true;
}

std::vector<cplx> dense_f_table(const MtcFile& f) {
    size_t r = f.labels.size();
    std::vector<cplx> F(r * r * r * r * r * r, 0.0);
    for (const auto& [k, v] : f.F) {
        size_t idx = 0;
        for (int i = 0; i < 6; ++i) idx = idx * r + static_cast<size_t>(k[i]);
        F[idx] = v;
    }
    return F;
}

std::string fingerprint(const MtcFile& f) {
    std::string s = serialize_mtc(f);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fingerprint(const MtcData& m) { return fingerprint(to_mtc_file(m)); }

bool load_category(const std::string& arg, MtcData& out, std::string& err,
                   MtcFile* file_out) {
    MtcData b;
    if (builtin_category(arg, b)) {
        out = std::move(b);
        if (file_out) *file_out = to_mtc_file(out);
        return true;
    }
    std::ifstream in(arg);
    if (!in) {
        err = "'" + arg + "' is neither a built-in category nor a readable file";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    MtcFile f;
    ParseError perr;
    if (!parse_mtc(buf.str(), f, perr)) {
        err = arg + ": " + perr.str();
        return false;
    }
    if (!to_mtc_data(f, out, err)) return false;
    if (file_out) *file_out = std::move(f);
    return true;
}

} // namespace quon
