#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quon/graphic_quons.hpp"
#include "quon/mtc_io.hpp"

using namespace quon;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Options {
    double tol = 1e-8;
    std::uint64_t seed = 0x51CE5EEDull;
    int threads = 1;
    std::string format = "text";
};

struct Reporter {
    Options opt;
    std::string category;
    std::string fingerprint_hex;
    bool all_pass = true;

    void header() const {
        if (opt.format == "json-lines") return;
        std::cout << "quon " << kVersion << "  category=" << category
                  << "  fingerprint=" << fingerprint_hex << "  tol=" << opt.tol
                  << "  seed=" << opt.seed << "\n";
    }
    void emit(const std::string& id, bool pass, double err,
              const std::string& params = "") {
        if (opt.format == "json-lines") {
            json rec = {{"check", id},        {"category", category},
                        {"pass", pass},       {"max_error", err},
                        {"tol", opt.tol},     {"seed", opt.seed},
                        {"version", kVersion}, {"fingerprint", fingerprint_hex}};
            if (!params.empty()) rec["params"] = params;
            std::cout << rec.dump() << "\n";
        } else {
            std::cout << (pass ? "PASS" : "FAIL") << "  " << id
                      << "  max_error=" << err;
            if (!params.empty()) std::cout << "  [" << params << "]";
            std::cout << "\n";
        }
        all_pass = all_pass && pass;
    }
    void emit(const VerificationReport& rep, const std::string& params = "") {
        for (const auto& c : rep.checks)
            emit(c.id, c.pass, c.max_error,
                 params.empty() ? c.detail
                                : (c.detail.empty() ? params : params + " " + c.detail));
    }
    void note(const std::string& text) const {
        if (opt.format != "json-lines") std::cout << text << "\n";
    }
    int exit_code() const { return all_pass ? 0 : 1; }
};

bool load(const std::string& arg, const Options& opt, MtcData& m, Reporter& rep) {
    std::string err;
    MtcFile file;
    if (!load_category(arg, m, err, &file)) {
        std::cerr << "error: " << err << "\n";
        return false;
    }
    rep.opt = opt;
    rep.category = m.name;
    rep.fingerprint_hex = fingerprint(file);
    rep.header();
    return true;
}

std::string label_list(const MtcData& m, const LabelSubset& k) {
    std::string out = "{";
    for (size_t i = 0; i < k.members.size(); ++i) {
        if (i) out += ",";
        out += m.ring.names[k.members[i]];
    }
    return out + "}";
}

bool parse_graph_spec(const std::string& spec, PlanarGraph& g, std::string& err) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    int n = 0;
    if (colon != std::string::npos) {
        try {
            n = std::stoi(spec.substr(colon + 1));
        } catch (...) {
            err = "bad graph parameter in '" + spec + "'";
            return false;
        }
    }
    try {
        if (kind == "tetrahedron") {
            g = tetrahedron_graph();
        } else if (kind == "wheel") {
            g = wheel_graph(n);
        } else if (kind == "cycle") {
            g = cycle_graph(n);
        } else if (kind == "dipole") {
            g = dipole_graph(n);
        } else {
            err = "unknown graph '" + kind + "' (want tetrahedron|wheel:<n>|cycle:<n>)";
            return false;
        }
    } catch (const std::exception& e) {
        err = e.what();
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quon: modular category and graphic quon identity checker"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--tol", opt.tol, "tolerance for all checks");
    app.add_option("--seed", opt.seed, "seed for sampled checks");
    app.add_option("--threads", opt.threads, "worker threads (reserved)")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json-lines"}));

    std::string cat, graph_spec = "tetrahedron", map_path;
    int n = 3, g = 2, terms = 4;

    auto* c_verify = app.add_subcommand("verify", "modular axioms and Fourier duality");
    c_verify->add_option("category", cat)->required();

    auto* c_sub = app.add_subcommand("subcategories",
                                     "biprojections, centers, support products");
    c_sub->add_option("category", cat)->required();

    auto* c_ver = app.add_subcommand("verlinde", "generalized Verlinde sweep");
    c_ver->add_option("category", cat)->required();
    c_ver->add_option("--n", n, "slots (sweeps 0..n)");
    c_ver->add_option("--g", g, "genus (sweeps 0..g)");

    auto* c_gm = app.add_subcommand("ghz-max", "print both states and the residual");
    c_gm->add_option("category", cat)->required();
    c_gm->add_option("--n", n)->required();
    c_gm->add_option("--g", g)->required();

    auto* c_gf = app.add_subcommand("genfun", "generating-function series check");
    c_gf->add_option("category", cat)->required();
    c_gf->add_option("--n", n)->required();
    c_gf->add_option("--terms", terms, "series order checked");

    auto* c_sd = app.add_subcommand("selfdual", "graph duality identity sweep");
    c_sd->add_option("category", cat)->required();
    c_sd->add_option("--graph", graph_spec, "tetrahedron|wheel:<n>|cycle:<n>");

    auto* c_dg = app.add_subcommand("dual-graph", "print the dual combinatorial map");
    c_dg->add_option("mapfile", map_path)->required();

    // allow global flags to appear after the subcommand name
    for (auto* s : app.get_subcommands({})) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_dg->parsed()) {
            std::ifstream in(map_path);
            if (!in) {
                std::cerr << "error: cannot open " << map_path << "\n";
                return 2;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            PlanarGraph pg;
            std::string err;
            if (!parse_map(ss.str(), pg, err)) {
                std::cerr << "error: " << err << "\n";
                return 2;
            }
            auto d = dual_graph(pg);
            std::cout << serialize_map(d);
            bool involution = isomorphic_maps(dual_graph(d), pg);
            if (opt.format == "json-lines")
                std::cout << json{{"check", "dual_of_dual_is_identity"},
                                  {"pass", involution},
                                  {"version", kVersion}}
                                 .dump()
                          << "\n";
            return involution ? 0 : 1;
        }

        MtcData m;
        Reporter rep;
        if (!load(cat, opt, m, rep)) return 2;

        if (c_verify->parsed()) {
            rep.emit(verify_modular_data(m, opt.tol));
            rep.emit(check_fourier_duality(m, 100, opt.tol, opt.seed));
        } else if (c_sub->parsed()) {
            auto subs = enumerate_fusion_subsets(m);
            for (const auto& k : subs) {
                auto kh = mueger_center(m, k, opt.tol);
                double sp = supp(m, biprojection(m, k)) * supp(m, biprojection(m, kh));
                rep.note("K=" + label_list(m, k) + "  center=" + label_list(m, kh) +
                         "  supp_product=" + std::to_string(sp));
            }
            rep.emit(check_biprojection_duality(m, opt.tol));
            rep.emit(check_gannon_inequality(m, opt.tol));
        } else if (c_ver->parsed()) {
            for (int nn = 0; nn <= n; ++nn)
                for (int gg = 0; gg <= g; ++gg)
                    rep.emit(check_max_equals_s_ghz(m, nn, gg, opt.tol),
                             "n=" + std::to_string(nn) + " g=" + std::to_string(gg));
            auto table = genus_dim_table(m, std::min(n, 3), g);
            std::ostringstream dims;
            for (size_t i = 0; i < table.values.size(); ++i)
                dims << (i ? " " : "") << table.values[i];
            rep.note("dim table (n=" + std::to_string(table.n) + "): " + dims.str());
        } else if (c_gm->parsed()) {
            auto gz = ghz(m, n, g);
            auto mx = max_state(m, n, g);
            std::ostringstream s1, s2;
            for (auto c : gz.coeffs) s1 << c.real() << " ";
            for (auto c : mx.coeffs) s2 << c.real() << " ";
            rep.note("ghz: " + s1.str());
            rep.note("max: " + s2.str());
            rep.emit(check_max_equals_s_ghz(m, n, g, opt.tol));
        } else if (c_gf->parsed()) {
            auto gf = max_genfun(m, n);
            auto table = genus_dim_table(m, n, terms);
            double err = 0.0;
            for (size_t idx = 0; idx < gf.size(); ++idx)
                for (int gg = 0; gg <= terms; ++gg) {
                    double want = std::pow(m.delta, 2 - n - 2 * gg) *
                                  static_cast<double>(table.at(idx, gg));
                    err = std::max(err, std::abs(gf[idx].series_coeff(gg) - cplx(want)));
                }
            rep.emit("genfun_series_matches_dims", err <= opt.tol, err,
                     "n=" + std::to_string(n) + " terms=" + std::to_string(terms));
        } else if (c_sd->parsed()) {
            PlanarGraph pg;
            std::string err;
            if (!parse_graph_spec(graph_spec, pg, err)) {
                std::cerr << "error: " << err << "\n";
                return 2;
            }
            auto r = build_recoupling(m);
            rep.emit(check_graph_duality(m, r, pg, opt.tol), "graph=" + graph_spec);
        }
        return rep.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
