// polystab: exact K-stability indicators for toric Fano polytopes.
#include <CLI11.hpp>

#include "polystab/families.hpp"
#include "polystab/io.hpp"
#include "polystab/verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

namespace fs = std::filesystem;
using namespace polystab;

namespace {

int cmd_family(int r, const std::string& out_path) {
    Polytope delta = xr_fano_polytope(r);
    std::string text = serialize_polytope(delta);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        out << text;
    }
    return 0;
}

int cmd_analyze(const std::string& file, bool fano, bool moment, const std::string& json_out,
                int digits) {
    if (fano == moment) {
        std::cerr << "analyze: pass exactly one of --fano-polytope / --moment-polytope\n";
        return 1;
    }
    Polytope p = load_polytope(file);
    StabilityCertificate cert =
        analyze(p, fano ? InputKind::FanoPolytope : InputKind::MomentPolytope);
    cert.source = file;
    std::string doc = certificate_to_json(cert, digits);
    if (json_out.empty()) {
        std::cout << doc;
    } else {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << "cannot write " << json_out << "\n";
            return 1;
        }
        out << doc;
    }
    return 0;
}

int cmd_scan(const std::string& dir, int jobs, const std::string& csv_out, int digits) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".poly")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<std::string> rows(files.size());
    std::mutex mu;
    std::size_t next = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> lk(mu);
                if (next >= files.size()) return;
                i = next++;
            }
            const std::string name = files[i].filename().string();
            try {
                Polytope p = load_polytope(files[i].string());
                StabilityCertificate cert = analyze(p, InputKind::FanoPolytope);
                cert.source = name;
                rows[i] = certificate_csv_row(name, cert, digits);
            } catch (const std::exception& e) {
                rows[i] = certificate_csv_error_row(name, e.what());
            }
        }
    };
    if (jobs < 1) jobs = 1;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    std::string csv = certificate_csv_header();
    for (const auto& r : rows) csv += r;
    if (csv_out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(csv_out);
        if (!out) {
            std::cerr << "cannot write " << csv_out << "\n";
            return 1;
        }
        out << csv;
    }
    return 0;
}

int cmd_verify() {
    ReferenceRun run = run_reference_checks();
    for (const auto& l : run.lines) {
        const char* tag = l.informational ? (l.pass ? "[ OK ]" : "[NOTE]") : (l.pass ? "[PASS]" : "[FAIL]");
        std::cout << tag << " " << l.name;
        if (!l.detail.empty()) std::cout << "  -- " << l.detail;
        std::cout << "\n";
    }
    int f = run.failures();
    std::cout << (f == 0 ? "all checks passed\n"
                         : std::to_string(f) + " check(s) failed against the reference dataset\n");
    return f == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact relative K-(in)stability indicators for toric Fano polytopes"};
    app.require_subcommand(1);

    auto* fam = app.add_subcommand("family", "emit the 5r-dimensional family's Fano polytope");
    int r = 1;
    std::string fam_out;
    fam->add_option("--r", r, "family parameter (dimension 5r)")->required();
    fam->add_option("--out", fam_out, "output file (stdout if omitted)");

    auto* an = app.add_subcommand("analyze", "run the full stability analysis on a .poly file");
    std::string an_file, an_json;
    bool an_fano = false, an_moment = false;
    int digits = 15;
    an->add_option("file", an_file, "vertex-list .poly file")->required();
    an->add_flag("--fano-polytope", an_fano, "input is a Fano polytope (dualized first)");
    an->add_flag("--moment-polytope", an_moment, "input is a moment polytope");
    an->add_option("--json", an_json, "write the certificate to this file");
    an->add_option("--digits", digits, "significant digits for approx fields (default 15)");

    auto* sc = app.add_subcommand("scan", "analyze every .poly file in a directory");
    std::string scan_dir, scan_csv;
    int jobs = 1;
    sc->add_option("dir", scan_dir, "directory of .poly files")->required();
    sc->add_option("--jobs", jobs, "worker threads");
    sc->add_option("--csv", scan_csv, "write the summary CSV to this file");

    app.add_subcommand("verify-paper",
                       "check the built-in dimension-10 family against the published reference "
                       "values, printing pass/fail per check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (fam->parsed()) return cmd_family(r, fam_out);
        if (an->parsed()) return cmd_analyze(an_file, an_fano, an_moment, an_json, digits);
        if (sc->parsed()) return cmd_scan(scan_dir, jobs, scan_csv, digits);
        return cmd_verify();
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const DimensionMismatch& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const NotReflexive& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
