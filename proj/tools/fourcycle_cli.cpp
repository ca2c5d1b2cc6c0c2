// Command-line front end: construct coloured systems, verify JSON documents,
// list the colour spectrum, evaluate the chromatic bound, and print
// triangle/quadrilateral decomposition certificates.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 invalid arguments or unusable input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fourcycle/fourcycle.hpp"

namespace {

void print_failures(const fourcycle::VerificationReport& rep) {
    for (const auto& f : rep.failures)
        std::cerr << "  [" << f.check << "] " << f.witness << "\n";
}

std::string verdict_line(const fourcycle::ColouredSystem& cs,
                         const fourcycle::VerificationReport& rep) {
    std::ostringstream out;
    out << "verify: " << (rep.passed() ? "PASS" : "FAIL") << " (v=" << cs.system.order
        << " blocks=" << cs.system.blocks.size() << " s=" << cs.params.s
        << " c=" << cs.colouring.num_colours << " case=" << to_string(cs.construction_case)
        << ")";
    if (!rep.passed()) out << " failures=" << rep.failures.size();
    return out.str();
}

int run_construct(int s, int h, int c, const std::string& out_path) {
    const fourcycle::ColouredSystem cs = fourcycle::build(s, h, c);
    const std::string doc = fourcycle::serialize(cs);
    const fourcycle::VerificationReport rep = fourcycle::verify_all(cs);
    if (out_path.empty()) {
        // document on stdout, verdict on stderr so the JSON stays pipeable
        std::cout << doc;
        std::cerr << verdict_line(cs, rep) << "\n";
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "cannot open '" << out_path << "' for writing\n";
            return 2;
        }
        file << doc;
        std::cout << verdict_line(cs, rep) << "\n";
    }
    print_failures(rep);
    return rep.passed() ? 0 : 1;
}

int run_verify(const std::string& path, int s_override, int c_override) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "cannot read '" << path << "'\n";
        return 2;
    }
    std::ostringstream buf;
    buf << file.rdbuf();
    fourcycle::ColouredSystem cs = fourcycle::deserialize(buf.str());
    if (s_override > 0) cs.params.s = s_override;
    if (c_override > 0) cs.colouring.num_colours = c_override;
    const fourcycle::VerificationReport rep = fourcycle::verify_all(cs);
    std::cout << verdict_line(cs, rep) << "\n";
    print_failures(rep);
    return rep.passed() ? 0 : 1;
}

int run_spectrum(int s, int h, bool check) {
    const fourcycle::SpectrumRange range = fourcycle::spectrum_range(s, h);
    std::cout << "spectrum " << range.lo << ".." << range.hi << "\n";
    bool all_pass = true;
    for (int c = range.lo; c <= range.hi; ++c) {
        std::cout << "c=" << c << " case=" << to_string(fourcycle::dispatch_case(s, c));
        if (check) {
            const auto rep = fourcycle::verify_all(fourcycle::build(s, h, c));
            std::cout << " verify=" << (rep.passed() ? "pass" : "FAIL");
            if (!rep.passed()) {
                all_pass = false;
                std::cout << "\n";
                print_failures(rep);
                continue;
            }
        }
        std::cout << "\n";
    }
    return all_pass ? 0 : 1;
}

int run_bound(int v, int s) {
    const fourcycle::Rational bound = fourcycle::upper_bound(v, s);
    std::cout << bound.str() << " (floor " << bound.floor() << ")\n";
    return 0;
}

int run_decompose(int s, int t) {
    const fourcycle::Decomposition dec = fourcycle::decompose(s, t);
    std::cout << "K_" << 2 * s << " - I: " << dec.triangles.size() << " triangles, "
              << dec.quads.size() << " quadrilaterals\n";
    for (const auto& tri : dec.triangles)
        std::cout << "T (" << tri[0] << "," << tri[1] << "," << tri[2] << ")\n";
    for (const auto& qd : dec.quads)
        std::cout << "Q (" << qd[0] << "," << qd[1] << "," << qd[2] << "," << qd[3] << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equitable block colourings of 4-cycle systems"};
    app.require_subcommand(1);
    // --h is a domain parameter, so help is long-form only
    app.set_help_flag("--help", "print help");

    int s = 0, h = 0, c = 0, v = 0, t = 0;
    std::string out_path, doc_path;
    int s_override = 0, c_override = 0;
    bool check = false;

    auto* cmd_construct =
        app.add_subcommand("construct", "build a coloured system, write its document, verify it");
    cmd_construct->add_option("--s", s, "colours per vertex")->required();
    cmd_construct->add_option("--h", h, "multiplier, k = h*s")->required();
    cmd_construct->add_option("--c", c, "total number of colours")->required();
    cmd_construct->add_option("--out", out_path, "output file (default: stdout)");

    auto* cmd_verify = app.add_subcommand("verify", "verify a system document");
    cmd_verify->add_option("file", doc_path, "JSON document")->required();
    cmd_verify->add_option("--s", s_override, "override the claimed type");
    cmd_verify->add_option("--c", c_override, "override the claimed colour count");

    auto* cmd_spectrum =
        app.add_subcommand("spectrum", "list the constructed colour counts and their cases");
    cmd_spectrum->add_option("--s", s, "colours per vertex")->required();
    cmd_spectrum->add_option("--h", h, "multiplier, k = h*s")->required();
    cmd_spectrum->add_flag("--check", check, "build and verify every c in the range");

    auto* cmd_bound = app.add_subcommand("bound", "exact upper bound s^2 v/(v+s-1)");
    cmd_bound->add_option("--v", v, "system order, v = 1 (mod 8)")->required();
    cmd_bound->add_option("--s", s, "colours per vertex")->required();

    auto* cmd_decompose =
        app.add_subcommand("decompose", "triangle/quadrilateral partition of K_{2s} minus a 1-factor");
    cmd_decompose->add_option("--s", s, "half the number of vertices")->required();
    cmd_decompose->add_option("--t", t, "number of triangles / 4")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_construct->parsed()) return run_construct(s, h, c, out_path);
        if (cmd_verify->parsed()) return run_verify(doc_path, s_override, c_override);
        if (cmd_spectrum->parsed()) return run_spectrum(s, h, check);
        if (cmd_bound->parsed()) return run_bound(v, s);
        if (cmd_decompose->parsed()) return run_decompose(s, t);
    } catch (const fourcycle::infeasible_error& e) {
        std::cerr << "internal failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
