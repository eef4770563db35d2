// frob: parse a generator file, then detect, dump tables, verify the
// S-system, or run the full kernel certification pipeline.
//
// Exit codes: 0 = all requested checks pass, 1 = a check failed (witness
// printed), 2 = input error (bad file, bad flags, cap exceeded).
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frob/frobenius.hpp"
#include "frob/group_file.hpp"
#include "frob/kernel.hpp"
#include "frob/perm_group.hpp"
#include "frob/pipeline.hpp"
#include "frob/s_system.hpp"
#include "frob/ternary.hpp"

namespace fs = std::filesystem;

namespace {

struct Options {
    std::string path;
    int latin_a = 0;
    int zero = -1;  // -1: not given on the command line
    int one = -1;
    std::string a0 = "first";
    std::string sigma = "lex";
    std::size_t cap = frob::kDefaultElementCap;
    std::string format = "text";
};

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct LoadedGroup {
    frob::PermutationGroup group;
    frob::point_t zero;
    frob::point_t one;
};

// Command-line --zero/--one override the file's optional labels, which
// override the defaults 0 and 1.
LoadedGroup load_group(const Options& opt) {
    frob::GroupFile gf = frob::parse_group_file(read_file(opt.path));
    frob::point_t zero = opt.zero >= 0 ? opt.zero : gf.zero.value_or(0);
    frob::point_t one = opt.one >= 0 ? opt.one : gf.one.value_or(1);
    if (zero >= gf.degree || one >= gf.degree)
        throw std::invalid_argument("base point out of range for degree " +
                                    std::to_string(gf.degree));
    if (zero == one) throw std::invalid_argument("zero and one must differ");
    return {frob::PermutationGroup::generate(gf.generators, gf.degree, opt.cap), zero, one};
}

frob::PipelineOptions pipeline_options(const Options& opt, frob::point_t zero,
                                       frob::point_t one) {
    frob::PipelineOptions p;
    p.zero = zero;
    p.one = one;
    p.a0_policy = frob::parse_a0_policy(opt.a0);
    p.sigma = frob::SigmaPolicy::parse(opt.sigma);
    return p;
}

int cmd_check_frobenius(const Options& opt) {
    LoadedGroup lg = load_group(opt);
    frob::FrobeniusReport report = frob::check_frobenius(lg.group);
    std::cout << report.describe() << "\n";
    return report.ok() ? 0 : 1;
}

int cmd_latin(const Options& opt) {
    LoadedGroup lg = load_group(opt);
    frob::FrobeniusContext ctx =
        frob::build_context(lg.group, lg.zero, lg.one, frob::SigmaPolicy::parse(opt.sigma));
    std::cout << frob::dump_table(frob::binary_table(ctx, opt.latin_a));
    return 0;
}

int cmd_ssystem(const Options& opt) {
    LoadedGroup lg = load_group(opt);
    frob::FrobeniusContext ctx =
        frob::build_context(lg.group, lg.zero, lg.one, frob::SigmaPolicy::parse(opt.sigma));
    frob::SSystemReport r = frob::verify_right_s_system(ctx);

    auto flag = [](bool ok) { return ok ? "pass" : "fail"; };
    std::cout << "right S-system report\n";
    std::cout << "  projections: " << flag(r.projections_ok) << "\n";
    std::cout << "  closure: " << flag(r.closure_ok) << "\n";
    std::cout << "  star group: " << flag(r.group_ok);
    if (r.group_ok)
        std::cout << " (" << r.star_structure << ", order " << r.star_order << ")";
    std::cout << "\n";
    std::cout << "  quasigroups: " << flag(r.quasigroups_ok) << "\n";
    std::cout << "  star=circ: " << flag(r.star_circ_ok) << "\n";
    std::cout << "  isomorphism-with-stabilizer: " << flag(r.isomorphism_ok) << "\n";
    std::cout << "  right-division: " << flag(r.right_division_ok) << "\n";
    for (const auto& f : r.failures) std::cout << "  failure: " << f << "\n";

    bool orth_ok = true;
    std::size_t pairs = 0;
    const auto& es = ctx.e_star();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            ++pairs;
            frob::OrthogonalityCheck oc = frob::check_orthogonal(ctx, es[i], es[j]);
            if (!oc.ok) {
                orth_ok = false;
                std::cout << "orthogonality: pair (" << es[i] << ", " << es[j]
                          << ") fails: " << oc.describe() << "\n";
            }
        }
    if (orth_ok) std::cout << "orthogonality: all " << pairs << " pairs pass\n";
    bool ok = r.ok() && orth_ok;
    std::cout << "result: " << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_kernel(const Options& opt) {
    LoadedGroup lg = load_group(opt);
    frob::KernelCertificate cert =
        frob::kernel_pipeline(lg.group, pipeline_options(opt, lg.zero, lg.one));
    std::cout << frob::render_certificate(cert, frob::parse_cert_format(opt.format));
    return cert.ok() ? 0 : 1;
}

struct CorpusEntry {
    std::string name;
    int status = 0;  // 0 pass, 1 check failure, 2 input error
    std::string detail;
};

CorpusEntry run_corpus_entry(const fs::path& path, Options opt) {
    CorpusEntry entry;
    entry.name = path.filename().string();
    try {
        opt.path = path.string();
        LoadedGroup lg = load_group(opt);
        frob::KernelCertificate cert =
            frob::kernel_pipeline(lg.group, pipeline_options(opt, lg.zero, lg.one));
        std::string doc = frob::render_certificate(cert, frob::CertFormat::structured);
        std::string info = "degree " + std::to_string(cert.degree) + ", order " +
                           std::to_string(cert.group_order);

        fs::path expect = path;
        expect.replace_extension(".expect");
        if (fs::exists(expect)) {
            if (read_file(expect) == doc) {
                entry.status = 0;
                entry.detail = info + ", PASS (matches golden certificate)";
            } else {
                entry.status = 1;
                entry.detail = info + ", FAIL (differs from golden certificate)";
            }
        } else if (cert.ok()) {
            entry.status = 0;
            entry.detail = info + ", PASS";
        } else {
            entry.status = 1;
            entry.detail = info + ", FAIL (" +
                           (cert.accepted ? "certificate check failed" : cert.rejection_reason) +
                           ")";
        }
    } catch (const frob::ParseError& e) {
        entry.status = 2;
        entry.detail = std::string("INPUT ERROR (") + e.what() + ")";
    } catch (const frob::CapExceeded& e) {
        entry.status = 2;
        entry.detail = std::string("INPUT ERROR (") + e.what() + ")";
    } catch (const std::invalid_argument& e) {
        entry.status = 2;
        entry.detail = std::string("INPUT ERROR (") + e.what() + ")";
    } catch (const std::exception& e) {
        entry.status = 2;
        entry.detail = std::string("ERROR (") + e.what() + ")";
    }
    return entry;
}

int cmd_corpus(const Options& opt) {
    fs::path dir(opt.path);
    if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + opt.path);
    std::vector<fs::path> files;
    for (const auto& de : fs::directory_iterator(dir))
        if (de.is_regular_file() && de.path().extension() == ".grp")
            files.push_back(de.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::runtime_error("no .grp files in " + opt.path);

    std::vector<std::future<CorpusEntry>> futures;
    futures.reserve(files.size());
    for (const auto& f : files)
        futures.push_back(std::async(std::launch::async, run_corpus_entry, f, opt));

    int worst = 0;
    std::size_t passed = 0;
    for (auto& fut : futures) {
        CorpusEntry entry = fut.get();
        std::cout << entry.name << ": " << entry.detail << "\n";
        worst = std::max(worst, entry.status);
        if (entry.status == 0) ++passed;
    }
    std::cout << passed << "/" << files.size() << " passed\n";
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius kernel construction and certification"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--zero", opt.zero, "base point playing the role of zero (default 0)");
    app.add_option("--one", opt.one, "base point playing the role of one (default 1)");
    app.add_option("--a0", opt.a0, "a0 policy: first|all (default first)");
    app.add_option("--sigma", opt.sigma, "coset representative policy: lex|seed:<k>");
    app.add_option("--cap", opt.cap, "element cap for group enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "certificate format: text|structured");

    auto* check = app.add_subcommand("check-frobenius", "run the Frobenius detector");
    check->add_option("file", opt.path, "group description file")->required();
    check->fallthrough();

    auto* latin = app.add_subcommand("latin", "dump the binary operation table for a");
    latin->add_option("a", opt.latin_a, "middle-slot point a")->required();
    latin->add_option("file", opt.path, "group description file")->required();
    latin->fallthrough();

    auto* ssystem = app.add_subcommand("ssystem", "verify the right S-system and orthogonality");
    ssystem->add_option("file", opt.path, "group description file")->required();
    ssystem->fallthrough();

    auto* kernel = app.add_subcommand("kernel", "run the full kernel certification pipeline");
    kernel->add_option("file", opt.path, "group description file")->required();
    kernel->fallthrough();

    auto* corpus = app.add_subcommand("corpus", "run the pipeline over every .grp in a directory");
    corpus->add_option("dir", opt.path, "directory of group files")->required();
    corpus->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(check)) return cmd_check_frobenius(opt);
        if (app.got_subcommand(latin)) return cmd_latin(opt);
        if (app.got_subcommand(ssystem)) return cmd_ssystem(opt);
        if (app.got_subcommand(kernel)) return cmd_kernel(opt);
        if (app.got_subcommand(corpus)) return cmd_corpus(opt);
        std::cerr << "no subcommand selected\n";
        return 2;
    } catch (const frob::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const frob::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
