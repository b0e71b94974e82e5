// Command-line front end: validate | bredon | ss | fps-ss on a JSON bundle.
//
// Exit codes: 0 ok, 1 I/O or parse error, 2 group or complex invalid,
// 3 coefficient system invalid, 4 invariant failure.

#include "bredon/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

enum Exit { ok = 0, io_error = 1, complex_invalid = 2, system_invalid = 3, invariant_failure = 4 };

/// " (cell 4)" unless the message already names it.
std::string tag(const std::string& what, const std::string& kind, int id) {
    if (id < 0) return "";
    const std::string t = kind + " " + std::to_string(id);
    return what.find(t) == std::string::npos ? " (" + t + ")" : "";
}

struct Job {
    std::string input;
    int subgroup = -1;
    int max_degree = -1;
    bool json = false;
    bool table = false;
    bool parallel = false;
};

int run(const std::string& command, const Job& job) {
    using namespace bredon;
    const Format fmt = job.json ? Format::json : Format::table;
    Bundle b = load_bundle(job.input);
    if (command == "validate") {
        std::cout << report_validate(b, fmt);
        const auto& lat = *b.lattice;
        for (int h = 0; h < lat.size(); ++h)
            if (!modified_fixed_complex(*b.complex, h).free()) return invariant_failure;
        return ok;
    }
    if (!b.system) throw SystemError("bundle has no coefficient system");
    SpectralOptions opt;
    opt.parallel = job.parallel;
    if (command == "bredon") {
        std::cout << report_bredon(b, job.max_degree, fmt);
        return ok;
    }
    if (command == "ss") {
        const auto r = main_spectral_sequence(*b.complex, *b.system, opt);
        std::cout << report_spectral(r, *b.lattice, job.max_degree, fmt);
        return r.pass() ? ok : invariant_failure;
    }
    if (job.subgroup < 0 || job.subgroup >= b.lattice->size()) {
        std::cerr << "error: --subgroup must be a subgroup id between 0 and " << b.lattice->size() - 1 << "\n";
        return io_error;
    }
    const auto r = fps_spectral_sequence(*b.complex, *b.system, job.subgroup, opt);
    std::cout << report_fps(r, *b.lattice, job.max_degree, fmt);
    return r.pass() ? ok : invariant_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bredon cohomology and isotropy spectral sequences of finite G-CW complexes"};
    app.require_subcommand(1, 1);
    Job job;
    auto common = [&job](CLI::App* c) {
        c->add_option("--input,-i", job.input, "JSON bundle with group, complex and system")->required();
        c->add_option("--max-degree", job.max_degree, "highest cohomological degree to report");
        auto* j = c->add_flag("--json", job.json, "machine-readable output");
        auto* t = c->add_flag("--table", job.table, "human-readable output (default)");
        j->excludes(t);
        c->add_flag("--parallel", job.parallel, "compute page entries concurrently");
    };
    common(app.add_subcommand("validate", "check group, complex, system and freeness"));
    common(app.add_subcommand("bredon", "Bredon cohomology groups"));
    common(app.add_subcommand("ss", "isotropy spectral sequence"));
    auto* fps = app.add_subcommand("fps-ss", "spectral sequence of a fixed point set");
    common(fps);
    fps->add_option("--subgroup,-H", job.subgroup, "subgroup id (see validate)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : io_error;
    }
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, job);
    } catch (const bredon::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io_error;
    } catch (const bredon::GroupError& e) {
        std::cerr << "invalid group: " << e.what() << "\n";
        return complex_invalid;
    } catch (const bredon::ComplexError& e) {
        std::cerr << "invalid complex: " << e.what() << tag(e.what(), "cell", e.cell) << tag(e.what(), "subgroup", e.subgroup)
                  << "\n";
        return complex_invalid;
    } catch (const bredon::SystemError& e) {
        std::cerr << "invalid coefficient system: " << e.what() << tag(e.what(), "subgroup", e.subgroup) << "\n";
        return system_invalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return invariant_failure;
    }
}
