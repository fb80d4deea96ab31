// coringlab: validate model files, compute functor values, run randomized
// verification suites, and emit the bundled gallery of worked models.
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coringlab/gallery.hpp"
#include "coringlab/model.hpp"
#include "coringlab/report.hpp"
#include "coringlab/suites.hpp"

namespace {

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

int emit(const coringlab::VerdictReport& report, const std::string& out_path) {
    const std::string text = report.render();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
        out << text;
    }
    return report.exit_status();
}

// Parse the file; on failure, report one FAIL line per parse error.
bool load_model(const std::string& path, coringlab::VerdictReport& report,
                std::optional<coringlab::ModelFile>& model) {
    std::string text;
    if (!read_file(path, text)) {
        report.digest = "unreadable";
        report.fail("parse", "cannot read '" + path + "'");
        return false;
    }
    report.digest = coringlab::hex64(coringlab::fnv1a(text));
    coringlab::ParseResult parsed = coringlab::parse_model(text);
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors) report.fail("parse", e.render());
        return false;
    }
    model = std::move(parsed.model);
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear-algebra workbench for corings, comodules, and their functors"};
    app.require_subcommand(1);

    std::string file;
    std::string out_path;
    std::string suite;
    std::string gallery_dir = "gallery";
    std::vector<std::string> expr;
    coringlab::SuiteParams params;

    CLI::App* validate = app.add_subcommand("validate", "run every axiom check in a model file");
    validate->add_option("file", file, "model file")->required();
    validate->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* compute = app.add_subcommand(
        "compute", "evaluate one operation: rat, cotensor, coind, or dual");
    compute->add_option("file", file, "model file")->required();
    compute->add_option("expr", expr, "operation and arguments")->required()->expected(-1);
    compute->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "run a randomized verification suite");
    verify->add_option("file", file, "model file")->required();
    verify->add_option("suite", suite, "one of: axioms, adjunction-sg, adjunction-main, "
                                       "natural-iso, cotensor-center, rat-sp-agreement")
        ->required();
    verify->add_option("--trials", params.trials, "random instances per check");
    verify->add_option("--seed", params.seed, "random seed");
    verify->add_option("--max-dim", params.max_dim, "dimension bound for random instances");
    verify->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* gallery = app.add_subcommand("gallery", "write the bundled gallery of model files");
    gallery->add_option("--out", gallery_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    if (gallery->parsed()) {
        std::error_code ec;
        std::filesystem::create_directories(gallery_dir, ec);
        if (ec) {
            std::cerr << "error: cannot create '" << gallery_dir << "': " << ec.message() << "\n";
            return 2;
        }
        for (const auto& entry : coringlab::gallery_entries()) {
            const std::filesystem::path path = std::filesystem::path(gallery_dir) / entry.filename;
            std::ofstream outf(path, std::ios::binary);
            if (!outf) {
                std::cerr << "error: cannot write '" << path.string() << "'\n";
                return 2;
            }
            outf << entry.text;
            std::cout << "wrote " << path.string() << "\n";
        }
        return 0;
    }

    coringlab::VerdictReport report;
    std::optional<coringlab::ModelFile> model;

    if (validate->parsed()) {
        if (load_model(file, report, model)) coringlab::run_validation(*model, report);
        return emit(report, out_path);
    }
    if (compute->parsed()) {
        if (load_model(file, report, model)) coringlab::run_compute(*model, expr, report);
        return emit(report, out_path);
    }
    // verify
    report.context.push_back("suite " + suite);
    report.context.push_back("trials " + std::to_string(params.trials));
    report.context.push_back("seed " + std::to_string(params.seed));
    report.context.push_back("max-dim " + std::to_string(params.max_dim));
    if (!coringlab::is_suite(suite)) {
        report.fail("suite", "unknown suite '" + suite + "'");
        return emit(report, out_path);
    }
    if (load_model(file, report, model)) coringlab::run_suite(*model, suite, params, report);
    return emit(report, out_path);
}
