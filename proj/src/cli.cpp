#include "ccauto/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "ccauto/report.hpp"
#include "ccauto/todd_coxeter.hpp"

namespace ccauto {

namespace {

Catalog load_catalog(const std::string& path) {
    if (path.empty())
        throw std::runtime_error("no catalog given; pass --catalog or set CCAUTO_CATALOG");
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open catalog file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_catalog(buf.str());
}

const Presentation& entry_or_throw(const Catalog& cat, const std::string& name) {
    const Presentation* p = cat.find(name);
    if (!p)
        throw std::runtime_error("no group named '" + name + "' in the catalog");
    return *p;
}

ReportFormat parse_format(const std::string& f) {
    if (f == "text")
        return ReportFormat::Text;
    if (f == "json")
        return ReportFormat::Json;
    if (f == "csv")
        return ReportFormat::Csv;
    throw std::runtime_error("unknown format '" + f + "'");
}

std::string automorphism_lines(const FiniteGroup& g, const AutomorphismSet& set) {
    const std::vector<Word>& words = g.canonical_words();
    std::vector<std::string> lines;
    for (const Automorphism& a : set.elements) {
        std::string line;
        for (size_t i = 0; i < a.generator_images.size(); ++i) {
            if (i)
                line += "  ";
            line += g.generator_names()[i] + " -> " +
                    render_word(words[a.generator_images[i]], g.generator_names());
        }
        lines.push_back(line);
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& l : lines)
        out += l + "\n";
    return out;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"class-preserving automorphism analyzer for small-group catalogs"};
    app.require_subcommand(1);

    std::string default_catalog;
    if (const char* env = std::getenv("CCAUTO_CATALOG"))
        default_catalog = env;

    std::string catalog_path = default_catalog;
    std::string group_name;
    std::string format = "text";
    int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    bool list_automorphisms = false;

    auto add_common = [&](CLI::App* cmd, bool needs_group) {
        cmd->add_option("--catalog", catalog_path, "catalog file path");
        cmd->add_option("--format", format, "output format: text, json, csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        if (needs_group)
            cmd->add_option("--group", group_name, "group name")->required();
        return cmd;
    };

    CLI::App* verify = add_common(app.add_subcommand("verify", "classify every catalog entry"), false);
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    CLI::App* analyze = add_common(app.add_subcommand("analyze", "report on one group"), true);
    CLI::App* autc = add_common(app.add_subcommand("autc", "automorphism counts for one group"), true);
    autc->add_flag("--list", list_automorphisms, "list the class-preserving automorphisms");
    CLI::App* criteria = add_common(app.add_subcommand("criteria", "criterion details for one group"), true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            Catalog cat = load_catalog(catalog_path);
            CatalogReport rep = verify_theorem_a(cat, jobs);
            out << render_catalog_report(rep, parse_format(format));
            err << "runtime: " << rep.total_runtime_seconds << "s\n";
            return rep.pass ? 0 : 1;
        }
        if (analyze->parsed()) {
            Catalog cat = load_catalog(catalog_path);
            GroupReport rep = classify_presentation(entry_or_throw(cat, group_name));
            out << render_group_report(rep, parse_format(format));
            return 0;
        }
        if (autc->parsed()) {
            Catalog cat = load_catalog(catalog_path);
            FiniteGroup g = enumerate_group(entry_or_throw(cat, group_name));
            AutomorphismSet inner = inner_automorphisms(g);
            AutomorphismSet cp = class_preserving_automorphisms(g);
            out << "group " << g.name() << "\n";
            out << "Inn=" << inner.elements.size() << "\n";
            out << "Aut_c=" << cp.elements.size() << "\n";
            out << "Out_c=" << outc_order(g) << "\n";
            if (list_automorphisms)
                out << automorphism_lines(g, cp);
            return 0;
        }
        if (criteria->parsed()) {
            Catalog cat = load_catalog(catalog_path);
            GroupReport rep = classify_presentation(entry_or_throw(cat, group_name));
            out << "group " << rep.name << "\n";
            out << render_criteria_lines(rep);
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

} // namespace ccauto
