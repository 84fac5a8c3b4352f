// splitkit: classify integer-pair degree sequences and repair digraphs into split digraphs.
//
//   splitkit check|matrix|partitions|repair [--format csv|kv] [--oracle] [--slack] FILE
//
// FILE may be `-` for stdin. Exit codes: 0 split, 1 valid but not split,
// 2 parse or usage error, 3 invalid or non-digraphic sequence, 4 oracle disagreement.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "splitkit/cli.hpp"

namespace {

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

int main(int argc, char** argv) {
    namespace cli = splitkit::cli;

    CLI::App app{"Split digraph degree-sequence toolkit"};
    app.require_subcommand(1);

    std::string path;
    std::string format;
    bool oracle = false;
    bool slack = false;

    const std::map<std::string, std::string> commands = {
        {"check", "Report digraphic, split and splittance"},
        {"matrix", "Print the splittance matrix as CSV"},
        {"partitions", "List the split partitions induced by zero cells"},
        {"repair", "Print a minimal arc edit script (digraph input)"},
    };
    for (const auto& [name, description] : commands) {
        auto* sub = app.add_subcommand(name, description);
        sub->add_option("FILE", path, "Input file, or - for stdin")->required();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "kv"}));
        sub->add_flag("--oracle", oracle, "Cross-check against brute-force oracles");
        if (name == "matrix") sub->add_flag("--slack", slack, "Append slack and maximal-sequence rows");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kParseError;
    }

    std::string text;
    if (path == "-") {
        text = read_all(std::cin);
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            std::cerr << "cannot open " << path << '\n';
            return cli::kParseError;
        }
        text = read_all(in);
    }

    cli::Options opts;
    if (format == "csv") opts.format = cli::Format::Csv;
    else if (format == "kv") opts.format = cli::Format::Kv;
    opts.oracle = oracle;
    opts.slack = slack;
    opts.budget = cli::budget_from_env();

    const auto* command = app.get_subcommands().front();
    return cli::run(command->get_name(), text, opts, std::cout, std::cerr);
}
