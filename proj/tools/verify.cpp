#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "k3a5/report.hpp"

// Exit codes: 0 all checks pass (flagged entries do not fail the run),
// 1 at least one check failed, 2 usage error.
int main(int argc, char** argv) {
    CLI::App app{"exact verification of the fixed-point, character and lattice computations "
                 "behind the classification of A5 extensions acting on K3 surfaces"};

    std::string selector;
    std::string format = "text";
    std::string out_path;
    app.add_option("selector", selector, "check suite to run")
        ->required()
        ->check(CLI::IsMember(k3a5::suite_selectors()));
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--out", out_path, "write the report to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    k3a5::VerificationReport report;
    try {
        report = k3a5::run_suite(selector);
    } catch (const k3a5::UnknownSelector& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::string rendered = k3a5::render_report(
        report, format == "text" ? k3a5::ReportFormat::text : k3a5::ReportFormat::structured);
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return 2;
        }
        out << rendered;
    }
    return report.success() ? 0 : 1;
}
