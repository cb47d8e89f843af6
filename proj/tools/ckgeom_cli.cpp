#include "ckgeom/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    using namespace ckgeom;
    CLI::App app{"Exact Cayley-Klein geometry calculator"};
    std::string command, input, space, format = "text";
    std::vector<std::string> operands;
    bool semi = false;
    int digits = 12;
    app.add_option("command", command, "classify | quadrance | distance | reflect | centers | perpendiculars | sphere | clifford-check")
        ->required();
    app.add_option("input", input, "document file, '-' for stdin")->required();
    app.add_option("operands", operands, "names declared in the document");
    app.add_option("--space", space, "space literal, overrides the document's 'space:' line");
    app.add_flag("--semi", semi, "allow literal 0 diagonal entries (semi-CK spaces)");
    auto* digits_opt = app.add_option("--digits", digits, "decimal places; also renders rationals as decimals")
                           ->check(CLI::Range(0, 60));
    app.add_option("--format", format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    Job job;
    auto cmd = parse_command(command);
    if (!cmd) {
        std::cerr << "error: unknown command '" << command << "'\n";
        return 1;
    }
    job.command = *cmd;
    job.operands = operands;
    job.format = format == "tsv" ? Format::tsv : Format::text;
    if (*digits_opt) job.digits = digits;
    if (const char* s = std::getenv("CKGEOM_SEED")) {
        try {
            job.seed = std::stoull(s);
        } catch (const std::exception&) {
            std::cerr << "error: CKGEOM_SEED must be an unsigned integer\n";
            return 1;
        }
    }

    try {
        std::optional<CKStructure> ck;
        if (!space.empty()) ck = CKStructure::parse(space, semi);
        if (input == "-") {
            job.doc = parse_document(std::cin, semi, ck);
        } else {
            std::ifstream in(input);
            if (!in) {
                std::cerr << "error: cannot open '" << input << "'\n";
                return 1;
            }
            job.doc = parse_document(in, semi, ck);
        }
        if (!job.doc.space) throw ParseError(1, 1, "no 'space:' line and no --space");
    } catch (const ParseError& e) {
        std::cerr << input << ":" << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: --space: " << e.what() << "\n";
        return 1;
    }

    Report r = run(job);
    std::cout << render(r, job.format);
    if (r.status) std::cerr << "error: " << r.error << "\n";
    return r.status;
}
