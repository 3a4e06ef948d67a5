#include "reylie/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace reylie;

int main(int argc, char **argv) {
    CLI::App app{"Exact computations with Reynolds LieDer pairs"};
    app.require_subcommand(1);

    std::string path;
    bool json_out = false;
    cli::CohomologyOptions opt;
    std::string complex = "ce", degrees;

    auto common = [&](CLI::App *sub) {
        sub->add_option("file", path, "JSON envelope or workspace file")->required();
        sub->add_flag("--json", json_out, "Machine-readable report on stdout");
        sub->add_flag("--strict-literal", opt.strict_literal, "Also evaluate the literal variants (audit only)");
        sub->add_option("--item", opt.item, "Name of the workspace item to use");
    };

    auto *validate = app.add_subcommand("validate", "Run every applicable validator");
    common(validate);
    auto *cohom = app.add_subcommand("cohomology", "Cohomology dimensions per degree");
    common(cohom);
    cohom->add_option("--complex", complex, "ce, reynolds, r or rlieder")
        ->check(CLI::IsMember({"ce", "reynolds", "r", "rlieder"}));
    cohom->add_option("--degrees", degrees, "Degree N or range A..B");
    cohom->add_flag("--basis", opt.basis, "Print cocycle bases");
    auto *deform = app.add_subcommand("deform", "Check a truncated formal deformation");
    common(deform);
    auto *extend = app.add_subcommand("extend", "Assemble an abelian extension from a datum");
    common(extend);
    auto *obstruction = app.add_subcommand("obstruction", "Decide extensibility of a derivation pair");
    common(obstruction);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : cli::InputFailure;
    }

    auto command = [&](const io::Workspace &ws) -> cli::Outcome {
        if (*validate)
            return cli::validate(ws, opt);
        if (*cohom) {
            opt.complex = *parse_complex_kind(complex);
            if (!degrees.empty())
                opt.degrees = cli::parse_degrees(degrees);
            return cli::cohomology(ws, opt);
        }
        if (*deform)
            return cli::deform(ws, opt);
        if (*extend)
            return cli::extend(ws, opt);
        return cli::obstruct(ws, opt);
    };
    cli::Outcome out = cli::run_file(path, command);
    if (json_out)
        std::cout << out.report.dump(2) << "\n";
    else
        (out.status == cli::InputFailure ? std::cerr : std::cout) << out.text;
    return out.status;
}
