#include "steenrod/cli.hpp"
#include "steenrod/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    using steenrod::JobSpec;

    CLI::App app{"Exact chain-level strong homology of maps of towers"};
    app.require_subcommand(1);

    JobSpec spec;
    std::string range;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("-i,--input", spec.inputs, "input document (JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("-d,--degree", spec.degree, "single degree");
        sub->add_option("-r,--range", range, "degree range, a:b or a..b");
        sub->add_option("-o,--output", spec.output, "write the report here instead of stdout");
    };

    auto* homology = app.add_subcommand("homology", "homology of a complex, simplicial complex or tower");
    add_io(homology);
    auto* cone = app.add_subcommand("cone", "mapping cone of a chain map or simplicial map");
    add_io(cone);
    auto* strong = app.add_subcommand("strong", "strong homology of a map tower (or a tower)");
    add_io(strong);
    auto* les = app.add_subcommand("les", "long exact sequence of a map tower");
    add_io(les);
    auto* milnor = app.add_subcommand("milnor", "Milnor sequence of a map tower, or lim / lim1 of a group tower");
    add_io(milnor);

    auto* verify = app.add_subcommand("verify", "run a seeded property suite");
    verify->add_option("-s,--suite", spec.suite, "suite name")->required();
    verify->add_option("--seed", spec.seed, "corpus seed");
    verify->add_option("-n,--count", spec.count, "number of instances");
    verify->add_option("-j,--threads", spec.threads, "worker threads (does not change the report)");
    verify->add_option("-o,--output", spec.output, "write the report here instead of stdout");

    auto* generate = app.add_subcommand("generate", "emit a valid random (or solenoid) input document");
    generate->add_option("-k,--kind", spec.kind, "document kind")->required();
    generate->add_option("--seed", spec.seed, "generator seed");
    generate->add_option("-p,--p", spec.p, "solenoid degree for tower, map_tower or group_tower");
    generate->add_option("-l,--levels", spec.levels, "tower length");
    generate->add_option("-o,--output", spec.output, "write the document here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    spec.command = app.get_subcommands().front()->get_name();
    if (!range.empty()) {
        try {
            spec.range = steenrod::parse_range(range);
        } catch (const steenrod::ParseError& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }

    auto result = steenrod::run(spec);
    if (spec.output.empty()) {
        std::cout << result.report;
    } else {
        std::ofstream out(spec.output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write '" << spec.output << "'\n";
            return 2;
        }
        out << result.report;
    }
    std::cerr << result.summary << "\n";
    return result.exit_code;
}
