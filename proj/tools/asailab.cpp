#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "asailab/runspec.hpp"

using namespace asailab;

int main(int argc, char** argv) {
    CLI::App app{"asailab: exact Asai L-functions of ordinary GL(2) representations"};
    app.require_subcommand(1);

    std::string spec_path;
    RunOptions opt;
    long long prime = 3;
    int precision = 8;

    auto add_common = [&](CLI::App* cmd, bool needs_spec) {
        auto* s = cmd->add_option("--spec", spec_path, "run specification file (JSON)");
        if (needs_spec) s->required();
        cmd->add_flag("--json", opt.json, "emit canonical JSON on stdout");
        cmd->add_option("--target", opt.target, "restrict to one named object");
        cmd->add_option("--unit-budget", opt.unit_budget, "max unit enumeration size");
        cmd->add_option("--degree8-budget", opt.degree8_budget,
                        "max number of degree-8 closures (0 disables the reduction)");
    };

    std::vector<std::string> rep_commands = {"classify", "lw", "las", "l1", "twists",
                                             "check-egal", "distinguished", "run"};
    for (const std::string& name : rep_commands) {
        CLI::App* c = app.add_subcommand(name);
        add_common(c, true);
    }

    CLI::App* verify = app.add_subcommand(
        "verify", "run the brute-force lemma oracles (normbiquad, ker, hilbert, dist)");
    add_common(verify, false);
    verify->add_option("--p", prime, "base prime when no spec file is given");
    verify->add_option("--precision", precision, "working precision");
    verify->add_option("--level", opt.verify_level, "enumeration level");
    verify->add_option("--samples", opt.hilbert_samples, "sample count for the hilbert check");
    verify->add_option("--seed", opt.seed, "sampling seed");
    std::string what = "all";
    verify->add_option("--what", what, "all | normbiquad | ker | hilbert | dist");

    CorpusOptions corpus_opt;
    CLI::App* corpus = app.add_subcommand("corpus", "seeded sweep over generated representations");
    corpus->add_option("--primes", corpus_opt.primes, "base primes")->delimiter(',');
    corpus->add_option("--precision", corpus_opt.precision, "working precision");
    corpus->add_option("--seed", corpus_opt.seed, "generation seed");
    corpus->add_option("--max-level", corpus_opt.max_level, "character level bound");
    corpus->add_option("--count", corpus_opt.instances_per_field,
                       "approximate instances per (prime, K) pair");
    corpus->add_option("--unit-budget", corpus_opt.unit_budget, "max unit enumeration size");
    corpus->add_option("--degree8-budget", corpus_opt.degree8_budget,
                       "max number of degree-8 closures (0 disables the reduction)");
    bool corpus_json = false;
    corpus->add_flag("--json", corpus_json, "emit canonical JSON on stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (corpus->parsed()) {
            Json doc;
            CorpusStats stats = run_corpus(corpus_opt, corpus_json ? &doc : nullptr);
            if (corpus_json) std::cout << doc.dump(2) << "\n";
            else std::cout << corpus_text_summary(corpus_opt, stats);
            return stats.total_failures() == 0 ? 0 : 1;
        }

        RunSpec spec;
        if (!spec_path.empty()) spec = load_runspec(spec_path);
        else {
            Json minimal{{"prime", prime}, {"precision", precision}};
            spec = parse_runspec(minimal);
        }

        std::string command;
        for (const std::string& name : rep_commands)
            if (app.get_subcommand(name)->parsed()) command = name;
        if (verify->parsed()) {
            command = "verify";
            if (what != "all") opt.target = what;
        }

        RunOutcome out = run_command(spec, command, opt);
        if (opt.json) std::cout << out.document.dump(2) << "\n";
        else std::cout << out.text;
        return out.failures == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
