#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liouville/cli/cli.hpp"

int main(int argc, char** argv) {
    using namespace liouville;
    CLI::App app{"Symbolic integration over log/exp towers: an elementary antiderivative or a proof that none exists",
                 "integrate"};
    RunConfig config;
    std::string interval, corpus;
    bool as_json = false, no_verify = false;
    app.add_option("integrand", config.integrand, "Expression to integrate, e.g. \"x*exp(x)\"");
    app.add_option("--var", config.variable, "Integration variable")->default_val("x");
    app.add_flag("--json", as_json, "Emit JSON");
    app.add_flag("--no-verify", no_verify, "Skip the exact and numeric checks of the result");
    app.add_option("--interval", interval, "Interval lo,hi for the numeric check");
    app.add_option("--corpus", corpus, "Run a regression corpus file instead of one integrand");
    // An integrand such as "-x*exp(x)" is not an option: pass it after "--".
    std::vector<std::string> args, loose;
    bool after_dashes = false;
    for (int k = 1; k < argc; ++k) {
        const std::string a = argv[k];
        if (after_dashes) {
            loose.push_back(a);
            continue;
        }
        if (a == "--") {
            after_dashes = true;
        } else if (a == "--var" || a == "--interval" || a == "--corpus") {
            args.push_back(a);
            if (k + 1 < argc) args.push_back(argv[++k]);
        } else if (a.size() > 1 && a[0] == '-' && !(a == "--json" || a == "--no-verify" || a == "-h" || a == "--help" ||
                                                    a.rfind("--var=", 0) == 0 || a.rfind("--interval=", 0) == 0 ||
                                                    a.rfind("--corpus=", 0) == 0)) {
            loose.push_back(a);
        } else {
            args.push_back(a);
        }
    }
    if (!loose.empty()) {
        args.push_back("--");
        args.insert(args.end(), loose.begin(), loose.end());
    }
    std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
    try {
        app.parse(args);
        if (corpus.empty() && config.integrand.empty()) throw CLI::RequiredError("integrand or --corpus");
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ExitUnsupported;
    }
    config.output = as_json ? OutputMode::Json : OutputMode::Text;
    config.verify = !no_verify;
    if (!corpus.empty()) config.corpus = corpus;
    if (!interval.empty()) {
        try {
            config.interval = parse_interval(interval);
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return ExitUnsupported;
        }
    }
    RunOutcome out = run(config);
    std::cout << out.output;
    if (!out.diagnostics.empty()) std::cerr << out.diagnostics;
    return out.exit_code;
}
