// Command-line front end: arrangement ingestion, subcommand dispatch, JSON
// reports on stdout. Exit codes: 0 success, 1 usage or parse error,
// 2 theorem-inconsistency detected.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "aomoto/json_io.hpp"
#include "aomoto/random_gen.hpp"

namespace {

using namespace aomoto;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> parse_order(const std::string& csv) {
    std::vector<int> order;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            order.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw ParseError("malformed --order entry: '" + item + "'");
        }
    }
    return order;
}

struct Options {
    std::string arrangement_path;
    std::string weights_path;
    std::string order_csv;
    std::string output_path;
    std::string method = "direct";
    int samples = 3;
    unsigned long long seed = 7;
    bool paper_example_compat = false;
    bool with_infinity = false;
};

void emit(const Json& report, const Options& opt) {
    if (opt.output_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(opt.output_path);
        if (!out) throw ParseError("cannot write file: " + opt.output_path);
        out << report.dump(2) << "\n";
    }
}

int dispatch(const std::string& cmd, const Options& opt) {
    Arrangement a = parse_arrangement(slurp(opt.arrangement_path));
    std::optional<WeightVector> w;
    if (!opt.weights_path.empty()) w = parse_weights(slurp(opt.weights_path), a.size());
    auto need_weights = [&]() -> const WeightVector& {
        if (!w) throw ParseError("subcommand '" + cmd + "' requires --weights");
        return *w;
    };

    Json report;
    int code = 0;
    if (cmd == "lattice") {
        report = lattice_report(a);
    } else if (cmd == "circuits") {
        report = circuits_report(a);
    } else if (cmd == "nbc") {
        report = nbc_report(a);
    } else if (cmd == "betanbc") {
        report = betanbc_report(a, opt.method);
    } else if (cmd == "charpoly") {
        report = charpoly_report(a);
    } else if (cmd == "folkman") {
        report = folkman_report(a);
    } else if (cmd == "betti") {
        report = betti_report(a);
    } else if (cmd == "os-dims") {
        report = osdims_report(a);
    } else if (cmd == "aomoto") {
        report = aomoto_report(a, need_weights());
    } else if (cmd == "basis") {
        report = basis_report(a, need_weights());
    } else if (cmd == "monomial-check") {
        report = monomial_check_report(a, need_weights());
    } else if (cmd == "transition") {
        if (opt.order_csv.empty()) throw ParseError("'transition' requires --order");
        std::vector<WeightVector> samples{need_weights()};
        FlatLattice lattice = build_lattice(a);
        std::mt19937_64 rng(opt.seed);
        while (static_cast<int>(samples.size()) < std::max(opt.samples, 1))
            samples.push_back(random_yuzvinsky_weights(rng, a, lattice));
        report = transition_report(a, parse_order(opt.order_csv), samples);
    } else if (cmd == "dense") {
        report = dense_report(a, opt.with_infinity);
    } else if (cmd == "nonresonance") {
        report = nonresonance_report(a, need_weights(), opt.paper_example_compat);
    } else if (cmd == "verify") {
        VerifyOutcome outcome = verify_report(a, w ? &*w : nullptr, opt.paper_example_compat);
        report = outcome.report;
        code = outcome.ok ? 0 : 2;
    } else {
        throw ParseError("unknown subcommand: " + cmd);
    }
    emit(report, opt);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics and twisted cohomology of affine hyperplane arrangements"};
    app.require_subcommand(1);

    Options opt;
    std::vector<CLI::App*> subs;
    for (const char* name :
         {"lattice", "circuits", "nbc", "betanbc", "charpoly", "folkman", "betti", "os-dims",
          "aomoto", "basis", "monomial-check", "transition", "dense", "nonresonance", "verify"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("arrangement", opt.arrangement_path, "arrangement JSON file")->required();
        sub->add_option("--weights", opt.weights_path, "weights JSON file (array of rationals)");
        sub->add_option("--output", opt.output_path, "write the report to a file");
        sub->add_flag("--paper-example-compat", opt.paper_example_compat,
                      "drop the lambda_infinity-alone nonresonance condition");
        if (std::string(name) == "betanbc")
            sub->add_option("--method", opt.method, "direct | recursive | shelling");
        if (std::string(name) == "transition") {
            sub->add_option("--order", opt.order_csv, "comma-separated permutation of 1..n")
                ->required();
            sub->add_option("--samples", opt.samples, "number of weight samples (default 3)");
            sub->add_option("--seed", opt.seed, "seed for generated weight samples");
        }
        if (std::string(name) == "dense")
            sub->add_flag("--with-infinity", opt.with_infinity,
                          "include dense elements at infinity");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        aomoto::Json err;
        err["error"] = {{"kind", "usage"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }

    std::string cmd;
    for (CLI::App* sub : subs)
        if (sub->parsed()) cmd = sub->get_name();

    try {
        return dispatch(cmd, opt);
    } catch (const aomoto::InconsistencyError& e) {
        aomoto::Json err;
        err["error"] = {{"kind", "inconsistency"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        aomoto::Json err;
        err["error"] = {{"kind", "parse"}, {"message", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
}
