#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "relfact/connectivity.hpp"
#include "relfact/factorizer.hpp"
#include "relfact/instance_io.hpp"
#include "relfact/partition.hpp"
#include "relfact/poly.hpp"
#include "relfact/solver.hpp"

namespace relfact::cli {

namespace {

using json = nlohmann::json;

constexpr double kVerifyTolerance = 1e-9;

struct Options {
    std::string input;
    std::optional<int> bound;
    std::size_t jobs = 1;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 1;
    std::size_t n = 0;
    std::optional<std::size_t> max_separator;
    std::string pivot = "k-incident";
    bool as_json = false;
    bool verify = false;
    bool memo = false;
};

std::string number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

SolverConfig solver_config(const Options& o)
{
    SolverConfig cfg;
    cfg.pivot = o.pivot == "lowest-id" ? PivotRule::lowest_id : PivotRule::k_incident;
    cfg.memoization = o.memo;
    return cfg;
}

std::size_t separator_cap(const Options& o)
{
    if (o.max_separator) return *o.max_separator;
    if (const char* env = std::getenv("RELFACT_MAX_SEP")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            throw std::invalid_argument(std::string("RELFACT_MAX_SEP is not a number: ") + env);
        }
    }
    return kDefaultSeparatorCap;
}

std::optional<int> effective_bound(const Options& o, const InstanceFile& f)
{
    return o.bound ? o.bound : f.instance.bound();
}

int cmd_exact(const Options& o, std::ostream& out)
{
    const InstanceFile f = load_instance(o.input);
    const Polynomial poly = reliability_poly(f.instance, solver_config(o));
    const auto threshold = poly.min_degree();
    if (o.as_json) {
        json doc{{"command", "exact"}, {"poly", to_json(poly)}, {"text", to_string(poly)},
                 {"reliability", eval_one(poly)}};
        doc["threshold"] = threshold ? json(*threshold) : json(nullptr);
        out << doc.dump(2) << '\n';
    } else {
        out << "I(x) = " << to_string(poly) << '\n';
        out << "R = " << number(eval_one(poly)) << '\n';
        out << "threshold = " << (threshold ? std::to_string(*threshold) : "none") << '\n';
    }
    return kExitOk;
}

int cmd_truncated(const Options& o, std::ostream& out)
{
    const InstanceFile f = load_instance(o.input);
    const auto bound = effective_bound(o, f);
    if (!bound) throw std::invalid_argument("no energy bound: pass --bound or set \"bound\" in the instance");
    const TruncatedPoly poly = truncated_poly(f.instance, *bound, solver_config(o));
    if (o.as_json) {
        json doc{{"command", "truncated"}, {"bound", *bound}, {"poly", to_json(poly.representative())},
                 {"text", to_string(poly)}, {"constrained_reliability", constrained_prob(poly)}};
        out << doc.dump(2) << '\n';
    } else {
        out << "I_" << *bound << "(x) = " << to_string(poly) << '\n';
        out << "R_" << *bound << " = " << number(constrained_prob(poly)) << '\n';
    }
    return kExitOk;
}

int cmd_factorize(const Options& o, std::ostream& out, std::ostream& err)
{
    const InstanceFile f = load_instance(o.input);
    const auto bound = effective_bound(o, f);
    const Decomposition d = decomposition_of(f);

    FactorizeOptions fo;
    fo.jobs = o.jobs;
    fo.solver = solver_config(o);
    fo.max_separator = separator_cap(o);

    const Validation v = validate(d);
    const Polynomial poly = bound ? factorize(d, *bound, fo).representative() : factorize(d, fo);
    const ReliabilityInstance whole = merge(d);
    const bool extended = whole.terminals() != f.instance.terminals();

    std::optional<double> deviation;
    if (o.verify) {
        const Polynomial direct = bound ? truncated_poly(whole, *bound, fo.solver).representative()
                                        : reliability_poly(whole, fo.solver);
        deviation = max_abs_diff(poly, direct);
    }
    const bool verified = !deviation || *deviation <= kVerifyTolerance;

    if (o.as_json) {
        json doc{{"command", "factorize"},
                 {"separator_size", d.separator.size()},
                 {"states", enumerate_partitions(d.separator.size(), fo.max_separator).size()},
                 {"poly", to_json(poly)},
                 {"text", to_string(poly)},
                 {"reliability", eval_one(poly)},
                 {"zero_by_reachability", v == Validation::zero_reliability},
                 {"separator_added_to_K", extended}};
        doc["bound"] = bound ? json(*bound) : json(nullptr);
        if (deviation) doc["verify"] = {{"max_deviation", *deviation}, {"ok", verified}};
        out << doc.dump(2) << '\n';
    } else {
        if (extended) out << "note: separator nodes added to K\n";
        if (v == Validation::zero_reliability) out << "note: a terminal cannot reach the separator; reliability is 0\n";
        out << (bound ? "I_" + std::to_string(*bound) : std::string("I")) << "(x) = " << to_string(poly) << '\n';
        out << (bound ? "R_" + std::to_string(*bound) : std::string("R")) << " = " << number(eval_one(poly)) << '\n';
        if (deviation) out << "verify: max deviation = " << number(*deviation) << '\n';
    }
    if (!verified) {
        err << "error: factorized result deviates from direct computation by " << number(*deviation) << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

int cmd_montecarlo(const Options& o, std::ostream& out)
{
    const InstanceFile f = load_instance(o.input);
    const auto bound = effective_bound(o, f);
    const Polynomial poly = monte_carlo_poly(f.instance, o.samples, o.seed);
    if (o.as_json) {
        json doc{{"command", "montecarlo"}, {"samples", o.samples}, {"seed", o.seed},
                 {"poly", to_json(poly)},    {"text", to_string(poly)}, {"reliability", eval_one(poly)}};
        if (bound) {
            doc["bound"] = *bound;
            doc["constrained_reliability"] = constrained_prob(truncate(poly, *bound));
        }
        out << doc.dump(2) << '\n';
    } else {
        out << "I(x) ~ " << to_string(poly) << '\n';
        out << "R ~ " << number(eval_one(poly)) << '\n';
        if (bound) out << "R_" << *bound << " ~ " << number(constrained_prob(truncate(poly, *bound))) << '\n';
    }
    return kExitOk;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows)
{
    std::size_t width = 1;
    for (const auto& row : rows)
        for (const auto& cell : row) width = std::max(width, cell.size());
    for (const auto& row : rows) {
        out << ' ';
        for (const auto& cell : row) out << ' ' << std::string(width - cell.size(), ' ') << cell;
        out << '\n';
    }
}

int cmd_matrix(const Options& o, std::ostream& out)
{
    const ConnMatrix a = connectivity_matrix(o.n, separator_cap(o));
    const ConnMatrixInverse b = invert_exact(a);
    const std::size_t m = a.size();

    std::vector<std::string> order;
    std::vector<std::vector<std::string>> a_rows(m), b_rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        order.push_back(to_string(a.order()[i]));
        for (std::size_t j = 0; j < m; ++j) {
            a_rows[i].push_back(std::to_string(a.at(i, j)));
            b_rows[i].push_back(to_string(b.at(i, j)));
        }
    }

    if (o.as_json) {
        json a_json = json::array();
        for (std::size_t i = 0; i < m; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m; ++j) row.push_back(a.at(i, j));
            a_json.push_back(row);
        }
        json doc{{"command", "matrix"}, {"n", o.n}, {"order", order}, {"A", a_json}, {"A_inv", b_rows}};
        out << doc.dump(2) << '\n';
    } else {
        out << "order:\n";
        for (std::size_t i = 0; i < m; ++i) out << "  " << i + 1 << "  " << order[i] << '\n';
        out << "A:\n";
        print_table(out, a_rows);
        out << "A^-1:\n";
        print_table(out, b_rows);
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Constrained-energy K-reliability: exact, truncated, factorized and Monte-Carlo"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input,-i", o.input, "Instance JSON file")->required();
        cmd->add_flag("--json", o.as_json, "Print JSON");
        cmd->add_option("--pivot", o.pivot, "Pivot rule")->check(CLI::IsMember({"k-incident", "lowest-id"}));
        cmd->add_flag("--memo", o.memo, "Memoize deletion-contraction subproblems");
    };

    auto* exact = app.add_subcommand("exact", "Reliability polynomial I_K(G) and R_K");
    add_common(exact);

    auto* trunc = app.add_subcommand("truncated", "Class of I_K(G) modulo x^(l+1) and R_{K,l}");
    add_common(trunc);
    trunc->add_option("--bound,-l", o.bound, "Energy bound l")->check(CLI::NonNegativeNumber);

    auto* fact = app.add_subcommand("factorize", "Factorize across the separator given in the instance");
    add_common(fact);
    fact->add_option("--bound,-l", o.bound, "Energy bound l")->check(CLI::NonNegativeNumber);
    fact->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    fact->add_flag("--verify", o.verify, "Recompute directly and report the deviation");
    fact->add_option("--max-separator", o.max_separator, "Largest separator accepted");

    auto* mc = app.add_subcommand("montecarlo", "Monte-Carlo estimate of I_K(G)");
    add_common(mc);
    mc->add_option("--bound,-l", o.bound, "Energy bound l")->check(CLI::NonNegativeNumber);
    mc->add_option("--samples,-N", o.samples, "Sample count")->check(CLI::PositiveNumber);
    mc->add_option("--seed", o.seed, "Generator seed");

    auto* mat = app.add_subcommand("matrix", "Connectivity matrix A and its exact inverse");
    mat->add_option("--n,-n", o.n, "Separator size")->required()->check(CLI::PositiveNumber);
    mat->add_option("--max-separator", o.max_separator, "Largest separator accepted");
    mat->add_flag("--json", o.as_json, "Print JSON");

    std::vector<char*> argv;
    std::vector<std::string> storage = args;
    if (storage.empty()) storage.emplace_back("relfact");
    for (auto& a : storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (*exact) return cmd_exact(o, out);
        if (*trunc) return cmd_truncated(o, out);
        if (*fact) return cmd_factorize(o, out, err);
        if (*mc) return cmd_montecarlo(o, out);
        return cmd_matrix(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

} // namespace relfact::cli
