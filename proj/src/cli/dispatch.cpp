#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rulerwrap/cli.hpp"
#include "rulerwrap/experiments.hpp"
#include "rulerwrap/greedy_stream.hpp"
#include "rulerwrap/oracle.hpp"
#include "rulerwrap/partition.hpp"

namespace rulerwrap::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Length>& v, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

const std::map<std::string, Variant> variant_names{{"restricted", Variant::Restricted},
                                                   {"unrestricted", Variant::Unrestricted}};

struct WrapArgs {
    Variant variant = Variant::Restricted;
    std::string algo = "linear";
    bool plan = false;
    bool trace = false;
    std::string input;
};

void print_plan(std::ostream& out, const Ruler& ruler, const WrapPlan& plan) {
    const auto x = prefix_positions(ruler);
    std::vector<Length> positions;
    for (const Hinge h : plan.folds) positions.push_back(x[h]);
    out << "folds: " << join(positions) << '\n';
    out << "hinges: " << join(std::vector<Length>(plan.folds.begin(), plan.folds.end())) << '\n';
    out << "totals: " << join(plan.part_totals) << '\n';
}

int run_wrap(const WrapArgs& a, std::istream& in, std::ostream& out) {
    const Ruler ruler = parse_lengths(read_input(a.input, in));
    if (a.trace && a.algo != "linear") {
        throw UsageError("--trace is only available with --algo linear");
    }
    WrapAnswer answer;
    if (a.algo == "linear") {
        LinearRun run = wrap_linear(ruler, a.variant, LinearOptions{.trace = a.trace, .plan = a.plan});
        if (a.trace) out << format_trace(*run.trace, ruler.size());
        answer = std::move(run.answer);
    } else if (a.algo == "nlogn") {
        answer = wrap_nlogn(ruler, a.variant, a.plan);
    } else if (a.algo == "quadratic") {
        answer = quadratic_answer(ruler, a.variant, a.plan);
    } else {
        answer = oracle::min_length(ruler, a.variant);
    }
    out << answer.length << '\n';
    if (a.plan) print_plan(out, ruler, *answer.plan);
    return 0;
}

int run_partition(const std::string& input, std::istream& in, std::ostream& out) {
    const PartitionResult r = max_parts_partition(parse_lengths(read_input(input, in)));
    out << r.count << (r.count == 1 ? " part:" : " parts:");
    for (const auto& part : r.parts) out << " [" << join(part) << ']';
    out << '\n';
    return 0;
}

int run_greedy(Variant variant, const std::string& input, std::istream& in, std::ostream& out) {
    const Ruler ruler = parse_lengths(read_input(input, in));
    const auto g = greedy_wrap(ruler.lengths(), variant);
    const Length exact = wrap_linear(ruler, variant).answer.length;
    char ratio[32];
    std::snprintf(ratio, sizeof ratio, "%.4f", static_cast<double>(g.length) / static_cast<double>(exact));
    out << "length " << g.length << '\n'
        << "folds " << g.folds << '\n'
        << "exact " << exact << '\n'
        << "ratio " << ratio << '\n';
    return 0;
}

int run_oracle_check(std::size_t max_n, const std::string& input, std::istream& in,
                     std::ostream& out) {
    const Ruler ruler = parse_lengths(read_input(input, in));
    const bool use_oracle = ruler.size() <= max_n;
    bool agree = true;
    for (const Variant v : {Variant::Restricted, Variant::Unrestricted}) {
        const Length q = quadratic_answer(ruler, v, true).length;
        const Length nl = wrap_nlogn(ruler, v, true).length;
        const Length lin = wrap_linear(ruler, v, LinearOptions{.plan = true}).answer.length;
        bool ok = q == nl && nl == lin;
        out << to_string(v) << ": quadratic " << q << " nlogn " << nl << " linear " << lin;
        if (use_oracle) {
            const Length o = oracle::min_length(ruler, v).length;
            ok = ok && o == lin;
            out << " oracle " << o;
        } else {
            out << " oracle skipped";
        }
        out << (ok ? " agree" : " DISAGREE") << '\n';
        agree = agree && ok;
    }
    return agree ? 0 : 1;
}

int run_render(const WrapArgs& a, const std::string& output, std::istream& in) {
    const Ruler ruler = parse_lengths(read_input(a.input, in));
    const auto pairs = wrap_quadratic(ruler);
    const WrapAnswer answer = wrap_linear(ruler, a.variant).answer;
    const std::string svg = render_svg(ruler, pairs, answer);
    std::ofstream f(output, std::ios::binary);
    if (!f) throw IoError("cannot open '" + output + "' for writing");
    f << svg;
    f.flush();
    if (!f) throw IoError("write to '" + output + "' failed");
    return 0;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Carpenter's ruler wrapping: exact minimizers, partitioning, greedy, experiments",
                 "rulerwrap"};
    app.require_subcommand(1);

    WrapArgs wrap;
    auto* wrap_cmd = app.add_subcommand("wrap", "Shortest wrapping length of a ruler");
    wrap_cmd->add_option("--variant", wrap.variant, "restricted|unrestricted")
        ->transform(CLI::CheckedTransformer(variant_names));
    wrap_cmd->add_option("--algo", wrap.algo, "linear|nlogn|quadratic|oracle")
        ->check(CLI::IsMember({"linear", "nlogn", "quadratic", "oracle"}));
    wrap_cmd->add_flag("--plan", wrap.plan, "Print fold positions and part totals");
    wrap_cmd->add_flag("--trace", wrap.trace, "Print the pair array after every step");
    wrap_cmd->add_option("input", wrap.input, "Lengths file, or - for stdin")->required();

    std::string partition_input;
    auto* part_cmd = app.add_subcommand("partition", "Maximum non-decreasing-totals partition");
    part_cmd->add_option("input", partition_input, "Sequence file, or - for stdin")->required();

    WrapArgs greedy;
    auto* greedy_cmd = app.add_subcommand("greedy", "Streaming fold-whenever-possible wrapping");
    greedy_cmd->add_option("--variant", greedy.variant, "restricted|unrestricted")
        ->transform(CLI::CheckedTransformer(variant_names));
    greedy_cmd->add_option("input", greedy.input, "Lengths file, or - for stdin")->required();

    std::size_t max_n = oracle::max_segments;
    std::string check_input;
    auto* check_cmd = app.add_subcommand("oracle-check", "Compare every algorithm with brute force");
    check_cmd->add_option("--max-n", max_n, "Largest n handed to the oracle")
        ->check(CLI::Range(std::size_t{1}, oracle::max_segments));
    check_cmd->add_option("input", check_input, "Lengths file, or - for stdin")->required();

    ExperimentConfig exp;
    std::vector<std::size_t> checkpoints;
    auto* exp_cmd = app.add_subcommand("experiment", "Average wrapping length at checkpoints (CSV)");
    exp_cmd->add_option("--n", exp.n, "Segments per run")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--runs", exp.runs, "Number of runs")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--lo", exp.lo, "Smallest length")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--hi", exp.hi, "Largest length")->check(CLI::PositiveNumber);
    exp_cmd->add_option("--seed", exp.seed, "Master seed");
    exp_cmd->add_option("--checkpoints", checkpoints, "Comma-separated hinge indices")
        ->delimiter(',');
    exp_cmd->add_option("--threads", exp.threads, "Worker threads (0 = all cores)");

    std::vector<std::size_t> ns;
    std::size_t occ_runs = 20;
    Length occ_lo = 1, occ_hi = 100;
    std::uint64_t occ_seed = 1;
    unsigned occ_threads = 0;
    auto* occ_cmd = app.add_subcommand("occupancy", "Mean maximum pair-array occupancy (CSV)");
    occ_cmd->add_option("--ns", ns, "Comma-separated ruler sizes")->delimiter(',')->required();
    occ_cmd->add_option("--runs", occ_runs, "Runs per size")->check(CLI::PositiveNumber);
    occ_cmd->add_option("--lo", occ_lo, "Smallest length")->check(CLI::PositiveNumber);
    occ_cmd->add_option("--hi", occ_hi, "Largest length")->check(CLI::PositiveNumber);
    occ_cmd->add_option("--seed", occ_seed, "Master seed");
    occ_cmd->add_option("--threads", occ_threads, "Worker threads (0 = all cores)");

    std::size_t blocks = 1;
    auto* adv_cmd = app.add_subcommand("adversarial", "Emit the greedy-defeating instance");
    adv_cmd->add_option("--blocks", blocks, "Block count m")->required()->check(CLI::PositiveNumber);

    WrapArgs render;
    std::string svg_out;
    auto* render_cmd = app.add_subcommand("render", "Arc diagram as SVG");
    render_cmd->add_option("--variant", render.variant, "restricted|unrestricted")
        ->transform(CLI::CheckedTransformer(variant_names));
    render_cmd->add_option("input", render.input, "Lengths file, or - for stdin")->required();
    render_cmd->add_option("-o,--output", svg_out, "Output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*wrap_cmd) return run_wrap(wrap, in, out);
        if (*part_cmd) return run_partition(partition_input, in, out);
        if (*greedy_cmd) return run_greedy(greedy.variant, greedy.input, in, out);
        if (*check_cmd) return run_oracle_check(max_n, check_input, in, out);
        if (*exp_cmd) {
            exp.checkpoints = checkpoints.empty() ? default_checkpoints(exp.n) : checkpoints;
            out << to_csv(run_random_trials(exp));
            return 0;
        }
        if (*occ_cmd) {
            out << to_csv(occupancy_growth(ns, occ_runs, occ_lo, occ_hi, occ_seed, occ_threads));
            return 0;
        }
        if (*adv_cmd) {
            const Ruler r = adversarial_family(blocks);
            out << join(std::vector<Length>(r.lengths().begin(), r.lengths().end())) << '\n';
            return 0;
        }
        if (*render_cmd) return run_render(render, svg_out, in);
    } catch (const UsageError& e) {
        err << "rulerwrap: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "rulerwrap: parse error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "rulerwrap: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace rulerwrap::cli
