// Acceptance suite: one check per criterion, one PASS/FAIL line each.
//
//   acceptance            run everything
//   acceptance 3 7        run criteria 3 and 7 only

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rulerwrap/experiments.hpp"
#include "rulerwrap/greedy_stream.hpp"
#include "rulerwrap/oracle.hpp"
#include "rulerwrap/partition.hpp"
#include "rulerwrap/wrap_algorithms.hpp"

using namespace rulerwrap;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures for one criterion; details are printed indented.
class Check {
public:
    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures_;
            if (failures_ <= 10) std::printf("      failed: %s\n", what.c_str());
        }
    }
    void note(const std::string& what) { std::printf("      %s\n", what.c_str()); }
    bool ok() const { return failures_ == 0; }

private:
    int failures_ = 0;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

const Ruler running{5, 6, 3, 4, 8, 6, 2, 1, 8, 5};
constexpr std::uint64_t suite_seed = 20211;

// Suite 3a: n in 1..50, lengths 1..100. Suite 3b: n in 1..12, lengths 1..8.
std::vector<Ruler> make_suite(std::size_t count, std::size_t max_n, Length max_len,
                              std::uint64_t seed) {
    std::vector<Ruler> out;
    out.reserve(count);
    for (std::size_t t = 0; t < count; ++t) {
        LengthSource size_src(trial_seed(seed, t), 1, max_n);
        const auto n = static_cast<std::size_t>(size_src.next());
        out.push_back(random_ruler(n, 1, max_len, trial_seed(seed + 1, t)));
    }
    return out;
}

// 1. Running-example trace.
void criterion_1(Check& c) {
    const auto t0 = Clock::now();
    const LinearRun run = wrap_linear(running, Variant::Restricted, LinearOptions{.trace = true});
    const double elapsed = seconds_since(t0);

    using Row = std::vector<std::tuple<std::size_t, Length, Length>>;
    const std::vector<Row> table{
        {{0, 0, 0}},
        {{0, 0, 0}, {1, 5, 5}},
        {{1, 5, 5}, {2, 11, 6}},
        {{1, 5, 5}, {2, 11, 6}, {3, 14, 9}},
        {{2, 11, 6}, {3, 14, 9}, {4, 18, 7}},
        {{4, 18, 7}, {5, 26, 8}},
        {{4, 18, 7}, {5, 26, 8}, {6, 32, 14}},
        {{5, 26, 8}, {6, 34, 8}},
        {{5, 26, 8}, {6, 34, 8}, {7, 35, 9}},
        {{6, 34, 8}, {7, 35, 9}, {8, 43, 9}},
        {{7, 35, 9}, {8, 43, 9}, {9, 48, 13}},
    };
    const auto& trace = *run.trace;
    c.require(trace.size() == 11, "11 trace rows");
    for (std::size_t s = 0; s < std::min(trace.size(), table.size()); ++s) {
        Row got;
        for (const auto& e : trace[s].live) got.emplace_back(e.slot, e.pair.x, e.pair.y);
        c.require(got == table[s], "row " + std::to_string(s) + " matches the reference table");
    }
    // Left discards at 2, 4, 5, 9, 10 (and at 7, where the row itself drops
    // (18, 7) next to the right discard of (32, 14)).
    std::vector<std::size_t> left;
    for (const auto& t : trace) {
        if (!t.left_discards.empty()) left.push_back(t.step);
    }
    c.require(left == std::vector<std::size_t>{2, 4, 5, 7, 9, 10}, "left-discard steps");
    for (const auto& t : trace) {
        const bool expect_right = t.step == 7;
        c.require(expect_right ? (t.right_discards.size() == 1 && t.right_discards[0].x == 32 &&
                                  t.right_discards[0].y == 14)
                               : t.right_discards.empty(),
                  "right discards at step " + std::to_string(t.step));
    }
    c.require(elapsed < 1e-3, "trace under 1 ms (" + fmt("%.6f s", elapsed) + ")");
}

// 2. Exact answers on the running example.
void criterion_2(Check& c) {
    for (const auto v : {Variant::Restricted, Variant::Unrestricted}) {
        const Length expected = v == Variant::Restricted ? 13 : 9;
        const auto name = to_string(v);
        c.require(quadratic_answer(running, v, true).length == expected, name + " quadratic");
        c.require(wrap_nlogn(running, v, true).length == expected, name + " nlogn");
        c.require(wrap_linear(running, v, {.plan = true}).answer.length == expected, name + " linear");
        c.require(oracle::min_length(running, v).length == expected, name + " oracle");
    }
}

// 3. Cross-algorithm equivalence and oracle equality.
// 4 shares suite 3 for the last-part assertion.
void criterion_3(Check& c) {
    const auto t0 = Clock::now();
    const auto big = make_suite(10000, 50, 100, suite_seed);
    std::size_t checked = 0;
    for (const Ruler& r : big) {
        for (const auto v : {Variant::Restricted, Variant::Unrestricted}) {
            const Length q = quadratic_answer(r, v, true).length;
            const Length nl = wrap_nlogn(r, v, true).length;
            const Length lin = wrap_linear(r, v, {.plan = true}).answer.length;
            c.require(q == nl && nl == lin, "quadratic = nlogn = linear");
            ++checked;
        }
    }
    const auto small = make_suite(2000, 12, 8, suite_seed + 100);
    for (const Ruler& r : small) {
        for (const auto v : {Variant::Restricted, Variant::Unrestricted}) {
            const Length o = oracle::min_length(r, v).length;
            c.require(quadratic_answer(r, v).length == o && wrap_nlogn(r, v).length == o &&
                          wrap_linear(r, v).answer.length == o,
                      "all algorithms equal the oracle");
        }
    }
    const double elapsed = seconds_since(t0);
    c.note(std::to_string(checked) + " cross-checks on 10000 rulers, 4000 oracle checks on 2000 rulers, " +
           fmt("%.2f s", elapsed));
    c.require(elapsed < 60.0, "under 1 min");
}

// 4. Max-parts correctness.
void criterion_4(Check& c) {
    c.require(max_parts_partition(Ruler{1, 1, 3}).count == 3, "[1,1,3] -> 3 parts");
    c.require(max_parts_partition(Ruler{2, 1, 3}).count == 2, "[2,1,3] -> 2 parts");
    for (const Ruler& r : make_suite(2000, 12, 8, suite_seed + 100)) {
        c.require(max_parts_partition(r).count == oracle::max_parts(r), "count = oracle_max_parts");
    }
    for (const Ruler& r : make_suite(10000, 50, 100, suite_seed)) {
        c.require(max_parts_partition(r).totals.back() ==
                      wrap_linear(r, Variant::Restricted).answer.length,
                  "last part total = restricted answer");
    }
}

ExperimentConfig desk_config() {
    ExperimentConfig cfg;
    cfg.n = 10000;
    cfg.runs = 200;
    cfg.lo = 1;
    cfg.hi = 100;
    cfg.seed = 1;
    cfg.checkpoints = {0, 1, 10, 100, 1000, 10000};
    return cfg;
}

// 5. Desk-scale averages.
void criterion_5(Check& c) {
    const auto t0 = Clock::now();
    const TrialStats s = run_random_trials(desk_config());
    const double elapsed = seconds_since(t0);
    c.require(s.at(0).sum == 0, "avg_y[0] = 0");
    const std::map<std::size_t, double> reported{
        {1, 50.9}, {10, 188.0}, {100, 547.6}, {1000, 1624.2}, {10000, 4948.4}};
    for (const auto& [hinge, value] : reported) {
        const double got = s.at(hinge).value();
        c.note("hinge " + std::to_string(hinge) + ": " + s.at(hinge).one_decimal() + " vs " +
               fmt("%.1f", value) + " (" + fmt("%+.2f%%", 100.0 * (got - value) / value) + ")");
        c.require(std::abs(got - value) <= 0.05 * value, "hinge " + std::to_string(hinge) + " within 5%");
    }
    c.require(elapsed < 60.0, "under 1 min (" + fmt("%.2f s", elapsed) + ")");
}

// 6. Square-root growth of averages and occupancy.
void criterion_6(Check& c) {
    const auto t0 = Clock::now();
    const TrialStats s = run_random_trials(desk_config());
    const double ratio = s.at(10000).value() / s.at(100).value();
    c.note("avg_y[10000]/avg_y[100] = " + fmt("%.3f", ratio));
    c.require(ratio >= 7.0 && ratio <= 13.0, "average ratio in [7, 13]");

    const auto rows = occupancy_growth({10000, 1000000}, 20, 1, 100, 1);
    const double occ = rows[1].mean() / rows[0].mean();
    c.note("mean max occupancy " + rows[0].one_decimal() + " -> " + rows[1].one_decimal() +
           ", ratio " + fmt("%.3f", occ));
    c.require(occ >= 5.0 && occ <= 20.0, "occupancy ratio in [5, 20]");
    const double elapsed = seconds_since(t0);
    c.require(elapsed < 300.0, "under 5 min (" + fmt("%.2f s", elapsed) + ")");
}

// 7. All-equal ruler.
void criterion_7(Check& c) {
    const Ruler r(std::vector<Length>(1000000, 100));
    const auto t0 = Clock::now();
    const Length len = wrap_linear(r, Variant::Restricted).answer.length;
    const double elapsed = seconds_since(t0);
    c.require(len == 100, "restricted length 100 (got " + std::to_string(len) + ")");
    c.note(fmt("%.4f s", elapsed));
    c.require(elapsed < 0.5, "well under 1 s");
}

// 8. Greedy ratio on random instances.
void criterion_8(Check& c) {
    const auto t0 = Clock::now();
    const auto rep = random_ratio_experiment(1000, 1000, 1, 100, 1, Variant::Restricted);
    const double elapsed = seconds_since(t0);
    c.note("mean restricted greedy/exact = " + fmt("%.4f", rep.mean) + ", max " + fmt("%.4f", rep.max));
    c.require(rep.mean <= 1.3, "mean ratio <= 1.3");
    c.require(elapsed < 30.0, "under 30 s (" + fmt("%.2f s", elapsed) + ")");
}

// 9. Greedy ratio growth on the adversarial family.
void criterion_9(Check& c) {
    std::vector<double> ratios;
    for (const std::size_t m : {4u, 16u, 64u}) {
        const std::vector<Ruler> one{adversarial_family(m)};
        ratios.push_back(ratio_experiment(one, Variant::Restricted).ratios.front());
        c.note("m = " + std::to_string(m) + ": ratio " + fmt("%.4f", ratios.back()));
    }
    c.require(ratios[0] < ratios[1] && ratios[1] < ratios[2], "strictly increasing");
    c.require(ratios[2] / ratios[0] >= 2.0, "ratio(64)/ratio(4) >= 2");
}

// 10. Linear work and time.
void criterion_10(Check& c) {
    for (const Ruler& r : make_suite(2000, 500, 100, suite_seed + 7)) {
        const auto st = wrap_linear(r, Variant::Restricted).stats;
        c.require(st.head_advances + st.tail_discards <= r.size(), "head_advances + tail_discards <= n");
    }
    auto timed = [&](std::size_t n) {
        const Ruler r = random_ruler(n, 1, 100, trial_seed(77, n));
        double best = 1e9;
        for (int rep = 0; rep < 5; ++rep) {
            const auto t0 = Clock::now();
            const auto run = wrap_linear(r, Variant::Restricted);
            best = std::min(best, seconds_since(t0));
            c.require(run.stats.head_advances + run.stats.tail_discards <= n, "counter bound");
        }
        return best;
    };
    const double t1 = timed(1000000), t2 = timed(2000000), t4 = timed(4000000);
    c.note("1e6: " + fmt("%.4f s", t1) + ", 2e6: " + fmt("%.4f s", t2) + ", 4e6: " + fmt("%.4f s", t4));
    c.require(t2 / t1 <= 2.5, "doubling 1e6 -> 2e6 at most 2.5x (" + fmt("%.2f", t2 / t1) + ")");
    c.require(t4 / t2 <= 2.5, "doubling 2e6 -> 4e6 at most 2.5x (" + fmt("%.2f", t4 / t2) + ")");

    const Ruler big = random_ruler(10000000, 1, 100, trial_seed(77, 10000000));
    const auto t0 = Clock::now();
    const auto run = wrap_linear(big, Variant::Restricted);
    const double t10 = seconds_since(t0);
    c.note("1e7: " + fmt("%.4f s", t10) + ", length " + std::to_string(run.answer.length));
    c.require(run.stats.head_advances + run.stats.tail_discards <= big.size(), "counter bound at 1e7");
    // Per-segment cost at 1e7 within the same 2.5x slack as a doubling step.
    c.require(t10 / 1e7 <= 2.5 * t4 / 4e6, "1e7 per-segment time in line with 4e6");
}

// 11. Scale invariance.
void criterion_11(Check& c) {
    for (std::size_t t = 0; t < 100; ++t) {
        LengthSource size_src(trial_seed(31, t), 1, 200);
        const Ruler r = random_ruler(static_cast<std::size_t>(size_src.next()), 1, 100, trial_seed(32, t));
        const auto base_pairs = wrap_quadratic(r);
        for (const Length k : {2u, 7u, 1000u}) {
            const Ruler s = r.scaled(k);
            const auto pairs = wrap_quadratic(s);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                c.require(pairs[i].y == k * base_pairs[i].y, "y_i scales");
            }
            for (const auto v : {Variant::Restricted, Variant::Unrestricted}) {
                const auto a = wrap_linear(r, v, {.plan = true}).answer;
                const auto b = wrap_linear(s, v, {.plan = true}).answer;
                c.require(b.length == k * a.length, "answer scales");
                c.require(b.plan->folds == a.plan->folds, "fold hinges unchanged");
                bool totals = b.plan->part_totals.size() == a.plan->part_totals.size();
                for (std::size_t j = 0; totals && j < a.plan->part_totals.size(); ++j) {
                    totals = b.plan->part_totals[j] == k * a.plan->part_totals[j];
                }
                c.require(totals, "part totals scale");
            }
        }
    }
}

const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria{
    {"running-example trace reproduced exactly", criterion_1},
    {"running example: restricted 13, unrestricted 9, all routes agree", criterion_2},
    {"cross-algorithm and oracle equivalence", criterion_3},
    {"max-parts partition correctness", criterion_4},
    {"desk-scale averages within 5%", criterion_5},
    {"square-root growth of averages and occupancy", criterion_6},
    {"all-equal ruler wraps into 100", criterion_7},
    {"greedy mean ratio <= 1.3 on random instances", criterion_8},
    {"greedy ratio grows on the adversarial family", criterion_9},
    {"linear work counters and time", criterion_10},
    {"scale invariance", criterion_11},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::strtoul(argv[i], nullptr, 10));
    if (selected.empty()) {
        for (std::size_t i = 1; i <= criteria.size(); ++i) selected.push_back(i);
    }
    int failed = 0;
    for (const std::size_t id : selected) {
        if (id < 1 || id > criteria.size()) {
            std::fprintf(stderr, "unknown criterion %zu\n", id);
            return 2;
        }
        const auto& [name, body] = criteria[id - 1];
        Check c;
        const auto t0 = Clock::now();
        body(c);
        std::printf("[%s] %2zu. %s (%.2f s)\n", c.ok() ? "PASS" : "FAIL", id, name, seconds_since(t0));
        std::fflush(stdout);
        if (!c.ok()) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
