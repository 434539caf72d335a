// Command-line front end. Every command echoes its resolved configuration
// (including the seed) so any output can be reproduced byte for byte.

#include "shelf/audits.hpp"
#include "shelf/errors.hpp"
#include "shelf/exact.hpp"
#include "shelf/genfunc.hpp"
#include "shelf/kernels.hpp"
#include "shelf/machine.hpp"
#include "shelf/permstat.hpp"
#include "shelf/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

namespace {

using namespace shelf;

struct CommonOpts {
    std::string format = "table";
    int digits = 3;
    bool exact = false;
    std::string output; // optional file; SHELF_OUTPUT_DIR prefixes relative paths
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--digits", opts.digits, "Decimal digits for rendered values")
        ->check(CLI::Range(1, 50))
        ->capture_default_str();
    cmd->add_flag("--exact", opts.exact, "Render probabilities as num/den");
    cmd->add_option("--output", opts.output,
                    "Write the report to this file (SHELF_OUTPUT_DIR prefixes "
                    "relative paths) instead of stdout");
}

RenderOptions render_options(const CommonOpts& c) {
    return RenderOptions{c.format, c.digits, c.exact};
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::filesystem::path path(opts.output);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("SHELF_OUTPUT_DIR")) path = std::filesystem::path(dir) / path;
    }
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file: " + path.string());
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    std::cout << "wrote " << path.string() << "\n";
}

void emit_json(const CommonOpts& opts, const ojson& doc) {
    emit(opts, doc.dump(2));
}

std::uint64_t resolve_seed(std::optional<std::uint64_t>& seed) {
    if (!seed) {
        std::random_device rd;
        seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        std::cerr << "note: no --seed given; drew seed=" << *seed
                  << " from system entropy\n";
    }
    return *seed;
}

void append_common_config(Config& cfg, const CommonOpts& opts) {
    cfg.emplace_back("format", opts.format);
    cfg.emplace_back("digits", std::to_string(opts.digits));
    cfg.emplace_back("exact", opts.exact ? "1" : "0");
}

// ---------------------------------------------------------------- dist ----

struct DistArgs {
    int n = 52;
    long shelves = 0;
    bool table1 = false;
    bool scan_all = false;
    CommonOpts common;
};

void run_dist(const DistArgs& a) {
    if (!a.table1 && a.shelves < 1)
        throw InputError("dist: give --shelves or --table1");
    ValleyTable table(a.n);
    std::vector<long> ms;
    if (a.table1)
        ms = {10, 15, 20, 25, 30, 35, 50, 100, 150, 200, 250, 300};
    else
        ms = {a.shelves};

    std::vector<DistanceReport> rows;
    for (long m : ms) rows.push_back(distances(ShelfSpec(a.n, m), table, a.scan_all));

    Config cfg;
    cfg.emplace_back("cmd", "dist");
    cfg.emplace_back("n", std::to_string(a.n));
    if (a.table1)
        cfg.emplace_back("table1", "1");
    else
        cfg.emplace_back("shelves", std::to_string(a.shelves));
    append_common_config(cfg, a.common);

    const auto opt = render_options(a.common);
    if (a.common.format == "json") {
        if (a.table1)
            emit_json(a.common, distance_table_json(rows, cfg, opt));
        else
            emit_json(a.common, distance_report_json(rows.front(), cfg, opt));
    } else if (a.common.format == "csv") {
        emit(a.common, distance_table_csv(rows, cfg, opt));
    } else {
        emit(a.common, distance_table_text(rows, cfg, opt));
    }
}

// ---------------------------------------------------------------- prob ----

struct ProbArgs {
    long shelves = 0;
    std::string perm;
    CommonOpts common;
};

void run_prob(const ProbArgs& a) {
    auto w = Permutation::parse(a.perm);
    ShelfSpec spec(w.size(), a.shelves);
    const int v = valleys(w);
    const Rat p = shelf_prob(spec, w);

    Config cfg;
    cfg.emplace_back("cmd", "prob");
    cfg.emplace_back("n", std::to_string(w.size()));
    cfg.emplace_back("shelves", std::to_string(a.shelves));
    cfg.emplace_back("perm", w.to_string());
    append_common_config(cfg, a.common);

    const auto opt = render_options(a.common);
    if (a.common.format == "json") {
        ojson o;
        o["schema_version"] = kSchemaVersion;
        o["kind"] = "probability";
        o["config"] = config_json(cfg);
        o["n"] = w.size();
        o["m"] = a.shelves;
        o["perm"] = w.to_string();
        o["valleys"] = v;
        o["prob"] = value_json(p, opt.digits);
        emit_json(a.common, o);
    } else if (a.common.format == "csv") {
        emit(a.common, config_comment(cfg) + "\nperm,valleys,prob\n\"" + w.to_string() +
                           "\"," + std::to_string(v) + "," + value_text(p, opt) + "\n");
    } else {
        emit(a.common, config_comment(cfg) + "\nprob=" + value_text(p, opt) +
                           "  valleys=" + std::to_string(v) + "\n");
    }
}

// ------------------------------------------------------------- valleys ----

struct StatsArgs {
    std::string perm;
    CommonOpts common;
};

void run_perm_stats(const std::string& cmd_name, const StatsArgs& a) {
    auto w = Permutation::parse(a.perm);
    const auto d = descents(w);
    const auto shape = rsk_shape(w);

    Config cfg;
    cfg.emplace_back("cmd", cmd_name);
    cfg.emplace_back("perm", w.to_string());
    append_common_config(cfg, a.common);

    if (a.common.format == "json") {
        ojson o;
        o["schema_version"] = kSchemaVersion;
        o["kind"] = "perm_stats";
        o["config"] = config_json(cfg);
        o["perm"] = w.to_string();
        o["n"] = w.size();
        o["valleys"] = valleys(w);
        o["peaks"] = peaks(w);
        o["descents"] = d.count;
        o["descent_set"] = d.positions;
        o["rsk_shape"] = shape.to_string();
        ojson ct = ojson::array();
        for (int c : cycle_type(w)) ct.push_back(c);
        o["cycle_type"] = ct;
        emit_json(a.common, o);
    } else {
        std::string s = config_comment(cfg) + "\n";
        s += "n=" + std::to_string(w.size()) + " valleys=" + std::to_string(valleys(w)) +
             " peaks=" + std::to_string(peaks(w)) + " descents=" + std::to_string(d.count);
        s += " descent_set={";
        for (size_t i = 0; i < d.positions.size(); ++i)
            s += (i ? "," : "") + std::to_string(d.positions[i]);
        s += "} rsk_shape=" + shape.to_string() + "\n";
        emit(a.common, s);
    }
}

// ------------------------------------------------------------ simulate ----

struct SimulateArgs {
    int n = 52;
    long shelves = 0;
    int desc = 1;
    long trials = 1;
    std::optional<std::uint64_t> seed;
    std::string labels;
    CommonOpts common;
};

void run_simulate(const SimulateArgs& a) {
    Config cfg;
    cfg.emplace_back("cmd", "simulate");

    std::vector<std::string> lines;
    int out_n = a.n;
    long shelves = a.shelves;
    if (!a.labels.empty()) {
        std::vector<std::int32_t> labels;
        std::int32_t max_label = 1;
        for (const auto& part : CLI::detail::split(a.labels, ',')) {
            labels.push_back(static_cast<std::int32_t>(std::stol(part)));
            max_label = std::max(max_label, labels.back());
        }
        // without --shelves, the smallest shelf count covering the labels
        if (shelves < 1) shelves = (max_label + 1) / 2;
        auto w = shelf_shuffle_from_labels(labels, static_cast<int>(2 * shelves));
        out_n = w.size();
        cfg.emplace_back("n", std::to_string(w.size()));
        cfg.emplace_back("shelves", std::to_string(shelves));
        cfg.emplace_back("labels", a.labels);
        lines.push_back(w.to_string());
    } else {
        if (a.shelves < 1) throw InputError("simulate: --shelves required");
        if (a.trials < 1) throw InputError("simulate: --trials must be >= 1");
        auto args = a;
        const std::uint64_t seed = resolve_seed(args.seed);
        ShelfSpec spec(a.n, a.shelves);
        cfg.emplace_back("n", std::to_string(a.n));
        cfg.emplace_back("shelves", std::to_string(a.shelves));
        cfg.emplace_back("desc", std::to_string(a.desc));
        cfg.emplace_back("trials", std::to_string(a.trials));
        cfg.emplace_back("seed", std::to_string(seed));
        for (long t = 0; t < a.trials; ++t) {
            RngStream rng(seed, static_cast<std::uint64_t>(t));
            ShuffleSample s = a.desc == 1   ? sample_description1(spec, rng)
                              : a.desc == 2 ? sample_description2(spec, rng)
                                            : sample_description3(spec, rng);
            lines.push_back(s.permutation.to_string());
        }
    }
    append_common_config(cfg, a.common);

    if (a.common.format == "json") {
        ojson o;
        o["schema_version"] = kSchemaVersion;
        o["kind"] = "samples";
        o["config"] = config_json(cfg);
        o["n"] = out_n;
        o["m"] = shelves;
        o["samples"] = lines;
        emit_json(a.common, o);
    } else {
        std::string s = config_comment(cfg) + "\n";
        for (const auto& l : lines) s += l + "\n";
        emit(a.common, s);
    }
}

// ------------------------------------------------------------- compose ----

struct ComposeArgs {
    std::string x, y;
    CommonOpts common;
};

void run_compose(const ComposeArgs& a) {
    auto x = SignString::parse(a.x);
    auto y = SignString::parse(a.y);
    auto r = compose(x, y);

    Config cfg;
    cfg.emplace_back("cmd", "compose");
    cfg.emplace_back("x", x.to_string());
    cfg.emplace_back("y", y.to_string());
    append_common_config(cfg, a.common);

    if (a.common.format == "json") {
        ojson o;
        o["schema_version"] = kSchemaVersion;
        o["kind"] = "compose";
        o["config"] = config_json(cfg);
        o["x"] = x.to_string();
        o["y"] = y.to_string();
        o["result"] = r.to_string();
        emit_json(a.common, o);
    } else {
        emit(a.common, config_comment(cfg) + "\n" + r.to_string() + "\n");
    }
}

// ------------------------------------------------------------ sepbound ----

struct SepboundArgs {
    int n = 52;
    long a_piles = 0;
    long shelves = 0;
    std::string x;
    CommonOpts common;
};

void run_sepbound(const SepboundArgs& a) {
    const int given = (a.a_piles >= 1) + (!a.x.empty() ? 1 : 0) + (a.shelves >= 1);
    if (given != 1)
        throw InputError("sepbound: give exactly one of --a, --x, or --shelves");
    long piles = a.a_piles;
    if (!a.x.empty()) piles = SignString::parse(a.x).size();
    if (a.shelves >= 1) piles = 2 * a.shelves;
    Rat bound = separation_bound(piles, a.n);

    Config cfg;
    cfg.emplace_back("cmd", "sepbound");
    cfg.emplace_back("a", std::to_string(piles));
    cfg.emplace_back("n", std::to_string(a.n));
    append_common_config(cfg, a.common);

    const auto opt = render_options(a.common);
    if (a.common.format == "json") {
        ojson o;
        o["schema_version"] = kSchemaVersion;
        o["kind"] = "sepbound";
        o["config"] = config_json(cfg);
        o["a"] = piles;
        o["n"] = a.n;
        o["bound"] = value_json(bound, opt.digits);
        emit_json(a.common, o);
    } else {
        emit(a.common, config_comment(cfg) + "\nsep_bound=" + value_text(bound, opt) +
                           "  (exact " + rational_string(bound) + ")\n");
    }
}

// ------------------------------------------------------------ convolve ----

struct ConvolveArgs {
    int n = 4;
    std::string x, y;
    bool check = false;
    CommonOpts common;
};

void run_convolve(const ConvolveArgs& a) {
    if (a.n > 6)
        throw SizeError("convolve: n > 6 would enumerate too many permutation pairs");
    auto x = SignString::parse(a.x);
    auto y = SignString::parse(a.y);
    auto px = x_shuffle_exact_dist(x, a.n);
    auto py = x_shuffle_exact_dist(y, a.n);
    auto conv = convolve_exact(px, py);

    bool check_ok = true;
    if (a.check) {
        auto composed = x_shuffle_exact_dist(compose(x, y), a.n);
        for (const auto& [w, p] : conv) {
            auto it = composed.find(w);
            if (it == composed.end() || it->second != p) check_ok = false;
        }
        for (const auto& [w, p] : composed)
            if (conv.find(w) == conv.end() && p != 0) check_ok = false;
    }

    Config cfg;
    cfg.emplace_back("cmd", "convolve");
    cfg.emplace_back("n", std::to_string(a.n));
    cfg.emplace_back("x", x.to_string());
    cfg.emplace_back("y", y.to_string());
    if (a.check) cfg.emplace_back("check", check_ok ? "equal" : "DIFFERENT");
    append_common_config(cfg, a.common);

    const auto opt = render_options(a.common);
    if (a.common.format == "json") {
        ojson o = perm_dist_json(conv, "convolve(" + x.to_string() + "," + y.to_string() + ")",
                                 cfg, opt);
        if (a.check) o["check_equal_composed"] = check_ok;
        emit_json(a.common, o);
    } else if (a.common.format == "csv") {
        emit(a.common, perm_dist_csv(conv, cfg, opt));
    } else {
        std::string s = config_comment(cfg) + "\n";
        for (const auto& [w, p] : conv)
            s += w.to_string() + "  " + value_text(p, opt) + "\n";
        emit(a.common, s);
    }
    if (a.check && !check_ok) throw Error("convolve: mismatch against composed law");
}

// ------------------------------------------------------------ descents ----

struct GfArgs {
    int n = 52;
    long shelves = 10;
    int i = 1;
    bool limit_law = false;
    std::string perm;
    CommonOpts common;
};

void emit_discrete(const CommonOpts& common, const DiscreteDist& dist, Config cfg,
                   const std::vector<std::pair<std::string, Rat>>& extras = {}) {
    const auto opt = render_options(common);
    if (common.format == "json") {
        ojson o = discrete_dist_json(dist, cfg, opt);
        for (const auto& [k, v] : extras) o[k] = value_json(v, opt.digits);
        emit_json(common, o);
    } else if (common.format == "csv") {
        emit(common, discrete_dist_csv(dist, cfg, opt));
    } else {
        std::string s = discrete_dist_text(dist, cfg, opt);
        for (const auto& [k, v] : extras) s += k + "=" + value_text(v, opt) + "\n";
        emit(common, s);
    }
}

void run_descents(const GfArgs& a) {
    ShelfSpec spec(a.n, a.shelves);
    auto dist = descent_dist(spec);
    auto [mean, var] = descent_moments(spec);

    Config cfg;
    cfg.emplace_back("cmd", "descents");
    cfg.emplace_back("n", std::to_string(a.n));
    cfg.emplace_back("shelves", std::to_string(a.shelves));
    append_common_config(cfg, a.common);
    emit_discrete(a.common, dist, cfg, {{"mean", mean}, {"variance", var}});
}

void run_cycles(const GfArgs& a) {
    Config cfg;
    cfg.emplace_back("cmd", "cycles");
    if (a.limit_law) {
        auto dist = cycle_limit_law(a.shelves, a.i, make_rat(1, Int("1000000000000")));
        cfg.emplace_back("shelves", std::to_string(a.shelves));
        cfg.emplace_back("i", std::to_string(a.i));
        cfg.emplace_back("limit_law", "1");
        append_common_config(cfg, a.common);
        emit_discrete(a.common, dist, cfg);
        return;
    }
    ShelfSpec spec(a.n, a.shelves);
    auto dist = cycle_count_dist(spec, a.i);
    cfg.emplace_back("n", std::to_string(a.n));
    cfg.emplace_back("shelves", std::to_string(a.shelves));
    cfg.emplace_back("i", std::to_string(a.i));
    append_common_config(cfg, a.common);
    emit_discrete(a.common, dist, cfg);
}

void run_rsk(const GfArgs& a) {
    if (!a.perm.empty()) {
        StatsArgs sa;
        sa.perm = a.perm;
        sa.common = a.common;
        run_perm_stats("rsk", sa);
        return;
    }
    ShelfSpec spec(a.n, a.shelves);
    auto dist = rsk_shape_dist(spec);
    Config cfg;
    cfg.emplace_back("cmd", "rsk");
    cfg.emplace_back("n", std::to_string(a.n));
    cfg.emplace_back("shelves", std::to_string(a.shelves));
    append_common_config(cfg, a.common);
    emit_discrete(a.common, dist, cfg);
}

// --------------------------------------------------------------- guess ----

struct McArgs {
    int n = 52;
    long shelves = 0;
    bool uniform = false;
    long trials = 10000;
    std::optional<std::uint64_t> seed;
    int threads = 1;
    std::string test = "top";
    int j_max = 9;
    int k = 1;
    CommonOpts common;
};

McConfig make_mc_config(McArgs& a) {
    if (a.uniform && a.shelves >= 1)
        throw InputError("give either --shelves or --uniform, not both");
    if (!a.uniform && a.shelves < 1)
        throw InputError("give --shelves m or --uniform");
    McConfig cfg;
    cfg.n = a.n;
    if (!a.uniform) cfg.shelves = a.shelves;
    cfg.trials = a.trials;
    cfg.seed = resolve_seed(a.seed);
    cfg.threads = a.threads;
    return cfg;
}

Config mc_cli_config(const char* cmd, const McArgs& a, const McConfig& mc) {
    Config cfg;
    cfg.emplace_back("cmd", cmd);
    cfg.emplace_back("n", std::to_string(a.n));
    if (mc.shelves)
        cfg.emplace_back("shelves", std::to_string(*mc.shelves));
    else
        cfg.emplace_back("model", "uniform");
    cfg.emplace_back("trials", std::to_string(mc.trials));
    cfg.emplace_back("seed", std::to_string(mc.seed));
    return cfg;
}

void emit_mc(const CommonOpts& common, const McReport& rep, const Config& cfg) {
    const auto opt = render_options(common);
    if (common.format == "json")
        emit_json(common, mc_report_json(rep, cfg, opt));
    else if (common.format == "csv")
        emit(common, mc_report_csv(rep, cfg, opt));
    else
        emit(common, mc_report_text(rep, cfg, opt));
}

void run_guess(McArgs& a) {
    auto mc = make_mc_config(a);
    auto rep = guessing_experiment(mc);
    if (!mc.shelves) {
        auto [mean, var] = uniform_guess_moments(a.n);
        rep.extras.emplace_back("exact_mean", mean);
        rep.extras.emplace_back("exact_variance", var);
    }
    auto cfg = mc_cli_config("guess", a, mc);
    append_common_config(cfg, a.common);
    emit_mc(a.common, rep, cfg);
}

// --------------------------------------------------------------- audit ----

void run_audit(McArgs& a) {
    if (a.test == "longest") {
        if (a.shelves < 1) throw InputError("audit --test longest needs --shelves");
        a.uniform = false;
        auto mc = make_mc_config(a);
        auto rep = longest_cycles_stat(ShelfSpec(a.n, a.shelves), mc.trials, mc.seed,
                                       a.k, mc.threads);
        auto cfg = mc_cli_config("audit", a, mc);
        cfg.emplace_back("test", a.test);
        cfg.emplace_back("k", std::to_string(a.k));
        append_common_config(cfg, a.common);
        const auto opt = render_options(a.common);
        if (a.common.format == "json") {
            ojson o;
            o["schema_version"] = kSchemaVersion;
            o["kind"] = "longest_cycles";
            o["config"] = config_json(cfg);
            ojson sh = ojson::array(), un = ojson::array();
            for (const auto& r : rep.shuffler) sh.push_back(mc_report_json(r, {}, opt));
            for (const auto& r : rep.uniform) un.push_back(mc_report_json(r, {}, opt));
            o["shuffler"] = sh;
            o["uniform"] = un;
            o["ks_l1"] = rep.ks_l1;
            emit_json(a.common, o);
        } else {
            std::string s = config_comment(cfg) + "\n";
            for (const auto& r : rep.shuffler)
                s += mc_report_text(r, {{"model", "shuffler"}}, opt);
            for (const auto& r : rep.uniform)
                s += mc_report_text(r, {{"model", "uniform"}}, opt);
            s += "ks_l1=" + std::to_string(rep.ks_l1) + "\n";
            emit(a.common, s);
        }
        return;
    }

    auto mc = make_mc_config(a);
    auto cfg = mc_cli_config("audit", a, mc);
    cfg.emplace_back("test", a.test);

    if (a.test == "top") {
        append_common_config(cfg, a.common);
        emit_mc(a.common, top_card_test(mc), cfg);
    } else if (a.test == "color") {
        append_common_config(cfg, a.common);
        emit_mc(a.common, color_change_test(mc), cfg);
    } else if (a.test == "spacings") {
        cfg.emplace_back("j_max", std::to_string(a.j_max));
        append_common_config(cfg, a.common);
        auto reps = spacings_test(mc, a.j_max);
        const auto opt = render_options(a.common);
        if (a.common.format == "json") {
            ojson o;
            o["schema_version"] = kSchemaVersion;
            o["kind"] = "mc_report_set";
            o["config"] = config_json(cfg);
            ojson arr = ojson::array();
            for (const auto& r : reps) arr.push_back(mc_report_json(r, {}, opt));
            o["reports"] = arr;
            emit_json(a.common, o);
        } else if (a.common.format == "csv") {
            // plot-ready long form: statistic,value,count
            std::string s = config_comment(cfg) + "\nstatistic,value,count\n";
            for (const auto& r : reps)
                for (const auto& [v, c] : r.histogram)
                    s += r.statistic + "," + std::to_string(v) + "," + std::to_string(c) + "\n";
            emit(a.common, s);
        } else {
            std::string s = config_comment(cfg) + "\n";
            for (const auto& r : reps) s += mc_report_text(r, {}, opt);
            emit(a.common, s);
        }
    } else {
        throw InputError("audit: unknown --test '" + a.test + "'");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shelf: exact and Monte Carlo analysis of shelf shuffling machines"};
    app.require_subcommand(1);

    DistArgs dist_args;
    auto* dist_cmd = app.add_subcommand("dist", "Exact distances to uniformity");
    dist_cmd->add_option("--n", dist_args.n, "Deck size")->capture_default_str();
    dist_cmd->add_option("--shelves", dist_args.shelves, "Shelf count m");
    dist_cmd->add_flag("--table1", dist_args.table1, "Sweep the standard twelve shelf counts");
    dist_cmd->add_flag("--scan-all", dist_args.scan_all,
                       "Also scan every valley class to confirm the extremes");
    add_common(dist_cmd, dist_args.common);

    ProbArgs prob_args;
    auto* prob_cmd = app.add_subcommand("prob", "Exact probability of one permutation");
    prob_cmd->add_option("--shelves", prob_args.shelves, "Shelf count m")->required();
    prob_cmd->add_option("--perm", prob_args.perm, "Comma-separated one-line permutation")
        ->required();
    add_common(prob_cmd, prob_args.common);

    StatsArgs valleys_args;
    auto* valleys_cmd = app.add_subcommand("valleys", "Permutation statistics");
    valleys_cmd->add_option("--perm", valleys_args.perm, "Comma-separated permutation")
        ->required();
    add_common(valleys_cmd, valleys_args.common);

    SimulateArgs sim_args;
    auto* sim_cmd = app.add_subcommand("simulate", "Sample shuffles (three routes)");
    sim_cmd->add_option("--n", sim_args.n, "Deck size")->capture_default_str();
    sim_cmd->add_option("--shelves", sim_args.shelves, "Shelf count m");
    sim_cmd->add_option("--desc", sim_args.desc, "Sampling route (1, 2, or 3)")
        ->check(CLI::Range(1, 3))
        ->capture_default_str();
    sim_cmd->add_option("--trials", sim_args.trials, "Number of samples")
        ->capture_default_str();
    sim_cmd->add_option("--seed", sim_args.seed, "RNG seed");
    sim_cmd->add_option("--labels", sim_args.labels,
                        "Deterministic single shuffle from this label vector");
    add_common(sim_cmd, sim_args.common);

    ComposeArgs comp_args;
    auto* comp_cmd = app.add_subcommand("compose", "Compose two sign strings");
    comp_cmd->add_option("--x", comp_args.x, "Left word")->required();
    comp_cmd->add_option("--y", comp_args.y, "Right word")->required();
    add_common(comp_cmd, comp_args.common);

    SepboundArgs sep_args;
    auto* sep_cmd = app.add_subcommand("sepbound", "Birthday bound on separation");
    sep_cmd->add_option("--n", sep_args.n, "Deck size")->capture_default_str();
    sep_cmd->add_option("--a", sep_args.a_piles, "Pile count");
    sep_cmd->add_option("--x", sep_args.x, "Sign string (pile count = length)");
    sep_cmd->add_option("--shelves", sep_args.shelves, "Shelf count (piles = 2m)");
    add_common(sep_cmd, sep_args.common);

    ConvolveArgs conv_args;
    auto* conv_cmd = app.add_subcommand("convolve", "Exact convolution of two x-shuffle laws");
    conv_cmd->add_option("--n", conv_args.n, "Deck size (<= 6)")->capture_default_str();
    conv_cmd->add_option("--x", conv_args.x, "First word")->required();
    conv_cmd->add_option("--y", conv_args.y, "Second word")->required();
    conv_cmd->add_flag("--check", conv_args.check,
                       "Verify the result equals the composed-word law");
    add_common(conv_cmd, conv_args.common);

    GfArgs desc_args;
    auto* desc_cmd = app.add_subcommand("descents", "Exact descent distribution");
    desc_cmd->add_option("--n", desc_args.n, "Deck size")->capture_default_str();
    desc_cmd->add_option("--shelves", desc_args.shelves, "Shelf count m")->required();
    add_common(desc_cmd, desc_args.common);

    GfArgs cyc_args;
    auto* cyc_cmd = app.add_subcommand("cycles", "Exact cycle-count distribution");
    cyc_cmd->add_option("--n", cyc_args.n, "Deck size")->capture_default_str();
    cyc_cmd->add_option("--shelves", cyc_args.shelves, "Shelf count m")->required();
    cyc_cmd->add_option("--i", cyc_args.i, "Cycle length")->capture_default_str();
    cyc_cmd->add_flag("--limit-law", cyc_args.limit_law,
                      "Print the large-deck limit law instead");
    add_common(cyc_cmd, cyc_args.common);

    GfArgs rsk_args;
    auto* rsk_cmd = app.add_subcommand("rsk", "Insertion-shape distribution or per-permutation shape");
    rsk_cmd->add_option("--n", rsk_args.n, "Deck size")->capture_default_str();
    rsk_cmd->add_option("--shelves", rsk_args.shelves, "Shelf count m");
    rsk_cmd->add_option("--perm", rsk_args.perm, "Single permutation to analyze");
    add_common(rsk_cmd, rsk_args.common);

    McArgs guess_args;
    auto* guess_cmd = app.add_subcommand("guess", "Card guessing with feedback");
    guess_cmd->add_option("--n", guess_args.n, "Deck size")->capture_default_str();
    guess_cmd->add_option("--shelves", guess_args.shelves, "Shelf count m");
    guess_cmd->add_flag("--uniform", guess_args.uniform, "Uniform shuffles instead");
    guess_cmd->add_option("--trials", guess_args.trials, "Trials")->capture_default_str();
    guess_cmd->add_option("--seed", guess_args.seed, "RNG seed");
    guess_cmd->add_option("--threads", guess_args.threads, "Worker threads")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    add_common(guess_cmd, guess_args.common);

    McArgs audit_args;
    auto* audit_cmd = app.add_subcommand("audit", "Ad hoc randomness tests");
    audit_cmd->add_option("--test", audit_args.test, "top | color | spacings | longest")
        ->required()
        ->check(CLI::IsMember({"top", "color", "spacings", "longest"}));
    audit_cmd->add_option("--n", audit_args.n, "Deck size")->capture_default_str();
    audit_cmd->add_option("--shelves", audit_args.shelves, "Shelf count m");
    audit_cmd->add_flag("--uniform", audit_args.uniform, "Uniform shuffles instead");
    audit_cmd->add_option("--trials", audit_args.trials, "Trials")->capture_default_str();
    audit_cmd->add_option("--seed", audit_args.seed, "RNG seed");
    audit_cmd->add_option("--threads", audit_args.threads, "Worker threads")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    audit_cmd->add_option("--j-max", audit_args.j_max, "Spacings: largest j")
        ->capture_default_str();
    audit_cmd->add_option("--k", audit_args.k, "Longest cycles: how many")
        ->capture_default_str();
    add_common(audit_cmd, audit_args.common);

    try {
        app.parse(argc, argv);
        if (dist_cmd->parsed()) run_dist(dist_args);
        else if (prob_cmd->parsed()) run_prob(prob_args);
        else if (valleys_cmd->parsed()) run_perm_stats("valleys", valleys_args);
        else if (sim_cmd->parsed()) run_simulate(sim_args);
        else if (comp_cmd->parsed()) run_compose(comp_args);
        else if (sep_cmd->parsed()) run_sepbound(sep_args);
        else if (conv_cmd->parsed()) run_convolve(conv_args);
        else if (desc_cmd->parsed()) run_descents(desc_args);
        else if (cyc_cmd->parsed()) run_cycles(cyc_args);
        else if (rsk_cmd->parsed()) run_rsk(rsk_args);
        else if (guess_cmd->parsed()) run_guess(guess_args);
        else if (audit_cmd->parsed()) run_audit(audit_args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
