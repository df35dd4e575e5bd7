#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "msfssp/bounds.hpp"
#include "msfssp/instance_file.hpp"
#include "msfssp/report.hpp"
#include "msfssp/rule_file.hpp"
#include "msfssp/solvers/builtin.hpp"
#include "msfssp/trace.hpp"
#include "msfssp/verify.hpp"
#include "msfssp/wrapper.hpp"

namespace fs = std::filesystem;
using namespace msfssp;

namespace {

enum Exit : int { ok = 0, failed = 1, bad_input = 2, over_budget = 3 };

struct Globals {
    std::string solver = "optimal";
    std::optional<std::string> trace;
    bool trace_flag = false;
    std::string format = "table";
    std::uint64_t seed = 1;
    std::uint64_t budget = 100000;
    std::optional<Time> horizon;
    std::size_t max_cells = 80;
    std::size_t max_rows = 400;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

BaselineSolver resolve_solver(const std::string& name) {
    for (const auto& b : builtin_solver_names())
        if (b == name) return builtin_solver(name);
    if (fs::exists(name)) return load_solver_file(name);
    throw InputError("unknown solver '" + name + "' (built-ins: optimal, halving; or a rule-table file)");
}

void emit_trace(const Globals& g, const TraceDocument& doc) {
    if (!g.trace_flag) return;
    if (g.trace && !g.trace->empty()) {
        std::ofstream out(*g.trace);
        if (!out) throw InputError("cannot write trace capture " + *g.trace);
        out << trace_to_json(doc).dump() << '\n';
    } else {
        std::cout << render_text(doc, {g.max_cells, g.max_rows});
    }
}

int cmd_simulate(const Globals& g, const std::string& path) {
    const Instance inst = load_instance(path);
    const BaselineSolver solver = resolve_solver(g.solver);
    WrapperOptions opt;
    opt.horizon = g.horizon;
    opt.record_cycles = g.format == "doc";
    opt.record_hosts = g.trace_flag;
    const SyncReport r = run_msfssp(inst.assignment, solver, opt);

    if (g.format == "doc") {
        auto doc = sync_report_to_json(r, true);
        doc["solver"] = solver.name;
        doc["periods"] = std::vector<Period>(inst.assignment.periods().begin(), inst.assignment.periods().end());
        if (inst.name) doc["name"] = *inst.name;
        std::cout << doc.dump(2) << '\n';
    } else {
        auto flag = [](bool b) { return b ? "1" : "0"; };
        std::cout << "solver\tk\tt_c\tfire_time\tpredicted\tbound_2k_plus_tc\tsimultaneous\tearly_fire\texact\tcollect_"
                     "ok\n"
                  << solver.name << '\t' << r.k << '\t' << r.t_c << '\t'
                  << (r.fire_time ? std::to_string(*r.fire_time) : "-") << '\t' << r.predicted << '\t' << r.bound
                  << '\t' << flag(r.simultaneous()) << '\t' << flag(r.early_fire()) << '\t'
                  << flag(r.fire_time && *r.fire_time == r.predicted) << '\t' << flag(r.collect_ok) << '\n';
    }
    if (g.trace_flag) emit_trace(g, trace_from_report(r, inst.assignment, solver.rule.alphabet()));

    if (r.timed_out()) {
        std::cerr << "horizon " << r.horizon << " exceeded\n";
        return over_budget;
    }
    if (!r.failure.empty()) std::cerr << r.failure << '\n';
    return r.simultaneous() && r.collect_ok ? ok : failed;
}

int cmd_oracle(const Globals& g, const std::string& path) {
    const Instance inst = load_instance(path);
    const auto& a = inst.assignment;
    if (a.size() < 2) throw InputError("oracle needs at least two cells");
    const SignalSchedule s = round_trip(a);
    const Time mu = mu_reference(a);
    std::optional<Time> closed;
    if (inst.provenance) closed = closed_form_roundtrip(a);

    if (g.format == "doc") {
        nlohmann::json doc{{"periods", std::vector<Period>(a.periods().begin(), a.periods().end())},
                           {"arrival", s.arrival},
                           {"return", s.ret},
                           {"round_trip", s.round_trip()},
                           {"mu_reference", mu}};
        if (closed) doc["closed_form"] = *closed;
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "cell\tperiod\tarrival\treturn\n";
        for (std::size_t i = 0; i < a.size(); ++i)
            std::cout << i + 1 << '\t' << a[i] << '\t' << s.arrival[i] << '\t' << s.ret[i] << '\n';
        std::cout << "round_trip\t" << s.round_trip() << "\nmu_reference\t" << mu << '\n';
        if (closed) std::cout << "closed_form\t" << *closed << '\n';
    }
    if (g.trace_flag) {
        auto tr = signal_trajectory(a, g.horizon.value_or(s.round_trip() + 1));
        emit_trace(g, trace_from_trajectory(tr, a, signal_glyph));
    }
    return ok;
}

struct GenerateArgs {
    std::vector<Period> set;
    std::uint64_t m = 1;
    std::string select = "all";
    std::optional<Period> head;
    std::string out_dir = ".";
};

int cmd_generate(const Globals& g, const GenerateArgs& args) {
    Theorem1Params base;
    try {
        base = theorem1_params(PeriodSet(args.set), args.m, args.head);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    std::vector<std::pair<std::uint64_t, std::vector<bool>>> chosen;
    const auto total = arrangement_count(args.m);
    if (args.select == "all") {
        if (total.saturated || total.value > g.budget) {
            std::cerr << "generating " << (total.saturated ? std::string("> 2^64") : std::to_string(total.value))
                      << " instances exceeds budget " << g.budget << '\n';
            return over_budget;
        }
        std::uint64_t i = 0;
        for (auto& arr : all_arrangements(args.m)) chosen.emplace_back(i++, std::move(arr));
    } else if (args.select.rfind("index:", 0) == 0) {
        const auto idx = std::stoull(args.select.substr(6));
        try {
            chosen.emplace_back(idx, arrangement_at(args.m, idx));
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    } else if (args.select.rfind("random:", 0) == 0) {
        const auto count = std::stoull(args.select.substr(7));
        if (count > g.budget) return over_budget;
        std::mt19937_64 rng(g.seed);
        for (std::uint64_t c = 0; c < count; ++c) chosen.emplace_back(c, random_arrangement(args.m, rng));
    } else {
        throw InputError("selector must be all, index:<i> or random:<count>");
    }

    fs::create_directories(args.out_dir);
    std::string tag;
    for (Period p : base.set.members()) tag += (tag.empty() ? "" : "_") + std::to_string(p);
    for (auto& [idx, arr] : chosen) {
        Theorem1Params t = base;
        t.arrangement = arr;
        Instance inst{std::nullopt, theorem1_instance(t), true, t};
        std::ostringstream name;
        name << "lb-P" << tag << "-m" << args.m << "-" << (args.select.rfind("random:", 0) == 0 ? "r" : "a") << idx;
        inst.name = name.str();
        const fs::path file = fs::path(args.out_dir) / (name.str() + ".json");
        std::ofstream out(file);
        if (!out) throw InputError("cannot write " + file.string());
        out << dump_instance(inst);
        std::cout << file.string() << '\n';
    }
    return ok;
}

struct VerifyArgs {
    std::vector<Period> set;
    std::size_t n_min = 1, n_max = 1;
    std::uint64_t family = 0;  // when non-zero, sweep the lower-bound family for m = 1..family instead
    unsigned workers = 0;
};

int cmd_verify(const Globals& g, const VerifyArgs& args) {
    const BaselineSolver solver = resolve_solver(g.solver);
    PeriodSet set = [&] {
        try {
            return PeriodSet(args.set);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    std::vector<PeriodAssignment> instances;
    std::vector<std::string> arrangement;
    std::vector<bool> family_member;
    try {
        if (args.family > 0) {
            std::uint64_t need = 0;
            for (std::uint64_t m = 1; m <= args.family; ++m) {
                auto c = arrangement_count(m);
                if (c.saturated) throw BudgetExceeded(std::numeric_limits<std::uint64_t>::max(), g.budget);
                need += c.value;
            }
            if (need > g.budget) throw BudgetExceeded(need, g.budget);
            for (std::uint64_t m = 1; m <= args.family; ++m) {
                Theorem1Params t = theorem1_params(set, m);
                for (auto& arr : all_arrangements(m)) {
                    t.arrangement = arr;
                    instances.push_back(theorem1_instance(t));
                    std::string s;
                    for (bool b : arr) s += b ? 'B' : 'A';
                    arrangement.push_back(s);
                }
            }
        } else {
            instances = enumerate_assignments(set, args.n_min, args.n_max, g.budget);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "refusing: " << e.what() << '\n';
        return over_budget;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }

    EvaluateOptions opt;
    opt.horizon = g.horizon;
    auto recs = sweep(instances, solver, opt, args.workers);
    for (std::size_t i = 0; i < arrangement.size(); ++i) {
        recs[i].arrangement = arrangement[i];
        recs[i].closed_form = closed_form_roundtrip(instances[i]);
    }
    if (g.format == "doc")
        std::cout << sweep_to_json(recs).dump(2) << '\n';
    else
        write_sweep_table(std::cout, recs);
    const auto failures = std::count_if(recs.begin(), recs.end(), [](const auto& r) { return !r.pass(); });
    std::cerr << recs.size() << " instances, " << failures << " failed\n";
    return failures == 0 ? ok : failed;
}

int cmd_render(const Globals& g, const std::string& path, bool svg) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open trace capture " + path);
    TraceDocument doc;
    try {
        doc = trace_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
        throw InputError(std::string("bad trace capture: ") + e.what());
    }
    const RenderLimits lim{g.max_cells, g.max_rows};
    std::cout << (svg ? render_svg(doc, lim) : render_text(doc, lim));
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Firing squad synchronization on multi-speed cellular automata"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--solver", g.solver, "built-in solver name or rule-table file");
    std::string trace_path;
    auto* trace_opt = app.add_option("--trace", trace_path,
                                     "record a space-time trace; print it, or write the capture to the given file")
                          ->expected(0, 1);
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"table", "doc"}));
    app.add_option("--seed", g.seed, "seed for random selections");
    app.add_option("--budget", g.budget, "maximum number of instances a command may run");
    app.add_option("--horizon", g.horizon, "step limit for a simulation");
    app.add_option("--max-cells", g.max_cells, "render width limit");
    app.add_option("--max-rows", g.max_rows, "render height limit");

    std::string instance_path;
    auto* sim = app.add_subcommand("simulate", "run the synchronization algorithm on an instance");
    sim->add_option("instance", instance_path)->required();
    sim->fallthrough();

    auto* orc = app.add_subcommand("oracle", "fastest-signal arrival and return times");
    orc->add_option("instance", instance_path)->required();
    orc->fallthrough();

    GenerateArgs gen;
    auto* gcmd = app.add_subcommand("generate", "emit lower-bound family instances");
    gcmd->add_option("--set", gen.set, "period set")->delimiter(',')->required();
    gcmd->add_option("-m,--blocks", gen.m, "block count m")->required();
    gcmd->add_option("--select", gen.select, "all | index:<i> | random:<count>");
    gcmd->add_option("--head", gen.head, "period of the first two cells");
    gcmd->add_option("--out", gen.out_dir, "output directory");
    gcmd->fallthrough();

    VerifyArgs ver;
    auto* vcmd = app.add_subcommand("verify", "exhaustive sweep with the full check battery");
    vcmd->add_option("--set", ver.set, "period set")->delimiter(',')->required();
    vcmd->add_option("--n-min", ver.n_min, "smallest size");
    vcmd->add_option("--n-max", ver.n_max, "largest size");
    vcmd->add_option("--family", ver.family, "sweep the lower-bound family for m = 1..M instead");
    vcmd->add_option("--workers", ver.workers, "worker threads (0 = all cores)");
    vcmd->fallthrough();

    bool svg = false;
    auto* rcmd = app.add_subcommand("render", "draw a recorded trace");
    rcmd->add_option("capture", instance_path)->required();
    rcmd->add_flag("--svg", svg, "emit SVG instead of text");
    rcmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : bad_input;
    }
    g.trace_flag = trace_opt->count() > 0;
    if (!trace_path.empty()) g.trace = trace_path;

    try {
        if (*sim) return cmd_simulate(g, instance_path);
        if (*orc) return cmd_oracle(g, instance_path);
        if (*gcmd) return cmd_generate(g, gen);
        if (*vcmd) {
            if (ver.n_max < ver.n_min) ver.n_max = ver.n_min;
            return cmd_verify(g, ver);
        }
        if (*rcmd) return cmd_render(g, instance_path, svg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const InstanceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const RuleFileError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return failed;
    }
    return ok;
}
