// chromon: command-line front end for the component coloring solvers.
//
// Exit codes: 0 ok, 1 parse or usage error, 2 infeasible input, 3 a
// validation or postcheck failed, 4 internal error.

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "chromon/bench.hpp"
#include "chromon/error.hpp"
#include "chromon/io.hpp"
#include "chromon/lighttrail.hpp"
#include "chromon/lp.hpp"
#include "chromon/partition.hpp"
#include "chromon/pig.hpp"
#include "chromon/splitgraph.hpp"
#include "chromon/verify.hpp"
#include "chromon/weighted.hpp"

namespace fs = std::filesystem;
using namespace chromon;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInfeasible = 2, kInvalid = 3, kInternal = 4 };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    long long capacity = 0;
    std::string mode = "splittable";
    std::string format = "text";
    unsigned long long seed = 1;
    int guard = 14;
    int jobs = 0;
    std::string solution;
    std::string plan;
    std::string cnf;
    std::string sp;
    std::string family = "adversarial";
    std::vector<long long> sizes;
    int t = 0;
    int depth = 4;
    int reps = 3;
};

struct Outcome {
    int code = kOk;
    Json json;
    std::string text;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int capacity_of(const RunConfig& cfg) {
    if (cfg.capacity < 1 || cfg.capacity > INT_MAX) throw std::invalid_argument("--capacity must be in 1..INT_MAX");
    return static_cast<int>(cfg.capacity);
}

void merge(ValidationReport& into, const ValidationReport& from) {
    into.violations.insert(into.violations.end(), from.violations.begin(), from.violations.end());
}

std::string verdict(const ValidationReport& r) { return r.ok() ? "valid yes\n" : "valid no\n" + r.summary() + "\n"; }

std::string id_at(const IntervalInstance& inst, const CanonicalPIG& g, int p) { return inst.items[g.order[p - 1]].id; }

std::string blocks_text(const IntervalInstance& inst, const CanonicalPIG& g, const BlockPartition& p,
                        const Coloring& c) {
    std::ostringstream out;
    out << "blocks";
    for (const auto& b : p.blocks) {
        out << " {";
        for (int v = b.first; v <= b.last; ++v) out << (v > b.first ? "," : "") << id_at(inst, g, v);
        out << '}';
    }
    out << "\ncolors";
    for (int v = 1; v <= g.n; ++v) out << ' ' << id_at(inst, g, v) << '=' << c.color[v];
    out << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Per-file commands

Outcome cmd_solve(const std::string& path, const RunConfig& cfg) {
    const int cap = capacity_of(cfg);
    const IntervalInstance inst = parse_instance(read_file(path));
    if (!inst.unit_weights())
        throw InfeasibleInputError("weighted instance; use solve-split or solve-weighted");
    const CanonicalPIG g = build_canonical(inst);
    const BlockPartition p = solve_unweighted(g, cap);
    const Coloring c = partition_to_coloring(p, g);
    ValidationReport r = validate_blocks(g, p, p.lambda);
    merge(r, validate_coloring(g, c, cap, p.lambda));
    Outcome o;
    o.json = solution_json(inst, g, p, c, r);
    o.json["omega"] = g.omega;
    o.text = "lambda " + std::to_string(p.lambda) + "\nomega " + std::to_string(g.omega) + "\n" +
             blocks_text(inst, g, p, c) + verdict(r);
    o.code = r.ok() ? kOk : kInvalid;
    return o;
}

Outcome cmd_solve_split(const std::string& path, const RunConfig& cfg) {
    const int cap = capacity_of(cfg);
    const IntervalInstance inst = parse_instance(read_file(path));
    const CanonicalPIG g = build_canonical(inst);
    const SplitSolution s = solve_split(g, cap);
    const ValidationReport r = validate_split_coloring(g, s.coloring, cap, s.coloring.lambda);
    Outcome o;
    o.json = solution_json(inst, g, s, r);
    std::ostringstream out;
    out << "lambda " << s.coloring.lambda << "\nassignment";
    for (int v = 1; v <= g.n; ++v) {
        out << ' ' << id_at(inst, g, v) << '=';
        for (std::size_t i = 0; i < s.coloring.pieces[v].size(); ++i)
            out << (i ? "+" : "") << s.coloring.pieces[v][i].amount << '@' << s.coloring.pieces[v][i].color;
    }
    out << '\n' << verdict(r);
    o.text = out.str();
    o.code = r.ok() ? kOk : kInvalid;
    return o;
}

Outcome cmd_solve_weighted(const std::string& path, const RunConfig& cfg) {
    const int cap = capacity_of(cfg);
    const IntervalInstance inst = parse_instance(read_file(path));
    const CanonicalPIG g = build_canonical(inst);
    const NonSplitSolution s = two_approx_nonsplit(g, cap);
    ValidationReport r = validate_blocks(g, s.partition, s.partition.lambda);
    merge(r, validate_coloring(g, s.coloring, cap, s.partition.lambda));
    if (s.partition.lambda > 2 * s.split_lambda)
        r.add("ratio", "lambda " + std::to_string(s.partition.lambda) + " > 2 * " + std::to_string(s.split_lambda));
    Outcome o;
    o.json = solution_json(inst, g, s, r);
    const double ratio = s.split_lambda ? static_cast<double>(s.partition.lambda) / s.split_lambda : 0.0;
    o.json["ratio"] = ratio;
    std::ostringstream out;
    out << "lambda " << s.partition.lambda << "\nsplit_lambda " << s.split_lambda << "\nratio " << ratio << " (<= 2)\n"
        << blocks_text(inst, g, s.partition, s.coloring) << verdict(r);
    o.text = out.str();
    o.code = r.ok() ? kOk : kInvalid;
    return o;
}

Outcome cmd_oracle(const std::string& path, const RunConfig& cfg) {
    const int cap = capacity_of(cfg);
    const IntervalInstance inst = parse_instance(read_file(path));
    const CanonicalPIG g = build_canonical(inst);
    require_weights_within(g, cap);
    const BlockOracleResult block = brute_min_lambda_block(g, cap, cfg.guard);
    Outcome o;
    o.json["block_lambda"] = block.lambda;
    std::ostringstream out;
    out << "block_lambda " << block.lambda << '\n';
    if (g.n <= 9) {
        const int general = brute_min_lambda_general(g, cap, 9).lambda;
        o.json["general_lambda"] = general;
        out << "general_lambda " << general << '\n';
    }
    if (inst.unit_weights()) {
        const int solved = solve_unweighted(g, cap).lambda;
        o.json["solve_lambda"] = solved;
        o.json["agrees"] = solved == block.lambda;
        out << "solve_lambda " << solved << (solved == block.lambda ? " (agrees)\n" : " (DISAGREES)\n");
        if (solved != block.lambda) o.code = kInvalid;
    }
    o.text = out.str();
    return o;
}

Outcome cmd_verify(const std::string& path, const RunConfig& cfg) {
    Outcome o;
    ValidationReport r;
    if (!cfg.plan.empty()) {
        const auto reqs = parse_requests(read_file(path));
        const LightTrailPlan plan = plan_from_json(read_file(cfg.plan));
        r = validate_plan(plan, reqs, cfg.capacity ? cfg.capacity : plan.capacity);
    } else {
        if (cfg.solution.empty()) throw std::invalid_argument("verify needs --solution or --plan");
        const IntervalInstance inst = parse_instance(read_file(path));
        const std::string text = read_file(cfg.solution);
        Weight cap = cfg.capacity;
        if (!cap) {
            try {
                cap = Json::parse(text).at("capacity").get<Weight>();
            } catch (const Json::exception& e) {
                throw ParseError(0, std::string("solution JSON: ") + e.what());
            }
        }
        r = verify_solution(parse_solution_json(text, inst), inst, cap);
    }
    o.json = report_json(r);
    o.text = verdict(r);
    o.code = r.ok() ? kOk : kInvalid;
    return o;
}

Outcome cmd_lp_emit(const std::string& path, const RunConfig& cfg) {
    const int cap = capacity_of(cfg);
    const CanonicalPIG g = build_canonical(parse_instance(read_file(path)));
    const IlpModel m = emit_ilp(g, cap);
    Outcome o;
    o.json = {{"binaries", m.binaries},   {"end_rows", m.end_rows},   {"size_rows", m.size_rows},
              {"clique_rows", m.clique_rows}, {"model", m.text}};
    o.text = m.text;
    return o;
}

Outcome cmd_lp_round(const std::string& path, const RunConfig& cfg) {
    const int cap = capacity_of(cfg);
    if (cfg.solution.empty()) throw std::invalid_argument("lp-round needs --solution");
    const IntervalInstance inst = parse_instance(read_file(path));
    const CanonicalPIG g = build_canonical(inst);
    const FractionalSolution sol = parse_solution(read_file(cfg.solution), g.n);
    const RoundedSolution rs = round_fractional(sol, g, cap);
    Outcome o;
    std::ostringstream out;
    Json x = Json::object();
    for (int j = 1; j <= g.n; ++j) {
        x[id_at(inst, g, j)] = rs.x[j];
        out << 'x' << j << ' ' << rs.x[j] << '\n';
    }
    out << "lambda " << rs.lambda << '\n';
    Json viol = Json::array();
    for (const auto& v : rs.postcheck.violations) {
        viol.push_back({{"constraint", v.constraint}, {"slack", v.slack.str()}});
        out << "violated " << v.constraint << " by " << -v.slack << '\n';
    }
    out << (rs.postcheck.ok() ? "postcheck ok\n" : "postcheck FAILED\n");
    o.json = {{"x", x}, {"lambda", rs.lambda}, {"postcheck_ok", rs.postcheck.ok()}, {"violations", viol}};
    o.text = out.str();
    o.code = rs.postcheck.ok() ? kOk : kInvalid;
    return o;
}

Outcome cmd_schedule(const std::string& path, const RunConfig& cfg) {
    const auto reqs = parse_requests(read_file(path));
    const LightTrailPlan plan = schedule(reqs, cfg.capacity, parse_mode(cfg.mode));
    const ValidationReport r = validate_plan(plan, reqs, cfg.capacity);
    const Weight cong = congestion(reqs);
    const Weight lb = (cong + cfg.capacity - 1) / cfg.capacity;
    Outcome o;
    o.json = Json::parse(plan_to_json(plan));
    o.json["congestion"] = cong;
    o.json["lower_bound"] = lb;
    o.json["valid"] = r.ok();
    o.text = "wavelengths " + std::to_string(plan.wavelengths.size()) + " (congestion " + std::to_string(cong) +
             ", lower bound " + std::to_string(lb) + ")\n" + plan_diagram(plan) + verdict(r);
    o.code = r.ok() ? kOk : kInvalid;
    return o;
}

Outcome cmd_split_bound(const std::string& path, const RunConfig& cfg) {
    const int cap = capacity_of(cfg);
    const SplitGraph input = parse_split_graph(read_file(path));
    const SplitBound b = split_upper_bound(input, cap);
    const Graph graph = b.graph.to_graph();
    const int omega = b.graph.omega();
    const int bound = (omega + cap - 1) / cap + 1;
    ValidationReport r = validate_partition(graph, b.graph.maximal_cliques(), b.partition, cap, bound);
    std::vector<int> color0(b.color.begin(), b.color.end());
    merge(r, validate_coloring(graph, color0, cap, bound));
    Outcome o;
    Json parts = Json::array();
    for (const auto& m : b.partition.members()) {
        Json ids = Json::array();
        for (int v : m) ids.push_back(b.graph.id(v));
        parts.push_back(ids);
    }
    Json colors = Json::object();
    for (int v = 0; v < b.graph.size(); ++v) colors[b.graph.id(v)] = b.color[v];
    o.json = {{"omega", omega}, {"lambda", b.lambda}, {"colors", b.colors}, {"bound", bound},
              {"parts", parts}, {"color_by_id", colors}, {"valid", r.ok()}};
    std::ostringstream out;
    out << "omega " << omega << "\nlambda " << b.lambda << "\ncolors " << b.colors << "\nbound " << bound << "\nparts";
    for (const auto& p : parts) {
        out << " {";
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i].get<std::string>();
        out << '}';
    }
    out << '\n' << verdict(r);
    o.text = out.str();
    o.code = r.ok() ? kOk : kInvalid;
    return o;
}

// ---------------------------------------------------------------------------
// Commands without per-file inputs

Outcome cmd_reduce(const RunConfig& cfg) {
    if (cfg.cnf.empty() == cfg.sp.empty()) throw std::invalid_argument("reduce needs exactly one of --cnf, --sp");
    Outcome o;
    std::ostringstream out;
    ValidationReport r;
    std::optional<Cnf> f;
    std::optional<SPInstance> sp;
    if (!cfg.cnf.empty()) {
        f = parse_dimacs(read_file(cfg.cnf));
        sp = sat_to_sp(*f);
        if (!sp) {
            out << "formula has an empty clause\nanswer NO\n";
            o.json = {{"answer", "NO"}, {"reason", "empty clause"}};
            o.text = out.str();
            return o;
        }
        out << "# SP instance\n" << format_sp(*sp);
        o.json["sp"] = format_sp(*sp);
    } else {
        sp = parse_sp(read_file(cfg.sp));
    }
    const CPInstance cp = sp_to_cp(*sp);
    out << "# CP instance: capacity " << cp.capacity << ", target " << cp.target << "\n"
        << format_split_graph(cp.graph);
    o.json["cp"] = format_split_graph(cp.graph);
    o.json["capacity"] = cp.capacity;
    o.json["target"] = cp.target;

    std::optional<bool> sat_answer;
    if (f) {
        const auto a = decide_sat_bruteforce(*f);
        sat_answer = a.has_value();
        if (a) {
            const Grouping gr = assignment_to_grouping(*f, *a);
            merge(r, check_grouping(*sp, gr));
            merge(r, check_cp_partition(cp, grouping_to_partition(cp, *sp, gr)));
        }
    }
    const auto grouping = decide_sp_bruteforce(*sp);
    if (grouping) {
        merge(r, check_cp_partition(cp, grouping_to_partition(cp, *sp, *grouping)));
        if (f) merge(r, check_assignment(*f, grouping_to_assignment(*f, *grouping)));
    }
    const auto partition = decide_cp_bruteforce(cp.graph, cp.capacity, cfg.guard);
    if (partition) {
        merge(r, check_cp_partition(cp, *partition));
        const Grouping back = partition_to_grouping(cp, *sp, *partition);
        if (f) merge(r, check_assignment(*f, grouping_to_assignment(*f, back)));
    }
    const bool agree = (!sat_answer || *sat_answer == grouping.has_value()) && grouping.has_value() == partition.has_value();
    if (!agree) r.add("reduction", "brute-force answers disagree");
    auto yn = [](bool b) { return b ? "YES" : "NO"; };
    if (sat_answer) {
        out << "sat " << yn(*sat_answer) << '\n';
        o.json["sat"] = yn(*sat_answer);
    }
    out << "sp " << yn(grouping.has_value()) << "\ncp " << yn(partition.has_value()) << '\n';
    o.json["sp_answer"] = yn(grouping.has_value());
    o.json["cp_answer"] = yn(partition.has_value());
    o.json["answer"] = yn(partition.has_value());
    o.json["certificates_valid"] = r.ok();
    out << "answer " << yn(partition.has_value()) << '\n' << (r.ok() ? "certificates ok\n" : r.summary() + "\n");
    o.text = out.str();
    o.code = r.ok() ? kOk : kInvalid;
    return o;
}

Outcome cmd_bench(const RunConfig& cfg) {
    std::vector<long long> sizes = cfg.sizes;
    std::vector<BenchRow> rows;
    if (cfg.family == "adversarial") {
        if (cfg.t) sizes = {cfg.t};
        if (sizes.empty()) sizes = {25, 50, 100, 200};
        for (long long t : sizes) rows.push_back(bench_adversarial(static_cast<int>(t), cfg.reps));
    } else if (cfg.family == "banded" || cfg.family == "random") {
        const int cap = capacity_of(cfg);
        if (sizes.empty()) sizes = {10000, 100000, 1000000};
        for (long long n : sizes)
            rows.push_back(cfg.family == "banded" ? bench_banded(static_cast<int>(n), cfg.depth, cap, cfg.reps)
                                                  : bench_random(static_cast<int>(n), cap, cfg.seed, cfg.reps));
    } else {
        throw std::invalid_argument("unknown family '" + cfg.family + "' (adversarial, banded, random)");
    }
    Outcome o;
    o.json = Json::array();
    std::ostringstream out;
    const bool adv = cfg.family == "adversarial";
    out << (adv ? "t\tn\tn_expanded\t|F|\tt^2+t+1\tseconds\n" : "n\tlambda\tseconds\n");
    for (const auto& row : rows) {
        Json j = {{"family", row.family}, {"n", row.n}, {"seconds", row.seconds}};
        if (adv) {
            const long long expect = row.param * row.param + row.param + 1;
            j["t"] = row.param;
            j["expanded_n"] = row.expanded_n;
            j["forbidden_blocks"] = row.forbidden_blocks;
            j["expected_forbidden_blocks"] = expect;
            out << row.param << '\t' << row.n << '\t' << row.expanded_n << '\t' << row.forbidden_blocks << '\t'
                << expect << '\t' << row.seconds << '\n';
            if (row.forbidden_blocks != expect) o.code = kInvalid;
        } else {
            j["lambda"] = row.lambda;
            out << row.n << '\t' << row.lambda << '\t' << row.seconds << '\n';
        }
        o.json.push_back(j);
    }
    if (rows.size() >= 2) {
        std::vector<double> xs, ys;
        for (const auto& row : rows) {
            xs.push_back(static_cast<double>(row.n));
            ys.push_back(std::max(row.seconds, 1e-9));
        }
        const double slope = loglog_slope(xs, ys);
        out << "log-log slope " << slope << '\n';
        o.json = {{"rows", o.json}, {"loglog_slope", slope}};
    } else {
        o.json = {{"rows", o.json}};
    }
    o.text = out.str();
    return o;
}

// ---------------------------------------------------------------------------
// Dispatch

template <class F>
Outcome guarded(F&& fn, const std::string& label) {
    auto fail = [&](int code, const std::string& what) {
        std::cerr << "chromon: " << (label.empty() ? "" : label + ": ") << what << '\n';
        Outcome o;
        o.code = code;
        o.json = {{"error", what}, {"exit", code}};
        o.text = "error: " + what + "\n";
        return o;
    };
    try {
        return fn();
    } catch (const ParseError& e) {
        return fail(kUsage, e.what());
    } catch (const GuardError& e) {
        return fail(kUsage, e.what());
    } catch (const InvalidCertificate& e) {
        return fail(kInvalid, e.what());
    } catch (const Error& e) {  // NotProper, WeightTooLarge, InfeasibleInput
        return fail(kInfeasible, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(kUsage, e.what());
    } catch (const std::exception& e) {
        return fail(kInternal, e.what());
    }
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
    std::vector<std::string> files;
    for (const auto& in : inputs) {
        if (fs::is_directory(in)) {
            std::vector<std::string> found;
            for (const auto& e : fs::directory_iterator(in))
                if (e.is_regular_file()) found.push_back(e.path().string());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else {
            files.push_back(in);
        }
    }
    return files;
}

// Runs fn over every file with a bounded worker pool; results keep input order.
template <class F>
std::vector<Outcome> run_files(const std::vector<std::string>& files, int jobs, F&& fn) {
    std::vector<Outcome> results(files.size());
    std::atomic<std::size_t> next{0};
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(files.size(), jobs > 0 ? jobs : std::max(1u, std::thread::hardware_concurrency())));
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < files.size();) results[i] = guarded([&] { return fn(files[i]); }, files[i]);
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    return results;
}

int emit(const std::vector<std::string>& files, const std::vector<Outcome>& results, const RunConfig& cfg, bool many) {
    int code = kOk;
    for (const auto& r : results) code = std::max(code, r.code);
    if (cfg.format == "json") {
        if (!many) {
            std::cout << results.front().json.dump(2) << '\n';
        } else {
            Json all = Json::array();
            for (std::size_t i = 0; i < results.size(); ++i)
                all.push_back({{"file", files[i]}, {"exit", results[i].code}, {"result", results[i].json}});
            std::cout << all.dump(2) << '\n';
        }
    } else {
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (many) std::cout << "== " << files[i] << " ==\n";
            std::cout << results[i].text;
        }
    }
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Component coloring solvers for proper interval graphs and split graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", cfg.jobs, "Worker threads for directory inputs (0 = hardware)")->check(CLI::NonNegativeNumber);

    auto capacity = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("-C,--capacity", cfg.capacity, "Chromon capacity C")->check(CLI::PositiveNumber);
        if (required) opt->required();
    };
    auto inputs = [&](CLI::App* sub, const char* what) { sub->add_option("input", cfg.inputs, what)->required(); };

    using FileCmd = Outcome (*)(const std::string&, const RunConfig&);
    std::vector<std::pair<CLI::App*, FileCmd>> file_cmds;
    auto file_cmd = [&](const char* name, const char* desc, FileCmd fn, const char* input_desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        inputs(sub, input_desc);
        file_cmds.push_back({sub, fn});
        return sub;
    };

    const char* inst_desc = "Instance file(s) or directories (`id left right [weight]` lines)";
    capacity(file_cmd("solve", "Optimal unweighted coloring", cmd_solve, inst_desc));
    capacity(file_cmd("solve-split", "Optimal splittable weighted coloring", cmd_solve_split, inst_desc));
    capacity(file_cmd("solve-weighted", "Non-splittable 2-approximation", cmd_solve_weighted, inst_desc));
    auto* oracle = file_cmd("oracle", "Brute-force optimum (small instances)", cmd_oracle, inst_desc);
    capacity(oracle);
    oracle->add_option("--guard", cfg.guard, "Largest n the block oracle accepts")->check(CLI::Range(1, 20));
    auto* verify = file_cmd("verify", "Check a solution or light-trail plan", cmd_verify,
                            "Instance file (or request file with --plan)");
    capacity(verify, false);
    verify->add_option("--solution", cfg.solution, "Solution JSON from a solve command");
    verify->add_option("--plan", cfg.plan, "Plan JSON from schedule");
    capacity(file_cmd("lp-emit", "Write the integer program in CPLEX LP format", cmd_lp_emit, inst_desc));
    auto* lp_round = file_cmd("lp-round", "Round a fractional LP point", cmd_lp_round, inst_desc);
    capacity(lp_round);
    lp_round->add_option("--solution", cfg.solution, "`j value` lines plus `lambda value`")->required();
    auto* sched = file_cmd("schedule", "Light-trail plan for transmission requests", cmd_schedule,
                           "Request file(s) (`id src dst bandwidth` lines)");
    capacity(sched);
    sched->add_option("--mode", cfg.mode, "Bandwidth handling")
        ->check(CLI::IsMember({"unweighted", "splittable", "nonsplittable"}));
    capacity(file_cmd("split-bound", "Upper-bound partition of a split graph", cmd_split_bound,
                      "Split graph file(s) (`Q ...` then `S id nbr...`)"));

    auto* reduce = app.add_subcommand("reduce", "SAT -> SP -> CP reduction with brute-force checks");
    reduce->add_option("--cnf", cfg.cnf, "DIMACS CNF file");
    reduce->add_option("--sp", cfg.sp, "Set-partitioning file");
    reduce->add_option("--guard", cfg.guard, "Largest clique side the CP search accepts")->check(CLI::Range(1, 24));

    auto* bench = app.add_subcommand("bench", "Scaling runs");
    bench->add_option("--family", cfg.family, "adversarial, banded or random")
        ->check(CLI::IsMember({"adversarial", "banded", "random"}));
    bench->add_option("--t", cfg.t, "Single adversarial parameter t")->check(CLI::PositiveNumber);
    bench->add_option("--sizes", cfg.sizes, "Values of n (or t for adversarial)")->delimiter(',');
    bench->add_option("--depth", cfg.depth, "Clique depth for the banded family")->check(CLI::PositiveNumber);
    bench->add_option("--reps", cfg.reps, "Repetitions per size (minimum is reported)")->check(CLI::PositiveNumber);
    bench->add_option("--seed", cfg.seed, "Generator seed");
    capacity(bench, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    if (reduce->parsed()) {
        const auto o = guarded([&] { return cmd_reduce(cfg); }, "reduce");
        return emit({""}, {o}, cfg, false);
    }
    if (bench->parsed()) {
        if (cfg.family != "adversarial" && cfg.capacity == 0) cfg.capacity = 4;
        const auto o = guarded([&] { return cmd_bench(cfg); }, "bench");
        return emit({""}, {o}, cfg, false);
    }
    for (const auto& [sub, fn] : file_cmds) {
        if (!sub->parsed()) continue;
        const auto files = expand_inputs(cfg.inputs);
        if (files.empty()) {
            std::cerr << "chromon: no input files\n";
            return kUsage;
        }
        const bool many = files.size() > 1 || fs::is_directory(cfg.inputs.front());
        const auto results = run_files(files, cfg.jobs, [&, fn = fn](const std::string& f) { return fn(f, cfg); });
        return emit(files, results, cfg, many);
    }
    return kUsage;
}
