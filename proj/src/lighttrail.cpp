#include "chromon/lighttrail.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "chromon/error.hpp"
#include "chromon/partition.hpp"
#include "chromon/weighted.hpp"

namespace chromon {

namespace {

using json = nlohmann::ordered_json;

long long to_int(const std::string& tok, std::size_t line, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used == tok.size()) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
}

}  // namespace

std::vector<TransmissionRequest> parse_requests(std::string_view text) {
    std::vector<TransmissionRequest> out;
    std::unordered_set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::vector<std::string> f;
        for (std::string w; fields >> w;) f.push_back(w);
        if (f.empty()) continue;
        if (f.size() != 4) throw ParseError(line_no, "expected 'id src dst bandwidth'");
        TransmissionRequest r;
        r.id = f[0];
        const long long src = to_int(f[1], line_no, "src");
        const long long dst = to_int(f[2], line_no, "dst");
        r.bandwidth = to_int(f[3], line_no, "bandwidth");
        if (src < 0 || dst < 0 || src > 1'000'000'000 || dst > 1'000'000'000)
            throw ParseError(line_no, "processor index out of range");
        if (src == dst) throw ParseError(line_no, "request '" + r.id + "' has src == dst");
        r.src = static_cast<int>(std::min(src, dst));
        r.dst = static_cast<int>(std::max(src, dst));
        if (r.bandwidth < 1) throw ParseError(line_no, "bandwidth of '" + r.id + "' must be >= 1");
        if (!seen.insert(r.id).second) throw ParseError(line_no, "duplicate id '" + r.id + "'");
        out.push_back(std::move(r));
    }
    return out;
}

std::string format_requests(const std::vector<TransmissionRequest>& reqs) {
    std::ostringstream out;
    for (const auto& r : reqs) out << r.id << ' ' << r.src << ' ' << r.dst << ' ' << r.bandwidth << '\n';
    return out.str();
}

IntervalInstance requests_to_intervals(const std::vector<TransmissionRequest>& reqs, Weight capacity) {
    IntervalInstance inst;
    for (const auto& r : reqs) {
        if (r.src < 0 || r.src >= r.dst) throw InfeasibleInputError("request '" + r.id + "' needs 0 <= src < dst");
        if (r.bandwidth < 1) throw InfeasibleInputError("bandwidth of '" + r.id + "' must be >= 1");
        if (r.bandwidth > capacity) throw WeightTooLargeError(r.id, r.bandwidth, capacity);
        inst.items.push_back({r.id, 2 * static_cast<std::int64_t>(r.src), 2 * static_cast<std::int64_t>(r.dst) - 1,
                              r.bandwidth});
    }
    check_instance(inst);
    return inst;
}

const char* to_string(ScheduleMode m) {
    switch (m) {
        case ScheduleMode::unweighted: return "unweighted";
        case ScheduleMode::splittable: return "splittable";
        case ScheduleMode::nonsplittable: return "nonsplittable";
    }
    return "?";
}

ScheduleMode parse_mode(std::string_view name) {
    if (name == "unweighted") return ScheduleMode::unweighted;
    if (name == "splittable") return ScheduleMode::splittable;
    if (name == "nonsplittable") return ScheduleMode::nonsplittable;
    throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

LightTrailPlan schedule(const std::vector<TransmissionRequest>& reqs, Weight capacity, ScheduleMode mode) {
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    if (mode == ScheduleMode::unweighted)
        for (const auto& r : reqs)
            if (r.bandwidth != 1)
                throw InfeasibleInputError("unweighted mode needs unit bandwidth; '" + r.id + "' has " +
                                           std::to_string(r.bandwidth));
    const IntervalInstance inst = requests_to_intervals(reqs, capacity);
    const CanonicalPIG g = build_canonical(inst);
    const int cap = static_cast<int>(std::min<Weight>(capacity, 1'000'000'000));

    // pieces[v]: (color, amount) by canonical position
    std::vector<std::vector<SplitPiece>> pieces(g.n + 1);
    int lambda = 0;
    if (mode == ScheduleMode::splittable) {
        const SplitSolution s = solve_split(g, cap);
        pieces = s.coloring.pieces;
        lambda = s.coloring.lambda;
    } else {
        Coloring c;
        if (mode == ScheduleMode::unweighted) {
            c = partition_to_coloring(solve_unweighted(g, cap), g);
        } else {
            c = two_approx_nonsplit(g, cap).coloring;
        }
        lambda = c.lambda;
        for (int v = 1; v <= g.n; ++v) pieces[v].push_back({c.color[v], g.weight[v]});
    }

    LightTrailPlan plan;
    plan.mode = mode;
    plan.capacity = capacity;
    for (const auto& r : reqs) plan.processors = std::max(plan.processors, r.dst);
    plan.wavelengths.resize(lambda);

    // Per color, the positions holding a piece of it split into runs of
    // consecutive adjacent positions; in canonical order those runs are the
    // chromons.
    std::vector<std::vector<std::pair<int, Weight>>> by_color(lambda + 1);
    for (int v = 1; v <= g.n; ++v) {
        std::map<int, Weight> merged;
        for (const auto& p : pieces[v]) merged[p.color] += p.amount;
        for (const auto& [color, amount] : merged) {
            if (color < 1 || color > lambda) throw std::logic_error("solver produced color out of range");
            by_color[color].push_back({v, amount});
        }
    }
    for (int color = 1; color <= lambda; ++color) {
        auto& wl = plan.wavelengths[color - 1];
        const auto& list = by_color[color];
        for (std::size_t i = 0; i < list.size(); ++i) {
            const int v = list[i].first;
            const auto& req = reqs[g.order[v - 1]];
            if (i == 0 || !g.is_edge(list[i - 1].first, v)) wl.trails.push_back({req.src, req.dst, {}, 0});
            Trail& t = wl.trails.back();
            t.left = std::min(t.left, req.src);
            t.right = std::max(t.right, req.dst);
            t.requests.push_back({req.id, list[i].second});
            t.load += list[i].second;
        }
        std::set<int> shutters;
        for (const auto& t : wl.trails) {
            shutters.insert(t.left);
            shutters.insert(t.right);
        }
        wl.shutters.assign(shutters.begin(), shutters.end());
    }
    return plan;
}

Weight congestion(const std::vector<TransmissionRequest>& reqs) {
    // Sweep over link events: +bw at src, -bw at dst.
    std::map<int, Weight> delta;
    for (const auto& r : reqs) {
        delta[r.src] += r.bandwidth;
        delta[r.dst] -= r.bandwidth;
    }
    Weight load = 0, best = 0;
    for (const auto& [pos, d] : delta) {
        load += d;
        best = std::max(best, load);
    }
    return best;
}

ValidationReport validate_plan(const LightTrailPlan& plan, const std::vector<TransmissionRequest>& reqs,
                               Weight capacity) {
    ValidationReport r;
    std::unordered_map<std::string, const TransmissionRequest*> by_id;
    for (const auto& q : reqs) by_id[q.id] = &q;
    std::unordered_map<std::string, Weight> served;
    std::unordered_map<std::string, int> shares;

    for (std::size_t w = 0; w < plan.wavelengths.size(); ++w) {
        const auto& wl = plan.wavelengths[w];
        const std::string where = "wavelength " + std::to_string(w + 1);
        std::vector<const Trail*> trails;
        for (const auto& t : wl.trails) trails.push_back(&t);
        std::sort(trails.begin(), trails.end(), [](auto a, auto b) { return a->left < b->left; });
        std::set<int> ends;
        for (std::size_t i = 0; i < trails.size(); ++i) {
            const Trail& t = *trails[i];
            const std::string tw = where + " trail [" + std::to_string(t.left) + "," + std::to_string(t.right) + "]";
            ends.insert(t.left);
            ends.insert(t.right);
            if (t.left >= t.right) r.add("span", tw + " is empty");
            if (i > 0 && trails[i - 1]->right > t.left) r.add("disjointness", tw + " shares a link with the previous trail");
            if (t.load > capacity) r.add("weight", tw + " load " + std::to_string(t.load) + " > C");
            Weight sum = 0;
            std::vector<std::pair<int, int>> spans;
            for (const auto& s : t.requests) {
                auto it = by_id.find(s.request);
                if (it == by_id.end()) {
                    r.add("coverage", tw + " carries unknown request '" + s.request + "'");
                    continue;
                }
                if (s.amount < 1) r.add("weight", tw + " carries a non-positive share of '" + s.request + "'");
                sum += s.amount;
                served[s.request] += s.amount;
                ++shares[s.request];
                spans.push_back({it->second->src, it->second->dst});
            }
            if (sum != t.load) r.add("weight", tw + " load differs from the sum of its shares");
            if (spans.empty()) {
                r.add("coverage", tw + " carries no request");
                continue;
            }
            std::sort(spans.begin(), spans.end());
            int reach = spans.front().first;
            bool gap = false;
            for (const auto& [a, b] : spans) {
                if (a > reach) gap = true;
                reach = std::max(reach, b);
            }
            if (gap || spans.front().first != t.left || reach != t.right)
                r.add("span", tw + " is not the union of its request spans");
        }
        if (!std::equal(ends.begin(), ends.end(), wl.shutters.begin(), wl.shutters.end()))
            r.add("shutter", where + " shutters differ from the trail endpoints");
    }
    for (const auto& q : reqs) {
        const Weight got = served.count(q.id) ? served[q.id] : 0;
        if (got != q.bandwidth)
            r.add("coverage", "request '" + q.id + "' served " + std::to_string(got) + " of " + std::to_string(q.bandwidth));
        else if (plan.mode != ScheduleMode::splittable && shares[q.id] != 1)
            r.add("coverage", "request '" + q.id + "' split although the plan is " + to_string(plan.mode));
    }
    return r;
}

std::string plan_to_json(const LightTrailPlan& plan, int indent) {
    json j;
    j["mode"] = to_string(plan.mode);
    j["capacity"] = plan.capacity;
    j["processors"] = plan.processors;
    j["lambda"] = plan.wavelengths.size();
    json wls = json::array();
    for (const auto& wl : plan.wavelengths) {
        json trails = json::array();
        for (const auto& t : wl.trails) {
            json reqs = json::array();
            for (const auto& s : t.requests) reqs.push_back({{"id", s.request}, {"amount", s.amount}});
            trails.push_back({{"span", {t.left, t.right}}, {"load", t.load}, {"requests", reqs}});
        }
        wls.push_back({{"trails", trails}, {"shutters_off", wl.shutters}});
    }
    j["wavelengths"] = wls;
    return j.dump(indent);
}

LightTrailPlan plan_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        LightTrailPlan plan;
        plan.mode = parse_mode(j.at("mode").get<std::string>());
        plan.capacity = j.at("capacity").get<Weight>();
        plan.processors = j.at("processors").get<int>();
        for (const auto& wj : j.at("wavelengths")) {
            Wavelength wl;
            for (const auto& tj : wj.at("trails")) {
                Trail t;
                t.left = tj.at("span").at(0).get<int>();
                t.right = tj.at("span").at(1).get<int>();
                t.load = tj.at("load").get<Weight>();
                for (const auto& sj : tj.at("requests"))
                    t.requests.push_back({sj.at("id").get<std::string>(), sj.at("amount").get<Weight>()});
                wl.trails.push_back(std::move(t));
            }
            wl.shutters = wj.at("shutters_off").get<std::vector<int>>();
            plan.wavelengths.push_back(std::move(wl));
        }
        return plan;
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("plan JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, std::string("plan JSON: ") + e.what());
    }
}

std::string plan_diagram(const LightTrailPlan& plan) {
    std::ostringstream out;
    const int width = 2 * plan.processors + 1;
    const std::string label_pad(std::to_string(plan.wavelengths.size()).size() + 2, ' ');
    out << label_pad;
    for (int p = 0; p <= plan.processors; ++p) out << (p % 10) << (p < plan.processors ? " " : "");
    out << '\n';
    for (std::size_t w = 0; w < plan.wavelengths.size(); ++w) {
        const auto& wl = plan.wavelengths[w];
        std::string row(width, ' ');
        for (int p = 0; p <= plan.processors; ++p) row[2 * p] = '.';
        for (const auto& t : wl.trails)
            for (int x = t.left; x < t.right; ++x) row[2 * x + 1] = '=';
        for (int p : wl.shutters)
            if (p >= 0 && p <= plan.processors) row[2 * p] = 'X';
        std::string label = "w" + std::to_string(w + 1);
        label.resize(label_pad.size(), ' ');
        out << label << row << '\n';
    }
    for (std::size_t w = 0; w < plan.wavelengths.size(); ++w)
        for (const auto& t : plan.wavelengths[w].trails) {
            out << "w" << (w + 1) << " [" << t.left << "," << t.right << "] load " << t.load << ":";
            for (const auto& s : t.requests) {
                out << ' ' << s.request;
                if (plan.mode == ScheduleMode::splittable) out << '(' << s.amount << ')';
            }
            out << '\n';
        }
    return out.str();
}

}  // namespace chromon
