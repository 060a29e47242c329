#include "chromon/io.hpp"

#include <unordered_map>

#include "chromon/error.hpp"

namespace chromon {

namespace {

Json base(const char* kind, const IntervalInstance& inst, const CanonicalPIG& g, int capacity, int lambda,
          const ValidationReport& r) {
    Json j;
    j["kind"] = kind;
    j["capacity"] = capacity;
    j["lambda"] = lambda;
    j["valid"] = r.ok();
    j["violations"] = report_json(r)["violations"];
    Json order = Json::array();
    for (int p = 1; p <= g.n; ++p) order.push_back(inst.items[g.order[p - 1]].id);
    j["order"] = order;
    return j;
}

void add_blocks(Json& j, const IntervalInstance& inst, const CanonicalPIG& g, const BlockPartition& p,
                const Coloring& c) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks) {
        Json ids = Json::array();
        for (int v = b.first; v <= b.last; ++v) ids.push_back(inst.items[g.order[v - 1]].id);
        blocks.push_back(ids);
    }
    j["blocks"] = blocks;
    j["colors"] = std::vector<int>(c.color.begin() + 1, c.color.end());
    Json by_id = Json::object();
    for (int v = 1; v <= g.n; ++v) by_id[inst.items[g.order[v - 1]].id] = c.color[v];
    j["color_by_id"] = by_id;
}

}  // namespace

Json report_json(const ValidationReport& r) {
    Json j;
    j["ok"] = r.ok();
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"witness", x.witness}});
    j["violations"] = v;
    return j;
}

Json solution_json(const IntervalInstance& inst, const CanonicalPIG& g, const BlockPartition& p, const Coloring& c,
                   const ValidationReport& r) {
    Json j = base("unweighted", inst, g, p.capacity, p.lambda, r);
    add_blocks(j, inst, g, p, c);
    return j;
}

Json solution_json(const IntervalInstance& inst, const CanonicalPIG& g, const SplitSolution& s,
                   const ValidationReport& r) {
    Json j = base("split", inst, g, s.partition.capacity, s.coloring.lambda, r);
    Json blocks = Json::array();
    for (const auto& b : s.partition.blocks) blocks.push_back({b.first, b.last});
    j["blocks"] = blocks;
    Json assignment = Json::object();
    for (int v = 1; v <= g.n; ++v) {
        Json pieces = Json::array();
        for (const auto& piece : s.coloring.pieces[v]) pieces.push_back({piece.color, piece.amount});
        assignment[inst.items[g.order[v - 1]].id] = pieces;
    }
    j["assignment"] = assignment;
    return j;
}

Json solution_json(const IntervalInstance& inst, const CanonicalPIG& g, const NonSplitSolution& s,
                   const ValidationReport& r) {
    Json j = base("nonsplit", inst, g, s.partition.capacity, s.partition.lambda, r);
    j["split_lambda"] = s.split_lambda;
    add_blocks(j, inst, g, s.partition, s.coloring);
    return j;
}

ParsedSolution parse_solution_json(std::string_view text, const IntervalInstance& inst) {
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < inst.items.size(); ++i) index[inst.items[i].id] = static_cast<int>(i);
    auto lookup = [&](const std::string& id) {
        auto it = index.find(id);
        if (it == index.end()) throw ParseError(0, "solution names unknown id '" + id + "'");
        return it->second;
    };
    try {
        const Json j = Json::parse(text);
        ParsedSolution s;
        s.kind = j.at("kind").get<std::string>();
        s.lambda = j.at("lambda").get<int>();
        const std::size_t n = inst.items.size();
        if (s.kind == "split") {
            s.pieces.assign(n, {});
            std::vector<char> seen(n, 0);
            for (const auto& [id, list] : j.at("assignment").items()) {
                const int i = lookup(id);
                seen[i] = 1;
                for (const auto& piece : list)
                    s.pieces[i].push_back({piece.at(0).get<int>(), piece.at(1).get<Weight>()});
            }
            for (std::size_t i = 0; i < n; ++i)
                if (!seen[i]) throw ParseError(0, "solution misses id '" + inst.items[i].id + "'");
        } else if (s.kind == "unweighted" || s.kind == "nonsplit") {
            s.color.assign(n, 0);
            for (const auto& [id, c] : j.at("color_by_id").items()) s.color[lookup(id)] = c.get<int>();
            for (std::size_t i = 0; i < n; ++i)
                if (!s.color[i]) throw ParseError(0, "solution misses id '" + inst.items[i].id + "'");
        } else {
            throw ParseError(0, "unknown solution kind '" + s.kind + "'");
        }
        return s;
    } catch (const Json::exception& e) {
        throw ParseError(0, std::string("solution JSON: ") + e.what());
    }
}

ValidationReport verify_solution(const ParsedSolution& s, const IntervalInstance& inst, Weight capacity) {
    const CanonicalPIG g = build_canonical(inst);
    if (s.kind == "split") {
        SplitColoring c;
        c.lambda = s.lambda;
        c.pieces.assign(g.n + 1, {});
        for (int v = 1; v <= g.n; ++v) c.pieces[v] = s.pieces[g.order[v - 1]];
        return validate_split_coloring(g, c, capacity, s.lambda);
    }
    Coloring c;
    c.lambda = s.lambda;
    c.color.assign(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) c.color[v] = s.color[g.order[v - 1]];
    return validate_coloring(g, c, capacity, s.lambda);
}

}  // namespace chromon
