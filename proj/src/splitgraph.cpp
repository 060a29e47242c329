#include "chromon/splitgraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chromon/error.hpp"

namespace chromon {

namespace {

std::vector<std::string> words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

// Calls fn(line_no, fields) for each non-blank line with '#' comments removed.
template <class F>
void for_each_record(std::string_view text, F&& fn) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto f = words(line);
        if (!f.empty()) fn(line_no, f);
    }
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::string element_name(int var, int kind) {
    static const char* const prefix[] = {"x", "x", "T", "F"};
    return prefix[kind] + std::to_string(var) + (kind == 1 ? "'" : "");
}

int element_index(int var, int kind) { return 4 * (var - 1) + kind; }

}  // namespace

// ---------------------------------------------------------------------------
// SplitGraph

int SplitGraph::omega() const noexcept {
    int best = static_cast<int>(q.size());
    for (const auto& a : adj) {
        const int closed = static_cast<int>(a.size()) + 1;
        best = std::max(best, closed);
    }
    return size() ? best : 0;
}

const std::string& SplitGraph::id(int v) const {
    if (v < 0 || v >= size()) throw std::out_of_range("split graph vertex out of range");
    return v < static_cast<int>(q.size()) ? q[v] : s[v - q.size()];
}

Graph SplitGraph::to_graph() const {
    Graph g(size());
    const int nq = static_cast<int>(q.size());
    for (int a = 0; a < nq; ++a)
        for (int b = a + 1; b < nq; ++b) g.add_edge(a, b);
    for (std::size_t j = 0; j < s.size(); ++j)
        for (int a : adj[j]) g.add_edge(a, nq + static_cast<int>(j));
    return g;
}

std::vector<std::vector<int>> SplitGraph::maximal_cliques() const {
    std::vector<std::vector<int>> out;
    const int nq = static_cast<int>(q.size());
    const bool q_maximal =
        nq > 0 && std::none_of(adj.begin(), adj.end(), [&](const auto& a) { return static_cast<int>(a.size()) == nq; });
    if (q_maximal) {
        std::vector<int> all(nq);
        for (int a = 0; a < nq; ++a) all[a] = a;
        out.push_back(std::move(all));
    }
    for (std::size_t j = 0; j < s.size(); ++j) {
        std::vector<int> c = adj[j];
        c.push_back(nq + static_cast<int>(j));
        out.push_back(std::move(c));
    }
    return out;
}

SplitGraph parse_split_graph(std::string_view text) {
    SplitGraph g;
    std::map<std::string, int> q_index;
    std::set<std::string> ids;
    bool have_q = false;
    std::vector<std::pair<std::size_t, std::vector<std::string>>> s_lines;
    for_each_record(text, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f[0] == "Q") {
            if (have_q) throw ParseError(line, "second Q line");
            if (!s_lines.empty()) throw ParseError(line, "Q line must come before S lines");
            have_q = true;
            for (std::size_t i = 1; i < f.size(); ++i) {
                if (!ids.insert(f[i]).second) throw ParseError(line, "duplicate id '" + f[i] + "'");
                q_index[f[i]] = static_cast<int>(g.q.size());
                g.q.push_back(f[i]);
            }
        } else if (f[0] == "S") {
            if (f.size() < 2) throw ParseError(line, "S line needs a vertex id");
            if (!ids.insert(f[1]).second) throw ParseError(line, "duplicate id '" + f[1] + "'");
            s_lines.push_back({line, f});
        } else {
            throw ParseError(line, "expected 'Q ...' or 'S id ...', got '" + f[0] + "'");
        }
    });
    for (const auto& [line, f] : s_lines) {
        g.s.push_back(f[1]);
        std::vector<int> nb;
        for (std::size_t i = 2; i < f.size(); ++i) {
            auto it = q_index.find(f[i]);
            if (it == q_index.end()) throw ParseError(line, "'" + f[i] + "' is not a Q vertex");
            nb.push_back(it->second);
        }
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.adj.push_back(std::move(nb));
    }
    return g;
}

std::string format_split_graph(const SplitGraph& g) {
    std::ostringstream out;
    out << 'Q';
    for (const auto& id : g.q) out << ' ' << id;
    out << '\n';
    for (std::size_t j = 0; j < g.s.size(); ++j) {
        out << "S " << g.s[j];
        for (int a : g.adj[j]) out << ' ' << g.q[a];
        out << '\n';
    }
    return out.str();
}

SplitGraph normalize(const SplitGraph& g) {
    const auto nq = g.q.size();
    for (std::size_t j = 0; j < g.s.size(); ++j) {
        if (g.adj[j].size() != nq) continue;
        SplitGraph out;
        out.q = g.q;
        out.q.push_back(g.s[j]);
        for (std::size_t o = 0; o < g.s.size(); ++o) {
            if (o == j) continue;
            out.s.push_back(g.s[o]);
            out.adj.push_back(g.adj[o]);
        }
        return out;
    }
    return g;
}

SplitBound split_upper_bound(const SplitGraph& input, int capacity) {
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    SplitBound out;
    out.graph = normalize(input);
    const SplitGraph& g = out.graph;
    const int nq = static_cast<int>(g.q.size());
    const int t = ceil_div(nq, capacity);

    out.partition.part_of.assign(g.size(), 0);
    for (int a = 0; a < nq; ++a) out.partition.part_of[a] = a / capacity;
    for (std::size_t j = 0; j < g.s.size(); ++j) out.partition.part_of[nq + j] = t + static_cast<int>(j);
    out.partition.parts = t + static_cast<int>(g.s.size());

    // Greedy over the reverse of the elimination order S..., Q...: Q parts
    // take colors 1..t, then each S singleton the lowest color its
    // neighbouring parts leave free.
    std::vector<int> part_color(out.partition.parts, 0);
    for (int p = 0; p < t; ++p) part_color[p] = p + 1;
    for (std::size_t j = 0; j < g.s.size(); ++j) {
        std::vector<char> used(t + 2, 0);
        for (int a : g.adj[j]) used[part_color[a / capacity]] = 1;
        int c = 1;
        while (used[c]) ++c;
        part_color[t + j] = c;
    }
    out.color.resize(g.size());
    for (int v = 0; v < g.size(); ++v) out.color[v] = part_color[out.partition.part_of[v]];
    out.colors = g.size() ? *std::max_element(out.color.begin(), out.color.end()) : 0;
    out.lambda = clique_intersection(g.maximal_cliques(), out.partition);
    return out;
}

// ---------------------------------------------------------------------------
// CNF

Cnf parse_dimacs(std::string_view text) {
    Cnf f;
    bool header = false;
    int declared_clauses = 0;
    std::vector<int> current;
    std::size_t last_line = 0;
    auto finish = [&](std::vector<int> clause) {
        std::sort(clause.begin(), clause.end(), [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b; });
        clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
        for (std::size_t i = 0; i + 1 < clause.size(); ++i)
            if (clause[i] == -clause[i + 1]) return;  // tautology
        f.clauses.push_back(std::move(clause));
    };
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto w = words(line);
        if (w.empty() || w[0] == "c" || w[0][0] == 'c' || w[0] == "%") continue;
        if (w[0] == "p") {
            if (header) throw ParseError(line_no, "second problem line");
            if (w.size() != 4 || w[1] != "cnf") throw ParseError(line_no, "expected 'p cnf VARS CLAUSES'");
            try {
                f.vars = std::stoi(w[2]);
                declared_clauses = std::stoi(w[3]);
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad problem line");
            }
            if (f.vars < 0 || declared_clauses < 0) throw ParseError(line_no, "negative counts in problem line");
            header = true;
            continue;
        }
        if (!header) throw ParseError(line_no, "clause before the 'p cnf' line");
        for (const auto& tok : w) {
            int lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError(line_no, "bad literal '" + tok + "'");
            }
            if (std::abs(lit) > f.vars) throw ParseError(line_no, "literal " + tok + " exceeds variable count");
            if (lit == 0) {
                finish(std::move(current));
                current.clear();
            } else {
                current.push_back(lit);
            }
        }
        last_line = line_no;
    }
    if (!header) throw ParseError(0, "missing 'p cnf' line");
    if (!current.empty()) throw ParseError(last_line, "last clause is not terminated by 0");
    return f;
}

std::string format_dimacs(const Cnf& f) {
    std::ostringstream out;
    out << "p cnf " << f.vars << ' ' << f.clauses.size() << '\n';
    for (const auto& c : f.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// SP

SPInstance parse_sp(std::string_view text) {
    SPInstance sp;
    std::map<std::string, int> index;
    bool have_elements = false;
    for_each_record(text, [&](std::size_t line, const std::vector<std::string>& f) {
        if (f[0] == "elements") {
            if (have_elements) throw ParseError(line, "second elements line");
            have_elements = true;
            for (std::size_t i = 1; i < f.size(); ++i) {
                if (!index.emplace(f[i], static_cast<int>(sp.elements.size())).second)
                    throw ParseError(line, "duplicate element '" + f[i] + "'");
                sp.elements.push_back(f[i]);
            }
        } else if (f[0] == "subset") {
            if (!have_elements) throw ParseError(line, "subset before the elements line");
            std::vector<int> sub;
            for (std::size_t i = 1; i < f.size(); ++i) {
                auto it = index.find(f[i]);
                if (it == index.end()) throw ParseError(line, "unknown element '" + f[i] + "'");
                sub.push_back(it->second);
            }
            std::sort(sub.begin(), sub.end());
            sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
            sp.subsets.push_back(std::move(sub));
        } else {
            throw ParseError(line, "expected 'elements ...' or 'subset ...'");
        }
    });
    if (!have_elements) throw ParseError(0, "missing elements line");
    if (sp.elements.size() % 2) throw ParseError(0, "element count must be even");
    return sp;
}

std::string format_sp(const SPInstance& sp) {
    std::ostringstream out;
    out << "elements";
    for (const auto& e : sp.elements) out << ' ' << e;
    out << '\n';
    for (const auto& sub : sp.subsets) {
        out << "subset";
        for (int e : sub) out << ' ' << sp.elements[e];
        out << '\n';
    }
    return out.str();
}

std::optional<SPInstance> sat_to_sp(const Cnf& f) {
    for (const auto& c : f.clauses)
        if (c.empty()) return std::nullopt;
    SPInstance sp;
    for (int i = 1; i <= f.vars; ++i)
        for (int kind = 0; kind < 4; ++kind) sp.elements.push_back(element_name(i, kind));
    for (int i = 1; i <= f.vars; ++i) {
        const int x = element_index(i, 0), xp = element_index(i, 1), t = element_index(i, 2), fl = element_index(i, 3);
        sp.subsets.push_back({x, xp, t});
        sp.subsets.push_back({x, xp, fl});
        sp.subsets.push_back({x, t, fl});
        sp.subsets.push_back({xp, t, fl});
    }
    for (const auto& c : f.clauses) {
        std::vector<int> sub;
        for (int lit : c) {
            const int var = std::abs(lit);
            sub.push_back(element_index(var, lit > 0 ? 0 : 1));
            sub.push_back(element_index(var, 2));
        }
        std::sort(sub.begin(), sub.end());
        sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
        sp.subsets.push_back(std::move(sub));
    }
    return sp;
}

CPInstance sp_to_cp(const SPInstance& sp) {
    if (sp.elements.size() % 2) throw std::invalid_argument("SP needs an even number of elements");
    CPInstance cp;
    cp.graph.q = sp.elements;
    const int ne = static_cast<int>(sp.elements.size());
    std::set<std::string> taken(sp.elements.begin(), sp.elements.end());
    for (std::size_t j = 0; j < sp.subsets.size(); ++j) {
        if (sp.subsets[j].empty()) throw std::invalid_argument("SP subset " + std::to_string(j + 1) + " is empty");
        std::string name = "w" + std::to_string(j + 1);
        while (taken.count(name)) name += '_';
        taken.insert(name);
        cp.graph.s.push_back(name);
        std::vector<int> nb;
        for (int e = 0; e < ne; ++e)
            if (!std::binary_search(sp.subsets[j].begin(), sp.subsets[j].end(), e)) nb.push_back(e);
        cp.graph.adj.push_back(std::move(nb));
    }
    cp.capacity = 2;
    cp.target = ne / 2;
    return cp;
}

// ---------------------------------------------------------------------------
// Validators and certificate mappers

ValidationReport check_assignment(const Cnf& f, const Assignment& a) {
    ValidationReport r;
    if (static_cast<int>(a.size()) != f.vars + 1) {
        r.add("coverage", "assignment has " + std::to_string(a.size() ? a.size() - 1 : 0) + " values for " +
                              std::to_string(f.vars) + " variables");
        return r;
    }
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const auto& c = f.clauses[j];
        const bool sat = std::any_of(c.begin(), c.end(), [&](int lit) { return a[std::abs(lit)] == (lit > 0); });
        if (!sat) r.add("clause", "clause " + std::to_string(j + 1) + " is false");
    }
    return r;
}

ValidationReport check_grouping(const SPInstance& sp, const Grouping& g) {
    ValidationReport r;
    const int ne = static_cast<int>(sp.elements.size());
    std::vector<int> partner(ne, -1);
    for (const auto& [a, b] : g) {
        if (a < 0 || b < 0 || a >= ne || b >= ne || a == b) {
            r.add("group", "bad pair (" + std::to_string(a) + "," + std::to_string(b) + ")");
            return r;
        }
        if (partner[a] >= 0 || partner[b] >= 0) {
            r.add("group", "element used twice in pair (" + sp.elements[a] + "," + sp.elements[b] + ")");
            return r;
        }
        partner[a] = b;
        partner[b] = a;
    }
    for (int e = 0; e < ne; ++e)
        if (partner[e] < 0) r.add("coverage", "element " + sp.elements[e] + " is not grouped");
    if (!r.ok()) return r;
    for (std::size_t j = 0; j < sp.subsets.size(); ++j) {
        const auto& sub = sp.subsets[j];
        const bool hit = std::any_of(sub.begin(), sub.end(), [&](int e) {
            return std::binary_search(sub.begin(), sub.end(), partner[e]);
        });
        if (!hit) r.add("subset", "subset " + std::to_string(j + 1) + " holds no whole group");
    }
    return r;
}

ValidationReport check_cp_partition(const CPInstance& cp, const GeneralPartition& p) {
    return validate_partition(cp.graph.to_graph(), cp.graph.maximal_cliques(), p, cp.capacity, cp.target);
}

Grouping assignment_to_grouping(const Cnf& f, const Assignment& a) {
    if (auto r = check_assignment(f, a); !r.ok()) throw InvalidCertificate("assignment: " + r.summary());
    Grouping g;
    for (int i = 1; i <= f.vars; ++i) {
        const int x = element_index(i, 0), xp = element_index(i, 1), t = element_index(i, 2), fl = element_index(i, 3);
        if (a[i]) {
            g.push_back({x, t});
            g.push_back({xp, fl});
        } else {
            g.push_back({x, fl});
            g.push_back({xp, t});
        }
    }
    return g;
}

Assignment grouping_to_assignment(const Cnf& f, const Grouping& g) {
    const auto sp = sat_to_sp(f);
    if (!sp) throw InvalidCertificate("formula has an empty clause; no grouping exists");
    if (auto r = check_grouping(*sp, g); !r.ok()) throw InvalidCertificate("grouping: " + r.summary());
    std::vector<int> partner(sp->elements.size(), -1);
    for (const auto& [a, b] : g) {
        partner[a] = b;
        partner[b] = a;
    }
    Assignment a(f.vars + 1, false);
    for (int i = 1; i <= f.vars; ++i) a[i] = partner[element_index(i, 2)] == element_index(i, 0);
    if (auto r = check_assignment(f, a); !r.ok())
        throw std::logic_error("grouping mapped to a non-satisfying assignment: " + r.summary());
    return a;
}

GeneralPartition grouping_to_partition(const CPInstance& cp, const SPInstance& sp, const Grouping& g) {
    if (auto r = check_grouping(sp, g); !r.ok()) throw InvalidCertificate("grouping: " + r.summary());
    GeneralPartition p;
    p.part_of.assign(cp.graph.size(), -1);
    int part = 0;
    for (const auto& [a, b] : g) {
        p.part_of[a] = part;
        p.part_of[b] = part;
        ++part;
    }
    const int nq = static_cast<int>(cp.graph.q.size());
    for (std::size_t j = 0; j < cp.graph.s.size(); ++j) p.part_of[nq + j] = part++;
    p.parts = part;
    if (auto r = check_cp_partition(cp, p); !r.ok())
        throw std::logic_error("grouping mapped to an invalid partition: " + r.summary());
    return p;
}

Grouping partition_to_grouping(const CPInstance& cp, const SPInstance& sp, const GeneralPartition& p) {
    if (auto r = check_cp_partition(cp, p); !r.ok()) throw InvalidCertificate("partition: " + r.summary());
    const int nq = static_cast<int>(cp.graph.q.size());
    std::vector<std::vector<int>> q_members(p.parts);
    for (int v = 0; v < nq; ++v) q_members[p.part_of[v]].push_back(v);
    Grouping g;
    for (const auto& m : q_members) {
        if (m.empty()) continue;
        if (m.size() != 2) throw InvalidCertificate("a part holds " + std::to_string(m.size()) + " clique vertices");
        g.push_back({m[0], m[1]});
    }
    if (auto r = check_grouping(sp, g); !r.ok())
        throw std::logic_error("partition mapped to an invalid grouping: " + r.summary());
    return g;
}

// ---------------------------------------------------------------------------
// Exhaustive deciders

std::optional<Assignment> decide_sat_bruteforce(const Cnf& f, int guard) {
    if (f.vars > guard) throw GuardError("decide_sat_bruteforce", f.vars, guard);
    for (const auto& c : f.clauses)
        if (c.empty()) return std::nullopt;
    Assignment a(f.vars + 1, false);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.vars); ++bits) {
        for (int i = 1; i <= f.vars; ++i) a[i] = (bits >> (i - 1)) & 1;
        if (check_assignment(f, a).ok()) return a;
    }
    return std::nullopt;
}

std::optional<Grouping> decide_sp_bruteforce(const SPInstance& sp, int guard) {
    const int ne = static_cast<int>(sp.elements.size());
    if (ne > guard) throw GuardError("decide_sp_bruteforce", ne, guard);
    if (ne % 2) return std::nullopt;
    std::vector<std::uint32_t> subs;
    for (const auto& s : sp.subsets) {
        std::uint32_t m = 0;
        for (int e : s) m |= 1u << e;
        subs.push_back(m);
    }
    std::vector<char> satisfied(subs.size(), 0);
    Grouping current;
    std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t unpaired) {
        // A subset can still be satisfied only by a future pair inside it.
        for (std::size_t j = 0; j < subs.size(); ++j)
            if (!satisfied[j] && std::popcount(subs[j] & unpaired) < 2) return false;
        if (!unpaired) return true;
        const int a = std::countr_zero(unpaired);
        const std::uint32_t rest = unpaired & ~(1u << a);
        for (std::uint32_t m = rest; m; m &= m - 1) {
            const int b = std::countr_zero(m);
            const std::uint32_t pair = (1u << a) | (1u << b);
            std::vector<std::size_t> newly;
            for (std::size_t j = 0; j < subs.size(); ++j)
                if (!satisfied[j] && (subs[j] & pair) == pair) {
                    satisfied[j] = 1;
                    newly.push_back(j);
                }
            current.push_back({a, b});
            if (dfs(rest & ~(1u << b))) return true;
            current.pop_back();
            for (auto j : newly) satisfied[j] = 0;
        }
        return false;
    };
    const std::uint32_t all = ne == 32 ? ~0u : ((1u << ne) - 1);
    if (dfs(all)) return current;
    return std::nullopt;
}

std::optional<GeneralPartition> decide_cp_bruteforce(const SplitGraph& g, int capacity, int guard) {
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    if (static_cast<int>(g.q.size()) > guard) throw GuardError("decide_cp_bruteforce", g.q.size(), guard);
    const int n = g.size();
    const Graph graph = g.to_graph();
    const auto cliques = g.maximal_cliques();
    const int target = ceil_div(g.omega(), capacity);

    std::vector<std::vector<int>> cliques_of(n);
    for (std::size_t c = 0; c < cliques.size(); ++c)
        for (int v : cliques[c]) cliques_of[v].push_back(static_cast<int>(c));
    // hits[c][p]: members of clique c in part p
    std::vector<std::vector<int>> hits(cliques.size());
    std::vector<int> distinct(cliques.size(), 0), unassigned(cliques.size());
    for (std::size_t c = 0; c < cliques.size(); ++c) unassigned[c] = static_cast<int>(cliques[c].size());
    std::vector<int> part_size;
    std::vector<int> part_of(n, -1);

    auto bound_ok = [&](int c) {
        int room = 0;
        for (std::size_t p = 0; p < part_size.size(); ++p)
            if (p < hits[c].size() && hits[c][p] > 0) room += capacity - part_size[p];
        const int spill = std::max(0, unassigned[c] - room);
        return distinct[c] + ceil_div(spill, capacity) <= target;
    };

    std::function<bool(int)> dfs = [&](int v) {
        if (v == n) return true;
        const int parts = static_cast<int>(part_size.size());
        for (int p = 0; p <= parts; ++p) {
            if (p < parts) {
                if (part_size[p] >= capacity) continue;
                bool linked = false;
                for (int u = 0; u < v && !linked; ++u) linked = part_of[u] == p && graph.has_edge(u, v);
                if (!linked) continue;
            } else {
                part_size.push_back(0);
            }
            ++part_size[p];
            part_of[v] = p;
            bool ok = true;
            for (int c : cliques_of[v]) {
                if (static_cast<int>(hits[c].size()) <= p) hits[c].resize(p + 1, 0);
                if (hits[c][p]++ == 0) ++distinct[c];
                --unassigned[c];
            }
            for (int c : cliques_of[v]) ok = ok && bound_ok(c);
            if (ok && dfs(v + 1)) return true;
            for (int c : cliques_of[v]) {
                if (--hits[c][p] == 0) --distinct[c];
                ++unassigned[c];
            }
            part_of[v] = -1;
            --part_size[p];
            if (p == parts) part_size.pop_back();
        }
        return false;
    };
    if (!dfs(0)) return std::nullopt;
    GeneralPartition out;
    out.part_of = part_of;
    out.parts = static_cast<int>(part_size.size());
    return out;
}

}  // namespace chromon
