#include "chromon/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chromon/error.hpp"

namespace chromon {

namespace {

std::string join(const std::vector<int>& xs, int offset = 0) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i] + offset;
    out << '}';
    return out.str();
}

void guard(const char* what, int n, int limit) {
    if (n > limit) throw GuardError(what, static_cast<std::size_t>(n), static_cast<std::size_t>(limit));
}

std::vector<std::vector<int>> pig_cliques(const CanonicalPIG& g) {
    std::vector<std::vector<int>> out;
    for (const auto& q : g.cliques) {
        std::vector<int> c;
        for (int v = q.first; v <= q.last; ++v) c.push_back(v - 1);
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : weight(n, 1), adj_(n) {}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self loop");
    if (has_edge(u, v)) return;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= size() || v >= size()) throw std::out_of_range("vertex out of range");
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

Graph Graph::from_pig(const CanonicalPIG& g) {
    Graph out(g.n);
    for (int u = 1; u <= g.n; ++u) {
        out.weight[u - 1] = g.weight[u];
        for (int v = u + 1; v <= g.rmn[u]; ++v) {
            out.adj_[u - 1].push_back(v - 1);
            out.adj_[v - 1].push_back(u - 1);
        }
    }
    for (auto& a : out.adj_) std::sort(a.begin(), a.end());
    return out;
}

std::vector<std::vector<int>> Graph::maximal_cliques() const {
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    std::function<void(std::vector<int>, std::vector<int>)> expand = [&](std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
            auto c = r;
            std::sort(c.begin(), c.end());
            out.push_back(std::move(c));
            return;
        }
        int pivot = -1;
        std::size_t best = 0;
        for (const auto* set : {&p, &x}) {
            for (int u : *set) {
                std::size_t cnt = 0;
                for (int w : p) cnt += has_edge(u, w);
                if (pivot < 0 || cnt > best) {
                    pivot = u;
                    best = cnt;
                }
            }
        }
        std::vector<int> candidates;
        for (int v : p)
            if (!has_edge(pivot, v)) candidates.push_back(v);
        for (int v : candidates) {
            std::vector<int> np, nx;
            for (int w : p)
                if (has_edge(v, w)) np.push_back(w);
            for (int w : x)
                if (has_edge(v, w)) nx.push_back(w);
            r.push_back(v);
            expand(np, nx);
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    };
    std::vector<int> all(size());
    std::iota(all.begin(), all.end(), 0);
    if (size()) expand(all, {});
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::connected(const std::vector<int>& vertices) const {
    if (vertices.size() <= 1) return true;
    std::vector<char> in(size(), 0), seen(size(), 0);
    for (int v : vertices) in[v] = 1;
    std::vector<int> stack{vertices.front()};
    seen[vertices.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u])
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == vertices.size();
}

// ---------------------------------------------------------------------------
// Reports and partitions

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i)
        out << (i ? "; " : "") << violations[i].kind << ": " << violations[i].witness;
    return out.str();
}

std::vector<std::vector<int>> GeneralPartition::members() const {
    std::vector<std::vector<int>> out(parts);
    for (std::size_t v = 0; v < part_of.size(); ++v) out.at(part_of[v]).push_back(static_cast<int>(v));
    return out;
}

int clique_intersection(const std::vector<std::vector<int>>& cliques, const GeneralPartition& p) {
    int lambda = 0;
    std::vector<int> stamp(p.parts, -1);
    for (std::size_t c = 0; c < cliques.size(); ++c) {
        int hit = 0;
        for (int v : cliques[c])
            if (stamp[p.part_of[v]] != static_cast<int>(c)) {
                stamp[p.part_of[v]] = static_cast<int>(c);
                ++hit;
            }
        lambda = std::max(lambda, hit);
    }
    return lambda;
}

std::vector<std::vector<int>> chromons_of(const Graph& g, const std::vector<int>& color) {
    const int n = g.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (int w : g.neighbours(members[i]))
                if (comp[w] < 0 && color[w] == color[s]) {
                    comp[w] = comp[s];
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

std::vector<std::vector<int>> chromons_of(const CanonicalPIG& g, const Coloring& c) {
    const Graph graph = Graph::from_pig(g);
    std::vector<int> color(c.color.begin() + 1, c.color.end());
    auto out = chromons_of(graph, color);
    for (auto& ch : out)
        for (int& v : ch) ++v;
    return out;
}

ValidationReport validate_partition(const Graph& g, const std::vector<std::vector<int>>& cliques,
                                    const GeneralPartition& p, Weight capacity, int lambda_claim) {
    ValidationReport r;
    if (static_cast<int>(p.part_of.size()) != g.size()) {
        r.add("coverage", "partition covers " + std::to_string(p.part_of.size()) + " of " + std::to_string(g.size()) +
                              " vertices");
        return r;
    }
    for (int v = 0; v < g.size(); ++v)
        if (p.part_of[v] < 0 || p.part_of[v] >= p.parts) {
            r.add("coverage", "vertex " + std::to_string(v) + " has no valid part");
            return r;
        }
    const auto parts = p.members();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].empty()) continue;
        Weight w = 0;
        for (int v : parts[i]) w += g.weight[v];
        if (w > capacity)
            r.add(std::all_of(parts[i].begin(), parts[i].end(), [&](int v) { return g.weight[v] == 1; }) ? "size" : "weight",
                  "part " + join(parts[i]) + " weighs " + std::to_string(w) + " > " + std::to_string(capacity));
        if (!g.connected(parts[i])) r.add("connectedness", "part " + join(parts[i]) + " is not connected");
    }
    std::vector<int> stamp(p.parts, -1);
    for (std::size_t c = 0; c < cliques.size(); ++c) {
        int hit = 0;
        for (int v : cliques[c])
            if (stamp[p.part_of[v]] != static_cast<int>(c)) {
                stamp[p.part_of[v]] = static_cast<int>(c);
                ++hit;
            }
        if (hit > lambda_claim)
            r.add("clique-intersection", "clique " + join(cliques[c]) + " meets " + std::to_string(hit) + " parts > " +
                                             std::to_string(lambda_claim));
    }
    return r;
}

ValidationReport validate_coloring(const Graph& g, const std::vector<int>& color, Weight capacity, int lambda_claim) {
    ValidationReport r;
    if (static_cast<int>(color.size()) != g.size()) {
        r.add("coverage", "coloring has " + std::to_string(color.size()) + " entries for " + std::to_string(g.size()) +
                              " vertices");
        return r;
    }
    for (int v = 0; v < g.size(); ++v)
        if (color[v] < 1 || color[v] > lambda_claim)
            r.add("color", "vertex " + std::to_string(v) + " has color " + std::to_string(color[v]) + " outside 1.." +
                               std::to_string(lambda_claim));
    for (const auto& ch : chromons_of(g, color)) {
        Weight w = 0;
        for (int v : ch) w += g.weight[v];
        if (w > capacity)
            r.add("size", "chromon " + join(ch) + " weighs " + std::to_string(w) + " > " + std::to_string(capacity));
    }
    return r;
}

ValidationReport validate_blocks(const CanonicalPIG& g, const BlockPartition& p, int lambda_claim) {
    ValidationReport r;
    int expect = 1;
    std::size_t comp = 0;
    for (const auto& b : p.blocks) {
        if (b.first != expect || b.last < b.first || b.last > g.n) {
            r.add("contiguity", "block [" + std::to_string(b.first) + "," + std::to_string(b.last) +
                                    "] does not continue at " + std::to_string(expect));
            return r;
        }
        while (comp < g.components.size() && g.components[comp].last < b.first) ++comp;
        if (comp == g.components.size() || b.last > g.components[comp].last)
            r.add("connectedness", "block [" + std::to_string(b.first) + "," + std::to_string(b.last) +
                                       "] crosses a component boundary");
        Weight w = 0;
        for (int v = b.first; v <= b.last; ++v) w += g.weight[v];
        if (w > p.capacity)
            r.add(w == b.size() ? "size" : "weight", "block [" + std::to_string(b.first) + "," + std::to_string(b.last) +
                                                         "] weighs " + std::to_string(w) + " > " +
                                                         std::to_string(p.capacity));
        expect = b.last + 1;
    }
    if (expect != g.n + 1) {
        r.add("coverage", "blocks stop at " + std::to_string(expect - 1) + " of " + std::to_string(g.n));
        return r;
    }
    std::vector<int> block_of(g.n + 1, 0);
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        for (int v = p.blocks[i].first; v <= p.blocks[i].last; ++v) block_of[v] = static_cast<int>(i);
    for (const auto& q : g.cliques) {
        const int hit = block_of[q.last] - block_of[q.first] + 1;
        if (hit > lambda_claim)
            r.add("clique-intersection", "clique [" + std::to_string(q.first) + "," + std::to_string(q.last) +
                                             "] meets " + std::to_string(hit) + " blocks > " +
                                             std::to_string(lambda_claim));
    }
    return r;
}

ValidationReport validate_coloring(const CanonicalPIG& g, const Coloring& c, Weight capacity, int lambda_claim) {
    if (static_cast<int>(c.color.size()) != g.n + 1) {
        ValidationReport r;
        r.add("coverage", "coloring does not match the vertex count");
        return r;
    }
    auto r = validate_coloring(Graph::from_pig(g), std::vector<int>(c.color.begin() + 1, c.color.end()), capacity,
                               lambda_claim);
    for (auto& v : r.violations) v.witness += " (0-based vertices)";
    return r;
}

ValidationReport validate_split_coloring(const CanonicalPIG& g, const SplitColoring& c, Weight capacity,
                                         int lambda_claim) {
    ValidationReport r;
    if (static_cast<int>(c.pieces.size()) != g.n + 1) {
        r.add("coverage", "split coloring does not match the vertex count");
        return r;
    }
    // amount[v][color]
    std::vector<std::map<int, Weight>> amount(g.n + 1);
    for (int v = 1; v <= g.n; ++v) {
        Weight total = 0;
        for (const auto& piece : c.pieces[v]) {
            if (piece.amount < 1) r.add("weight", "vertex " + std::to_string(v) + " has a non-positive piece");
            if (piece.color < 1 || piece.color > lambda_claim)
                r.add("color", "vertex " + std::to_string(v) + " uses color " + std::to_string(piece.color));
            total += piece.amount;
            amount[v][piece.color] += piece.amount;
        }
        if (total != g.weight[v])
            r.add("coverage", "pieces of vertex " + std::to_string(v) + " sum to " + std::to_string(total) + ", not " +
                                  std::to_string(g.weight[v]));
    }
    // Same-colored pieces of adjacent vertices are adjacent copies, so a
    // chromon is a connected run of vertices carrying that color.
    std::map<int, std::vector<int>> holders;
    for (int v = 1; v <= g.n; ++v)
        for (const auto& [col, w] : amount[v]) holders[col].push_back(v);
    for (const auto& [col, vs] : holders) {
        std::size_t i = 0;
        while (i < vs.size()) {
            std::size_t j = i;
            Weight w = amount[vs[i]].at(col);
            while (j + 1 < vs.size() && g.is_edge(vs[j], vs[j + 1])) {
                ++j;
                w += amount[vs[j]].at(col);
            }
            if (w > capacity)
                r.add("weight", "color " + std::to_string(col) + " chromon over positions " + std::to_string(vs[i]) +
                                    ".." + std::to_string(vs[j]) + " weighs " + std::to_string(w) + " > " +
                                    std::to_string(capacity));
            i = j + 1;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Oracles

BlockOracleResult brute_min_lambda_block(const CanonicalPIG& g, Weight capacity, int guard_n) {
    guard("brute_min_lambda_block", g.n, guard_n);
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    BlockOracleResult best;
    best.lambda = g.n + 1;
    best.witness.capacity = static_cast<int>(capacity);
    if (g.n == 0) {
        best.lambda = 0;
        return best;
    }
    for (int v = 1; v <= g.n; ++v)
        if (g.weight[v] > capacity) throw WeightTooLargeError("position " + std::to_string(v), g.weight[v], capacity);

    std::vector<int> comp_end(g.n + 1);
    for (const auto& c : g.components)
        for (int v = c.first; v <= c.last; ++v) comp_end[v] = c.last;
    std::vector<int> hits(g.cliques.size(), 0);
    std::vector<Block> current;

    std::function<void(int, int)> dfs = [&](int u, int worst) {
        if (u > g.n) {
            if (worst < best.lambda) {
                best.lambda = worst;
                best.witness.blocks = current;
            }
            return;
        }
        Weight w = 0;
        for (int v = u; v <= comp_end[u]; ++v) {
            w += g.weight[v];
            if (w > capacity) break;
            // Cliques meeting [u, v] are a contiguous range of the sorted list.
            int now = worst;
            std::vector<std::size_t> touched;
            for (std::size_t c = 0; c < g.cliques.size(); ++c) {
                if (g.cliques[c].last < u) continue;
                if (g.cliques[c].first > v) break;
                ++hits[c];
                touched.push_back(c);
                now = std::max(now, hits[c]);
            }
            if (now < best.lambda) {
                current.push_back({u, v});
                dfs(v + 1, now);
                current.pop_back();
            }
            for (auto c : touched) --hits[c];
        }
    };
    dfs(1, 0);
    best.witness.lambda = best.lambda;
    return best;
}

GeneralOracleResult brute_min_lambda_general(const Graph& g, const std::vector<std::vector<int>>& cliques,
                                             Weight capacity, int guard_n) {
    guard("brute_min_lambda_general", g.size(), guard_n);
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    const int n = g.size();
    GeneralOracleResult best;
    best.lambda = n + 1;
    if (n == 0) {
        best.lambda = 0;
        return best;
    }
    for (int v = 0; v < n; ++v)
        if (g.weight[v] > capacity) throw WeightTooLargeError("vertex " + std::to_string(v), g.weight[v], capacity);

    std::vector<std::vector<int>> cliques_of(n);
    for (std::size_t c = 0; c < cliques.size(); ++c)
        for (int v : cliques[c]) cliques_of[v].push_back(static_cast<int>(c));
    std::vector<std::uint32_t> clique_parts(cliques.size(), 0);
    std::vector<Weight> part_weight;
    std::vector<std::uint32_t> part_members;
    std::vector<std::uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbours(v)) nbr[v] |= 1u << w;
    std::vector<int> part_of(n, -1);

    auto part_connected = [&](std::uint32_t members) {
        std::uint32_t seen = members & (~members + 1);
        std::uint32_t frontier = seen;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) next |= nbr[std::countr_zero(f)];
            next &= members & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen == members;
    };

    std::function<void(int, int)> dfs = [&](int v, int worst) {
        if (v == n) {
            for (auto m : part_members)
                if (!part_connected(m)) return;
            best.lambda = worst;
            best.witness.part_of = part_of;
            best.witness.parts = static_cast<int>(part_members.size());
            return;
        }
        const int parts = static_cast<int>(part_members.size());
        for (int p = 0; p <= parts; ++p) {
            if (p == parts) {
                part_weight.push_back(0);
                part_members.push_back(0);
            }
            if (part_weight[p] + g.weight[v] <= capacity) {
                int now = worst;
                std::vector<std::pair<int, std::uint32_t>> saved;
                for (int c : cliques_of[v]) {
                    saved.push_back({c, clique_parts[c]});
                    clique_parts[c] |= 1u << p;
                    now = std::max(now, std::popcount(clique_parts[c]));
                }
                if (now < best.lambda) {
                    part_weight[p] += g.weight[v];
                    part_members[p] |= 1u << v;
                    part_of[v] = p;
                    dfs(v + 1, now);
                    part_of[v] = -1;
                    part_members[p] &= ~(1u << v);
                    part_weight[p] -= g.weight[v];
                }
                for (auto it = saved.rbegin(); it != saved.rend(); ++it) clique_parts[it->first] = it->second;
            }
            if (p == parts) {
                part_weight.pop_back();
                part_members.pop_back();
            }
        }
    };
    dfs(0, 0);
    return best;
}

GeneralOracleResult brute_min_lambda_general(const CanonicalPIG& g, Weight capacity, int guard_n) {
    guard("brute_min_lambda_general", g.n, guard_n);
    return brute_min_lambda_general(Graph::from_pig(g), pig_cliques(g), capacity, guard_n);
}

int brute_min_colors(const Graph& g, Weight capacity, int guard_n) {
    guard("brute_min_colors", g.size(), guard_n);
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    const int n = g.size();
    if (n == 0) return 0;
    for (int v = 0; v < n; ++v)
        if (g.weight[v] > capacity) throw WeightTooLargeError("vertex " + std::to_string(v), g.weight[v], capacity);
    std::vector<int> color(n, 0);

    // Weight of the chromon containing v among vertices colored so far.
    auto chromon_weight = [&](int v) {
        std::vector<int> stack{v};
        std::vector<char> seen(n, 0);
        seen[v] = 1;
        Weight w = 0;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            w += g.weight[u];
            for (int x : g.neighbours(u))
                if (!seen[x] && color[x] == color[v]) {
                    seen[x] = 1;
                    stack.push_back(x);
                }
        }
        return w;
    };

    for (int lambda = 1; lambda <= n; ++lambda) {
        std::function<bool(int, int)> dfs = [&](int v, int used) {
            if (v == n) return true;
            for (int c = 1; c <= std::min(lambda, used + 1); ++c) {
                color[v] = c;
                if (chromon_weight(v) <= capacity && dfs(v + 1, std::max(used, c))) return true;
            }
            color[v] = 0;
            return false;
        };
        std::fill(color.begin(), color.end(), 0);
        if (dfs(0, 0)) return lambda;
    }
    return n;
}

BlockifyResult blockify_partition(const CanonicalPIG& g, const GeneralPartition& p, int capacity) {
    if (static_cast<int>(p.part_of.size()) != g.n) throw std::invalid_argument("partition size does not match graph");
    // part[v] for positions 1..n
    std::vector<int> part(g.n + 2, -1);
    for (int v = 1; v <= g.n; ++v) part[v] = p.part_of[v - 1];
    BlockifyResult out;

    auto last_of = [&](int q) {
        int last = 0;
        for (int v = 1; v <= g.n; ++v)
            if (part[v] == q) last = v;
        return last;
    };

    for (;;) {
        int i = 0;
        for (int u = 1; u + 1 <= g.n && !i; ++u)
            if (part[u] != part[u + 1] && last_of(part[u]) > u + 1) i = u;
        if (!i) break;
        if (++out.rounds > 4 * g.n + 4) throw std::logic_error("blockify_partition did not converge");
        const int p1 = part[i];
        const int p2 = part[i + 1];
        std::vector<int> merged;
        for (int v = 1; v <= g.n; ++v)
            if (part[v] == p1 || part[v] == p2) merged.push_back(v);
        std::vector<int> right;
        for (int v : merged)
            if (v > i) right.push_back(v);
        const std::size_t split = static_cast<int>(right.size()) <= capacity
                                      ? merged.size() - right.size()
                                      : merged.size() - static_cast<std::size_t>(capacity);
        for (std::size_t idx = 0; idx < merged.size(); ++idx) part[merged[idx]] = idx < split ? p1 : p2;
    }

    // Parts are now consecutive; list them as blocks in order.
    out.partition.capacity = capacity;
    for (int v = 1; v <= g.n; ++v) {
        if (v == 1 || part[v] != part[v - 1]) out.partition.blocks.push_back({v, v});
        else out.partition.blocks.back().last = v;
    }
    out.partition.lambda = g.n ? clique_intersection(g, out.partition.blocks) : 0;
    return out;
}

std::vector<int> forbidden_fixpoint(const CanonicalPIG& g, int capacity) {
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    const int n = g.n;
    const int k = g.k(capacity);
    const int kc = k * capacity;
    std::vector<char> f(n + 1, 0);
    for (int i = 1; i + 1 <= n; ++i)
        if (i - kc >= 1 && g.is_clique(i - kc, i + 1)) f[i] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 1; v <= n; ++v) {
            for (int s = 1; s <= capacity - 1; ++s) {
                if (v - s + 1 < 1 || v - kc < 1) break;
                bool run = true;
                for (int x = v - s + 1; x <= v && run; ++x) run = f[x];
                if (!run || !g.is_clique(v - kc, v - s + 1)) continue;
                for (int q = 1; q <= k; ++q)
                    if (v - q * capacity >= 1 && !f[v - q * capacity]) {
                        f[v - q * capacity] = 1;
                        changed = true;
                    }
            }
        }
    }
    std::vector<int> out;
    for (int v = 1; v <= n; ++v)
        if (f[v]) out.push_back(v);
    return out;
}

}  // namespace chromon
