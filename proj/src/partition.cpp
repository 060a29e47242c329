#include "chromon/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace chromon {

namespace {

void require_capacity(int capacity) {
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
}

BlockPartition finish(const CanonicalPIG& g, std::vector<Block> blocks, int capacity) {
    BlockPartition p;
    p.lambda = clique_intersection(g, blocks);
    p.blocks = std::move(blocks);
    p.capacity = capacity;
    return p;
}

}  // namespace

std::vector<int> ForbiddenMarks::positions() const {
    std::vector<int> out;
    for (std::size_t i = 1; i < forbidden.size(); ++i)
        if (forbidden[i]) out.push_back(static_cast<int>(i));
    return out;
}

int lower_bound(int omega, int capacity) {
    require_capacity(capacity);
    return (omega + capacity - 1) / capacity;
}

int upper_bound(int omega, int capacity) {
    require_capacity(capacity);
    return (omega + 2 * capacity - 2) / capacity;
}

int clique_intersection(const CanonicalPIG& g, const std::vector<Block>& blocks) {
    std::vector<int> block_of(g.n + 1, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int v = blocks[b].first; v <= blocks[b].last; ++v) block_of[v] = static_cast<int>(b);
    int lambda = 0;
    for (const auto& q : g.cliques) lambda = std::max(lambda, block_of[q.last] - block_of[q.first] + 1);
    return lambda;
}

BlockPartition simple_part(const CanonicalPIG& g, int capacity) {
    require_capacity(capacity);
    std::vector<Block> blocks;
    for (const auto& comp : g.components)
        for (int u = comp.first; u <= comp.last; u += capacity)
            blocks.push_back({u, std::min(comp.last, u + capacity - 1)});
    return finish(g, std::move(blocks), capacity);
}

ForbiddenMarks mark_forbidden(const CanonicalPIG& g, int capacity) {
    require_capacity(capacity);
    const int n = g.n;
    const int kc = g.k(capacity) * capacity;
    ForbiddenMarks m;
    m.k = g.k(capacity);
    m.forbidden.assign(n + 1, 0);
    m.ldist.assign(n + 1, 0);
    m.rnf.assign(n + 1, 0);
    if (n == 0) return m;
    auto& f = m.forbidden;

    // Phase 1: clique [i - kC - 1, i] makes i - 1 primarily forbidden.
    for (int i = n; i >= 1; --i)
        if (g.lmn[i] <= i - kc - 1 && i - 1 >= 1) f[i - 1] = 1;

    // Phase 2: followers and leaders, right to left. Leaders exist only for k >= 1.
    m.rnf[n] = n;
    for (int i = n - 1; i >= 1; --i) {
        int r = std::min(i, m.rnf[i + 1]);
        while (f[r]) --r;
        m.rnf[i] = r;
        if (m.k == 0) continue;
        if (f[i] && m.ldist[i] <= kc - capacity && i - capacity >= 1) {
            f[i - capacity] = 1;
            m.ldist[i - capacity] = m.ldist[i] + capacity;
        }
        if (r + 1 <= n && g.lmn[r + 1] <= i - kc && i - capacity >= 1) {
            f[i - capacity] = 1;
            m.ldist[i - capacity] = capacity;
        }
    }
    return m;
}

std::optional<BlockPartition> comb_part(const CanonicalPIG& g, int capacity) {
    return comb_part(g, capacity, mark_forbidden(g, capacity));
}

std::optional<BlockPartition> comb_part(const CanonicalPIG& g, int capacity, const ForbiddenMarks& marks) {
    require_capacity(capacity);
    std::vector<Block> blocks;
    int u = 1;
    while (u <= g.n) {
        int v = std::min(u + capacity - 1, g.n);
        while (v >= u && marks.forbidden[v]) --v;
        if (v < u) return std::nullopt;
        blocks.push_back({u, v});
        u = v + 1;
    }
    return finish(g, std::move(blocks), capacity);
}

BlockPartition solve_unweighted(const CanonicalPIG& g, int capacity) {
    require_capacity(capacity);
    BlockPartition out;
    out.capacity = capacity;
    for (const auto& comp : g.components) {
        CanonicalPIG sliced;
        const CanonicalPIG* sub = &g;
        if (g.components.size() > 1) {
            sliced = g.slice(comp);
            sub = &sliced;
        }
        const int omega = sub->omega;
        std::optional<BlockPartition> part;
        if ((omega - 1) % capacity != 0 && omega > capacity) part = comb_part(*sub, capacity);
        if (!part) part = simple_part(*sub, capacity);
        for (const auto& b : part->blocks)
            out.blocks.push_back({b.first + comp.first - 1, b.last + comp.first - 1});
        out.lambda = std::max(out.lambda, part->lambda);
    }
    return out;
}

Coloring partition_to_coloring(const BlockPartition& p, const CanonicalPIG& g) {
    Coloring c;
    c.lambda = p.lambda;
    c.color.assign(g.n + 1, 0);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        const int colour = static_cast<int>(b % static_cast<std::size_t>(std::max(p.lambda, 1))) + 1;
        for (int v = p.blocks[b].first; v <= p.blocks[b].last; ++v) c.color[v] = colour;
    }
    return c;
}

}  // namespace chromon
