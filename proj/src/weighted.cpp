#include "chromon/weighted.hpp"

#include <algorithm>
#include <stdexcept>

#include "chromon/error.hpp"

namespace chromon {

namespace {

void require_capacity(int capacity) {
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
}

template <class F>
void for_each_component(const CanonicalPIG& g, F&& fn) {
    if (g.components.size() <= 1) {
        if (g.n > 0) fn(g, Block{1, g.n});
        return;
    }
    for (const auto& comp : g.components) fn(g.slice(comp), comp);
}

bool bounds_meet(Weight omega, int capacity) { return (omega - 1) % capacity == 0 || omega <= capacity; }

}  // namespace

// ---------------------------------------------------------------------------
// ZArray

int ZArray::owner(Weight pos) const {
    if (pos < 1 || pos > total()) throw std::out_of_range("expanded position out of range");
    return static_cast<int>(std::lower_bound(z.begin() + 1, z.end(), pos) - z.begin());
}

ZArray z_array(const CanonicalPIG& g) {
    ZArray out;
    out.z.assign(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) out.z[v] = out.z[v - 1] + g.weight[v];
    return out;
}

ZArray z_array(const IntervalInstance& inst, const std::vector<int>& order) {
    ZArray out;
    out.z.assign(order.size() + 1, 0);
    for (std::size_t p = 0; p < order.size(); ++p) out.z[p + 1] = out.z[p] + inst.items[order[p]].weight;
    return out;
}

Weight expanded_omega(const CanonicalPIG& g, const ZArray& z) {
    Weight omega = 0;
    for (const auto& q : g.cliques) omega = std::max(omega, z.z[q.last] - z.z[q.first - 1]);
    return omega;
}

void require_weights_within(const CanonicalPIG& g, int capacity) {
    require_capacity(capacity);
    for (int v = 1; v <= g.n; ++v)
        if (g.weight[v] > capacity) throw WeightTooLargeError("position " + std::to_string(v), g.weight[v], capacity);
}

// ---------------------------------------------------------------------------
// FBList

FBList::FBList(Weight expanded_n) : expanded_n_(expanded_n) {
    nodes_.reserve(64);
    make_node({-1, 2, 0});
    make_node({expanded_n + 3, 2, 0});
    nodes_[kBegin].next = kEnd;
    nodes_[kEnd].prev = kBegin;
    live_ = 0;
}

int FBList::make_node(ForbiddenBlock fb) {
    Node nd;
    nd.fb = fb;
    nd.rnf = static_cast<int>(nodes_.size());
    nodes_.push_back(nd);
    return nd.rnf;
}

void FBList::link_after(int where, int node) {
    const int nx = nodes_[where].next;
    nodes_[node].prev = where;
    nodes_[node].next = nx;
    nodes_[where].next = node;
    nodes_[nx].prev = node;
    ++live_;
}

void FBList::unlink(int node) {
    auto& nd = nodes_[node];
    nodes_[nd.prev].next = nd.next;
    nodes_[nd.next].prev = nd.prev;
    nd.alive = false;
    --live_;
}

int FBList::resolve(int i) const {
    while (i >= 0 && !nodes_[i].alive) i = nodes_[i].forward;
    return i;
}

int FBList::inlay(Weight rt, Weight sz, Weight ld) {
    Weight lo = rt - sz + 1;
    const Weight hi = rt;
    if (sz < 1 || hi < 1) return -1;
    lo = std::max<Weight>(lo, 1);
    if (hi > expanded_n_) throw std::out_of_range("forbidden block beyond the expanded graph");

    // Rightmost node whose left end is <= hi, walking from the cursor.
    int x = resolve(cursor_);
    if (x < 0) x = kBegin;
    while (nodes_[x].next != kEnd && nodes_[nodes_[x].next].fb.left() <= hi) x = nodes_[x].next;
    while (nodes_[x].fb.left() > hi) x = nodes_[x].prev;

    const int b = make_node({hi, hi - lo + 1, ld});
    auto& X = nodes_[x];
    if (x != kBegin && X.fb.left() < lo && X.fb.right > hi) {
        // b sits strictly inside x: split x around it.
        const int tail = make_node({X.fb.right, X.fb.right - hi, X.fb.ldist});
        nodes_[x].fb = {lo - 1, lo - nodes_[x].fb.left(), nodes_[x].fb.ldist};
        link_after(x, b);
        link_after(b, tail);
        cursor_ = b;
        return b;
    }

    int y = x;
    while (y != kBegin && nodes_[y].fb.right >= lo) {
        const int prev = nodes_[y].prev;
        auto& fb = nodes_[y].fb;
        if (fb.left() >= lo && fb.right <= hi) {
            unlink(y);
            nodes_[y].forward = b;
        } else if (fb.right > hi) {
            fb.size = fb.right - hi;
        } else {
            fb.size = lo - fb.left();
            fb.right = lo - 1;
            break;
        }
        y = prev;
    }
    // y is now the last node ending before lo (or the begin sentinel).
    if (nodes_[y].fb.right >= lo) y = nodes_[y].prev;
    link_after(y, b);
    cursor_ = b;
    return b;
}

int FBList::find(Weight pos) {
    int x = resolve(cursor_);
    if (x < 0) x = kBegin;
    while (nodes_[x].next != kEnd && nodes_[nodes_[x].next].fb.left() <= pos) x = nodes_[x].next;
    while (x != kBegin && nodes_[x].fb.left() > pos) x = nodes_[x].prev;
    cursor_ = x;
    return x != kBegin && nodes_[x].fb.right >= pos ? x : -1;
}

std::vector<ForbiddenBlock> FBList::blocks() const {
    std::vector<ForbiddenBlock> out;
    out.reserve(live_);
    for (int i = nodes_[kBegin].next; i != kEnd; i = nodes_[i].next) out.push_back(nodes_[i].fb);
    return out;
}

std::vector<Weight> FBList::positions() const {
    std::vector<Weight> out;
    for (const auto& fb : blocks())
        for (Weight p = fb.left(); p <= fb.right; ++p) out.push_back(p);
    return out;
}

// ---------------------------------------------------------------------------
// Marking and block formation

FBList split_mark(const CanonicalPIG& g, int capacity) {
    require_weights_within(g, capacity);
    const ZArray z = z_array(g);
    FBList f(z.total());
    if (g.n == 0) return f;
    const Weight C = capacity;
    const Weight k = (expanded_omega(g, z) - 1) / C;
    const Weight kc2 = k * C + 2;

    // Phase 1: each expanded maximal clique of size >= kC + 2 contributes the
    // FB of its primarily forbidden vertices, ending just left of its end.
    for (auto q = g.cliques.rbegin(); q != g.cliques.rend(); ++q) {
        const Weight zu = z.z[q->first - 1];
        const Weight zv = z.z[q->last];
        const Weight s = zv - zu - kc2;
        if (s >= 0) f.inlay(zv - 1, s + 1, 0);
    }
    if (k == 0) return f;

    // Phase 2: right-to-left over FBs, propagating followers and leaders.
    // A run shorter than C cannot reach its own follower marks, so the whole
    // FB is handled at once. Longer runs (only possible when no partition
    // exists) are replayed vertex by vertex to keep the marks exact.
    int owner = g.n;
    auto lmn_copy = [&](Weight u) {
        while (owner < g.n && z.z[owner] < u) ++owner;
        while (owner > 1 && z.z[owner - 1] >= u) --owner;
        return z.z[g.lmn[owner] - 1] + 1;
    };
    auto run_left = [&](int j) {
        for (int pv = f.node(j).prev; pv != FBList::kBegin && f.node(pv).fb.right == f.node(j).fb.left() - 1;
             pv = f.node(j).prev)
            j = pv;
        return j;
    };
    for (int i = f.node(FBList::kEnd).prev; i != FBList::kBegin;) {
        const ForbiddenBlock cur = f.node(i).fb;
        const Weight v = cur.right;

        int j = i;
        const int nx = f.node(i).next;
        if (nx != FBList::kEnd && f.node(nx).fb.left() == v + 1) {
            const int r = f.resolve(f.node(nx).rnf);
            if (r >= 0 && f.node(r).fb.right <= v) j = r;
        }
        j = run_left(j);
        f.node(i).rnf = j;
        const Weight u = f.node(j).fb.left();
        const Weight run = v - u + 1;

        if (run < C) {
            if (cur.ldist <= (k - 1) * C) f.inlay(v - C, cur.size, cur.ldist + C);
            const Weight s = (u - lmn_copy(u) + 1) - kc2;
            if (run + s >= 0) f.inlay(v - C, run + s + 1, C);
            i = f.node(i).prev;
            continue;
        }

        for (Weight x = v; x >= cur.left(); --x) {
            const int at = f.find(x);
            const Weight ld = f.node(at).fb.ldist;
            const Weight ux = f.node(run_left(at)).fb.left();
            if (ld <= (k - 1) * C) f.inlay(x - C, 1, ld + C);
            if (lmn_copy(ux) <= x - k * C) f.inlay(x - C, 1, C);
        }
        const int at = f.find(cur.left());
        const int pv = f.node(at).prev;
        i = (cur.left() > 1 && f.node(pv).fb.right == cur.left() - 1) ? f.find(cur.left() - 1) : pv;
        if (f.node(i).fb.right >= cur.left()) i = f.node(i).prev;
    }
    return f;
}

int expanded_clique_intersection(const CanonicalPIG& g, const ZArray& z, const std::vector<ExpandedBlock>& blocks) {
    auto index_of = [&](Weight pos) {
        auto it = std::upper_bound(blocks.begin(), blocks.end(), pos,
                                   [](Weight p, const ExpandedBlock& b) { return p < b.first; });
        return static_cast<int>(it - blocks.begin()) - 1;
    };
    int lambda = 0;
    for (const auto& q : g.cliques)
        lambda = std::max(lambda, index_of(z.z[q.last]) - index_of(z.z[q.first - 1] + 1) + 1);
    return lambda;
}

std::optional<ExpandedPartition> split_part(const CanonicalPIG& g, int capacity) {
    return split_part(g, capacity, split_mark(g, capacity));
}

std::optional<ExpandedPartition> split_part(const CanonicalPIG& g, int capacity, const FBList& marks) {
    require_weights_within(g, capacity);
    const ZArray z = z_array(g);
    const Weight total = z.total();
    ExpandedPartition out;
    out.capacity = capacity;
    Weight u = 1;
    int i = marks.node(FBList::kBegin).next;
    auto contains = [&](int node, Weight p) {
        const auto& fb = marks.node(node).fb;
        return fb.left() <= p && p <= fb.right;
    };
    while (u <= total) {
        Weight v = std::min<Weight>(u + capacity - 1, total);
        while (marks.node(i).fb.right < v) i = marks.node(i).next;
        while (contains(i, v)) {
            v = marks.node(i).fb.left() - 1;
            i = marks.node(i).prev;
        }
        if (v < u) return std::nullopt;
        out.blocks.push_back({u, v});
        u = v + 1;
    }
    out.lambda = expanded_clique_intersection(g, z, out.blocks);
    return out;
}

ExpandedPartition split_simple_part(const CanonicalPIG& g, int capacity) {
    require_weights_within(g, capacity);
    const ZArray z = z_array(g);
    ExpandedPartition out;
    out.capacity = capacity;
    for (const auto& comp : g.components) {
        const Weight hi = z.z[comp.last];
        for (Weight u = z.z[comp.first - 1] + 1; u <= hi; u += capacity)
            out.blocks.push_back({u, std::min<Weight>(hi, u + capacity - 1)});
    }
    out.lambda = expanded_clique_intersection(g, z, out.blocks);
    return out;
}

SplitColoring split_coloring_of(const CanonicalPIG& g, const ZArray& z, const ExpandedPartition& p) {
    SplitColoring c;
    c.lambda = p.lambda;
    c.pieces.assign(g.n + 1, {});
    const auto lambda = static_cast<std::size_t>(std::max(p.lambda, 1));
    std::size_t b = 0;
    for (int v = 1; v <= g.n; ++v) {
        const Weight lo = z.z[v - 1] + 1;
        const Weight hi = z.z[v];
        while (b < p.blocks.size() && p.blocks[b].last < lo) ++b;
        for (std::size_t bb = b; bb < p.blocks.size() && p.blocks[bb].first <= hi; ++bb) {
            const Weight amount = std::min(hi, p.blocks[bb].last) - std::max(lo, p.blocks[bb].first) + 1;
            c.pieces[v].push_back({static_cast<int>(bb % lambda) + 1, amount});
        }
    }
    return c;
}

SplitSolution solve_split(const CanonicalPIG& g, int capacity) {
    require_weights_within(g, capacity);
    const ZArray z = z_array(g);
    SplitSolution out;
    out.partition.capacity = capacity;
    for_each_component(g, [&](const CanonicalPIG& sub, Block comp) {
        const Weight omega = expanded_omega(sub, z_array(sub));
        std::optional<ExpandedPartition> part;
        if (!bounds_meet(omega, capacity)) part = split_part(sub, capacity);
        if (!part) part = split_simple_part(sub, capacity);
        const Weight off = z.z[comp.first - 1];
        for (const auto& b : part->blocks) out.partition.blocks.push_back({b.first + off, b.last + off});
    });
    out.partition.lambda = g.n ? expanded_clique_intersection(g, z, out.partition.blocks) : 0;
    out.coloring = split_coloring_of(g, z, out.partition);
    return out;
}

// ---------------------------------------------------------------------------
// Non-splittable repair

NonSplitSolution two_approx_nonsplit(const CanonicalPIG& g, int capacity) {
    const SplitSolution split = solve_split(g, capacity);
    const ZArray z = z_array(g);
    const auto& blocks = split.partition.blocks;

    // Each splittable block yields a primary group and possibly one copy
    // holding the vertex split at its right boundary.
    struct Group {
        int first = 0;
        int last = -1;
        Weight weight = 0;
    };
    std::vector<Group> primary(blocks.size());
    std::vector<Group> copy(blocks.size());
    auto add = [&](Group& grp, int v) {
        if (grp.last < grp.first) grp.first = v;
        grp.last = v;
        grp.weight += g.weight[v];
    };

    std::size_t b = 0;
    for (int v = 1; v <= g.n; ++v) {
        const Weight lo = z.z[v - 1] + 1;
        const Weight hi = z.z[v];
        while (blocks[b].last < lo) ++b;
        if (blocks[b].last >= hi) {
            add(primary[b], v);
        } else if (primary[b].weight + g.weight[v] <= capacity) {
            add(primary[b], v);
        } else {
            add(copy[b], v);
        }
    }

    NonSplitSolution out;
    out.split_lambda = split.partition.lambda;
    out.partition.capacity = capacity;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (primary[i].last >= primary[i].first) out.partition.blocks.push_back({primary[i].first, primary[i].last});
        if (copy[i].last >= copy[i].first) out.partition.blocks.push_back({copy[i].first, copy[i].last});
    }
    out.partition.lambda = g.n ? clique_intersection(g, out.partition.blocks) : 0;
    if (out.partition.lambda > 2 * out.split_lambda)
        throw std::logic_error("non-splittable repair exceeded twice the splittable clique intersection");
    out.coloring = partition_to_coloring(out.partition, g);
    return out;
}

CanonicalPIG expand(const CanonicalPIG& g) {
    const ZArray z = z_array(g);
    const auto total = static_cast<int>(z.total());
    std::vector<int> rmn(total + 1, 0);
    for (int v = 1; v <= g.n; ++v)
        for (Weight p = z.z[v - 1] + 1; p <= z.z[v]; ++p) rmn[p] = static_cast<int>(z.z[g.rmn[v]]);
    if (total == 0) return CanonicalPIG{};
    return pig_from_rmn(rmn);
}

}  // namespace chromon
