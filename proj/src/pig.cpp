#include "chromon/pig.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "chromon/error.hpp"

namespace chromon {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line, const char* what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
    return value;
}

// Two stable counting passes (right, then left) when the coordinate range is
// comparable to n; a comparison sort otherwise.
std::vector<int> canonical_order(const IntervalInstance& inst) {
    const int n = static_cast<int>(inst.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    if (n == 0) return idx;

    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const auto& it : inst.items) {
        lo = std::min(lo, it.left);
        hi = std::max(hi, it.right);
    }
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    if (range > 4ull * static_cast<std::uint64_t>(n) + 1024) {
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            const auto& x = inst.items[a];
            const auto& y = inst.items[b];
            return x.left != y.left ? x.left < y.left : x.right < y.right;
        });
        return idx;
    }

    std::vector<int> count(range + 1);
    std::vector<int> tmp(n);
    auto pass = [&](auto key) {
        std::fill(count.begin(), count.end(), 0);
        for (int i : idx) ++count[key(i) + 1];
        for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
        for (int i : idx) tmp[count[key(i)]++] = i;
        idx.swap(tmp);
    };
    pass([&](int i) { return static_cast<std::size_t>(inst.items[i].right - lo); });
    pass([&](int i) { return static_cast<std::size_t>(inst.items[i].left - lo); });
    return idx;
}

void derive_neighbour_arrays(CanonicalPIG& g) {
    const int n = g.n;
    g.rmn.assign(n + 1, 0);
    g.lmn.assign(n + 1, 0);
    std::size_t c = 0;
    for (int i = 1; i <= n; ++i) {
        while (c + 1 < g.cliques.size() && g.cliques[c + 1].first <= i) ++c;
        g.rmn[i] = g.cliques[c].last;
    }
    c = 0;
    for (int i = 1; i <= n; ++i) {
        while (g.cliques[c].last < i) ++c;
        g.lmn[i] = g.cliques[c].first;
    }
    g.omega = 0;
    for (const auto& q : g.cliques) g.omega = std::max(g.omega, q.size());
    g.components.clear();
    int start = 1;
    for (int i = 1; i <= n; ++i) {
        if (g.rmn[i] == i) {
            g.components.push_back({start, i});
            start = i + 1;
        }
    }
}

}  // namespace

Weight IntervalInstance::max_weight() const noexcept {
    Weight w = 0;
    for (const auto& it : items) w = std::max(w, it.weight);
    return w;
}

bool IntervalInstance::unit_weights() const noexcept {
    return std::all_of(items.begin(), items.end(), [](const Interval& it) { return it.weight == 1; });
}

IntervalInstance parse_instance(std::string_view text) {
    IntervalInstance inst;
    std::unordered_set<std::string> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok.size() != 3 && tok.size() != 4)
            throw ParseError(line_no, "expected 'id left right [weight]', got " + std::to_string(tok.size()) + " fields");
        Interval it;
        it.id = std::string(tok[0]);
        it.left = parse_int(tok[1], line_no, "left endpoint");
        it.right = parse_int(tok[2], line_no, "right endpoint");
        if (tok.size() == 4) it.weight = parse_int(tok[3], line_no, "weight");
        if (it.left >= it.right)
            throw ParseError(line_no, "interval '" + it.id + "' needs left < right");
        if (it.weight < 1) throw ParseError(line_no, "weight of '" + it.id + "' must be >= 1");
        if (!seen.insert(it.id).second) throw ParseError(line_no, "duplicate id '" + it.id + "'");
        inst.items.push_back(std::move(it));
    }
    return inst;
}

std::string format_instance(const IntervalInstance& inst) {
    std::ostringstream out;
    for (const auto& it : inst.items) {
        out << it.id << ' ' << it.left << ' ' << it.right;
        if (it.weight != 1) out << ' ' << it.weight;
        out << '\n';
    }
    return out.str();
}

void check_instance(const IntervalInstance& inst) {
    std::unordered_set<std::string_view> seen;
    for (const auto& it : inst.items) {
        if (it.left >= it.right) throw ParseError(0, "interval '" + it.id + "' needs left < right");
        if (it.weight < 1) throw ParseError(0, "weight of '" + it.id + "' must be >= 1");
        if (!seen.insert(it.id).second) throw ParseError(0, "duplicate id '" + it.id + "'");
    }
}

bool CanonicalPIG::is_edge(int u, int v) const {
    if (u < 1 || v < 1 || u > n || v > n) throw std::out_of_range("vertex out of range");
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return v <= rmn[u];
}

CanonicalPIG CanonicalPIG::slice(Block range) const {
    if (range.first < 1 || range.last > n || range.first > range.last)
        throw std::out_of_range("slice out of range");
    if ((range.first > 1 && rmn[range.first - 1] >= range.first) || rmn[range.last] != range.last)
        throw std::invalid_argument("slice must be a union of connected components");
    const int off = range.first - 1;
    CanonicalPIG g;
    g.n = range.size();
    g.order.assign(order.begin() + off, order.begin() + range.last);
    g.weight.assign(1, 0);
    g.weight.insert(g.weight.end(), weight.begin() + range.first, weight.begin() + range.last + 1);
    for (const auto& q : cliques)
        if (q.first >= range.first && q.last <= range.last) g.cliques.push_back({q.first - off, q.last - off});
    derive_neighbour_arrays(g);
    return g;
}

CanonicalPIG build_canonical(const IntervalInstance& inst) {
    check_instance(inst);
    CanonicalPIG g;
    g.n = static_cast<int>(inst.size());
    g.order = canonical_order(inst);
    g.weight.assign(g.n + 1, 0);
    for (int p = 1; p <= g.n; ++p) g.weight[p] = inst.items[g.order[p - 1]].weight;
    if (g.n == 0) return g;

    const auto& at = [&](int p) -> const Interval& { return inst.items[g.order[p - 1]]; };
    for (int p = 2; p <= g.n; ++p) {
        const auto& a = at(p - 1);
        const auto& b = at(p);
        if (b.right < a.right) throw NotProperError(a.id, b.id);
        if (b.left == a.left && b.right != a.right) throw NotProperError(b.id, a.id);
        if (b.right == a.right && b.left != a.left) throw NotProperError(a.id, b.id);
    }

    // Endpoint scan. Lefts and rights are each already sorted in canonical
    // order; merge them with lefts first at equal coordinates (closed
    // intervals), so a left immediately followed by a right closes a clique.
    int li = 1, ri = 1;
    bool last_was_left = false;
    int last_left = 0;
    while (ri <= g.n) {
        if (li <= g.n && at(li).left <= at(ri).right) {
            last_was_left = true;
            last_left = li++;
        } else {
            if (last_was_left) g.cliques.push_back({ri, last_left});
            last_was_left = false;
            ++ri;
        }
    }
    derive_neighbour_arrays(g);
    return g;
}

CanonicalPIG pig_from_rmn(const std::vector<int>& rmn) {
    CanonicalPIG g;
    g.n = static_cast<int>(rmn.size()) - 1;
    if (g.n < 1 || rmn[g.n] != g.n) throw std::invalid_argument("rmn must end with rmn(n) = n");
    for (int i = 1; i <= g.n; ++i) {
        if (rmn[i] < i || rmn[i] > g.n || (i > 1 && rmn[i] < rmn[i - 1]))
            throw std::invalid_argument("rmn must be monotone with rmn(i) >= i");
    }
    g.order.resize(g.n);
    for (int i = 0; i < g.n; ++i) g.order[i] = i;
    g.weight.assign(g.n + 1, 1);
    g.weight[0] = 0;
    for (int u = 1; u <= g.n; ++u)
        if (u == 1 || rmn[u - 1] < rmn[u]) g.cliques.push_back({u, rmn[u]});
    derive_neighbour_arrays(g);
    return g;
}

IntervalInstance instance_from_pig(const CanonicalPIG& g) {
    IntervalInstance inst;
    const std::int64_t step = 2 * (static_cast<std::int64_t>(g.n) + 1);
    for (int i = 1; i <= g.n; ++i)
        inst.items.push_back({"v" + std::to_string(i), step * i, step * g.rmn[i] + i, g.weight[i]});
    return inst;
}

}  // namespace chromon
