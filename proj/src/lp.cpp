#include "chromon/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "chromon/error.hpp"

namespace chromon {

namespace {

using boost::multiprecision::cpp_int;

void require_capacity(int capacity) {
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

cpp_int parse_digits(std::string_view digits, std::size_t line, std::string_view token) {
    cpp_int v = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') throw ParseError(line, "bad number '" + std::string(token) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

Rational sum_range(const std::vector<Rational>& x, int from, int to) {
    Rational s = 0;
    for (int j = from; j <= to; ++j) s += x[j];
    return s;
}

}  // namespace

Rational ceil_of(const Rational& r) {
    const cpp_int num = numerator(r);
    const cpp_int den = denominator(r);
    cpp_int q = num / den;
    if (num > 0 && q * den != num) ++q;
    return Rational(q);
}

Rational floor_of(const Rational& r) {
    const cpp_int num = numerator(r);
    const cpp_int den = denominator(r);
    cpp_int q = num / den;
    if (num < 0 && q * den != num) --q;
    return Rational(q);
}

IlpModel emit_ilp(const CanonicalPIG& g, int capacity) {
    require_capacity(capacity);
    IlpModel m;
    std::ostringstream out;
    auto var = [](int j) { return "x" + std::to_string(j); };

    out << "\\ block partition, n = " << g.n << ", C = " << capacity << "\n";
    out << "Minimize\n obj: lambda\nSubject To\n";
    for (const auto& comp : g.components) {
        out << " end_" << comp.last << ": " << var(comp.last) << " = 1\n";
        ++m.end_rows;
    }
    for (int i = 1; i + capacity - 1 <= g.n; ++i) {
        out << " size_" << i << ":";
        for (int j = i; j <= i + capacity - 1; ++j) out << (j == i ? " " : " + ") << var(j);
        out << " >= 1\n";
        ++m.size_rows;
    }
    for (const auto& q : g.cliques) {
        out << " clique_" << q.first << "_" << q.last << ":";
        if (q.first == q.last) {
            out << " lambda >= 1\n";
        } else {
            for (int j = q.first; j < q.last; ++j) out << (j == q.first ? " " : " + ") << var(j);
            out << " - lambda <= -1\n";
        }
        ++m.clique_rows;
    }
    out << "Bounds\n lambda >= 0\nBinary\n";
    for (int j = 1; j <= g.n; ++j) out << " " << var(j) << "\n";
    m.binaries = g.n;
    out << "General\n lambda\nEnd\n";
    m.text = out.str();
    return m;
}

Rational parse_rational(std::string_view token, std::size_t line) {
    const std::string tok = trim(token);
    if (tok.empty()) throw ParseError(line, "empty number");
    if (auto slash = tok.find('/'); slash != std::string::npos) {
        const Rational num = parse_rational(std::string_view(tok).substr(0, slash), line);
        const Rational den = parse_rational(std::string_view(tok).substr(slash + 1), line);
        if (den == 0) throw ParseError(line, "zero denominator in '" + tok + "'");
        return num / den;
    }
    std::string_view s = tok;
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view ex = s.substr(e + 1);
        bool eneg = false;
        if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
            eneg = ex.front() == '-';
            ex.remove_prefix(1);
        }
        if (ex.empty() || ex.size() > 6) throw ParseError(line, "bad exponent in '" + tok + "'");
        exponent = static_cast<long>(parse_digits(ex, line, tok));
        if (eneg) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string_view whole = s, frac;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        whole = s.substr(0, dot);
        frac = s.substr(dot + 1);
    }
    if (whole.empty() && frac.empty()) throw ParseError(line, "bad number '" + tok + "'");
    cpp_int digits = parse_digits(whole, line, tok);
    for (char c : frac) {
        if (c < '0' || c > '9') throw ParseError(line, "bad number '" + tok + "'");
        digits = digits * 10 + (c - '0');
    }
    exponent -= static_cast<long>(frac.size());
    cpp_int scale = 1;
    for (long i = 0; i < std::abs(exponent); ++i) scale *= 10;
    Rational r = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
    return negative ? Rational(-r) : r;
}

FractionalSolution parse_solution(std::string_view text, int n) {
    FractionalSolution sol;
    sol.x.assign(n + 1, 0);
    std::vector<char> seen(n + 1, 0);
    bool have_lambda = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream fields(line);
        std::string key, value, extra;
        if (!(fields >> key)) continue;
        if (!(fields >> value) || (fields >> extra)) throw ParseError(line_no, "expected 'j value' or 'lambda value'");
        if (key == "lambda") {
            if (have_lambda) throw ParseError(line_no, "lambda given twice");
            sol.lambda = parse_rational(value, line_no);
            have_lambda = true;
            continue;
        }
        std::string_view idx = key;
        if (!idx.empty() && idx.front() == 'x') idx.remove_prefix(1);
        int j = 0;
        try {
            std::size_t used = 0;
            j = std::stoi(std::string(idx), &used);
            if (used != idx.size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw ParseError(line_no, "bad variable '" + key + "'");
        }
        if (j < 1 || j > n) throw ParseError(line_no, "variable index " + std::to_string(j) + " outside 1.." + std::to_string(n));
        if (seen[j]) throw ParseError(line_no, "x" + std::to_string(j) + " given twice");
        seen[j] = 1;
        sol.x[j] = parse_rational(value, line_no);
    }
    if (!have_lambda) throw ParseError(0, "missing lambda line");
    for (int j = 1; j <= n; ++j)
        if (!seen[j]) throw ParseError(0, "missing value for x" + std::to_string(j));
    return sol;
}

std::string format_solution(const FractionalSolution& sol) {
    std::ostringstream out;
    for (std::size_t j = 1; j < sol.x.size(); ++j) out << j << ' ' << sol.x[j] << '\n';
    out << "lambda " << sol.lambda << '\n';
    return out.str();
}

LpReport check_feasible(const FractionalSolution& sol, const CanonicalPIG& g, int capacity) {
    require_capacity(capacity);
    if (static_cast<int>(sol.x.size()) != g.n + 1)
        throw std::invalid_argument("solution has " + std::to_string(sol.x.size() - 1) + " variables, graph has " +
                                    std::to_string(g.n));
    LpReport r;
    const auto& x = sol.x;
    for (int j = 1; j <= g.n; ++j) {
        if (x[j] < 0) r.violations.push_back({"bound:x" + std::to_string(j), x[j]});
        if (x[j] > 1) r.violations.push_back({"bound:x" + std::to_string(j), Rational(1 - x[j])});
    }
    for (const auto& comp : g.components)
        if (x[comp.last] != 1)
            r.violations.push_back({"end:" + std::to_string(comp.last), Rational(-abs(Rational(x[comp.last] - 1)))});
    for (int i = 1; i + capacity - 1 <= g.n; ++i) {
        const Rational slack = sum_range(x, i, i + capacity - 1) - 1;
        if (slack < 0) r.violations.push_back({"size:" + std::to_string(i), slack});
    }
    for (const auto& q : g.cliques) {
        const Rational slack = sol.lambda - 1 - sum_range(x, q.first, q.last - 1);
        if (slack < 0)
            r.violations.push_back({"clique:" + std::to_string(q.first) + "-" + std::to_string(q.last), slack});
    }
    return r;
}

RoundedSolution round_fractional(const FractionalSolution& sol, const CanonicalPIG& g, int capacity) {
    const LpReport pre = check_feasible(sol, g, capacity);
    if (!pre.ok()) {
        std::ostringstream msg;
        msg << "fractional point is not LP-feasible: " << pre.violations.front().constraint << " misses by "
            << -pre.violations.front().slack;
        if (pre.violations.size() > 1) msg << " (and " << pre.violations.size() - 1 << " more)";
        throw InfeasibleInputError(msg.str());
    }
    RoundedSolution out;
    out.x.assign(g.n + 1, 0);
    Rational y = 0;
    Rational prev_ceil = 0;
    for (int j = 1; j <= g.n; ++j) {
        y += sol.x[j];
        const Rational c = ceil_of(y);
        out.x[j] = c != prev_ceil ? 1 : 0;
        prev_ceil = c;
    }
    out.lambda = static_cast<int>(numerator(floor_of(sol.lambda)));

    FractionalSolution integral;
    integral.x.assign(g.n + 1, 0);
    for (int j = 1; j <= g.n; ++j) integral.x[j] = out.x[j];
    integral.lambda = out.lambda;
    out.postcheck = check_feasible(integral, g, capacity);
    return out;
}

BlockPartition blocks_from_ends(const CanonicalPIG& g, const std::vector<int>& x, int capacity) {
    if (static_cast<int>(x.size()) != g.n + 1) throw std::invalid_argument("end vector has the wrong length");
    if (g.n > 0 && !x[g.n]) throw std::invalid_argument("x_n must be 1");
    BlockPartition p;
    p.capacity = capacity;
    int start = 1;
    for (int j = 1; j <= g.n; ++j) {
        if (x[j]) {
            p.blocks.push_back({start, j});
            start = j + 1;
        }
    }
    p.lambda = g.n ? clique_intersection(g, p.blocks) : 0;
    return p;
}

}  // namespace chromon
