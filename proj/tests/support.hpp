#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chromon/partition.hpp"
#include "chromon/pig.hpp"

namespace chromon::test {

inline std::string data(const std::string& rel) {
    std::ifstream in(std::string(CHROMON_TEST_DATA) + "/" + rel);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline CanonicalPIG pig(const std::string& text) { return build_canonical(parse_instance(text)); }

inline const std::string kExample61 = "a 1 3\nb 2 5\nc 4 6\n";
inline const std::string kExample62 = "a 1 6\nb 2 7\nc 3 10\nd 4 11\ne 5 12\nf 8 13\ng 9 14\n";
inline const std::string kOverlap222 = "a 1 5 2\nb 2 6 2\nc 3 7 2\n";

inline std::vector<Block> blocks(std::initializer_list<std::pair<int, int>> list) {
    std::vector<Block> out;
    for (auto [a, b] : list) out.push_back({a, b});
    return out;
}

// Canonical positions marked in a 0/1 array with slot 0 unused.
inline std::vector<int> marked(const std::vector<char>& f) {
    std::vector<int> out;
    for (std::size_t i = 1; i < f.size(); ++i)
        if (f[i]) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace chromon::test
