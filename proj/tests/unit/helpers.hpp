#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "zf/graph.hpp"

namespace zf::test {

// Brute-force isomorphism check, fine for n <= 8.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> perm(static_cast<size_t>(a.n()));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.n() && ok; ++u)
            for (int v = u + 1; v < a.n() && ok; ++v)
                if (a.has_edge(u, v) !=
                    b.has_edge(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::string data_dir() {
    const char* env = std::getenv("ZFIP_DATA_DIR");
    return env ? env : "data";
}

}  // namespace zf::test
