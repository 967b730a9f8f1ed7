#include "zf/graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "zf/rational.hpp"

namespace zf {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(n));
    adj_.assign(static_cast<size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop rejected");
        adj_[static_cast<size_t>(u)] |= 1ULL << v;
        adj_[static_cast<size_t>(v)] |= 1ULL << u;
    }
    int deg_sum = 0;
    for (auto mask : adj_) deg_sum += std::popcount(mask);
    m_ = deg_sum / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[static_cast<size_t>(v)]); }

bool Graph::has_edge(int u, int v) const { return (adj_[static_cast<size_t>(u)] >> v) & 1ULL; }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t mask = adj_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
        while (mask) {
            int v = std::countr_zero(mask);
            out.emplace_back(u, v);
            mask &= mask - 1;
        }
    }
    return out;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    std::uint64_t mask = adj_[static_cast<size_t>(v)];
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

ArcList::ArcList(const Graph& g) {
    arcs.reserve(static_cast<size_t>(2 * g.m()));
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbors(u)) arcs.emplace_back(u, v);
    // neighbors() is ascending and u is outer, so this is already lex sorted.
}

int ArcList::index_of(int u, int v) const {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), std::make_pair(u, v));
    if (it == arcs.end() || *it != std::make_pair(u, v))
        throw std::invalid_argument("arc not present");
    return static_cast<int>(it - arcs.begin());
}

Graph family(Family kind, int size) {
    std::vector<std::pair<int, int>> edges;
    switch (kind) {
        case Family::Path:
            if (size < 1) throw std::invalid_argument("path order must be >= 1");
            for (int i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
            return Graph(size, edges);
        case Family::Cycle:
            if (size < 3) throw std::invalid_argument("cycle order must be >= 3");
            for (int i = 0; i + 1 < size; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, size - 1);
            return Graph(size, edges);
        case Family::Complete:
            if (size < 1) throw std::invalid_argument("complete graph order must be >= 1");
            for (int i = 0; i < size; ++i)
                for (int j = i + 1; j < size; ++j) edges.emplace_back(i, j);
            return Graph(size, edges);
        case Family::Star:
            if (size < 1) throw std::invalid_argument("star order must be >= 1");
            for (int i = 1; i < size; ++i) edges.emplace_back(0, i);
            return Graph(size, edges);
        case Family::Hypercube: {
            if (size < 1) throw std::invalid_argument("hypercube dimension must be >= 1");
            if (size > 6) throw std::invalid_argument("hypercube dimension capped at 6 (order 64)");
            Graph q = family(Family::Path, 2);
            for (int i = 2; i <= size; ++i) q = cartesian_product(q, family(Family::Path, 2));
            return q;
        }
    }
    throw std::invalid_argument("unknown family");
}

Family family_from_name(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    if (name == "star") return Family::Star;
    if (name == "hypercube") return Family::Hypercube;
    throw std::invalid_argument("unknown family name: " + name);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.n() == 0 || h.n() == 0) throw std::invalid_argument("product of empty graph");
    if (g.n() * h.n() > Graph::kMaxVertices)
        throw std::invalid_argument("product order exceeds 64 vertices");
    std::vector<std::pair<int, int>> edges;
    auto id = [&](int a, int b) { return a * h.n() + b; };
    for (int a = 0; a < g.n(); ++a)
        for (auto [b, b2] : h.edges()) edges.emplace_back(id(a, b), id(a, b2));
    for (auto [a, a2] : g.edges())
        for (int b = 0; b < h.n(); ++b) edges.emplace_back(id(a, b), id(a2, b));
    return Graph(g.n() * h.n(), edges);
}

Graph vertex_sum(const Graph& g, int u, const Graph& h, int u2) {
    if (u < 0 || u >= g.n() || u2 < 0 || u2 >= h.n())
        throw std::invalid_argument("vertex_sum: vertex index out of range");
    int n = g.n() + h.n() - 1;
    if (n > Graph::kMaxVertices) throw std::invalid_argument("vertex_sum order exceeds 64");
    auto relabel = [&](int v) { return v == u2 ? u : (v < u2 ? g.n() + v : g.n() + v - 1); };
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [a, b] : h.edges()) edges.emplace_back(relabel(a), relabel(b));
    return Graph(n, edges);
}

Graph edge_sum(const Graph& g, int u, const Graph& h, int u2) {
    if (u < 0 || u >= g.n() || u2 < 0 || u2 >= h.n())
        throw std::invalid_argument("edge_sum: vertex index out of range");
    int n = g.n() + h.n();
    if (n > Graph::kMaxVertices) throw std::invalid_argument("edge_sum order exceeds 64");
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [a, b] : h.edges()) edges.emplace_back(g.n() + a, g.n() + b);
    edges.emplace_back(u, g.n() + u2);
    return Graph(n, edges);
}

Graph random_gnp(int n, const std::string& p_literal, std::uint64_t seed) {
    Rat p = rat_from_string(p_literal);
    if (p < 0 || p > 1) throw std::invalid_argument("edge probability must be in [0, 1]");
    mpz_class two64;
    mpz_ui_pow_ui(two64.get_mpz_t(), 2, 64);
    mpz_class threshold = rat_floor(p * Rat(two64));
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            mpz_class draw(static_cast<unsigned long>(rng()));
            if (p == 1 || draw < threshold) edges.emplace_back(i, j);
        }
    return Graph(n, edges);
}

std::string random_gnp_metadata() {
    return "mt19937_64; one draw per pair (i,j) i<j in lexicographic order; "
           "edge iff draw < floor(p*2^64) with p parsed as an exact rational";
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.adj(v);
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertex_mask();
}

Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("remove_vertex: index out of range");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
    }
    return Graph(g.n() - 1, edges);
}

int diameter(const Graph& g) {
    if (g.n() == 0) return -1;
    int best = 0;
    for (int s = 0; s < g.n(); ++s) {
        std::uint64_t seen = 1ULL << s, frontier = seen;
        int dist = 0;
        while (seen != g.vertex_mask()) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.adj(v);
            }
            frontier = next & ~seen;
            if (!frontier) return -1;  // disconnected
            seen |= frontier;
            ++dist;
        }
        best = std::max(best, dist);
    }
    return best;
}

}  // namespace zf
