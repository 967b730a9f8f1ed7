#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zf {

// Immutable finite simple graph on vertices 0..n-1. Adjacency is kept as one
// 64-bit neighbor set per vertex, which caps the order at 64; everything at
// desk scale (corpora, hypercubes up to Q_5, order-8 sums) fits well inside.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int m() const { return m_; }
    std::uint64_t adj(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    std::uint64_t vertex_mask() const { return n_ == 64 ? ~0ULL : ((1ULL << n_) - 1); }

    // Edges {u,v} with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> neighbors(int v) const;

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

// Antiparallel arc list: both (u,v) and (v,u) per edge, sorted lexicographically.
struct ArcList {
    std::vector<std::pair<int, int>> arcs;

    explicit ArcList(const Graph& g);
    int size() const { return static_cast<int>(arcs.size()); }
    const std::pair<int, int>& operator[](int i) const { return arcs[static_cast<size_t>(i)]; }
    // Index of arc (u,v); throws if absent.
    int index_of(int u, int v) const;
};

enum class Family { Path, Cycle, Complete, Star, Hypercube };

// size is the order, except Hypercube where it is the dimension d >= 1.
// Star places the center at vertex 0; hypercube(d) is built recursively as
// Q_1 = P_2, Q_i = Q_{i-1} box Q_1.
Graph family(Family kind, int size);
Family family_from_name(const std::string& name);

// Vertex (a,b) of g box h is labeled a*h.n() + b.
Graph cartesian_product(const Graph& g, const Graph& h);

// Identify u in g with u2 in h. g keeps its labels (the merged vertex stays at
// u); vertices of h other than u2 follow, shifted to g.n(), g.n()+1, ... in
// order of their original labels.
Graph vertex_sum(const Graph& g, int u, const Graph& h, int u2);

// Disjoint union (h shifted by g.n()) plus the edge {u, g.n()+u2}.
Graph edge_sum(const Graph& g, int u, const Graph& h, int u2);

// G(n,p) with one mt19937_64 draw per vertex pair (i,j), i<j, in lexicographic
// order; the pair is an edge iff draw < floor(p * 2^64). p is parsed as an
// exact rational ("0.3" or "3/10"), so identical seeds give identical graphs
// on every platform.
Graph random_gnp(int n, const std::string& p_literal, std::uint64_t seed);
std::string random_gnp_metadata();

int max_degree(const Graph& g);
bool is_connected(const Graph& g);
// -1 for disconnected graphs, 0 for n == 1.
int diameter(const Graph& g);

// Induced subgraph on V \ {v}; vertices above v shift down by one.
Graph remove_vertex(const Graph& g, int v);

}  // namespace zf
