#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "walkctl/exact.hpp"

namespace walkctl {

using Vertex = int;
using Permutation = std::vector<Vertex>; // perm[i] = image of vertex i

/// Undirected simple graph on vertices 0..v-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int v);
    Graph(int v, std::initializer_list<std::pair<Vertex, Vertex>> edges);
    Graph(int v, const std::vector<std::pair<Vertex, Vertex>>& edges);

    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);

    int order() const { return v_; }
    bool has_edge(Vertex i, Vertex j) const { return adj_[static_cast<std::size_t>(i * v_ + j)] != 0; }
    void add_edge(Vertex i, Vertex j);
    void remove_edge(Vertex i, Vertex j);
    int degree(Vertex i) const;
    std::size_t edge_count() const;
    std::vector<std::pair<Vertex, Vertex>> edges() const; // i < j, lexicographic
    std::vector<Vertex> neighbours(Vertex i) const;

    /// Image of this graph under perm (edge ij becomes perm[i]perm[j]).
    Graph relabelled(const Permutation& perm) const;
    /// Graph with vertex u removed; vertices above u shift down by one.
    Graph without_vertex(Vertex u) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.v_ == b.v_ && a.adj_ == b.adj_; }

private:
    void check_pair(Vertex i, Vertex j) const;
    int v_ = 0;
    std::vector<unsigned char> adj_;
};

/// Sorted, duplicate-free subset of 0..v-1.
class VertexSet {
public:
    VertexSet() = default;
    /// Throws InputError if a member is out of range.
    VertexSet(int v, std::vector<Vertex> members);

    static VertexSet all(int v);
    static VertexSet single(int v, Vertex u);
    static VertexSet from_mask(int v, unsigned long long mask);

    int universe() const { return v_; }
    const std::vector<Vertex>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex u) const;
    Vector characteristic() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    int v_ = 0;
    std::vector<Vertex> members_;
};

Matrix adjacency(const Graph& g);
Matrix laplacian(const Graph& g);
Graph complement(const Graph& g);

/// Apex is vertex 0 adjacent to S; original vertex i becomes i+1.
Graph cone(const Graph& g, const VertexSet& s);

struct PathExtension {
    Graph graph;
    Vertex distinguished; // far end of the attached path
};

/// Attaches a path on k vertices whose near end is joined to every vertex of
/// S. Path vertices come first: the far end is 0, the near end k-1, and
/// original vertex i becomes i+k. k = 1 reproduces cone().
PathExtension path_extension(const Graph& g, const VertexSet& s, int k);

inline constexpr int kDefaultAutomorphismBound = 10;

/// All automorphisms, by backtracking over degree-compatible assignments.
/// Throws GuardError when v > bound.
std::vector<Permutation> automorphisms(const Graph& g, int bound = kDefaultAutomorphismBound);

bool is_vertex_transitive(const Graph& g, int bound = kDefaultAutomorphismBound);

/// True iff perm maps S onto itself.
bool fixes_setwise(const Permutation& perm, const VertexSet& s);

/// BFS distances from the set S; unreachable vertices get nullopt.
std::vector<std::optional<int>> distances_from(const Graph& g, const VertexSet& s);

/// Least r with every vertex within distance r of S; nullopt means infinite
/// (S misses a component). Throws InputError when S is empty.
std::optional<int> covering_radius(const Graph& g, const VertexSet& s);

/// Maximum distance; nullopt for disconnected graphs.
std::optional<int> diameter(const Graph& g);
bool is_connected(const Graph& g);

/// graph6 short form, n <= 62. Throws InputError on malformed text.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

} // namespace walkctl
