#include "walkctl/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "walkctl/errors.hpp"

namespace walkctl {

Graph::Graph(int v) : v_(v), adj_(static_cast<std::size_t>(v) * static_cast<std::size_t>(v), 0) {
    if (v < 0) throw InputError("Graph: negative order");
}

Graph::Graph(int v, std::initializer_list<std::pair<Vertex, Vertex>> edges) : Graph(v) {
    for (auto [i, j] : edges) add_edge(i, j);
}

Graph::Graph(int v, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(v) {
    for (auto [i, j] : edges) add_edge(i, j);
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

void Graph::check_pair(Vertex i, Vertex j) const {
    if (i < 0 || j < 0 || i >= v_ || j >= v_) throw InputError("Graph: vertex out of range");
    if (i == j) throw InputError("Graph: loops are not allowed");
}

void Graph::add_edge(Vertex i, Vertex j) {
    check_pair(i, j);
    adj_[static_cast<std::size_t>(i * v_ + j)] = 1;
    adj_[static_cast<std::size_t>(j * v_ + i)] = 1;
}

void Graph::remove_edge(Vertex i, Vertex j) {
    check_pair(i, j);
    adj_[static_cast<std::size_t>(i * v_ + j)] = 0;
    adj_[static_cast<std::size_t>(j * v_ + i)] = 0;
}

int Graph::degree(Vertex i) const {
    int d = 0;
    for (int j = 0; j < v_; ++j) d += has_edge(i, j);
    return d;
}

std::size_t Graph::edge_count() const {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (int i = 0; i < v_; ++i)
        for (int j = i + 1; j < v_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<Vertex> Graph::neighbours(Vertex i) const {
    std::vector<Vertex> out;
    for (int j = 0; j < v_; ++j)
        if (has_edge(i, j)) out.push_back(j);
    return out;
}

Graph Graph::relabelled(const Permutation& perm) const {
    if (static_cast<int>(perm.size()) != v_) throw InputError("relabelled: permutation size mismatch");
    Graph h(v_);
    for (auto [i, j] : edges()) h.add_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    return h;
}

Graph Graph::without_vertex(Vertex u) const {
    if (u < 0 || u >= v_) throw InputError("without_vertex: vertex out of range");
    Graph h(v_ - 1);
    auto shift = [u](Vertex x) { return x > u ? x - 1 : x; };
    for (auto [i, j] : edges())
        if (i != u && j != u) h.add_edge(shift(i), shift(j));
    return h;
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int v, std::vector<Vertex> members) : v_(v), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (Vertex u : members_)
        if (u < 0 || u >= v) throw InputError("VertexSet: vertex " + std::to_string(u) + " out of range");
}

VertexSet VertexSet::all(int v) {
    std::vector<Vertex> m(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) m[static_cast<std::size_t>(i)] = i;
    return VertexSet(v, std::move(m));
}

VertexSet VertexSet::single(int v, Vertex u) { return VertexSet(v, {u}); }

VertexSet VertexSet::from_mask(int v, unsigned long long mask) {
    std::vector<Vertex> m;
    for (int i = 0; i < v; ++i)
        if (mask >> i & 1ULL) m.push_back(i);
    return VertexSet(v, std::move(m));
}

bool VertexSet::contains(Vertex u) const { return std::binary_search(members_.begin(), members_.end(), u); }

Vector VertexSet::characteristic() const {
    Vector z(static_cast<std::size_t>(v_), Rational(0));
    for (Vertex u : members_) z[static_cast<std::size_t>(u)] = 1;
    return z;
}

// ------------------------------------------------------------ constructions

Matrix adjacency(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    Matrix a(n, n);
    for (auto [i, j] : g.edges()) {
        a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
        a(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = 1;
    }
    return a;
}

Matrix laplacian(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    Matrix l(n, n);
    for (auto [i, j] : g.edges()) {
        const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
        l(a, b) = -1;
        l(b, a) = -1;
        l(a, a) += 1;
        l(b, b) += 1;
    }
    return l;
}

Graph complement(const Graph& g) {
    Graph h(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.has_edge(i, j)) h.add_edge(i, j);
    return h;
}

Graph cone(const Graph& g, const VertexSet& s) { return path_extension(g, s, 1).graph; }

PathExtension path_extension(const Graph& g, const VertexSet& s, int k) {
    if (k < 1) throw InputError("path_extension: k must be at least 1");
    if (s.universe() != g.order()) throw InputError("path_extension: subset universe mismatch");
    Graph h(g.order() + k);
    for (int i = 0; i + 1 < k; ++i) h.add_edge(i, i + 1);
    for (Vertex u : s.members()) h.add_edge(k - 1, u + k);
    for (auto [i, j] : g.edges()) h.add_edge(i + k, j + k);
    return {std::move(h), 0};
}

bool fixes_setwise(const Permutation& perm, const VertexSet& s) {
    for (Vertex u : s.members())
        if (!s.contains(perm[static_cast<std::size_t>(u)])) return false;
    return true;
}

// ---------------------------------------------------------------- distances

std::vector<std::optional<int>> distances_from(const Graph& g, const VertexSet& s) {
    std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.order()));
    std::deque<Vertex> queue;
    for (Vertex u : s.members()) {
        dist[static_cast<std::size_t>(u)] = 0;
        queue.push_back(u);
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbours(u)) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (!dw) {
                dw = *dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<int> covering_radius(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw InputError("covering_radius: empty subset");
    int r = 0;
    for (const auto& d : distances_from(g, s)) {
        if (!d) return std::nullopt;
        r = std::max(r, *d);
    }
    return r;
}

std::optional<int> diameter(const Graph& g) {
    int best = 0;
    for (int u = 0; u < g.order(); ++u) {
        auto r = covering_radius(g, VertexSet::single(g.order(), u));
        if (!r) return std::nullopt;
        best = std::max(best, *r);
    }
    return best;
}

bool is_connected(const Graph& g) { return g.order() == 0 || diameter(g).has_value(); }

} // namespace walkctl
