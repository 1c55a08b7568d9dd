#include "walkctl/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "walkctl/errors.hpp"

namespace walkctl {

namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Splits cells by neighbour counts into other cells until equitable. Cell
// order and splitting depend only on counts, never on labels.
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            for (std::size_t x = 0; x < cells.size() && !changed; ++x) {
                if (cells[x].size() == 1) continue;
                std::map<int, std::vector<Vertex>> by_count;
                for (Vertex v : cells[x]) {
                    int count = 0;
                    for (Vertex w : cells[s]) count += g.has_edge(v, w);
                    by_count[count].push_back(v);
                }
                if (by_count.size() == 1) continue;
                Cells split;
                for (auto& [count, members] : by_count) split.push_back(std::move(members));
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), split.begin(), split.end());
                changed = true;
            }
        }
    }
}

void search(const Graph& g, Cells cells, std::string& best) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
        Permutation perm(static_cast<std::size_t>(g.order()));
        for (std::size_t k = 0; k < cells.size(); ++k) perm[static_cast<std::size_t>(cells[k][0])] = static_cast<Vertex>(k);
        std::string cert = emit_graph6(g.relabelled(perm));
        if (best.empty() || cert < best) best = std::move(cert);
        return;
    }
    const auto idx = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> members = cells[idx];
    for (Vertex v : members) {
        Cells next = cells;
        std::vector<Vertex> rest;
        for (Vertex w : members)
            if (w != v) rest.push_back(w);
        next[idx] = {v};
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(idx) + 1, rest);
        search(g, std::move(next), best);
    }
}

} // namespace

std::string canonical_graph6(const Graph& g) {
    if (g.order() == 0) return emit_graph6(g);
    std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
    std::string best;
    search(g, Cells{all}, best);
    return best;
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0) throw InputError("enumerate_graphs: negative order");
    if (n > 10) throw GuardError("enumerate_graphs limited to 10 vertices");
    std::vector<Graph> level{Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::set<std::string> seen;
        for (const Graph& h : level) {
            const unsigned long long masks = 1ULL << (k - 1);
            for (unsigned long long mask = 0; mask < masks; ++mask) {
                Graph g(k);
                for (auto [i, j] : h.edges()) g.add_edge(i, j);
                for (int i = 0; i < k - 1; ++i)
                    if (mask >> i & 1ULL) g.add_edge(i, k - 1);
                seen.insert(canonical_graph6(g));
            }
        }
        level.clear();
        for (const auto& s : seen) level.push_back(parse_graph6(s));
    }
    return level;
}

std::vector<Graph> enumerate_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        auto level = enumerate_graphs(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace walkctl
