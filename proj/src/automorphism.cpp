#include <string>

#include "walkctl/errors.hpp"
#include "walkctl/graph.hpp"

namespace walkctl {

namespace {

class AutomorphismSearch {
public:
    explicit AutomorphismSearch(const Graph& g) : g_(g), n_(g.order()) {
        for (int i = 0; i < n_; ++i) degree_.push_back(g.degree(i));
        image_.assign(static_cast<std::size_t>(n_), -1);
        used_.assign(static_cast<std::size_t>(n_), false);
    }

    std::vector<Permutation> run() {
        extend(0);
        return std::move(found_);
    }

private:
    void extend(int x) {
        if (x == n_) {
            found_.push_back(image_);
            return;
        }
        for (int y = 0; y < n_; ++y) {
            if (used_[static_cast<std::size_t>(y)] || degree_[static_cast<std::size_t>(y)] != degree_[static_cast<std::size_t>(x)])
                continue;
            bool ok = true;
            for (int u = 0; u < x && ok; ++u)
                ok = g_.has_edge(u, x) == g_.has_edge(image_[static_cast<std::size_t>(u)], y);
            if (!ok) continue;
            image_[static_cast<std::size_t>(x)] = y;
            used_[static_cast<std::size_t>(y)] = true;
            extend(x + 1);
            used_[static_cast<std::size_t>(y)] = false;
        }
        image_[static_cast<std::size_t>(x)] = -1;
    }

    const Graph& g_;
    int n_;
    std::vector<int> degree_;
    Permutation image_;
    std::vector<bool> used_;
    std::vector<Permutation> found_;
};

void check_bound(const Graph& g, int bound) {
    if (g.order() > bound)
        throw GuardError("automorphism search limited to " + std::to_string(bound) + " vertices");
}

} // namespace

std::vector<Permutation> automorphisms(const Graph& g, int bound) {
    check_bound(g, bound);
    return AutomorphismSearch(g).run();
}

bool is_vertex_transitive(const Graph& g, int bound) {
    check_bound(g, bound);
    if (g.order() <= 1) return true;
    std::vector<bool> orbit0(static_cast<std::size_t>(g.order()), false);
    for (const auto& p : automorphisms(g, bound)) orbit0[static_cast<std::size_t>(p[0])] = true;
    for (bool b : orbit0)
        if (!b) return false;
    return true;
}

} // namespace walkctl
