// Prints one canonical graph6 line per isomorphism class of graphs.
//   walkctl_enumerate N          graphs on exactly N vertices
//   walkctl_enumerate --up-to N  graphs on 1..N vertices

#include <CLI11.hpp>

#include <iostream>

#include "walkctl/enumerate.hpp"
#include "walkctl/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Enumerate graphs up to isomorphism in graph6"};
    int n = 0;
    bool up_to = false;
    app.add_option("n", n, "Number of vertices")->required()->check(CLI::Range(1, 10));
    app.add_flag("--up-to", up_to, "Every order from 1 to n");
    CLI11_PARSE(app, argc, argv);

    try {
        const auto graphs = up_to ? walkctl::enumerate_graphs_up_to(n) : walkctl::enumerate_graphs(n);
        for (const auto& g : graphs) std::cout << walkctl::emit_graph6(g) << '\n';
    } catch (const walkctl::GuardError& e) {
        std::cerr << e.what() << '\n';
        return 3;
    }
    return 0;
}
