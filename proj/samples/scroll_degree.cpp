// Degree of the threefold scroll P(E(L)) for every pencil on a genus-g curve,
// next to the closed form (g-1)(3r^2+5r+8) - d.

#include "k3scroll/k3scroll.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    const std::int64_t g = argc > 1 ? std::atoll(argv[1]) : 8;
    using namespace k3scroll;
    std::cout << "g = " << g << "\n d  R  symbolic  printed\n";
    for (const BNTriple& t : enumerate_admissible(g, 1)) {
        const ScrollDegree deg = scroll_degree(t.g, t.r, t.d);
        std::cout << ' ' << t.d << "  " << embedding_dim_R(t.g, t.r, t.d) << "  " << deg.symbolic
                  << "  " << deg.printed << '\n';
    }
}
