// Torsion pairs of linear A_3 and their lifts to t-structures on D^b.

#include <iostream>

#include "splitt/splitt.hpp"

int main() {
    using namespace splitt;
    const auto t = enumerate_indecomposables(builtin_quiver("a3"));
    const Window w{-1, 2};
    const auto pairs = enumerate_torsion_pairs(t);
    std::cout << pairs.size() << " torsion pairs over " << t.type().name() << "\n";
    for (const auto& tp : pairs) {
        const auto ts = lift(tp, t, w);
        std::cout << (tp.split ? "split     " : "non-split ") << "heart: " << describe(ts.heart, t) << "\n";
    }
}
