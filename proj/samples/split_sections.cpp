// Split t-structures of A_2 in a window, with their Ext-projective sections.

#include <iostream>

#include "splitt/splitt.hpp"

int main() {
    using namespace splitt;
    const auto t = enumerate_indecomposables(builtin_quiver("a2"));
    const DerivedArQuiver g(t, Window{-2, 3});
    for (const auto& sc : classify_split(t, g)) {
        std::cout << sc.label << ": E = {";
        for (std::size_t k = 0; k < sc.ext_projectives.size(); ++k)
            std::cout << (k ? ", " : "") << object_label(t, sc.ext_projectives[k]);
        std::cout << "}  U = " << describe(sc.ts.aisle, t) << "\n";
    }
}
