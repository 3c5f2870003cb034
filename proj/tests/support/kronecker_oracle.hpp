#pragma once

// Explicit matrix representations of Kronecker modules, used to check the
// symbolic rules against an independent Hom/Ext computation.

#include "splitt/kronecker.hpp"
#include "splitt/quiver.hpp"
#include "splitt/representation.hpp"

namespace splitt::oracle {

inline Representation kronecker_rep(const KModule& x) {
    const auto [d1, d2] = x.dim();
    Representation r;
    r.dims = {static_cast<std::size_t>(d1), static_cast<std::size_t>(d2)};
    Matrix a(r.dims[1], r.dims[0]), b(r.dims[1], r.dims[0]);
    const auto n = static_cast<std::size_t>(x.n);
    switch (x.kind) {
        case KKind::Post:
            for (std::size_t i = 0; i < n; ++i) {
                a(i, i) = 1;
                b(i + 1, i) = 1;
            }
            break;
        case KKind::Pre:
            for (std::size_t i = 0; i < n; ++i) {
                a(i, i) = 1;
                b(i, i + 1) = 1;
            }
            break;
        case KKind::Reg: {
            // tube 0 -> lambda 0, 1 -> 1, 2 -> infinity, k >= 3 -> k - 1
            const bool infinite = x.tube == 2;
            const long lambda = x.tube < 2 ? static_cast<long>(x.tube) : static_cast<long>(x.tube) - 1;
            Matrix& id = infinite ? b : a;
            Matrix& jordan = infinite ? a : b;
            for (std::size_t i = 0; i < n; ++i) {
                id(i, i) = 1;
                if (!infinite) jordan(i, i) = lambda;
                if (i + 1 < n) jordan(i, i + 1) = 1;
            }
            break;
        }
    }
    r.maps = {a, b};
    return r;
}

inline int hom_by_matrices(const KModule& x, const KModule& y) {
    const Quiver q = builtin_quiver("kronecker");
    return static_cast<int>(hom_space(q, kronecker_rep(x), kronecker_rep(y)).dimension());
}

inline int ext_by_matrices(const KModule& x, const KModule& y) {
    const Quiver q = builtin_quiver("kronecker");
    return static_cast<int>(ext_dimension_by_cokernel(q, kronecker_rep(x), kronecker_rep(y)));
}

}  // namespace splitt::oracle
