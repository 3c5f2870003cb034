#pragma once

#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "splitt/errors.hpp"
#include "splitt/linalg.hpp"
#include "splitt/quiver.hpp"

namespace splitt {

/// Per-vertex dimensions of a representation.
struct DimensionVector {
    std::vector<int> coords;

    DimensionVector() = default;
    explicit DimensionVector(std::vector<int> c) : coords(std::move(c)) {}

    std::size_t size() const noexcept { return coords.size(); }
    int operator[](std::size_t v) const { return coords.at(v); }
    int total() const { return std::accumulate(coords.begin(), coords.end(), 0); }
    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](int x) { return x == 0; });
    }

    /// Comma separated, e.g. "1,1,0". This is the canonical object name in all output.
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(coords[i]);
        }
        return s;
    }

    static DimensionVector parse(std::string_view text) {
        std::vector<int> c;
        std::size_t i = 0;
        while (i <= text.size()) {
            std::size_t j = text.find(',', i);
            if (j == std::string_view::npos) j = text.size();
            const std::string piece = detail::trim(text.substr(i, j - i));
            if (piece.empty() || piece.find_first_not_of("0123456789") != std::string::npos)
                throw UsageError("bad dimension vector '" + std::string(text) + "'");
            c.push_back(std::stoi(piece));
            i = j + 1;
        }
        return DimensionVector(std::move(c));
    }

    friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;
    friend bool operator==(const DimensionVector&, const DimensionVector&) = default;
};

/// Vector spaces k^{dims[v]} at the vertices and a matrix of shape
/// dims[target] x dims[source] on every arrow.
struct Representation {
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;

    static Representation zero(const Quiver& q) {
        Representation r;
        r.dims.assign(q.vertex_count(), 0);
        for (std::size_t a = 0; a < q.arrows().size(); ++a) r.maps.emplace_back(0, 0);
        return r;
    }

    static Representation simple(const Quiver& q, Vertex v) {
        Representation r = zero(q);
        r.dims.at(v) = 1;
        for (std::size_t a = 0; a < q.arrows().size(); ++a) {
            const auto& arr = q.arrows()[a];
            r.maps[a] = Matrix(r.dims[arr.target], r.dims[arr.source]);
        }
        return r;
    }

    DimensionVector dimension_vector() const {
        std::vector<int> c;
        for (auto d : dims) c.push_back(static_cast<int>(d));
        return DimensionVector(std::move(c));
    }

    std::size_t total_dimension() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }
    bool is_zero() const { return total_dimension() == 0; }
};

/// Throws StructuralError unless the representation's shapes match the quiver.
inline void check_shape(const Quiver& q, const Representation& r) {
    if (r.dims.size() != q.vertex_count()) throw StructuralError("representation has wrong vertex count");
    if (r.maps.size() != q.arrows().size()) throw StructuralError("representation has wrong arrow count");
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrows()[a];
        const auto& m = r.maps[a];
        if (m.rows() != r.dims[arr.target] || m.cols() != r.dims[arr.source])
            throw StructuralError("matrix on arrow '" + arr.name + "' has shape " + std::to_string(m.rows()) + "x" +
                                  std::to_string(m.cols()) + ", expected " + std::to_string(r.dims[arr.target]) +
                                  "x" + std::to_string(r.dims[arr.source]));
    }
}

/// A morphism M -> N: one matrix N_v x M_v per vertex.
using Morphism = std::vector<Matrix>;

/// A 1-cochain for Ext^1(M, N): one matrix N_t x M_s per arrow s -> t.
using Cochain = std::vector<Matrix>;

/// g o f, vertexwise.
inline Morphism compose(const Morphism& g, const Morphism& f) {
    if (g.size() != f.size()) throw StructuralError("compose: vertex count mismatch");
    Morphism h;
    h.reserve(f.size());
    for (std::size_t v = 0; v < f.size(); ++v) h.push_back(g[v] * f[v]);
    return h;
}

/// Pulls a cochain for Ext(M, N) back along f : M' -> M.
inline Cochain pull_back(const Cochain& e, const Morphism& f, const Quiver& q) {
    Cochain out;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) out.push_back(e[a] * f[q.arrows()[a].source]);
    return out;
}

/// Pushes a cochain for Ext(M, N) forward along g : N -> N'.
inline Cochain push_forward(const Morphism& g, const Cochain& e, const Quiver& q) {
    Cochain out;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) out.push_back(g[q.arrows()[a].target] * e[a]);
    return out;
}

inline std::vector<Rational> flatten(const std::vector<Matrix>& blocks) {
    std::vector<Rational> out;
    for (const auto& m : blocks)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
    return out;
}

/// The linear map delta : (f_v)_v |-> (N_a f_s - f_t M_a)_a from vertexwise
/// linear maps to 1-cochains. Its kernel is Hom(M, N) and its cokernel is
/// Ext^1(M, N) (standard resolution of a path-algebra module).
class CommutationSystem {
public:
    CommutationSystem(const Quiver& q, const Representation& m, const Representation& n) : quiver_(&q), m_(&m), n_(&n) {
        check_shape(q, m);
        check_shape(q, n);
        for (Vertex v = 0; v < q.vertex_count(); ++v) {
            vertex_offset_.push_back(unknowns_);
            unknowns_ += n.dims[v] * m.dims[v];
        }
        for (const auto& a : q.arrows()) {
            arrow_offset_.push_back(equations_);
            equations_ += n.dims[a.target] * m.dims[a.source];
        }
        delta_ = Matrix(equations_, unknowns_);
        for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
            const auto& a = q.arrows()[ai];
            const Matrix& na = n.maps[ai];
            const Matrix& ma = m.maps[ai];
            const std::size_t rows = n.dims[a.target], cols = m.dims[a.source];
            for (std::size_t p = 0; p < rows; ++p)
                for (std::size_t c = 0; c < cols; ++c) {
                    const std::size_t eq = arrow_offset_[ai] + p * cols + c;
                    // + sum_r N_a[p][r] f_s[r][c]
                    for (std::size_t r = 0; r < n.dims[a.source]; ++r)
                        if (sgn(na(p, r)) != 0) delta_(eq, unknown(a.source, r, c)) += na(p, r);
                    // - sum_r f_t[p][r] M_a[r][c]
                    for (std::size_t r = 0; r < m.dims[a.target]; ++r)
                        if (sgn(ma(r, c)) != 0) delta_(eq, unknown(a.target, p, r)) -= ma(r, c);
                }
        }
    }

    const Matrix& matrix() const noexcept { return delta_; }
    std::size_t unknown_count() const noexcept { return unknowns_; }
    std::size_t cochain_dimension() const noexcept { return equations_; }

    Morphism unflatten_morphism(const Matrix& column_vectors, std::size_t col) const {
        Morphism f;
        for (Vertex v = 0; v < quiver_->vertex_count(); ++v) {
            Matrix fv(n_->dims[v], m_->dims[v]);
            for (std::size_t i = 0; i < fv.rows(); ++i)
                for (std::size_t j = 0; j < fv.cols(); ++j) fv(i, j) = column_vectors(unknown(v, i, j), col);
            f.push_back(std::move(fv));
        }
        return f;
    }

    /// Unit cochains, one per coordinate of the cochain space.
    std::vector<Cochain> cochain_basis() const {
        std::vector<Cochain> basis;
        for (std::size_t ai = 0; ai < quiver_->arrows().size(); ++ai) {
            const auto& a = quiver_->arrows()[ai];
            for (std::size_t p = 0; p < n_->dims[a.target]; ++p)
                for (std::size_t c = 0; c < m_->dims[a.source]; ++c) {
                    Cochain e;
                    for (const auto& b : quiver_->arrows()) e.emplace_back(n_->dims[b.target], m_->dims[b.source]);
                    e[ai](p, c) = 1;
                    basis.push_back(std::move(e));
                }
        }
        return basis;
    }

private:
    std::size_t unknown(Vertex v, std::size_t i, std::size_t j) const {
        return vertex_offset_[v] + i * m_->dims[v] + j;
    }

    const Quiver* quiver_;
    const Representation* m_;
    const Representation* n_;
    std::vector<std::size_t> vertex_offset_;
    std::vector<std::size_t> arrow_offset_;
    std::size_t unknowns_ = 0;
    std::size_t equations_ = 0;
    Matrix delta_;
};

struct HomSpace {
    std::vector<Morphism> basis;
    std::size_t dimension() const noexcept { return basis.size(); }
};

/// Basis of Hom(M, N): solutions of N_a f_{s(a)} = f_{t(a)} M_a for every arrow a.
inline HomSpace hom_space(const Quiver& q, const Representation& m, const Representation& n) {
    const CommutationSystem sys(q, m, n);
    HomSpace h;
    if (sys.unknown_count() == 0) return h;
    const Matrix k = kernel_basis(sys.matrix());
    for (std::size_t c = 0; c < k.cols(); ++c) h.basis.push_back(sys.unflatten_morphism(k, c));
    return h;
}

/// dim Ext^1(M, N) computed as the cokernel dimension of the commutation map.
inline std::size_t ext_dimension_by_cokernel(const Quiver& q, const Representation& m, const Representation& n) {
    const CommutationSystem sys(q, m, n);
    if (sys.cochain_dimension() == 0) return 0;
    return sys.cochain_dimension() - (sys.unknown_count() == 0 ? 0 : rank(sys.matrix()));
}

/// <d, e> = sum_v d_v e_v - sum_a d_{s(a)} e_{t(a)}.
inline int euler_form(const Quiver& q, const DimensionVector& d, const DimensionVector& e) {
    if (d.size() != q.vertex_count() || e.size() != q.vertex_count())
        throw StructuralError("euler_form: dimension vector length does not match the quiver");
    int s = 0;
    for (Vertex v = 0; v < q.vertex_count(); ++v) s += d[v] * e[v];
    for (const auto& a : q.arrows()) s -= d[a.source] * e[a.target];
    return s;
}

/// Bernstein-Gelfand-Ponomarev reflection at v. The result lives over
/// q.reflected_at(v). At a sink this is the positive functor (kernel of the
/// summed incoming maps), at a source the negative one (cokernel of the
/// stacked outgoing maps).
inline Representation reflect(const Quiver& q, const Representation& r, Vertex v) {
    check_shape(q, r);
    if (v >= q.vertex_count()) throw UsageError("reflect: vertex out of range");
    const auto& arrows = q.arrows();
    std::vector<std::size_t> incident;
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].source == v || arrows[a].target == v) incident.push_back(a);

    Representation out = r;
    if (q.is_sink(v)) {
        // psi = [M_a1 | M_a2 | ...] : (+)_a M_{s(a)} -> M_v
        std::size_t total = 0;
        for (auto a : incident) total += r.dims[arrows[a].source];
        Matrix psi(r.dims[v], total);
        std::size_t off = 0;
        for (auto a : incident) {
            const Matrix& ma = r.maps[a];
            for (std::size_t i = 0; i < ma.rows(); ++i)
                for (std::size_t j = 0; j < ma.cols(); ++j) psi(i, off + j) = ma(i, j);
            off += ma.cols();
        }
        const Matrix k = total == 0 ? Matrix(0, 0) : kernel_basis(psi);
        out.dims[v] = k.cols();
        off = 0;
        for (auto a : incident) {
            const std::size_t w = r.dims[arrows[a].source];
            out.maps[a] = total == 0 ? Matrix(w, 0) : k.row_block(off, w);
            off += w;
        }
        return out;
    }
    if (q.is_source(v)) {
        // phi = [M_a1 ; M_a2 ; ...] : M_v -> (+)_a M_{t(a)}
        std::size_t total = 0;
        for (auto a : incident) total += r.dims[arrows[a].target];
        Matrix phi(total, r.dims[v]);
        std::size_t off = 0;
        for (auto a : incident) {
            const Matrix& ma = r.maps[a];
            for (std::size_t i = 0; i < ma.rows(); ++i)
                for (std::size_t j = 0; j < ma.cols(); ++j) phi(off + i, j) = ma(i, j);
            off += ma.rows();
        }
        Matrix pi;
        if (total == 0) pi = Matrix(0, 0);
        else if (r.dims[v] == 0) pi = Matrix::identity(total);
        else pi = left_kernel_basis(phi);
        out.dims[v] = pi.rows();
        off = 0;
        for (auto a : incident) {
            const std::size_t w = r.dims[arrows[a].target];
            out.maps[a] = total == 0 ? Matrix(0, w) : pi.columns(off, w);
            off += w;
        }
        return out;
    }
    throw UsageError("reflect: vertex '" + q.vertex_name(v) + "' is neither a sink nor a source");
}

/// A subrepresentation given by a basis (as columns) of a subspace at each
/// vertex, together with the induced quotient.
struct SubQuotient {
    Representation sub;
    Representation quotient;
};

/// Builds the subrepresentation spanned by `bases` (one column basis per
/// vertex, stable under the arrow maps) and the quotient Y / sub.
inline SubQuotient sub_and_quotient(const Quiver& q, const Representation& y, const std::vector<Matrix>& bases) {
    const std::size_t n = q.vertex_count();
    std::vector<Matrix> comps(n);
    std::vector<Matrix> full(n);  // [basis | complement], invertible
    SubQuotient out{Representation::zero(q), Representation::zero(q)};
    for (Vertex v = 0; v < n; ++v) {
        const Matrix& b = bases[v];
        comps[v] = complement_basis(b.cols() == 0 ? Matrix(y.dims[v], 0) : b, y.dims[v]);
        full[v] = hconcat(b.cols() == 0 ? Matrix(y.dims[v], 0) : b, comps[v]);
        out.sub.dims[v] = b.cols();
        out.quotient.dims[v] = comps[v].cols();
    }
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const auto& a = q.arrows()[ai];
        const std::size_t ks = out.sub.dims[a.source], kt = out.sub.dims[a.target];
        const std::size_t cs = out.quotient.dims[a.source], ct = out.quotient.dims[a.target];
        if (y.dims[a.source] == 0 || y.dims[a.target] == 0) {
            out.sub.maps[ai] = Matrix(kt, ks);
            out.quotient.maps[ai] = Matrix(ct, cs);
            continue;
        }
        // Coordinates of Y_a * full_s in the basis full_t; block upper triangular.
        const Matrix image = y.maps[ai] * full[a.source];
        const Matrix coords = solve_in_span(full[a.target], image);
        Matrix sub(kt, ks), quo(ct, cs);
        for (std::size_t i = 0; i < kt; ++i)
            for (std::size_t j = 0; j < ks; ++j) sub(i, j) = coords(i, j);
        for (std::size_t i = 0; i < ct; ++i)
            for (std::size_t j = 0; j < ks; ++j)
                if (sgn(coords(kt + i, j)) != 0) throw ConsistencyError("subspace family is not a subrepresentation");
        for (std::size_t i = 0; i < ct; ++i)
            for (std::size_t j = 0; j < cs; ++j) quo(i, j) = coords(kt + i, ks + j);
        out.sub.maps[ai] = std::move(sub);
        out.quotient.maps[ai] = std::move(quo);
    }
    return out;
}

}  // namespace splitt
