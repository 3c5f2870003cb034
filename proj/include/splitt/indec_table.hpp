#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "splitt/errors.hpp"
#include "splitt/linalg.hpp"
#include "splitt/model.hpp"
#include "splitt/quiver.hpp"
#include "splitt/report.hpp"
#include "splitt/representation.hpp"

namespace splitt {

struct IndecEntry {
    DimensionVector dim;
    Representation rep;
    bool is_projective = false;
    bool is_injective = false;
    std::optional<std::size_t> tau;
    std::optional<std::size_t> tau_inverse;
    std::optional<Vertex> projective_at;  // set when this is P_v
    std::optional<Vertex> injective_at;   // set when this is I_v
};

using ArArrow = std::pair<std::size_t, std::size_t>;

/// Integer matrix of the Coxeter transformation Phi = -E^{-1} E^T, where E
/// is the Euler matrix (<d, e> = d^T E e). On dimension vectors of
/// non-projective indecomposables Phi computes tau.
class Coxeter {
public:
    explicit Coxeter(const Quiver& q) : n_(q.vertex_count()) {
        Matrix e = Matrix::identity(n_);
        for (const auto& a : q.arrows()) e(a.source, a.target) -= 1;
        const Matrix e_inv = solve_in_span(e, Matrix::identity(n_));
        const Matrix et = e.transposed();
        const Matrix et_inv = solve_in_span(et, Matrix::identity(n_));
        forward_ = to_int(e_inv * et, -1);
        backward_ = to_int(et_inv * e, -1);
    }

    std::vector<int> apply(const std::vector<int>& d) const { return mul(forward_, d); }
    std::vector<int> apply_inverse(const std::vector<int>& d) const { return mul(backward_, d); }

private:
    std::vector<std::vector<int>> to_int(const Matrix& m, int sign) const {
        std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) {
                if (m(i, j).get_den() != 1) throw ConsistencyError("Coxeter matrix is not integral");
                out[i][j] = sign * static_cast<int>(m(i, j).get_num().get_si());
            }
        return out;
    }

    std::vector<int> mul(const std::vector<std::vector<int>>& m, const std::vector<int>& d) const {
        std::vector<int> out(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) out[i] += m[i][j] * d[j];
        return out;
    }

    std::size_t n_;
    std::vector<std::vector<int>> forward_;
    std::vector<std::vector<int>> backward_;
};

class IndecTable;
IndecTable enumerate_indecomposables(const Quiver& q);

/// All indecomposable representations of a Dynkin quiver with full Hom and
/// Ext^1 tables, the AR translate and the AR quiver. Immutable once built;
/// construction validates every invariant and throws ConsistencyError on
/// any disagreement.
class IndecTable {
public:
    const Quiver& quiver() const noexcept { return quiver_; }
    const DynkinType& type() const noexcept { return type_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t rank() const noexcept { return quiver_.vertex_count(); }
    const IndecEntry& entry(std::size_t i) const { return entries_.at(i); }
    const std::vector<IndecEntry>& entries() const noexcept { return entries_; }

    int hom(std::size_t i, std::size_t j) const { return hom_.at(i * size() + j); }
    int ext(std::size_t i, std::size_t j) const { return ext_.at(i * size() + j); }
    const HomSpace& hom_basis(std::size_t i, std::size_t j) const { return hom_bases_.at(i * size() + j); }

    const std::vector<ArArrow>& ar_arrows() const noexcept { return ar_arrows_; }

    std::string label(std::size_t i) const { return entries_.at(i).dim.str(); }
    Component component(std::size_t) const { return Component::Transjective; }

    std::optional<std::size_t> find(const DimensionVector& d) const {
        auto it = by_dim_.find(d);
        if (it == by_dim_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t projective(Vertex v) const { return projective_.at(v); }
    std::size_t injective(Vertex v) const { return injective_.at(v); }

    std::vector<std::size_t> projectives() const { return projective_; }
    std::vector<std::size_t> injectives() const { return injective_; }

    /// tau_D(M@d) = (tau M)@d for M non-projective, tau_D(P_v@d) = I_v@(d-1).
    std::optional<DerivedObject> tau_derived(DerivedObject x) const {
        const auto& e = entries_.at(x.indec);
        if (e.tau) return DerivedObject{*e.tau, x.degree};
        return DerivedObject{injective_.at(*e.projective_at), x.degree - 1};
    }

    std::optional<DerivedObject> tau_inverse_derived(DerivedObject x) const {
        const auto& e = entries_.at(x.indec);
        if (e.tau_inverse) return DerivedObject{*e.tau_inverse, x.degree};
        return DerivedObject{projective_.at(*e.injective_at), x.degree + 1};
    }

    /// Copy of the table with one Hom entry replaced; skips validation. Used
    /// to build deliberately corrupted fixtures for the verification harness.
    IndecTable with_hom_override(std::size_t i, std::size_t j, int value) const {
        IndecTable t = *this;
        t.hom_.at(i * size() + j) = value;
        return t;
    }

private:
    friend IndecTable enumerate_indecomposables(const Quiver& q);
    IndecTable() = default;

    Quiver quiver_;
    DynkinType type_{DynkinFamily::A, 0};
    std::vector<IndecEntry> entries_;
    std::map<DimensionVector, std::size_t> by_dim_;
    std::vector<int> hom_;
    std::vector<int> ext_;
    std::vector<HomSpace> hom_bases_;
    std::vector<std::size_t> projective_;
    std::vector<std::size_t> injective_;
    std::vector<ArArrow> ar_arrows_;
};

/// dim Ext^1(M, N) from the table: hom - <dim M, dim N>.
inline int ext_dim(std::size_t m, std::size_t n, const IndecTable& t) {
    const int e = t.hom(m, n) - euler_form(t.quiver(), t.entry(m).dim, t.entry(n).dim);
    if (e < 0)
        throw ConsistencyError("negative Ext dimension between " + t.label(m) + " and " + t.label(n));
    return e;
}

inline std::optional<std::size_t> tau(std::size_t m, const IndecTable& t) { return t.entry(m).tau; }

/// dim rad(i, j) / rad^2(i, j) computed from explicit Hom bases: compositions
/// through every third indecomposable span rad^2.
inline std::size_t irreducible_dimension(const IndecTable& t, std::size_t i, std::size_t j) {
    if (i == j) return 0;  // End is k for Dynkin modules, so rad(i, i) = 0
    const auto& direct = t.hom_basis(i, j);
    if (direct.dimension() == 0) return 0;
    std::vector<std::vector<Rational>> products;
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k == i || k == j) continue;
        const auto& first = t.hom_basis(i, k);
        const auto& second = t.hom_basis(k, j);
        for (const auto& f : first.basis)
            for (const auto& g : second.basis) products.push_back(flatten(compose(g, f)));
    }
    const std::size_t length = flatten(direct.basis.front()).size();
    return direct.dimension() - span_rank(products, length);
}

namespace detail {

inline void fail(const std::string& what) { throw ConsistencyError(what); }

inline bool is_positive_root_vector(const std::vector<int>& d) {
    bool nonzero = false;
    for (int x : d) {
        if (x < 0) return false;
        nonzero |= x > 0;
    }
    return nonzero;
}

inline bool is_negative_root_vector(const std::vector<int>& d) {
    bool nonzero = false;
    for (int x : d) {
        if (x > 0) return false;
        nonzero |= x < 0;
    }
    return nonzero;
}

}  // namespace detail

/// Gabriel's construction: projectives from simples by reflecting back along
/// an admissible sink order, then the Coxeter functor C^- until it vanishes.
/// Throws UnsupportedError for non-Dynkin quivers.
inline IndecTable enumerate_indecomposables(const Quiver& q) {
    q.validate();
    const auto type = classify_dynkin(q);
    if (!type)
        throw UnsupportedError(
            "quiver is not of Dynkin type; representation-infinite quivers are handled by the kronecker model");

    IndecTable t;
    t.quiver_ = q;
    t.type_ = *type;
    const std::size_t n = q.vertex_count();

    const auto order = q.admissible_sink_order();
    std::vector<Quiver> stage{q};  // stage[k] = s_{v_k} ... s_{v_1} Q
    for (std::size_t k = 0; k < n; ++k) stage.push_back(stage.back().reflected_at(order[k]));

    std::vector<Representation> reps;
    std::vector<std::optional<Vertex>> proj_at;
    for (std::size_t i = 0; i < n; ++i) {
        Representation m = Representation::simple(stage[i], order[i]);
        for (std::size_t k = i; k-- > 0;) m = reflect(stage[k + 1], m, order[k]);
        check_shape(q, m);
        reps.push_back(m);
        proj_at.push_back(order[i]);
    }
    // tau^{-1} = C^- = S^-_{v_1} ... S^-_{v_n}
    const std::size_t limit = type->positive_roots();
    for (std::size_t cursor = 0; cursor < reps.size(); ++cursor) {
        if (reps.size() > limit) detail::fail("reflection functors produced too many indecomposables");
        Representation m = reps[cursor];
        bool vanished = false;
        for (std::size_t k = n; k-- > 0;) {
            m = reflect(stage[k + 1], m, order[k]);
            if (m.is_zero()) {
                vanished = true;
                break;
            }
        }
        if (!vanished) {
            reps.push_back(std::move(m));
            proj_at.push_back(std::nullopt);
        }
    }

    if (reps.size() != type->positive_roots())
        detail::fail("expected " + std::to_string(type->positive_roots()) + " indecomposables, built " +
                     std::to_string(reps.size()));

    // Canonical order: by total dimension, then lexicographically.
    std::vector<std::size_t> perm(reps.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
        const auto da = reps[a].dimension_vector(), db = reps[b].dimension_vector();
        if (da.total() != db.total()) return da.total() < db.total();
        return da < db;
    });
    t.projective_.assign(n, 0);
    for (auto p : perm) {
        IndecEntry e;
        e.dim = reps[p].dimension_vector();
        e.rep = reps[p];
        e.projective_at = proj_at[p];
        if (!t.by_dim_.emplace(e.dim, t.entries_.size()).second)
            detail::fail("two indecomposables share dimension vector " + e.dim.str());
        if (e.projective_at) t.projective_[*e.projective_at] = t.entries_.size();
        t.entries_.push_back(std::move(e));
    }
    const std::size_t size = t.entries_.size();

    // Hom bases and dimensions; Ext both from the Euler form and from the
    // cokernel of the commutation map.
    t.hom_.assign(size * size, 0);
    t.ext_.assign(size * size, 0);
    t.hom_bases_.resize(size * size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            t.hom_bases_[i * size + j] = hom_space(q, t.entries_[i].rep, t.entries_[j].rep);
            t.hom_[i * size + j] = static_cast<int>(t.hom_bases_[i * size + j].dimension());
        }
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            const int e = ext_dim(i, j, t);
            const auto cok = ext_dimension_by_cokernel(q, t.entries_[i].rep, t.entries_[j].rep);
            if (static_cast<std::size_t>(e) != cok)
                detail::fail("Ext(" + t.label(i) + ", " + t.label(j) + "): Euler form gives " + std::to_string(e) +
                             ", cokernel gives " + std::to_string(cok));
            t.ext_[i * size + j] = e;
        }

    // tau on dimension vectors through the Coxeter transformation.
    const Coxeter phi(q);
    t.injective_.assign(n, 0);
    for (std::size_t i = 0; i < size; ++i) {
        auto& e = t.entries_[i];
        const auto image = phi.apply(e.dim.coords);
        if (detail::is_positive_root_vector(image)) {
            const auto target = t.find(DimensionVector(image));
            if (!target) detail::fail("Coxeter image of " + e.dim.str() + " is not an indecomposable");
            e.tau = *target;
        } else if (detail::is_negative_root_vector(image)) {
            if (!e.projective_at) detail::fail(e.dim.str() + " has negative Coxeter image but was not built as projective");
            e.is_projective = true;
            std::vector<int> inj(n);
            for (std::size_t v = 0; v < n; ++v) inj[v] = -image[v];
            const auto target = t.find(DimensionVector(inj));
            if (!target) detail::fail("Nakayama image of " + e.dim.str() + " is not an indecomposable");
            t.injective_[*e.projective_at] = *target;
        } else {
            detail::fail("Coxeter image of " + e.dim.str() + " has mixed signs");
        }
        if (e.projective_at && !e.is_projective) detail::fail("P_" + q.vertex_name(*e.projective_at) + " has a translate");
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& inj = t.entries_[t.injective_[v]];
        if (inj.injective_at) detail::fail("injective " + inj.dim.str() + " assigned twice");
        inj.injective_at = v;
        inj.is_injective = true;
    }
    for (std::size_t i = 0; i < size; ++i)
        if (const auto tt = t.entries_[i].tau) t.entries_[*tt].tau_inverse = i;
    for (std::size_t i = 0; i < size; ++i) {
        const auto& e = t.entries_[i];
        if (e.is_injective == e.tau_inverse.has_value()) detail::fail("tau^{-1} undefined off the injectives at " + e.dim.str());
        if (e.tau_inverse) {
            const auto back = phi.apply_inverse(e.dim.coords);
            if (DimensionVector(back) != t.entries_[*e.tau_inverse].dim)
                detail::fail("inverse Coxeter transformation disagrees at " + e.dim.str());
        }
    }

    // AR formula, rigidity.
    for (std::size_t i = 0; i < size; ++i) {
        if (t.hom(i, i) != 1 || t.ext(i, i) != 0) detail::fail(t.label(i) + " is not a brick without self-extensions");
        for (std::size_t j = 0; j < size; ++j) {
            const auto ti = t.entries_[i].tau;
            const int expected = ti ? t.hom(j, *ti) : 0;
            if (t.ext(i, j) != expected)
                detail::fail("AR formula fails: Ext(" + t.label(i) + ", " + t.label(j) + ") = " + std::to_string(t.ext(i, j)) +
                             " but Hom(" + t.label(j) + ", tau " + t.label(i) + ") = " + std::to_string(expected));
        }
    }

    // Knitting: radical inclusions among projectives, then meshes.
    std::set<ArArrow> arrows;
    for (const auto& a : q.arrows()) arrows.emplace(t.projective_[a.target], t.projective_[a.source]);
    for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t y = 0; y < size; ++y) {
            const auto ty = t.entries_[y].tau;
            if (!ty) continue;
            for (const auto& [from, to] : std::vector<ArArrow>(arrows.begin(), arrows.end()))
                if (from == *ty && arrows.emplace(to, y).second) grew = true;
        }
    }
    t.ar_arrows_.assign(arrows.begin(), arrows.end());

    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) {
            const std::size_t irr = irreducible_dimension(t, i, j);
            const bool knitted = arrows.count({i, j}) > 0;
            if (irr > 1 || knitted != (irr == 1))
                detail::fail("AR arrow " + t.label(i) + " -> " + t.label(j) + ": knitting says " +
                             (knitted ? "present" : "absent") + ", rad/rad^2 has dimension " + std::to_string(irr));
        }
    return t;
}

/// The table's invariants recomputed from its stored numbers (no linear
/// algebra). Used by the verification harness, which may be handed a table
/// patched through with_hom_override.
inline std::vector<Check> check_table_invariants(const IndecTable& t) {
    auto euler = Check::ok("hom - ext = euler_form"), ar = Check::ok("ext(M,N) = hom(N, tau M)"),
         rigid = Check::ok("hom(M,M) = 1, ext(M,M) = 0"), count = Check::ok("entry count = positive roots");
    const std::size_t n = t.size();
    if (n != t.type().positive_roots()) count.fail(std::to_string(n) + " entries");
    for (std::size_t i = 0; i < n; ++i) {
        if (t.hom(i, i) != 1 || t.ext(i, i) != 0) rigid.fail(t.label(i));
        for (std::size_t j = 0; j < n; ++j) {
            const int e = euler_form(t.quiver(), t.entry(i).dim, t.entry(j).dim);
            if (t.hom(i, j) - t.ext(i, j) != e)
                euler.fail("(" + t.label(i) + ", " + t.label(j) + "): hom " + std::to_string(t.hom(i, j)) + ", ext " +
                           std::to_string(t.ext(i, j)) + ", euler " + std::to_string(e));
            const auto ti = t.entry(i).tau;
            const int expected = ti ? t.hom(j, *ti) : 0;
            if (t.ext(i, j) != expected)
                ar.fail("(" + t.label(i) + ", " + t.label(j) + "): ext " + std::to_string(t.ext(i, j)) +
                        ", hom(N, tau M) " + std::to_string(expected));
        }
    }
    return {count, euler, ar, rigid};
}

}  // namespace splitt
