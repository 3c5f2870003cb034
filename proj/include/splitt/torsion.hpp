#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "splitt/errors.hpp"
#include "splitt/indec_table.hpp"
#include "splitt/model.hpp"
#include "splitt/report.hpp"

namespace splitt {

/// Full subcategory of mod H given by a set of indecomposable ids.
class Subcategory {
public:
    Subcategory() = default;
    explicit Subcategory(std::size_t universe) : bits_(universe) {}
    Subcategory(std::size_t universe, std::initializer_list<std::size_t> ids) : bits_(universe) {
        for (auto i : ids) insert(i);
    }

    static Subcategory all(std::size_t universe) {
        Subcategory s(universe);
        s.bits_.set();
        return s;
    }

    static Subcategory from_mask(std::size_t universe, std::uint64_t mask) {
        Subcategory s(universe);
        for (std::size_t i = 0; i < universe; ++i)
            if (mask >> i & 1U) s.insert(i);
        return s;
    }

    std::size_t universe() const noexcept { return bits_.size(); }
    bool contains(std::size_t i) const { return bits_.test(i); }
    void insert(std::size_t i) { bits_.set(i); }
    void erase(std::size_t i) { bits_.reset(i); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }
    const boost::dynamic_bitset<>& bits() const noexcept { return bits_; }

    std::vector<std::size_t> ids() const {
        std::vector<std::size_t> out;
        for (auto k = bits_.find_first(); k != boost::dynamic_bitset<>::npos; k = bits_.find_next(k)) out.push_back(k);
        return out;
    }

    bool is_subset_of(const Subcategory& o) const { return bits_.is_subset_of(o.bits_); }

    friend Subcategory operator&(const Subcategory& a, const Subcategory& b) {
        Subcategory s;
        s.bits_ = a.bits_ & b.bits_;
        return s;
    }
    friend Subcategory operator|(const Subcategory& a, const Subcategory& b) {
        Subcategory s;
        s.bits_ = a.bits_ | b.bits_;
        return s;
    }
    Subcategory complement() const {
        Subcategory s;
        s.bits_ = ~bits_;
        return s;
    }

    friend bool operator==(const Subcategory&, const Subcategory&) = default;

    /// Order by the membership bitmask read as a binary number (bit i = id i).
    friend bool mask_less(const Subcategory& a, const Subcategory& b) {
        for (std::size_t k = a.universe(); k-- > 0;)
            if (a.contains(k) != b.contains(k)) return b.contains(k);
        return false;
    }

private:
    boost::dynamic_bitset<> bits_;
};

struct TorsionPair {
    Subcategory torsion;
    Subcategory free;
    bool split = false;

    friend bool operator==(const TorsionPair&, const TorsionPair&) = default;
};

/// All j with hom(i, j) = 0 for every i in s.
template <class M>
Subcategory right_orth(const Subcategory& s, const M& m) {
    Subcategory out(m.size());
    for (std::size_t j = 0; j < m.size(); ++j) {
        bool ok = true;
        for (auto i : s.ids())
            if (m.hom(i, j) != 0) {
                ok = false;
                break;
            }
        if (ok) out.insert(j);
    }
    return out;
}

/// All i with hom(i, j) = 0 for every j in s.
template <class M>
Subcategory left_orth(const Subcategory& s, const M& m) {
    Subcategory out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        bool ok = true;
        for (auto j : s.ids())
            if (m.hom(i, j) != 0) {
                ok = false;
                break;
            }
        if (ok) out.insert(i);
    }
    return out;
}

/// The pair (left(F), F) for F = right(t); split when it covers everything.
template <class M>
TorsionPair torsion_pair_generated_by(const Subcategory& t, const M& m) {
    TorsionPair tp;
    tp.free = right_orth(t, m);
    tp.torsion = left_orth(tp.free, m);
    tp.split = (tp.torsion | tp.free).count() == m.size();
    return tp;
}

/// Checks T = ^perp F, F = T^perp, Hom(T, F) = 0 and the split flag.
template <class M>
Check check_torsion_pair(const TorsionPair& tp, const M& m) {
    auto c = Check::ok("torsion pair");
    for (auto i : tp.torsion.ids())
        for (auto j : tp.free.ids())
            if (m.hom(i, j) != 0) c.fail("hom(" + m.label(i) + ", " + m.label(j) + ") != 0");
    if (!(right_orth(tp.torsion, m) == tp.free)) c.fail("free class is not the right orthogonal of the torsion class");
    if (!(left_orth(tp.free, m) == tp.torsion)) c.fail("torsion class is not the left orthogonal of the free class");
    if (tp.split != ((tp.torsion | tp.free).count() == m.size())) c.fail("split flag is wrong");
    return c;
}

namespace detail {

template <class M>
std::vector<std::uint64_t> hom_out_masks(const M& m) {
    std::vector<std::uint64_t> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m.hom(i, j) != 0) out[i] |= std::uint64_t{1} << j;
    return out;
}

}  // namespace detail

/// Every subset T with T = ^perp(T^perp), by a plain scan over all 2^n
/// subsets with bit-parallel Hom masks. Requires n <= 24.
template <class M>
std::vector<TorsionPair> enumerate_torsion_pairs_brute_force(const M& m) {
    const std::size_t n = m.size();
    if (n > 24) throw UsageError("brute-force torsion enumeration is limited to 24 indecomposables");
    const auto out_mask = detail::hom_out_masks(m);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<TorsionPair> pairs;
    for (std::uint64_t t = 0; t <= full; ++t) {
        std::uint64_t hit = 0;
        for (std::uint64_t r = t; r; r &= r - 1) hit |= out_mask[static_cast<std::size_t>(__builtin_ctzll(r))];
        const std::uint64_t f = full & ~hit;
        std::uint64_t closure = 0;
        for (std::size_t i = 0; i < n; ++i)
            if ((out_mask[i] & f) == 0) closure |= std::uint64_t{1} << i;
        if (closure != t) continue;
        pairs.push_back({Subcategory::from_mask(n, t), Subcategory::from_mask(n, f), (t | f) == full});
    }
    return pairs;
}

/// Ganter's NextClosure over the closure operator T -> ^perp(T^perp).
/// Output in canonical (bitmask) order.
template <class M>
std::vector<TorsionPair> enumerate_torsion_pairs_next_closure(const M& m) {
    const std::size_t n = m.size();
    auto close = [&](const Subcategory& s) { return left_orth(right_orth(s, m), m); };
    std::vector<TorsionPair> pairs;
    // Lectic order with element n-1 most significant matches the bitmask order.
    Subcategory a = close(Subcategory(n));
    for (;;) {
        pairs.push_back(torsion_pair_generated_by(a, m));
        bool advanced = false;
        for (std::size_t i = 0; i < n && !advanced; ++i) {
            if (a.contains(i)) continue;
            Subcategory probe(n);
            for (std::size_t k = i + 1; k < n; ++k)
                if (a.contains(k)) probe.insert(k);
            probe.insert(i);
            const Subcategory b = close(probe);
            bool lectic = true;
            for (std::size_t k = i + 1; k < n; ++k)
                if (b.contains(k) != a.contains(k)) lectic = false;
            if (!lectic) continue;
            a = b;
            advanced = true;
        }
        if (!advanced) break;
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const TorsionPair& x, const TorsionPair& y) { return mask_less(x.torsion, y.torsion); });
    return pairs;
}

/// All torsion pairs, sorted by torsion bitmask. Brute force up to 24
/// indecomposables, NextClosure beyond.
template <class M>
std::vector<TorsionPair> enumerate_torsion_pairs(const M& m) {
    return m.size() <= 24 ? enumerate_torsion_pairs_brute_force(m) : enumerate_torsion_pairs_next_closure(m);
}

struct CanonicalSequence {
    Representation trace;
    Representation quotient;
    std::optional<std::string> falsification;
};

/// 0 -> t(Y) -> Y -> Y/t(Y) -> 0 computed from explicit representations:
/// t(Y) is the sum of the images of all morphisms from torsion
/// indecomposables. Certifies Hom(t(Y), F) = 0 and Hom(T, Y/t(Y)) = 0.
inline CanonicalSequence canonical_sequence_oracle(std::size_t y, const TorsionPair& tp, const IndecTable& t) {
    const auto& q = t.quiver();
    const auto& ry = t.entry(y).rep;
    std::vector<Matrix> spans(q.vertex_count());
    for (Vertex v = 0; v < q.vertex_count(); ++v) spans[v] = Matrix(ry.dims[v], 0);
    for (auto x : tp.torsion.ids())
        for (const auto& f : t.hom_basis(x, y).basis)
            for (Vertex v = 0; v < q.vertex_count(); ++v) spans[v] = hconcat(spans[v], f[v]);
    std::vector<Matrix> bases(q.vertex_count());
    for (Vertex v = 0; v < q.vertex_count(); ++v)
        bases[v] = spans[v].cols() == 0 ? Matrix(ry.dims[v], 0) : column_space_basis(spans[v]);

    CanonicalSequence out;
    auto sq = sub_and_quotient(q, ry, bases);
    out.trace = std::move(sq.sub);
    out.quotient = std::move(sq.quotient);
    for (auto f : tp.free.ids())
        if (hom_space(q, out.trace, t.entry(f).rep).dimension() != 0 && !out.falsification)
            out.falsification = "Hom(t(" + t.label(y) + "), " + t.label(f) + ") != 0";
    for (auto x : tp.torsion.ids())
        if (hom_space(q, t.entry(x).rep, out.quotient).dimension() != 0 && !out.falsification)
            out.falsification = "Hom(" + t.label(x) + ", " + t.label(y) + "/t) != 0";
    return out;
}

}  // namespace splitt
