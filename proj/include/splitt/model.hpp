#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "splitt/errors.hpp"

namespace splitt {

/// A stalk complex: the indecomposable module `indec` placed in `degree`
/// (degree d means the shift M[d]).
struct DerivedObject {
    std::size_t indec = 0;
    int degree = 0;

    friend auto operator<=>(const DerivedObject& a, const DerivedObject& b) {
        if (auto c = a.degree <=> b.degree; c != 0) return c;
        return a.indec <=> b.indec;
    }
    friend bool operator==(const DerivedObject&, const DerivedObject&) = default;
};

inline DerivedObject shift(DerivedObject x, int s) { return {x.indec, x.degree + s}; }

/// Finite degree range [lo, hi] standing in for D^b. Degrees strictly
/// between lo and hi are interior; verifiers only make claims there.
struct Window {
    int lo = -2;
    int hi = 3;

    void validate() const {
        if (lo > 0 || hi < 0) throw UsageError("window must contain degree 0");
        if (hi - lo < 2) throw UsageError("window must span at least three degrees");
    }

    std::size_t degree_count() const { return static_cast<std::size_t>(hi - lo + 1); }
    bool contains(int d) const { return lo <= d && d <= hi; }
    bool interior(int d) const { return lo < d && d < hi; }

    /// "lo..hi", e.g. "-2..3".
    static Window parse(std::string_view text) {
        const auto dots = text.find("..");
        if (dots == std::string_view::npos) throw UsageError("window must look like lo..hi");
        try {
            Window w{std::stoi(std::string(text.substr(0, dots))), std::stoi(std::string(text.substr(dots + 2)))};
            w.validate();
            return w;
        } catch (const std::invalid_argument&) {
            throw UsageError("window must look like lo..hi");
        } catch (const std::out_of_range&) {
            throw UsageError("window bound out of range");
        }
    }

    std::string str() const { return std::to_string(lo) + ".." + std::to_string(hi); }

    friend bool operator==(const Window&, const Window&) = default;
};

/// Position of an indecomposable module in the AR quiver of mod H.
/// Representation-finite algebras have a single component containing both
/// the projectives and the injectives; it is reported as Transjective.
enum class Component { Postprojective, Regular, Preinjective, Transjective };

inline bool is_postprojective(Component c) { return c == Component::Postprojective || c == Component::Transjective; }
inline bool is_preinjective(Component c) { return c == Component::Preinjective || c == Component::Transjective; }

/// What the derived-category machinery needs from a hereditary module
/// category: a finite list of (represented) indecomposables with Hom and
/// Ext^1 dimensions and the derived AR translate. The Dynkin IndecTable and
/// the truncated Kronecker model both satisfy it.
template <class M>
concept HereditaryModel = requires(const M& m, std::size_t i, DerivedObject x) {
    { m.size() } -> std::convertible_to<std::size_t>;
    { m.rank() } -> std::convertible_to<std::size_t>;
    { m.hom(i, i) } -> std::convertible_to<int>;
    { m.ext(i, i) } -> std::convertible_to<int>;
    { m.label(i) } -> std::convertible_to<std::string>;
    { m.component(i) } -> std::same_as<Component>;
    { m.tau_derived(x) } -> std::same_as<std::optional<DerivedObject>>;
    { m.tau_inverse_derived(x) } -> std::same_as<std::optional<DerivedObject>>;
};

template <HereditaryModel M>
std::string object_label(const M& m, DerivedObject x) {
    return m.label(x.indec) + "@" + std::to_string(x.degree);
}

}  // namespace splitt
