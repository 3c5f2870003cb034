#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace splitt {

struct Check {
    std::string name;
    bool pass = true;
    std::optional<std::string> witness;

    static Check ok(std::string name) { return {std::move(name), true, std::nullopt}; }

    /// Records the first failure only.
    void fail(std::string w) {
        if (!pass) return;
        pass = false;
        witness = std::move(w);
    }
};

/// One verified structure: a name, free-form classification labels and the
/// checks run on it.
struct ReportEntry {
    std::string structure;
    std::vector<std::string> labels;
    std::vector<Check> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

using Report = std::vector<ReportEntry>;

inline bool all_pass(const Report& r) {
    for (const auto& e : r)
        if (!e.pass()) return false;
    return true;
}

}  // namespace splitt
