#pragma once

// Verification suites behind `splitt verify`. Each returns a Report; a suite
// passes iff every check in it passes.

#include <string>
#include <vector>

#include "splitt/derived.hpp"
#include "splitt/errors.hpp"
#include "splitt/indec_table.hpp"
#include "splitt/kronecker.hpp"
#include "splitt/report.hpp"
#include "splitt/torsion.hpp"
#include "splitt/transport.hpp"
#include "splitt/tstruct.hpp"

namespace splitt {

inline const std::vector<std::string>& dynkin_suites() {
    static const std::vector<std::string> s{"table", "torsion", "roundtrip", "classify", "lemma4", "cor64"};
    return s;
}

inline const std::vector<std::string>& kronecker_suites() {
    static const std::vector<std::string> s{"63b", "53"};
    return s;
}

inline std::string pair_name(const TorsionPair& tp, const IndecTable& t) {
    std::string s = "T={";
    bool first = true;
    for (auto i : tp.torsion.ids()) {
        s += (first ? "" : " ") + t.label(i);
        first = false;
    }
    return s + "}";
}

inline Report suite_table(const IndecTable& t) {
    return {{"indecomposables " + t.type().name(), {std::to_string(t.size()) + " entries"}, check_table_invariants(t)}};
}

inline Report suite_torsion(const IndecTable& t) {
    Report r;
    const auto pairs = enumerate_torsion_pairs(t);
    ReportEntry summary{"torsion pairs", {std::to_string(pairs.size()) + " pairs"}, {}};
    auto agree = Check::ok("brute force and NextClosure agree");
    if (t.size() <= 24 && enumerate_torsion_pairs_next_closure(t) != enumerate_torsion_pairs_brute_force(t))
        agree.fail("enumerations differ");
    summary.checks.push_back(agree);
    r.push_back(std::move(summary));
    for (const auto& tp : pairs) {
        ReportEntry e{pair_name(tp, t), {tp.split ? "split" : "non-split"}, {check_torsion_pair(tp, t)}};
        auto seq = Check::ok("canonical sequence");
        for (std::size_t y = 0; y < t.size(); ++y)
            if (auto cs = canonical_sequence_oracle(y, tp, t); cs.falsification) seq.fail(*cs.falsification);
        e.checks.push_back(seq);
        r.push_back(std::move(e));
    }
    return r;
}

inline Report suite_roundtrip(const IndecTable& t, Window w) {
    Report r;
    for (const auto& tp : enumerate_torsion_pairs(t)) {
        const auto ts = lift(tp, t, w);
        auto tl = Check::ok("trace(lift(x)) = x"), lt = Check::ok("lift(trace(U)) = U"),
             split = Check::ok("split preserved"), aisle = Check::ok("lift is an aisle");
        const auto back = trace(ts, t);
        if (!(back == tp)) tl.fail("trace differs");
        if (!lift(back, t, w).aisle.equal_on_interior(ts.aisle)) lt.fail("aisle differs");
        if (tp.split != ts.split) split.fail(tp.split ? "lift is not split" : "lift is split");
        if (auto v = is_aisle_window(ts.aisle, t); !v) aisle.fail(v.reason);
        r.push_back({pair_name(tp, t), {tp.split ? "split" : "non-split"}, {tl, lt, split, aisle}});
    }
    return r;
}

inline Report suite_classify(const IndecTable& t, Window w) {
    Report r;
    const DerivedArQuiver g(t, w);
    for (auto& sc : classify_split(t, g)) {
        ReportEntry e{describe(sc.ts.aisle, t), {sc.label}, sc.checks};
        auto cor62 = Check::ok("|E| in {0, |Q_0|}");
        const auto n = sc.ext_projectives.size();
        if (sc.label != "boundary" && n != 0 && n != t.rank()) cor62.fail(std::to_string(n) + " Ext-projectives");
        e.checks.push_back(cor62);
        r.push_back(std::move(e));
    }
    return r;
}

inline Report suite_lemma4(const IndecTable& t, Window w) {
    Report r;
    for (const auto& tp : enumerate_torsion_pairs(t)) {
        if (!tp.split) continue;
        const auto ts = lift(tp, t, w);
        r.push_back({pair_name(tp, t), {"lift"}, {verify_lemma42(ts, t), verify_lemma41(ts, t)}});
    }
    const DerivedArQuiver g(t, w);
    for (const auto& sc : classify_split(t, g))
        r.push_back({describe(sc.ts.aisle, t), {sc.label}, {verify_lemma42(sc.ts, t), verify_lemma41(sc.ts, t)}});
    return r;
}

inline Report suite_cor64(const IndecTable& t, Window w) {
    Report r;
    const DerivedArQuiver g(t, w);
    for (const auto& sc : classify_split(t, g))
        if (sc.label == "section")
            r.push_back({describe(sc.ts.aisle, t), {sc.label}, verify_cor64(sc.ext_projectives, sc.ts, t)});
    return r;
}

/// Runs one named suite, or every Dynkin suite for "all".
inline Report run_suite(const std::string& name, const IndecTable& t, Window w) {
    if (name == "all") {
        Report r;
        for (const auto& s : dynkin_suites()) {
            auto part = run_suite(s, t, w);
            for (auto& e : part) e.labels.insert(e.labels.begin(), "suite:" + s);
            r.insert(r.end(), part.begin(), part.end());
        }
        return r;
    }
    if (name == "table") return suite_table(t);
    if (name == "torsion") return suite_torsion(t);
    if (name == "roundtrip") return suite_roundtrip(t, w);
    if (name == "classify") return suite_classify(t, w);
    if (name == "lemma4") return suite_lemma4(t, w);
    if (name == "cor64") return suite_cor64(t, w);
    throw UsageError("unknown suite '" + name + "' for a Dynkin quiver");
}

inline Report run_suite(const std::string& name, const TameModel& m, const std::vector<std::size_t>& tilting) {
    if (name == "all") {
        Report r;
        for (const auto& s : kronecker_suites()) {
            auto part = run_suite(s, m, tilting);
            for (auto& e : part) e.labels.insert(e.labels.begin(), "suite:" + s);
            r.insert(r.end(), part.begin(), part.end());
        }
        return r;
    }
    if (name == "63b") return verify_63b(m).report;
    if (name == "53") return verify_theorem53(m, tilting).report;
    throw UsageError("unknown suite '" + name + "' for the Kronecker model");
}

}  // namespace splitt
