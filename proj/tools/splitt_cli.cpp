// splitt: command-line front end.
// Exit codes: 0 success, 1 verification failure, 2 usage or load error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "splitt/splitt.hpp"

using json = nlohmann::ordered_json;
using namespace splitt;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Config {
    std::string quiver_file;
    std::string builtin;
    std::string window = "-2..3";
    std::size_t tubes = 3;
    int tube_depth = 3;
    int range = 6;
    bool split_only = false;
    std::string suite = "all";
    std::string torsion;
    std::string aisle_file;
    std::string color_file;
    std::string tilting;
    std::string table_patch;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    }
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!detail::trim(item).empty()) out.push_back(detail::trim(item));
    return out;
}

bool is_kronecker(const Quiver& q) {
    return q.vertex_count() == 2 && q.arrows().size() == 2 && q.arrows()[0].source == q.arrows()[1].source &&
           q.arrows()[0].target == q.arrows()[1].target;
}

/// The loaded input: a Dynkin table or the Kronecker model.
struct Loaded {
    std::optional<IndecTable> table;
    std::optional<TameModel> kronecker;
    Window window;
};

Loaded load(const Config& c) {
    if (c.quiver_file.empty() == c.builtin.empty()) throw UsageError("give exactly one of --quiver and --builtin");
    Loaded l;
    l.window = Window::parse(c.window);
    Quiver q;
    try {
        q = c.quiver_file.empty() ? builtin_quiver(c.builtin) : parse_quiver(read_file(c.quiver_file));
    } catch (const ParseError& e) {
        throw UsageError(std::string(c.quiver_file) + ": " + e.what());
    }
    if (is_kronecker(q)) {
        l.kronecker.emplace(c.tubes, c.tube_depth, c.range, l.window);
        return l;
    }
    l.table.emplace(enumerate_indecomposables(q));
    if (!c.table_patch.empty()) {
        const auto patch = read_json(c.table_patch);
        if (!patch.is_object() || !patch.contains("hom_overrides") || !patch["hom_overrides"].is_array())
            throw UsageError("table patch needs a 'hom_overrides' array");
        for (const auto& o : patch["hom_overrides"]) {
            try {
                const auto src = l.table->find(DimensionVector(o.at("source").get<std::vector<int>>()));
                const auto tgt = l.table->find(DimensionVector(o.at("target").get<std::vector<int>>()));
                if (!src || !tgt) throw UsageError("table patch names an unknown dimension vector");
                *l.table = l.table->with_hom_override(*src, *tgt, o.at("value").get<int>());
            } catch (const json::exception& e) {
                throw UsageError(std::string("malformed table patch entry: ") + e.what());
            }
        }
    }
    return l;
}

const IndecTable& need_table(const Loaded& l, const std::string& cmd) {
    if (!l.table) throw UsageError(cmd + " needs a Dynkin quiver (representation-finite input)");
    return *l.table;
}

json dim_json(const IndecTable& t, std::size_t i) { return t.entry(i).dim.coords; }

json ids_json(const IndecTable& t, const Subcategory& s) {
    json a = json::array();
    for (auto i : s.ids()) a.push_back(dim_json(t, i));
    return a;
}

json pair_json(const IndecTable& t, const TorsionPair& tp) {
    return {{"torsion", ids_json(t, tp.torsion)}, {"free", ids_json(t, tp.free)}, {"split", tp.split}};
}

json object_json(const IndecTable& t, DerivedObject x) { return {{"dim", dim_json(t, x.indec)}, {"degree", x.degree}}; }

json object_json(const TameModel& m, DerivedObject x) {
    const auto d = m.module(x.indec).dim();
    return {{"name", m.label(x.indec)}, {"dim", {d.first, d.second}}, {"degree", x.degree}};
}

template <class M>
json objects_json(const M& m, const std::vector<DerivedObject>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(object_json(m, x));
    return a;
}

template <class M>
json subcategory_json(const M& m, const DerivedSubcategory& s) {
    return {{"objects", objects_json(m, s.members())}, {"upper_tail", s.upper_tail}, {"lower_tail", s.lower_tail}};
}

json tstructure_json(const IndecTable& t, const TStructure& ts) {
    return {{"window", ts.window().str()},
            {"aisle", subcategory_json(t, ts.aisle)},
            {"perp", subcategory_json(t, ts.perp)},
            {"heart", objects_json(t, ts.heart.members())},
            {"split", ts.split}};
}

json report_json(const Report& r) {
    json a = json::array();
    for (const auto& e : r) {
        json checks = json::array();
        for (const auto& c : e.checks) {
            json jc{{"name", c.name}, {"pass", c.pass}};
            if (c.witness) jc["witness"] = *c.witness;
            checks.push_back(std::move(jc));
        }
        a.push_back({{"structure", e.structure}, {"labels", e.labels}, {"checks", std::move(checks)}});
    }
    return a;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int emit_report(const Report& r) {
    emit(report_json(r));
    if (all_pass(r)) return kOk;
    for (const auto& e : r)
        for (const auto& c : e.checks)
            if (!c.pass) {
                std::cerr << "verification failed: " << e.structure << ": " << c.name << ": " << c.witness.value_or("")
                          << '\n';
                return kFailed;
            }
    return kFailed;
}

/// {"objects": [{"dim": [..], "degree": d}, ...], "from_degree": k, "upper_tail": b, "lower_tail": b}
DerivedSubcategory read_subcategory(const json& j, const IndecTable& t, Window w) {
    if (!j.is_object()) throw UsageError("subcategory file must hold a JSON object");
    DerivedSubcategory s(w, t.size());
    try {
        if (j.contains("from_degree")) {
            s = DerivedSubcategory::degrees_from(w, t.size(), j.at("from_degree").get<int>());
        }
        for (const auto& o : j.value("objects", json::array())) {
            const auto id = t.find(DimensionVector(o.at("dim").get<std::vector<int>>()));
            if (!id) throw UsageError("unknown dimension vector in subcategory file");
            const int d = o.at("degree").get<int>();
            if (!w.contains(d)) throw UsageError("degree " + std::to_string(d) + " is outside the window");
            s.insert({*id, d});
        }
        if (j.contains("upper_tail")) s.upper_tail = j.at("upper_tail").get<bool>();
        if (j.contains("lower_tail")) s.lower_tail = j.at("lower_tail").get<bool>();
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed subcategory file: ") + e.what());
    }
    return s;
}

Subcategory parse_dimvec_set(const std::string& text, const IndecTable& t) {
    Subcategory s(t.size());
    for (const auto& item : split_list(text)) {
        const auto id = t.find(DimensionVector::parse(item));
        if (!id) throw UsageError("'" + item + "' is not the dimension vector of an indecomposable");
        s.insert(*id);
    }
    return s;
}

int cmd_enumerate(const Config& c) {
    const auto l = load(c);
    const auto& t = need_table(l, "enumerate");
    json pairs = json::array();
    std::size_t n = 0;
    for (const auto& tp : enumerate_torsion_pairs(t)) {
        if (c.split_only && !tp.split) continue;
        pairs.push_back(pair_json(t, tp));
        ++n;
    }
    emit({{"quiver", t.type().name()}, {"count", n}, {"pairs", std::move(pairs)}});
    return kOk;
}

int cmd_lift(const Config& c) {
    const auto l = load(c);
    const auto& t = need_table(l, "lift");
    const auto given = parse_dimvec_set(c.torsion, t);
    const auto tp = torsion_pair_generated_by(given, t);
    if (!(tp.torsion == given)) throw UsageError("the given set is not a torsion class");
    emit({{"torsion_pair", pair_json(t, tp)}, {"t_structure", tstructure_json(t, lift(tp, t, l.window))}});
    return kOk;
}

int cmd_trace(const Config& c) {
    const auto l = load(c);
    const auto& t = need_table(l, "trace");
    if (c.aisle_file.empty()) throw UsageError("trace needs --aisle FILE");
    const auto aisle = read_subcategory(read_json(c.aisle_file), t, l.window);
    const auto ts = make_tstructure(aisle, t);
    emit(pair_json(t, trace(ts, t)));
    return kOk;
}

int cmd_classify(const Config& c) {
    const auto l = load(c);
    const auto& t = need_table(l, "classify");
    return emit_report(run_suite("classify", t, l.window));
}

std::vector<std::size_t> kronecker_tilting(const Config& c, const TameModel& m) {
    std::vector<std::size_t> out;
    for (const auto& item : split_list(c.tilting.empty() ? "Post(1);Post(2)" : c.tilting))
        out.push_back(*m.find(m.parse(item)));
    return out;
}

/// Runs a suite, turning an internal inconsistency into a failed check.
template <class F>
Report guarded(const std::string& suite, F&& f) {
    try {
        return f();
    } catch (const ConsistencyError& e) {
        auto c = Check::ok("suite completes");
        c.fail(e.what());
        return {{"suite " + suite, {}, {c}}};
    }
}

int cmd_verify(const Config& c) {
    const auto l = load(c);
    if (l.kronecker) {
        const auto tilting = kronecker_tilting(c, *l.kronecker);
        return emit_report(guarded(c.suite, [&] { return run_suite(c.suite, *l.kronecker, tilting); }));
    }
    const auto& t = *l.table;
    if (c.suite != "all") return emit_report(guarded(c.suite, [&] { return run_suite(c.suite, t, l.window); }));
    Report r;
    for (const auto& s : dynkin_suites()) {
        auto part = guarded(s, [&] { return run_suite(s, t, l.window); });
        for (auto& e : part) e.labels.insert(e.labels.begin(), "suite:" + s);
        r.insert(r.end(), part.begin(), part.end());
    }
    return emit_report(r);
}

template <class M>
json heart_json(const M& m, const HeartModel& hm) {
    return {{"heart", objects_json(m, hm.heart.members())},
            {"P_A", objects_json(m, hm.p_a)},
            {"R_A", objects_json(m, hm.r_a)},
            {"I_A", objects_json(m, hm.i_a)},
            {"warnings", hm.warnings}};
}

int cmd_transport(const Config& c) {
    const auto l = load(c);
    if (l.kronecker) {
        const auto& m = *l.kronecker;
        const auto tilting = kronecker_tilting(c, m);
        const auto hm = heart_realization(tilting, m, l.window);
        const auto r = verify_theorem53(m, tilting);
        auto names = [&](const Subcategory& s) {
            json a = json::array();
            for (auto i : s.ids()) a.push_back(m.label(i));
            return a;
        };
        json b = json::array(), a = json::array(), cc = json::array();
        for (const auto& tp : r.class_b) b.push_back({{"torsion", names(tp.torsion)}, {"free", names(tp.free)}});
        for (const auto& hp : r.class_a)
            a.push_back({{"torsion", objects_json(m, hp.torsion.members())}, {"free", objects_json(m, hp.free.members())}});
        for (const auto& ts : r.class_c) cc.push_back({{"heart", objects_json(m, ts.heart.members())}});
        json out{{"tilting", json::array()}, {"truncation", m.truncation()}};
        for (auto i : tilting) out["tilting"].push_back(m.label(i));
        out["heart_model"] = heart_json(m, hm);
        out["class_a"] = std::move(a);
        out["class_b"] = std::move(b);
        out["class_c"] = std::move(cc);
        out["report"] = report_json(r.report);
        emit(out);
        return all_pass(r.report) ? kOk : kFailed;
    }
    const auto& t = *l.table;
    const auto s = parse_dimvec_set(c.tilting, t);
    const auto ids = s.ids();
    const auto hm = heart_realization(ids, t, l.window);
    json out{{"tilting", ids_json(t, s)}, {"induced", pair_json(t, hm.induced)}, {"heart_model", heart_json(t, hm)}};
    Report r;
    for (const auto& tp : enumerate_torsion_pairs(t)) {
        if (!tp.split) continue;
        auto checks = check_heart_pair(chi_formula(tp, hm, t), hm, t);
        checks.pop_back();  // boundary conditions only apply to the tame case
        r.push_back({pair_name(tp, t), {"heart torsion class"}, checks});
    }
    r.push_back({"components", {}, {check_components(hm, t)}});
    out["report"] = report_json(r);
    emit(out);
    return all_pass(r) ? kOk : kFailed;
}

int cmd_export(const Config& c) {
    const auto l = load(c);
    const auto& t = need_table(l, "export-ar");
    const DerivedArQuiver g(t, l.window);
    std::optional<DerivedSubcategory> color;
    if (!c.color_file.empty()) {
        const auto text = read_file(c.color_file);
        if (!detail::trim(text).empty()) {
            json j;
            try {
                j = json::parse(text);
            } catch (const json::exception& e) {
                throw UsageError("malformed color file: " + std::string(e.what()));
            }
            color = read_subcategory(j, t, l.window);
        }
    }
    g.write_dot(std::cout, color ? &*color : nullptr);
    return kOk;
}

/// "--window -2..3" would read as an option; glue it to its flag.
std::vector<std::string> normalize_args(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--window" && i + 1 < argc) a += "=" + std::string(argv[++i]);
        args.push_back(std::move(a));
    }
    std::reverse(args.begin(), args.end());
    return args;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"splitt: torsion pairs and split t-structures for hereditary algebras"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* s) {
        s->add_option("--quiver", c.quiver_file, "quiver file");
        s->add_option("--builtin", c.builtin, "builtin quiver: a<n>, d<n>, e6, e7, e8, kronecker");
        s->add_option("--window", c.window, "degree window lo..hi")->capture_default_str();
        s->add_option("--tubes", c.tubes, "Kronecker: number of tube labels")->capture_default_str();
        s->add_option("--tube-depth", c.tube_depth, "Kronecker: quasi-length bound")->capture_default_str();
        s->add_option("--range", c.range, "Kronecker: Post/Pre index bound")->capture_default_str();
    };
    auto* en = app.add_subcommand("enumerate", "list torsion pairs");
    common(en);
    en->add_flag("--split-only", c.split_only, "only split torsion pairs");
    auto* li = app.add_subcommand("lift", "lift a torsion pair to a t-structure");
    common(li);
    li->add_option("--torsion", c.torsion, "torsion class, e.g. \"1,0;1,1\"")->required();
    auto* tr = app.add_subcommand("trace", "restrict a t-structure to mod H");
    common(tr);
    tr->add_option("--aisle", c.aisle_file, "aisle JSON file")->required();
    auto* cl = app.add_subcommand("classify", "classify split t-structures in the window");
    common(cl);
    auto* ve = app.add_subcommand("verify", "run a verification suite");
    common(ve);
    ve->add_option("--suite", c.suite, "all, table, torsion, roundtrip, classify, lemma4, cor64, 63b, 53")
        ->capture_default_str();
    ve->add_option("--table-patch", c.table_patch, "JSON hom overrides applied to the table");
    ve->add_option("--tilting", c.tilting, "Kronecker tilting set for suite 53");
    auto* tp = app.add_subcommand("transport", "tilting transport of torsion pairs");
    common(tp);
    tp->add_option("--tilting", c.tilting, "tilting set: \"Post(1);Post(2)\" or \"1,1;1,0\"");
    auto* ex = app.add_subcommand("export-ar", "DOT export of the derived AR quiver");
    common(ex);
    ex->add_option("--color", c.color_file, "subcategory JSON used to color nodes");

    try {
        app.parse(normalize_args(argc, argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        if (*en) return cmd_enumerate(c);
        if (*li) return cmd_lift(c);
        if (*tr) return cmd_trace(c);
        if (*cl) return cmd_classify(c);
        if (*ve) return cmd_verify(c);
        if (*tp) return cmd_transport(c);
        if (*ex) return cmd_export(c);
    } catch (const ConsistencyError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kFailed;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
