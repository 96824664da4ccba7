// Command-line front end: every computation in the library behind one
// binary with machine-readable output, deterministic bytes, optional
// result caching, and the sweep drivers.
//
// Exit codes: 0 verified/success, 1 falsification or violated bound,
// 2 malformed input, 3 search budget exceeded.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zerosum/json_io.hpp"
#include "zerosum/sweeps.hpp"

namespace {

using namespace zerosum;

struct Output {
    json payload;
    int exit_code = 0;
};

struct Options {
    std::string group_spec;
    std::string codomain_spec;
    std::string omega_file;
    std::string psi_spec;
    std::string cover_file;
    std::string suite = "all";
    std::string format = "json";
    std::string cache_dir;
    std::int64_t cap_nodes = 100'000'000;
    int cap_len = 0;
    int workers = 1;
    int t = 0;
    int n = 0;
    int max_len = 0;

    SearchLimits limits() const {
        SearchLimits l;
        l.node_cap = cap_nodes;
        l.length_cap = cap_len;
        l.workers = workers;
        return l;
    }
};

FiniteAbelianGroup parse_group(const std::string& spec) {
    if (spec.empty()) throw InputError("missing --group");
    std::vector<int> factors;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            factors.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("bad group spec '" + spec + "'");
        }
    }
    return FiniteAbelianGroup(factors);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

WeightSet resolve_psi(const std::string& spec, const FiniteAbelianGroup& f,
                      const FiniteAbelianGroup& g) {
    if (spec.empty()) throw InputError("missing --psi");
    if (spec == "identity") {
        if (f != g) throw InputError("identity weights need equal domain and codomain");
        return WeightSet::identity(f);
    }
    if (spec == "plusminus") {
        if (f != g) throw InputError("plusminus weights need equal domain and codomain");
        return WeightSet::plus_minus(f);
    }
    if (spec == "all-homs") {
        auto homs = enumerate_homs(f, g);
        return WeightSet(f, g, std::move(homs));
    }
    auto psi = decode_weightset(load_json(spec));
    if (psi.domain() != f || psi.codomain() != g)
        throw InputError("weight set file does not match --group/--codomain");
    return psi;
}

json sweep_to_json(const SweepReport& r) {
    json fails = json::array();
    for (const auto& c : r.failures)
        fails.push_back(json{{"label", c.label}, {"detail", c.detail}});
    return json{{"suite", r.name},         {"passed", r.passed},
                {"inconclusive", r.inconclusive}, {"checks", r.checks_run},
                {"failures", fails},       {"summary", r.summary}};
}

// --- command implementations ---------------------------------------------

Output cmd_davenport(const Options& opt) {
    auto g = parse_group(opt.group_spec);
    auto r = davenport(g, opt.limits());
    json out = encode(r);
    out["group"] = encode(g);
    return {out, 0};
}

Output cmd_enumerate_a(const Options& opt) {
    auto g = parse_group(opt.group_spec);
    auto limits = opt.limits();
    int cap = opt.max_len > 0 ? opt.max_len : davenport(g, limits).value;
    OmegaSet atoms(g, enumerate_minimal_zero_sum(g, cap, limits), "all_minimal");
    json out = encode(atoms);
    out["max_len"] = cap;
    return {out, 0};
}

Output cmd_domega(const Options& opt) {
    auto g = parse_group(opt.group_spec);
    auto omega = decode_omegaset(load_json(opt.omega_file));
    if (omega.group() != g) throw InputError("omega file group does not match --group");
    auto r = d_omega(g, omega, opt.limits());
    json out = encode(r);
    out["group"] = encode(g);
    out["omega_size"] = omega.size();
    return {out, 0};
}

Output cmd_qt(const Options& opt) {
    auto g = parse_group(opt.group_spec);
    if (opt.t <= 0) throw InputError("missing or bad --t");
    auto q = qt_set(g, opt.t, opt.limits());
    json out = encode(q);
    out["t"] = opt.t;
    return {out, 0};
}

Output cmd_intersection(const Options& opt) {
    auto g = parse_group(opt.group_spec);
    auto inter = minimal_sets_intersection(g, opt.limits());
    return {encode(inter), 0};
}

Output cmd_is_minimal(const Options& opt) {
    auto g = parse_group(opt.group_spec);
    if (opt.t <= 0) throw InputError("missing or bad --t");
    auto omega = decode_omegaset(load_json(opt.omega_file));
    if (omega.group() != g) throw InputError("omega file group does not match --group");
    bool minimal = is_minimal_set(g, omega, opt.t, opt.limits());
    return {json{{"group", encode(g)}, {"t", opt.t}, {"minimal", minimal}}, 0};
}

Output cmd_ag_minimality(const Options& opt) {
    auto g = parse_group(opt.group_spec);
    auto r = atoms_minimality(g, opt.limits());
    json out{{"group", encode(g)},
             {"minimal", r.minimal},
             {"atoms", r.atom_count},
             {"davenport", r.davenport_value},
             {"probe", r.probe}};
    if (r.expected.has_value()) out["expected"] = *r.expected;
    if (r.falsifying) out["falsifying"] = encode(*r.falsifying);
    return {out, r.contradiction ? 1 : 0};
}

Output cmd_lk(const Options& opt) {
    if (opt.n < 2) throw InputError("missing or bad --n");
    auto r = lemke_kleitman_check(opt.n, opt.limits());
    json out{{"n", opt.n}, {"holds", r.holds}, {"sequences", r.sequences_checked}};
    if (r.counterexample) out["counterexample"] = encode(*r.counterexample);
    return {out, r.holds ? 0 : 1};
}

Output cmd_weighted(const Options& opt) {
    auto f = parse_group(opt.group_spec);
    auto g = opt.codomain_spec.empty() ? f : parse_group(opt.codomain_spec);
    auto psi = resolve_psi(opt.psi_spec, f, g);
    auto limits = opt.limits();

    if (!opt.omega_file.empty()) {
        auto omega = decode_omegaset(load_json(opt.omega_file));
        if (omega.group() != g) throw InputError("omega file group does not match codomain");
        auto r = d_omega_psi(f, g, psi, omega, limits);
        json out = encode(r);
        out["domain"] = encode(f);
        out["codomain"] = encode(g);
        out["weights"] = psi.size();
        return {out, 0};
    }

    auto bound = kernel_coset_bound(f, g, psi, limits);
    bool cover_ok = false;
    try {
        auto cover = kernels_to_cover(f, g, psi, bound.dpsi.witness, limits);
        cover_ok = is_cover(cover);
    } catch (const Falsification&) {
        cover_ok = false;
    }
    json out = encode(bound.dpsi);
    out["domain"] = encode(f);
    out["codomain"] = encode(g);
    out["weights"] = psi.size();
    out["kernel_bound"] = bound.bound;
    out["bound_holds"] = bound.holds;
    out["kernel_cover_verified"] = cover_ok;
    return {out, bound.holds && cover_ok ? 0 : 1};
}

Output cmd_cover(const Options& opt, const std::string& action) {
    if (action == "prop64") {
        auto f = parse_group(opt.group_spec);
        auto g = opt.codomain_spec.empty() ? f : parse_group(opt.codomain_spec);
        auto psi = resolve_psi(opt.psi_spec, f, g);
        auto r = cover_size_bound_check(f, g, psi, opt.limits());
        const char* verdict =
            r.verdict == CoverSizeBoundReport::Verdict::holds
                ? "holds"
                : (r.verdict == CoverSizeBoundReport::Verdict::violated ? "violated"
                                                                        : "inconclusive");
        json out{{"domain", encode(f)},
                 {"codomain", encode(g)},
                 {"max_irredundant", r.m.max_size},
                 {"exact", r.m.exact},
                 {"universe", r.m.universe},
                 {"dpsi", r.dpsi.value},
                 {"bound", r.bound},
                 {"verdict", verdict}};
        return {out, r.verdict == CoverSizeBoundReport::Verdict::violated ? 1 : 0};
    }

    auto cover = decode_cover(load_json(opt.cover_file));
    if (action == "check") {
        return {json{{"group", encode(cover.ambient)},
                     {"size", cover.size()},
                     {"covers", is_cover(cover)}},
                0};
    }
    if (action == "reduce") {
        auto r = irredundant_reduce(cover);
        json out = encode(r);
        out["removed"] = cover.size() - r.size();
        return {out, 0};
    }
    if (action == "sun") {
        auto r = sun_index_bound_verify(cover);
        json out{{"group", encode(cover.ambient)},
                 {"k", r.k},
                 {"max_index", r.max_index},
                 {"limit", r.limit},
                 {"holds", r.holds}};
        return {out, r.holds ? 0 : 1};
    }
    throw InputError("unknown cover action");
}

Output cmd_sweep(const Options& opt) {
    auto limits = opt.limits();
    json reports = json::array();
    bool all_pass = true;
    if (opt.suite == "all") {
        for (const auto& r : sweeps::run_all_sweeps(limits)) {
            all_pass = all_pass && r.passed;
            reports.push_back(sweep_to_json(r));
        }
    } else {
        auto r = sweeps::run_sweep(opt.suite, limits);
        all_pass = r.passed;
        reports.push_back(sweep_to_json(r));
    }
    return {json{{"reports", reports}, {"passed", all_pass}}, all_pass ? 0 : 1};
}

// --- rendering and cache ----------------------------------------------------

std::string render(const json& payload, const std::string& format) {
    if (format == "json") return payload.dump() + "\n";
    std::ostringstream os;
    for (const auto& [key, value] : payload.items()) {
        if (value.is_string())
            os << key << " = " << value.get<std::string>() << "\n";
        else
            os << key << " = " << value.dump() << "\n";
    }
    return os.str();
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::optional<std::filesystem::path> cache_path(const Options& opt,
                                                const std::string& key) {
    if (opt.cache_dir.empty()) return std::nullopt;
    std::filesystem::create_directories(opt.cache_dir);
    std::ostringstream name;
    name << std::hex << fnv1a(key) << ".json";
    return std::filesystem::path(opt.cache_dir) / name.str();
}

int run_command(const Options& opt, const std::string& key,
                const std::function<Output()>& fn) {
    auto path = cache_path(opt, key);
    if (path && std::filesystem::exists(*path)) {
        try {
            auto hit = load_json(path->string());
            if (hit.at("key").get<std::string>() == key) {
                std::cout << hit.at("output").get<std::string>();
                return hit.at("exit").get<int>();
            }
        } catch (const std::exception&) {
            // unreadable cache entries are recomputed
        }
    }
    Output out = fn();
    std::string text = render(out.payload, opt.format);
    std::cout << text;
    if (path && out.exit_code == 0) {
        json entry{{"key", key}, {"exit", out.exit_code}, {"output", text}};
        std::ofstream of(*path);
        of << entry.dump();
    }
    return out.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero-sum invariants of finite abelian groups"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Options opt;

    app.add_option("--cap-nodes", opt.cap_nodes, "search node budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--cap-len", opt.cap_len, "avoiding-sequence length horizon")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--workers", opt.workers, "worker threads for the searches")
        ->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache", opt.cache_dir, "cache directory for results");

    auto add_group = [&](CLI::App* cmd, bool required = true) {
        auto* o = cmd->add_option("--group", opt.group_spec,
                                  "invariant factors, e.g. 2,4");
        if (required) o->required();
    };

    auto* dav = app.add_subcommand("davenport", "Davenport constant with witness");
    add_group(dav);

    auto* ena = app.add_subcommand("enumerate-a", "all minimal zero-sum sequences");
    add_group(ena);
    ena->add_option("--max-len", opt.max_len, "length cutoff (default: Davenport value)");

    auto* dom = app.add_subcommand("domega", "universal invariant for an omega file");
    add_group(dom);
    dom->add_option("--omega", opt.omega_file, "omega set JSON file")->required();

    auto* qtc = app.add_subcommand("qt", "Q_t by exhaustive witness search");
    add_group(qtc);
    qtc->add_option("--t", opt.t, "target length t")->required();

    auto* inter = app.add_subcommand("intersection",
                                     "intersection of all minimal sets");
    add_group(inter);

    auto* ism = app.add_subcommand("is-minimal", "minimality of an omega file");
    add_group(ism);
    ism->add_option("--omega", opt.omega_file, "omega set JSON file")->required();
    ism->add_option("--t", opt.t, "target value t")->required();

    auto* agm = app.add_subcommand("ag-minimality",
                                   "is the full atom set minimal for the Davenport constant");
    add_group(agm);

    auto* lk = app.add_subcommand("lk", "index-one subsequence coverage of Z_n");
    lk->add_option("--n", opt.n, "cyclic order n")->required();

    auto* wt = app.add_subcommand("weighted", "weighted Davenport constant and bounds");
    add_group(wt);
    wt->add_option("--codomain", opt.codomain_spec, "codomain group (default: --group)");
    wt->add_option("--psi", opt.psi_spec, "weight set: identity, plusminus, all-homs, or a file")
        ->required();
    wt->add_option("--omega", opt.omega_file,
                   "optional omega file: compute the weighted universal invariant");

    auto* cov = app.add_subcommand("cover", "coset cover utilities");
    std::string cover_action;
    cov->add_option("action", cover_action, "check | reduce | sun | prop64")
        ->required()
        ->check(CLI::IsMember({"check", "reduce", "sun", "prop64"}));
    cov->add_option("--file", opt.cover_file, "cover JSON file");
    cov->add_option("--group", opt.group_spec, "domain group (prop64)");
    cov->add_option("--codomain", opt.codomain_spec, "codomain group (prop64)");
    cov->add_option("--psi", opt.psi_spec, "weight set (prop64)");

    auto* sw = app.add_subcommand("sweep", "verification sweeps");
    sw->add_option("--suite", opt.suite, "sweep name or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    std::function<Output()> fn;
    std::string cmd_name;
    if (dav->parsed()) { cmd_name = "davenport"; fn = [&] { return cmd_davenport(opt); }; }
    else if (ena->parsed()) { cmd_name = "enumerate-a"; fn = [&] { return cmd_enumerate_a(opt); }; }
    else if (dom->parsed()) { cmd_name = "domega"; fn = [&] { return cmd_domega(opt); }; }
    else if (qtc->parsed()) { cmd_name = "qt"; fn = [&] { return cmd_qt(opt); }; }
    else if (inter->parsed()) { cmd_name = "intersection"; fn = [&] { return cmd_intersection(opt); }; }
    else if (ism->parsed()) { cmd_name = "is-minimal"; fn = [&] { return cmd_is_minimal(opt); }; }
    else if (agm->parsed()) { cmd_name = "ag-minimality"; fn = [&] { return cmd_ag_minimality(opt); }; }
    else if (lk->parsed()) { cmd_name = "lk"; fn = [&] { return cmd_lk(opt); }; }
    else if (wt->parsed()) { cmd_name = "weighted"; fn = [&] { return cmd_weighted(opt); }; }
    else if (cov->parsed()) {
        cmd_name = "cover-" + cover_action;
        fn = [&, cover_action] { return cmd_cover(opt, cover_action); };
    } else if (sw->parsed()) { cmd_name = "sweep"; fn = [&] { return cmd_sweep(opt); }; }

    // cache key: command plus canonical inputs plus caps (workers and
    // format do not change results; format changes bytes, so it is in)
    json key_doc{{"cmd", cmd_name},
                 {"group", opt.group_spec},
                 {"codomain", opt.codomain_spec},
                 {"omega", opt.omega_file},
                 {"psi", opt.psi_spec},
                 {"cover", opt.cover_file},
                 {"suite", opt.suite},
                 {"t", opt.t},
                 {"n", opt.n},
                 {"max_len", opt.max_len},
                 {"cap_nodes", opt.cap_nodes},
                 {"cap_len", opt.cap_len},
                 {"format", opt.format}};

    try {
        return run_command(opt, key_doc.dump(), fn);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const Falsification& e) {
        std::cerr << "falsification: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
