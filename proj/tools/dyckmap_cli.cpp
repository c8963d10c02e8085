// dyckmap: command-line front end. Every subcommand emits one JSON-lines
// RunReport per logical check (or aligned text with --format text) and
// exits 0 iff no check reported Fail or Error.

#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dyckmap/ccp.hpp"
#include "dyckmap/dihedral.hpp"
#include "dyckmap/partitions.hpp"
#include "dyckmap/render.hpp"
#include "dyckmap/sigma.hpp"
#include "dyckmap/stats.hpp"

using json = nlohmann::ordered_json;
using namespace dyckmap;

namespace {

struct Options {
    int n = 0;
    std::string sigma;
    std::string path;
    std::string format = "json";
    int jobs = 1;
    bool sorted = false;
    int cap = kDefaultEnumerationCap;
};

struct Reporter {
    std::string format;
    bool any_bad = false;

    void emit(const std::string& command, json inputs, json results,
              const std::string& status, json witnesses = nullptr) {
        if (status != "Pass") any_bad = true;
        if (format == "text") {
            std::ostringstream line;
            line << command << ": " << status;
            for (auto& [k, v] : results.items())
                line << "  " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
            if (!witnesses.is_null()) line << "  witnesses=" << witnesses.dump();
            std::cout << line.str() << "\n";
            return;
        }
        json report;
        report["command"] = command;
        report["inputs"] = std::move(inputs);
        report["results"] = std::move(results);
        report["status"] = status;
        if (!witnesses.is_null()) report["witnesses"] = std::move(witnesses);
        std::cout << report.dump() << "\n";
    }

    void pass(const std::string& command, json inputs, json results) {
        emit(command, std::move(inputs), std::move(results), "Pass");
    }

    void check(const std::string& command, json inputs, json results, bool ok, json witnesses) {
        emit(command, std::move(inputs), std::move(results), ok ? "Pass" : "Fail",
             ok ? json(nullptr) : std::move(witnesses));
    }
};

std::string big(const BigInt& v) { return v.str(); }

Perm need_sigma(const Options& opt) {
    if (opt.sigma.empty()) throw CLI::ValidationError("--sigma is required here");
    return Perm::parse(opt.sigma);
}

DyckPath need_path(const Options& opt) {
    if (opt.path.empty()) throw CLI::ValidationError("--path is required here");
    return parse_word(opt.path);
}

int need_n(const Options& opt) {
    if (opt.n <= 0) throw CLI::ValidationError("--n is required here");
    return opt.n;
}

json perm_list(const std::vector<Perm>& perms) {
    json out = json::array();
    for (const Perm& s : perms) out.push_back(s.to_string());
    return out;
}

json word_list(const std::vector<DyckPath>& paths) {
    json out = json::array();
    for (const DyckPath& p : paths) out.push_back(p.word());
    return out;
}

// Splits [0, total) among opt.jobs workers; merge runs under a lock in
// worker order when --sorted is set, arrival order otherwise.
void parallel_sweep(const Options& opt, int total,
                    const std::function<json(int begin, int end)>& work,
                    const std::function<void(json)>& merge) {
    const int jobs = std::max(1, std::min(opt.jobs, total == 0 ? 1 : total));
    if (jobs == 1) {
        merge(work(0, total));
        return;
    }
    std::vector<json> chunks(static_cast<size_t>(jobs));
    std::vector<std::thread> pool;
    std::mutex mu;
    std::vector<bool> done(static_cast<size_t>(jobs), false);
    for (int j = 0; j < jobs; ++j) {
        const int begin = total * j / jobs, end = total * (j + 1) / jobs;
        pool.emplace_back([&, j, begin, end] {
            json out = work(begin, end);
            std::lock_guard lock(mu);
            if (opt.sorted) {
                chunks[static_cast<size_t>(j)] = std::move(out);
                done[static_cast<size_t>(j)] = true;
            } else {
                merge(std::move(out));
            }
        });
    }
    for (auto& t : pool) t.join();
    if (opt.sorted)
        for (auto& chunk : chunks) merge(std::move(chunk));
}

void cmd_map(const Options& opt, Reporter& rep) {
    const Perm sigma = need_sigma(opt);
    const DyckPath p = need_path(opt);
    rep.pass("map", {{"sigma", sigma.to_string()}, {"path", p.word()}},
             {{"word", sigma_path(sigma, p).word()}});
}

void cmd_invert(const Options& opt, Reporter& rep) {
    const Perm sigma = need_sigma(opt);
    const DyckPath p = need_path(opt);
    const DyckPath q = invert(sigma, p);
    const bool ok = sigma_path(sigma, q) == p;
    rep.check("invert", {{"sigma", sigma.to_string()}, {"path", p.word()}},
              {{"word", q.word()}, {"round_trip", ok}}, ok,
              json::array({{{"image", sigma_path(sigma, q).word()}}}));
}

void cmd_tunnel(const Options& opt, Reporter& rep) {
    const DyckPath p = need_path(opt);
    const Pairing t = tunneling(p);
    json pairs = json::array();
    for (int u : p.up_positions()) pairs.push_back(json::array({u, t.partner(u)}));
    rep.pass("tunnel", {{"path", p.word()}},
             {{"tunneling", t.to_string()}, {"pairs", pairs}});
}

void cmd_rep(const Options& opt, Reporter& rep) {
    const Perm sigma = need_sigma(opt);
    const DyckPath p = need_path(opt);
    const Pairing conj = permuted_rep(p, sigma);
    const auto as_path = rep_as_path(p, sigma);
    json results = {{"pairing", conj.to_string()}, {"noncrossing", is_noncrossing(conj)}};
    results["word"] = as_path ? json(as_path->word()) : json(nullptr);
    rep.pass("rep", {{"sigma", sigma.to_string()}, {"path", p.word()}}, results);
}

void cmd_ccp(const Options& opt, Reporter& rep, const std::string& mode) {
    if (mode == "check") {
        const Perm sigma = need_sigma(opt);
        rep.pass("ccp check", {{"sigma", sigma.to_string()}}, {{"ccp", is_ccp(sigma)}});
        return;
    }
    const int n = need_n(opt);
    if (mode == "count") {
        rep.pass("ccp count", {{"n", n}},
                 {{"count", big(count_ccps(static_cast<unsigned>(n)))}});
        return;
    }
    json list = json::array();
    for_each_ccp(n, [&](const Perm& s) { list.push_back(s.to_string()); }, opt.cap);
    const bool ok = BigInt(list.size()) == count_ccps(static_cast<unsigned>(n));
    rep.check("ccp enumerate", {{"n", n}}, {{"count", list.size()}, {"ccps", list}}, ok,
              json::array({{{"expected", big(count_ccps(static_cast<unsigned>(n)))}}}));
}

void cmd_classes(const Options& opt, Reporter& rep) {
    if (!opt.sigma.empty()) {
        const Perm sigma = need_sigma(opt);
        const ParityPair par = parity(sigma);
        rep.pass("classes", {{"sigma", sigma.to_string()}},
                 {{"parity", json::array({par.a, par.b})},
                  {"class_key", class_key(sigma).to_string()},
                  {"class_size", big(class_size(sigma))},
                  {"family", perm_list(family(sigma))}});
        return;
    }
    const int n = need_n(opt);
    rep.pass("classes", {{"n", n}},
             {{"num_classes", big(num_classes(static_cast<unsigned>(n)))}});
}

void cmd_generators(const Options& opt, Reporter& rep) {
    const DyckPath p = need_path(opt);
    const DyckPath q = opt.sigma.empty() && opt.n > 0
                           ? enumerate_paths(opt.n, opt.cap).front()
                           : p;  // default target: the image path itself
    const auto gens = generators(p, q);
    const BigInt closed = count_generators(p);
    const bool ok = BigInt(gens.size()) == closed;
    json results = {{"count", gens.size()}, {"closed_form", big(closed)}};
    if (gens.size() <= 1000) results["generators"] = perm_list(gens);
    rep.check("generators", {{"path", p.word()}, {"target", q.word()}}, std::move(results), ok,
              json::array({{{"enumerated", gens.size()}, {"expected", big(closed)}}}));
}

void cmd_identity(const Options& opt, Reporter& rep) {
    const int n = need_n(opt);
    const auto check = double_factorial_identity_check(n, opt.cap);
    rep.check("identity", {{"n", n}},
              {{"sum_l_weights", big(check.lhs)}, {"double_factorial", big(check.rhs)}},
              check.ok,
              json::array({{{"lhs", big(check.lhs)}, {"rhs", big(check.rhs)}}}));
}

void cmd_sequence(const Options& opt, Reporter& rep, int max_n) {
    json values = json::array();
    for (int n = 1; n <= max_n; ++n) values.push_back(big(num_classes(static_cast<unsigned>(n))));
    rep.pass("sequence", {{"max_n", max_n}}, {{"num_classes", values}});
    (void)opt;
}

void cmd_dihedral(const Options& opt, Reporter& rep) {
    const int n = need_n(opt);
    if (!opt.sigma.empty()) {
        const Perm sigma = need_sigma(opt);
        std::optional<DyckPath> witness;
        const bool preserves = preserves_paths(sigma, n, &witness, opt.cap);
        const auto group = dihedral_group(n);
        const bool member = std::find(group.begin(), group.end(), sigma) != group.end();
        json results = {{"preserves_paths", preserves}, {"group_member", member}};
        rep.check("dihedral", {{"n", n}, {"sigma", sigma.to_string()}}, std::move(results),
                  preserves == member,
                  json::array({{{"crossing_path", witness ? witness->word() : ""}}}));
        return;
    }
    rep.pass("dihedral", {{"n", n}},
             {{"rho", rho(n).to_string()},
              {"omega", omega(n).to_string()},
              {"order", 4 * n},
              {"elements", perm_list(dihedral_group(n))}});
}

void cmd_orbit(const Options& opt, Reporter& rep) {
    const DyckPath p = need_path(opt);
    const auto orbit = action_orbit(p);
    const bool ok = (4 * p.size()) % static_cast<int>(orbit.size()) == 0;
    rep.check("orbit", {{"path", p.word()}},
              {{"size", orbit.size()}, {"orbit", word_list(orbit)}}, ok,
              json::array({{{"group_order", 4 * p.size()}}}));
}

void cmd_stats(const Options& opt, Reporter& rep, const std::string& table,
               const std::string& check) {
    const int n = need_n(opt);
    if (table == "umax") {
        json rows = json::array();
        if (rep.format == "text")
            std::cout << "path" << std::string(2 * n - 3, ' ') << "  h  ";
        for (int a = 1; rep.format == "text" && a <= 2 * n; ++a)
            std::cout << "u(" << a << ") ";
        if (rep.format == "text") std::cout << "\n";
        for_each_path(
            n,
            [&](const DyckPath& p) {
                json row = {{"path", p.word()}, {"h", peak_height(p)}};
                json umax = json::array();
                for (int a = 1; a <= 2 * n; ++a) umax.push_back(u_max(p, a));
                row["u_max"] = umax;
                if (rep.format == "text") {
                    std::cout << p.word() << "  " << peak_height(p) << "  ";
                    for (int a = 1; a <= 2 * n; ++a) std::cout << u_max(p, a) << "    ";
                    std::cout << "\n";
                }
                rows.push_back(std::move(row));
            },
            opt.cap);
        if (rep.format != "text") rep.pass("stats", {{"n", n}, {"table", "umax"}}, {{"rows", rows}});
        return;
    }
    if (check == "equidistribution") {
        std::atomic<bool> all_ok{true};
        parallel_sweep(
            opt, 2 * n,
            [&](int begin, int end) {
                json lines = json::array();
                for (int a = begin + 1; a <= end; ++a) {
                    bool ok = umax_equidistribution_check(n, a, opt.cap);
                    for (int k = 1; k <= 2 * n; ++k)
                        ok = equidistribution_check(n, a, k, opt.cap) && ok;
                    if (!ok) all_ok = false;
                    lines.push_back(json{{"a", a}, {"ok", ok}});
                }
                return lines;
            },
            [&](json lines) {
                for (auto& line : lines) {
                    const bool ok = line["ok"].get<bool>();
                    const int a = line["a"].get<int>();
                    rep.check("stats", {{"n", n}, {"check", "equidistribution"}},
                              std::move(line), ok, json::array({{{"a", a}}}));
                }
            });
        (void)all_ok;
        return;
    }
    throw CLI::ValidationError("stats: pass --table umax or --check equidistribution");
}

struct Suite {
    std::string name;
    std::function<bool(int n, int cap, json& witnesses)> run;
};

std::vector<Suite> verification_suites() {
    return {
        {"sigma_paths_are_dyck",
         [](int n, int cap, json&) {
             bool ok = true;
             std::vector<int> v(static_cast<size_t>(2 * n));
             std::iota(v.begin(), v.end(), 1);
             const auto paths = enumerate_paths(n, cap);
             do {
                 const Perm s{v};
                 for (const DyckPath& p : paths) ok &= sigma_path(s, p).size() == n;
             } while (ok && std::next_permutation(v.begin(), v.end()));
             return ok;
         }},
        {"tunneling_round_trip",
         [](int n, int cap, json&) {
             bool ok = true;
             for_each_path(
                 n,
                 [&](const DyckPath& p) {
                     const Pairing t = tunneling(p);
                     ok &= is_noncrossing(t) && path_from_tunneling(t) == p;
                 },
                 cap);
             return ok;
         }},
        {"ccp_characterization",
         [](int n, int cap, json& witnesses) {
             bool ok = true;
             std::vector<int> v(static_cast<size_t>(2 * n));
             std::iota(v.begin(), v.end(), 1);
             do {
                 const Perm s{v};
                 if (is_ccp(s) != is_injective_on_paths(s, n, cap)) {
                     ok = false;
                     witnesses.push_back({{"sigma", s.to_string()}});
                 }
             } while (ok && std::next_permutation(v.begin(), v.end()));
             return ok;
         }},
        {"inverse_round_trip",
         [](int n, int cap, json&) {
             bool ok = true;
             const auto paths = enumerate_paths(n, cap);
             for (const Perm& s : enumerate_ccps(n, cap))
                 for (const DyckPath& p : paths) ok &= sigma_path(s, invert(s, p)) == p;
             return ok;
         }},
        {"double_factorial_identity",
         [](int n, int cap, json&) { return double_factorial_identity_check(n, cap).ok; }},
        {"generator_counts",
         [](int n, int cap, json&) {
             const auto paths = enumerate_paths(n, cap);
             const DyckPath& q = paths.front();
             for (const DyckPath& p : paths)
                 if (BigInt(generators(p, q).size()) != count_generators(p)) return false;
             return true;
         }},
        {"class_keys_vs_bruteforce",
         [](int n, int cap, json& witnesses) {
             std::vector<int> v(static_cast<size_t>(2 * n));
             std::iota(v.begin(), v.end(), 1);
             std::map<std::string, ClassKey> seen;  // fingerprint -> key
             std::map<ClassKey, std::string> back;
             const auto paths = enumerate_paths(n, cap);
             do {
                 const Perm s{v};
                 std::string fp;
                 for (const DyckPath& p : paths) fp += sigma_path(s, p).word();
                 const ClassKey key = class_key(s);
                 const auto [it, fresh] = seen.emplace(fp, key);
                 if (!fresh && !(it->second == key)) {
                     witnesses.push_back({{"sigma", s.to_string()}});
                     return false;
                 }
                 const auto [jt, fresh2] = back.emplace(key, fp);
                 if (!fresh2 && jt->second != fp) {
                     witnesses.push_back({{"sigma", s.to_string()}});
                     return false;
                 }
             } while (std::next_permutation(v.begin(), v.end()));
             return BigInt(seen.size()) == num_classes(static_cast<unsigned>(n));
         }},
        {"dihedral_preservation",
         [](int n, int cap, json&) {
             const auto group = dihedral_group(n);
             const std::set<Perm> members(group.begin(), group.end());
             std::vector<int> v(static_cast<size_t>(2 * n));
             std::iota(v.begin(), v.end(), 1);
             bool ok = true;
             do {
                 const Perm s{v};
                 ok &= preserves_paths(s, n, nullptr, cap) == members.contains(s);
             } while (ok && std::next_permutation(v.begin(), v.end()));
             return ok;
         }},
        {"statistics_equidistribution",
         [](int n, int cap, json&) {
             for (int a = 1; a <= 2 * n; ++a) {
                 if (!umax_equidistribution_check(n, a, cap)) return false;
                 for (int k = 1; k <= 2 * n; ++k)
                     if (!equidistribution_check(n, a, k, cap)) return false;
             }
             return true;
         }},
    };
}

void cmd_verify(const Options& opt, Reporter& rep, bool all, const std::string& only) {
    const int n = need_n(opt);
    for (const Suite& suite : verification_suites()) {
        if (!all && suite.name != only) continue;
        json witnesses = json::array();
        bool ok = false;
        try {
            ok = suite.run(n, opt.cap, witnesses);
        } catch (const error& e) {
            rep.emit("verify " + suite.name, {{"n", n}}, {{"error", e.what()}}, "Error");
            continue;
        }
        if (witnesses.empty()) witnesses.push_back({{"n", n}});
        rep.check("verify " + suite.name, {{"n", n}}, {{"ok", ok}}, ok, witnesses);
    }
}

void cmd_render(const Options& opt, Reporter& rep) {
    const DyckPath p = need_path(opt);
    std::optional<Perm> sigma;
    if (!opt.sigma.empty()) sigma = Perm::parse(opt.sigma);
    const std::string diagram = render_chords(p, sigma);
    if (rep.format == "text") {
        std::cout << diagram;
        return;
    }
    rep.pass("render",
             {{"path", p.word()}, {"sigma", sigma ? json(sigma->to_string()) : json(nullptr)}},
             {{"diagram", diagram}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutation-generated maps on Dyck paths"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--n", opt.n, "problem size n (paths have 2n steps)");
    app.add_option("--sigma", opt.sigma, "permutation, comma-separated or compact digits");
    app.add_option("--path", opt.path, "Dyck word over u/d (U/D and parentheses accepted)");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--jobs", opt.jobs, "worker threads for sweeps")->capture_default_str();
    app.add_flag("--sorted", opt.sorted, "force deterministic output order under --jobs");
    app.add_option("--cap", opt.cap, "enumeration size cap")->capture_default_str();
    for (auto* a : app.get_options()) a->configurable(false);

    std::string ccp_mode = "check";
    int max_n = 6;
    std::string stats_table, stats_check;
    bool verify_all = false;
    std::string verify_suite;

    app.add_subcommand("map", "apply the sigma-path map");
    app.add_subcommand("invert", "preimage of a path under a CCP's map");
    app.add_subcommand("tunnel", "tunneling involution of a path");
    app.add_subcommand("rep", "permuted circular representation");
    auto* ccp = app.add_subcommand("ccp", "circularly connected permutations");
    ccp->add_option("mode", ccp_mode, "check | count | enumerate")
        ->check(CLI::IsMember({"check", "count", "enumerate"}));
    app.add_subcommand("classes", "equivalence classes of the map sigma -> sigma(.)");
    app.add_subcommand("generators", "all sigma mapping a target path to --path");
    app.add_subcommand("identity", "sum of height products against (2n-1)!!");
    auto* seq = app.add_subcommand("sequence", "number of classes for n = 1..max-n");
    seq->add_option("--max-n", max_n, "largest n")->capture_default_str();
    app.add_subcommand("dihedral", "rotation/reflection subgroup and membership");
    app.add_subcommand("orbit", "dihedral orbit of a path");
    auto* stats = app.add_subcommand("stats", "unpaired-step statistics");
    stats->add_option("--table", stats_table, "table to print (umax)");
    stats->add_option("--check", stats_check, "sweep to run (equidistribution)");
    auto* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_flag("--all", verify_all, "run every suite");
    verify->add_option("--suite", verify_suite, "single suite by name");

    app.add_subcommand("render", "ASCII chord diagram");

    // global flags may appear after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Reporter rep{opt.format};
    try {
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "map") cmd_map(opt, rep);
        else if (name == "invert") cmd_invert(opt, rep);
        else if (name == "tunnel") cmd_tunnel(opt, rep);
        else if (name == "rep") cmd_rep(opt, rep);
        else if (name == "ccp") cmd_ccp(opt, rep, ccp_mode);
        else if (name == "classes") cmd_classes(opt, rep);
        else if (name == "generators") cmd_generators(opt, rep);
        else if (name == "identity") cmd_identity(opt, rep);
        else if (name == "sequence") cmd_sequence(opt, rep, max_n);
        else if (name == "dihedral") cmd_dihedral(opt, rep);
        else if (name == "orbit") cmd_orbit(opt, rep);
        else if (name == "stats") cmd_stats(opt, rep, stats_table, stats_check);
        else if (name == "verify") cmd_verify(opt, rep, verify_all || verify_suite.empty(), verify_suite);
        else if (name == "render") cmd_render(opt, rep);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        rep.emit(app.get_subcommands().front()->get_name(), nullptr,
                 {{"error", e.what()}, {"code", errc_name(e.code())}}, "Error");
        return 1;
    } catch (const std::exception& e) {
        rep.emit(app.get_subcommands().front()->get_name(), nullptr, {{"error", e.what()}},
                 "Error");
        return 1;
    }
    return rep.any_bad ? 1 : 0;
}
