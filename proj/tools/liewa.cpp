// liewa: command-line front end.
//
// Exit codes: 0 ok, 1 failed check, 2 parse/usage error,
// 3 unrecognized real form, 4 catalog error.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liewa/liewa.hpp"

using namespace liewa;

namespace {

enum Exit { ok = 0, check_failed = 1, usage = 2, unrecognized = 3, catalog = 4, internal = 5 };

struct Globals {
    bool json = false;
    std::uint64_t seed = default_seed;
    std::size_t max_radius = 8;
};

int exit_for(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::UnrecognizedRealForm: return unrecognized;
    case ErrorKind::CatalogError: return catalog;
    case ErrorKind::Internal:
    case ErrorKind::LiftingInconsistent:
    case ErrorKind::IrrationalDecomposition: return internal;
    default: return usage;
    }
}

std::vector<long> parse_vector(const std::string& text)
{
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size() && item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad vector component '" + item + "'");
        }
    }
    return out;
}

void check_radius(const Globals& g, std::size_t radius)
{
    if (radius > g.max_radius)
        throw Error(ErrorKind::InvalidArgument,
                    "radius " + std::to_string(radius) + " exceeds --max-radius " + std::to_string(g.max_radius));
}

json to_json(const IntVector& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json to_json(const HeisenbergPoint& p) { return {{"w", to_json(p.w)}, {"m", to_string(p.m)}}; }

json to_json(const Sl2Element& g) { return json::array({to_string(g.a), to_string(g.b), to_string(g.c), to_string(g.d)}); }

std::string show(const IntVector& v) { return detail::str(v); }
std::string show(const HeisenbergPoint& p) { return "(" + detail::str(p.w) + ", " + to_string(p.m) + ")"; }

/// The point and acting lattice selected by --m (Z^m) or --n (Gamma_{2n+1}).
struct Target {
    std::size_t m = 0, n = 0;
    std::string vector;

    void validate() const
    {
        if ((m == 0) == (n == 0)) throw Error(ErrorKind::InvalidArgument, "give exactly one of --m or --n");
    }
    bool gamma() const { return n != 0; }
    IntVector zm_point() const
    {
        auto c = parse_vector(vector);
        if (c.size() != m) throw Error(ErrorKind::InvalidArgument, "--vector needs " + std::to_string(m) + " components");
        return IntVector(c.begin(), c.end());
    }
    HeisenbergPoint gamma_point() const
    {
        auto c = parse_vector(vector);
        if (c.size() != 2 * n + 1)
            throw Error(ErrorKind::InvalidArgument, "--vector needs 2n+1 = " + std::to_string(2 * n + 1) + " components (w..., m)");
        HeisenbergPoint p{IntVector(c.begin(), c.end() - 1), c.back()};
        return p;
    }
};

int cmd_analyze(const Globals& g, const std::string& file)
{
    auto cat = default_catalog();
    auto alg = load_algebra(file);
    auto report = analyze(file, alg, cat, g.seed);
    std::cout << (g.json ? emit_report(report) : render_text(report));
    return ok;
}

int cmd_build(const std::vector<std::string>& words, const std::string& out)
{
    auto text = emit_algebra(build_named(words));
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
    return ok;
}

int cmd_rep(const Globals& g, std::size_t m, const std::string& check, std::size_t trials)
{
    CheckResult r;
    if (check == "hom")
        r = check_rep_hom(m, trials, g.seed);
    else if (check == "sympl")
        r = check_rep_sympl(m, trials, g.seed);
    else if (check == "lattice")
        r = check_lattice(m, trials, g.seed);
    else
        r = check_assoc(m, trials, g.seed);
    if (g.json)
        std::cout << json{{"check", check}, {"m", m}, {"trials", r.trials}, {"failures", r.failures}, {"first_failure", r.first_failure}}.dump(2)
                  << "\n";
    else {
        std::cout << check << " m=" << m << ": " << r.trials - r.failures << "/" << r.trials << " passed\n";
        if (!r.ok()) std::cout << "first failure: " << r.first_failure << "\n";
    }
    return r.ok() ? ok : check_failed;
}

template <class P>
int print_orbit(const Globals& g, const LatticeAction& act, const P& x, std::size_t radius)
{
    auto o = orbit(act, x);
    if (g.json) {
        json pts = json::array();
        for (const auto& p : o) pts.push_back(to_json(p));
        std::cout << json{{"point", to_json(x)}, {"radius", radius}, {"ball_size", act.ball().size()}, {"orbit_size", o.size()}, {"orbit", pts}}.dump(2)
                  << "\n";
    } else {
        std::cout << "orbit of " << show(x) << " under ball(" << radius << ") [" << act.ball().size() << " elements]: " << o.size()
                  << " points\n";
        for (const auto& p : o) std::cout << "  " << show(p) << "\n";
    }
    return ok;
}

int cmd_orbit(const Globals& g, const Target& t, std::size_t radius)
{
    t.validate();
    check_radius(g, radius);
    auto ball = Ball::build(radius);
    if (t.gamma()) return print_orbit(g, LatticeAction::on_gamma(t.n, ball), t.gamma_point(), radius);
    return print_orbit(g, LatticeAction::on_zm(t.m, ball), t.zm_point(), radius);
}

template <class P>
int print_stabilizer(const Globals& g, const LatticeAction& act, const P& x, std::size_t radius)
{
    auto idx = stabilizer_fragment(act, x);
    auto w = commutativity_witness(elements(act.ball(), idx));
    if (g.json) {
        json els = json::array();
        for (auto i : idx) els.push_back({{"matrix", to_json(act.ball().entries()[i].g)}, {"word", act.ball().entries()[i].word}});
        json out{{"point", to_json(x)}, {"radius", radius}, {"size", idx.size()}, {"elements", els}, {"commutative", w.commutes}};
        if (w.failing_pair) out["failing_pair"] = {to_json(w.failing_pair->first), to_json(w.failing_pair->second)};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "stabilizer of " << show(x) << " in ball(" << radius << "): " << idx.size() << " elements\n";
        for (auto i : idx) {
            const auto& e = act.ball().entries()[i];
            std::cout << "  " << e.g << "  " << (e.word.empty() ? "1" : e.word) << "\n";
        }
        std::cout << "pairwise commutative: " << (w.commutes ? "yes" : "no") << "\n";
        if (w.failing_pair) std::cout << "  failing pair: " << w.failing_pair->first << ", " << w.failing_pair->second << "\n";
    }
    return ok;
}

int cmd_stabilizer(const Globals& g, const Target& t, std::size_t radius)
{
    t.validate();
    check_radius(g, radius);
    auto ball = Ball::build(radius);
    if (t.gamma()) return print_stabilizer(g, LatticeAction::on_gamma(t.n, ball), t.gamma_point(), radius);
    return print_stabilizer(g, LatticeAction::on_zm(t.m, ball), t.zm_point(), radius);
}

template <class P>
int print_partition(const Globals& g, const OrbitPartition<P>& part, std::size_t radius, long box)
{
    std::vector<std::size_t> sizes;
    for (const auto& c : part.classes) sizes.push_back(c.size());
    const bool good = part.n0_invariant && part.classes_separated && part.disjoint_cover;
    if (g.json) {
        std::cout << json{{"box", box},
                          {"radius", radius},
                          {"base_size", part.base_set.size()},
                          {"classes", part.classes.size()},
                          {"class_sizes", sizes},
                          {"n0_size", part.n0_class.size()},
                          {"n0_invariant", part.n0_invariant},
                          {"classes_separated", part.classes_separated},
                          {"disjoint_cover", part.disjoint_cover},
                          {"merged_fragments", part.merged_fragments}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "box [-" << box << "," << box << "], ball(" << radius << "): " << part.base_set.size() << " points in "
                  << part.classes.size() << " classes\n"
                  << "N0 points:          " << part.n0_class.size() << "\n"
                  << "N0 invariant:       " << (part.n0_invariant ? "yes" : "no") << "\n"
                  << "classes separated:  " << (part.classes_separated ? "yes" : "no") << "\n"
                  << "disjoint cover:     " << (part.disjoint_cover ? "yes" : "no") << "\n"
                  << "merged fragments:   " << part.merged_fragments << "\n";
    }
    return good ? ok : check_failed;
}

int cmd_partition(const Globals& g, const Target& t, std::size_t radius, long box)
{
    t.validate();
    check_radius(g, radius);
    if (box < 0) throw Error(ErrorKind::InvalidArgument, "--box must be >= 0");
    auto ball = Ball::build(radius);
    if (t.gamma()) return print_partition(g, partition_check_gamma(LatticeAction::on_gamma(t.n, ball), box), radius, box);
    return print_partition(g, partition_check_zm(LatticeAction::on_zm(t.m, ball), box), radius, box);
}

int cmd_witness(const Globals& g, const std::string& kind, std::size_t radius, std::size_t n, std::size_t m, long box)
{
    if (kind == "free") {
        check_radius(g, radius);
        auto w = free_pair_witness(radius);
        if (g.json)
            std::cout << json{{"witness", "free"}, {"length", radius}, {"free", w.free}, {"words_checked", w.words_checked},
                              {"relation", w.relation ? json(*w.relation) : json(nullptr)}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "free pair a=[[1,2],[0,1]], b=[[1,0],[2,1]], reduced words <= " << radius << ": "
                      << (w.free ? "no relation" : "relation " + *w.relation) << " (" << w.words_checked << " words)\n";
        return w.free ? ok : check_failed;
    }
    if (kind == "nilpotency") {
        auto w = nilpotency_witness(n);
        if (g.json)
            std::cout << json{{"witness", "nilpotency"}, {"n", n}, {"two_step", w.two_step}, {"commutators_checked", w.commutators_checked}}.dump(2)
                      << "\n";
        else
            std::cout << "Gamma_" << 2 * n + 1 << " two-step nilpotent on generators: " << (w.two_step ? "yes" : "no") << " ("
                      << w.commutators_checked << " commutators)\n";
        return w.two_step ? ok : check_failed;
    }
    check_radius(g, radius);
    auto ball = Ball::build(radius);
    auto c = m ? stabilizers_commute_zm(m, box, ball) : stabilizers_commute_gamma(n, box, ball);
    if (g.json)
        std::cout << json{{"witness", "stabilizers"}, {"points", c.trials}, {"failures", c.failures}, {"first_failure", c.first_failure}}.dump(2)
                  << "\n";
    else {
        std::cout << "stabilizer fragments in ball(" << radius << ") over box [-" << box << "," << box << "]: "
                  << c.trials - c.failures << "/" << c.trials << " commutative\n";
        if (!c.ok()) std::cout << "first failure: " << c.first_failure << "\n";
    }
    return c.ok() ? ok : check_failed;
}

int cmd_selftest(const Globals& g, std::size_t trials)
{
    if (trials == 0) std::cerr << "warning: --trials 0, every suite passes vacuously\n";
    auto results = run_selftest(trials, g.seed);
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        all = all && r.ok();
        if (g.json)
            arr.push_back({{"suite", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"first_failure", r.first_failure}});
        else {
            std::printf("%-40s %6zu passed %4zu failed\n", r.name.c_str(), r.passed, r.failed);
            if (!r.ok()) std::printf("    %s\n", r.first_failure.c_str());
        }
    }
    if (g.json) std::cout << json{{"trials", trials}, {"seed", g.seed}, {"suites", arr}, {"ok", all}}.dump(2) << "\n";
    else std::cout << (all ? "all suites passed\n" : "FAILURES\n");
    return all ? ok : check_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Lie algebra analysis and SL(2,Z) lattice checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_flag("--json", g.json, "structured output");
    app.add_option("--seed", g.seed, "random seed")->capture_default_str();
    app.add_option("--max-radius", g.max_radius, "hard cap on ball radii")->capture_default_str();

    std::string file;
    auto* analyze_cmd = app.add_subcommand("analyze", "decide weak amenability for a structure-constant file");
    analyze_cmd->add_option("file", file)->required();

    std::vector<std::string> words;
    std::string out;
    auto* build_cmd = app.add_subcommand("build", "emit a named algebra, e.g. `build direct_sum sl2 heisenberg 3`");
    build_cmd->add_option("spec", words)->required();
    build_cmd->add_option("-o,--output", out, "output file (default stdout)");

    std::size_t rep_m = 2, trials = 100;
    std::string check = "hom";
    auto* rep_cmd = app.add_subcommand("rep", "exact identities of the SL(2) representations");
    rep_cmd->add_option("--m", rep_m, "representation dimension")->check(CLI::Range(1, 64));
    rep_cmd->add_option("--check", check)->check(CLI::IsMember({"hom", "sympl", "lattice", "assoc"}));
    rep_cmd->add_option("--trials", trials)->capture_default_str();

    Target target;
    std::size_t radius = 4;
    long box = 3;
    auto add_target = [&](CLI::App* c) {
        c->add_option("--m", target.m, "act on Z^m");
        c->add_option("--n", target.n, "act on Gamma_{2n+1}");
        c->add_option("--radius", radius, "ball radius")->capture_default_str();
    };
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit fragment of a point under ball(L)");
    add_target(orbit_cmd);
    orbit_cmd->add_option("--vector", target.vector, "comma separated coordinates")->required();
    auto* stab_cmd = app.add_subcommand("stabilizer", "ball elements fixing a point");
    add_target(stab_cmd);
    stab_cmd->add_option("--vector", target.vector, "comma separated coordinates")->required();
    auto* part_cmd = app.add_subcommand("partition", "orbit classes of a coordinate box");
    add_target(part_cmd);
    part_cmd->add_option("--box", box, "box half-width")->capture_default_str();

    std::string kind;
    std::size_t wn = 1, wm = 0;
    auto* witness_cmd = app.add_subcommand("witness", "free | nilpotency | stabilizers");
    witness_cmd->add_option("kind", kind)->required()->check(CLI::IsMember({"free", "nilpotency", "stabilizers"}));
    witness_cmd->add_option("--radius", radius, "word length or ball radius")->capture_default_str();
    witness_cmd->add_option("--n", wn, "Gamma_{2n+1} parameter")->capture_default_str();
    witness_cmd->add_option("--m", wm, "stabilizers on Z^m instead of Gamma");
    witness_cmd->add_option("--box", box, "box half-width")->capture_default_str();

    std::size_t st_trials = 100;
    auto* selftest_cmd = app.add_subcommand("selftest", "run every property suite");
    selftest_cmd->add_option("--trials", st_trials)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(g, file);
        if (*build_cmd) return cmd_build(words, out);
        if (*rep_cmd) return cmd_rep(g, rep_m, check, trials);
        if (*orbit_cmd) return cmd_orbit(g, target, radius);
        if (*stab_cmd) return cmd_stabilizer(g, target, radius);
        if (*part_cmd) return cmd_partition(g, target, radius, box);
        if (*witness_cmd) return cmd_witness(g, kind, radius, wn, wm, box);
        if (*selftest_cmd) return cmd_selftest(g, st_trials);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return internal;
    }
    return usage;
}
