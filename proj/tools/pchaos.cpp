// pchaos: command-line front end for the Cantor-embedding, coarse-graining,
// surjection and primitive-chaos constructions.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input rejected before
// any check ran.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "pchaos/cantor_embed.hpp"
#include "pchaos/finite_topology.hpp"
#include "pchaos/primitive_chaos.hpp"
#include "pchaos/serialize.hpp"
#include "pchaos/surjections.hpp"

namespace {

using namespace pchaos;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OutputOptions {
    std::string out_path;
    std::string format = "json";
    std::optional<int> decimals;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--out", o.out_path, "Write the document here; the summary then goes to stdout");
    cmd->add_option("--format", o.format, "Document encoding")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--decimal", o.decimals, "Add truncated decimals (approximate) with N digits")
        ->check(CLI::Range(0, 60));
}

std::size_t max_depth() {
    if (const char* env = std::getenv("PCHAOS_MAX_DEPTH")) {
        try {
            const long v = std::stol(env);
            if (v >= 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw UsageError("PCHAOS_MAX_DEPTH must be a nonnegative integer");
    }
    return 12;
}

std::size_t checked_depth(long depth, std::size_t cap, const std::string& what) {
    if (depth < 0) throw UsageError(what + " must be nonnegative");
    if (static_cast<std::size_t>(depth) > cap)
        throw UsageError(what + " " + std::to_string(depth) + " exceeds the cap " + std::to_string(cap) +
                         " (PCHAOS_MAX_DEPTH)");
    return static_cast<std::size_t>(depth);
}

// Emits the document and the summary. Document to --out (summary to stdout)
// or to stdout (summary to stderr).
void emit(const OutputOptions& o, const Json& doc, const std::string& summary) {
    std::string text;
    if (o.format == "csv") {
        text = to_csv(doc, o.decimals);
    } else {
        text = (o.decimals ? with_decimals(doc, *o.decimals) : doc).dump(2) + "\n";
    }
    if (o.out_path.empty()) {
        std::cout << text;
        std::cerr << summary;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + o.out_path + "' for writing");
    f << text;
    std::cout << summary;
}

std::string report_summary(const CheckReport& r) {
    std::ostringstream os;
    for (const auto& c : r.checks()) os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.witness << "\n";
    os << r.passed() << "/" << r.total() << " checks passed\n";
    return os.str();
}

Rational parse_rational(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

// ---------------------------------------------------------------------------

struct EmbedArgs {
    std::string model;
    long depth = 0;
    OutputOptions out;
};

int run_embed(const EmbedArgs& a) {
    const auto kind = parse_model_kind(a.model);
    const auto depth = checked_depth(a.depth, max_depth(), "depth");
    const auto tree = build_refinement(PeanoModel::make(kind), depth);

    std::ostringstream summary;
    bool ok = true;
    for (std::size_t k = 0; k <= depth; ++k) {
        const auto rep = check_stage_invariants(tree, k);
        ok = ok && rep.all_passed();
        summary << "level " << k << ":";
        for (const auto& c : rep.checks()) summary << " " << c.name << "=" << (c.pass ? "pass" : "FAIL");
        summary << "\n";
    }
    summary << "leaves: " << tree.level(depth).size() << "\n" << (ok ? "all checks pass\n" : "checks FAILED\n");
    emit(a.out, to_json(tree), summary.str());
    return ok ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------------------

struct ChaosArgs {
    std::string system;
    std::string word;
    long depth = 1;
    std::string delta = "1/1048576";
    long samples = 100;
    OutputOptions out;
};

Address parse_word(const ChaosSystem& s, const std::string& w) {
    if (w.empty()) throw UsageError("--word must be nonempty");
    if (w.size() > 64) throw UsageError("--word longer than 64 symbols");
    return Address::parse(w, static_cast<unsigned>(s.symbols()));
}

int run_chaos(const std::string& sub, const ChaosArgs& a) {
    const auto s = make_system(parse_system_kind(a.system));
    if (sub == "realize") {
        const auto r = realize_witness(s, parse_word(s, a.word));
        emit(a.out, to_json(r), "witness " + r.witness.str() + " in " + r.enclosure.str() + ", orbit of " +
                                    std::to_string(r.orbit.size()) + " points follows the word\n");
        return exit_pass;
    }
    if (sub == "periodic") {
        const auto p = periodic_point(s, parse_word(s, a.word));
        std::string note = "periodic point " + p.point.str() + ", prime period " + std::to_string(p.prime_period);
        if (p.reduced) note += " (word reduced to '" + p.word.str() + "')";
        emit(a.out, to_json(p, s.kind), note + "\n");
        return exit_pass;
    }
    CheckReport rep("");
    if (sub == "dense") {
        rep = dense_orbit_check(s, checked_depth(a.depth, max_depth(), "depth"));
    } else if (sub == "sensitivity") {
        if (a.samples < 1) throw UsageError("--samples must be positive");
        rep = sensitivity_check(s, parse_rational(a.delta), static_cast<std::size_t>(a.samples));
    } else {
        if (a.depth < 1 || a.depth > 12) throw UsageError("transitivity depth must be in 1..12");
        rep = transitivity_check(s, static_cast<std::size_t>(a.depth));
    }
    emit(a.out, to_json(rep), report_summary(rep));
    return rep.all_passed() ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------------------

struct SurjectArgs {
    std::string kind;
    long depth = -1;
    bool swap_halves = false;
    std::string a_blocks;
    std::string b_blocks;
    std::string target = "interval";
    std::vector<std::string> points;
    std::vector<std::string> evals;
    OutputOptions out;
};

std::vector<ClopenBlock> parse_blocks(const std::string& text) {
    std::vector<ClopenBlock> out;
    std::size_t start = 0;
    while (true) {
        const auto bar = text.find('|', start);
        out.push_back(ClopenBlock::parse(text.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    return out;
}

std::pair<Rational, Point> parse_waypoint(const std::string& text, TargetKind target) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw UsageError("waypoint '" + text + "' is not of the form x=y");
    std::vector<Rational> ys;
    std::string rest = text.substr(eq + 1);
    std::size_t start = 0;
    while (true) {
        const auto comma = rest.find(',', start);
        ys.push_back(parse_rational(rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (ys.size() != (target == TargetKind::square ? 2U : 1U))
        throw UsageError("waypoint '" + text + "' has the wrong number of coordinates");
    return {parse_rational(text.substr(0, eq)), Point(std::move(ys))};
}

int run_surject(const SurjectArgs& a) {
    const std::size_t cap = max_depth() > 16 ? max_depth() : 16;
    Json doc;
    Json transcript = Json::array();
    CheckReport rep("");

    if (a.kind == "binary" || a.kind == "interleave") {
        const auto f = a.kind == "binary" ? CantorMap::binary_expansion() : CantorMap::interleave();
        const auto n = checked_depth(a.depth < 0 ? (a.kind == "binary" ? 16 : 12) : a.depth, cap, "depth");
        for (const auto& e : a.evals) {
            const auto x = Address::parse(e);
            transcript.push_back({{"input", x.str()}, {"depth", x.size()}, {"enclosure", to_json(f.evaluate(x))}});
        }
        rep = verify_covering(f, n);
        doc = {{"map", to_json(f)}};
    } else if (a.kind == "block" || a.kind == "bitflip") {
        std::vector<ClopenBlock> as;
        std::vector<ClopenBlock> bs;
        if (a.kind == "bitflip" || a.swap_halves) {
            if (!a.a_blocks.empty() || !a.b_blocks.empty())
                throw UsageError("--swap-halves and bitflip fix the blocks; drop --a/--b");
            as = parse_blocks("0|1");
            bs = parse_blocks("1|0");
        } else {
            if (a.a_blocks.empty() || a.b_blocks.empty()) throw UsageError("block maps need --a and --b");
            as = parse_blocks(a.a_blocks);
            bs = parse_blocks(a.b_blocks);
        }
        const auto f = a.kind == "bitflip" ? CantorMap::bit_flip() : block_surjection(as, bs);
        const auto n = checked_depth(a.depth < 0 ? 10 : a.depth, cap, "depth");
        for (const auto& e : a.evals) {
            const auto x = Address::parse(e);
            transcript.push_back({{"input", x.str()}, {"depth", x.size()}, {"enclosure", to_json(f.evaluate(x))}});
        }
        const auto& check_a = f.domain_blocks().empty() ? as : f.domain_blocks();
        const auto& check_b = f.target_blocks().empty() ? bs : f.target_blocks();
        rep = verify_block_surjection(f, check_a, check_b, n);
        doc = {{"map", to_json(f)}};
    } else if (a.kind == "waypoint") {
        const TargetKind target = a.target == "square" ? TargetKind::square : TargetKind::interval;
        if (a.points.empty()) throw UsageError("waypoint maps need at least one --point");
        std::vector<std::pair<Rational, Point>> wps;
        for (const auto& p : a.points) wps.push_back(parse_waypoint(p, target));
        const auto f = waypoint_surjection(WaypointMap(target, std::move(wps)));
        const auto n = checked_depth(a.depth < 0 ? 8 : a.depth, 10, "depth");
        for (const auto& e : a.evals) {
            const auto t = parse_rational(e);
            if (t < 0 || t > 1) throw UsageError("--eval parameter outside [0,1]");
            transcript.push_back({{"input", t.str()}, {"depth", n}, {"enclosure", to_json(f.evaluate(t, n))}});
        }
        rep = verify_waypoints(f, n);
        doc = {{"map", to_json(f)}};
    } else {
        throw UsageError("unknown surjection kind '" + a.kind + "'");
    }
    doc["transcript"] = std::move(transcript);
    doc["report"] = to_json(rep);
    emit(a.out, doc, report_summary(rep));
    return rep.all_passed() ? exit_pass : exit_fail;
}

// ---------------------------------------------------------------------------

struct FintopArgs {
    std::string space = "chain3";
    std::string points;
    std::string opens;
    std::string blocks;
    std::string reps;
    std::string codomain = "discrete2";
    std::string map;
    OutputOptions out;
};

FiniteTopSpace space_from(const std::string& name, const std::string& points, const std::string& opens) {
    if (points.empty()) return FiniteTopSpace::named(name);
    std::vector<std::string> labels;
    for (char c : points) labels.emplace_back(1, c);
    const Mask full = full_mask(labels.size());
    std::vector<Mask> family{0, full};
    // Build against a discrete space just to resolve labels.
    const FiniteTopSpace lookup(labels, [&] {
        std::vector<Mask> all;
        for (Mask m = 0; m <= full; ++m) all.push_back(m);
        return all;
    }());
    std::size_t start = 0;
    while (!opens.empty()) {
        const auto semi = opens.find(';', start);
        family.push_back(lookup.mask_of(opens.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return FiniteTopSpace(labels, family);
}

int run_fintop(const std::string& sub, const FintopArgs& a) {
    if (sub == "sweep") {
        CheckReport rep("exhaustive finite-space suites");
        rep.append(sweep_decomposition(4));
        rep.append(sweep_prop5(4));
        rep.append(sweep_lemma7(4, 4));
        emit(a.out, to_json(rep), report_summary(rep));
        return rep.all_passed() ? exit_pass : exit_fail;
    }
    const FiniteTopSpace x = space_from(a.space, a.points, a.opens);
    if (sub == "quotient") {
        if (a.blocks.empty()) throw UsageError("quotient needs --blocks");
        const auto d = Partition::parse(x, a.blocks);
        const auto q = decomposition_topology(x, d);
        const bool ok = is_topology(q.size(), q.opens());
        Json doc = {{"space", to_json(x)}, {"partition", to_json(d, x)}, {"quotient", to_json(q)}};
        emit(a.out, doc, "quotient has " + std::to_string(q.size()) + " points and " + std::to_string(q.opens().size()) +
                             " open sets" + (ok ? "" : " (NOT a topology)") + "\n");
        return ok ? exit_pass : exit_fail;
    }
    if (sub == "verify-prop5") {
        if (a.blocks.empty() || a.reps.empty()) throw UsageError("verify-prop5 needs --blocks and --reps");
        const auto d = Partition::parse(x, a.blocks);
        std::vector<std::size_t> reps;
        for (char c : a.reps) reps.push_back(x.index_of(std::string(1, c)));
        const auto v = verify_prop5(x, d, reps);
        CheckReport rep("representatives " + a.reps + " of " + a.blocks);
        rep.add("homeomorphic", v.holds, v.note);
        Json doc = to_json(rep);
        doc["hypotheses_met"] = v.hypotheses_met;
        emit(a.out, doc, report_summary(rep));
        return v.holds ? exit_pass : exit_fail;
    }
    // verify-lemma7
    if (a.map.empty()) throw UsageError("verify-lemma7 needs --map");
    const auto y = FiniteTopSpace::named(a.codomain);
    if (a.map.size() != x.size()) throw UsageError("--map needs one codomain label per domain point");
    std::vector<std::size_t> img;
    for (char c : a.map) img.push_back(y.index_of(std::string(1, c)));
    const FiniteMap f(x, y, img);
    const auto v = verify_lemma7(f);
    CheckReport rep("fiber quotient of " + a.map);
    rep.add("homeomorphic", v.holds, v.note);
    Json doc = to_json(rep);
    doc["hypotheses_met"] = v.hypotheses_met;
    doc["fibers"] = to_json(fiber_partition(f), x);
    emit(a.out, doc, report_summary(rep));
    return v.holds ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructions for Cantor sets, Peano continua and primitive chaos"};
    app.require_subcommand(1);
    app.footer(
        "Documents are JSON by default. --format csv flattens the same document into\n"
        "'path,value' rows (path is a JSON pointer, one row per scalar); --decimal N adds an\n"
        "approx_decimal column (JSON: an approx_decimal object) holding truncated decimals.\n"
        "Rationals are exact 'p/q' strings. PCHAOS_MAX_DEPTH caps depths (default 12).\n"
        "Exit codes: 0 all checks pass, 1 a check failed, 2 input rejected.");

    EmbedArgs embed;
    auto* embed_cmd = app.add_subcommand("embed", "Nested Cantor-set construction inside a Peano continuum");
    embed_cmd->add_option("--model", embed.model, "interval, square or tripod")->required();
    embed_cmd->add_option("--depth", embed.depth, "Refinement depth")->required();
    add_output_options(embed_cmd, embed.out);

    ChaosArgs chaos;
    auto* chaos_cmd = app.add_subcommand("chaos", "Property-(P) witnesses and chaos certificates");
    chaos_cmd->require_subcommand(1);
    std::string chaos_sub;
    const std::pair<const char*, const char*> chaos_subs[] = {
        {"realize", "Witness point and enclosure for an event word"},
        {"periodic", "Exact periodic point following a repeated word"},
        {"dense", "Dense-orbit word visiting every cell of a given depth"},
        {"sensitivity", "Separation steps for sampled nearby pairs"},
        {"transitivity", "Orbits linking every ordered pair of cells"},
    };
    for (const auto& [name, help] : chaos_subs) {
        auto* sc = chaos_cmd->add_subcommand(name, help);
        sc->add_option("--system", chaos.system, "shift_cantor, doubling, tent or baker")->required();
        if (std::string(name) == "realize" || std::string(name) == "periodic")
            sc->add_option("--word", chaos.word, "Event word, e.g. 01")->required();
        if (std::string(name) == "dense" || std::string(name) == "transitivity")
            sc->add_option("--depth", chaos.depth, "Cell depth");
        if (std::string(name) == "sensitivity") {
            sc->add_option("--delta", chaos.delta, "Perturbation bound p/q");
            sc->add_option("--samples", chaos.samples, "Number of sample points");
        }
        add_output_options(sc, chaos.out);
        sc->callback([&chaos_sub, name] { chaos_sub = name; });
    }

    SurjectArgs surject;
    auto* surject_cmd = app.add_subcommand("surject", "Continuous surjections with block or waypoint constraints");
    surject_cmd->add_option("--kind", surject.kind, "binary, interleave, block, bitflip or waypoint")->required();
    surject_cmd->add_option("--depth", surject.depth, "Verification depth");
    surject_cmd->add_flag("--swap-halves", surject.swap_halves, "Block map with A = 0|1, B = 1|0");
    surject_cmd->add_option("--a", surject.a_blocks, "Domain blocks, e.g. 0|10,11 ('e' is the empty word)");
    surject_cmd->add_option("--b", surject.b_blocks, "Target blocks, same syntax");
    surject_cmd->add_option("--target", surject.target, "Waypoint target")->check(CLI::IsMember({"interval", "square"}));
    surject_cmd->add_option("--point", surject.points, "Waypoint x=y or x=y1,y2 (repeatable)");
    surject_cmd->add_option("--eval", surject.evals, "Evaluate at an address (or parameter for waypoint)");
    add_output_options(surject_cmd, surject.out);

    FintopArgs fintop;
    auto* fintop_cmd = app.add_subcommand("fintop", "Finite topological spaces and decomposition spaces");
    fintop_cmd->require_subcommand(1);
    std::string fintop_sub;
    const std::pair<const char*, const char*> fintop_subs[] = {
        {"quotient", "Decomposition space of a partition"},
        {"verify-prop5", "Representative subspace versus the decomposition space"},
        {"verify-lemma7", "Fiber decomposition of a continuous surjection versus its codomain"},
        {"sweep", "Exhaustive checks over all small spaces"},
    };
    for (const auto& [name, help] : fintop_subs) {
        auto* sc = fintop_cmd->add_subcommand(name, help);
        if (std::string(name) != "sweep") {
            sc->add_option("--space", fintop.space, "Named space: chain3, sierpinski, discreteN, indiscreteN, chainN");
            sc->add_option("--points", fintop.points, "Custom space points, e.g. abc");
            sc->add_option("--opens", fintop.opens, "Custom opens besides {} and all, e.g. 'a;ab'");
        }
        if (std::string(name) == "quotient" || std::string(name) == "verify-prop5")
            sc->add_option("--blocks", fintop.blocks, "Partition, e.g. ab|c");
        if (std::string(name) == "verify-prop5") sc->add_option("--reps", fintop.reps, "One point per block, e.g. ac");
        if (std::string(name) == "verify-lemma7") {
            sc->add_option("--codomain", fintop.codomain, "Named codomain space");
            sc->add_option("--map", fintop.map, "Image label of each domain point, e.g. aabb");
        }
        add_output_options(sc, fintop.out);
        sc->callback([&fintop_sub, name] { fintop_sub = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (*embed_cmd) return run_embed(embed);
        if (*chaos_cmd) return run_chaos(chaos_sub, chaos);
        if (*surject_cmd) return run_surject(surject);
        if (*fintop_cmd) return run_fintop(fintop_sub, fintop);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}
