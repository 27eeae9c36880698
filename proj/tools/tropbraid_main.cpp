#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tropbraid/invariant.hpp"
#include "tropbraid/io.hpp"

using namespace tropbraid;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t env_seed() {
    const char* env = std::getenv("TROPBRAID_SEED");
    if (!env) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw UsageError("TROPBRAID_SEED is not an unsigned integer: " +
                         std::string(env));
    }
}

// --labels constant:<rational> | random[:LO:HI] | file:<path>
LabelScheme parse_label_scheme(const std::string& spec, std::uint64_t seed) {
    if (spec.rfind("constant:", 0) == 0)
        return LabelScheme::constant(parse_rational(spec.substr(9)));
    if (spec == "random") return LabelScheme::seeded_random(seed, -10, 10);
    if (spec.rfind("random:", 0) == 0) {
        const std::string rest = spec.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw UsageError("--labels random:LO:HI needs two bounds");
        try {
            return LabelScheme::seeded_random(seed, std::stoll(rest.substr(0, colon)),
                                              std::stoll(rest.substr(colon + 1)));
        } catch (const DataError&) {
            throw;
        } catch (const std::exception&) {
            throw UsageError("--labels random:LO:HI needs integer bounds");
        }
    }
    if (spec.rfind("file:", 0) == 0) return LabelScheme::from_file(spec.substr(5));
    throw UsageError("--labels must be constant:<rational>, random[:LO:HI] or "
                     "file:<path>, got \"" + spec + "\"");
}

struct PlanArgs {
    std::string in;
    std::string word;
    int n = 0;
    bool word_given = false;
};

MotionPlan make_plan(const PlanArgs& a, std::uint64_t seed) {
    if (!a.in.empty() && a.word_given)
        throw UsageError("give either --in or --word, not both");
    if (!a.in.empty()) return read_motion_plan(a.in);
    if (a.word_given) {
        if (a.n < 2) throw UsageError("--word needs --n >= 2");
        return word_to_motion(parse_braid_word(a.word, a.n), seed);
    }
    throw UsageError("need a motion plan: --in <plan.json> or --word W --n N");
}

int cmd_delaunay(const std::string& in, const std::string& out, double eps,
                 const std::string& format) {
    const Configuration c = read_configuration(in);
    const Triangulation t = delaunay(c, eps);
    if (!out.empty()) {
        if (format == "tsv") write_text(to_tsv(t), out);
        else write_triangulation(t, out);
    }
    std::cout << "faces: " << t.faces().size() << "\n"
              << "edges: " << t.edges().size() << "\n";
    return 0;
}

int cmd_trace(const PlanArgs& pa, std::uint64_t seed, double eps, double dt,
              double dt_min, const std::string& out, const std::string& format,
              bool simplify) {
    const MotionPlan plan = make_plan(pa, seed);
    const FlipSequence seq = detect_flip_events(plan, eps, dt, dt_min);
    if (!out.empty()) {
        if (format == "tsv") write_text(to_tsv(seq), out);
        else write_flip_sequence(seq, out);
    }
    std::cout << "events: " << seq.events.size() << "\n";
    if (simplify) std::cout << simplify_check(seq).text;
    return 0;
}

int cmd_invariant(const PlanArgs& pa, std::uint64_t seed, double eps, double dt,
                  double dt_min, const std::string& labels_spec,
                  const std::string& out, const std::string& format) {
    const MotionPlan plan = make_plan(pa, seed);
    const LabelScheme scheme = parse_label_scheme(labels_spec, seed);
    const Triangulation t0 = delaunay(eval(plan, 0), eps);
    const LabeledTriangulation lt = initial_labels(t0, scheme);
    const InvariantVector inv = compute_invariant(plan, lt, eps, dt, dt_min);
    if (!out.empty()) {
        if (format == "tsv") write_text(to_tsv(inv), out);
        else write_invariant(inv, out);
    }
    std::cout << "labels: " << inv.labels.size() << "\n";
    return 0;
}

int cmd_compare(const std::string& a, const std::string& b) {
    const InvariantVector v1 = read_invariant(a);
    const InvariantVector v2 = read_invariant(b);
    if (compare(v1, v2)) {
        std::cout << "equal\n";
        return 0;
    }
    std::cout << "unequal\n";
    return 1;
}

// --- verify suites ------------------------------------------------------

int suite_involution(std::uint64_t seed, int trials) {
    Rng root(seed);
    int pass = 0;
    for (int i = 0; i < trials; ++i) {
        Rng r = root.fork(i);
        QuadLabels q;
        q.a = TropicalValue(r.uniform_int(-100, 100));
        q.b = TropicalValue(r.uniform_int(-100, 100));
        q.c = TropicalValue(r.uniform_int(-100, 100));
        q.d = TropicalValue(r.uniform_int(-100, 100));
        q.x = TropicalValue(r.uniform_int(-100, 100));
        QuadLabels back = q;
        back.x = flip_label(q);
        if (flip_label(back) == q.x) ++pass;
    }
    std::cout << "involution: " << pass << "/" << trials << " passed\n";
    return pass == trials ? 0 : 1;
}

int suite_far(std::uint64_t seed, int trials) {
    Rng root(seed);
    int pass = 0;
    for (int i = 0; i < trials; ++i) {
        Rng r = root.fork(i);
        const int n = static_cast<int>(r.uniform_int(8, 20));
        bool ok = false;
        try {
            const Triangulation t = delaunay(random_configuration(n, r));
            const LabeledTriangulation lt =
                initial_labels(t, LabelScheme::seeded_random(r.next_u64(), -10, 10));
            const auto edges = t.edges();
            for (size_t a = 0; a < edges.size() && !ok; ++a)
                for (size_t b = a + 1; b < edges.size() && !ok; ++b) {
                    try {
                        if (!are_far(t, edges[a], edges[b])) continue;
                        ok = check_far_commutativity(lt, edges[a], edges[b]);
                        break;
                    } catch (const DataError&) { // unflippable pair, keep looking
                    }
                }
        } catch (const GeometryError&) {
        }
        if (ok) ++pass;
    }
    std::cout << "far-commutativity: " << pass << "/" << trials << " passed\n";
    return pass == trials ? 0 : 1;
}

int suite_pentagon(std::uint64_t seed, int trials) {
    Rng root(seed);
    int closed = 0;
    std::string example;
    for (int i = 0; i < trials; ++i) {
        Rng r = root.fork(i);
        std::array<TropicalValue, 5> boundary;
        std::array<TropicalValue, 2> diagonals;
        for (auto& v : boundary) v = TropicalValue(r.uniform_int(-10, 10));
        for (auto& v : diagonals) v = TropicalValue(r.uniform_int(-10, 10));
        if (check_pentagon(boundary, diagonals)) {
            ++closed;
        } else if (example.empty()) {
            example = "first open labeling:";
            for (const auto& v : boundary)
                example += " " + format_rational(v.value);
            example += " |";
            for (const auto& v : diagonals)
                example += " " + format_rational(v.value);
        }
    }
    std::cout << "pentagon closure: " << closed << "/" << trials
              << " labelings closed\n";
    if (!example.empty()) std::cout << example << "\n";
    return 0; // reported, never failing
}

int suite_euler(std::uint64_t seed, int trials) {
    Rng root(seed);
    int pass = 0;
    for (int i = 0; i < trials; ++i) {
        Rng r = root.fork(i);
        const int n = static_cast<int>(r.uniform_int(5, 40));
        try {
            const Triangulation t = delaunay(random_configuration(n, r));
            if (static_cast<int>(t.edges().size()) == 3 * n - 6 &&
                static_cast<int>(t.faces().size()) == 2 * n - 4 &&
                validate(t).empty())
                ++pass;
        } catch (const GeometryError&) {
        }
    }
    std::cout << "euler counts: " << pass << "/" << trials << " passed\n";
    return pass == trials ? 0 : 1;
}

int suite_oracle(std::uint64_t seed, int trials) {
    Rng root(seed);
    int pass = 0;
    for (int i = 0; i < trials; ++i) {
        Rng r = root.fork(i);
        const int n = static_cast<int>(r.uniform_int(5, 20));
        try {
            const Configuration c = random_configuration(n, r);
            const Triangulation t = delaunay(c);
            bool ok = true;
            for (const Face& f : t.faces())
                for (int s = 1; s <= n && ok; ++s) {
                    if (s == f[0] || s == f[1] || s == f[2]) continue;
                    ok = in_circumcircle(c.points[f[0] - 1], c.points[f[1] - 1],
                                         c.points[f[2] - 1],
                                         c.points[s - 1]) == -1;
                }
            if (ok) ++pass;
        } catch (const GeometryError&) {
        }
    }
    std::cout << "empty-circumcircle oracle: " << pass << "/" << trials
              << " passed\n";
    return pass == trials ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int trials) {
    if (suite == "involution") return suite_involution(seed, trials);
    if (suite == "far") return suite_far(seed, trials);
    if (suite == "pentagon") return suite_pentagon(seed, trials);
    if (suite == "euler") return suite_euler(seed, trials);
    if (suite == "oracle") return suite_oracle(seed, trials);
    throw UsageError("unknown suite \"" + suite +
                     "\" (involution|far|pentagon|euler|oracle)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tropical braid invariants from Delaunay flips on the sphere"};
    app.require_subcommand(1);

    double eps = kEpsGeo, dt = kDtInit, dt_min = kDtMin;
    std::string in, out, format = "json", word, labels_spec, inv_a, inv_b, suite;
    int n = 0, trials = 100;
    std::uint64_t seed = 0;
    bool seed_given = false, word_given = false, simplify = false;

    const auto add_common = [&](CLI::App* cmd, bool motion) {
        cmd->add_option("--eps", eps, "degeneracy threshold")->capture_default_str();
        cmd->add_option("--format", format, "json or tsv")
            ->check(CLI::IsMember({"json", "tsv"}));
        if (!motion) return;
        cmd->add_option("--dt", dt, "scan step")->capture_default_str();
        cmd->add_option("--dt-min", dt_min, "bisection floor")->capture_default_str();
        cmd->add_option("--seed", seed, "seed (default: TROPBRAID_SEED or 0)")
            ->each([&](const std::string&) { seed_given = true; });
        cmd->add_option("--word", word, "braid word, e.g. \"s1 s2^-1\"")
            ->each([&](const std::string&) { word_given = true; });
        cmd->add_option("--n", n, "strand count for --word");
        cmd->add_option("--in", in, "motion plan file");
    };

    CLI::App* del = app.add_subcommand("delaunay", "triangulate a configuration");
    del->add_option("--in", in, "configuration file")->required();
    del->add_option("--out", out, "triangulation file");
    add_common(del, false);

    CLI::App* trace = app.add_subcommand("trace", "extract the flip sequence");
    add_common(trace, true);
    trace->add_option("--out", out, "flip sequence file");
    trace->add_flag("--simplify", simplify, "print the relation diagnostic");

    CLI::App* invc = app.add_subcommand("invariant", "compute the label vector");
    add_common(invc, true);
    invc->add_option("--labels", labels_spec,
                     "constant:<rational> | random[:LO:HI] | file:<path>")
        ->required();
    invc->add_option("--out", out, "invariant file");

    CLI::App* cmp = app.add_subcommand("compare", "compare two invariants");
    cmp->add_option("--a", inv_a, "first invariant file")->required();
    cmp->add_option("--b", inv_b, "second invariant file")->required();

    CLI::App* ver = app.add_subcommand("verify", "run a property suite");
    ver->add_option("--suite", suite, "involution|far|pentagon|euler|oracle")
        ->required();
    ver->add_option("--trials", trials, "trial count")->capture_default_str();
    ver->add_option("--seed", seed, "seed (default: TROPBRAID_SEED or 0)")
        ->each([&](const std::string&) { seed_given = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64; // usage
    }

    try {
        if (!seed_given) seed = env_seed();
        PlanArgs pa{in, word, n, word_given};
        if (del->parsed()) return cmd_delaunay(in, out, eps, format);
        if (trace->parsed())
            return cmd_trace(pa, seed, eps, dt, dt_min, out, format, simplify);
        if (invc->parsed())
            return cmd_invariant(pa, seed, eps, dt, dt_min, labels_spec, out,
                                 format);
        if (cmp->parsed()) return cmd_compare(inv_a, inv_b);
        if (ver->parsed()) return cmd_verify(suite, seed, trials);
        return 64;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const GeometryError& e) {
        std::cerr << "geometry error: " << e.what() << "\n";
        return 2;
    } catch (const MotionError& e) {
        std::cerr << "motion error: " << e.what() << "\n";
        return 3;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
