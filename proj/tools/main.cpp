#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <thread>

#include "CLI11.hpp"
#include "gsp4/admissible.hpp"
#include "io.hpp"

using namespace gsp4;
using gsp4::cli::json;
using gsp4::cli::to_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitUsage = 64;

struct RunConfig {
    Int p = 37;
    int f = 1;
    std::uint64_t seed = 1;
    int box = kDefaultBox;
    std::string format = "json";
    std::optional<int> depth_rhobar, depth_tau, depth_weight;

    void validate() const {
        if (p < 5 || !is_prime(p)) throw ValidationError("p must be a prime >= 5");
        if (f < 1) throw ValidationError("f must be positive");
        if (box < 8) throw ValidationError("box radius R must be at least 8");
        if (format != "json" && format != "table" && format != "dot") throw ValidationError("unknown format " + format);
    }
};

// Largest depth any weight in the lowest alcove reaches.
int max_depth(Int p) {
    int best = -1;
    for (Int a = 0; a <= p; ++a)
        for (Int b = 0; b <= p; ++b) best = std::max(best, depth_in_lowest_alcove(Weight{a - 2, b - 1, 0}, p));
    return best;
}

Thresholds thresholds(const RunConfig& c) {
    Thresholds th;
    th.rhobar = std::min(th.rhobar, max_depth(c.p));
    if (c.depth_rhobar) th.rhobar = *c.depth_rhobar;
    if (c.depth_tau) th.tau = *c.depth_tau;
    if (c.depth_weight) th.weight = *c.depth_weight;
    return th;
}

json header(const std::string& kind, const RunConfig& c) {
    Thresholds th = thresholds(c);
    return {{"schema", cli::schema(kind)},
            {"config", {{"p", c.p}, {"f", c.f}, {"seed", c.seed}, {"box", c.box}}},
            {"thresholds", {{"rhobar", th.rhobar}, {"tau", th.tau}, {"weight", th.weight}}}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string tag(const ExtAffine& x, const Weight& lambda) {
    int c = colength(x, lambda);
    if (c == 0) return "extremal";
    if (c == 1) return is_regular(x) ? "colength-one-regular" : "colength-one-irregular";
    return "colength-" + std::to_string(c);
}

int cmd_adm(const RunConfig& cfg, const std::string& lambda_text) {
    const Weight lambda = cli::parse_weight(lambda_text);
    const auto xs = adm_set(lambda);
    if (cfg.format == "table") {
        std::cout << "# Adm" << to_string(lambda) << ": " << xs.size() << " elements\n";
        std::cout << "element\tlength\tcolength\tregular\tclass\n";
        for (const auto& x : xs)
            std::cout << to_string(x) << "\t" << length(x) << "\t" << colength(x, lambda) << "\t"
                      << (is_regular(x) ? "yes" : "no") << "\t" << tag(x, lambda) << "\n";
        return kExitOk;
    }
    json out = header("adm", cfg);
    out["lambda"] = to_json(lambda);
    json el = json::array();
    int regular = 0;
    for (const auto& x : xs) {
        json e = to_json(x);
        e["length"] = length(x);
        e["colength"] = colength(x, lambda);
        e["regular"] = is_regular(x);
        e["class"] = tag(x, lambda);
        regular += is_regular(x);
        el.push_back(e);
    }
    out["count"] = xs.size();
    out["regular_count"] = regular;
    out["elements"] = el;
    emit(out);
    return kExitOk;
}

int cmd_ap(const RunConfig& cfg, bool prime) {
    const auto& pairs = prime ? enumerate_APprime(cfg.f) : enumerate_AP(cfg.f);
    if (cfg.format == "table") {
        std::cout << "# " << (prime ? "AP'" : "AP") << " f=" << cfg.f << ": " << pairs.size() << " pairs\n";
        for (const auto& q : pairs) {
            for (int j = 0; j < cfg.f; ++j) std::cout << (j ? " | " : "") << to_string(q.w1[j]) << " ; " << to_string(q.w2[j]);
            std::cout << "\n";
        }
        return kExitOk;
    }
    json out = header(prime ? "ap-prime" : "ap", cfg);
    json arr = json::array();
    for (const auto& q : pairs) {
        json e = to_json(q);
        e["admissible"] = ap_admissible(q);
        arr.push_back(e);
    }
    out["count"] = pairs.size();
    out["pairs"] = arr;
    emit(out);
    return kExitOk;
}

json table_json(const WeightTable& t) {
    json arr = json::array();
    for (const auto& [q, s] : t) arr.push_back({{"pair", to_json(q)}, {"weight", to_json(s)}});
    return arr;
}

int cmd_weights(const RunConfig& cfg, const std::string& rb, const std::string& ta, const std::string& mode_in) {
    const Thresholds th = thresholds(cfg);
    std::string mode = mode_in;
    if (mode.empty()) mode = !rb.empty() && !ta.empty() ? "intersect" : (!ta.empty() ? "jh" : "wq");
    json out = header("weights", cfg);
    out["mode"] = mode;
    std::optional<TamePresentation> rhobar, tau;
    if (!rb.empty()) {
        rhobar = cli::load_presentation(rb, cfg.p);
        out["rhobar"] = to_json(*rhobar);
    }
    if (!ta.empty()) {
        tau = cli::load_presentation(ta, cfg.p);
        out["tau"] = to_json(*tau);
    }
    if (mode == "jh") {
        if (!tau) throw ValidationError("--jh needs --tau");
        out["weights"] = table_json(jh_factors(*tau, th.weight));
    } else if (mode == "wq") {
        if (!rhobar) throw ValidationError("--wq needs --rhobar");
        out["weights"] = table_json(w_question(*rhobar, th.weight));
    } else {
        if (!rhobar || !tau) throw ValidationError("--intersect needs --rhobar and --tau");
        const auto wq = w_question(*rhobar, th.weight);
        const auto jh = jh_factors(*tau, th.weight);
        json arr = json::array();
        for (const auto& s : intersect_W_JH(*rhobar, *tau, th.weight)) {
            json a = json::array(), b = json::array();
            for (const auto& [q, x] : wq)
                if (x == s) a.push_back(to_json(q));
            for (const auto& [q, x] : jh)
                if (x == s) b.push_back(to_json(q));
            arr.push_back({{"weight", to_json(s)}, {"rhobar_pairs", a}, {"tau_pairs", b}});
        }
        out["weights"] = arr;
    }
    out["count"] = out["weights"].size();
    emit(out);
    return kExitOk;
}

json chain_json(const std::vector<AdjacencyInstance>& c) {
    json arr = json::array();
    for (const auto& inst : c)
        arr.push_back({{"s", to_string(inst.s)}, {"from", to_json(inst.sigma1)}, {"to", to_json(inst.sigma2)}});
    return arr;
}

int cmd_graph(const RunConfig& cfg, const std::string& rb, const std::string& dot_path, const std::string& chain_arg,
              bool obvious_only, bool instances) {
    if (rb.empty()) throw ValidationError("graph needs --rhobar");
    const Thresholds th = thresholds(cfg);
    const TamePresentation rhobar = cli::load_presentation(rb, cfg.p);
    const WeightGraph g = build_graph(rhobar, th, obvious_only);
    std::set<SerreWeight> obvious;
    for (const auto& w : weyl_tuples(rhobar.f())) obvious.insert(obvious_weight(rhobar, w));

    if (!dot_path.empty()) {
        std::ofstream o(dot_path);
        if (!o) throw ValidationError("cannot write '" + dot_path + "'");
        o << g.to_dot(obvious);
    }
    if (cfg.format == "dot") {
        std::cout << g.to_dot(obvious);
    } else {
        json out = header("graph", cfg);
        out["rhobar"] = to_json(rhobar);
        out["obvious_only"] = obvious_only;
        json vs = json::array();
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            vs.push_back({{"index", i}, {"weight", to_json(g.vertices[i])}, {"obvious", obvious.count(g.vertices[i]) > 0}});
        json es = json::array();
        std::set<std::string> warnings;
        for (const auto& [e, inst] : g.edges) {
            json labels = json::array();
            for (const auto& x : inst) {
                labels.push_back(to_string(x.s));
                for (const auto& w : x.warnings) warnings.insert(w);
            }
            json edge = {{"a", e.first}, {"b", e.second}, {"labels", labels}};
            if (instances) {
                json all = json::array();
                for (const auto& x : inst) all.push_back(to_json(x));
                edge["instances"] = all;
            }
            es.push_back(edge);
        }
        out["vertices"] = vs;
        out["edges"] = es;
        out["connected"] = g.connected();
        out["warnings"] = warnings;
        if (!chain_arg.empty()) {
            const SerreWeight sigma = cli::load_serre_weight(chain_arg, cfg.p);
            Chain c = find_chain(rhobar, g, sigma, th);
            out["chain"] = {{"start", to_json(sigma)}, {"bfs", chain_json(c.bfs)}, {"steered", chain_json(c.steered)}};
        }
        emit(out);
    }
    if (!obvious_only && !g.connected()) {
        std::cerr << "error: the weight graph is not connected\n";
        return kExitInvariant;
    }
    return kExitOk;
}

int cmd_cycles(const RunConfig& cfg, const std::string& sigma_arg, bool bm, const std::string& weyl_arg,
               const std::string& rb, const std::string& ta, bool colength_one) {
    const Thresholds th = thresholds(cfg);
    json out = header("cycles", cfg);
    bool any = false;
    if (bm) {
        if (sigma_arg.empty()) throw ValidationError("--bm needs --sigma");
        const SerreWeight sigma = cli::load_serre_weight(sigma_arg, cfg.p);
        out["sigma"] = to_json(sigma);
        out["bm_cycle"] = to_json(bm_cycle(sigma, th.weight));
        any = true;
    }
    if (!weyl_arg.empty()) {
        const Weight l = cli::parse_weight(weyl_arg);
        out["weyl_class"] = {{"lambda", to_json(l)}, {"class", to_json(weyl_class(l, cfg.p))}};
        any = true;
    }
    if (colength_one) {
        if (rb.empty() || ta.empty()) throw ValidationError("--colength-one needs --rhobar and --tau");
        const TamePresentation rhobar = cli::load_presentation(rb, cfg.p), tau = cli::load_presentation(ta, cfg.p);
        const auto rep = colength_one_components(rhobar, tau, th.weight);
        json ws = json::array();
        for (const auto& s : rep.weights) ws.push_back(to_json(s));
        const auto wq = image(w_question(rhobar, th.weight));
        const Cycle sum = bm_sum(Weight{}, tau, std::nullopt, th.weight).restricted_to(wq);
        out["rhobar"] = to_json(rhobar);
        out["tau"] = to_json(tau);
        out["colength_one"] = {{"weights", ws},
                               {"embeddings_in_two", rep.embeddings_in_two},
                               {"expected_count", Int{1} << rep.embeddings_in_two},
                               {"bm_sum_on_predicted", to_json(sum)},
                               {"consistent", sum.support() == rep.weights}};
        any = true;
    }
    if (!any) throw ValidationError("cycles needs --bm, --weyl-class or --colength-one");
    emit(out);
    return kExitOk;
}

struct DrawResult {
    int index = 0;
    bool similitude = false, pattern = false, monodromy = false, perturbed_fails = false, mod_p = false;
    std::string shape;
    std::string failure;
    bool ok() const { return similitude && pattern && monodromy && perturbed_fails && mod_p; }
};

DrawResult verify_draw(Int p, std::uint64_t seed, int index) {
    std::seed_seq sq{seed, static_cast<std::uint64_t>(index)};
    std::mt19937_64 rng(sq);
    DrawResult r;
    r.index = index;
    const auto q = random_regcolone(rng, p);
    const auto a = build_regcolone_matrix(q, Q(p));
    const auto sim = symplectic_similitude(a, Q(p));
    r.similitude = sim.ok && sim.unit && sim.e_power == 3;
    r.pattern = e_divisor_pattern(a, Q(p)) == std::array<int, 4>{3, 2, 1, 0};
    const auto d = monodromy_defect(a, q.monodromy(), Q(p));
    r.monodromy = d.pass && Q(q.c00 * q.y()) == Q(p);
    auto bad = q;
    bad.c33 += 1;
    const auto e = monodromy_defect(build_regcolone_matrix(bad, Q(p)), bad.monodromy(), Q(p));
    r.perturbed_fails = !e.pass && e.clause == 1;

    FqScope scope(p);
    const auto ab = reduce(a);
    MonodromyParams<Fq> m;
    for (int i = 0; i < 4; ++i) m.diag[i] = reduce(q.monodromy().diag[i]);
    const DualElement z = shape_of(ab);
    r.shape = to_string(z);
    const auto adm = adm_dual(kEta);
    r.mod_p = monodromy_defect(ab, m, Fq(0)).pass && std::find(adm.begin(), adm.end(), z) != adm.end();
    if (!r.ok()) {
        r.failure = !r.similitude ? "similitude"
                    : !r.pattern  ? "elementary divisors"
                    : !r.monodromy ? "monodromy: " + d.detail
                    : !r.perturbed_fails ? "perturbation not detected"
                                        : "reduction mod p";
    }
    return r;
}

int cmd_localmodel(const RunConfig& cfg, bool verify, int draws, bool sample, const std::string& shape_path, Int q) {
    if (verify) {
        if (draws < 1) throw ValidationError("--draws must be positive");
        const unsigned threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
        std::vector<std::future<std::vector<DrawResult>>> parts;
        for (unsigned t = 0; t < threads; ++t)
            parts.push_back(std::async(std::launch::async, [&, t] {
                std::vector<DrawResult> r;
                for (int i = static_cast<int>(t); i < draws; i += static_cast<int>(threads))
                    r.push_back(verify_draw(cfg.p, cfg.seed, i));
                return r;
            }));
        std::vector<DrawResult> all;
        for (auto& f : parts) {
            auto r = f.get();
            all.insert(all.end(), r.begin(), r.end());
        }
        std::sort(all.begin(), all.end(), [](const DrawResult& a, const DrawResult& b) { return a.index < b.index; });
        json out = header("localmodel-verify", cfg);
        int passed = 0;
        std::map<std::string, int> shapes;
        json failures = json::array();
        for (const auto& r : all) {
            passed += r.ok();
            ++shapes[r.shape];
            if (!r.ok()) failures.push_back({{"draw", r.index}, {"reason", r.failure}});
        }
        out["draws"] = draws;
        out["passed"] = passed;
        out["shapes_mod_p"] = shapes;
        out["failures"] = failures;
        emit(out);
        return passed == draws ? kExitOk : kExitInvariant;
    }
    if (sample) {
        std::seed_seq sq{cfg.seed, std::uint64_t{0}};
        std::mt19937_64 rng(sq);
        const auto params = random_regcolone(rng, cfg.p);
        json out = cli::matrix_to_json(build_regcolone_matrix(params, Q(cfg.p)));
        out["p"] = cfg.p;
        emit(out);
        return kExitOk;
    }
    if (!shape_path.empty()) {
        if (q < 2 || !is_prime(q)) throw ValidationError("--q must be prime");
        const PolyMat<Q> a = cli::matrix_from_json(cli::read_json_file(shape_path));
        FqScope scope(q);
        const PolyMat<Fq> ab = reduce(a);
        const DualElement z = shape_of(ab);
        const auto sim = symplectic_similitude(ab, Fq(0));
        const auto adm = adm_dual(kEta);
        json out = header("localmodel-shape", cfg);
        out["q"] = q;
        out["shape"] = to_json(z);
        out["length"] = dual_length(z);
        out["in_adm_eta"] = std::find(adm.begin(), adm.end(), z) != adm.end();
        out["symplectic_similitude"] = sim.ok;
        out["elementary_divisors"] = e_divisor_pattern(ab, Fq(0));
        emit(out);
        return kExitOk;
    }
    throw ValidationError("localmodel needs --verify-regcolone, --sample-regcolone or --shape");
}

int cmd_selfcheck(const RunConfig& cfg) {
    json checks = json::array();
    bool all = true;
    auto check = [&](const std::string& name, auto&& fn) {
        bool ok = false;
        std::string detail;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        all = all && ok;
        json c = {{"name", name}, {"ok", ok}};
        if (!detail.empty()) c["error"] = detail;
        checks.push_back(c);
    };
    check("root datum", [] {
        check_root_datum();
        return true;
    });
    check("length of t_eta", [] { return length(ExtAffine::translation(kEta)) == 7; });
    check("restricted alcove chain", [] {
        return uparrow_leq(restricted_alcove(0), restricted_alcove(1)) &&
               uparrow_leq(restricted_alcove(1), restricted_alcove(2)) &&
               uparrow_leq(restricted_alcove(2), restricted_alcove(3));
    });
    check("upper arrow antisymmetric on box", [&] {
        const auto as = alcoves_in_box(std::min(cfg.box, 3));
        for (const auto& A : as)
            for (const auto& B : as)
                if (!(A == B) && uparrow_leq(A, B, cfg.box) && uparrow_leq(B, A, cfg.box)) return false;
        return true;
    });
    check("admissible set sizes", [] { return adm_set(kEta).size() == 63 && adm_regular(kEta).size() == 20; });
    check("AP and AP' sizes", [] { return enumerate_AP(1).size() == 20 && enumerate_APprime(1).size() == 20; });
    check("Iwahori sandwich", [] {
        FqScope scope(5);
        std::mt19937_64 rng(3);
        for (const auto& z : adm_dual(kEta))
            if (!(shape_of(random_iwahori(rng) * monomial_matrix<Fq>(z) * random_iwahori(rng)) == z)) return false;
        return true;
    });
    check("colength-one monodromy", [&] {
        std::mt19937_64 rng(cfg.seed);
        const auto q = random_regcolone(rng, cfg.p);
        return monodromy_defect(build_regcolone_matrix(q, Q(cfg.p)), q.monodromy(), Q(cfg.p)).pass;
    });
    json out = header("selfcheck", cfg);
    out["checks"] = checks;
    out["ok"] = all;
    emit(out);
    return all ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight computations for GSp4: admissible sets, Serre weights, adjacency graphs, cycles and local models",
                 "gsp4"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--p", cfg.p, "Prime")->capture_default_str();
    app.add_option("--f", cfg.f, "Number of embeddings")->capture_default_str();
    app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    app.add_option("--box", cfg.box, "Box radius R for alcove searches")->capture_default_str();
    app.add_option("--format", cfg.format, "json, table or dot")->capture_default_str();
    app.add_option("--depth-rhobar", cfg.depth_rhobar, "Override the required depth of rhobar");
    app.add_option("--depth-tau", cfg.depth_tau, "Override the required depth of tame types");
    app.add_option("--depth-weight", cfg.depth_weight, "Override the required depth of Serre weights");

    std::string lambda = "2,1,0";
    bool adm_json = false, adm_table = false;
    auto* adm = app.add_subcommand("adm", "List the admissible set");
    adm->add_option("--lambda", lambda, "Dominant cocharacter a,b,c")->capture_default_str();
    adm->add_flag("--json", adm_json, "JSON output");
    adm->add_flag("--table", adm_table, "Tab-separated output");

    bool prime = false;
    auto* ap = app.add_subcommand("ap", "Enumerate AP or AP' pairs");
    ap->add_flag("--prime", prime, "Enumerate AP' instead of AP");

    std::string rb, ta, sigma, weyl, dot, chain;
    bool jh = false, wq = false, inter = false;
    auto* weights = app.add_subcommand("weights", "Predicted weights and Jordan-Holder factors");
    weights->add_option("--rhobar", rb, "Presentation of rhobar: fixture path or word:a,b,c;...");
    weights->add_option("--tau", ta, "Presentation of tau: fixture path or word:a,b,c;...");
    auto* g_jh = weights->add_flag("--jh", jh, "Jordan-Holder factors of tau");
    auto* g_wq = weights->add_flag("--wq", wq, "Predicted weights of rhobar");
    auto* g_in = weights->add_flag("--intersect", inter, "Their intersection");
    g_jh->excludes(g_wq, g_in);
    g_wq->excludes(g_in);

    bool obvious_only = false, instances = false;
    auto* graph = app.add_subcommand("graph", "Adjacency graph on predicted weights");
    graph->add_option("--rhobar", rb, "Presentation of rhobar")->required();
    graph->add_option("--dot", dot, "Write the graph in DOT format to this file");
    graph->add_option("--chain", chain, "Serre weight to connect to an obvious weight");
    graph->add_flag("--obvious-only", obvious_only, "Use only edges from obvious pairs");
    graph->add_flag("--instances", instances, "Include the witnessing types of every edge");

    bool bm = false, col1 = false;
    auto* cycles = app.add_subcommand("cycles", "Breuil-Mezard cycles");
    cycles->add_option("--sigma", sigma, "Serre weight: fixture path or a,b,c;...");
    cycles->add_flag("--bm", bm, "Cycle of sigma");
    cycles->add_option("--weyl-class", weyl, "Weyl module class of a,b,c");
    cycles->add_option("--rhobar", rb, "Presentation of rhobar");
    cycles->add_option("--tau", ta, "Presentation of tau");
    cycles->add_flag("--colength-one", col1, "Components in the colength-one configuration");

    bool verify = false, sample = false;
    int draws = 100;
    std::string shape;
    Int q = 37;
    auto* lm = app.add_subcommand("localmodel", "Local model matrices");
    lm->add_flag("--verify-regcolone", verify, "Check random members of the colength-one family");
    lm->add_option("--draws", draws, "Number of draws")->capture_default_str();
    lm->add_flag("--sample-regcolone", sample, "Print one member of the family as JSON");
    lm->add_option("--shape", shape, "Matrix JSON file whose shape to compute");
    lm->add_option("--q", q, "Residue field size for --shape")->capture_default_str();

    auto* self = app.add_subcommand("selfcheck", "Run startup assertions and smoke tests");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (adm_table) cfg.format = "table";
        if (adm_json) cfg.format = "json";
        cfg.validate();
        if (adm->parsed()) return cmd_adm(cfg, lambda);
        if (ap->parsed()) return cmd_ap(cfg, prime);
        if (weights->parsed()) return cmd_weights(cfg, rb, ta, jh ? "jh" : wq ? "wq" : inter ? "intersect" : "");
        if (graph->parsed()) return cmd_graph(cfg, rb, dot, chain, obvious_only, instances);
        if (cycles->parsed()) return cmd_cycles(cfg, sigma, bm, weyl, rb, ta, col1);
        if (lm->parsed()) return cmd_localmodel(cfg, verify, draws, sample, shape, q);
        if (self->parsed()) return cmd_selfcheck(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InvariantError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariant;
    }
    std::cerr << app.help();
    return kExitUsage;
}
