// Command-line front end: fixtures, exports, diagnostics and the
// median-divergence experiment, all emitting deterministic artifacts.

#include "raag/artifacts.hpp"
#include "raag/specparse.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

namespace {

using namespace raag;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitResourceCap = 3;

struct CommonOpts {
    std::string graph_path;
    std::string out_path;
    std::uint64_t seed = 1;
};

GraphPtr load_graph(const CommonOpts& c) { return DefiningGraph::from_json_file(c.graph_path); }

void require_experiment_ready(const GraphPtr& g)
{
    const std::string defect = g->experiment_defect();
    if (!defect.empty()) throw ValidationError(defect);
}

std::vector<Rat> parse_lambda_list(const std::string& text)
{
    std::vector<Rat> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (!tok.empty()) out.push_back(rat_parse(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw ValidationError("empty lambda list");
    return out;
}

std::pair<long long, long long> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const long long v = std::stoll(text);
        return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

// Builds the experiment context: distinguished vertex, psi, charts.
struct Experiment {
    GraphPtr graph;
    Gen vertex;
    Quasimorphism psi;
    Rat lambda;
};

Experiment make_experiment(const GraphPtr& graph, const std::string& vertex_name, Rat lambda)
{
    require_experiment_ready(graph);
    const Gen v = vertex_name.empty() ? default_distinguished_vertex(graph)
                                      : graph->index_of(vertex_name);
    return Experiment{graph, v, default_link_psi(graph, v), lambda};
}

int run_validate_graph(const CommonOpts& c)
{
    RunMeta meta("validate-graph");
    meta.set("graph", c.graph_path);
    const GraphPtr g = load_graph(c); // throws naming the violation
    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::parse(meta.json_meta());
    j["valid"] = true;
    j["vertices"] = g->vertex_count();
    j["edges"] = g->edges().size();
    const std::string defect = g->experiment_defect();
    j["experiment_ready"] = defect.empty();
    if (!defect.empty()) j["experiment_defect"] = defect;
    write_artifact(c.out_path, j.dump(2) + "\n");
    return kExitOk;
}

int run_normal_form(const CommonOpts& c, const std::string& word)
{
    RunMeta meta("normal-form");
    meta.set("graph", c.graph_path);
    meta.set("word", word);
    const GraphPtr g = load_graph(c);
    const GroupWord w = GroupWord::parse(g, word);
    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::parse(meta.json_meta());
    j["input"] = word;
    j["normal_form"] = w.to_string();
    j["length"] = w.length();
    write_artifact(c.out_path, j.dump(2) + "\n");
    return kExitOk;
}

int run_ball(const CommonOpts& c, long long radius, bool list, std::size_t cap)
{
    RunMeta meta("ball");
    meta.set("graph", c.graph_path);
    meta.set("radius", radius);
    meta.set("cap", static_cast<long long>(cap));
    const GraphPtr g = load_graph(c);
    const Ball ball = ball_enumerate(g, static_cast<std::size_t>(radius), cap);
    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::parse(meta.json_meta());
    j["size"] = ball.size();
    auto& spheres = j["sphere_sizes"] = nlohmann::ordered_json::array();
    for (const auto& s : ball.spheres) spheres.push_back(s.size());
    if (list) {
        auto& words = j["elements"] = nlohmann::ordered_json::array();
        for (const auto& s : ball.spheres)
            for (const auto& w : s) words.push_back(w.to_string());
    }
    write_artifact(c.out_path, j.dump(2) + "\n");
    return kExitOk;
}

int run_ext_ball(const CommonOpts& c, const std::string& base, long long conj_radius,
                 const std::string& format)
{
    RunMeta meta("ext-ball");
    meta.set("graph", c.graph_path);
    meta.set("base", base);
    meta.set("conj_radius", conj_radius);
    meta.set("format", format);
    const GraphPtr g = load_graph(c);
    const Gen b = base.empty() ? Gen{0} : g->index_of(base);
    const ExtBall ball =
        extension_ball(canonical_vertex(b, GroupWord::identity(g)), static_cast<std::size_t>(conj_radius));
    if (format == "dot") {
        write_artifact(c.out_path, meta.comment_header("//") + ball.to_dot());
    } else {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(ball.to_json());
        j["meta"] = nlohmann::ordered_json::parse(meta.json_meta());
        write_artifact(c.out_path, j.dump(2) + "\n");
    }
    return kExitOk;
}

int run_qm_eval(const CommonOpts& c, const std::string& chart_spec, const std::string& word)
{
    RunMeta meta("qm-eval");
    meta.set("graph", c.graph_path);
    meta.set("chart", chart_spec);
    meta.set("word", word);
    const GraphPtr g = load_graph(c);
    const ParsedQm qm = parse_qm_spec(g, chart_spec);
    const GroupWord w = GroupWord::parse(g, word);
    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::parse(meta.json_meta());
    j["value"] = rat_to_string(qm.qm.eval(w));
    j["defect_bound"] = rat_to_string(qm.qm.defect_bound());
    j["homogeneous"] = qm.qm.homogeneous();
    j["domain"] = qm.qm.domain().describe(g);
    write_artifact(c.out_path, j.dump(2) + "\n");
    return kExitOk;
}

int run_quasiline_dist(const CommonOpts& c, const std::string& chart_spec,
                       const std::string& cutoff, const std::string& word, long long search_cap,
                       long long tau_radius)
{
    RunMeta meta("quasiline-dist");
    meta.set("graph", c.graph_path);
    meta.set("chart", chart_spec);
    meta.set("word", word);
    meta.set("search_cap", search_cap);
    const GraphPtr g = load_graph(c);
    const ParsedQm qm = parse_qm_spec(g, chart_spec);
    if (!qm.vertex)
        throw ValidationError("quasiline-dist needs a chart naming its vertex (exp/lam spec)");
    const GroupWord z = GroupWord::from_letters(g, {{*qm.vertex, 1}});
    const Rat C = cutoff.empty() ? QuasilineChart::default_cutoff(qm.qm, z) : rat_parse(cutoff);
    meta.set("cutoff", C);
    std::vector<GroupWord> probe{z};
    for (Gen a = 0; a < g->vertex_count(); ++a)
        probe.push_back(GroupWord::from_letters(g, {{a, 1}}));
    const QuasilineChart chart(qm.qm, C, *qm.vertex, z, probe);
    const GroupWord w = GroupWord::parse(g, word);

    meta.set("tau_radius", tau_radius);
    const auto bounds = tau_distance_bounds(w, chart);
    const auto exact =
        tau_distance_exact_ball(w, chart, search_cap, static_cast<std::size_t>(tau_radius));
    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::parse(meta.json_meta());
    j["coordinate"] = rat_to_string(chart.coord(w));
    j["in_tau"] = chart.in_tau(w);
    j["lower"] = bounds.lower;
    j["upper"] = bounds.upper;
    if (exact)
        j["exact"] = *exact;
    else {
        j["exact"] = "unknown";
        j["truncated"] = true;
    }
    write_artifact(c.out_path, j.dump(2) + "\n");
    return kExitOk;
}

int run_blowup_export(const CommonOpts& c, const std::string& vertex, long long conj_radius,
                      const std::string& window, const std::string& lambda,
                      const std::string& format)
{
    RunMeta meta("blowup-export");
    meta.set("graph", c.graph_path);
    meta.set("conj_radius", conj_radius);
    meta.set("window", window);
    meta.set("lambda", lambda);
    meta.set("format", format);
    const GraphPtr g = load_graph(c);
    const Experiment ex = make_experiment(g, vertex, rat_parse(lambda));
    meta.set("vertex", g->name(ex.vertex));
    meta.set("psi", ex.psi.spec());
    const ChartAssignment charts(g, ex.vertex, ex.lambda, ex.psi);
    const ExtBall support = extension_ball(canonical_vertex(ex.vertex, GroupWord::identity(g)),
                                           static_cast<std::size_t>(conj_radius));
    const BlowupBall blowup(support, charts, rat_parse(window));
    if (format == "dot") {
        write_artifact(c.out_path, meta.comment_header("//") + blowup.to_dot());
    } else {
        nlohmann::ordered_json j = nlohmann::ordered_json::parse(blowup.to_json());
        j["meta"] = nlohmann::ordered_json::parse(meta.json_meta());
        write_artifact(c.out_path, j.dump(2) + "\n");
    }
    return kExitOk;
}

int run_axiom_check(const CommonOpts& c, const std::string& vertex, long long conj_radius,
                    const std::string& window, const std::string& lambda, long long R,
                    long long T, long long group_radius, long long samples)
{
    RunMeta meta("axiom-check");
    meta.set("graph", c.graph_path);
    meta.set("conj_radius", conj_radius);
    meta.set("window", window);
    meta.set("lambda", lambda);
    meta.set("R", R);
    meta.set("T", T);
    meta.set("group_radius", group_radius);
    meta.set("samples", samples);
    meta.set("seed", static_cast<long long>(c.seed));

    const GraphPtr g = load_graph(c);
    const Experiment ex = make_experiment(g, vertex, rat_parse(lambda));
    meta.set("vertex", g->name(ex.vertex));
    meta.set("psi", ex.psi.spec());
    const ChartAssignment charts(g, ex.vertex, ex.lambda, ex.psi);
    const ExtBall support = extension_ball(canonical_vertex(ex.vertex, GroupWord::identity(g)),
                                           static_cast<std::size_t>(conj_radius));
    const BlowupBall blowup(support, charts, rat_parse(window));
    const Ball group_ball = ball_enumerate(g, static_cast<std::size_t>(group_radius));
    const LevelSets levels(blowup, group_ball, R);

    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::parse(meta.json_meta());

    // Link and saturation closed forms against the generic computations.
    std::size_t link_checked = 0, link_mismatch = 0;
    std::size_t sat_checked = 0, sat_mismatch = 0;
    std::map<std::string, std::size_t> class_counts;
    for (const Simplex& s : blowup.simplices()) {
        if (!s.empty()) ++class_counts[to_string(blowup.classify(s))];
        if (blowup.link_of(s) != blowup.link_closed_form(s)) ++link_mismatch;
        ++link_checked;
        if (s.empty()) continue;
        if (const auto closed = blowup.saturation_closed_form(s)) {
            ++sat_checked;
            if (blowup.saturation(s) != *closed) ++sat_mismatch;
        }
    }
    j["link_oracle"] = {{"checked", link_checked}, {"mismatches", link_mismatch}};
    j["saturation_oracle"] = {{"checked", sat_checked}, {"mismatches", sat_mismatch}};
    j["simplex_classes"] = class_counts;

    // Realisation non-emptiness over maximal simplices.
    std::size_t realised = 0, possibly_empty = 0;
    for (const Simplex& s : blowup.maximal_simplices())
        (realisation(s, levels).possibly_empty ? possibly_empty : realised)++;
    j["realisations"] = {{"non_empty", realised}, {"possibly_empty", possibly_empty}};

    // Hyperbolicity estimates.
    const SimpleGraph aug = augmented_support_graph(levels, T);
    const DeltaReport delta_support = delta_hyperbolicity_estimate(support.adjacency);
    const DeltaReport delta_aug = delta_hyperbolicity_estimate(aug);
    j["delta_support"] = rat_to_string(delta_support.max_delta);
    j["delta_augmented"] = rat_to_string(delta_aug.max_delta);

    // Strong BGI per support vertex; the separation threshold stands in
    // for twice the ambient hierarchy constant, which is existential.
    const Rat bgi_threshold = Rat(2) * charts.max_cutoff();
    std::size_t bgi_checked = 0, bgi_vacuous = 0, bgi_passed = 0, bgi_violations = 0;
    for (std::uint32_t w = 0; w < support.vertices.size(); ++w) {
        const auto rep = strong_bgi_check(levels, w, aug, bgi_threshold);
        bgi_checked += rep.checked;
        bgi_vacuous += rep.vacuous;
        bgi_passed += rep.passed;
        bgi_violations += rep.violations;
    }
    j["strong_bgi"] = {{"threshold", rat_to_string(bgi_threshold)},
                       {"checked", bgi_checked},
                       {"vacuous", bgi_vacuous},
                       {"passed", bgi_passed},
                       {"violations", bgi_violations}};

    // Sampled consistency inequalities over transverse quasiline pairs.
    const CoordinateSystem cs(support, charts, static_cast<std::size_t>(group_radius));
    const auto pairs = cs.transverse_ell_pairs();
    Sampler rng(c.seed);
    const auto elements = group_ball.flatten();
    Rat worst(0);
    std::string witness;
    for (long long i = 0; i < samples; ++i) {
        const GroupWord& w = elements[static_cast<std::size_t>(rng.below(elements.size()))];
        const auto stat = cs.consistency_check(w, pairs);
        if (stat.max_violation > worst) {
            worst = stat.max_violation;
            witness = w.to_string() + " @ " + stat.witness_pair;
        }
    }
    j["consistency"] = {{"pairs", pairs.size()},
                        {"samples", samples},
                        {"max_violation", rat_to_string(worst)},
                        {"witness", witness}};

    write_artifact(c.out_path, j.dump(2) + "\n");
    return kExitOk;
}

int run_median(const CommonOpts& c, const std::string& vertex, long long conj_radius,
               const std::string& lambda, const std::vector<std::string>& words)
{
    if (words.size() != 3) throw ValidationError("median needs exactly three words");
    RunMeta meta("median");
    meta.set("graph", c.graph_path);
    meta.set("conj_radius", conj_radius);
    meta.set("lambda", lambda);
    meta.set("x", words[0]);
    meta.set("y", words[1]);
    meta.set("z", words[2]);
    const GraphPtr g = load_graph(c);
    const Experiment ex = make_experiment(g, vertex, rat_parse(lambda));
    meta.set("vertex", g->name(ex.vertex));
    const ChartAssignment charts(g, ex.vertex, ex.lambda, ex.psi);
    const ExtBall support = extension_ball(canonical_vertex(ex.vertex, GroupWord::identity(g)),
                                           static_cast<std::size_t>(conj_radius));
    const CoordinateSystem cs(support, charts);
    const MedianResult m = cs.median_tuple(GroupWord::parse(g, words[0]),
                                           GroupWord::parse(g, words[1]),
                                           GroupWord::parse(g, words[2]));
    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::parse(meta.json_meta());
    j["top"] = m.tuple.top.to_string();
    auto& ell = j["ell"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m.tuple.ell) ell[k] = rat_to_string(v);
    auto& reps = j["representatives"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m.quasiline_representatives) reps[k] = v.to_string();
    auto& u = j["u"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m.tuple.u) u[k] = v.to_string();
    write_artifact(c.out_path, j.dump(2) + "\n");
    return kExitOk;
}

int run_diverge_scan(const CommonOpts& c, const std::string& vertex, const std::string& l_range,
                     const std::string& lambdas, long long k_factor, const std::string& g_word,
                     const std::string& z_word)
{
    RunMeta meta("diverge-scan");
    meta.set("graph", c.graph_path);
    meta.set("l", l_range);
    meta.set("lambda", lambdas);
    meta.set("k_factor", k_factor);
    meta.set("seed", static_cast<long long>(c.seed));

    const GraphPtr g = load_graph(c);
    const auto lambda_list = parse_lambda_list(lambdas);
    if (lambda_list.size() != 2)
        throw ValidationError("diverge-scan needs exactly two lambda values");
    if (lambda_list[0] == lambda_list[1])
        throw ValidationError("lambda values must be pairwise distinct");
    const Experiment ex = make_experiment(g, vertex, lambda_list[0]);
    meta.set("vertex", g->name(ex.vertex));
    meta.set("psi", ex.psi.spec());

    const GroupWord zw =
        z_word.empty() ? GroupWord::from_letters(g, {{ex.vertex, 1}}) : GroupWord::parse(g, z_word);
    GroupWord gw = GroupWord::identity(g);
    if (g_word.empty()) {
        // Default: the shortlex-least non-commuting link pair, the pattern
        // the default psi counts.
        const auto& link = g->link(ex.vertex);
        bool found = false;
        for (std::size_t i = 0; i < link.size() && !found; ++i)
            for (std::size_t j = i + 1; j < link.size() && !found; ++j)
                if (!g->adjacent(link[i], link[j])) {
                    gw = GroupWord::from_letters(
                        g, {{std::min(link[i], link[j]), 1}, {std::max(link[i], link[j]), 1}});
                    found = true;
                }
        if (!found) throw ValidationError("no default g available; pass --g");
    } else {
        gw = GroupWord::parse(g, g_word);
    }
    meta.set("z", zw.to_string());
    meta.set("g", gw.to_string());

    const auto [l_lo, l_hi] = parse_range(l_range);
    if (l_lo < 0 || l_hi < l_lo) throw ValidationError("bad l range");
    std::vector<DivergenceRow> rows;
    for (long long l = l_lo; l <= l_hi; ++l)
        rows.push_back(median_divergence(g, ex.vertex, ex.psi, lambda_list[0], lambda_list[1],
                                         k_factor * l, l, zw, gw));
    write_artifact(c.out_path, divergence_csv(meta, rows));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact coordinate computations on right-angled Artin groups"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string word, chart_spec, cutoff, base, format = "json", window = "2", lambda = "1";
    std::string l_range = "1..50", lambdas = "1,3", g_word, z_word, vertex;
    std::vector<std::string> words;
    long long radius = 2, conj_radius = 1, R = 2, T = 4, group_radius = 6, search_cap = 6;
    long long k_factor = 2, samples = 1000, tau_radius = 2;
    bool list_elements = false;
    std::size_t cap = kDefaultBallCap;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", common.graph_path, "defining graph JSON file")->required();
        sub->add_option("--out", common.out_path, "output path (stdout when omitted)");
        sub->add_option("--seed", common.seed, "sampling seed");
    };

    auto* validate = app.add_subcommand("validate-graph", "load and validate a defining graph");
    add_common(validate);

    auto* nf = app.add_subcommand("normal-form", "canonical form of a word");
    add_common(nf);
    nf->add_option("word", word, "word, e.g. \"b a b^-1\"")->required();

    auto* ball_cmd = app.add_subcommand("ball", "enumerate the ball of a given radius");
    add_common(ball_cmd);
    ball_cmd->add_option("--radius", radius, "word-length radius");
    ball_cmd->add_option("--cap", cap, "enumeration cap");
    ball_cmd->add_flag("--list", list_elements, "include the elements");

    auto* ext = app.add_subcommand("ext-ball", "extension-graph ball with coloring");
    add_common(ext);
    ext->add_option("--base", base, "center generator (default: first)");
    ext->add_option("--conj-radius", conj_radius, "conjugator-length truncation");
    ext->add_option("--format", format, "json or dot");

    auto* qm = app.add_subcommand("qm-eval", "evaluate a quasimorphism spec");
    add_common(qm);
    qm->add_option("--chart", chart_spec, "qm spec, e.g. lam:3:exp:b:brooks:ac")->required();
    qm->add_option("word", word, "word to evaluate")->required();

    auto* qd = app.add_subcommand("quasiline-dist", "tau-distance bounds and exact BFS value");
    add_common(qd);
    qd->add_option("--chart", chart_spec, "qm spec naming a vertex")->required();
    qd->add_option("--cutoff", cutoff, "cutoff C (default 2D+2|m(z)|+1)");
    qd->add_option("--search-cap", search_cap, "BFS factor cap");
    qd->add_option("--tau-radius", tau_radius, "radius of the enumerated tau-ball");
    qd->add_option("word", word, "word to measure")->required();

    auto* blow = app.add_subcommand("blowup-export", "export a blowup ball");
    add_common(blow);
    blow->add_option("--vertex", vertex, "distinguished vertex (default: first usable)");
    blow->add_option("--conj-radius", conj_radius, "support truncation");
    blow->add_option("--window", window, "quasiline coordinate window");
    blow->add_option("--lambda", lambda, "lambda of the distinguished chart");
    blow->add_option("--format", format, "json or dot");

    auto* axiom = app.add_subcommand("axiom-check", "ball-scale structure diagnostics");
    add_common(axiom);
    axiom->add_option("--vertex", vertex, "distinguished vertex");
    axiom->add_option("--conj-radius", conj_radius, "support truncation");
    axiom->add_option("--window", window, "quasiline coordinate window");
    axiom->add_option("--lambda", lambda, "lambda of the distinguished chart");
    axiom->add_option("--R", R, "coarse level-set radius");
    axiom->add_option("--T", T, "staple threshold");
    axiom->add_option("--radius", group_radius, "group ball radius");
    axiom->add_option("--samples", samples, "consistency sample count");

    auto* med = app.add_subcommand("median", "coordinatewise coarse median of three words");
    add_common(med);
    med->add_option("--vertex", vertex, "distinguished vertex");
    med->add_option("--conj-radius", conj_radius, "support truncation");
    med->add_option("--lambda", lambda, "lambda of the distinguished chart");
    med->add_option("words", words, "three words")->expected(3);

    auto* scan = app.add_subcommand("diverge-scan", "median divergence over an l-grid");
    add_common(scan);
    scan->add_option("--vertex", vertex, "distinguished vertex");
    scan->add_option("--l", l_range, "l range, e.g. 1..50");
    scan->add_option("--lambda", lambdas, "two lambda values, e.g. 1,3");
    scan->add_option("--k-factor", k_factor, "k = k-factor * l");
    scan->add_option("--g", g_word, "loxodromic-direction word (default: psi pattern)");
    scan->add_option("--z", z_word, "central word (default: the distinguished generator)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return run_validate_graph(common);
        if (nf->parsed()) return run_normal_form(common, word);
        if (ball_cmd->parsed()) return run_ball(common, radius, list_elements, cap);
        if (ext->parsed()) return run_ext_ball(common, base, conj_radius, format);
        if (qm->parsed()) return run_qm_eval(common, chart_spec, word);
        if (qd->parsed())
            return run_quasiline_dist(common, chart_spec, cutoff, word, search_cap, tau_radius);
        if (blow->parsed())
            return run_blowup_export(common, vertex, conj_radius, window, lambda, format);
        if (axiom->parsed())
            return run_axiom_check(common, vertex, conj_radius, window, lambda, R, T,
                                   group_radius, samples);
        if (med->parsed()) return run_median(common, vertex, conj_radius, lambda, words);
        if (scan->parsed())
            return run_diverge_scan(common, vertex, l_range, lambdas, k_factor, g_word, z_word);
    } catch (const ResourceCapError& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}
