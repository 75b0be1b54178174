// Command-line surface for the unit disk visibility graph pipeline.
//
// Exit codes: 0 success, 1 the decision is NO (not colorable / not found),
// 2 input or validation error (with a machine-readable JSON object on
// stderr).  All outputs are deterministic byte-for-byte.

#include "udvg/coloring.hpp"
#include "udvg/gadgets.hpp"
#include "udvg/jsonio.hpp"
#include "udvg/lemmas.hpp"
#include "udvg/reduce_poly.hpp"
#include "udvg/reduce_sat.hpp"
#include "udvg/render.hpp"
#include "udvg/visibility.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using udvg::io::Json;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw udvg::io::ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw udvg::io::ParseError("cannot open file for writing: " + path);
    out << text;
}

udvg::Scene load_scene(const std::string& path) {
    udvg::Scene scene = udvg::io::scene_from_json(udvg::io::parse_file(path));
    scene.validate_or_throw();
    return scene;
}

udvg::ThresholdPolicy policy_from(const std::string& name, bool unbounded) {
    if (unbounded) return udvg::ThresholdPolicy::Unbounded;
    if (name == "strict") return udvg::ThresholdPolicy::Strict;
    if (name == "closed") return udvg::ThresholdPolicy::Closed;
    throw udvg::io::ParseError("unknown threshold policy: " + name);
}

Json nae_cert_to_json(const udvg::ReductionCertificate& cert) {
    Json j;
    j["version"] = "1";
    j["kind"] = "nae3sat";
    j["neutral_anchor"] = cert.neutral_anchor;
    Json vars = Json::object();
    for (const auto& [var, idx] : cert.variable_anchor) vars[std::to_string(var)] = idx;
    j["variable_anchor"] = vars;
    Json clauses = Json::array();
    for (const auto& tri : cert.clause_anchor) clauses.push_back({tri[0], tri[1], tri[2]});
    j["clause_anchor"] = clauses;
    Json crossings = Json::array();
    for (const auto& q : cert.crossing_registry)
        crossings.push_back({q[0], q[1], q[2], q[3]});
    j["crossing_registry"] = crossings;
    j["planned"] = udvg::io::graph_to_json(cert.planned);
    return j;
}

Json poly_cert_to_json(const udvg::PolyCertificate& cert) {
    Json j;
    j["version"] = "1";
    j["kind"] = "planar3col";
    Json anchors = Json::object();
    for (const auto& [vert, idx] : cert.center_anchor) anchors[std::to_string(vert)] = idx;
    j["center_anchor"] = anchors;
    j["planned"] = udvg::io::graph_to_json(cert.planned);
    return j;
}

int run_verify_gadget(const std::string& name) {
    bool all_ok = true, matched = false;
    for (const udvg::GadgetFixture& fx : udvg::all_fixtures()) {
        if (!name.empty() && fx.name != name) continue;
        matched = true;
        bool ok = fx.scene.validate().empty();
        const udvg::Graph g = udvg::build_udvg(fx.scene, udvg::ThresholdPolicy::Closed);
        if (!udvg::graphs_equal(g, fx.reference)) ok = false;
        for (const auto& [role, idx] : fx.anchors)
            if (idx >= g.n) ok = false;
        std::cout << (ok ? "ok " : "FAIL ") << fx.name << "\n";
        all_ok = all_ok && ok;
    }
    if (!matched) throw udvg::io::ParseError("unknown gadget: " + name);
    return all_ok ? 0 : 1;
}

int run_verify_lemma(const std::string& name) {
    bool all_ok = true, matched = false;
    const auto report = [&](const std::string& what, bool ok) {
        std::cout << (ok ? "ok " : "FAIL ") << what << "\n";
        all_ok = all_ok && ok;
    };
    if (name.empty() || name == "scale") {
        matched = true;
        const auto out = udvg::scale_to_unit(
            {{udvg::Rational(3), udvg::Rational(4)}, {udvg::Rational(0), udvg::Rational(0)}});
        report("scale", out[0].x == udvg::Rational(3, 16) && out[0].y == udvg::Rational(1, 4));
    }
    if (name.empty() || name == "k16") {
        matched = true;
        bool ok = true;
        for (const udvg::GadgetFixture& fx : udvg::k16_fixtures()) {
            const udvg::Graph g = udvg::build_udvg(fx.scene, udvg::ThresholdPolicy::Closed);
            if (!udvg::find_induced_k16(g)) ok = false;
        }
        report("k16", ok);
    }
    if (name.empty() || name == "perturb") {
        matched = true;
        const std::vector<udvg::Point> line = {{udvg::Rational(0), udvg::Rational(0)},
                                               {udvg::Rational(1), udvg::Rational(0)},
                                               {udvg::Rational(2), udvg::Rational(0)}};
        const auto moved = udvg::perturb_general_position(line, udvg::Rational(1, 100));
        report("perturb", udvg::orientation(moved[0], moved[1], moved[2]) != 0);
    }
    if (!matched) throw udvg::io::ParseError("unknown lemma: " + name);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"unit disk visibility graphs: construction, coloring, reductions"};
    app.require_subcommand(1);

    std::string in_path, out_path, cert_path, precolor_path, policy_name = "closed";
    std::string gadget_name, lemma_name, budget_str = "1/100";
    bool unbounded = false, disks = false, edges = false;

    CLI::App* build = app.add_subcommand("build", "scene JSON -> UDVG graph JSON");
    build->add_option("scene", in_path)->required();
    build->add_option("-o,--output", out_path);
    build->add_option("--policy", policy_name)->check(CLI::IsMember({"closed", "strict"}));
    build->add_flag("--unbounded", unbounded, "ignore the distance threshold");

    CLI::App* color = app.add_subcommand("color", "graph JSON -> 3-coloring witness JSON");
    color->add_option("graph", in_path)->required();
    color->add_option("-o,--output", out_path);
    color->add_option("--precolor", precolor_path);

    CLI::App* reduce = app.add_subcommand("reduce", "run a hardness reduction compiler");
    reduce->require_subcommand(1);
    CLI::App* red_sat = reduce->add_subcommand("nae3sat", "formula -> segment scene");
    red_sat->add_option("formula", in_path)->required();
    red_sat->add_option("-o,--output", out_path)->required();
    red_sat->add_option("--cert", cert_path);
    CLI::App* red_poly =
        reduce->add_subcommand("planar3col", "4-regular planar layout -> polygon scene");
    red_poly->add_option("layout", in_path)->required();
    red_poly->add_option("-o,--output", out_path)->required();
    red_poly->add_option("--cert", cert_path);

    CLI::App* render = app.add_subcommand("render", "scene JSON -> SVG");
    render->add_option("scene", in_path)->required();
    render->add_option("-o,--output", out_path);
    render->add_flag("--disks", disks, "draw unit-diameter disks");
    render->add_flag("--edges", edges, "draw UDVG edges");

    CLI::App* verify = app.add_subcommand("verify", "self-check gadgets or lemmas");
    verify->require_subcommand(1);
    CLI::App* ver_gadget = verify->add_subcommand("gadget", "UDVG == reference per fixture");
    ver_gadget->add_option("name", gadget_name);
    CLI::App* ver_lemma = verify->add_subcommand("lemma", "scaling / k16 / perturbation");
    ver_lemma->add_option("name", lemma_name);

    CLI::App* lemma = app.add_subcommand("lemma", "apply a lemma transform to a scene");
    lemma->require_subcommand(1);
    CLI::App* lem_scale = lemma->add_subcommand("scale", "shrink points into a unit disk");
    lem_scale->add_option("scene", in_path)->required();
    lem_scale->add_option("-o,--output", out_path);
    CLI::App* lem_k16 = lemma->add_subcommand("k16", "search the UDVG for an induced K_{1,6}");
    lem_k16->add_option("scene", in_path)->required();
    lem_k16->add_option("-o,--output", out_path);
    CLI::App* lem_perturb = lemma->add_subcommand("perturb", "nudge points off common lines");
    lem_perturb->add_option("scene", in_path)->required();
    lem_perturb->add_option("-o,--output", out_path);
    lem_perturb->add_option("--budget", budget_str, "max per-coordinate move, rational");

    try {
        app.parse(argc, argv);

        if (build->parsed()) {
            const udvg::Scene scene = load_scene(in_path);
            const udvg::Graph g =
                udvg::build_udvg(scene, policy_from(policy_name, unbounded));
            write_text(out_path, udvg::io::dump(udvg::io::graph_to_json(g)));
            return 0;
        }
        if (color->parsed()) {
            const udvg::Graph g = udvg::io::graph_from_json(udvg::io::parse_file(in_path));
            udvg::Precoloring pre(g.n, -1);
            if (!precolor_path.empty())
                pre = udvg::io::precoloring_from_json(udvg::io::parse_file(precolor_path),
                                                      g.n);
            const auto witness = udvg::solve_3coloring(g, pre);
            if (!witness) return 1;
            write_text(out_path, udvg::io::dump(udvg::io::coloring_to_json(*witness)));
            return 0;
        }
        if (red_sat->parsed()) {
            const udvg::Formula f = udvg::parse_formula(slurp(in_path));
            const auto [scene, cert] = udvg::compile_nae3sat(f);
            write_text(out_path, udvg::io::dump(udvg::io::scene_to_json(scene)));
            if (!cert_path.empty())
                write_text(cert_path, udvg::io::dump(nae_cert_to_json(cert)));
            return 0;
        }
        if (red_poly->parsed()) {
            const udvg::PlanarInput input = udvg::parse_planar_input(slurp(in_path));
            const auto [scene, cert] = udvg::compile_planar(input);
            write_text(out_path, udvg::io::dump(udvg::io::scene_to_json(scene)));
            if (!cert_path.empty())
                write_text(cert_path, udvg::io::dump(poly_cert_to_json(cert)));
            return 0;
        }
        if (render->parsed()) {
            const udvg::Scene scene = load_scene(in_path);
            write_text(out_path, udvg::render_svg(scene, {disks, edges}));
            return 0;
        }
        if (ver_gadget->parsed()) return run_verify_gadget(gadget_name);
        if (ver_lemma->parsed()) return run_verify_lemma(lemma_name);
        if (lem_scale->parsed() || lem_perturb->parsed()) {
            udvg::Scene scene = load_scene(in_path);
            if (scene.kind != udvg::SceneKind::Points)
                throw udvg::io::ParseError("lemma transforms apply to point scenes");
            scene.points = lem_scale->parsed()
                               ? udvg::scale_to_unit(scene.points)
                               : udvg::perturb_general_position(
                                     scene.points, udvg::Rational::parse(budget_str));
            write_text(out_path, udvg::io::dump(udvg::io::scene_to_json(scene)));
            return 0;
        }
        if (lem_k16->parsed()) {
            const udvg::Scene scene = load_scene(in_path);
            const udvg::Graph g = udvg::build_udvg(scene, udvg::ThresholdPolicy::Closed);
            const auto found = udvg::find_induced_k16(g);
            Json j;
            j["found"] = found.has_value();
            if (found) j["vertices"] = *found;
            write_text(out_path, udvg::io::dump(j));
            return found ? 0 : 1;
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        Json err;
        err["error"] = "usage";
        err["detail"] = e.what();
        std::cerr << udvg::io::dump(err);
        return 2;
    } catch (const std::exception& e) {
        Json err;
        err["error"] = "invalid input";
        err["detail"] = e.what();
        std::cerr << udvg::io::dump(err);
        return 2;
    }
}
