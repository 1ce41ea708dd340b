#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "digitcurve/explore.hpp"
#include "digitcurve/geometry.hpp"
#include "digitcurve/kernels.hpp"
#include "digitcurve/morphism.hpp"
#include "digitcurve/report.hpp"
#include "digitcurve/suites.hpp"
#include "digitcurve/svg.hpp"
#include "digitcurve/tiling.hpp"

using namespace digitcurve;

namespace {

struct Common {
    std::string out;
    bool no_timing = false;
};

int finish(Report& r, const Common& c, std::chrono::steady_clock::time_point t0) {
    r.set_timing(!c.no_timing);
    r.set_wall_time_ms(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    std::cout << r.dump();
    return r.ok() ? 0 : 1;
}

Curve generate(int n, const std::string& source) {
    if (source == "morphism") return realize_phi(n);
    // digit rule: S_1 along +e, turn k from the batch kernel
    std::vector<std::uint8_t> bits((std::size_t{1} << n) - 1);
    if (!bits.empty()) kernels::body_turns(1, bits);
    return build_from_turn_bits({0, 0}, Heading::East, bits);
}

std::string turn_string(const Curve& c) {
    std::string s;
    s.reserve(c.size());
    for (Turn t : c.turns()) s.push_back(to_char(t));
    return s;
}

std::string render_tiles(const Tiling& t, const Polyline* overlay, int scale, double stroke) {
    static const char* fills[] = {"#f4d35e", "#9bc1bc", "#ed6a5a"};
    const auto lv = level_vectors(t.level);
    SvgDocument doc(scale);
    for (const auto& tile : t.tiles) {
        const auto c = corners(tile, lv);
        doc.add_polygon(c, fills[static_cast<int>(tile.kind)], "#555555", stroke / 2);
    }
    if (overlay) doc.add_polyline(overlay->vertices, "black", stroke);
    return doc.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"digit-sum curves: generation, verification, exploration, rendering"};
    app.require_subcommand(1);
    Common common;

    // gen
    auto* gen = app.add_subcommand("gen", "generate C_n and write its turns and/or an SVG");
    int gen_n = 9;
    std::string source = "morphism", svg_out;
    int gen_scale = 8, cap_n = 22;
    gen->add_option("--n", gen_n, "exponent n (2^n segments)")->check(CLI::NonNegativeNumber);
    gen->add_option("--source", source, "digit or morphism")->check(CLI::IsMember({"digit", "morphism"}));
    gen->add_option("--out", common.out, "turn file (L/R per turn, no newline)");
    gen->add_option("--svg", svg_out, "SVG output");
    gen->add_option("--scale", gen_scale, "pixels per lattice unit")->check(CLI::PositiveNumber);
    gen->add_option("--cap", cap_n, "largest n accepted");
    gen->add_flag("--no-timing", common.no_timing, "omit wall_time_ms from the report");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    SuiteParams sp;
    verify->add_option("suite", suite, "lemma3, selfavoid, tiling, rules, blocks, recurrence or all")
        ->check(CLI::IsMember({"lemma3", "selfavoid", "tiling", "rules", "blocks", "recurrence", "all"}));
    verify->add_option("--n", sp.n, "curve exponent (suite default when omitted)");
    verify->add_option("--m", sp.m, "finest tiling level")->check(CLI::Range(2, 30));
    verify->add_option("--K", sp.K, "index range for the rule checks")->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
    verify->add_option("--pattern-len", sp.pattern_len, "pattern length for rule equivalence")->check(CLI::Range(1, 60));
    verify->add_option("--samples", sp.samples, "block pairs to sample");
    verify->add_option("--m-max", sp.m_max, "largest block level")->check(CLI::Range(1, 30));
    verify->add_option("--seed", sp.seed, "sampling seed");
    verify->add_option("--steps", sp.horizon, "recurrence horizon in segments");
    verify->add_option("--lookahead", sp.lookahead, "segments searched for successors past the horizon");
    verify->add_option("--jobs", sp.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--no-timing", common.no_timing, "omit wall_time_ms from the report");

    // explore
    auto* exp = app.add_subcommand("explore", "self-avoidance of the 1^n 0 pattern curve");
    ExploreOptions eo;
    eo.steps = 1 << 20;
    exp->add_option("--n,--pattern-len", eo.n, "pattern length n >= 2")->check(CLI::Range(2, 60));
    exp->add_option("--steps", eo.steps, "segments to build");
    exp->add_option("--checkpoint", eo.checkpoint, "checkpoint file (resumed when present)");
    exp->add_option("--checkpoint-every", eo.checkpoint_every, "segments between checkpoints");
    exp->add_option("--cap", eo.cap, "largest step count accepted");
    unsigned exp_jobs = 1;
    exp->add_option("--jobs", exp_jobs, "accepted for symmetry; the walk is sequential");
    exp->add_flag("--no-timing", common.no_timing, "omit wall_time_ms from the report");

    // render
    auto* render = app.add_subcommand("render", "SVG of a curve, coarse curve or tiling");
    std::string target = "curve";
    int r_n = 9, r_m = 2, r_scale = 8;
    double stroke = 2;
    render->add_option("--target", target, "curve, coarse, tiling or overlay")
        ->check(CLI::IsMember({"curve", "coarse", "tiling", "overlay"}));
    render->add_option("--n", r_n, "curve exponent")->check(CLI::Range(0, 22));
    render->add_option("--m", r_m, "coarse / tiling level")->check(CLI::Range(0, 22));
    render->add_option("--scale", r_scale, "pixels per lattice unit")->check(CLI::PositiveNumber);
    render->add_option("--stroke", stroke, "stroke width in pixels");
    render->add_option("--out", common.out, "SVG output")->required();

    CLI11_PARSE(app, argc, argv);
    const auto t0 = std::chrono::steady_clock::now();

    try {
        if (*gen) {
            if (gen_n > cap_n) throw std::invalid_argument("n exceeds the cap");
            Report r("gen");
            r.parameters() = {{"n", gen_n}, {"source", source}, {"out", common.out}, {"svg", svg_out}};
            const Curve c = generate(gen_n, source);
            if (!common.out.empty()) write_file(common.out, turn_string(c));
            if (!svg_out.empty()) {
                SvgDocument doc(gen_scale);
                doc.add_polyline(c.vertices(), "black", 2);
                write_file(svg_out, doc.str());
            }
            r.verdict("generated", true, {{"segments", c.size()}, {"end", {c.end().x, c.end().y}}});
            return finish(r, common, t0);
        }
        if (*verify) {
            Report r("verify " + suite);
            run_suite(suite, sp, r);
            return finish(r, common, t0);
        }
        if (*exp) {
            Report r("explore");
            r.parameters() = {{"n", eo.n}, {"steps", eo.steps}, {"checkpoint", eo.checkpoint}};
            const auto res = explore(eo);
            if (res.resumed_from) std::fprintf(stderr, "resumed at %llu segments\n", static_cast<unsigned long long>(res.resumed_from));
            nlohmann::json m = {{"segments", res.steps}, {"end", {res.end.x, res.end.y}}};
            r.verdict("self_avoiding", res.ok, m);
            if (res.failure) {
                const auto& f = *res.failure;
                nlohmann::json edges = nlohmann::json::array();
                for (const auto& e : res.window.edges) edges.push_back({e.x, e.y, e.dir == 0 ? "E" : "N"});
                r.failure("self_avoiding", {{"kind", f.kind == FailureKind::DuplicateEdge ? "duplicate_edge" : "crossing"},
                                            {"first_segment", f.first_index},
                                            {"second_segment", f.second_index},
                                            {"vertex", {f.vertex.x, f.vertex.y}},
                                            {"description", describe(f)},
                                            {"window_radius", res.window.radius},
                                            {"window_edges", edges},
                                            {"turns_from_k", res.turns_from},
                                            {"turns", res.turns}});
            }
            return finish(r, common, t0);
        }
        if (*render) {
            std::string bytes;
            if (target == "curve") {
                SvgDocument doc(r_scale);
                doc.add_polyline(realize_phi(r_n).vertices(), "black", stroke);
                bytes = doc.str();
            } else if (target == "coarse") {
                if (r_m > r_n) throw std::invalid_argument("--m must not exceed --n");
                SvgDocument doc(r_scale);
                doc.add_polyline(coarsen(realize_phi(r_n), r_m).vertices, "black", stroke);
                bytes = doc.str();
            } else {
                if (r_m < 2 || r_m > r_n) throw std::invalid_argument("tilings need 2 <= m <= n");
                Tiling t;
                const auto res = run_tiling_pipeline(r_n, r_m, &t);
                if (res.levels.empty() || !res.levels.back().error.empty() || res.levels.back().m != r_m)
                    throw std::runtime_error("tiling pipeline stopped early");
                const Polyline coarse = coarsen(realize_phi(r_n), r_m);
                bytes = render_tiles(t, target == "overlay" ? &coarse : nullptr, r_scale, stroke);
            }
            write_file(common.out, bytes);
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
