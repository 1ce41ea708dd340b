#include "digitcurve/suites.hpp"

#include <future>
#include <random>
#include <stdexcept>

#include "digitcurve/analysis.hpp"
#include "digitcurve/bitseq.hpp"
#include "digitcurve/geometry.hpp"
#include "digitcurve/tiling.hpp"

namespace digitcurve {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxListed = 20;

void list_failures(Report& r, const std::string& verdict, const std::vector<std::string>& items) {
    for (std::size_t i = 0; i < items.size() && i < kMaxListed; ++i) r.failure(verdict, items[i]);
}

int pick(int v, int fallback) { return v > 0 ? v : fallback; }

void lemma3(const SuiteParams& p, Report& r) {
    const int n = pick(p.n, 20);
    r.parameters()["lemma3"] = {{"n", n}};
    const auto res = verify_lemma3(n);
    r.verdict("lemma3", res.ok,
              {{"n", n}, {"turns_checked", res.turns_checked}, {"rotation_quarter_turns", res.rotation},
               {"boundary_letters_ok", res.boundary_ok}});
    if (res.first_mismatch) r.failure("lemma3", {{"k", *res.first_mismatch}});
}

void selfavoid(const SuiteParams& p, Report& r) {
    const int n = pick(p.n, 20);
    r.parameters()["selfavoid"] = {{"n", n}};
    auto check = [](int k) { return check_self_avoiding(realize_phi(k)); };
    std::vector<Verdict> out(static_cast<std::size_t>(std::max(0, n - 1)));
    if (p.jobs > 1) {
        std::vector<std::future<Verdict>> fut;
        for (int k = 2; k <= n; ++k) fut.push_back(std::async(std::launch::async, check, k));
        for (std::size_t i = 0; i < fut.size(); ++i) out[i] = fut[i].get();
    } else {
        for (int k = 2; k <= n; ++k) out[static_cast<std::size_t>(k - 2)] = check(k);
    }
    bool ok = true;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i].ok) continue;
        ok = false;
        r.failure("selfavoid", {{"n", i + 2}, {"failure", describe(*out[i].failure)}});
    }
    r.verdict("selfavoid", ok, {{"curves_checked", out.size()}, {"n_max", n}});
}

void tiling(const SuiteParams& p, Report& r) {
    const int n = pick(p.n, 8);
    const int m = p.m;
    r.parameters()["tiling"] = {{"n", n}, {"m", m}};
    const auto res = run_tiling_pipeline(n, m);
    json levels = json::array();
    for (const auto& lv : res.levels) {
        levels.push_back({{"m", lv.m},
                          {"tiles", lv.tiles},
                          {"coverage", lv.audit.coverage_ok},
                          {"area", lv.audit.area_ok},
                          {"provenance", lv.audit.provenance_ok},
                          {"coarse_tiles_audited", lv.audit.coarse_checked},
                          {"property1", lv.property1},
                          {"property2_segments", lv.property2.checked},
                          {"refinement_segments", lv.refinement.checked},
                          {"self_avoiding", lv.self_avoiding},
                          {"ok", lv.ok()}});
        const std::string tag = "tiling m=" + std::to_string(lv.m);
        if (!lv.error.empty()) r.failure(tag, lv.error);
        if (!lv.audit.ok()) r.failure(tag, lv.audit.detail);
        list_failures(r, tag, lv.property2.failures);
        list_failures(r, tag, lv.refinement.failures);
    }
    list_failures(r, "tiling unit refinement", res.unit_refinement.failures);
    r.verdict("tiling", res.ok(),
              {{"anchoring", res.anchoring},
               {"levels", levels},
               {"unit_refinement_segments", res.unit_refinement.checked}});
}

void rules(const SuiteParams& p, Report& r) {
    const std::int64_t K = p.K;
    r.parameters()["rules"] = {{"K", K}, {"pattern_len", p.pattern_len}, {"seed", p.seed}};
    const auto eq = verify_rule_equivalence(p.pattern_len, K);
    r.verdict("rule_equivalence", eq.ok, {{"n", p.pattern_len}, {"K", K}});
    if (eq.first_mismatch) r.failure("rule_equivalence", {{"k", *eq.first_mismatch}});

    // Q, R in {0, 1} and the closed form against the sequence rule.
    std::size_t qr_bad = 0, fast_bad = 0;
    for (std::int64_t k = -K; k <= K; ++k) {
        if (k == 0) continue;
        const BitSeq a = BitSeq::from_int(k);
        const QRPair v = qr(a);
        if (v.q > 1 || v.r > 1 || v.q < 0 || v.r < 0) {
            if (qr_bad++ < kMaxListed) r.failure("qr_bounded", {{"k", k}, {"q", v.q}, {"r", v.r}});
        }
        if (turn_parity(a) != turn_parity_int(k)) {
            if (fast_bad++ < kMaxListed) r.failure("fast_path", {{"k", k}});
        }
    }
    std::mt19937_64 rng(p.seed);
    std::uniform_int_distribution<std::int64_t> big(-(std::int64_t{1} << 59), (std::int64_t{1} << 59) - 1);
    std::size_t sampled = 0;
    while (sampled < 10000) {
        const std::int64_t k = big(rng);
        if (k == 0) continue;
        ++sampled;
        if (turn_parity(BitSeq::from_int(k)) != turn_parity_int(k)) {
            if (fast_bad++ < kMaxListed) r.failure("fast_path", {{"k", k}});
        }
    }
    r.verdict("qr_bounded", qr_bad == 0, {{"range", K}, {"violations", qr_bad}});
    r.verdict("fast_path", fast_bad == 0, {{"range", K}, {"random_60_bit", sampled}, {"mismatches", fast_bad}});
}

void blocks(const SuiteParams& p, Report& r) {
    r.parameters()["blocks"] = {{"samples", p.samples}, {"m_max", p.m_max}, {"seed", p.seed}};
    const auto bs = sample_block_pairs(p.samples, p.m_max, p.seed);
    r.verdict("block_halves", bs.halves_ok == bs.samples,
              {{"samples", bs.samples}, {"halves_equivalent", bs.halves_ok}, {"whole_equivalent", bs.whole_equal}});
    list_failures(r, "block_halves", bs.failures);
    const std::size_t per_m = std::max<std::size_t>(1, p.samples / static_cast<std::size_t>(std::max(1, p.m_max)) / 2);
    const auto ps = sample_partners(per_m, p.m_max, p.seed + 1);
    r.verdict("block_partners", ps.ok == ps.checked && ps.centre_flipped == ps.checked,
              {{"checked", ps.checked}, {"isomorphic_and_reflected", ps.ok}, {"centre_class_flipped", ps.centre_flipped}});
    list_failures(r, "block_partners", ps.failures);
}

void recurrence(const SuiteParams& p, Report& r) {
    const std::vector<double> radii = {2, 4, 8};
    const auto reach = static_cast<std::int64_t>(p.horizon + p.lookahead);
    r.parameters()["recurrence"] = {{"radii", radii}, {"horizon", p.horizon}, {"lookahead", p.lookahead}};
    auto run = [&](double s) { return recurrence_on_c(s, p.horizon, p.lookahead, reach); };
    std::vector<RecurrenceReport> reps(radii.size());
    if (p.jobs > 1) {
        std::vector<std::future<RecurrenceReport>> fut;
        for (double s : radii) fut.push_back(std::async(std::launch::async, run, s));
        for (std::size_t i = 0; i < fut.size(); ++i) reps[i] = fut[i].get();
    } else {
        for (std::size_t i = 0; i < radii.size(); ++i) reps[i] = run(radii[i]);
    }
    for (const auto& rep : reps) {
        const std::string name = "recurrence_s" + std::to_string(static_cast<int>(rep.radius));
        std::size_t in_horizon = 0;
        for (const auto& t : rep.types)
            if (t.max_gap && t.max_gap <= p.horizon) ++in_horizon;
        r.verdict(name, rep.all_recur,
                  {{"types", rep.types.size()},
                   {"max_gap", rep.max_gap},
                   {"recur_within_horizon", in_horizon},
                   {"unresolved", rep.unresolved}});
        for (const auto& t : rep.types)
            if (t.max_gap == 0) r.failure(name, {{"first_occurrence", t.first}, {"edges", t.type.edges.size()}});
    }

    const Curve c = aligned_c().segments(1, std::int64_t{1} << 20);
    const auto e = classify(c), f = classify(class_image(c)), mirror = classify(swap_ef(c));
    const bool ok = e.tag == ClassTag::EClass && f.tag == ClassTag::FClass && !e.both && !f.both;
    r.verdict("two_classes", ok,
              {{"segments", c.size()},
               {"c", class_name(e.tag)},
               {"c_quarter_turn", class_name(f.tag)},
               {"c_mirror_swap_ef", class_name(mirror.tag)},
               {"e_witness", e.e_witness ? json(*e.e_witness) : json(nullptr)}});
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"lemma3", "selfavoid", "tiling", "rules", "blocks", "recurrence"};
    return names;
}

void run_suite(const std::string& name, const SuiteParams& p, Report& report) {
    if (name == "all") {
        for (const auto& s : suite_names()) run_suite(s, p, report);
        return;
    }
    if (name == "lemma3") lemma3(p, report);
    else if (name == "selfavoid") selfavoid(p, report);
    else if (name == "tiling") tiling(p, report);
    else if (name == "rules") rules(p, report);
    else if (name == "blocks") blocks(p, report);
    else if (name == "recurrence") recurrence(p, report);
    else throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace digitcurve
