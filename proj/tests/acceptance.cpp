// One PASS/FAIL line per criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "digitcurve/analysis.hpp"
#include "digitcurve/bitseq.hpp"
#include "digitcurve/explore.hpp"
#include "digitcurve/geometry.hpp"
#include "digitcurve/morphism.hpp"
#include "digitcurve/tiling.hpp"

using namespace digitcurve;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

Curve walk(LatticeVec start, const std::string& dirs) {
    Curve c;
    c.start = start;
    for (char d : dirs) {
        switch (d) {
            case 'E': c.steps.push_back(Heading::East); break;
            case 'N': c.steps.push_back(Heading::North); break;
            case 'W': c.steps.push_back(Heading::West); break;
            default: c.steps.push_back(Heading::South); break;
        }
    }
    return c;
}

Outcome morphism_turns() {
    const auto t0 = Clock::now();
    const auto r = verify_lemma3(20);
    const double t = seconds_since(t0);
    std::ostringstream os;
    os << "turns=" << r.turns_checked << " time=" << t << "s";
    if (r.first_mismatch) os << " first_mismatch=" << *r.first_mismatch;
    return {r.ok && r.turns_checked == (1u << 20) - 1 && t < 10.0, os.str()};
}

Outcome rule_equivalence() {
    const auto r = verify_rule_equivalence(2, std::int64_t{1} << 20);
    std::ostringstream os;
    os << "K=" << r.K;
    if (r.first_mismatch) os << " first_mismatch=" << *r.first_mismatch;
    return {r.ok, os.str()};
}

Outcome self_avoidance() {
    int bad = 0;
    for (int n = 2; n <= 20; ++n)
        if (!check_self_avoiding(realize_phi(n)).ok) ++bad;
    const auto cross = check_self_avoiding(walk({0, 1}, "EENWSS"));
    const bool cross_ok = !cross.ok && cross.failure->kind == FailureKind::Crossing &&
                          cross.failure->vertex == LatticeVec{1, 1} && cross.failure->first_index == 0 &&
                          cross.failure->second_index == 4;
    const auto dup = check_self_avoiding(walk({0, 0}, "ENNWSSE"));
    const bool dup_ok = !dup.ok && dup.failure->kind == FailureKind::DuplicateEdge &&
                        dup.failure->vertex == LatticeVec{0, 0} && dup.failure->other == LatticeVec{1, 0} &&
                        dup.failure->first_index == 0 && dup.failure->second_index == 6;
    std::ostringstream os;
    os << "C_2..C_20 failures=" << bad << " crossing_detected=" << cross_ok << " duplicate_detected=" << dup_ok;
    return {bad == 0 && cross_ok && dup_ok, os.str()};
}

Outcome constants() {
    // as printed for n = 1..4
    const LatticeVec table[4][3] = {
        {{1, 1}, {1, 1}, {-1, 1}},
        {{2, 2}, {0, 2}, {-2, 0}},
        {{2, 4}, {0, 2}, {-4, -2}},
        {{2, 6}, {-2, 2}, {-6, -6}},
    };
    int matched = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto lv = level_vectors(n);
        matched += lv.u == table[n - 1][0];
        matched += lv.v == table[n - 1][1];
        matched += lv.w == table[n - 1][2];
    }
    int psi_ok = 0;
    for (int n = 0; n <= 20; ++n) {
        PhiStream s(Letter::U, n);
        LatticeVec p;
        while (!s.done()) p += step(heading_of(s.next()));
        psi_ok += p == level_vectors(n).u;
    }
    std::ostringstream os;
    os << "vectors_matched=" << matched << "/12 psi_ok=" << psi_ok << "/21";
    return {matched == 12 && psi_ok == 21, os.str()};
}

Outcome word_identities() {
    const bool small = to_string(phi_power_u(2)) == "uvuw" && to_string(phi_power_u(3)) == "uvuwuvUw";
    int ident = 0;
    for (int n = 3; n <= 16; ++n) ident += check_identity(n);
    int prefix = 0;
    for (int n = 0; n <= 19; ++n) {
        PhiStream a(Letter::U, n), b(Letter::U, n + 1);
        bool same = true;
        while (!a.done()) same = same && a.next() == b.next();
        prefix += same;
    }
    int barc = 0;
    for (Letter x : kAllLetters) {
        const Word w{x};
        barc += apply_phi(bar(w)) == bar(apply_phi(w));
    }
    std::ostringstream os;
    os << "phi2_phi3=" << small << " identity=" << ident << "/14 prefix=" << prefix << "/20 bar=" << barc << "/6";
    return {small && ident == 14 && prefix == 20 && barc == 6, os.str()};
}

Outcome tilings() {
    const auto t0 = Clock::now();
    int levels = 0, bad = 0;
    std::string first_bad;
    for (int n = 2; n <= 10; ++n) {
        const auto r = run_tiling_pipeline(n, 2);
        for (const auto& lv : r.levels) {
            ++levels;
            if (!lv.ok()) {
                ++bad;
                if (first_bad.empty()) first_bad = "n=" + std::to_string(n) + " m=" + std::to_string(lv.m);
            }
        }
        if (!r.unit_refinement.ok()) {
            ++bad;
            if (first_bad.empty()) first_bad = "n=" + std::to_string(n) + " unit refinement";
        }
    }
    const double t = seconds_since(t0);
    std::ostringstream os;
    os << "levels=" << levels << " failing=" << bad << " time=" << t << "s";
    if (!first_bad.empty()) os << " first=" << first_bad;
    return {bad == 0 && levels == 45 && t < 120.0, os.str()};
}

Outcome qr_bounded() {
    const std::int64_t K = std::int64_t{1} << 20;
    std::int64_t bad = 0;
    for (std::int64_t k = -K; k <= K; ++k) {
        if (k == 0) continue;
        const auto v = qr(BitSeq::from_int(k));
        bad += v.q < 0 || v.q > 1 || v.r < 0 || v.r > 1;
    }
    return {bad == 0, "violations=" + std::to_string(bad)};
}

Outcome fast_path() {
    const std::int64_t K = std::int64_t{1} << 20;
    std::int64_t bad = 0;
    for (std::int64_t k = -K; k <= K; ++k)
        if (k != 0) bad += turn_parity(BitSeq::from_int(k)) != turn_parity_int(k);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> big(-(std::int64_t{1} << 59), (std::int64_t{1} << 59) - 1);
    int sampled = 0;
    while (sampled < 10000) {
        const auto k = big(rng);
        if (k == 0) continue;
        ++sampled;
        bad += turn_parity(BitSeq::from_int(k)) != turn_parity_int(k);
    }
    return {bad == 0, "mismatches=" + std::to_string(bad) + " random=" + std::to_string(sampled)};
}

Outcome recurrence() {
    const std::size_t horizon = std::size_t{1} << 16, lookahead = (std::size_t{1} << 20) - horizon;
    const auto reach = static_cast<std::int64_t>(horizon + lookahead);
    bool ok = true;
    std::ostringstream os;
    for (double s : {2.0, 4.0, 8.0}) {
        const auto a = recurrence_on_c(s, horizon, lookahead, reach);
        const auto b = recurrence_on_c(s, horizon, lookahead, reach);
        bool stable = a.types.size() == b.types.size() && a.max_gap == b.max_gap;
        for (std::size_t i = 0; stable && i < a.types.size(); ++i)
            stable = a.types[i].type == b.types[i].type && a.types[i].count == b.types[i].count &&
                     a.types[i].max_gap == b.types[i].max_gap;
        ok = ok && a.all_recur && stable;
        os << "s=" << s << ":types=" << a.types.size() << ",max_gap=" << a.max_gap << ",unresolved=" << a.unresolved
           << ",stable=" << stable << ' ';
    }
    return {ok, os.str()};
}

Outcome two_classes() {
    const Curve c = aligned_c().segments(1, std::int64_t{1} << 20);
    const auto e = classify(c);
    const auto f = classify(class_image(c));
    const auto mirror = classify(swap_ef(c));
    std::ostringstream os;
    os << "C=" << class_name(e.tag) << " image=" << class_name(f.tag) << " both=" << (e.both || f.both)
       << " mirror_swap_ef=" << class_name(mirror.tag);
    return {e.tag == ClassTag::EClass && f.tag == ClassTag::FClass && !e.both && !f.both, os.str()};
}

Outcome blocks() {
    const auto b = sample_block_pairs(1000, 8, 1);
    const auto p = sample_partners(50, 8, 2);
    std::ostringstream os;
    os << "halves=" << b.halves_ok << "/" << b.samples << " whole=" << b.whole_equal << " partners=" << p.ok << "/"
       << p.checked << " flipped=" << p.centre_flipped;
    return {b.samples == 1000 && b.halves_ok == b.samples && p.ok == p.checked && p.centre_flipped == p.checked,
            os.str()};
}

Outcome exploration() {
    const std::uint64_t K = std::uint64_t{1} << 22;
    bool n2 = false;
    std::ostringstream os;
    for (int n = 2; n <= 5; ++n) {
        const auto t0 = Clock::now();
        const auto r = explore_conjecture(n, K);
        if (n == 2) n2 = r.ok;
        os << "n=" << n << ":" << (r.ok ? "ok" : "violation");
        if (r.failure) os << "(" << describe(*r.failure) << ")";
        os << "," << seconds_since(t0) << "s ";
    }
    return {n2, os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"morphism_digit_turns", morphism_turns},
        {"rule_equivalence", rule_equivalence},
        {"self_avoidance", self_avoidance},
        {"level_vectors", constants},
        {"word_identities", word_identities},
        {"tiling_pipeline", tilings},
        {"qr_bounded", qr_bounded},
        {"fast_path", fast_path},
        {"window_recurrence", recurrence},
        {"two_classes", two_classes},
        {"block_equivalence", blocks},
        {"conjecture_exploration", exploration},
    };
    int failed = 0, i = 0;
    for (const auto& [name, run] : criteria) {
        ++i;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", i, name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
