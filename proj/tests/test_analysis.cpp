#include <doctest.h>

#include <random>
#include <stdexcept>

#include "digitcurve/analysis.hpp"
#include "digitcurve/bitseq.hpp"
#include "digitcurve/digit_curve.hpp"
#include "digitcurve/geometry.hpp"

using namespace digitcurve;

namespace {

std::string binary(std::int64_t k) {
    std::string s;
    for (; k > 0; k >>= 1) s.insert(s.begin(), static_cast<char>('0' + (k & 1)));
    return s;
}

// counts 1^n 0 in the binary string with a leading zero prepended
int alpha_scan(int n, std::int64_t k) {
    const std::string pat = std::string(static_cast<std::size_t>(n), '1') + "0";
    const std::string s = binary(k);
    int c = 0;
    for (std::size_t i = 0; i + pat.size() <= s.size(); ++i) c += s.compare(i, pat.size(), pat) == 0;
    return c;
}

std::vector<LatticeVec> relative(const Curve& c) {
    auto v = c.vertices();
    const auto o = v.front();
    for (auto& p : v) p = p - o;
    return v;
}

Equivalence brute_relation(const Curve& a, const Curve& b) {
    const auto va = relative(a), vb = relative(b);
    if (va == vb) return Equivalence::Translation;
    auto neg = va;
    for (auto& p : neg) p = -p;
    if (neg == vb) return Equivalence::PointReflection;
    return Equivalence::None;
}

}  // namespace

TEST_CASE("morphism turns agree with the digit rule") {
    for (int n : {1, 2, 3, 8, 16}) {
        const auto r = verify_lemma3(n);
        CHECK(r.ok);
        CHECK(r.turns_checked == (std::uint64_t{1} << n) - 1);
        CHECK(!r.first_mismatch);
        CHECK(r.rotation == 1);
        if (n >= 2) CHECK(r.boundary_ok);
    }
    CHECK_THROWS_AS(verify_lemma3(0), std::invalid_argument);
}

TEST_CASE("realized C_n turns against the closed form") {
    for (int n = 1; n <= 12; ++n) {
        const auto turns = realize_phi(n).turns();
        REQUIRE(turns.size() == (std::size_t{1} << n) - 1);
        for (std::size_t k = 1; k <= turns.size(); ++k)
            REQUIRE(turns[k - 1] == turn_parity_int(static_cast<std::int64_t>(k)));
    }
}

TEST_CASE("rule equivalence") {
    CHECK(verify_rule_equivalence(2, 1 << 14).ok);
    CHECK(verify_rule_equivalence(3, 1 << 12).ok);
    CHECK(verify_rule_equivalence(7, 5000).ok);
    CHECK_THROWS_AS(verify_rule_equivalence(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify_rule_equivalence(2, 0), std::invalid_argument);

    // n = 2 by hand: Left iff k + alpha_2(k) - alpha_2(k-1) is odd
    for (std::int64_t k = 1; k < 4000; ++k) {
        const bool left = ((k + alpha_scan(2, k) - alpha_scan(2, k - 1)) & 1) != 0;
        REQUIRE((turn_parity_int(k) == Turn::Left) == left);
        REQUIRE(alpha(2, k) == alpha_scan(2, k));
    }
}

TEST_CASE("recurrence on a straight line") {
    Curve line;
    line.steps.assign(100, Heading::East);
    const CurveIndex idx(line);
    const auto r = recurrence_gaps(line, idx, 2.0, 5, 20, 10);
    CHECK(r.types.size() == 1);
    CHECK(r.all_recur);
    CHECK(r.max_gap == 1);
    CHECK(r.types[0].count == 20);
    CHECK(r.types[0].first == 0);

    const auto lone = recurrence_gaps(line, idx, 2.0, 5, 1, 0);
    CHECK(lone.types.size() == 1);
    CHECK_FALSE(lone.all_recur);
    CHECK(lone.unresolved == 1);

    // near the start every window is new
    const auto head = recurrence_gaps(line, idx, 1.0, 0, 3, 0);
    CHECK(head.types.size() == 2);
    CHECK_THROWS_AS(recurrence_gaps(line, idx, 2.0, 90, 20, 0), std::invalid_argument);
}

TEST_CASE("recurrence of small windows on C") {
    const auto r = recurrence_on_c(1.0, 4096, 4096, 1 << 14);
    CHECK(r.all_recur);
    CHECK(r.unresolved == 0);
    CHECK(!r.types.empty());
    std::size_t total = 0;
    for (const auto& t : r.types) total += t.count;
    CHECK(total == 4096);
    CHECK_THROWS_AS(recurrence_on_c(1.0, 4096, 4096, 100), std::invalid_argument);
}

TEST_CASE("two staircase classes") {
    const auto c = aligned_c().segments(1, 1024);
    const auto cls = classify(c);
    CHECK(cls.tag == ClassTag::EClass);
    CHECK(cls.e_witness == std::size_t{0});
    CHECK_FALSE(cls.f_witness);
    CHECK(classify(class_image(c)).tag == ClassTag::FClass);
    CHECK(classify(DigitCurve::c_curve().segments(1, 1024)).tag == ClassTag::FClass);

    Curve tiny;
    tiny.steps = {Heading::East, Heading::North, Heading::East};
    const auto t = classify(tiny);
    CHECK(t.tag == ClassTag::Unknown);
    CHECK(t.too_short);

    Curve both;
    both.steps = {Heading::East, Heading::North, Heading::East, Heading::North, Heading::East, Heading::North,
                  Heading::North, Heading::West, Heading::North, Heading::West, Heading::North, Heading::West};
    const auto b = classify(both);
    CHECK(b.both);
    CHECK(b.tag == ClassTag::Unknown);
}

TEST_CASE("block equivalence against the drawn blocks") {
    const auto A = DigitCurve::integer_curve(Heading::East, Heading::South);
    const int m = 2;
    const std::int64_t half = 1 << m;
    for (std::int64_t k : {8, 24, 40, 72, 136}) {
        for (std::int64_t l : {8, 24, 40, 72, 136, 1032}) {
            const auto r = block_equiv(A, k, A, l, m);
            CHECK(r.lower == brute_relation(A.segments(k - half + 1, k), A.segments(l - half + 1, l)));
            CHECK(r.upper == brute_relation(A.segments(k + 1, k + half), A.segments(l + 1, l + half)));
            CHECK(r.whole == brute_relation(A.segments(k - half + 1, k + half), A.segments(l - half + 1, l + half)));
            if (bits_match(A, k, A, l, m)) CHECK(r.halves_ok());
        }
    }
    const auto same = block_equiv(A, 40, A, 40, 3);
    CHECK(same.whole == Equivalence::Translation);
    CHECK_THROWS_AS(block_equiv(A, 6, A, 8, 2), std::invalid_argument);
    CHECK_THROWS_AS(block_equiv(A, 8, A, 8, 0), std::invalid_argument);
}

TEST_CASE("sampled blocks and partners") {
    const auto b = sample_block_pairs(200, 6, 11);
    CHECK(b.samples == 200);
    CHECK(b.halves_ok == 200);
    CHECK(b.failures.empty());

    const auto p = sample_partners(10, 6, 12);
    CHECK(p.checked == 60);
    CHECK(p.ok == 60);
    CHECK(p.failures.empty());

    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto c = random_aligned_curve(rng);
        CHECK((c.first == Heading::East || c.first == Heading::West));
        if (!c.base.is_integer()) {
            CHECK(c.base.admissible());
            CHECK(c.base.bit(0) == 0);
        }
        const auto k = random_aligned_index(c, 3, rng);
        CHECK(offset(c.base, k).bit(0) == 0);
        CHECK(offset(c.base, k).bit(2) == 0);
    }
}

TEST_CASE("partner indices") {
    const auto A = aligned_c();
    const auto B = aligned_c();
    const auto two = proof_partners(A, 12, B, 2, 0);  // 12: bits 2,3 = 1,1
    REQUIRE(two.size() == 2);
    CHECK(two[1] - two[0] == (1 << 8) + (1 << 7));
    const auto four = proof_partners(A, 64, B, 2, 0);
    REQUIRE(four.size() == 4);
    CHECK(four[2] - four[0] == (1 << 5));
    const auto pc = check_partners(A, 12, B, 2, 1);
    CHECK(pc.ok);
    CHECK(pc.relations.size() == 2);
}
