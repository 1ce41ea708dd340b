#include <doctest.h>

#include <random>

#include "digitcurve/analysis.hpp"
#include "digitcurve/digit_curve.hpp"

using namespace digitcurve;

namespace {

BitSeq random_seq(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> plen(2, 6), hlen(0, 40), bit(0, 1);
    std::string p, h;
    while (p.find('0') == std::string::npos || p.find('1') == std::string::npos) {
        p.clear();
        for (int i = plen(rng); i > 0; --i) p.push_back(bit(rng) ? '1' : '0');
    }
    for (int i = hlen(rng); i > 0; --i) h.push_back(bit(rng) ? '1' : '0');
    return BitSeq(p, h);
}

}  // namespace

TEST_CASE("turns follow the sequence rule") {
    const auto c = DigitCurve::c_curve();
    for (std::int64_t k = -3000; k <= 3000; ++k) {
        if (k == 0) {
            CHECK(c.turn_at(0) == Turn::Left);
            continue;
        }
        REQUIRE(c.turn_at(k) == turn_parity(BitSeq::from_int(k)));
    }
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::int64_t> kd(-(std::int64_t{1} << 40), std::int64_t{1} << 40);
    for (int i = 0; i < 300; ++i) {
        const auto d = DigitCurve::from_sequence(random_seq(rng), {3, -2}, Heading::West);
        const auto k0 = kd(rng);
        const auto bits = d.turn_bits(k0, 40);
        for (std::int64_t j = 0; j < 40; ++j) {
            const Turn want = turn_parity(offset(d.base, k0 + j));
            REQUIRE(d.turn_at(k0 + j) == want);
            REQUIRE(bits[static_cast<std::size_t>(j)] == (want == Turn::Left));
        }
    }
}

TEST_CASE("headings and turn sums against a fold") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const DigitCurve d = trial % 4 == 0 ? DigitCurve::c_curve()
                                            : DigitCurve::from_sequence(random_seq(rng), {0, 0}, Heading::East);
        Heading h = d.first;
        for (std::int64_t k = 1; k <= 3000; ++k) {
            REQUIRE(d.heading_at(k) == h);
            h = turned(h, d.turn_at(k));
        }
        h = d.first;
        for (std::int64_t k = 1; k >= -3000; --k) {
            REQUIRE(d.heading_at(k) == h);
            // X_{k-1} -> X_k turns by turn_at(k-1)
            h = turned(h, d.turn_at(k - 1) == Turn::Left ? Turn::Right : Turn::Left);
        }
        int sum = 0;
        for (std::int64_t k = -500; k < 700; ++k) sum += d.turn_at(k) == Turn::Left ? 1 : -1;
        REQUIRE(d.turn_sum(-500, 700) == ((sum % 4) + 4) % 4);
    }
    // far away, compare a jump against a short fold
    std::uniform_int_distribution<std::int64_t> kd(-(std::int64_t{1} << 45), std::int64_t{1} << 45);
    for (int i = 0; i < 200; ++i) {
        const auto d = DigitCurve::from_sequence(random_seq(rng), {0, 0}, Heading::North);
        const auto k = kd(rng);
        Heading h = d.heading_at(k);
        for (int j = 0; j < 50; ++j) {
            h = turned(h, d.turn_at(k + j));
            REQUIRE(d.heading_at(k + j + 1) == h);
        }
    }
}

TEST_CASE("C_n is the start of C") {
    const auto aligned = aligned_c();
    for (int n = 0; n <= 16; ++n) {
        const Curve cn = realize_phi(n);
        const Curve part = aligned.segments(1, std::int64_t{1} << n);
        REQUIRE(part.start == cn.start);
        REQUIRE(part.steps == cn.steps);
    }
    // c_curve, i.e. C_{f,e}, is the same shape turned a quarter
    const Curve c = DigitCurve::c_curve().segments(1, 1024);
    const Curve c10 = realize_phi(10);
    for (std::size_t i = 0; i < c.size(); ++i) REQUIRE(c.steps[i] == rotate(c10.steps[i], 1));
    const Curve around = aligned.segments(-5, 5);
    CHECK(around.size() == 11);
    CHECK(aligned.heading_at(0) == Heading::South);
}
