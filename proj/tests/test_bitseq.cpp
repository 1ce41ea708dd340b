#include <doctest.h>

#include <random>
#include <string>

#include "digitcurve/bitseq.hpp"

using namespace digitcurve;

namespace {

// Two's complement bits of k, most significant first, sign-extended to 68 places.
std::string bits_of(std::int64_t k) {
    std::string s;
    for (int i = 67; i >= 0; --i) s.push_back(((k >> std::min(i, 63)) & 1) ? '1' : '0');
    return s;
}

bool has_110_at(const std::string& s, std::size_t lo) {
    // window ending at string position lo (least significant of the three)
    return lo >= 2 && s[lo - 2] == '1' && s[lo - 1] == '1' && s[lo] == '0';
}

// Q and R by recounting every window of b = k - 1 and a = k.
QRPair qr_recount(std::int64_t k) {
    const std::string a = bits_of(k), b = bits_of(k - 1);
    QRPair out;
    for (std::size_t i = 2; i < a.size(); ++i) {
        const bool in_a = has_110_at(a, i), in_b = has_110_at(b, i);
        out.q += in_b && !in_a;
        out.r += in_a && !in_b;
    }
    return out;
}

Turn parity_oracle(std::int64_t k) {
    const auto v = qr_recount(k);
    return ((k & 1) + v.q + v.r) % 2 ? Turn::Left : Turn::Right;
}

int alpha_scan(int n, std::int64_t k) {
    const std::string s = "0" + bits_of(k).substr(4);
    const std::string pat = std::string(static_cast<std::size_t>(n), '1') + "0";
    int c = 0;
    for (std::size_t i = 0; i + pat.size() <= s.size(); ++i) c += s.compare(i, pat.size(), pat) == 0;
    return c;
}

// Low `len` bits of a sequence, least significant first.
std::string low_bits(const BitSeq& a, std::size_t len) {
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s.push_back(static_cast<char>('0' + a.bit(i)));
    return s;
}

std::string add_one(std::string lsb_first) {
    for (char& c : lsb_first) {
        if (c == '0') {
            c = '1';
            return lsb_first;
        }
        c = '0';
    }
    return lsb_first;
}

BitSeq random_seq(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> plen(1, 8), hlen(0, 64), bit(0, 1);
    std::string p, h;
    for (int i = plen(rng); i > 0; --i) p.push_back(bit(rng) ? '1' : '0');
    for (int i = hlen(rng); i > 0; --i) h.push_back(bit(rng) ? '1' : '0');
    return BitSeq(p, h);
}

}  // namespace

TEST_CASE("canonical form") {
    CHECK(BitSeq("0101", "01") == BitSeq("01", ""));
    CHECK(BitSeq("10", "0111").head() == "0111");
    CHECK(BitSeq::from_int(-1) == BitSeq("1", ""));
    CHECK(BitSeq::from_int(6).head() == "110");
    CHECK(BitSeq::from_int(-2) == BitSeq("1", "0"));
    CHECK(BitSeq::from_int(12345).to_int() == 12345);
    CHECK_FALSE(BitSeq("10", "").to_int().has_value());
    CHECK(BitSeq("10", "").admissible());
    CHECK_FALSE(BitSeq::from_int(5).admissible());
}

TEST_CASE("increment and decrement") {
    CHECK(increment(BitSeq::from_int(-1)) == BitSeq::from_int(0));
    CHECK(increment(BitSeq::from_int(3)) == BitSeq::from_int(4));
    CHECK(increment(BitSeq("10", "0111")) == BitSeq("10", "1000"));
    CHECK(decrement(BitSeq::from_int(0)) == BitSeq::from_int(-1));
    CHECK(decrement(BitSeq::from_int(4)) == BitSeq::from_int(3));
    CHECK(decrement(BitSeq::from_int(8)) == BitSeq::from_int(7));

    std::mt19937_64 rng(11);
    for (int i = 0; i < 10000; ++i) {
        const BitSeq a = random_seq(rng);
        REQUIRE(decrement(increment(a)) == a);
        REQUIRE(increment(decrement(a)) == a);
        // carry on a long prefix
        REQUIRE(low_bits(increment(a), 160) == add_one(low_bits(a, 160)));
    }
}

TEST_CASE("offset") {
    CHECK(offset(BitSeq::from_int(0), 6) == BitSeq::from_int(6));
    CHECK(offset(BitSeq("10", ""), 1) == increment(BitSeq("10", "")));
    CHECK(offset(BitSeq::from_int(5), -7) == BitSeq("1", "0"));
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::int64_t> d(-1024, 1024);
    for (int i = 0; i < 2000; ++i) {
        const BitSeq a = random_seq(rng);
        const auto j = d(rng), k = d(rng);
        REQUIRE(offset(a, j + k) == offset(offset(a, j), k));
    }
    BitSeq a("011", "1");
    for (int k = 1; k <= 50; ++k) {
        a = increment(a);
        REQUIRE(offset(BitSeq("011", "1"), k) == a);
    }
    for (std::int64_t k : {-300000000000LL, -5LL, 0LL, 77LL, 4000000000000LL})
        CHECK(offset(BitSeq::from_int(0), k).to_int() == k);
}

TEST_CASE("P, Q, R on small integers") {
    CHECK(p_bit(BitSeq::from_int(1)) == 1);
    CHECK(p_bit(BitSeq::from_int(6)) == 0);
    CHECK(p_bit(BitSeq::from_int(-1)) == 1);
    CHECK(qr(BitSeq::from_int(6)) == QRPair{0, 1});
    CHECK(qr(BitSeq::from_int(7)) == QRPair{1, 0});
    CHECK(qr(BitSeq::from_int(4)) == QRPair{0, 0});
    CHECK(turn_parity(BitSeq::from_int(1)) == Turn::Left);
    CHECK(turn_parity(BitSeq::from_int(2)) == Turn::Right);
    CHECK(turn_parity(BitSeq::from_int(7)) == Turn::Right);
}

TEST_CASE("qr against window recount") {
    for (std::int64_t k = -70000; k <= 70000; ++k) {
        if (k == 0) continue;
        const QRPair got = qr(BitSeq::from_int(k));
        const QRPair want = qr_recount(k);
        REQUIRE(got == want);
        REQUIRE(got.q <= 1);
        REQUIRE(got.r <= 1);
    }
    // a = 0: b is all ones, no windows on either side
    CHECK(qr(BitSeq::from_int(0)) == QRPair{0, 0});
}

TEST_CASE("qr on periodic sequences against a long-prefix recount") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 3000; ++i) {
        const BitSeq a = random_seq(rng);
        const BitSeq b = decrement(a);
        const std::size_t len = a.head().size() + b.head().size() + 3 * 8 + 8;
        QRPair want;
        for (std::size_t d = 0; d < len; ++d) {
            auto w = [d](const BitSeq& s) { return s.bit(d + 2) == 1 && s.bit(d + 1) == 1 && s.bit(d) == 0; };
            want.q += w(b) && !w(a);
            want.r += w(a) && !w(b);
        }
        REQUIRE(qr(a) == want);
    }
}

TEST_CASE("closed form turn against the recount") {
    CHECK(turn_parity_int(1) == Turn::Left);
    CHECK(turn_parity_int(2) == Turn::Right);
    CHECK(turn_parity_int(3) == Turn::Left);
    CHECK(turn_parity_int(6) == Turn::Left);
    CHECK(turn_parity_int(7) == Turn::Right);
    CHECK(turn_parity_int(-1) == Turn::Right);
    CHECK_THROWS_AS(turn_parity_int(0), std::domain_error);
    for (std::int64_t k = -70000; k <= 70000; ++k) {
        if (k == 0) continue;
        REQUIRE(turn_parity_int(k) == parity_oracle(k));
    }
    std::mt19937_64 rng(14);
    std::uniform_int_distribution<std::int64_t> big(-(std::int64_t{1} << 59), (std::int64_t{1} << 59) - 1);
    for (int i = 0; i < 10000; ++i) {
        const auto k = big(rng);
        if (k == 0) continue;
        REQUIRE(turn_parity_int(k) == parity_oracle(k));
    }
}

TEST_CASE("alpha") {
    CHECK(alpha(2, 6) == 1);
    CHECK(alpha(2, 0) == 0);
    CHECK(alpha(2, 54) == 2);
    CHECK(alpha(3, 14) == 1);
    for (int n = 1; n <= 6; ++n)
        for (std::int64_t k = 0; k < 5000; ++k) REQUIRE(alpha(n, k) == alpha_scan(n, k));
    // k = 7: 7 + 0 - 1 even, Right; k = 1 odd, Left
    CHECK((7 + alpha(2, 7) - alpha(2, 6)) % 2 == 0);
    CHECK((1 + alpha(2, 1) - alpha(2, 0)) % 2 == 1);
}
