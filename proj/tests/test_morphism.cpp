#include <doctest.h>

#include <random>

#include "digitcurve/morphism.hpp"

using namespace digitcurve;

namespace {

// phi^n(seed) by repeated whole-word substitution, straight from the letter table.
Word expand(Letter seed, int n) {
    Word w{seed};
    for (int i = 0; i < n; ++i) {
        Word next;
        for (Letter x : w) {
            const auto p = phi(x);
            next.insert(next.end(), p.begin(), p.end());
        }
        w.swap(next);
    }
    return w;
}

Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

TEST_CASE("letter images") {
    CHECK(to_string(apply_phi(parse_word("u"))) == "uv");
    CHECK(to_string(apply_phi(parse_word("uv"))) == "uvuw");
    CHECK(to_string(apply_phi(parse_word("uvuw"))) == "uvuwuvUw");
    CHECK(to_string(apply_phi(parse_word("U"))) == "UV");
    CHECK(to_string(apply_phi(parse_word("V"))) == "UW");
    CHECK(to_string(apply_phi(parse_word("w"))) == "Uw");
    CHECK(to_string(apply_phi(parse_word("W"))) == "uW");
    CHECK(to_string(apply_phi(bar(parse_word("v")))) == "UW");
    CHECK(to_string(bar(parse_word("u"))) == "U");
}

TEST_CASE("powers and streams") {
    CHECK(to_string(phi_power_u(0)) == "u");
    CHECK(to_string(phi_power_u(2)) == "uvuw");
    CHECK(to_string(phi_power_u(3)) == "uvuwuvUw");
    for (int n = 0; n <= 14; ++n) REQUIRE(phi_power_u(n) == expand(Letter::U, n));
    for (int n = 0; n <= 20; ++n) {
        PhiStream s(Letter::U, n);
        std::uint64_t count = 0;
        while (!s.done()) {
            s.next();
            ++count;
        }
        REQUIRE(count == (std::uint64_t{1} << n));
    }
    CHECK_THROWS_AS(phi_power_u(30), std::length_error);
}

TEST_CASE("prefix property") {
    for (int n = 0; n <= 19; ++n) {
        PhiStream a(Letter::U, n), b(Letter::U, n + 1);
        bool same = true;
        while (!a.done()) same = same && a.next() == b.next();
        REQUIRE(same);
    }
}

TEST_CASE("bar commutes with phi") {
    for (Letter x : kAllLetters) {
        const Word w{x};
        CHECK(apply_phi(bar(w)) == bar(apply_phi(w)));
    }
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> len(0, 64), let(0, 5);
    for (int i = 0; i < 100; ++i) {
        Word w;
        for (int j = len(rng); j > 0; --j) w.push_back(static_cast<Letter>(let(rng)));
        REQUIRE(apply_phi(bar(w)) == bar(apply_phi(w)));
        REQUIRE(bar(bar(w)) == w);
    }
}

TEST_CASE("psi and level vectors") {
    CHECK(psi(parse_word("uvuw")) == LatticeVec{2, 2});
    CHECK(psi(Word{}) == LatticeVec{0, 0});
    CHECK(psi(parse_word("UW")) == LatticeVec{-1, -1});

    const LatticeVec table[5][3] = {
        {{1, 0}, {0, 1}, {0, 1}},
        {{1, 1}, {1, 1}, {-1, 1}},
        {{2, 2}, {0, 2}, {-2, 0}},
        {{2, 4}, {0, 2}, {-4, -2}},
        {{2, 6}, {-2, 2}, {-6, -6}},
    };
    for (int m = 0; m <= 4; ++m) {
        const auto lv = level_vectors(m);
        CHECK(lv.u == table[m][0]);
        CHECK(lv.v == table[m][1]);
        CHECK(lv.w == table[m][2]);
    }
    for (int n = 0; n <= 16; ++n) {
        const auto lv = level_vectors(n);
        REQUIRE(psi(expand(Letter::U, n)) == lv.u);
        REQUIRE(psi(expand(Letter::V, n)) == lv.v);
        REQUIRE(psi(expand(Letter::W, n)) == lv.w);
    }
}

TEST_CASE("level vectors are in anticlockwise order") {
    for (int m = 2; m <= 16; ++m) {
        const auto lv = level_vectors(m);
        const LatticeVec ring[6] = {lv.u, lv.v, lv.w, -lv.u, -lv.v, -lv.w};
        for (int i = 0; i < 6; ++i) REQUIRE(cross(ring[i], ring[(i + 1) % 6]) > 0);
        REQUIRE(cross(lv.u, lv.v) != 0);
        REQUIRE(cross(lv.u, lv.w) != 0);
        REQUIRE(cross(lv.v, lv.w) != 0);
    }
}

TEST_CASE("six-factor identity") {
    for (int n = 3; n <= 16; ++n) REQUIRE(check_identity(n));
    // independent check on materialized words for small n
    for (int n = 3; n <= 10; ++n) {
        const Word a = expand(Letter::U, n - 1), b = expand(Letter::U, n - 2), c = expand(Letter::W, n - 2);
        REQUIRE(expand(Letter::U, n + 1) == concat({a, b, c, a, bar(b), c}));
    }
}

TEST_CASE("first and last letters") {
    const auto b2 = boundary_letters(2);
    CHECK(b2.phi_u == LetterPair{Letter::U, Letter::W});
    CHECK(to_string(expand(Letter::W, 2)) == "UVUw");
    for (int n = 2; n <= 20; ++n) REQUIRE(boundary_letters(n).matches_expected());
    for (int n = 2; n <= 12; ++n) {
        const Word u = expand(Letter::U, n), v = expand(Letter::V, n), w = expand(Letter::W, n);
        const Word ub = bar(u);
        REQUIRE(u.front() == Letter::U);
        REQUIRE(u.back() == Letter::W);
        REQUIRE(ub.front() == Letter::UBar);
        REQUIRE(ub.back() == Letter::WBar);
        REQUIRE(v.front() == Letter::U);
        REQUIRE(v.back() == Letter::W);
        REQUIRE(w.front() == Letter::UBar);
        REQUIRE(w.back() == Letter::W);
    }
}
