#include "digitcurve/morphism.hpp"

#include <bit>
#include <stdexcept>

namespace digitcurve {

std::string to_string(std::span<const Letter> w) {
    constexpr char names[] = {'u', 'U', 'v', 'V', 'w', 'W'};
    std::string s;
    s.reserve(w.size());
    for (Letter x : w) s.push_back(names[static_cast<int>(x)]);
    return s;
}

Word parse_word(std::string_view s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case 'u': w.push_back(Letter::U); break;
            case 'U': w.push_back(Letter::UBar); break;
            case 'v': w.push_back(Letter::V); break;
            case 'V': w.push_back(Letter::VBar); break;
            case 'w': w.push_back(Letter::W); break;
            case 'W': w.push_back(Letter::WBar); break;
            default: throw std::invalid_argument(std::string("parse_word: bad letter '") + c + "'");
        }
    }
    return w;
}

Word apply_phi(std::span<const Letter> w) {
    Word out;
    out.reserve(2 * w.size());
    for (Letter x : w) {
        const auto img = phi(x);
        out.push_back(img[0]);
        out.push_back(img[1]);
    }
    return out;
}

Word bar(std::span<const Letter> w) {
    Word out(w.begin(), w.end());
    for (auto& x : out) x = bar(x);
    return out;
}

LatticeVec psi(std::span<const Letter> w) {
    LatticeVec sum;
    for (Letter x : w) sum += step(heading_of(x));
    return sum;
}

PhiStream::PhiStream(Letter seed, int n) : depth_(n) {
    if (n < 0 || n > 62) throw std::invalid_argument("PhiStream: exponent out of range");
    remaining_ = std::uint64_t{1} << n;
    path_.resize(static_cast<std::size_t>(n) + 1);
    path_[0] = seed;
    for (int d = 1; d <= n; ++d) path_[d] = phi(path_[d - 1])[0];
}

Letter PhiStream::next() {
    if (remaining_ == 0) throw std::out_of_range("PhiStream: exhausted");
    const Letter out = path_[depth_];
    --remaining_;
    if (remaining_ == 0) return out;
    // index_ + 1 sets bit j and clears the j trailing ones; rebuild levels below.
    const int j = std::countr_one(index_);
    ++index_;
    const int level = depth_ - j;
    path_[level] = phi(path_[level - 1])[1];
    for (int d = level + 1; d <= depth_; ++d) path_[d] = phi(path_[d - 1])[0];
    return out;
}

Word phi_power(Letter seed, int n, int cap) {
    if (n < 0) throw std::invalid_argument("phi_power: negative exponent");
    if (n > cap) throw std::length_error("phi_power: exponent above materialization cap");
    Word w{seed};
    for (int i = 0; i < n; ++i) w = apply_phi(w);
    return w;
}

LevelVectors level_vectors(int m) {
    if (m < 0 || m > 60) throw std::invalid_argument("level_vectors: level out of range");
    LevelVectors lv{0, kE, kF, kF};
    for (int i = 0; i < m; ++i) {
        const LatticeVec u = lv.u + lv.v;
        const LatticeVec v = lv.u + lv.w;
        const LatticeVec w = lv.w - lv.u;
        lv = {i + 1, u, v, w};
    }
    return lv;
}

bool check_identity(int n) {
    if (n < 3) throw std::invalid_argument("check_identity: requires n >= 3");
    PhiStream whole(Letter::U, n + 1);
    struct Factor {
        Letter seed;
        int power;
        bool barred;
    };
    const Factor factors[] = {
        {Letter::U, n - 1, false}, {Letter::U, n - 2, false}, {Letter::W, n - 2, false},
        {Letter::U, n - 1, false}, {Letter::U, n - 2, true},  {Letter::W, n - 2, false},
    };
    for (const auto& f : factors) {
        PhiStream part(f.seed, f.power);
        while (!part.done()) {
            if (whole.done()) return false;
            const Letter x = f.barred ? bar(part.next()) : part.next();
            if (whole.next() != x) return false;
        }
    }
    return whole.done();
}

namespace {

LetterPair ends_of(Letter seed, int n) {
    Letter first = seed;
    Letter last = seed;
    for (int i = 0; i < n; ++i) {
        first = phi(first)[0];
        last = phi(last)[1];
    }
    return {first, last};
}

}  // namespace

bool BoundaryLetters::matches_expected() const {
    return phi_u == LetterPair{Letter::U, Letter::W} &&
           bar_phi_u == LetterPair{Letter::UBar, Letter::WBar} &&
           phi_v == LetterPair{Letter::U, Letter::W} && phi_w == LetterPair{Letter::UBar, Letter::W};
}

BoundaryLetters boundary_letters(int n) {
    if (n < 2) throw std::invalid_argument("boundary_letters: requires n >= 2");
    BoundaryLetters b;
    b.phi_u = ends_of(Letter::U, n);
    const auto pu = b.phi_u;
    b.bar_phi_u = {bar(pu.first), bar(pu.last)};
    b.phi_v = ends_of(Letter::V, n);
    b.phi_w = ends_of(Letter::W, n);
    return b;
}

}  // namespace digitcurve
