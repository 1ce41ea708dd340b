#include "digitcurve/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "digitcurve/kernels.hpp"

namespace digitcurve {

namespace {

constexpr std::size_t kChunk = std::size_t{1} << 16;

// Occurrences of 1^n 0 by scanning the written binary expansion with one leading 0.
int alpha_by_scan(int n, std::int64_t k) {
    std::string bits = "0";
    for (int i = 63; i >= 0; --i) bits.push_back(((k >> i) & 1) ? '1' : '0');
    const std::string pat = std::string(static_cast<std::size_t>(n), '1') + "0";
    int count = 0;
    for (std::size_t i = 0; i + pat.size() <= bits.size(); ++i)
        if (bits.compare(i, pat.size(), pat) == 0) ++count;
    return count;
}

Equivalence relate(bool same_turns, Heading a, Heading b) {
    if (!same_turns) return Equivalence::None;
    switch (quarter_turns_between(a, b)) {
        case 0: return Equivalence::Translation;
        case 2: return Equivalence::PointReflection;
        default: return Equivalence::None;
    }
}

int low_bits(const BitSeq& x, int count) {
    int v = 0;
    for (int i = 0; i < count; ++i) v |= x.bit(static_cast<std::size_t>(i)) << i;
    return v;
}

void require_aligned(const DigitCurve& c, std::int64_t k, int m, const char* what) {
    const BitSeq x = offset(c.base, k);
    for (int i = 0; i < m; ++i)
        if (x.bit(static_cast<std::size_t>(i)) != 0)
            throw std::invalid_argument(std::string("block_equiv: ") + what + " is not divisible by 2^m");
}

std::string describe_curve(const DigitCurve& c) {
    return "base " + c.base.to_string() + " first " + to_char(c.first);
}

}  // namespace

Lemma3Result verify_lemma3(int n) {
    if (n < 1 || n > 40) throw std::invalid_argument("verify_lemma3: n out of range");
    Lemma3Result res;
    res.n = n;
    res.rotation = quarter_turns_between(Heading::East, DigitCurve::c_curve().heading_at(1));
    PhiStream stream(Letter::U, n);
    Heading prev = heading_of(stream.next());
    const std::uint64_t total = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint8_t> rule;
    std::uint64_t k = 1;
    while (k <= total && !res.first_mismatch) {
        const auto count = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, total - k + 1));
        rule.resize(count);
        kernels::body_turns(static_cast<std::int64_t>(k), rule);
        for (std::size_t i = 0; i < count; ++i, ++k) {
            const Heading cur = heading_of(stream.next());
            const int q = quarter_turns_between(prev, cur);
            const bool ok = (q == 1 && rule[i] == 1) || (q == 3 && rule[i] == 0);
            if (!ok) {
                res.first_mismatch = k;
                break;
            }
            prev = cur;
            ++res.turns_checked;
        }
    }
    if (n >= 2) {
        res.boundary = boundary_letters(n);
        res.boundary_ok = res.boundary.matches_expected();
    }
    res.ok = !res.first_mismatch && res.boundary_ok;
    return res;
}

RuleResult verify_rule_equivalence(int n, std::int64_t K) {
    if (n < 1 || n > 62) throw std::invalid_argument("verify_rule_equivalence: n out of range");
    if (K < 1) throw std::invalid_argument("verify_rule_equivalence: K must be positive");
    RuleResult res{n, K, false, std::nullopt};
    if (n == 2) {
        for (std::int64_t k = 1; k <= K; ++k) {
            const BitSeq a = BitSeq::from_int(k);
            const QRPair qrv = qr(a);
            const int body = (p_bit(a) + qrv.q + qrv.r) & 1;
            const int abstract = static_cast<int>((k + alpha(2, k) - alpha(2, k - 1)) & 1);
            if (body != abstract) {
                res.first_mismatch = k;
                return res;
            }
        }
    } else {
        std::vector<std::uint8_t> out;
        for (std::int64_t k = 1; k <= K;) {
            const auto count = static_cast<std::size_t>(std::min<std::int64_t>(kChunk, K - k + 1));
            out.resize(count);
            kernels::pattern_turns(n, k, out);
            for (std::size_t i = 0; i < count; ++i, ++k) {
                const int expect = static_cast<int>((k + alpha_by_scan(n, k) - alpha_by_scan(n, k - 1)) & 1);
                if (out[i] != expect) {
                    res.first_mismatch = k;
                    return res;
                }
            }
        }
    }
    res.ok = true;
    return res;
}

RecurrenceReport recurrence_gaps(const Curve& c, const CurveIndex& index, double s, std::size_t first,
                                 std::size_t horizon, std::size_t lookahead) {
    if (first + horizon + lookahead > c.size()) throw std::invalid_argument("recurrence_gaps: horizon exceeds the curve");
    RecurrenceReport rep;
    rep.radius = s;
    rep.horizon = horizon;
    rep.lookahead = lookahead;
    std::map<WindowPattern, std::size_t> slot;
    std::vector<std::size_t> last;
    std::vector<bool> open;  // last occurrence inside the horizon still waits for its successor
    LatticeVec z = c.start;
    for (std::size_t i = 0; i < first; ++i) z += step(c.steps[i]);
    const std::size_t end = first + horizon + lookahead;
    std::size_t waiting = 0;
    for (std::size_t i = first; i < end; ++i) {
        const bool inside = i < first + horizon;
        if (!inside && waiting == 0) break;
        auto w = window(index, z, s);
        auto it = slot.find(w);
        if (it == slot.end()) {
            if (inside) {
                slot.emplace(std::move(w), rep.types.size());
                rep.types.push_back({});
                rep.types.back().first = i - first;
                rep.types.back().count = 1;
                last.push_back(i);
                open.push_back(true);
                ++waiting;
            }
        } else {
            const std::size_t t = it->second;
            auto& st = rep.types[t];
            if (open[t]) {
                st.max_gap = std::max(st.max_gap, i - last[t]);
                open[t] = false;
                --waiting;
            }
            if (inside) {
                ++st.count;
                last[t] = i;
                open[t] = true;
                ++waiting;
            }
        }
        z += step(c.steps[i]);
    }
    for (auto& [pattern, t] : slot) rep.types[t].type = pattern;
    rep.all_recur = true;
    for (std::size_t t = 0; t < rep.types.size(); ++t) {
        if (open[t]) {
            rep.all_recur = false;
            ++rep.unresolved;
        }
        rep.max_gap = std::max(rep.max_gap, rep.types[t].max_gap);
    }
    return rep;
}

RecurrenceReport recurrence_gaps(const Curve& c, double s, std::size_t horizon) {
    if (horizon > c.size()) throw std::invalid_argument("recurrence_gaps: horizon exceeds the curve");
    return recurrence_gaps(c, CurveIndex(c), s, 0, horizon, c.size() - horizon);
}

RecurrenceReport recurrence_on_c(double s, std::size_t horizon, std::size_t lookahead, std::int64_t reach) {
    if (reach < 1 || static_cast<std::size_t>(reach) < horizon + lookahead)
        throw std::invalid_argument("recurrence_on_c: reach must cover the horizon");
    const Curve c = aligned_c().segments(-reach + 1, reach);
    // X_1 is segment number reach of this curve.
    return recurrence_gaps(c, CurveIndex(c), s, static_cast<std::size_t>(reach), horizon, lookahead);
}

std::string_view class_name(ClassTag t) {
    switch (t) {
        case ClassTag::EClass: return "EClass";
        case ClassTag::FClass: return "FClass";
        case ClassTag::Unknown: return "Unknown";
    }
    return "?";
}

Classification classify(const Curve& c) {
    using H = Heading;
    constexpr std::array<std::array<H, 6>, 2> e_pats = {{{H::East, H::North, H::East, H::North, H::East, H::North},
                                                         {H::South, H::West, H::South, H::West, H::South, H::West}}};
    constexpr std::array<std::array<H, 6>, 2> f_pats = {{{H::North, H::West, H::North, H::West, H::North, H::West},
                                                         {H::East, H::South, H::East, H::South, H::East, H::South}}};
    Classification res;
    res.too_short = c.size() < 64;
    auto match_at = [&](std::size_t i, const std::array<H, 6>& p) {
        return std::equal(p.begin(), p.end(), c.steps.begin() + static_cast<std::ptrdiff_t>(i));
    };
    for (std::size_t i = 0; i + 6 <= c.size(); ++i) {
        if (!res.e_witness && (match_at(i, e_pats[0]) || match_at(i, e_pats[1]))) res.e_witness = i;
        if (!res.f_witness && (match_at(i, f_pats[0]) || match_at(i, f_pats[1]))) res.f_witness = i;
        if (res.e_witness && res.f_witness) break;
    }
    res.both = res.e_witness && res.f_witness;
    if (res.both) res.tag = ClassTag::Unknown;
    else if (res.e_witness) res.tag = ClassTag::EClass;
    else if (res.f_witness) res.tag = ClassTag::FClass;
    return res;
}

Curve class_image(const Curve& c) {
    Curve out;
    out.start = rotate(c.start, 1);
    out.steps.reserve(c.size());
    for (Heading h : c.steps) out.steps.push_back(rotate(h, 1));
    return out;
}

DigitCurve aligned_c() { return DigitCurve::integer_curve(Heading::East, Heading::South); }

std::string_view equivalence_name(Equivalence e) {
    switch (e) {
        case Equivalence::Translation: return "Translation";
        case Equivalence::PointReflection: return "PointReflection";
        case Equivalence::None: return "None";
    }
    return "?";
}

BlockRelation block_equiv(const DigitCurve& A, std::int64_t k, const DigitCurve& B, std::int64_t l, int m) {
    if (m < 1 || m > 40) throw std::invalid_argument("block_equiv: m out of range");
    require_aligned(A, k, m, "a + k");
    require_aligned(B, l, m, "b + l");
    const std::int64_t half = std::int64_t{1} << m;
    const auto n = static_cast<std::size_t>(half - 1);
    BlockRelation r;
    const bool lower_same = A.turn_bits(k - half + 1, n) == B.turn_bits(l - half + 1, n);
    const bool upper_same = A.turn_bits(k + 1, n) == B.turn_bits(l + 1, n);
    r.centre_a = A.turn_at(k);
    r.centre_b = B.turn_at(l);
    const Heading a_lo = A.heading_at(k - half + 1), b_lo = B.heading_at(l - half + 1);
    const Heading a_up = A.heading_at(k + 1), b_up = B.heading_at(l + 1);
    r.lower = relate(lower_same, a_lo, b_lo);
    r.upper = relate(upper_same, a_up, b_up);
    r.whole = relate(lower_same && upper_same && r.centre_a == r.centre_b, a_lo, b_lo);
    r.centre_class_a = static_cast<int>(A.heading_at(k)) >= 2;
    r.centre_class_b = static_cast<int>(B.heading_at(l)) >= 2;
    return r;
}

bool bits_match(const DigitCurve& A, std::int64_t k, const DigitCurve& B, std::int64_t l, int m) {
    const BitSeq x = offset(A.base, k), y = offset(B.base, l);
    const auto d = static_cast<std::size_t>(m);
    return x.bit(d) == y.bit(d) && x.bit(d + 1) == y.bit(d + 1);
}

std::vector<std::int64_t> proof_partners(const DigitCurve& A, std::int64_t k, const DigitCurve& B, int m,
                                         std::int64_t j) {
    if (m < 1 || m > 40) throw std::invalid_argument("proof_partners: m out of range");
    const BitSeq ak = offset(A.base, k);
    const auto d = static_cast<std::size_t>(m);
    const bool zero_case = ak.bit(d) == 0 && ak.bit(d + 1) == 0;
    std::int64_t pattern = 0;
    if (zero_case) {
        pattern = std::int64_t{1} << (m + 2);
    } else {
        for (int i = 0; i < 4; ++i)
            pattern |= static_cast<std::int64_t>(ak.bit(d + static_cast<std::size_t>(i))) << (m + i);
    }
    const int width = m + 8;
    const std::int64_t modulus = std::int64_t{1} << width;
    std::int64_t l = 0;
    if (const auto b = B.base.to_int()) {
        l = pattern + j * modulus - *b;
    } else {
        const std::int64_t low = low_bits(B.base, width);
        l = ((pattern - low) % modulus + modulus) % modulus + j * modulus;
    }
    const std::int64_t big = (std::int64_t{1} << (m + 6)) + (std::int64_t{1} << (m + 5));
    const std::int64_t small = std::int64_t{1} << (m + 3);
    if (!zero_case) return {l, l + big};
    return {l, l + big, l + small, l + big + small};
}

PartnerCheck check_partners(const DigitCurve& A, std::int64_t k, const DigitCurve& B, int m, std::int64_t j) {
    PartnerCheck pc;
    pc.partners = proof_partners(A, k, B, m, j);
    for (auto l : pc.partners) pc.relations.push_back(block_equiv(A, k, B, l, m));
    auto pair_ok = [&](std::size_t i0, std::size_t i1) {
        const auto a = pc.relations[i0].whole, b = pc.relations[i1].whole;
        return (a == Equivalence::Translation && b == Equivalence::PointReflection) ||
               (a == Equivalence::PointReflection && b == Equivalence::Translation);
    };
    auto take = [&](std::size_t i0, std::size_t i1) {
        pc.ok = pair_ok(i0, i1);
        pc.centre_flipped = pc.relations[i0].centre_class_b != pc.relations[i1].centre_class_b;
    };
    if (pc.partners.size() == 2) {
        take(0, 1);
    } else {
        // The pair whose centre turns agree with A is the one the argument uses.
        const bool first_pair = pc.relations[0].whole != Equivalence::None || pc.relations[1].whole != Equivalence::None;
        if (first_pair) take(0, 1);
        else take(2, 3);
    }
    return pc;
}

BitSeq random_admissible(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(2, 8), head_len(0, 63), bit(0, 1);
    std::string period;
    while (period.find('0') == std::string::npos || period.find('1') == std::string::npos) {
        period.clear();
        const int L = len(rng);
        for (int i = 0; i < L; ++i) period.push_back(bit(rng) ? '1' : '0');
    }
    std::string head;
    const int H = head_len(rng);
    for (int i = 0; i < H; ++i) head.push_back(bit(rng) ? '1' : '0');
    return BitSeq(period, head);
}

DigitCurve random_aligned_curve(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    const Heading g = coin(rng) ? Heading::East : Heading::West;
    if (coin(rng)) return DigitCurve::integer_curve(g, coin(rng) ? Heading::North : Heading::South);
    std::uniform_int_distribution<std::int64_t> coord(-100, 100);
    // a_0 = 0, so a + k has the parity of k and odd segments stay horizontal.
    const BitSeq a = random_admissible(rng);
    return DigitCurve::from_sequence(BitSeq(a.tail_period(), a.head() + "0"), {coord(rng), coord(rng)}, g);
}

std::int64_t random_aligned_index(const DigitCurve& c, int m, std::mt19937_64& rng) {
    const std::int64_t half = std::int64_t{1} << m;
    const std::int64_t low = low_bits(c.base, m);
    std::uniform_int_distribution<std::int64_t> t(-(std::int64_t{1} << (40 - m)), std::int64_t{1} << (40 - m));
    const auto value = c.base.to_int();
    for (;;) {
        const std::int64_t k = t(rng) * half - low;
        if (value && std::abs(*value + k) <= half) continue;
        return k;
    }
}

BlockSampleReport sample_block_pairs(std::size_t count, int m_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> level(1, m_max);
    BlockSampleReport rep;
    while (rep.samples < count) {
        const int m = level(rng);
        const DigitCurve A = random_aligned_curve(rng);
        const DigitCurve B = random_aligned_curve(rng);
        const std::int64_t k = random_aligned_index(A, m, rng);
        std::int64_t l = random_aligned_index(B, m, rng);
        const auto want = (low_bits(offset(A.base, k), m + 2) >> m) & 3;
        const auto have = (low_bits(offset(B.base, l), m + 2) >> m) & 3;
        l += static_cast<std::int64_t>((want - have) & 3) << m;
        if (const auto b = B.base.to_int(); b && std::abs(*b + l) <= (std::int64_t{1} << m)) continue;
        ++rep.samples;
        const BlockRelation r = block_equiv(A, k, B, l, m);
        if (r.halves_ok()) ++rep.halves_ok;
        else
            rep.failures.push_back("m=" + std::to_string(m) + " A(" + describe_curve(A) + ") k=" + std::to_string(k) +
                                   " B(" + describe_curve(B) + ") l=" + std::to_string(l) + ": lower " +
                                   std::string(equivalence_name(r.lower)) + ", upper " +
                                   std::string(equivalence_name(r.upper)));
        if (r.whole != Equivalence::None) ++rep.whole_equal;
    }
    return rep;
}

PartnerSampleReport sample_partners(std::size_t per_m, int m_max, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> jdist(0, 64);
    PartnerSampleReport rep;
    for (int m = 1; m <= m_max; ++m) {
        for (std::size_t s = 0; s < per_m; ++s) {
            const DigitCurve A = random_aligned_curve(rng);
            const DigitCurve B = random_aligned_curve(rng);
            const std::int64_t k = random_aligned_index(A, m, rng);
            const auto pc = check_partners(A, k, B, m, jdist(rng));
            ++rep.checked;
            if (pc.ok) ++rep.ok;
            if (pc.centre_flipped) ++rep.centre_flipped;
            if (!pc.ok || !pc.centre_flipped) {
                std::string rels;
                for (const auto& r : pc.relations) rels += " " + std::string(equivalence_name(r.whole));
                rep.failures.push_back("m=" + std::to_string(m) + " A(" + describe_curve(A) + ") k=" +
                                       std::to_string(k) + " B(" + describe_curve(B) + "):" + rels);
            }
        }
    }
    return rep;
}

}  // namespace digitcurve
