#include "digitcurve/bitseq.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace digitcurve {

namespace {

bool is_binary(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

// Smallest p dividing |s| with s == p^(|s|/p).
std::string primitive_root(const std::string& s) {
    const std::size_t n = s.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) ok = s[i] == s[i - p];
        if (ok) return s.substr(0, p);
    }
    return s;
}

// Prepends copies of the period until the head is at least `len` long.
std::string unrolled_head(const BitSeq& a, std::size_t len) {
    std::string head = a.head();
    const auto& p = a.tail_period();
    while (head.size() < len) head.insert(0, p);
    return head;
}

bool window_110(const BitSeq& s, std::size_t depth) {
    return s.bit(depth + 2) == 1 && s.bit(depth + 1) == 1 && s.bit(depth) == 0;
}

}  // namespace

BitSeq::BitSeq(std::string_view tail_period, std::string_view head)
    : period_(tail_period), head_(head) {
    if (period_.empty()) throw std::invalid_argument("BitSeq: empty tail period");
    if (!is_binary(period_) || !is_binary(head_))
        throw std::invalid_argument("BitSeq: digits must be '0' or '1'");
    canonicalize();
}

void BitSeq::canonicalize() {
    period_ = primitive_root(period_);
    // Slide the head/tail boundary rightward while the head still follows the period.
    std::size_t drop = 0;
    while (drop < head_.size() && head_[drop] == period_[0]) {
        std::rotate(period_.begin(), period_.begin() + 1, period_.end());
        ++drop;
    }
    head_.erase(0, drop);
}

BitSeq BitSeq::from_int(std::int64_t k) {
    const char fill = k < 0 ? '1' : '0';
    std::string head(64, '0');
    const auto bits = static_cast<std::uint64_t>(k);
    for (int i = 0; i < 64; ++i) head[63 - i] = ((bits >> i) & 1u) ? '1' : '0';
    return BitSeq(std::string(1, fill), head);
}

int BitSeq::bit(std::size_t depth) const {
    if (depth < head_.size()) return head_[head_.size() - 1 - depth] - '0';
    const std::size_t d = depth - head_.size();
    const std::size_t n = period_.size();
    return period_[n - 1 - d % n] - '0';
}

std::optional<std::size_t> BitSeq::valuation() const {
    for (std::size_t i = 0; i < head_.size(); ++i)
        if (head_[head_.size() - 1 - i] == '1') return i;
    const auto pos = period_.find_last_of('1');
    if (pos == std::string::npos) return std::nullopt;
    return head_.size() + (period_.size() - 1 - pos);
}

bool BitSeq::admissible() const {
    return period_.find('0') != std::string::npos && period_.find('1') != std::string::npos;
}

std::optional<std::int64_t> BitSeq::to_int() const {
    if (!is_integer() || head_.size() > 64) return std::nullopt;
    const bool negative = period_ == "1";
    if (head_.size() == 64 && (head_[0] == '1') != negative) return std::nullopt;
    std::uint64_t v = negative ? ~0ull : 0ull;
    for (char c : head_) v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    return static_cast<std::int64_t>(v);
}

std::string BitSeq::to_string() const { return "(" + period_ + ")*" + head_; }

BitSeq increment(const BitSeq& a) {
    if (a.is_all_ones()) return BitSeq("0", "");
    std::string head = a.head();
    while (head.find('0') == std::string::npos) head.insert(0, a.tail_period());
    const auto i = head.find_last_of('0');
    head[i] = '1';
    std::fill(head.begin() + static_cast<std::ptrdiff_t>(i) + 1, head.end(), '0');
    return BitSeq(a.tail_period(), head);
}

BitSeq decrement(const BitSeq& a) {
    if (a.is_zero()) return BitSeq("1", "");
    std::string head = a.head();
    while (head.find('1') == std::string::npos) head.insert(0, a.tail_period());
    const auto i = head.find_last_of('1');
    head[i] = '0';
    std::fill(head.begin() + static_cast<std::ptrdiff_t>(i) + 1, head.end(), '1');
    return BitSeq(a.tail_period(), head);
}

BitSeq offset(const BitSeq& a, std::int64_t k) {
    if (k == 0) return a;
    if (k == 1) return increment(a);
    if (k == -1) return decrement(a);

    // Split a = upper * 2^L + low with L >= 64, add k to the low part and
    // push the single carry or borrow into the periodic upper part.
    std::string low = unrolled_head(a, 64);
    const std::size_t len = low.size();
    const auto kbits = static_cast<std::uint64_t>(k);
    int carry = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const int kb = i < 64 ? static_cast<int>((kbits >> i) & 1u) : (k < 0 ? 1 : 0);
        char& c = low[len - 1 - i];
        const int s = (c - '0') + kb + carry;
        c = static_cast<char>('0' + (s & 1));
        carry = s >> 1;
    }
    // Sign extension of k contributes -2^L when k < 0.
    const int adjust = carry - (k < 0 ? 1 : 0);
    BitSeq upper(a.tail_period(), "");
    if (adjust > 0) upper = increment(upper);
    if (adjust < 0) upper = decrement(upper);
    return BitSeq(upper.tail_period(), upper.head() + low);
}

int p_bit(const BitSeq& a) { return a.bit(0); }

QRPair qr(const BitSeq& a) {
    const auto t = a.valuation();
    if (!t) return {};  // 0 = (...111) + 1: neither side has a 110 window.
    const BitSeq b = decrement(a);
    QRPair out;
    // Only windows whose lowest bit sits at depth <= t see a flipped bit.
    for (std::size_t d = 0; d <= *t; ++d) {
        const bool in_b = window_110(b, d);
        const bool in_a = window_110(a, d);
        if (in_b && !in_a) ++out.q;
        if (!in_b && in_a) ++out.r;
    }
    return out;
}

Turn turn_parity(const BitSeq& a) {
    const QRPair v = qr(a);
    return ((p_bit(a) + v.q + v.r) & 1) ? Turn::Left : Turn::Right;
}

Turn turn_parity_int(std::int64_t k) {
    if (k == 0) throw std::domain_error("turn_parity_int: k = 0 has no digit-rule turn");
    const auto t = std::countr_zero(static_cast<std::uint64_t>(k));
    const int b1 = static_cast<int>((k >> std::min(t + 1, 63)) & 1);
    const int b2 = static_cast<int>((k >> std::min(t + 2, 63)) & 1);
    const int parity = (t == 0 ? 1 : 0) ^ (b1 & b2) ^ ((t >= 1 ? 1 : 0) & b1);
    return parity ? Turn::Left : Turn::Right;
}

int alpha(int n, std::int64_t k) {
    if (n < 1 || n > 62) throw std::invalid_argument("alpha: pattern length must be in [1, 62]");
    if (k < 0) throw std::invalid_argument("alpha: k must be non-negative");
    const auto x = static_cast<std::uint64_t>(k);
    std::uint64_t occ = ~x;
    for (int j = 1; j <= n; ++j) occ &= x >> j;
    return std::popcount(occ);
}

}  // namespace digitcurve
