#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "digitcurve/digit_curve.hpp"
#include "digitcurve/geometry.hpp"
#include "digitcurve/morphism.hpp"

namespace digitcurve {

struct Lemma3Result {
    int n = 0;
    bool ok = false;
    std::uint64_t turns_checked = 0;
    std::optional<std::uint64_t> first_mismatch;  // k of the first disagreeing turn
    /// Quarter turns (anticlockwise) taking C_n onto the part of C from 0.
    int rotation = 0;
    BoundaryLetters boundary{};
    bool boundary_ok = true;  // only meaningful for n >= 2
};

/// Morphism turns of C_n against the digit rule at k = 1 .. 2^n - 1.
Lemma3Result verify_lemma3(int n);

struct RuleResult {
    int n = 0;
    std::int64_t K = 0;
    bool ok = false;
    std::optional<std::int64_t> first_mismatch;
};

/// n = 2: P + Q + R against k + alpha_2(k) - alpha_2(k - 1) for 1 <= k <= K.
/// Other n: batch kernel against the scalar alpha recount.
RuleResult verify_rule_equivalence(int n, std::int64_t K);

struct WindowStats {
    WindowPattern type;
    std::size_t count = 0;    // occurrences inside the horizon
    std::size_t first = 0;    // offset of the first occurrence
    std::size_t max_gap = 0;  // largest distance from an occurrence in the horizon to the next one
};

struct RecurrenceReport {
    double radius = 0;
    std::size_t horizon = 0;
    std::size_t lookahead = 0;
    std::vector<WindowStats> types;  // in order of first occurrence
    bool all_recur = false;          // every occurrence in the horizon has a successor
    std::size_t max_gap = 0;
    std::size_t unresolved = 0;      // types whose last occurrence found no successor
};

/// Window types at the start vertices of segments first .. first + horizon - 1
/// of c. Successors of those occurrences are searched up to `lookahead`
/// further segments. Edges of the whole of c are visible to every window.
RecurrenceReport recurrence_gaps(const Curve& c, const CurveIndex& index, double s, std::size_t first,
                                 std::size_t horizon, std::size_t lookahead);
/// Same with the windows at the first `horizon` vertices and the rest of c as lookahead.
RecurrenceReport recurrence_gaps(const Curve& c, double s, std::size_t horizon);

/// Recurrence witness on aligned C: windows at the starts of X_1 .. X_horizon,
/// successors searched through X_{horizon + lookahead}, edges of
/// X_{-reach+1} .. X_{reach} visible.
RecurrenceReport recurrence_on_c(double s, std::size_t horizon, std::size_t lookahead, std::int64_t reach);

enum class ClassTag { EClass, FClass, Unknown };
std::string_view class_name(ClassTag t);

struct Classification {
    ClassTag tag = ClassTag::Unknown;
    std::optional<std::size_t> e_witness;  // first segment of an e-first staircase
    std::optional<std::size_t> f_witness;
    bool both = false;     // both staircases occur: the discriminator failed
    bool too_short = false;
};

/// EClass staircase: points y, y+e, y+e+f, ..., y+3e+3f as consecutive
/// vertices, walked either way (E,N,E,N,E,N or S,W,S,W,S,W).
/// FClass staircase: its image under the class map e -> f, f -> -e
/// (N,W,N,W,N,W or E,S,E,S,E,S).
Classification classify(const Curve& c);

/// The map between the two classes: a quarter turn anticlockwise, so that
/// +-e goes to +-f and +-f to +-e. Unlike swap_ef it keeps the turn sequence.
Curve class_image(const Curve& c);

/// C placed so that X_1 = [0, e] and X_0 = [f, 0]; odd segments are horizontal
/// and the part from 0 starts with C_n.
DigitCurve aligned_c();

enum class Equivalence { Translation, PointReflection, None };
std::string_view equivalence_name(Equivalence e);

/// Relation between the blocks (X_{k-2^m+1} .. X_{k+2^m}) of A and (Y_{l-2^m+1} .. Y_{l+2^m}) of B.
struct BlockRelation {
    Equivalence lower = Equivalence::None;  // X_{k-2^m+1} .. X_k
    Equivalence upper = Equivalence::None;  // X_{k+1} .. X_{k+2^m}
    Equivalence whole = Equivalence::None;
    Turn centre_a = Turn::Right, centre_b = Turn::Right;  // turns X_k -> X_{k+1}, Y_l -> Y_{l+1}
    bool centre_class_a = false, centre_class_b = false;  // X_k, Y_l heading West or South
    bool halves_ok() const { return lower != Equivalence::None && upper != Equivalence::None; }
};

/// Requires A.base + k and B.base + l to be divisible by 2^m, m >= 1;
/// throws std::invalid_argument otherwise.
BlockRelation block_equiv(const DigitCurve& A, std::int64_t k, const DigitCurve& B, std::int64_t l, int m);

/// Bits m and m+1 of A.base + k and B.base + l agree.
bool bits_match(const DigitCurve& A, std::int64_t k, const DigitCurve& B, std::int64_t l, int m);

/// The block indices l of B whose low m+8 bits follow the display for A_{k,m}
/// (j selects among the solutions, stepping by 2^{m+8}). For (a_{k,m+1}, a_{k,m})
/// != (0,0) returns {l, l + 2^{m+6} + 2^{m+5}}; otherwise additionally
/// {l + 2^{m+3}, l + 2^{m+6} + 2^{m+5} + 2^{m+3}}.
std::vector<std::int64_t> proof_partners(const DigitCurve& A, std::int64_t k, const DigitCurve& B, int m,
                                         std::int64_t j);

struct PartnerCheck {
    bool ok = false;             // A isomorphic to one partner and point-reflected to the other
    bool centre_flipped = false;  // the two chosen partners differ in centre class
    std::vector<std::int64_t> partners;
    std::vector<BlockRelation> relations;
};

PartnerCheck check_partners(const DigitCurve& A, std::int64_t k, const DigitCurve& B, int m, std::int64_t j);

struct PartnerSampleReport {
    std::size_t checked = 0;
    std::size_t ok = 0;
    std::size_t centre_flipped = 0;
    std::vector<std::string> failures;
};

/// check_partners on `per_m` random aligned curves for each m in [1, m_max].
PartnerSampleReport sample_partners(std::size_t per_m, int m_max, std::uint64_t seed);

/// Random admissible sequence: tail period of length 2..8 containing both digits, head of length 0..63.
BitSeq random_admissible(std::mt19937_64& rng);

/// Random curve of the family with odd segments horizontal: either an integer
/// curve C_{g,h} with g = +-e, or C_{a,x,g} with admissible a ending in 0 and g = +-e.
DigitCurve random_aligned_curve(std::mt19937_64& rng);

/// Random k with base + k divisible by 2^m and |k| < 2^40, avoiding blocks that reach the all-zeros value.
std::int64_t random_aligned_index(const DigitCurve& c, int m, std::mt19937_64& rng);

struct BlockSampleReport {
    std::size_t samples = 0;
    std::size_t halves_ok = 0;
    std::size_t whole_equal = 0;  // centre turns agree as well
    std::vector<std::string> failures;
};

/// Draws aligned pairs with matching bits m, m+1 (m in [1, m_max]) and compares them.
BlockSampleReport sample_block_pairs(std::size_t count, int m_max, std::uint64_t seed);

}  // namespace digitcurve
