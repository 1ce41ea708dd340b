#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "digitcurve/geometry.hpp"

namespace digitcurve {

/// Default cap on explored segments.
inline constexpr std::uint64_t kMaxExploreSteps = std::uint64_t{1} << 24;

struct ExploreOptions {
    int n = 2;                   // pattern 1^n 0
    std::uint64_t steps = 0;     // segments to build
    std::uint64_t cap = kMaxExploreSteps;
    std::string checkpoint;      // empty: no checkpointing
    std::uint64_t checkpoint_every = std::uint64_t{1} << 22;
};

struct ExploreResult {
    int n = 0;
    std::uint64_t steps = 0;
    bool ok = false;
    std::optional<Failure> failure;  // 0-based segment indices
    WindowPattern window;            // around the failure vertex
    std::string turns;               // L/R turns around the failure, see turns_from
    std::uint64_t turns_from = 0;    // index k of the first turn in `turns`
    LatticeVec end;                  // last vertex reached
    std::uint64_t resumed_from = 0;  // segments restored from a checkpoint
    std::uint64_t checkpoints_written = 0;
};

class CheckpointError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Streams the curve of the pattern rule (S_1 along +e, Left at k iff
/// k + alpha_n(k) - alpha_n(k - 1) is odd) through the self-avoidance walker.
/// Resumes from opts.checkpoint when that file exists; throws CheckpointError
/// if it is corrupt or belongs to another run.
ExploreResult explore(const ExploreOptions& opts);

/// Fills out[i] with the turn (1 = Left) between S_{first+i} and S_{first+i+1}.
using TurnSource = std::function<void(std::uint64_t first, std::span<std::uint8_t> out)>;

/// Same walk and failure report for an arbitrary turn sequence; no checkpointing.
ExploreResult explore_turns(const TurnSource& src, std::uint64_t steps, std::uint64_t cap = kMaxExploreSteps);

/// explore without checkpointing.
ExploreResult explore_conjecture(int n, std::uint64_t K);

/// Digest used in checkpoint headers (FNV-1a, 64 bit).
std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed = 0xcbf29ce484222325ull);

}  // namespace digitcurve
