#include "digitcurve/explore.hpp"

#include <algorithm>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iterator>

#include "digitcurve/kernels.hpp"

namespace digitcurve {

namespace {

constexpr char kMagic[8] = {'D', 'C', 'X', 'P', 'L', 'R', '0', '1'};
constexpr std::uint64_t kBatch = std::uint64_t{1} << 16;
constexpr std::uint8_t kNoHeading = 0xff;

class Writer {
public:
    template <class T>
    void put(T v) {
        const auto* p = reinterpret_cast<const char*>(&v);
        buf_.append(p, sizeof v);
    }
    const std::string& bytes() const { return buf_; }

private:
    std::string buf_;
};

class Reader {
public:
    explicit Reader(std::string_view s) : s_(s) {}
    template <class T>
    T get() {
        T v{};
        if (s_.size() - at_ < sizeof v) throw CheckpointError("checkpoint: truncated payload");
        std::memcpy(&v, s_.data() + at_, sizeof v);
        at_ += sizeof v;
        return v;
    }
    bool done() const { return at_ == s_.size(); }

private:
    std::string_view s_;
    std::size_t at_ = 0;
};

struct Saved {
    int n = 0;
    std::uint64_t steps = 0;
    LatticeVec start, pos;
    std::optional<Heading> heading;
    std::uint8_t arrival = 0;
    std::vector<SelfAvoidWalker::VertexEntry> entries;
};

void save(const std::string& path, int n, const SelfAvoidWalker& w) {
    Writer p;
    p.put<std::int32_t>(n);
    p.put<std::uint64_t>(w.steps());
    p.put(w.start().x);
    p.put(w.start().y);
    p.put(w.position().x);
    p.put(w.position().y);
    p.put<std::uint8_t>(w.heading() ? static_cast<std::uint8_t>(*w.heading()) : kNoHeading);
    p.put<std::uint8_t>(w.mask_before_arrival());
    const auto entries = w.vertex_entries();
    p.put<std::uint64_t>(entries.size());
    for (const auto& e : entries) {
        p.put(e.vertex.x);
        p.put(e.vertex.y);
        p.put(e.mask);
    }
    const std::string& payload = p.bytes();
    Writer h;
    for (char c : kMagic) h.put(c);
    h.put<std::uint64_t>(fnv1a64(payload.data(), payload.size()));
    h.put<std::uint64_t>(payload.size());

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
        out.write(h.bytes().data(), static_cast<std::streamsize>(h.bytes().size()));
        out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

Saved load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read checkpoint " + path);
    const std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    constexpr std::size_t header = sizeof kMagic + 16;
    if (all.size() < header || std::memcmp(all.data(), kMagic, sizeof kMagic) != 0)
        throw CheckpointError("checkpoint: bad magic in " + path);
    Reader h(std::string_view(all).substr(sizeof kMagic, 16));
    const auto digest = h.get<std::uint64_t>();
    const auto size = h.get<std::uint64_t>();
    const std::string_view payload = std::string_view(all).substr(header);
    if (payload.size() != size) throw CheckpointError("checkpoint: payload size mismatch in " + path);
    if (fnv1a64(payload.data(), payload.size()) != digest) throw CheckpointError("checkpoint: digest mismatch in " + path);

    Reader r(payload);
    Saved s;
    s.n = r.get<std::int32_t>();
    s.steps = r.get<std::uint64_t>();
    s.start.x = r.get<std::int64_t>();
    s.start.y = r.get<std::int64_t>();
    s.pos.x = r.get<std::int64_t>();
    s.pos.y = r.get<std::int64_t>();
    const auto hd = r.get<std::uint8_t>();
    if (hd != kNoHeading) {
        if (hd > 3) throw CheckpointError("checkpoint: bad heading");
        s.heading = static_cast<Heading>(hd);
    }
    s.arrival = r.get<std::uint8_t>();
    const auto count = r.get<std::uint64_t>();
    if (count > payload.size()) throw CheckpointError("checkpoint: bad entry count");
    s.entries.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        SelfAvoidWalker::VertexEntry e{};
        e.vertex.x = r.get<std::int64_t>();
        e.vertex.y = r.get<std::int64_t>();
        e.mask = r.get<std::uint8_t>();
        s.entries.push_back(e);
    }
    if (!r.done()) throw CheckpointError("checkpoint: trailing bytes");
    return s;
}

std::vector<std::uint8_t> turns_between(const TurnSource& src, std::uint64_t first, std::uint64_t count) {
    std::vector<std::uint8_t> out(count);
    if (count) src(first, out);
    return out;
}

void describe_failure(const TurnSource& src, ExploreResult& res) {
    Failure& f = *res.failure;
    // Segments 0 .. second_index hold every edge involved.
    const std::uint64_t segs = f.second_index + 1;
    const auto bits = turns_between(src, 1, segs - 1);
    const Curve prefix = build_from_turn_bits({0, 0}, Heading::East, bits);
    locate_first_index(prefix.steps, prefix.start, f);
    res.window = window(prefix, f.vertex, 4.0);
    const std::uint64_t from = f.first_index == kUnknownIndex ? f.second_index : f.first_index;
    res.turns_from = from > 8 ? from - 7 : 1;
    const std::uint64_t hi = f.second_index + 8;
    std::string t;
    for (auto b : turns_between(src, res.turns_from, hi - res.turns_from)) t.push_back(b ? 'L' : 'R');
    res.turns = std::move(t);
}

}  // namespace

std::uint64_t fnv1a64(const void* data, std::size_t size, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

ExploreResult walk(const ExploreOptions& opts, const TurnSource& src) {
    if (opts.steps < 1) throw std::invalid_argument("explore: steps must be positive");
    if (opts.steps > opts.cap) throw std::invalid_argument("explore: steps exceed the cap");
    ExploreResult res;
    res.n = opts.n;
    res.steps = opts.steps;

    SelfAvoidWalker walker({0, 0}, static_cast<std::size_t>(std::min<std::uint64_t>(opts.steps, kBatch)));
    const bool use_checkpoint = !opts.checkpoint.empty();
    if (use_checkpoint && std::filesystem::exists(opts.checkpoint)) {
        Saved s = load(opts.checkpoint);
        if (s.n != opts.n) throw CheckpointError("checkpoint: written for another pattern length");
        if (s.steps > opts.steps) throw CheckpointError("checkpoint: ahead of the requested step count");
        walker = SelfAvoidWalker::restore(s.start, s.pos, s.heading, s.steps, s.arrival, s.entries);
        res.resumed_from = s.steps;
    }
    const std::uint64_t every = std::max<std::uint64_t>(1, opts.checkpoint_every);

    std::vector<std::uint8_t> bits;
    while (walker.ok() && walker.steps() < opts.steps) {
        if (walker.steps() == 0) {
            walker.push(Heading::East);
            continue;
        }
        const std::uint64_t k = walker.steps();  // turn between S_k and S_{k+1}
        std::uint64_t end = std::min(opts.steps, (k / kBatch + 1) * kBatch);
        if (use_checkpoint) end = std::min(end, (k / every + 1) * every);
        bits.resize(end - k);
        src(k, bits);
        Heading h = *walker.heading();
        for (auto b : bits) {
            h = turned(h, b ? Turn::Left : Turn::Right);
            if (!walker.push(h)) break;
        }
        if (use_checkpoint && walker.ok() && (walker.steps() % every == 0 || walker.steps() == opts.steps)) {
            save(opts.checkpoint, opts.n, walker);
            ++res.checkpoints_written;
        }
    }
    res.end = walker.position();
    res.ok = walker.ok();
    if (!res.ok) {
        res.failure = *walker.failure();
        describe_failure(src, res);
    }
    return res;
}

}  // namespace

ExploreResult explore(const ExploreOptions& opts) {
    if (opts.n < 2 || opts.n > 60) throw std::invalid_argument("explore: pattern length must be in [2, 60]");
    const int n = opts.n;
    return walk(opts, [n](std::uint64_t first, std::span<std::uint8_t> out) {
        kernels::pattern_turns(n, static_cast<std::int64_t>(first), out);
    });
}

ExploreResult explore_turns(const TurnSource& src, std::uint64_t steps, std::uint64_t cap) {
    ExploreOptions o;
    o.n = 0;
    o.steps = steps;
    o.cap = cap;
    return walk(o, src);
}

ExploreResult explore_conjecture(int n, std::uint64_t K) {
    ExploreOptions o;
    o.n = n;
    o.steps = K;
    return explore(o);
}

}  // namespace digitcurve
