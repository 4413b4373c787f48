#include "rendezvous/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "rendezvous/analytic.hpp"
#include "rendezvous/errors.hpp"

namespace rendezvous {

namespace {

double wrap_angle(double a) noexcept
{
    a = std::remainder(a, 2.0 * kPi);
    return a;
}

double cross(Point a, Point b) noexcept
{
    return a.x * b.y - a.y * b.x;
}

Point unit(double angle) noexcept
{
    return Point{std::cos(angle), std::sin(angle)};
}

}  // namespace

double distance(Point a, Point b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double dart(AgentState& agent, double target_angle, double deviation)
{
    if (agent.radius == 0.0) {
        return 0.0;
    }
    const double side = wrap_angle(target_angle - agent.angle) >= 0.0 ? 1.0 : -1.0;
    const Point u = unit(agent.angle + kPi - side * deviation);
    const Point e = unit(target_angle);
    const Point p = agent.position;

    // Solve p + t u = q e for the travel t and the new radius q.
    const double det = cross(e, u);
    if (det == 0.0) {
        throw NumericDomainError("darting direction is parallel to the target bisector");
    }
    const double t = std::max(0.0, cross(p, e) / det);
    const double q = std::max(0.0, cross(p, u) / det);

    agent.position = Point{q * e.x, q * e.y};
    agent.angle = target_angle;
    agent.radius = q;
    agent.travelled += t;
    return t;
}

const char* to_string(MeetingPoint m) noexcept
{
    switch (m) {
    case MeetingPoint::FirstDarting:
        return "first_darting";
    case MeetingPoint::SecondDarting:
        return "second_darting";
    case MeetingPoint::Origin:
        return "origin";
    case MeetingPoint::None:
        return "none";
    }
    return "none";
}

TrialEngine::TrialEngine(const Instance& instance, const Strategy& strategy, Bounds bounds)
    : alpha_(instance.alpha()), strategy_(strategy)
{
    darting_geometry(instance, strategy, bounds);  // validates the angles
    a_.position = unit(0.0);
    a_.angle = 0.0;
    b_.position = unit(2.0 * alpha_);
    b_.angle = 2.0 * alpha_;
}

int TrialEngine::toward_sign(const AgentState& self, const AgentState& peer) const noexcept
{
    return wrap_angle(peer.angle - self.angle) >= 0.0 ? 1 : -1;
}

bool TrialEngine::coincide(double scale)
{
    const double gap = distance(a_.position, b_.position) / scale;
    if (gap <= kMeetingTolerance) {
        meeting_gap_ = std::max(meeting_gap_, gap);
        return true;
    }
    return false;
}

MeetingPoint TrialEngine::play_round(bool a_toward, bool b_toward)
{
    const double scale = std::max(a_.radius, b_.radius);
    const int sa = a_toward ? toward_sign(a_, b_) : -toward_sign(a_, b_);
    const int sb = b_toward ? toward_sign(b_, a_) : -toward_sign(b_, a_);
    ++rounds_;

    dart(a_, a_.angle + sa * alpha_, strategy_.beta);
    dart(b_, b_.angle + sb * alpha_, strategy_.beta);
    if (coincide(scale)) {
        return MeetingPoint::FirstDarting;
    }

    dart(a_, a_.angle - 2.0 * sa * alpha_, strategy_.gamma);
    dart(b_, b_.angle - 2.0 * sb * alpha_, strategy_.gamma);
    if (coincide(scale)) {
        return MeetingPoint::SecondDarting;
    }
    return MeetingPoint::None;
}

void TrialEngine::go_to_origin()
{
    for (AgentState* agent : {&a_, &b_}) {
        agent->travelled += agent->radius;
        agent->position = Point{};
        agent->radius = 0.0;
    }
}

std::uint64_t SplitMix64::mix(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SplitMix64::result_type SplitMix64::operator()() noexcept
{
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
}

bool RandomBits::operator()() noexcept
{
    if (remaining_ == 0) {
        buffer_ = rng_();
        remaining_ = 64;
    }
    const bool bit = (buffer_ & 1U) != 0;
    buffer_ >>= 1;
    --remaining_;
    return bit;
}

std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    return SplitMix64::mix(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

namespace {

constexpr std::int64_t kChunkSize = 1 << 14;

struct ChunkStats
{
    std::int64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    std::map<std::int64_t, std::int64_t> histogram;
    std::int64_t first = 0;
    std::int64_t second = 0;
    std::int64_t origin = 0;
    std::int64_t truncated = 0;
    std::int64_t first_round_one = 0;
    std::int64_t second_round_one = 0;
    double max_gap = 0.0;

    void add(const TrialOutcome& o)
    {
        ++histogram[o.rounds_elapsed];
        max_gap = std::max(max_gap, o.meeting_gap);
        switch (o.met_at) {
        case MeetingPoint::FirstDarting:
            ++first;
            first_round_one += o.rounds_elapsed == 1;
            break;
        case MeetingPoint::SecondDarting:
            ++second;
            second_round_one += o.rounds_elapsed == 1;
            break;
        case MeetingPoint::Origin:
            ++origin;
            break;
        case MeetingPoint::None:
            break;
        }
        if (o.truncated) {
            ++truncated;
            return;
        }
        ++n;
        const double delta = o.total_time - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (o.total_time - mean);
    }

    // Chan et al. pairwise merge; called in chunk order only.
    void merge(const ChunkStats& other)
    {
        for (const auto& [round, count] : other.histogram) {
            histogram[round] += count;
        }
        first += other.first;
        second += other.second;
        origin += other.origin;
        truncated += other.truncated;
        first_round_one += other.first_round_one;
        second_round_one += other.second_round_one;
        max_gap = std::max(max_gap, other.max_gap);
        if (other.n == 0) {
            return;
        }
        const double na = static_cast<double>(n);
        const double nb = static_cast<double>(other.n);
        const double delta = other.mean - mean;
        const double total = na + nb;
        mean += delta * nb / total;
        m2 += other.m2 + delta * delta * na * nb / total;
        n += other.n;
    }
};

}  // namespace

SimulationSummary monte_carlo(const Instance& instance, const Strategy& strategy, std::int64_t trials,
                              std::uint64_t seed, const MonteCarloOptions& options)
{
    if (trials < 1) {
        throw std::invalid_argument("monte_carlo needs at least one trial");
    }
    darting_geometry(instance, strategy, options.bounds);

    const std::int64_t chunks = (trials + kChunkSize - 1) / kChunkSize;
    std::vector<ChunkStats> results(static_cast<std::size_t>(chunks));
    const TrialOptions trial_options{options.round_cap, options.bounds};

    auto run_chunk = [&](std::int64_t c) {
        ChunkStats& stats = results[static_cast<std::size_t>(c)];
        const std::int64_t begin = c * kChunkSize;
        const std::int64_t end = std::min(trials, begin + kChunkSize);
        for (std::int64_t i = begin; i < end; ++i) {
            RandomBits bits(trial_stream_seed(seed, static_cast<std::uint64_t>(i)));
            stats.add(simulate_trial(instance, strategy, bits, trial_options));
        }
    };

    const unsigned threads =
        static_cast<unsigned>(std::clamp<std::int64_t>(options.threads, 1, chunks));
    if (threads == 1) {
        for (std::int64_t c = 0; c < chunks; ++c) {
            run_chunk(c);
        }
    } else {
        std::atomic<std::int64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (std::int64_t c = next++; c < chunks; c = next++) {
                    run_chunk(c);
                }
            });
        }
    }

    ChunkStats total;
    for (const ChunkStats& chunk : results) {
        total.merge(chunk);
    }

    SimulationSummary summary;
    summary.trials = trials;
    summary.seed = seed;
    summary.mean_time = total.n > 0 ? total.mean : kInfinity;
    summary.std_error = total.n > 1 ? std::sqrt(total.m2 / static_cast<double>(total.n - 1)) /
                                          std::sqrt(static_cast<double>(total.n))
                                    : 0.0;
    summary.round_histogram = std::move(total.histogram);
    summary.first_darting = total.first;
    summary.second_darting = total.second;
    summary.origin = total.origin;
    summary.truncated = total.truncated;
    summary.first_darting_round_one = total.first_round_one;
    summary.second_darting_round_one = total.second_round_one;
    summary.max_meeting_gap = total.max_gap;
    return summary;
}

double exact_enumeration(const Instance& instance, const Strategy& strategy)
{
    if (strategy.steps.is_unbounded() || strategy.steps.count() > 12) {
        throw OutOfValidatedRangeError("exact_enumeration supports finite k <= 12; use monte_carlo");
    }
    const std::int64_t k = strategy.steps.count();

    double total = 0.0;
    auto walk = [&](auto&& self, const TrialEngine& engine, double probability) -> void {
        if (engine.rounds() == k) {
            TrialEngine tail = engine;
            tail.go_to_origin();
            total += probability * tail.agent_a().travelled;
            return;
        }
        for (const bool a_bit : {true, false}) {
            for (const bool b_bit : {true, false}) {
                TrialEngine next = engine;
                const double p = 0.25 * probability;
                if (next.play_round(a_bit, b_bit) != MeetingPoint::None) {
                    total += p * next.agent_a().travelled;
                } else {
                    self(self, next, p);
                }
            }
        }
    };
    walk(walk, TrialEngine(instance, strategy), 1.0);
    return total;
}

double worst_case_time(const Instance& instance, const Strategy& strategy, Bounds bounds)
{
    TrialEngine engine(instance, strategy, bounds);
    // A darts toward B while B darts away from A: both turn the same way.
    if (!strategy.steps.is_unbounded()) {
        for (std::int64_t i = 0; i < strategy.steps.count(); ++i) {
            if (engine.play_round(true, false) != MeetingPoint::None) {
                return engine.agent_a().travelled;
            }
        }
        engine.go_to_origin();
        return engine.agent_a().travelled;
    }
    if (engine.play_round(true, false) != MeetingPoint::None) {
        return engine.agent_a().travelled;
    }
    const double round_length = engine.agent_a().travelled;
    const double shrink = engine.agent_a().radius;
    if (!(shrink < 1.0)) {
        return kInfinity;
    }
    return round_length / (1.0 - shrink);
}

std::vector<TrajectoryPoint> agent_trajectory(const Instance& instance, const Strategy& strategy,
                                              const TrajectoryOptions& options)
{
    darting_geometry(instance, strategy);
    const double alpha = instance.alpha();
    const std::int64_t limit =
        strategy.steps.is_unbounded() ? options.round_cap : std::min(options.round_cap, strategy.steps.count());

    AgentState agent;
    agent.position = unit(0.0);
    RandomBits bits(trial_stream_seed(options.seed, 0));

    std::vector<TrajectoryPoint> points;
    auto record = [&](std::int64_t round) {
        points.push_back({round, agent.position.x, agent.position.y, agent.radius, agent.travelled});
    };
    record(0);
    std::int64_t round = 0;
    while (round < limit && agent.radius >= options.radius_floor) {
        ++round;
        const bool ccw = options.mode == TrajectoryMode::Spiral || bits();
        const double side = ccw ? 1.0 : -1.0;
        dart(agent, agent.angle + side * alpha, strategy.beta);
        record(round);
        dart(agent, agent.angle - 2.0 * side * alpha, strategy.gamma);
        record(round);
    }
    if (!strategy.steps.is_unbounded() && round == strategy.steps.count()) {
        agent.travelled += agent.radius;
        agent.position = Point{};
        agent.radius = 0.0;
        record(round);
    }
    return points;
}

}  // namespace rendezvous
