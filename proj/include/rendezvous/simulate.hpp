#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <vector>

#include "rendezvous/geometry.hpp"

namespace rendezvous {

/// Round cap for unbounded strategies.
inline constexpr std::int64_t kDefaultRoundCap = 1'000'000;

/// Relative tolerance (scaled by the current disk radius) for position coincidence.
inline constexpr double kMeetingTolerance = 1e-9;

struct Point
{
    double x = 0.0;
    double y = 0.0;
};

double distance(Point a, Point b) noexcept;

/// One agent: planar position together with its polar description.
struct AgentState
{
    Point position;
    double angle = 0.0;
    double radius = 1.0;
    double travelled = 0.0;
};

/// Moves `agent` from its position along a ray deviating by `deviation` from the
/// direction to the origin, until the ray from the origin at `target_angle`.
/// The deviation turns toward the target side. Returns the segment length.
double dart(AgentState& agent, double target_angle, double deviation);

enum class MeetingPoint
{
    FirstDarting,
    SecondDarting,
    Origin,
    None,  ///< truncated by the round cap
};

const char* to_string(MeetingPoint m) noexcept;

struct TrialOutcome
{
    std::int64_t rounds_elapsed = 0;
    MeetingPoint met_at = MeetingPoint::None;
    double total_time = 0.0;
    bool truncated = false;
    /// Largest relative position mismatch seen at a detected meeting.
    double meeting_gap = 0.0;
};

/// Two agents playing rounds on the shrinking disk. Agent A starts at angle 0,
/// agent B at angle 2*alpha; each round consumes one direction bit per agent
/// (true = first darting toward the peer's side).
class TrialEngine
{
public:
    TrialEngine(const Instance& instance, const Strategy& strategy, Bounds bounds = Bounds::Checked);

    /// Plays one round. Returns the meeting point or None if the round failed.
    MeetingPoint play_round(bool a_toward, bool b_toward);
    /// Both agents go to the origin.
    void go_to_origin();

    const AgentState& agent_a() const noexcept { return a_; }
    const AgentState& agent_b() const noexcept { return b_; }
    std::int64_t rounds() const noexcept { return rounds_; }
    double meeting_gap() const noexcept { return meeting_gap_; }
    const Strategy& strategy() const noexcept { return strategy_; }

private:
    bool coincide(double scale);
    int toward_sign(const AgentState& self, const AgentState& peer) const noexcept;

    double alpha_;
    Strategy strategy_;
    AgentState a_;
    AgentState b_;
    std::int64_t rounds_ = 0;
    double meeting_gap_ = 0.0;
};

template <class F>
concept BitSource = std::invocable<F&> && std::convertible_to<std::invoke_result_t<F&>, bool>;

struct TrialOptions
{
    std::int64_t round_cap = kDefaultRoundCap;
    Bounds bounds = Bounds::Checked;
};

/// Plays one full trial, drawing agent A's bit then agent B's bit every round.
template <BitSource Bits>
TrialOutcome simulate_trial(const Instance& instance, const Strategy& strategy, Bits&& bits,
                            const TrialOptions& options = {})
{
    TrialEngine engine(instance, strategy, options.bounds);
    const bool finite = !strategy.steps.is_unbounded();
    const std::int64_t limit = finite ? strategy.steps.count() : options.round_cap;

    TrialOutcome out;
    while (engine.rounds() < limit) {
        const bool a_bit = static_cast<bool>(bits());
        const bool b_bit = static_cast<bool>(bits());
        const MeetingPoint met = engine.play_round(a_bit, b_bit);
        if (met != MeetingPoint::None) {
            out.met_at = met;
            break;
        }
    }
    if (out.met_at == MeetingPoint::None) {
        if (finite) {
            engine.go_to_origin();
            out.met_at = MeetingPoint::Origin;
        } else {
            out.truncated = true;
        }
    }
    out.rounds_elapsed = engine.rounds();
    out.total_time = engine.agent_a().travelled;
    out.meeting_gap = engine.meeting_gap();
    return out;
}

/// SplitMix64: the per-trial bit stream.
class SplitMix64
{
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept;

    static std::uint64_t mix(std::uint64_t z) noexcept;

private:
    std::uint64_t state_;
};

/// Bit generator handing out one bit per call from 64-bit draws.
class RandomBits
{
public:
    explicit RandomBits(std::uint64_t seed) noexcept : rng_(seed) {}

    bool operator()() noexcept;

private:
    SplitMix64 rng_;
    std::uint64_t buffer_ = 0;
    int remaining_ = 0;
};

/// Seed of the stream for trial `index`: mix(seed + (index + 1) * 0x9E3779B97F4A7C15).
std::uint64_t trial_stream_seed(std::uint64_t seed, std::uint64_t index) noexcept;

struct SimulationSummary
{
    double mean_time = 0.0;
    double std_error = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    std::map<std::int64_t, std::int64_t> round_histogram;  ///< meeting round -> count
    std::int64_t first_darting = 0;
    std::int64_t second_darting = 0;
    std::int64_t origin = 0;
    std::int64_t truncated = 0;
    std::int64_t first_darting_round_one = 0;
    std::int64_t second_darting_round_one = 0;
    double max_meeting_gap = 0.0;
};

struct MonteCarloOptions
{
    unsigned threads = 1;
    std::int64_t round_cap = kDefaultRoundCap;
    Bounds bounds = Bounds::Checked;
};

/// Mean of simulate_trial over independent streams. The summary depends only on
/// (seed, trials): trials are reduced in fixed-size chunks combined in order.
SimulationSummary monte_carlo(const Instance& instance, const Strategy& strategy, std::int64_t trials,
                              std::uint64_t seed, const MonteCarloOptions& options = {});

/// Exact expected time of a finite strategy (k <= 12) by walking the probability
/// tree of bit outcomes through the planar simulator.
double exact_enumeration(const Instance& instance, const Strategy& strategy);

/// Longest possible trial, built from bit streams in which both agents always
/// dart the same way. Unbounded strategies use one measured round and the
/// self-similarity of later rounds; kInfinity if the round does not shrink.
double worst_case_time(const Instance& instance, const Strategy& strategy,
                       Bounds bounds = Bounds::Checked);

enum class TrajectoryMode
{
    Spiral,  ///< always dart counter-clockwise first
    Random,  ///< fair coin per round
};

struct TrajectoryPoint
{
    std::int64_t round = 0;
    double x = 0.0;
    double y = 0.0;
    double radius = 0.0;
    double length = 0.0;  ///< cumulative
};

struct TrajectoryOptions
{
    TrajectoryMode mode = TrajectoryMode::Spiral;
    std::uint64_t seed = 0;
    std::int64_t round_cap = kDefaultRoundCap;
    double radius_floor = 1e-15;  ///< stop once the disk radius drops below this
};

/// Path of a single agent whose rendezvous never happens (unbounded strategy).
std::vector<TrajectoryPoint> agent_trajectory(const Instance& instance, const Strategy& strategy,
                                              const TrajectoryOptions& options = {});

}  // namespace rendezvous
