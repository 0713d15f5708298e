#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "recall/activesites.hpp"
#include "recall/learning.hpp"
#include "recall/memcore.hpp"

namespace recall {

enum class Rule { Hebbian, WidrowHoff, Delta };

const char* to_string(Rule rule);

/// Everything one capacity experiment depends on. A sweep is a pure
/// function of this struct: trial t of any M uses seed base_seed + t.
struct ExperimentConfig {
    int neurons = 16;
    Levels levels = Levels::Binary;
    Rule rule = Rule::Delta;
    int sites_per_memory = 1;
    LearningConfig learning;
    int trials = 50;
    std::uint64_t base_seed = 42;
    int min_memories = 1;
    int max_memories = 16;
};

void validate(const ExperimentConfig& cfg);

/// Why training M memories under cfg cannot run at all (site lists or
/// distinct vectors exhausted), or nullopt when it can.
std::optional<std::string> infeasible_reason(const ExperimentConfig& cfg, int M);

struct CapacityPoint {
    int trained = 0;
    double mean_retrieved = 0.0;
    double std_retrieved = 0.0;
    int trials = 0;

    bool operator==(const CapacityPoint&) const = default;
};

/// Sweep result: one point per trained-memory count M, ordered by M, plus
/// any warnings recorded while sweeping (e.g. truncation at the site cap).
/// Means and deviations are stored at the CSV's six-decimal resolution so
/// that writing and rereading a curve reproduces it exactly.
class CapacityCurve {
public:
    explicit CapacityCurve(std::vector<CapacityPoint> points,
                           std::vector<std::string> warnings = {});

    const std::vector<CapacityPoint>& points() const { return points_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    std::vector<CapacityPoint> points_;
    std::vector<std::string> warnings_;
};

/// One trained network with everything needed to inspect it.
struct TrialOutcome {
    MemorySet memories;
    SiteAssignment assignment;
    std::vector<UpdateOrder> orders;
    std::vector<bool> retrieved;
    int retrieved_count = 0;
};

/// Runs one seeded trial: draw M memories, train per cfg.rule, assign sites,
/// and test exact retrieval of every memory from its own sites.
TrialOutcome run_trial_detailed(const ExperimentConfig& cfg, int M, int trial_index);

int run_trial(const ExperimentConfig& cfg, int M, int trial_index);

/// Sweeps M over cfg's memory range, averaging retrieved counts over
/// cfg.trials trials per M. An M past the feasibility cap truncates the
/// sweep with a recorded warning instead of discarding completed points.
CapacityCurve run_capacity_sweep(const ExperimentConfig& cfg);

/// CSV: header `trained,mean_retrieved,std_retrieved,trials`, one row per
/// point, six fractional digits on the real columns, final newline.
void write_curve(const CapacityCurve& curve, std::ostream& out);
void write_curve_file(const CapacityCurve& curve, const std::string& path);
CapacityCurve read_curve(std::istream& in);
CapacityCurve read_curve_file(const std::string& path);

}  // namespace recall
