#include "recall/harness.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "recall/bmatrix.hpp"

namespace recall {

const char* to_string(Rule rule) {
    switch (rule) {
        case Rule::Hebbian: return "hebbian";
        case Rule::WidrowHoff: return "widrow-hoff";
        case Rule::Delta: return "delta";
    }
    return "unknown";
}

void validate(const ExperimentConfig& cfg) {
    if (cfg.neurons < 2) {
        throw std::invalid_argument("ExperimentConfig: need at least 2 neurons");
    }
    if (cfg.sites_per_memory < 1 || cfg.sites_per_memory >= cfg.neurons) {
        throw std::invalid_argument("ExperimentConfig: need 1 <= sites per memory < neurons");
    }
    if (cfg.trials < 1) {
        throw std::invalid_argument("ExperimentConfig: need at least 1 trial");
    }
    if (cfg.min_memories < 1 || cfg.min_memories > cfg.max_memories) {
        throw std::invalid_argument("ExperimentConfig: need 1 <= min_memories <= max_memories");
    }
    validate(cfg.learning);
    if (cfg.learning.quantizer.levels != cfg.levels) {
        throw std::invalid_argument("ExperimentConfig: quantizer level set must match the experiment");
    }
    if (cfg.rule == Rule::WidrowHoff && cfg.levels != Levels::Binary) {
        throw std::invalid_argument("ExperimentConfig: the widrow-hoff rule supports binary only");
    }
    if (const auto reason = infeasible_reason(cfg, cfg.min_memories)) {
        throw std::invalid_argument("ExperimentConfig: min_memories infeasible: " + *reason);
    }
}

std::optional<std::string> infeasible_reason(const ExperimentConfig& cfg, int M) {
    const std::uint64_t site_cap = max_site_assignments(cfg.neurons, cfg.sites_per_memory);
    if (static_cast<std::uint64_t>(M) > site_cap) {
        return "M=" + std::to_string(M) + " exceeds the " + std::to_string(site_cap) +
               " distinct site lists at n=" + std::to_string(cfg.neurons) +
               ", s=" + std::to_string(cfg.sites_per_memory);
    }
    const std::uint64_t vector_cap = max_distinct_vectors(cfg.neurons, cfg.levels);
    if (static_cast<std::uint64_t>(M) > vector_cap) {
        return "M=" + std::to_string(M) + " exceeds the " + std::to_string(vector_cap) +
               " distinct " + std::string(to_string(cfg.levels)) + " vectors at n=" +
               std::to_string(cfg.neurons);
    }
    return std::nullopt;
}

namespace {

double quantize_csv(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(buf, buf + sizeof buf, out);
    if (ec != std::errc()) {
        throw std::invalid_argument("CapacityCurve: value not representable in the CSV format");
    }
    (void)ptr;
    return out;
}

}  // namespace

CapacityCurve::CapacityCurve(std::vector<CapacityPoint> points, std::vector<std::string> warnings)
    : points_(std::move(points)), warnings_(std::move(warnings)) {
    if (points_.empty()) {
        throw std::invalid_argument("CapacityCurve: need at least one point");
    }
    int last_trained = 0;
    for (CapacityPoint& p : points_) {
        if (p.trained <= last_trained) {
            throw std::invalid_argument("CapacityCurve: points must have increasing trained counts >= 1");
        }
        last_trained = p.trained;
        if (p.trials < 1) {
            throw std::invalid_argument("CapacityCurve: every point needs at least one trial");
        }
        if (!std::isfinite(p.mean_retrieved) || !std::isfinite(p.std_retrieved)) {
            throw std::invalid_argument("CapacityCurve: non-finite statistics");
        }
        p.mean_retrieved = quantize_csv(p.mean_retrieved);
        p.std_retrieved = quantize_csv(p.std_retrieved);
        if (p.mean_retrieved < 0.0 || p.mean_retrieved > p.trained || p.std_retrieved < 0.0) {
            throw std::invalid_argument("CapacityCurve: statistics out of range");
        }
    }
}

TrialOutcome run_trial_detailed(const ExperimentConfig& cfg, int M, int trial_index) {
    validate(cfg);
    if (trial_index < 0) {
        throw std::invalid_argument("run_trial: trial_index must be >= 0");
    }
    const std::uint64_t seed = cfg.base_seed + static_cast<std::uint64_t>(trial_index);
    MemorySet memories = random_memory_set(cfg.neurons, M, cfg.levels, seed);

    SymmetricWeights scored = cfg.rule == Rule::WidrowHoff
                                  ? widrow_hoff_train(memories, cfg.learning).weights
                                  : hebbian_train(memories);
    SiteAssignment assignment = assign_sites(memories, scored, cfg.sites_per_memory);

    std::vector<UpdateOrder> orders;
    orders.reserve(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) {
        orders.push_back(update_order_from_sites(assignment.sites_for(i), cfg.neurons));
    }

    std::vector<bool> retrieved(static_cast<std::size_t>(M), false);
    if (cfg.rule == Rule::Delta) {
        const DeltaTrainResult trained = delta_train_all(memories, assignment, cfg.learning);
        retrieved = trained.report.per_memory_converged;
    } else {
        for (int i = 0; i < M; ++i) {
            const TriangularGenerator g = split_lower(scored, orders[static_cast<std::size_t>(i)]);
            retrieved[static_cast<std::size_t>(i)] =
                retrieves(g, memories.memory(i), assignment.sites_for(i), cfg.learning.quantizer);
        }
    }

    int count = 0;
    for (bool ok : retrieved) {
        count += ok ? 1 : 0;
    }
    return TrialOutcome{std::move(memories), std::move(assignment), std::move(orders),
                        std::move(retrieved), count};
}

int run_trial(const ExperimentConfig& cfg, int M, int trial_index) {
    return run_trial_detailed(cfg, M, trial_index).retrieved_count;
}

CapacityCurve run_capacity_sweep(const ExperimentConfig& cfg) {
    validate(cfg);
    std::vector<CapacityPoint> points;
    std::vector<std::string> warnings;
    for (int M = cfg.min_memories; M <= cfg.max_memories; ++M) {
        if (const auto reason = infeasible_reason(cfg, M)) {
            warnings.push_back("sweep truncated: " + *reason);
            break;
        }
        double sum = 0.0;
        std::vector<int> counts(static_cast<std::size_t>(cfg.trials));
        for (int t = 0; t < cfg.trials; ++t) {
            counts[static_cast<std::size_t>(t)] = run_trial(cfg, M, t);
            sum += counts[static_cast<std::size_t>(t)];
        }
        const double mean = sum / cfg.trials;
        double var = 0.0;
        for (int c : counts) {
            var += (c - mean) * (c - mean);
        }
        points.push_back(CapacityPoint{M, mean, std::sqrt(var / cfg.trials), cfg.trials});
    }
    return CapacityCurve(std::move(points), std::move(warnings));
}

void write_curve(const CapacityCurve& curve, std::ostream& out) {
    out << "trained,mean_retrieved,std_retrieved,trials\n";
    for (const CapacityPoint& p : curve.points()) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%d\n", p.trained, p.mean_retrieved,
                      p.std_retrieved, p.trials);
        out << buf;
    }
    if (!out) {
        throw std::runtime_error("write_curve: stream write failed");
    }
}

void write_curve_file(const CapacityCurve& curve, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_curve_file: cannot open " + path + " for writing");
    }
    write_curve(curve, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write_curve_file: failed writing " + path);
    }
}

namespace {

[[noreturn]] void malformed(std::size_t line_number, const std::string& line) {
    throw std::runtime_error("read_curve: malformed capacity CSV at line " +
                             std::to_string(line_number) + ": " + line);
}

}  // namespace

CapacityCurve read_curve(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "trained,mean_retrieved,std_retrieved,trials") {
        throw std::runtime_error("read_curve: missing capacity CSV header");
    }
    std::vector<CapacityPoint> points;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        const char* p = line.data();
        const char* end = line.data() + line.size();
        CapacityPoint point;

        auto parse_int = [&](int& value) {
            const auto [next, ec] = std::from_chars(p, end, value);
            if (ec != std::errc()) {
                malformed(line_number, line);
            }
            p = next;
        };
        auto parse_real = [&](double& value) {
            const auto [next, ec] = std::from_chars(p, end, value);
            if (ec != std::errc()) {
                malformed(line_number, line);
            }
            p = next;
        };
        auto expect_comma = [&] {
            if (p == end || *p != ',') {
                malformed(line_number, line);
            }
            ++p;
        };

        parse_int(point.trained);
        expect_comma();
        parse_real(point.mean_retrieved);
        expect_comma();
        parse_real(point.std_retrieved);
        expect_comma();
        parse_int(point.trials);
        if (p != end) {
            malformed(line_number, line);
        }
        points.push_back(point);
    }
    try {
        return CapacityCurve(std::move(points));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("read_curve: " + std::string(e.what()));
    }
}

CapacityCurve read_curve_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("read_curve_file: cannot open " + path);
    }
    return read_curve(in);
}

}  // namespace recall
