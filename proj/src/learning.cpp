#include "recall/learning.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace recall {

void validate(const LearningConfig& cfg) {
    if (!(cfg.eta > 0.0) || !std::isfinite(cfg.eta)) {
        throw std::invalid_argument("LearningConfig: eta must be positive and finite");
    }
    if (cfg.max_passes_per_memory < 1) {
        throw std::invalid_argument("LearningConfig: max_passes_per_memory must be >= 1");
    }
    if (cfg.max_epochs < 1) {
        throw std::invalid_argument("LearningConfig: max_epochs must be >= 1");
    }
    if (!(cfg.wh_error_tolerance >= 0.0) || !std::isfinite(cfg.wh_error_tolerance)) {
        throw std::invalid_argument("LearningConfig: wh_error_tolerance must be >= 0 and finite");
    }
    if (!(cfg.quantizer.theta > 0.0) || !std::isfinite(cfg.quantizer.theta)) {
        throw std::invalid_argument("LearningConfig: quantizer theta must be positive and finite");
    }
}

SymmetricWeights hebbian_train(const MemorySet& memories) {
    const int n = memories.neurons();
    Matrix T(n, n, 0.0);
    for (const LevelVector& m : memories.memories()) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i != j) {
                    T(i, j) += m[i] * m[j];
                }
            }
        }
    }
    return SymmetricWeights(std::move(T));
}

namespace {

double worst_residual(const Matrix& W, const MemorySet& memories, std::vector<double>* per_memory) {
    const int n = memories.neurons();
    double worst = 0.0;
    if (per_memory != nullptr) {
        per_memory->clear();
    }
    for (const LevelVector& m : memories.memories()) {
        double mem_worst = 0.0;
        for (int i = 0; i < n; ++i) {
            double wx = 0.0;
            for (int j = 0; j < n; ++j) {
                wx += W(i, j) * m[j];
            }
            mem_worst = std::max(mem_worst, std::abs(m[i] - wx));
        }
        if (per_memory != nullptr) {
            per_memory->push_back(mem_worst);
        }
        worst = std::max(worst, mem_worst);
    }
    return worst;
}

}  // namespace

WidrowHoffResult widrow_hoff_train(const MemorySet& memories, const LearningConfig& cfg) {
    validate(cfg);
    if (memories.levels() != Levels::Binary) {
        throw std::invalid_argument("widrow_hoff_train: binary memories only");
    }
    const int n = memories.neurons();
    Matrix W(n, n, 0.0);
    std::vector<double> residual(static_cast<std::size_t>(n));

    TrainReport report;
    double err = 0.0;
    for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
        for (const LevelVector& m : memories.memories()) {
            for (int i = 0; i < n; ++i) {
                double wx = 0.0;
                for (int j = 0; j < n; ++j) {
                    wx += W(i, j) * m[j];
                }
                residual[static_cast<std::size_t>(i)] = m[i] - wx;
            }
            for (int i = 0; i < n; ++i) {
                const double step = cfg.eta * residual[static_cast<std::size_t>(i)];
                for (int j = 0; j < n; ++j) {
                    W(i, j) += step * m[j];
                }
            }
        }
        report.epochs_run = epoch;
        err = worst_residual(W, memories, nullptr);
        if (err <= cfg.wh_error_tolerance) {
            break;
        }
    }

    std::vector<double> per_memory_error;
    report.final_error = worst_residual(W, memories, &per_memory_error);
    report.converged = report.final_error <= cfg.wh_error_tolerance;
    report.per_memory_converged.reserve(per_memory_error.size());
    for (double e : per_memory_error) {
        report.per_memory_converged.push_back(e <= cfg.wh_error_tolerance);
    }

    Matrix T(n, n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            const double v = (W(i, j) + W(j, i)) / 2.0;
            T(i, j) = v;
            T(j, i) = v;
        }
    }
    return WidrowHoffResult{SymmetricWeights(std::move(T)), std::move(report)};
}

DeltaMemoryResult delta_train_memory(TriangularGenerator g, const LevelVector& memory,
                                     const LearningConfig& cfg) {
    validate(cfg);
    if (memory.levels() != cfg.quantizer.levels) {
        throw std::invalid_argument("delta_train_memory: memory level set does not match the quantizer");
    }
    if (memory.size() != g.size()) {
        throw std::invalid_argument("delta_train_memory: memory size does not match the generator");
    }
    const int n = g.size();
    const int s = g.order().num_start_sites();
    const std::vector<int> sites = g.order().start_sites();
    const bool binary = cfg.quantizer.levels == Levels::Binary;

    std::vector<int> target(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        target[static_cast<std::size_t>(p)] = memory[g.order().at(p)];
    }

    for (int pass = 0; pass < cfg.max_passes_per_memory; ++pass) {
        int updates = 0;
        for (int p = s; p < n; ++p) {
            const double* row = g.lower().row(p);
            double x = 0.0;
            for (int j = 0; j < p; ++j) {
                x += row[j] * target[static_cast<std::size_t>(j)];
            }
            const int v = binary ? sgn(x) : quantize(x, cfg.quantizer.theta * p);
            const int t = target[static_cast<std::size_t>(p)];
            if (v != t) {
                const double step = (t > v ? 1.0 : -1.0) * cfg.eta;
                for (int j = 0; j < p; ++j) {
                    g.adjust(p, j, step * target[static_cast<std::size_t>(j)]);
                }
                ++updates;
            }
        }
        // A pass with no corrections means every step already reproduces the
        // memory, which is exactly free-running success.
        if (updates == 0 || retrieves(g, memory, sites, cfg.quantizer)) {
            return DeltaMemoryResult{std::move(g), true};
        }
    }
    return DeltaMemoryResult{std::move(g), false};
}

DeltaTrainResult delta_train_all(const MemorySet& memories, const SiteAssignment& assignment,
                                 const LearningConfig& cfg) {
    validate(cfg);
    if (memories.levels() != cfg.quantizer.levels) {
        throw std::invalid_argument("delta_train_all: memory level set does not match the quantizer");
    }
    const int M = memories.count();
    if (assignment.count() != M) {
        throw std::invalid_argument("delta_train_all: assignment does not cover every memory");
    }
    const int n = memories.neurons();

    std::vector<UpdateOrder> orders;
    orders.reserve(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) {
        orders.push_back(update_order_from_sites(assignment.sites_for(i), n));
    }

    // One shared symmetric zero-diagonal store; every memory's generator is
    // its strictly-lower view in that memory's own update order.
    Matrix shared(n, n, 0.0);
    auto view = [&](const UpdateOrder& order) {
        Matrix B(n, n, 0.0);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < a; ++b) {
                B(a, b) = shared(order.at(a), order.at(b));
            }
        }
        return TriangularGenerator(order, std::move(B));
    };
    auto write_back = [&](const TriangularGenerator& g) {
        const UpdateOrder& order = g.order();
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < a; ++b) {
                const double v = g.lower()(a, b);
                shared(order.at(a), order.at(b)) = v;
                shared(order.at(b), order.at(a)) = v;
            }
        }
    };

    TrainReport report;
    report.per_memory_converged.assign(static_cast<std::size_t>(M), false);
    for (int epoch = 1; epoch <= cfg.max_epochs; ++epoch) {
        for (int i = 0; i < M; ++i) {
            DeltaMemoryResult r =
                delta_train_memory(view(orders[static_cast<std::size_t>(i)]), memories.memory(i), cfg);
            write_back(r.generator);
        }
        report.epochs_run = epoch;
        bool all = true;
        for (int i = 0; i < M; ++i) {
            const bool ok = retrieves(view(orders[static_cast<std::size_t>(i)]), memories.memory(i),
                                      assignment.sites_for(i), cfg.quantizer);
            report.per_memory_converged[static_cast<std::size_t>(i)] = ok;
            all = all && ok;
        }
        if (all) {
            break;
        }
    }
    report.converged = true;
    for (bool ok : report.per_memory_converged) {
        report.converged = report.converged && ok;
    }

    DeltaTrainResult result;
    result.generators.reserve(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) {
        result.generators.push_back(view(orders[static_cast<std::size_t>(i)]));
    }
    result.report = std::move(report);
    return result;
}

}  // namespace recall
