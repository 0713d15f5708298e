#pragma once

#include <vector>

#include "recall/activesites.hpp"
#include "recall/bmatrix.hpp"
#include "recall/memcore.hpp"

namespace recall {

/// Knobs shared by the iterative trainers. eta is the learning constant,
/// max_passes_per_memory bounds one memory's row-correction loop,
/// max_epochs bounds full presentations of the memory list, and
/// wh_error_tolerance is the residual max-norm at which Widrow-Hoff stops.
struct LearningConfig {
    double eta = 0.1;
    int max_passes_per_memory = 50;
    int max_epochs = 100;
    double wh_error_tolerance = 0.01;
    QuantizerConfig quantizer;
};

void validate(const LearningConfig& cfg);

/// What an iterative trainer did: epochs actually run, whether every memory
/// ended up stored, the per-memory outcome of the final check, and (for
/// Widrow-Hoff) the final residual max-norm; other trainers leave it 0.
struct TrainReport {
    int epochs_run = 0;
    bool converged = false;
    std::vector<bool> per_memory_converged;
    double final_error = 0.0;
};

/// One-shot outer-product weights: T = sum of m * m^T over the set, diagonal
/// forced to zero. Works for both level sets.
SymmetricWeights hebbian_train(const MemorySet& memories);

struct WidrowHoffResult {
    SymmetricWeights weights;
    TrainReport report;
};

/// LMS iteration from W = 0: per memory x, W += eta * (x - W*x) * x^T,
/// epoch over the set in order, stopping when the worst residual max-norm
/// falls to wh_error_tolerance or max_epochs is reached. The returned
/// weights are (W + W^T)/2 with the diagonal zeroed so the triangular
/// generator can use them. Binary memories only.
WidrowHoffResult widrow_hoff_train(const MemorySet& memories, const LearningConfig& cfg);

struct DeltaMemoryResult {
    TriangularGenerator generator;
    bool converged = false;
};

/// Row-wise correction of one generator toward one memory. Each pass walks
/// the update order with the memory's true values as the prefix; a step
/// whose generated value misses the target adds
/// sgn(target - generated) * memory[pi[j]] * eta to every coupling in that
/// row. Passes stop as soon as free-running generation reproduces the
/// memory, or after max_passes_per_memory.
DeltaMemoryResult delta_train_memory(TriangularGenerator g, const LevelVector& memory,
                                     const LearningConfig& cfg);

struct DeltaTrainResult {
    /// One trained generator per memory, index-aligned with the MemorySet;
    /// all of them view the same underlying symmetric weight state through
    /// their own update orders.
    std::vector<TriangularGenerator> generators;
    TrainReport report;
};

/// Trains every memory against one shared weight store, starting from zero
/// weights. Epochs present the memories in order; after each epoch a
/// verification sweep checks free-running retrieval of every memory, and
/// training stops on an all-true sweep or at max_epochs.
DeltaTrainResult delta_train_all(const MemorySet& memories, const SiteAssignment& assignment,
                                 const LearningConfig& cfg);

}  // namespace recall
