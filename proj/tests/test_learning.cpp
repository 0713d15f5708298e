#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "recall/learning.hpp"
#include "recall/memcore.hpp"
#include "support/properties.hpp"

using namespace recall;

TEST_CASE("learning configs validate their knobs") {
    LearningConfig cfg;
    CHECK_NOTHROW(validate(cfg));
    CHECK(cfg.eta == 0.1);
    CHECK(cfg.max_passes_per_memory == 50);
    CHECK(cfg.max_epochs == 100);
    CHECK(cfg.wh_error_tolerance == 0.01);
    CHECK(cfg.quantizer.theta == 1.0);

    LearningConfig bad = cfg;
    bad.eta = 0.0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = cfg;
    bad.max_passes_per_memory = 0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = cfg;
    bad.max_epochs = 0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = cfg;
    bad.wh_error_tolerance = -0.5;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = cfg;
    bad.quantizer.theta = 0.0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("outer-product weights match the hand computation") {
    const MemorySet one({LevelVector({1, 1, -1}, Levels::Binary)});
    const SymmetricWeights T = hebbian_train(one);
    CHECK(T.at(0, 1) == 1.0);
    CHECK(T.at(0, 2) == -1.0);
    CHECK(T.at(1, 2) == -1.0);
    for (int i = 0; i < 3; ++i) CHECK(T.at(i, i) == 0.0);

    const MemorySet two({LevelVector({1, 1, -1}, Levels::Binary),
                         LevelVector({1, -1, 1}, Levels::Binary)});
    const SymmetricWeights sum = hebbian_train(two);
    CHECK(sum.at(0, 1) == 0.0);
    CHECK(sum.at(0, 2) == 0.0);
    CHECK(sum.at(1, 2) == -2.0);
}

TEST_CASE("quaternary outer products scale with the level values") {
    const MemorySet one({LevelVector({3, -3}, Levels::Quaternary)});
    const SymmetricWeights T = hebbian_train(one);
    CHECK(T.at(0, 1) == -9.0);
    CHECK(T.at(1, 0) == -9.0);

    // Entry magnitudes are bounded by 9 per quaternary memory, 1 per binary.
    const MemorySet many = random_memory_set(6, 5, Levels::Quaternary, 3);
    const SymmetricWeights big = hebbian_train(many);
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            CHECK(big.at(i, j) <= 45.0);
            CHECK(big.at(i, j) >= -45.0);
        }
    }
}

TEST_CASE("lms stores a single memory in one shot") {
    const MemorySet one({LevelVector({1, -1}, Levels::Binary)});
    LearningConfig cfg;
    cfg.eta = 0.5;
    const WidrowHoffResult wh = widrow_hoff_train(one, cfg);
    CHECK(wh.weights.at(0, 1) == -0.5);
    CHECK(wh.weights.at(0, 0) == 0.0);
    CHECK(wh.report.epochs_run == 1);
    CHECK(wh.report.converged);
    CHECK(wh.report.final_error == 0.0);
    CHECK(wh.report.per_memory_converged == std::vector<bool>{true});
}

TEST_CASE("lms stores an orthogonal pair in one epoch") {
    const MemorySet pair({LevelVector({1, 1, 1, 1}, Levels::Binary),
                          LevelVector({1, -1, 1, -1}, Levels::Binary)});
    LearningConfig cfg;
    cfg.eta = 0.25;
    const WidrowHoffResult wh = widrow_hoff_train(pair, cfg);
    CHECK(wh.report.epochs_run == 1);
    CHECK(wh.report.converged);
    CHECK(wh.report.final_error == 0.0);
}

TEST_CASE("lms residuals shrink with the epochs") {
    const MemorySet memories = random_memory_set(8, 3, Levels::Binary, 9);
    LearningConfig strict;
    strict.wh_error_tolerance = 1e-6;
    strict.max_epochs = 200;
    const WidrowHoffResult wh = widrow_hoff_train(memories, strict);
    CHECK(wh.report.final_error <= 1e-6);
    CHECK(wh.report.converged);

    LearningConfig tiny = strict;
    tiny.max_epochs = 1;
    const WidrowHoffResult one = widrow_hoff_train(memories, tiny);
    CHECK(one.report.epochs_run == 1);
    CHECK(one.report.final_error >= wh.report.final_error);
}

TEST_CASE("lms accepts binary memories only") {
    const MemorySet quaternary({LevelVector({3, -1}, Levels::Quaternary)});
    LearningConfig cfg;
    CHECK_THROWS_AS(widrow_hoff_train(quaternary, cfg), std::invalid_argument);
}

TEST_CASE("lms one-shot fixed point at eta = 1/n") {
    CHECK(props::wh_one_shot(30) == "");
}

TEST_CASE("row corrections store a two-neuron memory in one pass") {
    // First pass: sgn(0) = +1 misses the -1 target, so the coupling drops to
    // -0.1 and free-running generation already succeeds.
    const UpdateOrder order({0, 1}, 1);
    const LevelVector memory({1, -1}, Levels::Binary);
    LearningConfig cfg;
    const DeltaMemoryResult r =
        delta_train_memory(TriangularGenerator::zeros(order), memory, cfg);
    CHECK(r.converged);
    CHECK(r.generator.lower()(1, 0) == -0.1);
}

TEST_CASE("quaternary corrections scale with the input level") {
    // Target -3 against generated +1: each pass adds sgn(-3-1)*3*0.1 = -0.3.
    // One pass leaves x = -0.9 in the -1 band; the second reaches -1.8 <= -t.
    const UpdateOrder order({0, 1}, 1);
    const LevelVector memory({3, -3}, Levels::Quaternary);
    LearningConfig cfg;
    cfg.quantizer.levels = Levels::Quaternary;

    LearningConfig capped = cfg;
    capped.max_passes_per_memory = 1;
    const DeltaMemoryResult one =
        delta_train_memory(TriangularGenerator::zeros(order), memory, capped);
    CHECK_FALSE(one.converged);
    CHECK(one.generator.lower()(1, 0) == -0.1 * 3.0);

    const DeltaMemoryResult full =
        delta_train_memory(TriangularGenerator::zeros(order), memory, cfg);
    CHECK(full.converged);
    CHECK(full.generator.lower()(1, 0) == doctest::Approx(-0.6));
}

TEST_CASE("a stored memory is never touched again") {
    CHECK(props::delta_noop(150) == "");
}

TEST_CASE("convergence flags agree with free-running retrieval") {
    CHECK(props::delta_self_consistency(150) == "");
}

TEST_CASE("level sets must match between memory and quantizer") {
    const UpdateOrder order({0, 1}, 1);
    const LevelVector quaternary({3, -3}, Levels::Quaternary);
    LearningConfig cfg;
    CHECK_THROWS_AS(delta_train_memory(TriangularGenerator::zeros(order), quaternary, cfg),
                    std::invalid_argument);
}

TEST_CASE("shared training keeps every generator view consistent") {
    const MemorySet memories = random_memory_set(6, 3, Levels::Binary, 21);
    const SiteAssignment assignment = assign_sites(memories, hebbian_train(memories), 1);
    LearningConfig cfg;
    const DeltaTrainResult result = delta_train_all(memories, assignment, cfg);
    REQUIRE(static_cast<int>(result.generators.size()) == 3);

    // Every generator views one shared symmetric store, so any two views must
    // agree wherever they couple the same pair of neurons.
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            const TriangularGenerator& ga = result.generators[static_cast<std::size_t>(a)];
            const TriangularGenerator& gb = result.generators[static_cast<std::size_t>(b)];
            for (int p = 1; p < 6; ++p) {
                for (int q = 0; q < p; ++q) {
                    const int i = ga.order().at(p);
                    const int j = ga.order().at(q);
                    // Find the same natural pair in gb's coordinates.
                    int pb = -1;
                    int qb = -1;
                    for (int k = 0; k < 6; ++k) {
                        if (gb.order().at(k) == i) pb = k;
                        if (gb.order().at(k) == j) qb = k;
                    }
                    const double in_a = ga.lower()(p, q);
                    const double in_b =
                        pb > qb ? gb.lower()(pb, qb) : gb.lower()(qb, pb);
                    CHECK(in_a == in_b);
                }
            }
        }
    }
}

TEST_CASE("binary corrections are invariant under doubling eta") {
    // Doubling eta scales every weight exactly and flips no sign, so the
    // whole training trajectory and the outcome coincide.
    const MemorySet memories = random_memory_set(8, 5, Levels::Binary, 33);
    const SiteAssignment assignment = assign_sites(memories, hebbian_train(memories), 1);
    LearningConfig base;
    LearningConfig doubled;
    doubled.eta = 0.2;
    const DeltaTrainResult r1 = delta_train_all(memories, assignment, base);
    const DeltaTrainResult r2 = delta_train_all(memories, assignment, doubled);
    CHECK(r1.report.per_memory_converged == r2.report.per_memory_converged);
    CHECK(r1.report.epochs_run == r2.report.epochs_run);
    for (int i = 0; i < 5; ++i) {
        const Matrix& b1 = r1.generators[static_cast<std::size_t>(i)].lower();
        const Matrix& b2 = r2.generators[static_cast<std::size_t>(i)].lower();
        for (int p = 0; p < 8; ++p) {
            for (int q = 0; q < 8; ++q) {
                CHECK(2.0 * b1(p, q) == b2(p, q));
            }
        }
    }
}

TEST_CASE("shared training needs a full assignment") {
    const MemorySet memories = random_memory_set(6, 3, Levels::Binary, 21);
    const SiteAssignment short_one(1, {{0}, {1}});
    LearningConfig cfg;
    CHECK_THROWS_AS(delta_train_all(memories, short_one, cfg), std::invalid_argument);
}

TEST_CASE("the training report counts epochs faithfully") {
    const MemorySet memories = random_memory_set(4, 2, Levels::Binary, 2);
    const SiteAssignment assignment = assign_sites(memories, hebbian_train(memories), 1);
    LearningConfig cfg;
    const DeltaTrainResult result = delta_train_all(memories, assignment, cfg);
    CHECK(result.report.epochs_run >= 1);
    CHECK(result.report.epochs_run <= cfg.max_epochs);
    if (result.report.converged) {
        for (const bool ok : result.report.per_memory_converged) CHECK(ok);
    }
}
