#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recall/errors.hpp"

namespace recall {

/// Neuron level sets supported by the library: two-level {-1,+1} and
/// four-level {-3,-1,+1,+3} units.
enum class Levels { Binary, Quaternary };

const char* to_string(Levels levels);

/// True iff v belongs to the given level set.
bool is_level_value(int v, Levels levels);

/// Number of distinct n-component vectors over the level set, saturated at
/// UINT64_MAX when it does not fit in 64 bits.
std::uint64_t max_distinct_vectors(int n, Levels levels);

/// An n-component state vector over a level set. Memories, fragments and
/// network outputs are all LevelVectors. Immutable after construction.
class LevelVector {
public:
    LevelVector(std::vector<int> values, Levels levels);

    const std::vector<int>& values() const { return values_; }
    Levels levels() const { return levels_; }
    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

    bool operator==(const LevelVector&) const = default;

private:
    std::vector<int> values_;
    Levels levels_;
};

/// An ordered list of pairwise-distinct memories sharing one size and level
/// set. The seed is kept when the set was generated rather than given.
class MemorySet {
public:
    explicit MemorySet(std::vector<LevelVector> memories,
                       std::optional<std::uint64_t> seed = std::nullopt);

    const std::vector<LevelVector>& memories() const { return memories_; }
    const LevelVector& memory(int i) const { return memories_[static_cast<std::size_t>(i)]; }
    std::optional<std::uint64_t> seed() const { return seed_; }

    int count() const { return static_cast<int>(memories_.size()); }
    int neurons() const { return memories_.front().size(); }
    Levels levels() const { return memories_.front().levels(); }

private:
    std::vector<LevelVector> memories_;
    std::optional<std::uint64_t> seed_;
};

/// How generated activations are mapped back onto the level set. Binary mode
/// uses the sign function and ignores theta. Quaternary mode uses the
/// two-threshold quantizer with a per-step threshold t = theta * k, where k
/// is the number of already-known components at that generation step.
struct QuantizerConfig {
    Levels levels = Levels::Binary;
    double theta = 1.0;
};

/// Sign with a fixed tie-break: +1 for x >= 0, -1 otherwise.
/// Throws std::domain_error for non-finite x.
int sgn(double x);

/// Four-level quantizer with threshold t > 0:
///   x < -t -> -3,  -t <= x < 0 -> -1,  0 <= x < t -> +1,  x >= t -> +3.
/// Monotone in x. Throws std::invalid_argument for t <= 0 and
/// std::domain_error for non-finite x.
int quantize(double x, double t);

/// Draws M pairwise-distinct vectors with components uniform over the level
/// set. Fully determined by (n, M, levels, seed). Throws capacity_error when
/// M exceeds the number of distinct vectors.
MemorySet random_memory_set(int n, int M, Levels levels, std::uint64_t seed);

}  // namespace recall
