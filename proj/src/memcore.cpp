#include "recall/memcore.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

namespace recall {

const char* to_string(Levels levels) {
    return levels == Levels::Binary ? "binary" : "quaternary";
}

bool is_level_value(int v, Levels levels) {
    if (levels == Levels::Binary) {
        return v == -1 || v == 1;
    }
    return v == -3 || v == -1 || v == 1 || v == 3;
}

std::uint64_t max_distinct_vectors(int n, Levels levels) {
    const int bits_per_component = levels == Levels::Binary ? 1 : 2;
    const long long bits = static_cast<long long>(n) * bits_per_component;
    if (bits >= 64) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return std::uint64_t{1} << bits;
}

LevelVector::LevelVector(std::vector<int> values, Levels levels)
    : values_(std::move(values)), levels_(levels) {
    if (values_.size() < 2) {
        throw std::invalid_argument("LevelVector: need at least 2 components");
    }
    for (int v : values_) {
        if (!is_level_value(v, levels_)) {
            throw std::invalid_argument("LevelVector: value outside the " +
                                        std::string(to_string(levels_)) + " level set");
        }
    }
}

MemorySet::MemorySet(std::vector<LevelVector> memories, std::optional<std::uint64_t> seed)
    : memories_(std::move(memories)), seed_(seed) {
    if (memories_.empty()) {
        throw std::invalid_argument("MemorySet: need at least one memory");
    }
    const int n = memories_.front().size();
    const Levels levels = memories_.front().levels();
    std::set<std::vector<int>> seen;
    for (const LevelVector& m : memories_) {
        if (m.size() != n || m.levels() != levels) {
            throw std::invalid_argument("MemorySet: memories must share size and level set");
        }
        if (!seen.insert(m.values()).second) {
            throw std::invalid_argument("MemorySet: memories must be pairwise distinct");
        }
    }
}

int sgn(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("sgn: non-finite input");
    }
    return x >= 0.0 ? 1 : -1;
}

int quantize(double x, double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("quantize: threshold must be positive and finite");
    }
    if (!std::isfinite(x)) {
        throw std::domain_error("quantize: non-finite input");
    }
    if (x < -t) return -3;
    if (x < 0.0) return -1;
    if (x < t) return 1;
    return 3;
}

MemorySet random_memory_set(int n, int M, Levels levels, std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument("random_memory_set: need n >= 2");
    }
    if (M < 1) {
        throw std::invalid_argument("random_memory_set: need M >= 1");
    }
    const std::uint64_t capacity = max_distinct_vectors(n, levels);
    if (static_cast<std::uint64_t>(M) > capacity) {
        throw capacity_error("random_memory_set: " + std::to_string(M) +
                             " memories requested but only " + std::to_string(capacity) +
                             " distinct " + to_string(levels) + " vectors of size " +
                             std::to_string(n) + " exist");
    }

    // One engine draw per component keeps the stream layout independent of
    // the platform's distribution internals.
    std::mt19937_64 rng(seed);
    std::set<std::vector<int>> seen;
    std::vector<LevelVector> memories;
    memories.reserve(static_cast<std::size_t>(M));
    while (static_cast<int>(memories.size()) < M) {
        std::vector<int> values(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            if (levels == Levels::Binary) {
                values[static_cast<std::size_t>(i)] = (rng() & 1u) ? 1 : -1;
            } else {
                values[static_cast<std::size_t>(i)] = 2 * static_cast<int>(rng() & 3u) - 3;
            }
        }
        if (seen.insert(values).second) {
            memories.emplace_back(std::move(values), levels);
        }
    }
    return MemorySet(std::move(memories), seed);
}

}  // namespace recall
