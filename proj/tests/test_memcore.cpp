#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "recall/errors.hpp"
#include "recall/memcore.hpp"
#include "support/properties.hpp"

using namespace recall;

TEST_CASE("sgn splits at zero with the positive tie-break") {
    CHECK(sgn(5.0) == 1);
    CHECK(sgn(-5.0) == -1);
    CHECK(sgn(0.0) == 1);
    CHECK(sgn(-0.0) == 1);
    CHECK(sgn(1e-300) == 1);
    CHECK(sgn(-1e-300) == -1);
}

TEST_CASE("sgn rejects non-finite input") {
    CHECK_THROWS_AS(sgn(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(sgn(std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(sgn(-std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("quantizer maps the four bands with exact boundaries") {
    CHECK(quantize(-2.5, 2.0) == -3);
    CHECK(quantize(-2.0, 2.0) == -1);
    CHECK(quantize(-0.1, 2.0) == -1);
    CHECK(quantize(0.0, 2.0) == 1);
    CHECK(quantize(1.9, 2.0) == 1);
    CHECK(quantize(2.0, 2.0) == 3);
    CHECK(quantize(7.5, 1.0) == 3);
}

TEST_CASE("quantizer rejects bad thresholds and non-finite input") {
    CHECK_THROWS_AS(quantize(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(quantize(1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(quantize(std::numeric_limits<double>::quiet_NaN(), 1.0), std::domain_error);
}

TEST_CASE("quantizer is monotone on random input") {
    CHECK(props::quantizer_monotone(2000) == "");
}

TEST_CASE("level membership") {
    CHECK(is_level_value(1, Levels::Binary));
    CHECK(is_level_value(-1, Levels::Binary));
    CHECK_FALSE(is_level_value(3, Levels::Binary));
    CHECK_FALSE(is_level_value(0, Levels::Binary));
    for (const int v : {-3, -1, 1, 3}) CHECK(is_level_value(v, Levels::Quaternary));
    CHECK_FALSE(is_level_value(2, Levels::Quaternary));
    CHECK_FALSE(is_level_value(0, Levels::Quaternary));
}

TEST_CASE("distinct vector counts, with saturation") {
    CHECK(max_distinct_vectors(2, Levels::Binary) == 4);
    CHECK(max_distinct_vectors(10, Levels::Binary) == 1024);
    CHECK(max_distinct_vectors(2, Levels::Quaternary) == 16);
    CHECK(max_distinct_vectors(10, Levels::Quaternary) == 1048576);
    CHECK(max_distinct_vectors(63, Levels::Binary) == (std::uint64_t{1} << 63));
    CHECK(max_distinct_vectors(64, Levels::Binary) == std::numeric_limits<std::uint64_t>::max());
    CHECK(max_distinct_vectors(31, Levels::Quaternary) == (std::uint64_t{1} << 62));
    CHECK(max_distinct_vectors(32, Levels::Quaternary) ==
          std::numeric_limits<std::uint64_t>::max());
    CHECK(max_distinct_vectors(100, Levels::Quaternary) ==
          std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("level vectors validate their values") {
    CHECK_NOTHROW(LevelVector({1, -1, 1}, Levels::Binary));
    CHECK_NOTHROW(LevelVector({3, -1, 1, -3}, Levels::Quaternary));
    CHECK_THROWS_AS(LevelVector({1, 0, 1}, Levels::Binary), std::invalid_argument);
    CHECK_THROWS_AS(LevelVector({1, 3, 1}, Levels::Binary), std::invalid_argument);
    CHECK_THROWS_AS(LevelVector({2, -1}, Levels::Quaternary), std::invalid_argument);
    CHECK_THROWS_AS(LevelVector({1}, Levels::Binary), std::invalid_argument);
    CHECK_THROWS_AS(LevelVector({}, Levels::Binary), std::invalid_argument);
}

TEST_CASE("memory sets enforce shape and distinctness") {
    const LevelVector a({1, -1, 1}, Levels::Binary);
    const LevelVector b({-1, -1, 1}, Levels::Binary);
    const MemorySet set({a, b});
    CHECK(set.count() == 2);
    CHECK(set.neurons() == 3);
    CHECK(set.levels() == Levels::Binary);
    CHECK_FALSE(set.seed().has_value());

    CHECK_THROWS_AS(MemorySet({}), std::invalid_argument);
    CHECK_THROWS_AS(MemorySet({a, a}), std::invalid_argument);
    CHECK_THROWS_AS(MemorySet({a, LevelVector({1, -1}, Levels::Binary)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MemorySet({a, LevelVector({3, -1, 1}, Levels::Quaternary)}),
                    std::invalid_argument);
}

TEST_CASE("random memory sets are deterministic in the seed") {
    const MemorySet first = random_memory_set(16, 8, Levels::Binary, 42);
    const MemorySet second = random_memory_set(16, 8, Levels::Binary, 42);
    CHECK(first.memories() == second.memories());
    CHECK(first.seed() == 42);

    const MemorySet other = random_memory_set(16, 8, Levels::Binary, 43);
    CHECK_FALSE(first.memories() == other.memories());
}

TEST_CASE("random memory sets stay inside the level set and stay distinct") {
    for (const Levels levels : {Levels::Binary, Levels::Quaternary}) {
        const MemorySet set = random_memory_set(6, 12, levels, 7);
        std::set<std::vector<int>> seen;
        for (const LevelVector& m : set.memories()) {
            for (int i = 0; i < m.size(); ++i) CHECK(is_level_value(m[i], levels));
            CHECK(seen.insert(m.values()).second);
        }
    }
}

TEST_CASE("a full-capacity draw enumerates every vector") {
    const MemorySet set = random_memory_set(2, 4, Levels::Binary, 11);
    std::set<std::vector<int>> seen;
    for (const LevelVector& m : set.memories()) seen.insert(m.values());
    CHECK(seen.size() == 4);
}

TEST_CASE("overfull draws raise the capacity error") {
    CHECK_THROWS_AS(random_memory_set(2, 5, Levels::Binary, 1), capacity_error);
    CHECK_THROWS_AS(random_memory_set(2, 17, Levels::Quaternary, 1), capacity_error);
    CHECK_THROWS_AS(random_memory_set(3, 0, Levels::Binary, 1), std::invalid_argument);
}
