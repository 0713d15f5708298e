#include "recall/activesites.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace recall {

SiteAssignment::SiteAssignment(int sites_per_memory, std::vector<std::vector<int>> assignment)
    : sites_per_memory_(sites_per_memory), assignment_(std::move(assignment)) {
    if (sites_per_memory_ < 1) {
        throw std::invalid_argument("SiteAssignment: need at least one site per memory");
    }
    if (assignment_.empty()) {
        throw std::invalid_argument("SiteAssignment: need at least one memory");
    }
    std::set<std::vector<int>> seen;
    for (std::vector<int>& sites : assignment_) {
        if (static_cast<int>(sites.size()) != sites_per_memory_) {
            throw std::invalid_argument("SiteAssignment: wrong site count for a memory");
        }
        std::sort(sites.begin(), sites.end());
        for (std::size_t i = 0; i < sites.size(); ++i) {
            if (sites[i] < 0 || (i > 0 && sites[i] == sites[i - 1])) {
                throw std::invalid_argument("SiteAssignment: sites must be distinct and >= 0");
            }
        }
        if (!seen.insert(sites).second) {
            throw std::invalid_argument("SiteAssignment: site lists must be pairwise distinct");
        }
    }
}

std::uint64_t max_site_assignments(int n, int s) {
    if (n < 0 || s < 0) {
        throw std::invalid_argument("max_site_assignments: negative argument");
    }
    if (s > n) {
        return 0;
    }
    const int k = std::min(s, n - s);
    // Partial products are C(n-k+i, i), integers and nondecreasing in i, so
    // the first overflow is permanent and saturation is safe.
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(r);
}

ActivationScore score_sites(const SymmetricWeights& T, const LevelVector& memory) {
    if (memory.size() != T.size()) {
        throw std::invalid_argument("score_sites: memory size does not match the matrix");
    }
    const int n = T.size();
    ActivationScore score(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double field = 0.0;
        for (int j = 0; j < n; ++j) {
            field += T.at(i, j) * memory[j];
        }
        score[static_cast<std::size_t>(i)] = memory[i] * field;
    }
    return score;
}

namespace {

// Ranks in lexicographic combination order: (0,1,..,s-1), then advance the
// rightmost rank that still has room. Candidate site lists therefore prefer
// the highest-scoring sites in their leading slots.
bool next_combination(std::vector<int>& c, int n) {
    const int s = static_cast<int>(c.size());
    for (int j = s - 1; j >= 0; --j) {
        if (c[static_cast<std::size_t>(j)] < n - s + j) {
            ++c[static_cast<std::size_t>(j)];
            for (int l = j + 1; l < s; ++l) {
                c[static_cast<std::size_t>(l)] = c[static_cast<std::size_t>(l - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

}  // namespace

SiteAssignment assign_sites(const MemorySet& memories, const SymmetricWeights& T, int s) {
    const int n = memories.neurons();
    if (T.size() != n) {
        throw std::invalid_argument("assign_sites: matrix size does not match the memories");
    }
    if (s < 1 || s >= n) {
        throw std::invalid_argument("assign_sites: need 1 <= sites per memory < n");
    }
    const int M = memories.count();
    const std::uint64_t cap = max_site_assignments(n, s);
    if (static_cast<std::uint64_t>(M) > cap) {
        throw capacity_error("assign_sites: too many memories for unique sites: " +
                             std::to_string(M) + " memories but only " + std::to_string(cap) +
                             " distinct choices of " + std::to_string(s) + " of " +
                             std::to_string(n) + " neurons");
    }

    std::set<std::vector<int>> used;
    std::vector<std::vector<int>> assignment;
    assignment.reserve(static_cast<std::size_t>(M));
    for (int mi = 0; mi < M; ++mi) {
        const ActivationScore score = score_sites(T, memories.memory(mi));
        std::vector<int> ranked(static_cast<std::size_t>(n));
        std::iota(ranked.begin(), ranked.end(), 0);
        std::stable_sort(ranked.begin(), ranked.end(), [&](int a, int b) {
            return score[static_cast<std::size_t>(a)] > score[static_cast<std::size_t>(b)];
        });

        std::vector<int> combo(static_cast<std::size_t>(s));
        std::iota(combo.begin(), combo.end(), 0);
        for (;;) {
            std::vector<int> sites(static_cast<std::size_t>(s));
            for (int j = 0; j < s; ++j) {
                sites[static_cast<std::size_t>(j)] =
                    ranked[static_cast<std::size_t>(combo[static_cast<std::size_t>(j)])];
            }
            std::sort(sites.begin(), sites.end());
            if (used.insert(sites).second) {
                assignment.push_back(std::move(sites));
                break;
            }
            if (!next_combination(combo, n)) {
                throw std::logic_error("assign_sites: ran out of site lists below the cap");
            }
        }
    }
    return SiteAssignment(s, std::move(assignment));
}

UpdateOrder update_order_from_sites(const std::vector<int>& sites, int n) {
    if (n < 2) {
        throw std::invalid_argument("update_order_from_sites: need n >= 2");
    }
    const int s = static_cast<int>(sites.size());
    if (s < 1 || s >= n) {
        throw std::invalid_argument("update_order_from_sites: need 1 <= |sites| < n");
    }
    std::vector<int> pi(sites);
    std::sort(pi.begin(), pi.end());
    for (int j = 0; j < s; ++j) {
        if (pi[static_cast<std::size_t>(j)] < 0 || pi[static_cast<std::size_t>(j)] >= n ||
            (j > 0 && pi[static_cast<std::size_t>(j)] == pi[static_cast<std::size_t>(j - 1)])) {
            throw std::invalid_argument("update_order_from_sites: sites must be distinct and in range");
        }
    }

    // Rank the rest by total index distance to the site set; dividing by the
    // constant site count cannot change the order, so integer keys suffice.
    std::vector<std::pair<long long, int>> rest;
    rest.reserve(static_cast<std::size_t>(n - s));
    std::size_t next_site = 0;
    for (int i = 0; i < n; ++i) {
        if (next_site < pi.size() && pi[next_site] == i) {
            ++next_site;
            continue;
        }
        long long dist = 0;
        for (int j = 0; j < s; ++j) {
            dist += std::abs(i - pi[static_cast<std::size_t>(j)]);
        }
        rest.emplace_back(dist, i);
    }
    std::sort(rest.begin(), rest.end());
    for (const auto& [dist, i] : rest) {
        pi.push_back(i);
    }
    return UpdateOrder(std::move(pi), s);
}

}  // namespace recall
