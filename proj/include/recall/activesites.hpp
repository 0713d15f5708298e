#pragma once

#include <cstdint>
#include <vector>

#include "recall/bmatrix.hpp"
#include "recall/memcore.hpp"

namespace recall {

/// Per-neuron activation alignment for one memory: score[i] = m[i] * (T*m)[i].
using ActivationScore = std::vector<double>;

/// One site list per memory, each holding sites_per_memory distinct neuron
/// indices sorted ascending. Site lists are pairwise distinct across
/// memories, which for one site per memory means the sites themselves are.
class SiteAssignment {
public:
    SiteAssignment(int sites_per_memory, std::vector<std::vector<int>> assignment);

    int sites_per_memory() const { return sites_per_memory_; }
    int count() const { return static_cast<int>(assignment_.size()); }
    const std::vector<int>& sites_for(int memory_index) const {
        return assignment_[static_cast<std::size_t>(memory_index)];
    }
    const std::vector<std::vector<int>>& all() const { return assignment_; }

private:
    int sites_per_memory_;
    std::vector<std::vector<int>> assignment_;
};

/// Number of distinct site lists available: C(n, s), saturated at UINT64_MAX.
std::uint64_t max_site_assignments(int n, int s);

ActivationScore score_sites(const SymmetricWeights& T, const LevelVector& memory);

/// Greedy assignment in memory order: each memory takes its best still-free
/// site list, preferring higher scores and breaking ties toward the lower
/// neuron index. Throws capacity_error when the memories outnumber the
/// distinct site lists.
SiteAssignment assign_sites(const MemorySet& memories, const SymmetricWeights& T, int s);

/// Update order for one memory: its sites first in ascending index order,
/// then the remaining neurons by ascending mean index distance to the site
/// set, ties toward the lower index.
UpdateOrder update_order_from_sites(const std::vector<int>& sites, int n);

}  // namespace recall
