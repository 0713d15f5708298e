#pragma once

#include <vector>

#include "recall/matrix.hpp"
#include "recall/memcore.hpp"

namespace recall {

/// Symmetric zero-diagonal weight matrix over n neurons. Symmetry and the
/// zero diagonal are checked exactly on construction; every operation that
/// produces one keeps both properties by construction.
class SymmetricWeights {
public:
    explicit SymmetricWeights(Matrix entries);

    static SymmetricWeights zeros(int n);

    int size() const { return entries_.rows(); }
    const Matrix& entries() const { return entries_; }
    double at(int i, int j) const { return entries_(i, j); }

    bool operator==(const SymmetricWeights&) const = default;

private:
    Matrix entries_;
};

/// The permutation in which neurons receive their generated values. The
/// first num_start_sites entries of pi are the initially-known sites.
class UpdateOrder {
public:
    UpdateOrder(std::vector<int> pi, int num_start_sites);

    const std::vector<int>& pi() const { return pi_; }
    int at(int position) const { return pi_[static_cast<std::size_t>(position)]; }
    int num_start_sites() const { return num_start_; }
    /// The start-site prefix of pi, in prefix order.
    std::vector<int> start_sites() const;
    int size() const { return static_cast<int>(pi_.size()); }

    bool operator==(const UpdateOrder&) const = default;

private:
    std::vector<int> pi_;
    int num_start_;
};

/// A known prefix of a memory along an update order: values[j] is the level
/// value of neuron pi[j], for j < known().
class Fragment {
public:
    Fragment(UpdateOrder order, std::vector<int> values, Levels levels);

    const UpdateOrder& order() const { return order_; }
    const std::vector<int>& values() const { return values_; }
    int known() const { return static_cast<int>(values_.size()); }
    Levels levels() const { return levels_; }

private:
    UpdateOrder order_;
    std::vector<int> values_;
    Levels levels_;
};

/// Strictly lower-triangular weight view in update-order coordinates:
/// lower()(a, b) couples update position b into update position a only for
/// b < a. Rows above the diagonal stay exactly zero through training.
class TriangularGenerator {
public:
    TriangularGenerator(UpdateOrder order, Matrix lower);

    static TriangularGenerator zeros(UpdateOrder order);

    const UpdateOrder& order() const { return order_; }
    const Matrix& lower() const { return lower_; }
    int size() const { return lower_.rows(); }

    /// Training hook: add delta to the (row, col) coupling. Only strictly
    /// lower entries are writable, so triangularity cannot be broken.
    void adjust(int row, int col, double delta);

    bool operator==(const TriangularGenerator&) const = default;

private:
    UpdateOrder order_;
    Matrix lower_;
};

/// Splits T into its strictly lower-triangular part in the permuted
/// coordinates given by order. The result plus its transpose reproduces the
/// permuted T exactly.
TriangularGenerator split_lower(const SymmetricWeights& T, const UpdateOrder& order);

/// Regrows a full vector from a fragment, one neuron per step in update
/// order. Step with k known components computes the activation of position k
/// from the first k entries of row k and maps it through sgn (binary) or the
/// quantizer with threshold theta * k (quaternary). Known components are
/// never modified. The result is indexed by natural neuron index.
LevelVector generate(const TriangularGenerator& g, const Fragment& frag,
                     const QuantizerConfig& q);

/// True iff generating from the memory's own values at the start sites
/// reproduces the memory at every position. sites must equal the
/// generator's start sites (as a set).
bool retrieves(const TriangularGenerator& g, const LevelVector& memory,
               const std::vector<int>& sites, const QuantizerConfig& q);

}  // namespace recall
