#include "recall/bmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace recall {

SymmetricWeights::SymmetricWeights(Matrix entries) : entries_(std::move(entries)) {
    const int n = entries_.rows();
    if (n < 2 || entries_.cols() != n) {
        throw std::invalid_argument("SymmetricWeights: need a square matrix with n >= 2");
    }
    for (int i = 0; i < n; ++i) {
        if (entries_(i, i) != 0.0) {
            throw std::invalid_argument("SymmetricWeights: diagonal must be zero");
        }
        for (int j = 0; j < i; ++j) {
            const double a = entries_(i, j);
            if (!std::isfinite(a)) {
                throw std::invalid_argument("SymmetricWeights: entries must be finite");
            }
            if (a != entries_(j, i)) {
                throw std::invalid_argument("SymmetricWeights: matrix must be symmetric");
            }
        }
    }
}

SymmetricWeights SymmetricWeights::zeros(int n) {
    return SymmetricWeights(Matrix(n, n, 0.0));
}

UpdateOrder::UpdateOrder(std::vector<int> pi, int num_start_sites)
    : pi_(std::move(pi)), num_start_(num_start_sites) {
    const int n = static_cast<int>(pi_.size());
    if (n < 2) {
        throw std::invalid_argument("UpdateOrder: need at least 2 neurons");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : pi_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("UpdateOrder: pi must be a permutation of 0..n-1");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    if (num_start_ < 1 || num_start_ >= n) {
        throw std::invalid_argument("UpdateOrder: start sites must be a nonempty strict prefix");
    }
}

std::vector<int> UpdateOrder::start_sites() const {
    return std::vector<int>(pi_.begin(), pi_.begin() + num_start_);
}

Fragment::Fragment(UpdateOrder order, std::vector<int> values, Levels levels)
    : order_(std::move(order)), values_(std::move(values)), levels_(levels) {
    const int k = static_cast<int>(values_.size());
    if (k < 1 || k > order_.size()) {
        throw std::invalid_argument("Fragment: known count must be in [1, n]");
    }
    for (int v : values_) {
        if (!is_level_value(v, levels_)) {
            throw std::invalid_argument("Fragment: value outside the level set");
        }
    }
}

TriangularGenerator::TriangularGenerator(UpdateOrder order, Matrix lower)
    : order_(std::move(order)), lower_(std::move(lower)) {
    const int n = order_.size();
    if (lower_.rows() != n || lower_.cols() != n) {
        throw std::invalid_argument("TriangularGenerator: matrix size must match the order");
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            if (lower_(a, b) != 0.0) {
                throw std::invalid_argument(
                    "TriangularGenerator: entries on or above the diagonal must be zero");
            }
        }
    }
}

TriangularGenerator TriangularGenerator::zeros(UpdateOrder order) {
    const int n = order.size();
    return TriangularGenerator(std::move(order), Matrix(n, n, 0.0));
}

void TriangularGenerator::adjust(int row, int col, double delta) {
    if (col < 0 || row >= size() || col >= row) {
        throw std::invalid_argument("TriangularGenerator::adjust: need 0 <= col < row < n");
    }
    lower_(row, col) += delta;
}

TriangularGenerator split_lower(const SymmetricWeights& T, const UpdateOrder& order) {
    if (order.size() != T.size()) {
        throw std::invalid_argument("split_lower: order size must match the matrix");
    }
    const int n = T.size();
    Matrix B(n, n, 0.0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < a; ++b) {
            B(a, b) = T.at(order.at(a), order.at(b));
        }
    }
    return TriangularGenerator(order, std::move(B));
}

LevelVector generate(const TriangularGenerator& g, const Fragment& frag,
                     const QuantizerConfig& q) {
    if (!(frag.order() == g.order())) {
        throw std::invalid_argument("generate: fragment order does not match the generator");
    }
    if (frag.levels() != q.levels) {
        throw std::invalid_argument("generate: fragment level set does not match the quantizer");
    }
    const int n = g.size();
    const int k = frag.known();

    // Work in update-order coordinates; unknown slots are only read after
    // they are written.
    std::vector<int> f(frag.values());
    f.resize(static_cast<std::size_t>(n), 0);
    const Matrix& B = g.lower();
    for (int p = k; p < n; ++p) {
        const double* row = B.row(p);
        double x = 0.0;
        for (int j = 0; j < p; ++j) {
            x += row[j] * f[static_cast<std::size_t>(j)];
        }
        f[static_cast<std::size_t>(p)] =
            q.levels == Levels::Binary ? sgn(x) : quantize(x, q.theta * p);
    }

    std::vector<int> natural(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        natural[static_cast<std::size_t>(g.order().at(p))] = f[static_cast<std::size_t>(p)];
    }
    return LevelVector(std::move(natural), q.levels);
}

bool retrieves(const TriangularGenerator& g, const LevelVector& memory,
               const std::vector<int>& sites, const QuantizerConfig& q) {
    if (memory.size() != g.size()) {
        throw std::invalid_argument("retrieves: memory size does not match the generator");
    }
    std::vector<int> requested(sites);
    std::vector<int> starts(g.order().start_sites());
    std::sort(requested.begin(), requested.end());
    std::sort(starts.begin(), starts.end());
    if (requested != starts) {
        throw std::invalid_argument("retrieves: sites differ from the generator's start sites");
    }

    const int s = g.order().num_start_sites();
    std::vector<int> prefix(static_cast<std::size_t>(s));
    for (int j = 0; j < s; ++j) {
        prefix[static_cast<std::size_t>(j)] = memory[g.order().at(j)];
    }
    const LevelVector out = generate(g, Fragment(g.order(), std::move(prefix), memory.levels()), q);
    return out == memory;
}

}  // namespace recall
