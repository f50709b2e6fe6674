#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace hadamard {

/// An element of Lambda_f: positive weights lambda_k in (0, 1] on a sorted
/// support, summing to at most 1.
class SimplexWeights {
public:
    /// Sums up to 1 + 1e-12 are accepted to absorb rounding in synthesized witnesses.
    SimplexWeights(std::vector<std::size_t> support, std::vector<double> weights);

    const std::vector<std::size_t>& support() const noexcept { return support_; }
    const std::vector<double>& weights() const noexcept { return weights_; }
    std::size_t size() const noexcept { return support_.size(); }
    double sum() const noexcept;

    /// Weight at index k; throws InvalidInput if k is not in the support.
    double at(std::size_t k) const;

    std::map<std::size_t, double> as_map() const;

private:
    std::vector<std::size_t> support_;
    std::vector<double> weights_;
};

} // namespace hadamard
