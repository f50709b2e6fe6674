#include "hadamard/weights.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hadamard/polynomial.hpp"

namespace hadamard {

SimplexWeights::SimplexWeights(std::vector<std::size_t> support, std::vector<double> weights)
    : support_(std::move(support)), weights_(std::move(weights))
{
    if (support_.empty())
        throw InvalidInput("weight support must be non-empty");
    if (support_.size() != weights_.size())
        throw InvalidInput("weight count does not match support size");
    if (!std::is_sorted(support_.begin(), support_.end()) ||
        std::adjacent_find(support_.begin(), support_.end()) != support_.end())
        throw InvalidInput("weight support must be strictly increasing");
    for (double w : weights_)
        if (!(w > 0.0 && w <= 1.0))
            throw InvalidInput("weight " + std::to_string(w) + " outside (0, 1]");
    if (sum() > 1.0 + 1e-12)
        throw InvalidInput("weights sum to " + std::to_string(sum()) + " > 1");
}

double SimplexWeights::sum() const noexcept
{
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

double SimplexWeights::at(std::size_t k) const
{
    const auto it = std::lower_bound(support_.begin(), support_.end(), k);
    if (it == support_.end() || *it != k)
        throw InvalidInput("index " + std::to_string(k) + " not in weight support");
    return weights_[static_cast<std::size_t>(it - support_.begin())];
}

std::map<std::size_t, double> SimplexWeights::as_map() const
{
    std::map<std::size_t, double> m;
    for (std::size_t i = 0; i < support_.size(); ++i)
        m.emplace(support_[i], weights_[i]);
    return m;
}

} // namespace hadamard
