#include "ggprel/partitions.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "ggprel/parameters.hpp"

namespace ggprel {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts)
{
    if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
        throw std::invalid_argument("partition parts must be non-negative");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

long Partition::sum() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

Partition transpose(const Partition &lambda)
{
    // Column j of the Young diagram holds one cell for every row longer than j.
    std::vector<int> cols(lambda.empty() ? 0 : lambda.parts().front(), 0);
    for (int row : lambda.parts())
        for (int j = 0; j < row; ++j)
            ++cols[j];
    return Partition(std::move(cols));
}

bool is_close(const Partition &lambda, const Partition &mu)
{
    std::size_t n = std::max(lambda.length(), mu.length());
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(lambda[i] - mu[i]) > 1)
            return false;
    return true;
}

Partition associated_partition_of(const UnitaryParameter &p)
{
    return transpose(sl2_type(p));
}

} // namespace ggprel
