#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ggprel {

class UnitaryParameter;

/*
 * A weakly decreasing list of positive integers.  Reading past the last
 * part yields 0, so two partitions of different lengths compare
 * coordinatewise without padding.
 */
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts descending and drops zeros; throws on negative entries.
    static Partition from_unsorted(std::vector<int> parts);

    const std::vector<int> &parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    long sum() const;

    /// 0-based; out of range reads as 0.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    friend bool operator==(const Partition &, const Partition &) = default;

private:
    std::vector<int> parts_;
};

Partition transpose(const Partition &lambda);

/// |λ_i - μ_i| <= 1 for every i.
bool is_close(const Partition &lambda, const Partition &mu);

/// AP(π), obtained as the transpose of the SL2-type.
Partition associated_partition_of(const UnitaryParameter &p);

} // namespace ggprel
