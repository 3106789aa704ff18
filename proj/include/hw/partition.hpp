#pragma once

#include "hw/rational.hpp"

#include <compare>
#include <vector>

namespace hw {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is a legal value and indexes the n = 0 cases.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int colength() const { return weight() - length(); }
    bool empty() const { return parts_.empty(); }

    /// Multiplicity of part i.
    int multiplicity(int i) const;

    Partition conjugate() const;

    /// Contents j - i over cells (i, j), English convention, 1-based.
    std::vector<int> contents() const;

    /// z_mu = prod_i i^{m_i} m_i!
    Rat z_order() const;

    /// Product of all hook lengths.
    Rat hook_product() const;

    /// |aut| = prod_i m_i!
    Rat aut_order() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Every partition of n exactly once, reverse lexicographic:
/// (n), (n-1,1), ..., (1^n). The canonical order for all tables.
std::vector<Partition> all_partitions(int n);

/// Position of mu within all_partitions(|mu|).
std::size_t canonical_index(const Partition& mu);

}  // namespace hw
