#pragma once

#include "hw/partition.hpp"
#include "hw/rational.hpp"

#include <map>
#include <vector>

namespace hw {

enum class Basis { CycleSum, Idempotent };

/// Element of the center Z(C[S_n]) as a coefficient vector over partitions
/// of n, in either the cycle-sum basis {C_mu} or the idempotent basis {F_lambda}.
struct CenterElement {
    int n = 0;
    Basis basis = Basis::CycleSum;
    std::map<Partition, Rat> coeffs;

    Rat coeff(const Partition& p) const {
        auto it = coeffs.find(p);
        return it == coeffs.end() ? Rat(0) : it->second;
    }
};

/// Irreducible S_n character chi_lambda(mu), Murnaghan-Nakayama with memoization.
Rat character(const Partition& lambda, const Partition& mu);

class CharacterTable {
public:
    /// Full table for S_n; rows lambda, columns mu, canonical partition order.
    static const CharacterTable& get(int n);

    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    const Rat& chi(std::size_t lambda_idx, std::size_t mu_idx) const {
        return entries_[lambda_idx][mu_idx];
    }
    Rat chi(const Partition& lambda, const Partition& mu) const;

    /// F_lambda = h_lambda^{-1} sum_mu chi_lambda(mu) C_mu
    CenterElement idempotent_from_cycles(const Partition& lambda) const;
    /// C_mu = z_mu^{-1} sum_lambda h_lambda chi_lambda(mu) F_lambda
    CenterElement cycles_from_idempotents(const Partition& mu) const;

    /// Basis change of a whole element.
    CenterElement to_idempotent_basis(const CenterElement& x) const;
    CenterElement to_cycle_basis(const CenterElement& x) const;

private:
    explicit CharacterTable(int n);
    int n_;
    std::vector<Partition> partitions_;
    std::vector<std::vector<Rat>> entries_;
};

/// Maximum n for which tables are built (spec default).
inline constexpr int kCharacterTableMaxN = 10;

}  // namespace hw
