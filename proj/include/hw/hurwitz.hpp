#pragma once

#include "hw/partition.hpp"
#include "hw/rational.hpp"
#include "hw/weightgen.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hw {

/// H(mu^(1),...,mu^(k)) = sum_lambda h_lambda^{k-2} prod chi_lambda(mu^(i))/z_{mu^(i)}.
Rat hurwitz_classical(const std::vector<Partition>& profiles);

/// Weighted table for one generator: values[d][i][j] = H^d_G(mu_i, mu_j),
/// partitions in canonical order.
struct HurwitzTable {
    int n = 0;
    int D = 0;
    std::string generator;
    std::vector<Partition> parts;
    std::vector<std::vector<std::vector<Rat>>> values;

    const Rat& value(int d, const Partition& mu, const Partition& nu) const {
        return values[d][canonical_index(mu)][canonical_index(nu)];
    }
};

/// Reference route: coefficient d of sum_lambda r_lambda^{G(z)}
/// chi_lambda(mu) chi_lambda(nu) / (z_mu z_nu).
HurwitzTable weighted_H_character_table(const WeightGenerator& g, int n, int D);
std::vector<Rat> weighted_H_character(const WeightGenerator& g, const Partition& mu,
                                      const Partition& nu, int D);

/// Path route: weighted count of d-step transposition paths cyc(mu) -> cyc(nu),
/// signature lambda weighted by prod G_{lambda_i}. Normalized to match the
/// character route (see the normalization ledger in the README).
Rat weighted_F_paths(const WeightGenerator& g, const Partition& mu, const Partition& nu, int d);

/// Geometric route: sum over multisets of nontrivial branch profiles with
/// total colength d, weighted by the symmetric-function evaluation attached
/// to the generator. Throws for presets with no geometric weight form.
Rat weighted_H_geometric(const WeightGenerator& g, const Partition& mu, const Partition& nu,
                         int d);

/// Product of per-factor matrices [z_nu * H^{d_i}_{G_i}(mu,nu)] in the given
/// order; order-independent since all factors are commuting central elements.
std::vector<std::vector<Rat>> multispecies_F(
    const std::vector<std::pair<WeightGenerator, int>>& factors, int n);

/// Coefficients (in t, degree <= d) of H^d for the Macdonald generator, by
/// exact interpolation at the given t-samples. Throws if the samples are not
/// distinct, too few (< d+1), or fail to lie on a degree-d polynomial.
std::vector<Rat> macdonald_decompose(const Rat& q, const std::vector<Rat>& t_samples,
                                     const std::vector<Rat>& c, const Partition& mu,
                                     const Partition& nu, int d);

/// Riemann-Hurwitz genus from 2 - 2g = l(mu) + l(nu) - d; nullopt when the
/// combination is non-integer or negative.
std::optional<int> genus(const Partition& mu, const Partition& nu, int d);

}  // namespace hw
