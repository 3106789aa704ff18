#pragma once

#include "hw/characters.hpp"
#include "hw/partition.hpp"
#include "hw/rational.hpp"

#include <map>
#include <vector>

namespace hw {

/// One-line permutation images on {0..n-1}; composition is right-to-left
/// (rightmost factor acts first), fixed project-wide.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose(const Perm& p, const Perm& q);  // p ∘ q
Perm inverse(const Perm& p);
Partition cycle_type(const Perm& p);

/// All elements of the conjugacy class cyc(mu) in S_n, n = |mu|.
std::vector<Perm> conjugacy_class(const Partition& mu);

/// Thrown when a brute-force request exceeds the configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Brute-force enumeration cap for S_n oracles; HURWITZ_CAP_N overrides.
int brute_force_cap();
/// Path-length cap for signature enumeration.
inline constexpr int kPathCap = 5;

/// F(mu^(1),...,mu^(k)) = #{(g_1,...,g_k) : g_i in cyc(mu^(i)), g_1...g_k = I} / n!
Rat frobenius_count(const std::vector<Partition>& profiles);

/// Class-averaged count of d-step transposition paths (a_d b_d)...(a_1 b_1) h,
/// h in cyc(mu), landing in cyc(nu), whose signature is lambda:
/// (1/|cyc(mu)|) * sum_h count(h).
Rat count_paths_by_signature(const Partition& mu, const Partition& nu,
                             const Partition& lambda);

/// All signature counts at once: (nu, signature) -> class-averaged count,
/// for paths of exactly d steps out of cyc(mu).
std::map<std::pair<Partition, Partition>, Rat> path_signature_table(const Partition& mu, int d);

/// Product in Z(C[S_n]) via the idempotent basis.
CenterElement class_multiply(const CenterElement& a, const CenterElement& b);

enum class SymmetricKind { Monomial, Elementary };

/// Expands m_lambda(J_1..J_n) or e_lambda(J_1..J_n) in the group algebra and
/// multiplies the target central element; result in the CycleSum basis.
CenterElement jm_symmetric_apply(SymmetricKind kind, const Partition& lambda,
                                 const CenterElement& target);

/// Evaluations of monomial / elementary / forgotten symmetric functions on a
/// finite value list (used for content eigenvalues and geometric weights).
Rat monomial_eval(const Partition& lambda, const std::vector<Rat>& values);
Rat elementary_eval(const Partition& lambda, const std::vector<Rat>& values);
Rat forgotten_eval(const Partition& lambda, const std::vector<Rat>& values);

}  // namespace hw
