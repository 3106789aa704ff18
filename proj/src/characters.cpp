#include "hw/characters.hpp"

#include "hw/parallel.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace hw {

namespace {

// Murnaghan-Nakayama over beta numbers: removing a rim hook of length r from
// lambda is removing r from one beta number, with height = number of beta
// numbers jumped over.
Int mn_char(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t mu_pos,
            std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
    if (lambda.empty()) return 1;
    std::vector<int> rest(mu.begin() + mu_pos, mu.end());
    auto key = std::make_pair(lambda, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = mu[mu_pos];
    int n = static_cast<int>(lambda.size());
    std::vector<int> beta(n);
    for (int k = 0; k < n; ++k) beta[k] = lambda[k] + (n - 1 - k);

    Int total = 0;
    for (int k = 0; k < n; ++k) {
        int b = beta[k] - r;
        if (b < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < n; ++j) {
            if (j == k) continue;
            if (beta[j] == b) { clash = true; break; }
            if (beta[j] > b && beta[j] < beta[k]) ++height;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[k] = b;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> nl;
        for (int idx = 0; idx < n; ++idx) {
            int part = nb[idx] - (n - 1 - idx);
            if (part > 0) nl.push_back(part);
        }
        Int sub = mn_char(nl, mu, mu_pos + 1, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::mutex g_char_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, Int> g_char_memo;

}  // namespace

Rat character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: |lambda| != |mu|");
    std::lock_guard lock(g_char_mutex);
    return Rat(mn_char(lambda.parts(), mu.parts(), 0, g_char_memo));
}

CharacterTable::CharacterTable(int n) : n_(n), partitions_(all_partitions(n)) {
    std::size_t p = partitions_.size();
    entries_.resize(p);
    parallel_for(p, [&](std::size_t i) {
        entries_[i].resize(p);
        for (std::size_t j = 0; j < p; ++j)
            entries_[i][j] = character(partitions_[i], partitions_[j]);
    });
}

const CharacterTable& CharacterTable::get(int n) {
    if (n < 1 || n > kCharacterTableMaxN)
        throw std::out_of_range("CharacterTable: n out of range [1," +
                                std::to_string(kCharacterTableMaxN) + "]");
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard lock(mtx);
    auto& slot = cache[n];
    if (!slot) slot = std::unique_ptr<CharacterTable>(new CharacterTable(n));
    return *slot;
}

Rat CharacterTable::chi(const Partition& lambda, const Partition& mu) const {
    return entries_[canonical_index(lambda)][canonical_index(mu)];
}

CenterElement CharacterTable::idempotent_from_cycles(const Partition& lambda) const {
    if (lambda.weight() != n_) throw std::invalid_argument("idempotent_from_cycles: weight mismatch");
    CenterElement out{n_, Basis::CycleSum, {}};
    Rat h = lambda.hook_product();
    std::size_t li = canonical_index(lambda);
    for (std::size_t j = 0; j < partitions_.size(); ++j)
        if (entries_[li][j] != 0) out.coeffs[partitions_[j]] = entries_[li][j] / h;
    return out;
}

CenterElement CharacterTable::cycles_from_idempotents(const Partition& mu) const {
    if (mu.weight() != n_) throw std::invalid_argument("cycles_from_idempotents: weight mismatch");
    CenterElement out{n_, Basis::Idempotent, {}};
    Rat z = mu.z_order();
    std::size_t mj = canonical_index(mu);
    for (std::size_t i = 0; i < partitions_.size(); ++i)
        if (entries_[i][mj] != 0)
            out.coeffs[partitions_[i]] = partitions_[i].hook_product() * entries_[i][mj] / z;
    return out;
}

CenterElement CharacterTable::to_idempotent_basis(const CenterElement& x) const {
    if (x.basis == Basis::Idempotent) return x;
    CenterElement out{n_, Basis::Idempotent, {}};
    for (std::size_t i = 0; i < partitions_.size(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < partitions_.size(); ++j) {
            Rat c = x.coeff(partitions_[j]);
            if (c != 0) s += c * partitions_[i].hook_product() * entries_[i][j] /
                             partitions_[j].z_order();
        }
        if (s != 0) out.coeffs[partitions_[i]] = s;
    }
    return out;
}

CenterElement CharacterTable::to_cycle_basis(const CenterElement& x) const {
    if (x.basis == Basis::CycleSum) return x;
    CenterElement out{n_, Basis::CycleSum, {}};
    for (std::size_t j = 0; j < partitions_.size(); ++j) {
        Rat s = 0;
        for (std::size_t i = 0; i < partitions_.size(); ++i) {
            Rat c = x.coeff(partitions_[i]);
            if (c != 0) s += c * entries_[i][j] / partitions_[i].hook_product();
        }
        if (s != 0) out.coeffs[partitions_[j]] = s;
    }
    return out;
}

}  // namespace hw
