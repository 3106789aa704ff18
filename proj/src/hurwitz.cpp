#include "hw/hurwitz.hpp"

#include "hw/characters.hpp"
#include "hw/group_algebra.hpp"
#include "hw/parallel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hw {

Rat hurwitz_classical(const std::vector<Partition>& profiles) {
    if (profiles.empty()) throw std::invalid_argument("hurwitz_classical: no profiles");
    int n = profiles[0].weight();
    for (const auto& p : profiles)
        if (p.weight() != n) throw std::invalid_argument("hurwitz_classical: weight mismatch");
    const auto& tab = CharacterTable::get(n);
    int k = static_cast<int>(profiles.size());
    Rat total = 0;
    for (const Partition& lam : tab.partitions()) {
        Rat h = lam.hook_product();
        Rat term = 1;
        for (int e = 0; e < k - 2; ++e) term *= h;
        if (k < 2) term = Rat(1) / h;  // k=1: h^{-1}
        for (const auto& p : profiles) term *= tab.chi(lam, p) / p.z_order();
        total += term;
    }
    return total;
}

std::vector<Rat> weighted_H_character(const WeightGenerator& g, const Partition& mu,
                                      const Partition& nu, int D) {
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("weighted_H_character: |mu| != |nu|");
    int n = mu.weight();
    const auto& tab = CharacterTable::get(n);
    TruncatedSeries acc(D);
    for (const Partition& lam : tab.partitions()) {
        Rat scale = tab.chi(lam, mu) * tab.chi(lam, nu) / (mu.z_order() * nu.z_order());
        if (scale == 0) continue;
        TruncatedSeries r = content_product_series(g, lam, D);
        for (int d = 0; d <= D; ++d) acc.coeff(d) += scale * r.coeff(d);
    }
    return acc.coeffs();
}

HurwitzTable weighted_H_character_table(const WeightGenerator& g, int n, int D) {
    const auto& tab = CharacterTable::get(n);
    const auto& parts = tab.partitions();
    std::size_t p = parts.size();

    // One content-product series per lambda, computed in parallel.
    std::vector<TruncatedSeries> r(p, TruncatedSeries(D));
    parallel_for(p, [&](std::size_t i) { r[i] = content_product_series(g, parts[i], D); });

    HurwitzTable out;
    out.n = n;
    out.D = D;
    out.generator = g.name();
    out.parts = parts;
    out.values.assign(D + 1, std::vector<std::vector<Rat>>(p, std::vector<Rat>(p)));
    parallel_for(p, [&](std::size_t i) {
        for (std::size_t j = 0; j < p; ++j) {
            Rat zz = parts[i].z_order() * parts[j].z_order();
            for (std::size_t l = 0; l < p; ++l) {
                Rat scale = tab.chi(l, i) * tab.chi(l, j) / zz;
                if (scale == 0) continue;
                for (int d = 0; d <= D; ++d) out.values[d][i][j] += scale * r[l].coeff(d);
            }
        }
    });
    return out;
}

Rat weighted_F_paths(const WeightGenerator& g, const Partition& mu, const Partition& nu, int d) {
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("weighted_F_paths: |mu| != |nu|");
    auto table = path_signature_table(mu, d);
    TruncatedSeries coeffs = taylor_coeffs(g, d);
    Rat total = 0;
    for (const Partition& lam : all_partitions(d)) {
        auto it = table.find({nu, lam});
        if (it == table.end()) continue;
        Rat w = 1;
        for (int part : lam.parts()) w *= coeffs.coeff(part) * Rat(factorial(part));
        total += w * it->second;
    }
    return total / (Rat(factorial(static_cast<unsigned>(d))) * mu.z_order());
}

namespace {

/// Weight of a branch configuration whose profile colengths form lambda.
Rat geometric_weight(const WeightGenerator& g, const Partition& lambda) {
    bool dual_style = g.dualized;
    Preset p = g.preset;
    std::vector<Rat> vals;
    switch (p) {
        case Preset::Classical: vals = g.c; break;
        case Preset::E: vals = {Rat(1)}; break;
        case Preset::Ek: vals.assign(g.k, Rat(1)); break;
        case Preset::H:
            // H = dual of E
            dual_style = !dual_style;
            vals = {Rat(1)};
            break;
        case Preset::Exp: {
            if (g.dualized) break;
            int d = lambda.weight();
            return lambda.length() == d ? Rat(1) / Rat(factorial(static_cast<unsigned>(d)))
                                        : Rat(0);
        }
        case Preset::Eprime: {
            if (g.dualized) break;
            // sum over distinct arrangements of prod_m q^{P_m}/(1-q^{P_m}),
            // P_m the prefix sums of the arranged colengths
            std::vector<int> arr(lambda.parts().rbegin(), lambda.parts().rend());
            Rat total = 0;
            do {
                Rat term = 1;
                long prefix = 0;
                for (int a : arr) {
                    prefix += a;
                    Rat qp = 1;
                    for (long e = 0; e < prefix; ++e) qp *= g.q;
                    term *= qp / (1 - qp);
                }
                total += term;
            } while (std::next_permutation(arr.begin(), arr.end()));
            return total;
        }
        default: break;
    }
    if (vals.empty())
        throw std::invalid_argument("weighted_H_geometric: no geometric weight form for preset " +
                                    g.name());
    return dual_style ? forgotten_eval(lambda, vals) : monomial_eval(lambda, vals);
}

}  // namespace

Rat weighted_H_geometric(const WeightGenerator& g, const Partition& mu, const Partition& nu,
                         int d) {
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("weighted_H_geometric: |mu| != |nu|");
    int n = mu.weight();
    if (d == 0) return mu == nu ? Rat(1) / mu.z_order() : Rat(0);

    // Nontrivial profiles: everything except the identity class (1^n).
    std::vector<Partition> pool;
    for (const Partition& p : all_partitions(n))
        if (p.colength() > 0) pool.push_back(p);

    Rat total = 0;
    std::vector<std::pair<Partition, int>> config;  // profile, multiplicity
    auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
        if (remaining == 0) {
            std::vector<int> colengths;
            std::vector<Partition> profiles;
            Rat arrangements = 1;
            std::map<int, Int> slots;  // colength -> slot count so far
            for (const auto& [prof, mult] : config) {
                for (int i = 0; i < mult; ++i) {
                    colengths.push_back(prof.colength());
                    profiles.push_back(prof);
                }
                // multinomial: choose this profile's positions among its
                // colength group as the group fills up
                Int& filled = slots[prof.colength()];
                Int ways = 1;
                for (int i = 1; i <= mult; ++i) {
                    ways *= (filled + i);
                    ways /= i;
                }
                filled += mult;
                arrangements *= Rat(ways);
            }
            std::sort(colengths.begin(), colengths.end(), std::greater<>());
            Rat w = geometric_weight(g, Partition(std::move(colengths)));
            if (w == 0) return;
            profiles.push_back(mu);
            profiles.push_back(nu);
            total += w * arrangements * hurwitz_classical(profiles);
            return;
        }
        for (std::size_t i = from; i < pool.size(); ++i) {
            int cl = pool[i].colength();
            for (int mult = 1; mult * cl <= remaining; ++mult) {
                config.emplace_back(pool[i], mult);
                self(self, i + 1, remaining - mult * cl);
                config.pop_back();
            }
        }
    };
    rec(rec, 0, d);
    return total;
}

std::vector<std::vector<Rat>> multispecies_F(
    const std::vector<std::pair<WeightGenerator, int>>& factors, int n) {
    const auto& parts = CharacterTable::get(n).partitions();
    std::size_t p = parts.size();
    std::vector<std::vector<Rat>> prod(p, std::vector<Rat>(p));
    for (std::size_t i = 0; i < p; ++i) prod[i][i] = 1;
    for (const auto& [g, d] : factors) {
        HurwitzTable t = weighted_H_character_table(g, n, d);
        std::vector<std::vector<Rat>> m(p, std::vector<Rat>(p));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < p; ++j) m[i][j] = t.values[d][i][j] * parts[j].z_order();
        std::vector<std::vector<Rat>> next(p, std::vector<Rat>(p));
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t k = 0; k < p; ++k) {
                if (prod[i][k] == 0) continue;
                for (std::size_t j = 0; j < p; ++j) next[i][j] += prod[i][k] * m[k][j];
            }
        prod = std::move(next);
    }
    return prod;
}

std::vector<Rat> macdonald_decompose(const Rat& q, const std::vector<Rat>& t_samples,
                                     const std::vector<Rat>& c, const Partition& mu,
                                     const Partition& nu, int d) {
    if (static_cast<int>(t_samples.size()) < d + 1)
        throw std::invalid_argument("macdonald_decompose: need at least d+1 t-samples");
    for (std::size_t i = 0; i < t_samples.size(); ++i)
        for (std::size_t j = i + 1; j < t_samples.size(); ++j)
            if (t_samples[i] == t_samples[j])
                throw std::invalid_argument("macdonald_decompose: coincident t-samples");

    std::vector<Rat> values(t_samples.size());
    parallel_for(t_samples.size(), [&](std::size_t i) {
        WeightGenerator g;
        g.preset = Preset::Macdonald;
        g.q = q;
        g.t = t_samples[i];
        g.c = c;
        values[i] = weighted_H_character(g, mu, nu, d)[d];
    });

    // Lagrange interpolation through the first d+1 samples.
    std::vector<Rat> coeffs(d + 1);
    for (int i = 0; i <= d; ++i) {
        std::vector<Rat> basis{Rat(1)};  // prod_{j != i} (t - t_j)
        Rat denom = 1;
        for (int j = 0; j <= d; ++j) {
            if (j == i) continue;
            denom *= t_samples[i] - t_samples[j];
            std::vector<Rat> next(basis.size() + 1);
            for (std::size_t m = 0; m < basis.size(); ++m) {
                next[m] += basis[m] * (-t_samples[j]);
                next[m + 1] += basis[m];
            }
            basis = std::move(next);
        }
        for (std::size_t m = 0; m < basis.size(); ++m) coeffs[m] += values[i] * basis[m] / denom;
    }

    // Residual check on any extra samples: the values must lie on the
    // degree-d polynomial exactly.
    for (std::size_t i = d + 1; i < t_samples.size(); ++i) {
        Rat eval = 0, tp = 1;
        for (int m = 0; m <= d; ++m) {
            eval += coeffs[m] * tp;
            tp *= t_samples[i];
        }
        if (eval != values[i])
            throw std::runtime_error("macdonald_decompose: nonzero interpolation residual");
    }
    return coeffs;
}

std::optional<int> genus(const Partition& mu, const Partition& nu, int d) {
    int euler = mu.length() + nu.length() - d;  // 2 - 2g
    if ((2 - euler) % 2 != 0) return std::nullopt;
    int g = (2 - euler) / 2;
    if (g < 0) return std::nullopt;
    return g;
}

}  // namespace hw
