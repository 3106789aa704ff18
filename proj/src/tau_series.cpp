#include "hw/tau_series.hpp"

#include "hw/characters.hpp"
#include "hw/hurwitz.hpp"
#include "hw/parallel.hpp"

#include <stdexcept>
#include <vector>

namespace hw {

TauTable toda_block(const WeightGenerator& g, int n, int D) {
    const auto& tab = CharacterTable::get(n);
    const auto& parts = tab.partitions();
    std::size_t p = parts.size();

    std::vector<TruncatedSeries> r(p, TruncatedSeries(D));
    parallel_for(p, [&](std::size_t i) { r[i] = content_product_series(g, parts[i], D); });

    TauTable out;
    out.n = n;
    out.D = D;
    for (std::size_t i = 0; i < p; ++i) out.schur_coeffs.emplace(parts[i], r[i]);

    HurwitzTable href = weighted_H_character_table(g, n, D);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            Rat zz = parts[i].z_order() * parts[j].z_order();
            for (int d = 0; d <= D; ++d) {
                Rat v = 0;
                for (std::size_t l = 0; l < p; ++l)
                    v += r[l].coeff(d) * tab.chi(l, i) * tab.chi(l, j) / zz;
                if (v != href.values[d][i][j])
                    throw std::logic_error("toda_block: power-sum block disagrees with the "
                                           "weighted Hurwitz table");
                out.powersum_coeffs[{d, parts[i], parts[j]}] = v;
            }
        }
    return out;
}

std::map<Partition, TruncatedSeries> mkp_block(const WeightGenerator& g, int n, int D) {
    std::map<Partition, TruncatedSeries> out;
    for (const Partition& lam : all_partitions(n)) {
        TruncatedSeries r = content_product_series(g, lam, D);
        Rat inv_h = Rat(1) / lam.hook_product();
        for (int d = 0; d <= D; ++d) r.coeff(d) *= inv_h;
        out.emplace(lam, std::move(r));
    }
    return out;
}

}  // namespace hw
