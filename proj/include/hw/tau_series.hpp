#pragma once

#include "hw/partition.hpp"
#include "hw/series.hpp"
#include "hw/weightgen.hpp"

#include <map>
#include <tuple>

namespace hw {

/// One weight-n block of the hypergeometric tau-function: diagonal Schur
/// coefficients r_lambda^{G(z)} and the derived double power-sum coefficients.
struct TauTable {
    int n = 0;
    int D = 0;
    std::map<Partition, TruncatedSeries> schur_coeffs;
    std::map<std::tuple<int, Partition, Partition>, Rat> powersum_coeffs;
};

/// Builds the block and asserts the power-sum coefficients equal the
/// character-route weighted Hurwitz table.
TauTable toda_block(const WeightGenerator& g, int n, int D);

/// mKP reduction: r_lambda^{G(z)} / h_lambda per lambda of weight n.
std::map<Partition, TruncatedSeries> mkp_block(const WeightGenerator& g, int n, int D);

}  // namespace hw
