#pragma once

#include "hw/partition.hpp"
#include "hw/rational.hpp"
#include "hw/series.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hw {

enum class Preset {
    Classical,  // finite product (1 + c_i z)
    Exp,        // e^z
    E,          // 1 + z
    Ek,         // (1 + z)^k
    H,          // 1/(1 - z)
    Eprime,     // prod (1 + q^i z), i >= 1
    Eq,         // prod (1 + q^i z), i >= 0
    Hq,         // prod 1/(1 - q^i z), i >= 0
    Macdonald,  // prod_i prod_k (1 - t c_i z q^k)/(1 - c_i z q^k)
    HallLittlewood,
    Jack,       // prod (1 - c_i z)^{-1/alpha}
};

/// A weight generating function G(z) = 1 + sum_i G_i z^i, optionally dualized
/// to 1/G(-z). All parameters are exact rationals.
struct WeightGenerator {
    Preset preset = Preset::E;
    std::vector<Rat> c;
    Rat q, t, alpha;
    int k = 0;
    bool dualized = false;

    WeightGenerator dual() const {
        WeightGenerator g = *this;
        g.dualized = !g.dualized;
        return g;
    }

    /// CLI descriptor, e.g. "Ek:3", "macdonald:1/3:1/5:1,2".
    std::string name() const;

    /// Parses the CLI descriptor format; accepts a "dual:" prefix.
    static WeightGenerator parse(std::string_view s);
};

/// Taylor coefficients of G (respecting the dualized flag) through degree D.
TruncatedSeries taylor_coeffs(const WeightGenerator& g, int D);

/// Coefficients of 1/G(-z) through degree D.
TruncatedSeries dual_series(const WeightGenerator& g, int D);

/// r_lambda^{G(z)} = prod over cells of G(z * content).
TruncatedSeries content_product_series(const WeightGenerator& g, const Partition& lambda, int D);

}  // namespace hw
