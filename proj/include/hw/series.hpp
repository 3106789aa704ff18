#pragma once

#include "hw/rational.hpp"

#include <vector>

namespace hw {

/// Polynomial in one expansion variable modulo z^{D+1}, exact coefficients.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int degree_cap) : coeffs_(degree_cap + 1) {}
    TruncatedSeries(int degree_cap, std::vector<Rat> coeffs);

    static TruncatedSeries one(int degree_cap) {
        TruncatedSeries s(degree_cap);
        s.coeffs_[0] = 1;
        return s;
    }

    int degree_cap() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int i) const { return coeffs_.at(i); }
    Rat& coeff(int i) { return coeffs_.at(i); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;

    /// Multiplicative inverse mod z^{D+1}; requires coeff(0) != 0.
    TruncatedSeries reciprocal() const;

    /// Substitution z -> c*z.
    TruncatedSeries rescale(const Rat& c) const;

    /// Substitution z -> -z.
    TruncatedSeries negate_variable() const { return rescale(-1); }

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Rat> coeffs_;
};

}  // namespace hw
