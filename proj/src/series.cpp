#include "hw/series.hpp"

#include <stdexcept>

namespace hw {

TruncatedSeries::TruncatedSeries(int degree_cap, std::vector<Rat> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(degree_cap + 1);
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    int d = std::min(degree_cap(), o.degree_cap());
    TruncatedSeries r(d);
    for (int i = 0; i <= d; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    int d = std::min(degree_cap(), o.degree_cap());
    TruncatedSeries r(d);
    for (int i = 0; i <= d; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int d = std::min(degree_cap(), o.degree_cap());
    TruncatedSeries r(d);
    for (int i = 0; i <= d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; i + j <= d; ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (coeffs_[0] == 0)
        throw std::domain_error("TruncatedSeries::reciprocal: zero constant term");
    int d = degree_cap();
    TruncatedSeries r(d);
    r.coeffs_[0] = Rat(1) / coeffs_[0];
    for (int k = 1; k <= d; ++k) {
        Rat s = 0;
        for (int j = 1; j <= k; ++j) s += coeffs_[j] * r.coeffs_[k - j];
        r.coeffs_[k] = -s / coeffs_[0];
    }
    return r;
}

TruncatedSeries TruncatedSeries::rescale(const Rat& c) const {
    int d = degree_cap();
    TruncatedSeries r(d);
    Rat p = 1;
    for (int i = 0; i <= d; ++i) {
        r.coeffs_[i] = coeffs_[i] * p;
        p *= c;
    }
    return r;
}

}  // namespace hw
