#include "hw/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hw {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int i) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0]);
    for (int j = 0; j < parts_[0]; ++j)
        conj[j] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                                 [j](int p) { return p > j; }));
    return Partition(std::move(conj));
}

std::vector<int> Partition::contents() const {
    std::vector<int> out;
    out.reserve(weight());
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (int j = 0; j < parts_[i]; ++j)
            out.push_back(j - static_cast<int>(i));
    return out;
}

Rat Partition::z_order() const {
    Int r = 1;
    int run = 0;
    int prev = 0;
    auto flush = [&] {
        if (run > 0) {
            for (int k = 0; k < run; ++k) r *= prev;
            r *= factorial(static_cast<unsigned>(run));
        }
    };
    for (int p : parts_) {
        if (p == prev) {
            ++run;
        } else {
            flush();
            prev = p;
            run = 1;
        }
    }
    flush();
    return Rat(r);
}

Rat Partition::hook_product() const {
    Partition conj = conjugate();
    Int r = 1;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (int j = 0; j < parts_[i]; ++j) {
            int arm = parts_[i] - j - 1;
            int leg = conj.parts()[j] - static_cast<int>(i) - 1;
            r *= (arm + leg + 1);
        }
    return Rat(r);
}

Rat Partition::aut_order() const {
    Int r = 1;
    int run = 0;
    int prev = 0;
    for (int p : parts_) {
        if (p == prev) {
            ++run;
        } else {
            r *= factorial(static_cast<unsigned>(run));
            prev = p;
            run = 1;
        }
    }
    r *= factorial(static_cast<unsigned>(run));
    return Rat(r);
}

std::vector<Partition> all_partitions(int n) {
    if (n < 0) throw std::invalid_argument("all_partitions: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::size_t canonical_index(const Partition& mu) {
    auto list = all_partitions(mu.weight());
    for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i] == mu) return i;
    throw std::logic_error("canonical_index: partition not found");
}

}  // namespace hw
