#include "hw/group_algebra.hpp"

#include "hw/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hw {

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
    return r;
}

Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
    return r;
}

Partition cycle_type(const Perm& p) {
    int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    std::vector<int> cycles;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<>());
    return Partition(std::move(cycles));
}

std::vector<Perm> conjugacy_class(const Partition& mu) {
    static std::mutex mtx;
    static std::map<Partition, std::vector<Perm>> cache;
    std::lock_guard lock(mtx);
    if (auto it = cache.find(mu); it != cache.end()) return it->second;
    int n = mu.weight();
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do {
        if (cycle_type(p) == mu) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    cache[mu] = out;
    return out;
}

int brute_force_cap() {
    if (const char* env = std::getenv("HURWITZ_CAP_N")) return std::atoi(env);
    return 6;
}

Rat frobenius_count(const std::vector<Partition>& profiles) {
    if (profiles.empty()) throw std::invalid_argument("frobenius_count: no profiles");
    int n = profiles[0].weight();
    for (const auto& p : profiles)
        if (p.weight() != n) throw std::invalid_argument("frobenius_count: weight mismatch");
    if (n > brute_force_cap())
        throw CapExceeded("frobenius_count: n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(brute_force_cap()));
    if (n == 0) return 1;

    std::vector<std::vector<Perm>> classes;
    for (std::size_t i = 0; i + 1 < profiles.size(); ++i)
        classes.push_back(conjugacy_class(profiles[i]));
    const Partition& last = profiles.back();

    // Last factor is determined: g_k = (g_1...g_{k-1})^{-1}.
    if (classes.empty()) {
        // k=1: the single factor must itself be the identity.
        bool ok = last == Partition(std::vector<int>(n, 1));
        return ok ? Rat(1) / Rat(factorial(static_cast<unsigned>(n))) : Rat(0);
    }

    auto count_from = [&](const Perm& g0) {
        Int cnt = 0;
        auto rec = [&](auto&& self, std::size_t level, const Perm& acc) -> void {
            if (level == classes.size()) {
                if (cycle_type(inverse(acc)) == last) ++cnt;
                return;
            }
            for (const Perm& g : classes[level]) self(self, level + 1, compose(acc, g));
        };
        rec(rec, 1, g0);
        return cnt;
    };

    std::vector<Int> partial(classes[0].size());
    parallel_for(classes[0].size(), [&](std::size_t i) { partial[i] = count_from(classes[0][i]); });
    Int total = 0;
    for (const Int& c : partial) total += c;
    return Rat(total) / Rat(factorial(static_cast<unsigned>(n)));
}

std::map<std::pair<Partition, Partition>, Rat> path_signature_table(const Partition& mu, int d) {
    int n = mu.weight();
    if (n > brute_force_cap())
        throw CapExceeded("path_signature_table: n exceeds brute-force cap");
    if (d > kPathCap)
        throw CapExceeded("path_signature_table: d exceeds path cap");

    std::vector<std::pair<int, int>> trans;
    for (int b = 1; b < n; ++b)
        for (int a = 0; a < b; ++a) trans.emplace_back(a, b);

    auto start = conjugacy_class(mu);
    using Key = std::pair<Partition, Partition>;
    std::vector<std::map<Key, Int>> partial(start.size());

    parallel_for(start.size(), [&](std::size_t hi) {
        std::vector<int> second_count(n, 0);
        auto rec = [&](auto&& self, const Perm& g, int steps) -> void {
            if (steps == d) {
                std::vector<int> sig;
                for (int b = 1; b < n; ++b)
                    if (second_count[b] > 0) sig.push_back(second_count[b]);
                std::sort(sig.begin(), sig.end(), std::greater<>());
                partial[hi][{cycle_type(g), Partition(std::move(sig))}] += 1;
                return;
            }
            for (auto [a, b] : trans) {
                Perm ng = g;
                // left-multiply by (a b): swap images a and b
                for (std::size_t x = 0; x < ng.size(); ++x) {
                    if (ng[x] == a) ng[x] = b;
                    else if (ng[x] == b) ng[x] = a;
                }
                ++second_count[b];
                self(self, ng, steps + 1);
                --second_count[b];
            }
        };
        rec(rec, start[hi], 0);
    });

    std::map<Key, Rat> out;
    Rat cls(static_cast<Int>(start.size()));
    for (const auto& m : partial)
        for (const auto& [k, v] : m) out[k] += Rat(v) / cls;
    return out;
}

Rat count_paths_by_signature(const Partition& mu, const Partition& nu, const Partition& lambda) {
    if (mu.weight() != nu.weight())
        throw std::invalid_argument("count_paths_by_signature: |mu| != |nu|");
    auto table = path_signature_table(mu, lambda.weight());
    auto it = table.find({nu, lambda});
    return it == table.end() ? Rat(0) : it->second;
}

CenterElement class_multiply(const CenterElement& a, const CenterElement& b) {
    if (a.n != b.n) throw std::invalid_argument("class_multiply: mismatched n");
    const auto& tab = CharacterTable::get(a.n);
    CenterElement fa = tab.to_idempotent_basis(a);
    CenterElement fb = tab.to_idempotent_basis(b);
    CenterElement prod{a.n, Basis::Idempotent, {}};
    for (const auto& [lam, ca] : fa.coeffs) {
        Rat cb = fb.coeff(lam);
        if (ca != 0 && cb != 0) prod.coeffs[lam] = ca * cb;
    }
    return tab.to_cycle_basis(prod);
}

namespace {

using GAElement = std::map<Perm, Rat>;

GAElement ga_mul(const GAElement& x, const GAElement& y) {
    GAElement r;
    for (const auto& [p, a] : x)
        for (const auto& [q, b] : y) r[compose(p, q)] += a * b;
    return r;
}

GAElement jm_element(int n, int b) {
    // J_b = sum_{a<b} (a b); J_0 = 0.
    GAElement e;
    for (int a = 0; a < b; ++a) {
        Perm p = identity_perm(n);
        std::swap(p[a], p[b]);
        e[p] = 1;
    }
    return e;
}

GAElement ga_one(int n) { return {{identity_perm(n), Rat(1)}}; }

GAElement ga_pow(const GAElement& x, int e, int n) {
    GAElement r = ga_one(n);
    for (int i = 0; i < e; ++i) r = ga_mul(r, x);
    return r;
}

GAElement ga_add(GAElement x, const GAElement& y) {
    for (const auto& [p, c] : y) x[p] += c;
    return x;
}

// m_lambda(J_1..J_n): one term per distinct monomial in distinct variables.
// Variables with index 0 are skipped since J_1 = 0.
GAElement monomial_jm(int n, const Partition& lambda) {
    int k = lambda.length();
    GAElement total;
    if (k == 0) return ga_one(n);
    if (k > n - 1) return {};
    std::vector<int> idx(k);  // choose k distinct b's from 1..n-1
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 1);
    auto next_comb = [&]() {
        int i = k - 1;
        while (i >= 0 && comb[i] == n - 1 - (k - 1 - i)) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    do {
        std::vector<int> arr(lambda.parts().rbegin(), lambda.parts().rend());
        do {  // distinct arrangements of the parts over the chosen variables
            GAElement term = ga_one(n);
            for (int i = 0; i < k; ++i) term = ga_mul(term, ga_pow(jm_element(n, comb[i]), arr[i], n));
            total = ga_add(std::move(total), term);
        } while (std::next_permutation(arr.begin(), arr.end()));
    } while (next_comb());
    return total;
}

GAElement elementary_jm(int n, int m) {
    // e_m(J) = sum_{b_1<...<b_m} J_{b_1}...J_{b_m}, b's from 1..n-1.
    if (m == 0) return ga_one(n);
    if (m > n - 1) return {};
    GAElement total;
    std::vector<int> comb(m);
    std::iota(comb.begin(), comb.end(), 1);
    auto next_comb = [&]() {
        int i = m - 1;
        while (i >= 0 && comb[i] == n - 1 - (m - 1 - i)) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    do {
        GAElement term = ga_one(n);
        for (int b : comb) term = ga_mul(term, jm_element(n, b));
        total = ga_add(std::move(total), term);
    } while (next_comb());
    return total;
}

}  // namespace

CenterElement jm_symmetric_apply(SymmetricKind kind, const Partition& lambda,
                                 const CenterElement& target) {
    int n = target.n;
    if (n > brute_force_cap()) throw CapExceeded("jm_symmetric_apply: n exceeds cap");
    if (lambda.weight() > kPathCap) throw CapExceeded("jm_symmetric_apply: |lambda| exceeds cap");

    const auto& tab = CharacterTable::get(n);
    CenterElement tgt = target.basis == Basis::CycleSum ? target : tab.to_cycle_basis(target);

    GAElement op;
    if (kind == SymmetricKind::Monomial) {
        op = monomial_jm(n, lambda);
    } else {
        op = ga_one(n);
        for (int part : lambda.parts()) op = ga_mul(op, elementary_jm(n, part));
    }

    GAElement tgt_ga;
    for (const auto& [mu, c] : tgt.coeffs)
        for (const Perm& p : conjugacy_class(mu)) tgt_ga[p] = c;

    GAElement prod = ga_mul(op, tgt_ga);

    // Collapse to cycle-sum coefficients; the result is central so the
    // coefficient is constant on each class.
    CenterElement out{n, Basis::CycleSum, {}};
    std::map<Partition, Rat> rep;
    for (const auto& [p, c] : prod) {
        Partition t = cycle_type(p);
        auto it = rep.find(t);
        if (it == rep.end()) {
            rep[t] = c;
        } else if (it->second != c) {
            throw std::logic_error("jm_symmetric_apply: non-central product");
        }
    }
    for (auto& [t, c] : rep)
        if (c != 0) out.coeffs[t] = c;
    return out;
}

Rat monomial_eval(const Partition& lambda, const std::vector<Rat>& values) {
    int k = lambda.length();
    if (k == 0) return 1;
    int m = static_cast<int>(values.size());
    if (k > m) return 0;
    Rat total = 0;
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    auto next_comb = [&]() {
        int i = k - 1;
        while (i >= 0 && comb[i] == m - 1 - (k - 1 - i)) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    do {
        std::vector<int> arr(lambda.parts().rbegin(), lambda.parts().rend());
        do {
            Rat t = 1;
            for (int i = 0; i < k; ++i) {
                Rat p = 1;
                for (int e = 0; e < arr[i]; ++e) p *= values[comb[i]];
                t *= p;
            }
            total += t;
        } while (std::next_permutation(arr.begin(), arr.end()));
    } while (next_comb());
    return total;
}

Rat elementary_eval(const Partition& lambda, const std::vector<Rat>& values) {
    // e_m via the generating product prod (1 + x_i t).
    int maxm = lambda.empty() ? 0 : lambda.parts()[0];
    std::vector<Rat> e(maxm + 1);
    e[0] = 1;
    for (const Rat& x : values)
        for (int j = maxm; j >= 1; --j) e[j] += e[j - 1] * x;
    Rat r = 1;
    for (int part : lambda.parts()) r *= e[part];
    return r;
}

Rat forgotten_eval(const Partition& lambda, const std::vector<Rat>& values) {
    // f_lambda = (-1)^{l*} / |aut| * sum_{sigma} sum_{i_1<=...<=i_k} prod x^{lambda}.
    // Summing over distinct arrangements absorbs the 1/|aut|.
    int k = lambda.length();
    if (k == 0) return 1;
    int m = static_cast<int>(values.size());
    if (m == 0) return 0;
    Rat total = 0;
    std::vector<int> arr(lambda.parts().rbegin(), lambda.parts().rend());
    do {
        // weakly increasing index tuples
        std::vector<int> idx(k, 0);
        auto rec = [&](auto&& self, int pos, int lo, Rat acc) -> void {
            if (pos == k) {
                total += acc;
                return;
            }
            for (int i = lo; i < m; ++i) {
                Rat p = 1;
                for (int e = 0; e < arr[pos]; ++e) p *= values[i];
                self(self, pos + 1, i, acc * p);
            }
        };
        rec(rec, 0, 0, Rat(1));
    } while (std::next_permutation(arr.begin(), arr.end()));
    return lambda.colength() % 2 == 0 ? total : -total;
}

}  // namespace hw
