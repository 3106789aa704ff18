#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hw/characters.hpp"
#include "hw/group_algebra.hpp"

#include <map>

using namespace hw;

namespace {

// Independent character oracle via the Frobenius formula: chi_lambda(mu) is
// the coefficient of x^{lambda + delta} in a_delta(x) * p_mu(x), delta =
// (n-1, ..., 1, 0), computed with exact polynomial arithmetic in n variables.
Rat frobenius_formula_char(const Partition& lambda, const Partition& mu) {
    int n = lambda.weight();
    int nv = n;  // number of variables = number of rows allowed
    using Monomial = std::vector<int>;
    std::map<Monomial, Rat> poly;
    // Vandermonde a_delta = sum over permutations sgn(s) prod x_i^{delta_{s(i)}}
    {
        std::vector<int> delta(nv);
        for (int i = 0; i < nv; ++i) delta[i] = nv - 1 - i;
        Perm s = identity_perm(nv);
        do {
            int inv = 0;
            for (int i = 0; i < nv; ++i)
                for (int j = i + 1; j < nv; ++j)
                    if (s[i] > s[j]) ++inv;
            Monomial m(nv);
            for (int i = 0; i < nv; ++i) m[i] = delta[s[i]];
            poly[m] += (inv % 2 == 0) ? 1 : -1;
        } while (std::next_permutation(s.begin(), s.end()));
    }
    // multiply by p_{mu_i} = sum_j x_j^{mu_i}, one part at a time
    for (int part : mu.parts()) {
        std::map<Monomial, Rat> next;
        for (const auto& [m, c] : poly)
            for (int j = 0; j < nv; ++j) {
                Monomial t = m;
                t[j] += part;
                next[t] += c;
            }
        poly = std::move(next);
    }
    Monomial target(nv);
    for (int i = 0; i < nv; ++i) {
        int li = i < lambda.length() ? lambda.parts()[i] : 0;
        target[i] = li + (nv - 1 - i);
    }
    auto it = poly.find(target);
    return it == poly.end() ? Rat(0) : it->second;
}

}  // namespace

TEST_CASE("special rows") {
    for (int n = 1; n <= 6; ++n) {
        Partition triv({n});
        std::vector<int> ones(n, 1);
        Partition sign(ones);
        for (const auto& mu : all_partitions(n)) {
            CHECK(character(triv, mu) == 1);
            CHECK(character(sign, mu) == (mu.colength() % 2 == 0 ? 1 : -1));
        }
    }
    CHECK(character(Partition({2, 1}), Partition({3})) == -1);
}

TEST_CASE("weight mismatch rejected") {
    CHECK_THROWS_AS(character(Partition({2}), Partition({3})), std::invalid_argument);
    CHECK_THROWS_AS(CharacterTable::get(0), std::out_of_range);
    CHECK_THROWS_AS(CharacterTable::get(11), std::out_of_range);
}

TEST_CASE("frobenius formula oracle") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lam : all_partitions(n))
            for (const auto& mu : all_partitions(n))
                CHECK(character(lam, mu) == frobenius_formula_char(lam, mu));
}

TEST_CASE("dimension column") {
    for (int n = 1; n <= 8; ++n) {
        const auto& tab = CharacterTable::get(n);
        std::vector<int> ones(n, 1);
        Partition id(ones);
        for (const auto& lam : tab.partitions()) {
            Rat dim = Rat(factorial(n)) / lam.hook_product();
            CHECK(tab.chi(lam, id) == dim);
            CHECK(dim > 0);
        }
    }
}

TEST_CASE("row and column orthogonality") {
    for (int n = 1; n <= 8; ++n) {
        const auto& tab = CharacterTable::get(n);
        const auto& parts = tab.partitions();
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a; b < parts.size(); ++b) {
                Rat row = 0, col = 0;
                for (std::size_t m = 0; m < parts.size(); ++m) {
                    row += tab.chi(a, m) * tab.chi(b, m) / parts[m].z_order();
                    col += tab.chi(m, a) * tab.chi(m, b);
                }
                CHECK(row == (a == b ? Rat(1) : Rat(0)));
                CHECK(col == (a == b ? parts[a].z_order() : Rat(0)));
            }
    }
}

TEST_CASE("basis change round trips") {
    // n=2: F_(2) = (C_(1,1) + C_(2))/2
    {
        const auto& tab = CharacterTable::get(2);
        auto f = tab.idempotent_from_cycles(Partition({2}));
        CHECK(f.coeff(Partition({1, 1})) == Rat(1, 2));
        CHECK(f.coeff(Partition({2})) == Rat(1, 2));
    }
    // n=1: F_(1) = C_(1)
    {
        const auto& tab = CharacterTable::get(1);
        auto f = tab.idempotent_from_cycles(Partition({1}));
        CHECK(f.coeff(Partition({1})) == 1);
    }
    for (int n = 1; n <= 6; ++n) {
        const auto& tab = CharacterTable::get(n);
        for (const auto& lam : tab.partitions()) {
            CenterElement unit{n, Basis::Idempotent, {{lam, Rat(1)}}};
            auto round = tab.to_idempotent_basis(tab.to_cycle_basis(unit));
            CHECK(round.coeff(lam) == 1);
            for (const auto& [p, c] : round.coeffs)
                CHECK(c == (p == lam ? Rat(1) : Rat(0)));
        }
        for (const auto& mu : tab.partitions()) {
            CenterElement unit{n, Basis::CycleSum, {{mu, Rat(1)}}};
            auto viaF = tab.cycles_from_idempotents(mu);
            CHECK(tab.to_idempotent_basis(unit).coeffs == viaF.coeffs);
            auto back = tab.to_cycle_basis(viaF);
            for (const auto& [p, c] : back.coeffs)
                CHECK(c == (p == mu ? Rat(1) : Rat(0)));
        }
    }
}

TEST_CASE("idempotents project orthogonally under convolution") {
    // F_lambda * F_mu = delta F_lambda with the product taken literally in
    // the group algebra, not via the eigenvalue shortcut.
    for (int n = 2; n <= 5; ++n) {
        const auto& tab = CharacterTable::get(n);
        auto expand = [&](const CenterElement& x) {
            std::map<Perm, Rat> ga;
            for (const auto& [mu, c] : x.coeffs)
                if (c != 0)
                    for (const auto& p : conjugacy_class(mu)) ga[p] = c;
            return ga;
        };
        std::vector<std::map<Perm, Rat>> idem;
        for (const auto& lam : tab.partitions())
            idem.push_back(expand(tab.idempotent_from_cycles(lam)));
        for (std::size_t a = 0; a < idem.size(); ++a)
            for (std::size_t b = a; b < idem.size(); ++b) {
                std::map<Perm, Rat> prod;
                for (const auto& [p, cp] : idem[a])
                    for (const auto& [q, cq] : idem[b]) prod[compose(p, q)] += cp * cq;
                const auto& expect = (a == b) ? idem[a] : std::map<Perm, Rat>{};
                for (const auto& [p, c] : prod) {
                    auto it = expect.find(p);
                    CHECK(c == (it == expect.end() ? Rat(0) : it->second));
                }
            }
    }
}
