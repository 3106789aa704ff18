#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hw/group_algebra.hpp"
#include "hw/hurwitz.hpp"

using namespace hw;

TEST_CASE("permutation basics") {
    Perm p = {1, 2, 0};  // 3-cycle
    Perm q = {1, 0, 2};  // transposition (0 1)
    CHECK(compose(p, inverse(p)) == identity_perm(3));
    CHECK(compose(identity_perm(3), p) == p);
    // p o q acts with q first
    Perm pq = compose(p, q);
    CHECK(pq[0] == p[q[0]]);
    CHECK(cycle_type(p) == Partition({3}));
    CHECK(cycle_type(q) == Partition({2, 1}));
    CHECK(cycle_type(identity_perm(4)) == Partition({1, 1, 1, 1}));
}

TEST_CASE("conjugacy class sizes") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : all_partitions(n)) {
            Rat size = Rat(factorial(n)) / mu.z_order();
            CHECK(Rat(Int(conjugacy_class(mu).size())) == size);
        }
}

TEST_CASE("frobenius count basics") {
    // k=2, (mu, mu) -> 1/z_mu; off-diagonal zero
    for (int n = 2; n <= 4; ++n)
        for (const auto& a : all_partitions(n))
            for (const auto& b : all_partitions(n)) {
                Rat f = frobenius_count({a, b});
                CHECK(f == (a == b ? Rat(1) / a.z_order() : Rat(0)));
            }
    // product of three transpositions in S_2 is odd
    CHECK(frobenius_count({Partition({2}), Partition({2}), Partition({2})}) == 0);
    // single profile: only the identity class contributes
    CHECK(frobenius_count({Partition({1, 1, 1})}) == Rat(1, 6));
    CHECK(frobenius_count({Partition({3})}) == 0);
    CHECK_THROWS_AS(frobenius_count({Partition({2}), Partition({3})}), std::invalid_argument);
}

TEST_CASE("frobenius matches the character formula") {
    for (int n = 2; n <= 4; ++n) {
        auto parts = all_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts)
                    CHECK(frobenius_count({a, b, c}) == hurwitz_classical({a, b, c}));
    }
}

TEST_CASE("cap enforcement") {
    std::vector<int> big(9, 1);
    CHECK_THROWS_AS(frobenius_count({Partition(big)}), CapExceeded);
    CHECK_THROWS_AS(path_signature_table(Partition({3}), kPathCap + 1), CapExceeded);
}

TEST_CASE("path signature counts") {
    // d=0: delta_{mu,nu} with empty signature
    for (const auto& mu : all_partitions(3))
        for (const auto& nu : all_partitions(3))
            CHECK(count_paths_by_signature(mu, nu, Partition()) == (mu == nu ? 1 : 0));
    // one step out of the identity: three transpositions in S_3
    CHECK(count_paths_by_signature(Partition({1, 1, 1}), Partition({2, 1}), Partition({1})) == 3);
    // two steps back to the identity forces a repeated pair (a b)(a b)
    CHECK(count_paths_by_signature(Partition({1, 1, 1}), Partition({1, 1, 1}), Partition({2})) ==
          3);
    CHECK(count_paths_by_signature(Partition({1, 1, 1}), Partition({1, 1, 1}),
                                   Partition({1, 1})) == 0);
}

TEST_CASE("path table consistency") {
    // total over signatures of (signature-lambda count) at fixed nu equals the
    // plain transposition walk count C_nu contribution, independently summed
    for (const auto& mu : all_partitions(4)) {
        auto table = path_signature_table(mu, 2);
        Rat total = 0;
        for (const auto& [key, v] : table) total += v;
        // 6 transpositions in S_4, two free steps
        CHECK(total == 36);
    }
}

TEST_CASE("class multiply against direct convolution") {
    for (int n = 3; n <= 5; ++n) {
        auto parts = all_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                CenterElement ca{n, Basis::CycleSum, {{a, Rat(1)}}};
                CenterElement cb{n, Basis::CycleSum, {{b, Rat(1)}}};
                CenterElement prod = class_multiply(ca, cb);
                // direct convolution
                std::map<Partition, Rat> direct;
                auto cb_class = conjugacy_class(b);
                for (const auto& p : conjugacy_class(a))
                    for (const auto& q : cb_class) direct[cycle_type(compose(p, q))] += 1;
                for (const auto& [t, raw] : direct) {
                    // coefficient per element of the target class
                    Rat size = Rat(factorial(n)) / t.z_order();
                    CHECK(prod.coeff(t) == raw / size);
                }
                for (const auto& [t, c] : prod.coeffs)
                    if (direct.find(t) == direct.end()) CHECK(c == 0);
            }
    }
}

TEST_CASE("n=3 transposition class square") {
    CenterElement c21{3, Basis::CycleSum, {{Partition({2, 1}), Rat(1)}}};
    CenterElement sq = class_multiply(c21, c21);
    CHECK(sq.coeff(Partition({1, 1, 1})) == 3);
    CHECK(sq.coeff(Partition({3})) == 3);
    CHECK(sq.coeff(Partition({2, 1})) == 0);
}

TEST_CASE("jm content eigenvalues") {
    for (int n = 2; n <= 4; ++n) {
        const auto& tab = CharacterTable::get(n);
        for (const auto& lamp : tab.partitions()) {
            CenterElement F = tab.idempotent_from_cycles(lamp);
            std::vector<Rat> contents;
            for (int c : lamp.contents()) contents.emplace_back(c);
            for (int w = 0; w <= 3; ++w)
                for (const auto& lam : all_partitions(w)) {
                    for (auto kind : {SymmetricKind::Monomial, SymmetricKind::Elementary}) {
                        CenterElement out = jm_symmetric_apply(kind, lam, F);
                        Rat eig = kind == SymmetricKind::Monomial
                                      ? monomial_eval(lam, contents)
                                      : elementary_eval(lam, contents);
                        for (const auto& [mu, c] : F.coeffs)
                            CHECK(out.coeff(mu) == eig * c);
                    }
                }
        }
    }
}

TEST_CASE("single jucys-murphy power sums transpositions") {
    // e_(1)(J) C_(1^n) lands entirely on the transposition class
    for (int n = 3; n <= 5; ++n) {
        std::vector<int> ones(n, 1);
        CenterElement id{n, Basis::CycleSum, {{Partition(ones), Rat(1)}}};
        CenterElement out = jm_symmetric_apply(SymmetricKind::Elementary, Partition({1}), id);
        std::vector<int> tr(n - 1, 1);
        tr[0] = 2;
        CHECK(out.coeff(Partition(tr)) == 1);
        CHECK(out.coeffs.size() == 1);
    }
}

TEST_CASE("lemma consistency between jm action and path counts") {
    // coefficient of C_nu in m_lambda(J) C_mu equals
    // (prod lambda_i! / d!) * m~_avg(mu, nu, lambda) * z_nu / z_mu
    for (int n = 3; n <= 4; ++n) {
        auto parts = all_partitions(n);
        for (const auto& mu : parts)
            for (int d = 1; d <= 3; ++d) {
                auto table = path_signature_table(mu, d);
                for (const auto& lam : all_partitions(d)) {
                    CenterElement cmu{n, Basis::CycleSum, {{mu, Rat(1)}}};
                    CenterElement out =
                        jm_symmetric_apply(SymmetricKind::Monomial, lam, cmu);
                    Rat pref = 1;
                    for (int part : lam.parts()) pref *= Rat(factorial(part));
                    pref /= Rat(factorial(static_cast<unsigned>(d)));
                    for (const auto& nu : parts) {
                        auto it = table.find({nu, lam});
                        Rat counts = it == table.end() ? Rat(0) : it->second;
                        CHECK(out.coeff(nu) == pref * counts * nu.z_order() / mu.z_order());
                    }
                }
            }
    }
}

TEST_CASE("elementary jm action equals colength class sums") {
    // e_m(J) C_mu = (sum over classes nu with colength m of C_nu) * C_mu
    for (int n = 3; n <= 4; ++n) {
        auto parts = all_partitions(n);
        for (const auto& mu : parts)
            for (int m = 1; m <= 3; ++m) {
                CenterElement cmu{n, Basis::CycleSum, {{mu, Rat(1)}}};
                CenterElement lhs =
                    jm_symmetric_apply(SymmetricKind::Elementary, Partition({m}), cmu);
                CenterElement acc{n, Basis::CycleSum, {}};
                for (const auto& nu : parts)
                    if (nu.colength() == m) {
                        CenterElement cnu{n, Basis::CycleSum, {{nu, Rat(1)}}};
                        CenterElement term = class_multiply(cnu, cmu);
                        for (const auto& [p, c] : term.coeffs) acc.coeffs[p] += c;
                    }
                for (const auto& p : parts) CHECK(lhs.coeff(p) == acc.coeff(p));
            }
    }
}

TEST_CASE("symmetric function evaluations") {
    std::vector<Rat> v = {Rat(1), Rat(1, 2), Rat(-2)};
    // m_(1) = power sum p_1 on distinct entries
    CHECK(monomial_eval(Partition({1}), v) == Rat(-1, 2));
    // m_(1,1) = e_2
    CHECK(monomial_eval(Partition({1, 1}), v) == elementary_eval(Partition({2}), v));
    // m_(2) + 2 m_(1,1) = p_1^2 ... check via e/m relation e_1^2 = m_(2) + 2 m_(1,1)
    Rat e1 = elementary_eval(Partition({1}), v);
    CHECK(e1 * e1 == monomial_eval(Partition({2}), v) + 2 * monomial_eval(Partition({1, 1}), v));
    // forgotten in one variable: f_lambda(x) = (-1)^{colength} arrangements x^{|lambda|}
    CHECK(forgotten_eval(Partition({2}), {Rat(1)}) == -1);
    CHECK(forgotten_eval(Partition({1, 1}), {Rat(1)}) == 1);
    CHECK(forgotten_eval(Partition({2, 1}), {Rat(1)}) == -2);
    // empty partition evaluates to 1 everywhere
    CHECK(monomial_eval(Partition(), v) == 1);
    CHECK(elementary_eval(Partition(), v) == 1);
    CHECK(forgotten_eval(Partition(), v) == 1);
}
