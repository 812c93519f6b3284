#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macref/partition.hpp"

using namespace macref;

namespace {

// brute-force partition count oracle: p(n) via restricted counts
long count_partitions(int n, int maxpart) {
    if (n == 0) return 1;
    if (n < 0 || maxpart == 0) return 0;
    return count_partitions(n - maxpart, maxpart) + count_partitions(n, maxpart - 1);
}

RatFunc q_pow(int a) { return RatFunc::monomial(VQ, a); }
RatFunc t_pow(int a) { return RatFunc::monomial(VT, a); }

} // namespace

TEST_CASE("enumerate") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].is_empty());

    auto p2 = partitions_of(2);
    REQUIRE(p2.size() == 2);
    CHECK(p2[0] == Partition({2}));
    CHECK(p2[1] == Partition({1, 1}));

    // classical count p(5) = 7, cross-checked against an independent oracle
    CHECK(count_partitions(5, 5) == 7);
    CHECK(partitions_of(5).size() == 7);
    for (int n = 0; n <= 9; ++n)
        CHECK(static_cast<long>(partitions_of(n).size()) == count_partitions(n, n));

    // deterministic reverse-lexicographic order: (n) first, (1^n) last
    auto p4 = partitions_of(4);
    CHECK(p4.front() == Partition({4}));
    CHECK(p4.back() == Partition({1, 1, 1, 1}));
}

TEST_CASE("arm and leg statistics") {
    Partition one({1});
    CHECK(one.arm_leg(0, 0) == std::tuple<int, int, int, int>{0, 0, 0, 0});

    Partition p21({2, 1});
    CHECK(p21.arm_leg(0, 0) == std::tuple<int, int, int, int>{1, 1, 0, 0});

    Partition p3({3});
    CHECK(p3.arm_leg(1, 0) == std::tuple<int, int, int, int>{1, 0, 1, 0});

    CHECK_THROWS_AS(p3.arm_leg(3, 0), box_outside_diagram_error);
    CHECK_THROWS_AS(p3.arm_leg(0, 1), box_outside_diagram_error);
}

TEST_CASE("partition statistics identities") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& p : partitions_of(n)) {
            auto st = partition_stats(p);
            CHECK(st.norm_sq == 2 * st.n_transpose + st.size);
            CHECK(st.kappa == 2 * (st.n_transpose - st.n));
            CHECK(st.transpose.transpose() == p);
            // n(λ) = Σ l'(s) = Σ l(s)
            long sum_lp = 0, sum_l = 0;
            for (auto [c, r] : p.boxes()) {
                auto [a, l, ap, lp] = p.arm_leg(c, r);
                (void)a;
                (void)ap;
                sum_lp += lp;
                sum_l += l;
            }
            CHECK(st.n == sum_lp);
            CHECK(st.n == sum_l);
            // n(λ^t) = Σ a'(s) = Σ a(s)
            long sum_ap = 0, sum_a = 0;
            for (auto [c, r] : p.boxes()) {
                auto [a, l, ap, lp] = p.arm_leg(c, r);
                (void)l;
                (void)lp;
                sum_ap += ap;
                sum_a += a;
            }
            CHECK(st.n_transpose == sum_ap);
            CHECK(st.n_transpose == sum_a);
        }
    }
}

TEST_CASE("box generating functions") {
    auto [B0, A0] = box_generating(Partition::empty());
    CHECK(B0.is_zero());
    CHECK(A0 == RatFunc::one());

    auto [B1, A1] = box_generating(Partition({1}));
    CHECK(B1 == RatFunc::one());
    CHECK(A1 == q_pow(1) + t_pow(1) - q_pow(1) * t_pow(1));

    auto [B2, A2] = box_generating(Partition({2}));
    CHECK(B2 == RatFunc::one() + q_pow(1));
    CHECK(A2 == RatFunc::one() - (RatFunc::one() - q_pow(1)) * (RatFunc::one() - t_pow(1)) *
                                     (RatFunc::one() + q_pow(1)));
}

TEST_CASE("B symmetry and specialization") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& p : partitions_of(n)) {
            auto [B, A] = box_generating(p);
            auto [Bt, At] = box_generating(p.transpose());
            std::map<int, RatFunc> swap_qt{{VQ, t_pow(1)}, {VT, q_pow(1)}};
            CHECK(substitute(Bt, swap_qt) == B);
            CHECK(substitute(At, swap_qt) == A);
            // q = t = 1 gives |λ|
            std::map<int, RatFunc> ones{{VQ, RatFunc::one()}, {VT, RatFunc::one()}};
            CHECK(substitute(B, ones) == RatFunc(n));
        }
    }
}

TEST_CASE("hook products") {
    auto [c1, cp1] = hook_products(Partition({1}));
    CHECK(c1 == RatFunc::one() - t_pow(1));
    CHECK(cp1 == RatFunc::one() - q_pow(1));

    auto [c2, cp2] = hook_products(Partition({2}));
    CHECK(c2 == (RatFunc::one() - q_pow(1) * t_pow(1)) * (RatFunc::one() - t_pow(1)));
    CHECK(cp2 == (RatFunc::one() - q_pow(2)) * (RatFunc::one() - q_pow(1)));

    auto [c11, cp11] = hook_products(Partition({1, 1}));
    CHECK(c11 == (RatFunc::one() - t_pow(2)) * (RatFunc::one() - t_pow(1)));
    CHECK(cp11 == (RatFunc::one() - q_pow(1) * t_pow(1)) * (RatFunc::one() - q_pow(1)));

    // c'_λ(q,t) = c_{λ^t}(t,q) for all |λ| ≤ 8
    for (int n = 0; n <= 8; ++n) {
        for (const auto& p : partitions_of(n)) {
            auto [c, cp] = hook_products(p);
            auto [ct, cpt] = hook_products(p.transpose());
            std::map<int, RatFunc> swap_qt{{VQ, t_pow(1)}, {VT, q_pow(1)}};
            CHECK(cp == substitute(ct, swap_qt));
            (void)cpt;
        }
    }
}

TEST_CASE("strip full columns") {
    CHECK(Partition({2, 1}).strip_full_columns(3) == Partition({2, 1}));
    CHECK(Partition({3, 1}).strip_full_columns(2) == Partition({2}));
    CHECK(Partition({1, 1}).strip_full_columns(2) == Partition::empty());
    CHECK_THROWS_AS(Partition({1, 1, 1}).strip_full_columns(2), too_many_rows_error);
    // l(result) < N whenever l(λ) = N
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : partitions_of(n))
            for (int N = p.length(); N <= p.length() + 1; ++N)
                CHECK(p.strip_full_columns(N).length() < std::max(N, p.length() + 1));
}

TEST_CASE("dominance order") {
    CHECK(Partition::dominated_by(Partition({1, 1}), Partition({2})));
    CHECK(!Partition::dominated_by(Partition({2}), Partition({1, 1})));
    CHECK(Partition::dominated_by(Partition({2, 2}), Partition({3, 1})));
    CHECK(!Partition::dominated_by(Partition({3, 1}), Partition({2, 2})));
    // incomparable pair at n = 6
    CHECK(!Partition::dominated_by(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
    CHECK(!Partition::dominated_by(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
}
