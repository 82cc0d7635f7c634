#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "defcalc/halfplane.hpp"
#include "defcalc/index_calculus.hpp"

using namespace defcalc;

namespace {
const ExtendedCount INF = ExtendedCount::infinity();
}

TEST_CASE("extended arithmetic is total and absorbing") {
    CHECK(ExtendedCount(2) + ExtendedCount(3) == ExtendedCount(5));
    CHECK((ExtendedCount(3) + INF).is_infinite());
    CHECK((INF + INF).is_infinite());
    CHECK(ExtendedCount(1) < INF);
    CHECK(INF == INF);
    CHECK(2 * INF == INF);
    CHECK(0 * INF == ExtendedCount(0));
    CHECK_THROWS_AS(INF.value(), std::domain_error);
}

TEST_CASE("product defect numbers add") {
    CHECK(product_defect(1, 1) == ExtendedCount(2));
    CHECK(product_defect(0, 0) == ExtendedCount(0));
    CHECK(product_defect(3, INF) == INF);
}

TEST_CASE("even powers: n+- = k (n+ + n-)") {
    CHECK(even_power_indices({1, 1}, 1) == DefectPair{2, 2});
    CHECK(even_power_indices({0, 0}, 5) == DefectPair{0, 0});
    CHECK(even_power_indices({2, 3}, 2) == DefectPair{10, 10});
    CHECK_THROWS_AS(even_power_indices({1, 1}, 0), std::invalid_argument);
}

TEST_CASE("odd powers: n+- = k (n+ + n-) + n+-") {
    CHECK(odd_power_indices({1, 0}, 1) == DefectPair{2, 1});
    CHECK(odd_power_indices({0, 0}, 3) == DefectPair{0, 0});
    CHECK(odd_power_indices({1, 1}, 1) == DefectPair{3, 3});
    CHECK_THROWS_AS(odd_power_indices({1, 1}, 0), std::invalid_argument);
}

TEST_CASE("power dispatch") {
    CHECK(power_indices({2, 2}, 3) == DefectPair{6, 6});
    CHECK(power_indices({1, 1}, 1) == DefectPair{1, 1});
    CHECK(power_indices({1, 0}, 4) == DefectPair{2, 2});
    CHECK_THROWS_AS(power_indices({1, 1}, 0), std::invalid_argument);
}

TEST_CASE("polynomial indices reduce to the top-degree power") {
    CHECK(polynomial_indices({1, 1}, RealPolynomial({3, 5, 1})) == DefectPair{2, 2});
    CHECK(polynomial_indices({1, 0}, RealPolynomial({0, 1})) == DefectPair{1, 0});
    CHECK(polynomial_indices({1, 0}, RealPolynomial({0, -1, 0, 1})) == DefectPair{2, 1});
    // negative leading coefficient swaps the pair
    CHECK(polynomial_indices({1, 0}, RealPolynomial({0, -1})) == DefectPair{0, 1});
    CHECK_THROWS_AS(RealPolynomial({5}), std::invalid_argument);
    CHECK_THROWS_AS(RealPolynomial({0, 0}), std::invalid_argument);
}

TEST_CASE("direct sums add componentwise") {
    CHECK(direct_sum_indices({{1, 1}, {1, 1}, {0, 0}}) == DefectPair{2, 2});
    CHECK(direct_sum_indices({}) == DefectPair{0, 0});
    CHECK(direct_sum_indices({{1, 1}, {INF, INF}}) == DefectPair{INF, INF});
}

TEST_CASE("fredholm index and product law") {
    CHECK(fredholm_index({FredholmKind::fredholm, 0, 3}) == SignedExtended(-3));
    CHECK(fredholm_index({FredholmKind::fredholm, 0, 0}) == SignedExtended(0));
    CHECK(index_of_product(fredholm_index({FredholmKind::fredholm, 0, 1}),
                           fredholm_index({FredholmKind::fredholm, 0, 1})) ==
          SignedExtended(-2));
    CHECK_THROWS_AS(fredholm_index({FredholmKind::none, 0, 0}), std::invalid_argument);
    CHECK(fredholm_index({FredholmKind::left_semi, 2, INF}) ==
          SignedExtended::minus_infinity());
    CHECK_THROWS_AS(index_of_product(SignedExtended::plus_infinity(),
                                     SignedExtended::minus_infinity()),
                    std::domain_error);
    // kind constraints
    CHECK_THROWS_AS(fredholm_index({FredholmKind::fredholm, INF, 0}), std::invalid_argument);
}

TEST_CASE("even powers always produce equal indices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::uint64_t> small(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        DefectPair p{small(rng), small(rng)};
        const auto k = 1 + small(rng);
        CHECK(even_power_indices(p, k).equal_indices());
    }
}

TEST_CASE("equal-index pairs scale linearly under any power") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<std::uint64_t> small(0, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t n = small(rng);
        const std::uint64_t m = 1 + small(rng);
        CHECK(power_indices({n, n}, m) == DefectPair{m * n, m * n});
    }
}

TEST_CASE("odd powers preserve the index imbalance") {
    std::mt19937 rng(999);
    std::uniform_int_distribution<std::uint64_t> small(0, 6);
    for (int trial = 0; trial < 200; ++trial) {
        DefectPair p{small(rng), small(rng)};
        const auto k = 1 + small(rng);
        const DefectPair q = odd_power_indices(p, k);
        const auto im_before = static_cast<std::int64_t>(p.n_plus.value()) -
                               static_cast<std::int64_t>(p.n_minus.value());
        const auto im_after = static_cast<std::int64_t>(q.n_plus.value()) -
                              static_cast<std::int64_t>(q.n_minus.value());
        CHECK(im_before == im_after);
    }
}

namespace {

/// Brute-force power indices through half-plane root counts of t^m -+ i:
/// every root in the lower half-plane contributes n+, every root in the upper
/// half-plane contributes n- (the defect number is locally constant on each
/// half-plane of the regularity field).
DefectPair oracle_power_indices(const DefectPair& p, int m) {
    std::vector<double> mono(static_cast<std::size_t>(m) + 1, 0.0);
    mono.back() = 1.0;
    const RealPolynomial tm{mono};
    const auto hp_minus = halfplane_counts(tm, 1.0, EpsilonSign::minus);
    const auto hp_plus = halfplane_counts(tm, 1.0, EpsilonSign::plus);
    const std::uint64_t a = p.n_plus.value(), b = p.n_minus.value();
    return {static_cast<std::uint64_t>(hp_minus.in_lower) * a +
                static_cast<std::uint64_t>(hp_minus.in_upper) * b,
            static_cast<std::uint64_t>(hp_plus.in_lower) * a +
                static_cast<std::uint64_t>(hp_plus.in_upper) * b};
}

}  // namespace

TEST_CASE("extended arithmetic is associative and commutative") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> pick(0, 7);
    auto draw = [&]() {
        const int v = pick(rng);
        return v == 7 ? INF : ExtendedCount(static_cast<std::uint64_t>(v));
    };
    for (int trial = 0; trial < 300; ++trial) {
        const ExtendedCount a = draw(), b = draw(), c = draw();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a + INF).is_infinite());
    }
}

TEST_CASE("closed-form power indices agree with the half-plane root oracle") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<std::uint64_t> small(0, 4);
    for (int m = 1; m <= 8; ++m) {
        for (int trial = 0; trial < 12; ++trial) {
            DefectPair p{small(rng), small(rng)};
            CHECK(power_indices(p, static_cast<std::uint64_t>(m)) ==
                  oracle_power_indices(p, m));
        }
    }
}
