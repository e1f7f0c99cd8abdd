#include <doctest.h>

#include "opmult/ass.hpp"
#include "opmult/gv_algebra.hpp"
#include "opmult/permutation.hpp"

#include "oracles.hpp"

using namespace opmult;

namespace {

Permutation P(std::vector<unsigned> w) { return Permutation(std::move(w)); }

const auto ass = make_ass_operad();
const auto perm = make_perm_operad();

FormalSum<AssElement> E(std::size_t n, long c = 1) { return basis_sum(ass, AssElement{n}, c); }
FormalSum<Permutation> S(std::vector<unsigned> w, long c = 1) { return basis_sum(perm, P(std::move(w)), c); }

} // namespace

TEST_CASE("circle closed forms on Ass units")
{
    CHECK(circle(ass, E(2), E(2)).is_zero());
    CHECK(circle(ass, E(3), E(2)) == E(4));
    CHECK(circle(ass, E(2), E(3)) == E(4, 2));
    CHECK(circle(ass, E(0), E(3)).is_zero());
    // Same values inside the permutation operad.
    CHECK(circle(perm, basis_sum(perm, ass_unit(perm, 2)), basis_sum(perm, ass_unit(perm, 3))) ==
          basis_sum(perm, ass_unit(perm, 4), 2));
}

TEST_CASE("circle on perm matches search-oracle insertions")
{
    for (std::size_t m = 1; m <= 3; ++m)
        for (std::size_t n = 1; n <= 3; ++n)
            for (const auto& x : enumerate_sn(m))
                for (const auto& y : enumerate_sn(n)) {
                    FormalSum<Permutation> expected(m + n - 1);
                    for (std::size_t i = 0; i < m; ++i) {
                        const auto w = oracle::insert_by_search(x.word(), i, y.word());
                        REQUIRE(w);
                        expected.add_term(P(*w), (n + 1) * i % 2 == 0 ? 1 : -1);
                    }
                    CHECK(circle(perm, basis_sum(perm, x), basis_sum(perm, y)) == expected);
                }
}

TEST_CASE("bracket")
{
    CHECK(bracket(ass, E(2), E(2)).is_zero());
    for (const auto& x : enumerate_sn(3))
        CHECK(bracket(perm, basis_sum(perm, x), basis_sum(perm, x)).is_zero());
    // [1, y] = 1 o y - y o 1 = y - sum_i (-1)^{2i} y = (1 - n) y.
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto& y : enumerate_sn(n)) {
            const auto yy = basis_sum(perm, y);
            CHECK(circle(perm, S({1}), yy) == yy);
            CHECK(circle(perm, yy, S({1})) == basis_sum(perm, y, static_cast<long>(n)));
            CHECK(bracket(perm, S({1}), yy) == basis_sum(perm, y, 1 - static_cast<long>(n)));
        }
}

TEST_CASE("differentials")
{
    CHECK(differential(perm, S({1})) == S({1, 2}));
    CHECK(differential(perm, basis_sum(perm, Permutation())).is_zero());
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(differential(ass, E(n)) == (n % 2 ? E(n + 1) : FormalSum<AssElement>()));
        if (n >= 1)
            CHECK(codifferential(ass, E(n)) == (n % 2 ? E(n - 1) : FormalSum<AssElement>()));
    }
    IdentityConfig cfg;
    CHECK(check_unit_differentials(perm, 6).passed());
    CHECK(check_d_squared(perm, 5).passed());
    CHECK(check_d_squared(ass, 8).passed());
}

TEST_CASE("linear dot")
{
    CHECK(dot_linear(perm, S({1}), S({1})) == S({1, 2}));
    CHECK(dot_linear(perm, S({2, 1}), S({1})) == S({2, 1, 3}));
    for (std::size_t n = 0; n <= 3; ++n)
        for (std::size_t m = 0; m <= 3; ++m)
            CHECK(dot_linear(ass, E(n), E(m)) == E(n + m));
    const auto a = S({2, 1}) + S({1, 2}, -3);
    const auto b = S({1}, 5);
    CHECK(dot_linear(perm, a, b) == S({2, 1, 3}, 5) + S({1, 2, 3}, -15));
}

TEST_CASE("braces")
{
    const auto x = S({2, 3, 1});
    CHECK(brace(perm, x, std::span<const FormalSum<Permutation>>()) == x);
    for (std::size_t k = 1; k <= 3; ++k)
        for (const auto& y : enumerate_sn(k)) {
            const auto yy = basis_sum(perm, y);
            FormalSum<Permutation> expected(3 + k - 1);
            for (std::size_t i = 0; i < 3; ++i)
                expected.add_term(insert_perm(P({2, 3, 1}), i, y), (k - 1) * i % 2 == 0 ? 1 : -1);
            const FormalSum<Permutation> ys[] = {yy};
            CHECK(brace(perm, x, std::span<const FormalSum<Permutation>>(ys)) == expected);
            // x{y} is the circle product up to the sign pattern.
            if (k % 2 == 1)
                CHECK(brace(perm, x, std::span<const FormalSum<Permutation>>(ys)) ==
                      circle(perm, x, yy));
        }
    const FormalSum<Permutation> two[] = {S({2, 1}), S({1})};
    CHECK(brace(perm, S({1}), std::span<const FormalSum<Permutation>>(two)).is_zero());
    // 2-ary brace into arity 2: the only placement is y in slot 0, z in slot 1.
    const FormalSum<Permutation> yz[] = {S({1}), S({2, 1})};
    CHECK(brace(perm, S({1, 2}), std::span<const FormalSum<Permutation>>(yz)) ==
          S({1, 3, 2}, -1));
}

TEST_CASE("DG algebra and dot via pi")
{
    IdentityConfig cfg{.max_total = 5};
    CHECK(check_pi(perm).passed());
    CHECK(check_dg_leibniz(perm, cfg).passed());
    CHECK(check_dot_via_pi(perm, cfg).passed());
    CHECK(check_circle_units(perm, 2, 4).passed());
    CHECK(check_circle_units(ass, 2, 6).passed());
}

TEST_CASE("homotopy commutativity")
{
    IdentityConfig cfg{.max_total = 5, .random_pairs = 10};
    const auto r = check_homotopy_commutativity(perm, cfg);
    CHECK(r.passed());
    CHECK(r.violation_count == 0);
    CHECK(check_homotopy_commutativity(ass, IdentityConfig{.max_total = 8}).passed());
}

TEST_CASE("graded Jacobi and pre-Lie")
{
    const FormalSum<AssElement> e2 = E(2), e3 = E(3);
    const auto jac = bracket(ass, e2, bracket(ass, e2, e3));
    CHECK(jac.is_zero());
    IdentityConfig cfg{.max_total = 5};
    CHECK(check_jacobi(perm, cfg).passed());
    CHECK(check_pre_lie(perm, cfg).passed());
}

TEST_CASE("homotopy Leibniz: every candidate is tried and the outcome is recorded")
{
    IdentityConfig cfg{.max_total = 4};
    const auto a = check_homotopy_leibniz(perm, cfg, LeibnizVariant::m_plus_n);
    const auto b = check_homotopy_leibniz(perm, cfg, LeibnizVariant::m_plus_n);
    CHECK(a.to_json() == b.to_json());
    REQUIRE(a.details["candidates"].size() == 4);
    if (a.failed()) {
        CHECK(a.details["convention"].is_null());
        CHECK_FALSE(a.violations.empty());
        for (const auto& c : a.details["candidates"])
            CHECK(c["failing_triples"].get<std::size_t>() > 0);
    } else {
        CHECK(a.details["convention"].is_object());
    }
    const auto gv = check_homotopy_leibniz(perm, cfg, LeibnizVariant::m_plus_n_plus_1);
    CHECK(gv.details["variant"] == to_string(LeibnizVariant::m_plus_n_plus_1));
}

TEST_CASE("random formal sums are reproducible")
{
    IdentityConfig cfg{.max_total = 4, .seed = 7, .random_pairs = 5};
    const auto a = check_homotopy_commutativity(perm, cfg);
    const auto b = check_homotopy_commutativity(perm, cfg);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.cases == b.cases);
}
