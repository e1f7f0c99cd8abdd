#include <doctest.h>

#include <algorithm>
#include <set>

#include "opmult/bruhat.hpp"
#include "opmult/checks.hpp"

#include "oracles.hpp"

using namespace opmult;

namespace {

Permutation P(std::vector<unsigned> w) { return Permutation(std::move(w)); }

using oracle::count_by_filter;

} // namespace

TEST_CASE("subset helpers")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 4) == 0);
    CHECK(k_subsets(4, 3) == std::vector<Subset>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(packet({1, 2, 3, 4}) == std::vector<Subset>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
}

TEST_CASE("is_consistent examples")
{
    CHECK(is_consistent(3, 2, {}));
    CHECK_FALSE(is_consistent(4, 2, {{1, 2, 3}, {1, 3, 4}}));
    CHECK(is_consistent(4, 2, {{1, 2, 3}, {1, 2, 4}}));
    CHECK_THROWS_AS(is_consistent(4, 2, {{1, 2}}), OperadError);
    CHECK_THROWS_AS(is_consistent(4, 2, {{1, 2, 5}}), OperadError);
    CHECK_THROWS_AS(is_consistent(4, 2, {{2, 1, 3}}), OperadError);
    for (const auto& x : enumerate_sn(4)) {
        std::vector<Subset> inv;
        for (auto [a, b] : x.inversions())
            inv.push_back({a, b});
        CHECK(is_consistent(4, 1, inv));
    }
    CHECK_THROWS_AS(BruhatElement(4, 2, {{1, 2, 3}, {1, 3, 4}}), OperadError);
}

TEST_CASE("enumeration counts and cross-validation")
{
    CHECK(enumerate_bruhat(3, 2).size() == 2);
    CHECK(enumerate_bruhat(4, 2).size() == 8);
    CHECK(enumerate_bruhat(4, 2).size() == count_by_filter(4, 2));
    CHECK(enumerate_bruhat(4, 1).size() == 24);
    CHECK(enumerate_bruhat(3, 3).size() == 1);
    CHECK(enumerate_bruhat(4, 3).size() == 2);

    std::size_t fact = 1;
    for (std::size_t n = 1; n <= 5; ++n) {
        fact *= n;
        const auto bfs = enumerate_bruhat(n, 1);
        const auto filt = enumerate_bruhat(n, 1, EnumerationMethod::exhaustive);
        CHECK(bfs.size() == fact);
        CHECK(bfs == filt);
    }
    const auto b52 = enumerate_bruhat(5, 2);
    CHECK(b52 == enumerate_bruhat(5, 2, EnumerationMethod::exhaustive));
    CHECK(b52.size() == count_by_filter(5, 2));
    for (const auto& b : b52) {
        std::set<Subset> inv(b.inv().begin(), b.inv().end());
        CHECK(oracle::consistent(5, 2, inv));
    }
    CHECK(std::is_sorted(b52.begin(), b52.end()));
    CHECK(b52.front() == unit_element(5, 2));
    CHECK(std::count_if(b52.begin(), b52.end(), [](const auto& b) { return b.rank() == 0; }) == 1);

    CHECK_THROWS_AS(enumerate_bruhat(7, 3, EnumerationMethod::exhaustive), std::length_error);
}

TEST_CASE("units and covers")
{
    CHECK(unit_element(5, 2).inv().empty());
    const auto c = covers(unit_element(4, 2));
    REQUIRE(c.size() == 2);
    CHECK(c[0].inv() == std::vector<Subset>{{1, 2, 3}});
    CHECK(c[1].inv() == std::vector<Subset>{{2, 3, 4}});
    const auto all = enumerate_bruhat(4, 2);
    CHECK(covers(all.back()).empty());
    for (const auto& b : all)
        for (const auto& cov : covers(b))
            CHECK(cov.rank() == b.rank() + 1);
    // B(4,2) is a poset with 8 elements and 8 cover relations.
    std::size_t edges = 0;
    for (const auto& b : all)
        edges += covers(b).size();
    CHECK(edges == 8);
}

TEST_CASE("permutation bijection")
{
    CHECK(perm_to_bruhat(Permutation::identity(4)).inv().empty());
    CHECK(perm_to_bruhat(P({2, 3, 1})).inv() == std::vector<Subset>{{1, 2}, {1, 3}});
    CHECK(perm_to_bruhat(P({3, 2, 1})).rank() == 3);
    for (std::size_t n = 0; n <= 5; ++n) {
        std::set<BruhatElement> images;
        for (const auto& x : enumerate_sn(n)) {
            const auto b = perm_to_bruhat(x);
            CHECK(bruhat_to_perm(b) == x);
            images.insert(b);
        }
        const auto all = enumerate_bruhat(n, 1);
        CHECK(images == std::set<BruhatElement>(all.begin(), all.end()));
    }
    CHECK_THROWS_AS(bruhat_to_perm(unit_element(3, 2)), OperadError);
}

TEST_CASE("insertion: d = 1 built in, d >= 2 gated")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 0; n + m <= 7; ++m)
            for (const auto& x : enumerate_sn(n))
                for (const auto& y : enumerate_sn(m))
                    for (std::size_t j = 0; j < n; ++j)
                        CHECK(bruhat_insertion(perm_to_bruhat(x), j, perm_to_bruhat(y)) ==
                              perm_to_bruhat(insert_perm(x, j, y)));
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t n = 0; n <= 4; ++n)
            for (std::size_t j = 0; j < m; ++j)
                CHECK(bruhat_insertion(unit_element(m, 1), j, unit_element(n, 1)) ==
                      unit_element(m + n - 1, 1));

    try {
        bruhat_insertion(unit_element(4, 2), 0, unit_element(2, 2));
        FAIL("expected NotImplementedError");
    } catch (const NotImplementedError& e) {
        CHECK(std::string(e.what()).find("[KS] 5.6") != std::string::npos);
    }

    // A plugin makes d = 2 composable; here a stand-in that only handles units.
    BruhatInsertion ins;
    CHECK_FALSE(ins.supports(2));
    ins.install(2, [](const BruhatElement& b, std::size_t, const BruhatElement& c) {
        return unit_element(b.n() + c.n() - 2, 2);
    });
    CHECK(ins.supports(2));
    CHECK(ins(unit_element(4, 2), 0, unit_element(2, 2)) == unit_element(4, 2));
}

TEST_CASE("small bruhat operad at d = 1 is the perm operad")
{
    const auto mo = make_small_bruhat_operad(1);
    CHECK(check_mult_axioms(mo).passed());
    CHECK(check_operad_axioms(mo.base, {.max_arity = 4, .max_total_weight = 6}).passed());
    const auto mo2 = make_small_bruhat_operad(2);
    CHECK(mo2.mu == unit_element(4, 2));
    CHECK(mo2.e == unit_element(0, 2));
    CHECK_THROWS_AS(check_mult_axioms(mo2), NotImplementedError);
}

TEST_CASE("wiring diagrams")
{
    CHECK(wiring_diagram(unit_element(3, 2)).order_string() == "12,13,23");
    CHECK(wiring_diagram(BruhatElement(3, 2, {{1, 2, 3}})).order_string() == "23,13,12");
    CHECK_THROWS_AS(wiring_diagram(unit_element(3, 1)), std::invalid_argument);

    std::set<std::string> orders;
    std::set<std::vector<Subset>> invariants;
    for (const auto& b : enumerate_bruhat(4, 2)) {
        const auto w = wiring_diagram(b);
        CHECK(w.crossings.size() == 6);
        CHECK(w.reversed_triples() == b.inv());
        orders.insert(w.order_string());
        invariants.insert(w.reversed_triples());
        CHECK(render_wiring(b, DiagramFormat::svg).find("<svg") != std::string::npos);
        CHECK_FALSE(render_wiring(b, DiagramFormat::ascii).empty());
    }
    CHECK(orders.size() == 8);
    CHECK(invariants.size() == 8);
    for (const auto& b : enumerate_bruhat(5, 2))
        CHECK(wiring_diagram(b).reversed_triples() == b.inv());
}

TEST_CASE("bruhat JSON round trip")
{
    const BruhatElement b(4, 2, {{1, 2, 3}, {1, 2, 4}});
    const auto j = bruhat_to_json(b);
    CHECK(j["n"] == 4);
    CHECK(j["d"] == 2);
    CHECK(bruhat_from_json(j) == b);
}
