#include <doctest.h>

#include <vector>

#include "opmult/ass.hpp"
#include "opmult/checks.hpp"
#include "opmult/permutation.hpp"

#include "oracles.hpp"

using namespace opmult;

namespace {

Permutation P(std::vector<unsigned> w) { return Permutation(std::move(w)); }

/// Slot shifted cyclically by one: still lands in S(n+m-1) and is unital on
/// the right, but breaks associativity. (Mirroring j -> n-1-j would not do:
/// that still satisfies every axiom.)
struct ShiftedPerm : PermOperad {
    std::string name() const { return "perm-shifted"; }
    Element insert(const Element& x, std::size_t j, const Element& y) const
    {
        return insert_perm(x, (j + 1) % x.size(), y);
    }
};
static_assert(OperadInstance<ShiftedPerm>);

/// Corrupts d^1 in arities >= 2 by sending mu into the wrong slot.
struct CorruptCoface : PermOperad {
    std::string name() const { return "perm-corrupt-coface"; }
    Element insert(const Element& x, std::size_t j, const Element& y) const
    {
        if (j == 0 && x.size() >= 2 && y == Permutation({1, 2}))
            return insert_perm(x, 1, y);
        return insert_perm(x, j, y);
    }
};

} // namespace

TEST_CASE("standardize and basic words")
{
    CHECK(standardize({3, 1}) == P({2, 1}));
    CHECK(standardize({2, 3}) == P({1, 2}));
    CHECK(standardize({5, 2, 9}) == P({2, 1, 3}));
    CHECK_THROWS_AS(standardize({4, 4}), OperadError);
    CHECK_THROWS_AS(P({1, 1}), OperadError);
    CHECK_THROWS_AS(P({0, 1}), OperadError);

    CHECK(longest_element(0).size() == 0);
    CHECK(longest_element(1) == P({1}));
    CHECK(longest_element(3) == P({3, 2, 1}));
}

TEST_CASE("enumerate_sn is lexicographic and bounded")
{
    const auto s0 = enumerate_sn(0);
    REQUIRE(s0.size() == 1);
    CHECK(s0[0].size() == 0);
    const auto s3 = enumerate_sn(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3.front() == P({1, 2, 3}));
    CHECK(s3.back() == P({3, 2, 1}));
    CHECK(std::is_sorted(s3.begin(), s3.end()));
    CHECK(enumerate_sn(5).size() == 120);
    CHECK_THROWS_AS(enumerate_sn(9), std::length_error);
}

TEST_CASE("insert_perm examples")
{
    CHECK(insert_perm(P({2, 3, 1}), 1, Permutation()) == P({2, 1}));
    CHECK(insert_perm(P({2, 1}), 0, P({1, 2})) == P({2, 3, 1}));
    CHECK_THROWS_AS(insert_perm(P({1, 2}), 2, P({1})), OperadError);
    for (const auto& x : enumerate_sn(4))
        for (std::size_t j = 0; j < x.size(); ++j)
            CHECK(insert_perm(x, j, P({1})) == x);
}

TEST_CASE("insert_perm agrees with the block-deletion search oracle")
{
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t m = 1; n + m <= 6; ++m)
            for (const auto& x : enumerate_sn(n))
                for (const auto& y : enumerate_sn(m))
                    for (std::size_t j = 0; j < n; ++j) {
                        const auto expected = oracle::insert_by_search(x.word(), j, y.word());
                        REQUIRE(expected);
                        CHECK(insert_perm(x, j, y).word() == *expected);
                        ++cases;
                    }
    CHECK(cases == 735);
}

TEST_CASE("codegeneracies delete a position")
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& x : enumerate_sn(n))
            for (std::size_t j = 0; j < n; ++j)
                CHECK(insert_perm(x, j, Permutation()).word() == oracle::delete_position(x.word(), j));
}

TEST_CASE("gamma against the search oracle")
{
    const PermOperad op;
    const std::vector<Permutation> a = {P({2, 1}), P({1})};
    CHECK(gamma(op, P({1, 2}), std::span<const Permutation>(a)) == P({2, 1, 3}));
    const std::vector<Permutation> b = {P({1}), P({2, 1})};
    CHECK(gamma(op, P({1, 2}), std::span<const Permutation>(b)) == P({1, 3, 2}));

    // All gammas with nonempty arguments and total arity <= 5.
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& x : enumerate_sn(n)) {
            std::vector<std::vector<Permutation>> choices;
            for (std::size_t k = 1; k <= 3; ++k)
                for (const auto& p : enumerate_sn(k))
                    choices.push_back({p});
            std::vector<std::size_t> idx(n, 0);
            while (true) {
                std::vector<Permutation> args;
                std::vector<oracle::Word> words;
                std::size_t total = 0;
                for (auto i : idx) {
                    args.push_back(choices[i][0]);
                    words.push_back(choices[i][0].word());
                    total += choices[i][0].size();
                }
                if (total <= 5) {
                    const auto expected = oracle::gamma_by_search(x.word(), words);
                    REQUIRE(expected);
                    CHECK(gamma(op, x, std::span<const Permutation>(args)).word() == *expected);
                }
                std::size_t k = 0;
                while (k < n && ++idx[k] == choices.size())
                    idx[k++] = 0;
                if (k == n)
                    break;
            }
        }
    CHECK_THROWS_AS(gamma(op, P({1, 2}), std::span<const Permutation>(a.data(), 1)), OperadError);
}

TEST_CASE("cofaces, codegeneracies and dot on perm")
{
    const auto mo = make_perm_operad();
    const auto one = P({1});
    CHECK(coface(mo, 0, one) == P({1, 2}));
    CHECK(coface(mo, 1, one) == P({1, 2}));
    CHECK(coface(mo, 2, one) == P({1, 2}));
    CHECK(coface(mo, 1, P({2, 1})) == P({2, 3, 1}));
    CHECK_THROWS_AS(coface(mo, 3, one), OperadError);

    // 1-based labels s^1, s^2, s^3 are our s^0, s^1, s^2.
    const auto x = P({2, 3, 1});
    CHECK(codegeneracy(mo, 0, x) == P({2, 1}));
    CHECK(codegeneracy(mo, 1, x) == P({2, 1}));
    CHECK(codegeneracy(mo, 2, x) == P({1, 2}));
    CHECK_THROWS_AS(codegeneracy(mo, 3, x), OperadError);

    CHECK(dot(mo, P({2, 1}), P({1, 2})) == P({2, 1, 3, 4}));
    CHECK(dot(mo, P({1, 2}), P({2, 1})) == P({1, 2, 4, 3}));
    CHECK(dot(mo, P({1, 2}), P({2, 1})) != dot(mo, P({2, 1}), P({1, 2})));
    for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 3; ++n)
            for (const auto& a : enumerate_sn(m))
                for (const auto& b : enumerate_sn(n))
                    CHECK(dot(mo, a, b).word() == oracle::concat_shift(a.word(), b.word()));

    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(ass_unit(mo, n) == Permutation::identity(n));
}

TEST_CASE("value-based substitution contradicts the codegeneracy example")
{
    const oracle::Word x = {2, 3, 1};
    const std::vector<oracle::Word> expected = {{2, 1}, {2, 1}, {1, 2}};
    std::vector<oracle::Word> by_position, by_value;
    for (unsigned j = 0; j < 3; ++j) {
        by_position.push_back(oracle::delete_position(x, j));
        by_value.push_back(oracle::delete_value(x, j + 1));
    }
    CHECK(by_position == expected);
    CHECK(by_value != expected);
}

TEST_CASE("operad axioms: ass and perm")
{
    const auto ass = check_operad_axioms(AssOperad{}, {.max_arity = 6});
    CHECK(ass.passed());
    CHECK(ass.cases > 0);

    const auto perm = check_operad_axioms(PermOperad{}, {.max_arity = 5, .max_total_weight = 6});
    CHECK(perm.passed());
    CHECK(perm.violation_count == 0);
}

TEST_CASE("negative control: shifted slots violate associativity")
{
    const auto r = check_operad_axioms(ShiftedPerm(), {.max_arity = 3, .max_total_weight = 5});
    CHECK(r.failed());
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations.front().lhs != r.violations.front().rhs);
}

TEST_CASE("unchecked verdict when enumeration is unavailable")
{
    const auto r = check_operad_axioms(PermOperad(3), {.max_arity = 4});
    CHECK(r.verdict == Verdict::unchecked);
    CHECK(r.to_json()["verdict"] == "unchecked");
}

TEST_CASE("multiplication axioms")
{
    CHECK(check_mult_axioms(make_perm_operad()).passed());
    CHECK(check_mult_axioms(make_ass_operad()).passed());
    // mu = [2,1]: both sides evaluate to [3,2,1] and the units still work.
    MultOperad<PermOperad> rev(PermOperad{}, Permutation(), P({2, 1}));
    CHECK(insert_perm(P({2, 1}), 0, P({2, 1})) == P({3, 2, 1}));
    CHECK(insert_perm(P({2, 1}), 1, P({2, 1})) == P({3, 2, 1}));
    CHECK(check_mult_axioms(rev).passed());
    // mu = [1,2] with e of the wrong arity is rejected outright.
    CHECK_THROWS_AS(MultOperad<PermOperad>(PermOperad{}, P({1}), P({1, 2})), OperadError);
}

TEST_CASE("cosimplicial identities")
{
    CHECK(check_cosimplicial(make_perm_operad(), 5).passed());
    CHECK(check_cosimplicial(make_ass_operad(), 8).passed());

    MultOperad<CorruptCoface> bad(CorruptCoface(), Permutation(), P({1, 2}));
    const auto r = check_cosimplicial(bad, 4);
    CHECK(r.failed());
    CHECK_FALSE(r.violations.empty());
}

TEST_CASE("mult-cosimplicial compatibilities")
{
    const auto mo = make_perm_operad();
    CHECK(check_mult_cosimplicial(mo, 6).passed());
    CHECK(check_mult_cosimplicial(make_ass_operad(), 8).passed());
    // Edge identity on x = y = [1].
    const auto one = P({1});
    CHECK(dot(mo, coface(mo, 2, one), one) == P({1, 2, 3}));
    CHECK(dot(mo, one, coface(mo, 0, one)) == P({1, 2, 3}));

    const auto ass = make_ass_operad();
    CHECK(ass.base.insert(ass_unit(ass, 3), 1, ass_unit(ass, 2)) == ass_unit(ass, 4));
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t i = 0; i <= n + 1; ++i)
            CHECK(coface(ass, i, AssElement{n}) == AssElement{n + 1});
}

TEST_CASE("perm JSON round trip")
{
    const auto x = P({3, 1, 2});
    const auto j = perm_to_json(x);
    CHECK(j["arity"] == 3);
    CHECK(perm_from_json(j) == x);
    CHECK(perm_from_json(nlohmann::json::array({2, 1})) == P({2, 1}));
    CHECK_THROWS(perm_from_json(nlohmann::json::array({2, 2})));
}
