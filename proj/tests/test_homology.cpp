#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "opmult/ass.hpp"
#include "opmult/cohomology.hpp"
#include "opmult/parallel.hpp"
#include "opmult/permutation.hpp"
#include "opmult/smith.hpp"

#include "oracles.hpp"

using namespace opmult;

namespace {

std::vector<mpz_class> Z(std::initializer_list<long> v)
{
    std::vector<mpz_class> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

void check_transforms(const IntegerMatrix& a, const SNFResult& s)
{
    REQUIRE(s.left);
    REQUIRE(s.right);
    const auto d = multiply(multiply(*s.left, a), *s.right);
    IntegerMatrix expected(a.rows(), a.cols());
    for (std::size_t i = 0; i < s.divisors.size(); ++i)
        expected.set(i, i, s.divisors[i]);
    CHECK(d == expected);
    CHECK(abs(determinant(*s.left)) == 1);
    CHECK(abs(determinant(*s.right)) == 1);
}

template <typename T>
std::vector<T> shuffled(std::vector<T> v, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
    return v;
}

} // namespace

TEST_CASE("smith normal form examples")
{
    IntegerMatrix d23(2, 2);
    d23.set(0, 0, 2);
    d23.set(1, 1, 3);
    CHECK(smith_normal_form(d23).divisors == Z({1, 6}));
    const auto t = smith_normal_form(d23, {.transforms = true});
    CHECK(t.divisors == Z({1, 6}));
    check_transforms(d23, t);

    const IntegerMatrix zero(3, 4);
    CHECK(smith_normal_form(zero).divisors.empty());
    CHECK(smith_normal_form(zero).rank() == 0);

    IntegerMatrix id(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        id.set(i, i, 1);
    CHECK(smith_normal_form(id).divisors == Z({1, 1, 1}));
    CHECK(smith_normal_form(id).torsion().empty());

    // [[2,4,4],[-6,6,12],[10,-4,-16]] has invariants 2, 6, 12.
    const auto m = IntegerMatrix::from_dense({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    CHECK(smith_normal_form(m).divisors == Z({2, 6, 12}));
    CHECK(smith_normal_form(m, {.transforms = true}).divisors == Z({2, 6, 12}));
    CHECK(smith_normal_form(m).torsion() == Z({2, 6, 12}));

    CHECK(normalize_diagonal(Z({4, 6, -1})) == Z({1, 2, 12}));
    CHECK(normalize_diagonal(Z({2, 3})) == Z({1, 6}));
    CHECK_THROWS(normalize_diagonal(Z({0})));
}

TEST_CASE("500 seeded random matrices against the dense oracle")
{
    std::mt19937_64 rng(0x5eed);
    std::size_t with_torsion = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto a = trial % 2 ? oracle::random_matrix(rng) : oracle::random_product(rng);
        const auto expected = oracle::dense_invariants(a.to_dense());
        const auto sparse = smith_normal_form(a, {.modular_prepass = true});
        CHECK(sparse.divisors == expected);
        CHECK(oracle::is_chain(sparse.divisors));
        CHECK(sparse.rank() <= std::min(a.rows(), a.cols()));
        CHECK(rank_mod_p(a) == sparse.rank());
        with_torsion += !sparse.torsion().empty();
        if (trial % 5 == 0) {
            const auto dense = smith_normal_form(a, {.transforms = true});
            CHECK(dense.divisors == expected);
            check_transforms(a, dense);
        }
    }
    CHECK(with_torsion > 50);
}

TEST_CASE("SNF is deterministic under row and column permutations")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = oracle::random_product(rng);
        std::vector<std::size_t> rp(a.rows()), cp(a.cols());
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        rp = shuffled(rp, trial);
        cp = shuffled(cp, trial + 1000);
        IntegerMatrix b(a.rows(), a.cols());
        for (const auto& [r, c, v] : a.triplets())
            b.set(rp[r], cp[c], v);
        CHECK(smith_normal_form(a).divisors == smith_normal_form(b).divisors);
    }
}

TEST_CASE("determinant and rank mod p")
{
    CHECK(determinant(IntegerMatrix::from_dense({{2, 1}, {7, 4}})) == 1);
    CHECK(determinant(IntegerMatrix::from_dense({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(IntegerMatrix::from_dense({{1, 2}, {2, 4}})) == 0);
    CHECK(determinant(IntegerMatrix::from_dense({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == 30);
    CHECK(rank_mod_p(IntegerMatrix::from_dense({{2, 0}, {0, 3}}), 2) == 1);
    CHECK(rank_mod_p(IntegerMatrix::from_dense({{2, 0}, {0, 3}})) == 2);
}

TEST_CASE("matrix market round trip")
{
    auto a = IntegerMatrix::from_dense({{0, -3}, {5, 0}, {0, 0}});
    a.set(2, 0, mpz_class("123456789012345678901234567890"));
    std::stringstream ss;
    write_matrix_market(ss, a, "test matrix\nsecond line");
    const auto text = ss.str();
    CHECK(text.rfind("%%MatrixMarket matrix coordinate integer general\n", 0) == 0);
    CHECK(text.find("% second line") != std::string::npos);
    CHECK(read_matrix_market(ss) == a);
    std::stringstream bad("%%MatrixMarket matrix coordinate real general\n1 1 0\n");
    CHECK_THROWS(read_matrix_market(bad));
    CHECK_THROWS_AS(multiply(a, a), std::invalid_argument);
}

TEST_CASE("boundary matrices")
{
    const auto ass = make_ass_operad();
    CHECK(boundary_matrix(ass, 1).to_dense() == std::vector<std::vector<mpz_class>>{{1}});
    CHECK(boundary_matrix(ass, 2).to_dense() == std::vector<std::vector<mpz_class>>{{0}});
    const auto perm = make_perm_operad();
    const auto d0 = boundary_matrix(perm, 0);
    CHECK(d0.rows() == 1);
    CHECK(d0.cols() == 1);
    CHECK(d0.is_zero());
    const auto d1 = boundary_matrix(perm, 1);
    CHECK(d1.at(0, 0) == 1);
    CHECK(d1.at(1, 0) == 0);
    CHECK_THROWS_AS(boundary_matrix(make_perm_operad(3), 3), std::length_error);
}

TEST_CASE("cohomology of the Ass complex")
{
    const auto r = cohomology(make_ass_operad(), 6);
    CHECK(r.d_squared_verified);
    REQUIRE(r.raw.size() == 7);
    CHECK(r.raw[0].betti == 1);
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(r.raw[n].betti == 0);
        CHECK(r.raw[n].torsion.empty());
    }
    const auto j = r.to_json();
    CHECK(j["degrees"][0] == nlohmann::json{{"degree", 0}, {"dim", 1}, {"rank", 0}, {"betti", 1}, {"torsion", nlohmann::json::array()}});
}

TEST_CASE("cohomology of the permutation complex, low degrees")
{
    const auto r = cohomology(make_perm_operad(), 4);
    CHECK(r.raw[0].betti == 1);
    CHECK(r.raw[1].betti == 0);
    for (const auto& d : r.raw)
        CHECK(d.dim == (d.degree == 0 ? 1 : d.dim));
    CHECK(r.raw[3].dim == 6);
}

TEST_CASE("normalized and raw cohomology agree on Ass and perm through degree 4")
{
    for (const auto& r : {cohomology(make_ass_operad(), 6, {.normalized = true}),
                          cohomology(make_perm_operad(), 4, {.normalized = true})}) {
        REQUIRE(r.normalized);
        for (std::size_t n = 0; n < r.raw.size(); ++n) {
            CHECK(r.raw[n].betti == (*r.normalized)[n].betti);
            CHECK(r.raw[n].torsion == (*r.normalized)[n].torsion);
        }
        CHECK(r.to_json().contains("normalized"));
    }
}

TEST_CASE("cohomology is independent of basis order and thread count")
{
    const auto perm = make_perm_operad();
    std::vector<std::size_t> ranks, shuffled_ranks;
    std::vector<std::vector<mpz_class>> divs, shuffled_divs;
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto cols = cochain_basis(perm.base, n);
        const auto rows = cochain_basis(perm.base, n + 1);
        const auto a = smith_normal_form(boundary_matrix(perm, cols, rows));
        const auto b = smith_normal_form(
            boundary_matrix(perm, shuffled(cols, 11 + n), shuffled(rows, 23 + n)));
        CHECK(a.divisors == b.divisors);
    }
    const auto before = thread_count();
    set_thread_count(1);
    const auto one = cohomology(perm, 4).to_json();
    set_thread_count(4);
    const auto four = cohomology(perm, 4).to_json();
    set_thread_count(before);
    CHECK(one == four);
}

TEST_CASE("matrix export")
{
    const auto dir = std::filesystem::temp_directory_path() / "opmult_mtx_test";
    std::filesystem::remove_all(dir);
    cohomology(make_perm_operad(), 2, {.export_dir = dir});
    std::ifstream is(dir / "d2.mtx");
    REQUIRE(is);
    const auto m = read_matrix_market(is);
    CHECK(m == boundary_matrix(make_perm_operad(), 2));
    std::filesystem::remove_all(dir);
}
