#pragma once

// Cohomology of the linearized cosimplicial complex Z O(0) -> Z O(1) -> ...
// with d = sum_i (-1)^i d^i, over the integers.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "opmult/formal_sum.hpp"
#include "opmult/operad.hpp"
#include "opmult/parallel.hpp"
#include "opmult/smith.hpp"

namespace opmult {

template <OperadInstance I>
std::vector<typename I::Element> cochain_basis(const I& op, std::size_t n)
{
    auto elems = op.enumerate(n);
    if (!elems)
        throw std::length_error(op.name() + ": enumeration bound exceeded at arity " +
                                std::to_string(n));
    return std::move(*elems);
}

/// Matrix of d : Z O(n) -> Z O(n+1) in the given bases; column c is the
/// image of cols_basis[c].
template <OperadInstance I>
IntegerMatrix boundary_matrix(const MultOperad<I>& mo,
                              const std::vector<typename I::Element>& cols_basis,
                              const std::vector<typename I::Element>& rows_basis)
{
    std::map<typename I::Element, std::size_t> index;
    for (std::size_t r = 0; r < rows_basis.size(); ++r)
        index.emplace(rows_basis[r], r);

    auto columns = parallel_map(cols_basis.size(), [&](std::size_t c) {
        const auto& x = cols_basis[c];
        const std::size_t n = mo.base.arity(x);
        IntegerMatrix::Column col;
        for (std::size_t i = 0; i <= n + 1; ++i) {
            const auto y = coface(mo, i, x);
            auto it = index.find(y);
            if (it == index.end())
                throw std::logic_error("boundary_matrix: coface image missing from the basis of arity " +
                                       std::to_string(n + 1));
            col[it->second] += i % 2 == 0 ? 1 : -1;
        }
        return col;
    });

    IntegerMatrix m(rows_basis.size(), cols_basis.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        m.set_column(c, std::move(columns[c]));
    return m;
}

template <OperadInstance I>
IntegerMatrix boundary_matrix(const MultOperad<I>& mo, std::size_t n)
{
    return boundary_matrix(mo, cochain_basis(mo.base, n), cochain_basis(mo.base, n + 1));
}

struct DegreeCohomology {
    std::size_t degree = 0;
    std::size_t dim = 0;
    /// Rank of d_n : C^n -> C^{n+1}.
    std::size_t rank = 0;
    std::size_t betti = 0;
    /// Elementary divisors > 1 of d_{n-1}.
    std::vector<mpz_class> torsion;

    nlohmann::json to_json() const
    {
        auto t = nlohmann::json::array();
        for (const auto& v : torsion)
            t.push_back(integer_to_json(v));
        return {{"degree", degree}, {"dim", dim}, {"rank", rank}, {"betti", betti}, {"torsion", t}};
    }
};

struct CohomologyReport {
    std::string instance;
    std::size_t max_degree = 0;
    /// d_{n+1} d_n = 0 was verified on the matrices for n < max_degree.
    bool d_squared_verified = false;
    std::vector<DegreeCohomology> raw;
    std::optional<std::vector<DegreeCohomology>> normalized;

    nlohmann::json to_json() const
    {
        const auto rows = [](const std::vector<DegreeCohomology>& v) {
            auto a = nlohmann::json::array();
            for (const auto& d : v)
                a.push_back(d.to_json());
            return a;
        };
        nlohmann::json j{{"instance", instance},
                         {"max_degree", max_degree},
                         {"d_squared_verified", d_squared_verified},
                         {"degrees", rows(raw)}};
        if (normalized)
            j["normalized"] = rows(*normalized);
        return j;
    }
};

struct CohomologyOptions {
    /// Also compute the quotient by the span of inner coface images.
    bool normalized = false;
    bool modular_prepass = false;
    /// When set, d_n is written to <dir>/d<n>.mtx.
    std::optional<std::filesystem::path> export_dir;
};

namespace detail {

/// Betti numbers and torsion from the differentials d_0 .. d_max.
inline std::vector<DegreeCohomology> degrees_from(const std::vector<std::size_t>& dims,
                                                  const std::vector<SNFResult>& snf,
                                                  std::size_t max_degree)
{
    std::vector<DegreeCohomology> out;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        DegreeCohomology d;
        d.degree = n;
        d.dim = dims[n];
        d.rank = snf[n].rank();
        const std::size_t prev = n == 0 ? 0 : snf[n - 1].rank();
        if (d.rank + prev > d.dim)
            throw std::logic_error("cohomology: ranks exceed dimension in degree " +
                                   std::to_string(n));
        d.betti = d.dim - d.rank - prev;
        if (n > 0)
            d.torsion = snf[n - 1].torsion();
        out.push_back(std::move(d));
    }
    return out;
}

inline void require_d_squared(const std::vector<IntegerMatrix>& ds, const std::string& what)
{
    for (std::size_t n = 0; n + 1 < ds.size(); ++n) {
        const auto dd = multiply(ds[n + 1], ds[n]);
        if (!dd.is_zero()) {
            const auto [r, c, v] = dd.triplets().front();
            throw std::logic_error(what + ": d_" + std::to_string(n + 1) + " d_" +
                                   std::to_string(n) + " != 0 (" +
                                   std::to_string(dd.nonzeros()) + " nonzero entries, first at (" +
                                   std::to_string(r) + "," + std::to_string(c) + ") = " +
                                   v.get_str() + ")");
        }
    }
}

/// Keeps the rows and columns whose indices are not marked.
inline IntegerMatrix quotient_matrix(const IntegerMatrix& a, const std::vector<bool>& drop_cols,
                                     const std::vector<bool>& drop_rows)
{
    std::vector<std::size_t> row_to(a.rows());
    std::size_t kept_rows = 0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        row_to[r] = drop_rows[r] ? 0 : kept_rows++;
    std::size_t kept_cols = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
        kept_cols += drop_cols[c] ? 0 : 1;
    IntegerMatrix out(kept_rows, kept_cols);
    std::size_t c2 = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (drop_cols[c])
            continue;
        IntegerMatrix::Column col;
        for (const auto& [r, v] : a.column(c))
            if (!drop_rows[r])
                col.emplace(row_to[r], v);
        out.set_column(c2++, std::move(col));
    }
    return out;
}

} // namespace detail

/// Degrees 0..max_degree. Throws std::logic_error when d^2 != 0 and
/// std::length_error when a basis cannot be enumerated.
template <OperadInstance I>
CohomologyReport cohomology(const MultOperad<I>& mo, std::size_t max_degree,
                            const CohomologyOptions& options = {})
{
    using Element = typename I::Element;
    CohomologyReport report;
    report.instance = mo.base.name();
    report.max_degree = max_degree;

    std::vector<std::vector<Element>> bases;
    for (std::size_t n = 0; n <= max_degree + 1; ++n)
        bases.push_back(cochain_basis(mo.base, n));

    std::vector<IntegerMatrix> ds;
    for (std::size_t n = 0; n <= max_degree; ++n)
        ds.push_back(boundary_matrix(mo, bases[n], bases[n + 1]));
    detail::require_d_squared(ds, report.instance);
    report.d_squared_verified = true;

    if (options.export_dir) {
        std::filesystem::create_directories(*options.export_dir);
        for (std::size_t n = 0; n < ds.size(); ++n) {
            std::ofstream os(*options.export_dir / ("d" + std::to_string(n) + ".mtx"));
            if (!os)
                throw std::runtime_error("cannot write matrix export to " +
                                         options.export_dir->string());
            write_matrix_market(os, ds[n],
                                report.instance + " d_" + std::to_string(n) + ": C^" +
                                    std::to_string(n) + " -> C^" + std::to_string(n + 1));
        }
    }

    const SNFOptions snf_opts{.transforms = false, .modular_prepass = options.modular_prepass};
    std::vector<std::size_t> dims;
    std::vector<SNFResult> snf;
    for (std::size_t n = 0; n <= max_degree; ++n) {
        dims.push_back(bases[n].size());
        snf.push_back(smith_normal_form(ds[n], snf_opts));
    }
    report.raw = detail::degrees_from(dims, snf, max_degree);

    if (options.normalized) {
        // Degenerate part of C^n: basis elements d^i(y), y in O(n-1), 1 <= i <= n.
        std::vector<std::vector<bool>> degenerate;
        for (std::size_t n = 0; n <= max_degree + 1; ++n) {
            std::set<Element> hit;
            if (n > 0)
                for (const auto& y : bases[n - 1])
                    for (std::size_t i = 1; i <= n; ++i)
                        hit.insert(coface(mo, i, y));
            std::vector<bool> mark(bases[n].size());
            for (std::size_t k = 0; k < bases[n].size(); ++k)
                mark[k] = hit.contains(bases[n][k]);
            degenerate.push_back(std::move(mark));
        }
        // The quotient is only a complex if d maps degenerate to degenerate.
        for (std::size_t n = 0; n <= max_degree; ++n)
            for (std::size_t c = 0; c < ds[n].cols(); ++c)
                if (degenerate[n][c])
                    for (const auto& [r, v] : ds[n].column(c))
                        if (!degenerate[n + 1][r])
                            throw std::logic_error("normalization: degenerate span is not a "
                                                   "subcomplex in degree " +
                                                   std::to_string(n));
        std::vector<IntegerMatrix> qs;
        std::vector<std::size_t> qdims;
        for (std::size_t n = 0; n <= max_degree; ++n)
            qs.push_back(detail::quotient_matrix(ds[n], degenerate[n], degenerate[n + 1]));
        detail::require_d_squared(qs, report.instance + " (normalized)");
        std::vector<SNFResult> qsnf;
        for (std::size_t n = 0; n <= max_degree; ++n) {
            qdims.push_back(qs[n].cols());
            qsnf.push_back(smith_normal_form(qs[n], snf_opts));
        }
        report.normalized = detail::degrees_from(qdims, qsnf, max_degree);
    }
    return report;
}

} // namespace opmult
