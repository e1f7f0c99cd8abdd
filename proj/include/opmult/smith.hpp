#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

namespace opmult {

/// Sparse integer matrix stored by columns. Zero entries are never stored.
class IntegerMatrix {
public:
    using Column = std::map<std::size_t, mpz_class>;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    std::size_t nonzeros() const;

    /// Adds v to entry (r, c). Throws std::out_of_range on bad indices.
    void add(std::size_t r, std::size_t c, const mpz_class& v);
    void set(std::size_t r, std::size_t c, const mpz_class& v);
    mpz_class at(std::size_t r, std::size_t c) const;

    const Column& column(std::size_t c) const { return columns_.at(c); }
    void set_column(std::size_t c, Column col);

    bool is_zero() const;

    /// Row-major (row, col, value) triplets.
    std::vector<std::tuple<std::size_t, std::size_t, mpz_class>> triplets() const;

    std::vector<std::vector<mpz_class>> to_dense() const;
    static IntegerMatrix from_dense(const std::vector<std::vector<mpz_class>>& a);

    bool operator==(const IntegerMatrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

/// a * b; throws std::invalid_argument on a dimension mismatch.
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

/// Matrix Market coordinate format, integer field, 1-based indices.
void write_matrix_market(std::ostream& os, const IntegerMatrix& a, const std::string& comment = {});
IntegerMatrix read_matrix_market(std::istream& is);

struct SNFResult {
    /// Nonzero diagonal of the Smith form, positive, each dividing the next.
    std::vector<mpz_class> divisors;
    /// Present when requested: U (rows x rows) and V (cols x cols), both
    /// unimodular, with U * A * V equal to the diagonal form.
    std::optional<IntegerMatrix> left;
    std::optional<IntegerMatrix> right;

    std::size_t rank() const { return divisors.size(); }
    /// Divisors greater than 1.
    std::vector<mpz_class> torsion() const;
};

struct SNFOptions {
    bool transforms = false;
    /// Computes the rank modulo a large prime first and checks the exact
    /// rank against it.
    bool modular_prepass = false;
};

/// Elementary divisors of A. Without transforms this runs a sparse
/// elimination with smallest-magnitude pivots; with transforms it runs a
/// dense reduction tracking U and V.
SNFResult smith_normal_form(const IntegerMatrix& a, const SNFOptions& options = {});

/// Rank of A over Z/pZ.
std::size_t rank_mod_p(const IntegerMatrix& a, unsigned long p = 2147483647UL);

/// Turns a list of nonzero diagonal entries into the divisibility chain of
/// the same diagonal matrix.
std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> diag);

/// Determinant of a square matrix (fraction-free elimination).
mpz_class determinant(const IntegerMatrix& a);

} // namespace opmult
