#include "opmult/smith.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace opmult {

std::size_t IntegerMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

void IntegerMatrix::add(std::size_t r, std::size_t c, const mpz_class& v)
{
    if (r >= rows_ || c >= columns_.size())
        throw std::out_of_range("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                ") out of range");
    if (v == 0)
        return;
    auto& col = columns_[c];
    auto [it, inserted] = col.try_emplace(r, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0)
            col.erase(it);
    }
}

void IntegerMatrix::set(std::size_t r, std::size_t c, const mpz_class& v)
{
    if (r >= rows_ || c >= columns_.size())
        throw std::out_of_range("matrix entry out of range");
    if (v == 0)
        columns_[c].erase(r);
    else
        columns_[c][r] = v;
}

mpz_class IntegerMatrix::at(std::size_t r, std::size_t c) const
{
    const auto& col = columns_.at(c);
    auto it = col.find(r);
    return it == col.end() ? mpz_class(0) : it->second;
}

void IntegerMatrix::set_column(std::size_t c, Column col)
{
    for (auto it = col.begin(); it != col.end();) {
        if (it->first >= rows_)
            throw std::out_of_range("column entry out of range");
        it = it->second == 0 ? col.erase(it) : std::next(it);
    }
    columns_.at(c) = std::move(col);
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

std::vector<std::tuple<std::size_t, std::size_t, mpz_class>> IntegerMatrix::triplets() const
{
    std::vector<std::tuple<std::size_t, std::size_t, mpz_class>> out;
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c])
            out.emplace_back(r, c, v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    return out;
}

std::vector<std::vector<mpz_class>> IntegerMatrix::to_dense() const
{
    std::vector<std::vector<mpz_class>> a(rows_, std::vector<mpz_class>(cols(), 0));
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (const auto& [r, v] : columns_[c])
            a[r][c] = v;
    return a;
}

IntegerMatrix IntegerMatrix::from_dense(const std::vector<std::vector<mpz_class>>& a)
{
    IntegerMatrix m(a.size(), a.empty() ? 0 : a.front().size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a[r].size(); ++c)
            m.set(r, c, a[r][c]);
    return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("multiply: " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " times " +
                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        IntegerMatrix::Column acc;
        for (const auto& [k, bv] : b.column(c))
            for (const auto& [r, av] : a.column(k)) {
                auto& slot = acc[r];
                slot += av * bv;
            }
        out.set_column(c, std::move(acc));
    }
    return out;
}

void write_matrix_market(std::ostream& os, const IntegerMatrix& a, const std::string& comment)
{
    os << "%%MatrixMarket matrix coordinate integer general\n";
    if (!comment.empty()) {
        std::istringstream lines(comment);
        for (std::string line; std::getline(lines, line);)
            os << "% " << line << '\n';
    }
    const auto t = a.triplets();
    os << a.rows() << ' ' << a.cols() << ' ' << t.size() << '\n';
    for (const auto& [r, c, v] : t)
        os << r + 1 << ' ' << c + 1 << ' ' << v.get_str() << '\n';
}

IntegerMatrix read_matrix_market(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line.rfind("%%MatrixMarket matrix coordinate integer", 0) != 0)
        throw std::runtime_error("not an integer coordinate Matrix Market stream");
    while (std::getline(is, line) && !line.empty() && line[0] == '%') {
    }
    std::istringstream header(line);
    std::size_t rows = 0, cols = 0, nnz = 0;
    if (!(header >> rows >> cols >> nnz))
        throw std::runtime_error("malformed Matrix Market size line");
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < nnz; ++i) {
        std::size_t r = 0, c = 0;
        std::string v;
        if (!(is >> r >> c >> v) || r == 0 || c == 0)
            throw std::runtime_error("malformed Matrix Market entry");
        m.add(r - 1, c - 1, mpz_class(v));
    }
    return m;
}

std::vector<mpz_class> SNFResult::torsion() const
{
    std::vector<mpz_class> out;
    for (const auto& d : divisors)
        if (d > 1)
            out.push_back(d);
    return out;
}

std::vector<mpz_class> normalize_diagonal(std::vector<mpz_class> diag)
{
    for (auto& d : diag) {
        if (d == 0)
            throw std::invalid_argument("normalize_diagonal: zero entry");
        d = abs(d);
    }
    std::sort(diag.begin(), diag.end());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] == 1)
            continue;
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
            if (g == diag[i])
                continue;
            diag[j] = diag[i] / g * diag[j];
            diag[i] = g;
        }
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

namespace {

/// Row-major working copy with column occupancy sets.
class SparseReducer {
public:
    explicit SparseReducer(const IntegerMatrix& a) : rows_(a.rows()), cols_(a.cols())
    {
        for (std::size_t c = 0; c < a.cols(); ++c)
            for (const auto& [r, v] : a.column(c)) {
                rows_[r].emplace(c, v);
                cols_[c].insert(r);
            }
    }

    std::vector<mpz_class> run()
    {
        std::vector<mpz_class> diag;
        while (auto pivot = choose_pivot()) {
            auto [r, c] = *pivot;
            mpz_class p;
            while (true) {
                reduce_pivot(r, c);
                p = rows_[r].at(c);
                const std::vector<std::size_t> others(cols_[c].begin(), cols_[c].end());
                for (auto i : others)
                    if (i != r)
                        row_axpy(i, r, rows_[i].at(c) / p);
                // Column operations clear the rest of row r without touching
                // other rows, since column c is now zero off the pivot.
                for (const auto& [k, v] : rows_[r])
                    if (k != c)
                        cols_[k].erase(r);
                rows_[r] = {{c, p}};
                // A non-unit pivot must divide the whole active block, or the
                // Schur complement entries grow without bound.
                if (abs(p) == 1)
                    break;
                const auto i = find_nondivisible_anywhere(r, p);
                if (!i)
                    break;
                row_axpy(r, *i, -1);
            }
            diag.push_back(abs(p));
            cols_[c].erase(r);
            rows_[r].clear();
        }
        return diag;
    }

private:
    /// Euclid on the pivot row and column until the pivot divides both.
    void reduce_pivot(std::size_t& r, std::size_t& c)
    {
        while (true) {
            const mpz_class p = rows_[r].at(c);
            if (auto i = find_nondivisible_in_column(c, r, p)) {
                row_axpy(*i, r, floor_div(rows_[*i].at(c), p));
                r = *i;
                continue;
            }
            if (auto k = find_nondivisible_in_row(r, c, p)) {
                col_axpy(*k, c, floor_div(rows_[r].at(*k), p));
                c = *k;
                continue;
            }
            return;
        }
    }

    static mpz_class floor_div(const mpz_class& a, const mpz_class& b)
    {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }

    std::optional<std::pair<std::size_t, std::size_t>> choose_pivot() const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        const mpz_class* best_value = nullptr;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t row_fill = rows_[r].size();
            for (const auto& [c, v] : rows_[r]) {
                const std::size_t cost = (row_fill - 1) * (cols_[c].size() - 1);
                const int cmp = best_value ? mpz_cmpabs(v.get_mpz_t(), best_value->get_mpz_t()) : -1;
                if (cmp < 0 || (cmp == 0 && cost < best_cost)) {
                    best = {r, c};
                    best_value = &v;
                    best_cost = cost;
                    if (cost == 0 && abs(v) == 1)
                        return best;
                }
            }
        }
        return best;
    }

    std::optional<std::size_t> find_nondivisible_in_column(std::size_t c, std::size_t r,
                                                           const mpz_class& p) const
    {
        for (auto i : cols_[c])
            if (i != r && !mpz_divisible_p(rows_[i].at(c).get_mpz_t(), p.get_mpz_t()))
                return i;
        return std::nullopt;
    }

    std::optional<std::size_t> find_nondivisible_in_row(std::size_t r, std::size_t c,
                                                        const mpz_class& p) const
    {
        for (const auto& [k, v] : rows_[r])
            if (k != c && !mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()))
                return k;
        return std::nullopt;
    }

    std::optional<std::size_t> find_nondivisible_anywhere(std::size_t r, const mpz_class& p) const
    {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r)
                for (const auto& [k, v] : rows_[i])
                    if (!mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()))
                        return i;
        return std::nullopt;
    }

    /// row_t -= q * row_s
    void row_axpy(std::size_t t, std::size_t s, const mpz_class& q)
    {
        if (q == 0)
            return;
        auto& target = rows_[t];
        for (const auto& [c, v] : rows_[s]) {
            auto [it, inserted] = target.try_emplace(c, 0);
            it->second -= q * v;
            if (it->second == 0) {
                target.erase(it);
                cols_[c].erase(t);
            } else if (inserted) {
                cols_[c].insert(t);
            }
        }
    }

    /// col_t -= q * col_s
    void col_axpy(std::size_t t, std::size_t s, const mpz_class& q)
    {
        if (q == 0)
            return;
        const std::vector<std::size_t> rows(cols_[s].begin(), cols_[s].end());
        for (auto r : rows) {
            auto& row = rows_[r];
            const mpz_class v = row.at(s);
            auto [it, inserted] = row.try_emplace(t, 0);
            it->second -= q * v;
            if (it->second == 0) {
                row.erase(it);
                cols_[t].erase(r);
            } else if (inserted) {
                cols_[t].insert(r);
            }
        }
    }

    std::vector<std::map<std::size_t, mpz_class>> rows_;
    std::vector<std::set<std::size_t>> cols_;
};

using Dense = std::vector<std::vector<mpz_class>>;

Dense identity(std::size_t n)
{
    Dense m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

/// Dense reduction keeping U and V with U * A * V = D.
SNFResult dense_smith(const IntegerMatrix& input)
{
    Dense a = input.to_dense();
    const std::size_t rows = input.rows(), cols = input.cols();
    Dense u = identity(rows), v = identity(cols);

    const auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    };
    const auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& row : a)
            std::swap(row[i], row[j]);
        for (auto& row : v)
            std::swap(row[i], row[j]);
    };
    // row_t -= q row_s
    const auto row_op = [&](std::size_t t, std::size_t s, const mpz_class& q) {
        for (std::size_t k = 0; k < cols; ++k)
            a[t][k] -= q * a[s][k];
        for (std::size_t k = 0; k < rows; ++k)
            u[t][k] -= q * u[s][k];
    };
    // col_t -= q col_s
    const auto col_op = [&](std::size_t t, std::size_t s, const mpz_class& q) {
        for (std::size_t k = 0; k < rows; ++k)
            a[k][t] -= q * a[k][s];
        for (std::size_t k = 0; k < cols; ++k)
            v[k][t] -= q * v[k][s];
    };

    std::vector<mpz_class> divisors;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Move the smallest nonzero entry of the trailing block to (t, t).
        const auto place_min = [&]() {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (!best || mpz_cmpabs(a[i][j].get_mpz_t(), a[best->first][best->second].get_mpz_t()) < 0))
                        best = {i, j};
            if (!best)
                return false;
            swap_rows(t, best->first);
            swap_cols(t, best->second);
            return true;
        };
        if (!place_min())
            break;
        while (true) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_op(i, t, q);
                dirty = dirty || a[i][t] != 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_op(j, t, q);
                dirty = dirty || a[t][j] != 0;
            }
            if (dirty) {
                place_min();
                continue;
            }
            // Pivot must divide the whole trailing block.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row)
                break;
            row_op(t, *bad_row, -1);
        }
        if (a[t][t] < 0) {
            for (auto& x : a[t])
                x = -x;
            for (auto& x : u[t])
                x = -x;
        }
        divisors.push_back(a[t][t]);
    }

    SNFResult out;
    out.divisors = std::move(divisors);
    out.left = IntegerMatrix::from_dense(u);
    out.right = IntegerMatrix::from_dense(v);
    return out;
}

} // namespace

SNFResult smith_normal_form(const IntegerMatrix& a, const SNFOptions& options)
{
    SNFResult out;
    if (options.transforms)
        out = dense_smith(a);
    else
        out.divisors = normalize_diagonal(SparseReducer(a).run());
    if (options.modular_prepass) {
        const auto r = rank_mod_p(a);
        // Reduction mod p can only lose rank.
        if (r > out.rank())
            throw std::logic_error("smith_normal_form: modular rank " + std::to_string(r) +
                                   " exceeds exact rank " + std::to_string(out.rank()));
    }
    return out;
}

std::size_t rank_mod_p(const IntegerMatrix& a, unsigned long p)
{
    using Row = std::map<std::size_t, unsigned long>;
    const auto reduce = [p](const mpz_class& v) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
        return r.get_ui();
    };
    const auto inverse = [p](unsigned long x) {
        // Fermat: x^(p-2) mod p.
        mpz_class b(static_cast<unsigned long>(x)), e(static_cast<unsigned long>(p - 2)), m(p), r;
        mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
        return r.get_ui();
    };
    std::vector<Row> rows(a.rows());
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (const auto& [r, v] : a.column(c))
            if (auto x = reduce(v))
                rows[r][c] = x;
    // Pivot rows keyed by leading column.
    std::map<std::size_t, Row> pivots;
    for (auto& row : rows) {
        while (!row.empty()) {
            const auto lead = row.begin()->first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                const auto inv = inverse(row.begin()->second);
                for (auto& [c, v] : row)
                    v = static_cast<unsigned long>((static_cast<unsigned __int128>(v) * inv) % p);
                pivots.emplace(lead, std::move(row));
                break;
            }
            const auto factor = row.begin()->second;
            for (const auto& [c, v] : it->second) {
                auto& slot = row[c];
                const auto sub = static_cast<unsigned long>((static_cast<unsigned __int128>(factor) * v) % p);
                slot = (slot + p - sub) % p;
                if (slot == 0)
                    row.erase(c);
            }
        }
    }
    return pivots.size();
}

mpz_class determinant(const IntegerMatrix& input)
{
    if (input.rows() != input.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    Dense a = input.to_dense();
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

} // namespace opmult
