#pragma once

// Reference implementations used only by tests. None of these call the
// library's insertion code.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "opmult/bruhat.hpp"
#include "opmult/permutation.hpp"
#include "opmult/smith.hpp"

namespace oracle {

using Word = std::vector<unsigned>;

inline Word standardized(const std::vector<unsigned>& w)
{
    std::vector<unsigned> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = static_cast<unsigned>(std::lower_bound(sorted.begin(), sorted.end(), w[i]) -
                                       sorted.begin() + 1);
    return out;
}

inline std::vector<Word> all_words(std::size_t n)
{
    Word w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = static_cast<unsigned>(i + 1);
    std::vector<Word> out;
    do
        out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// Does z decompose into consecutive position blocks of the given sizes,
/// each block carrying an interval of values, with standardized blocks
/// `parts` and collapsed shape `outer`? Blocks must be nonempty.
inline bool block_decomposes(const Word& z, const Word& outer, const std::vector<Word>& parts)
{
    std::size_t pos = 0;
    std::vector<unsigned> mins;
    for (const auto& part : parts) {
        if (part.empty() || pos + part.size() > z.size())
            return false;
        Word block(z.begin() + static_cast<long>(pos), z.begin() + static_cast<long>(pos + part.size()));
        const auto [lo, hi] = std::minmax_element(block.begin(), block.end());
        if (*hi - *lo + 1 != block.size())
            return false;
        if (standardized(block) != part)
            return false;
        mins.push_back(*lo);
        pos += part.size();
    }
    return pos == z.size() && standardized(mins) == outer;
}

/// gamma(x; a_1..a_n) by search over S(N): the unique word whose block
/// deletions recover the inputs.
inline std::optional<Word> gamma_by_search(const Word& x, const std::vector<Word>& args)
{
    std::size_t total = 0;
    for (const auto& a : args)
        total += a.size();
    std::optional<Word> found;
    for (const auto& z : all_words(total))
        if (block_decomposes(z, x, args)) {
            if (found)
                return std::nullopt;
            found = z;
        }
    return found;
}

/// x o_j y by search, m >= 1: unit blocks around a y-block at position j.
inline std::optional<Word> insert_by_search(const Word& x, std::size_t j, const Word& y)
{
    std::vector<Word> args(x.size(), Word{1});
    args[j] = y;
    return gamma_by_search(x, args);
}

/// x o_j e: delete position j and standardize.
inline Word delete_position(const Word& x, std::size_t j)
{
    Word w = x;
    w.erase(w.begin() + static_cast<long>(j));
    return standardized(w);
}

/// Value-based substitution: the letter of value j+1 is replaced (wrong
/// reading, kept as a negative control).
inline Word delete_value(const Word& x, unsigned v)
{
    Word w;
    for (unsigned a : x)
        if (a != v)
            w.push_back(a);
    return standardized(w);
}

/// x . y for permutations: x followed by y shifted by |x|.
inline Word concat_shift(const Word& x, const Word& y)
{
    Word w = x;
    for (unsigned v : y)
        w.push_back(v + static_cast<unsigned>(x.size()));
    return w;
}

/// Textbook dense diagonalization on a copy: smallest pivot, Euclid steps,
/// divisibility enforced by row addition; the chain is re-checked by
/// pairwise gcd/lcm at the end.
inline std::vector<mpz_class> dense_invariants(std::vector<std::vector<mpz_class>> a)
{
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    std::vector<mpz_class> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Smallest nonzero entry of the trailing block as pivot.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows)
            break;
        std::swap(a[t], a[pr]);
        for (auto& row : a)
            std::swap(row[t], row[pc]);
        bool done = false;
        while (!done) {
            done = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                while (a[i][t] != 0) {
                    mpz_class q = a[i][t] / a[t][t];
                    for (std::size_t k = t; k < cols; ++k)
                        a[i][k] -= q * a[t][k];
                    if (a[i][t] != 0) {
                        std::swap(a[i], a[t]);
                        done = false;
                    }
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                while (a[t][j] != 0) {
                    mpz_class q = a[t][j] / a[t][t];
                    for (std::size_t k = t; k < rows; ++k)
                        a[k][j] -= q * a[k][t];
                    if (a[t][j] != 0) {
                        for (auto& row : a)
                            std::swap(row[t], row[j]);
                        done = false;
                    }
                }
            }
            // Pivot must divide the rest; otherwise fold the offending row in.
            for (std::size_t i = t + 1; done && i < rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t k = t; k < cols; ++k)
                            a[t][k] += a[i][k];
                        done = false;
                        break;
                    }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
    }
    // Chain fix-up: repeat gcd/lcm until stable.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < diag.size(); ++i)
            for (std::size_t j = i + 1; j < diag.size(); ++j) {
                mpz_class g = gcd(diag[i], diag[j]);
                mpz_class l = lcm(diag[i], diag[j]);
                if (g != diag[i] || l != diag[j]) {
                    diag[i] = g;
                    diag[j] = l;
                    changed = true;
                }
            }
    }
    std::sort(diag.begin(), diag.end());
    return diag;
}

/// Packet condition re-derived from scratch: for each (d+2)-subset, the
/// indicator string over its lex-ordered packet must be 1*0* or 0*1*.
inline bool consistent(std::size_t n, std::size_t d, const std::set<opmult::Subset>& inv)
{
    for (const auto& p : opmult::k_subsets(n, d + 2)) {
        std::string bits;
        for (std::size_t drop = p.size(); drop-- > 0;) {
            opmult::Subset s = p;
            s.erase(s.begin() + static_cast<long>(drop));
            bits.push_back(inv.contains(s) ? '1' : '0');
        }
        const bool prefix = std::is_sorted(bits.rbegin(), bits.rend());
        const bool suffix = std::is_sorted(bits.begin(), bits.end());
        if (!prefix && !suffix)
            return false;
    }
    return true;
}

/// |B(n,d)| by filtering all 2^C(n,d+1) subsets.
inline std::size_t count_by_filter(std::size_t n, std::size_t d)
{
    const auto all = opmult::k_subsets(n, d + 1);
    std::size_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        std::set<opmult::Subset> inv;
        for (std::size_t b = 0; b < all.size(); ++b)
            if (mask >> b & 1)
                inv.insert(all[b]);
        count += consistent(n, d, inv);
    }
    return count;
}

/// Sparse random matrix up to 40 x 40 with entries in [-4, 4].
inline opmult::IntegerMatrix random_matrix(std::mt19937_64& rng)
{
    const std::size_t rows = 1 + rng() % 40, cols = 1 + rng() % 40;
    const unsigned density = 5 + static_cast<unsigned>(rng() % 40);
    opmult::IntegerMatrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() % 100 < density)
                a.set(r, c, static_cast<long>(rng() % 9) - 4);
    return a;
}

/// Low-rank product, so that torsion and rank deficiency actually occur.
inline opmult::IntegerMatrix random_product(std::mt19937_64& rng)
{
    const std::size_t rows = 2 + rng() % 20, cols = 2 + rng() % 20, inner = 1 + rng() % 6;
    opmult::IntegerMatrix a(rows, inner), b(inner, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t k = 0; k < inner; ++k)
            a.set(r, k, static_cast<long>(rng() % 7) - 3);
    for (std::size_t k = 0; k < inner; ++k)
        for (std::size_t c = 0; c < cols; ++c)
            b.set(k, c, 2 * (static_cast<long>(rng() % 5) - 2));
    return opmult::multiply(a, b);
}

inline bool is_chain(const std::vector<mpz_class>& d)
{
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] <= 0)
            return false;
        if (i + 1 < d.size() && !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t()))
            return false;
    }
    return true;
}

} // namespace oracle
