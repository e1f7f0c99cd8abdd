#pragma once

// The d = 1 small Bruhat operad: symmetric groups S(n) in one-line notation
// with position-based block substitution.

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "opmult/operad.hpp"

namespace opmult {

/// A bijection of {1..n} stored as its one-line word: word()[p-1] is the
/// image of position p. The empty word is the unique element of S(0).
class Permutation {
public:
    Permutation() = default;
    /// Throws OperadError unless `word` is a bijection of {1..n}.
    explicit Permutation(std::vector<unsigned> word);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return word_.size(); }
    const std::vector<unsigned>& word() const { return word_; }
    /// 0-based position.
    unsigned operator[](std::size_t p) const { return word_[p]; }

    /// Pairs (a, b), a < b, with a appearing after b in the word.
    std::vector<std::pair<unsigned, unsigned>> inversions() const;
    Permutation inverse() const;

    std::string to_string() const;

    /// Lexicographic on words; within one arity this is the enumeration order.
    auto operator<=>(const Permutation&) const = default;

private:
    struct Unchecked {};
    Permutation(std::vector<unsigned> word, Unchecked) : word_(std::move(word)) {}
    friend Permutation insert_perm(const Permutation&, std::size_t, const Permutation&);
    friend Permutation standardize(std::span<const long>);

    std::vector<unsigned> word_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Order-isomorphic relabeling of distinct integers onto {1..len}.
Permutation standardize(std::span<const long> word);
Permutation standardize(std::initializer_list<long> word);

/// x o_j y: the block y replaces position j+1 of x. With v = x(j+1), the
/// other values w of x become w (w < v) or w + m - 1 (w > v) and the block
/// takes values v-1+y(1), ..., v-1+y(m). For m = 0 this deletes position
/// j+1 and standardizes.
Permutation insert_perm(const Permutation& x, std::size_t j, const Permutation& y);

inline constexpr std::size_t default_enumeration_bound = 8;

/// All n! permutations in lexicographic order. Throws std::length_error when
/// n exceeds `bound`.
std::vector<Permutation> enumerate_sn(std::size_t n, std::size_t bound = default_enumeration_bound);

/// (n, n-1, ..., 1).
Permutation longest_element(std::size_t n);

nlohmann::json perm_to_json(const Permutation& p);
/// Accepts {"arity": n, "word": [...]} or a bare word array.
Permutation perm_from_json(const nlohmann::json& j);

class PermOperad {
public:
    using Element = Permutation;

    explicit PermOperad(std::size_t enumeration_bound = default_enumeration_bound)
        : bound_(enumeration_bound)
    {
    }

    std::string name() const { return "perm"; }
    std::size_t arity(const Element& x) const { return x.size(); }
    Element unit() const { return Permutation::identity(1); }
    Element insert(const Element& x, std::size_t j, const Element& y) const
    {
        return insert_perm(x, j, y);
    }
    std::optional<std::vector<Element>> enumerate(std::size_t n) const
    {
        if (n > bound_)
            return std::nullopt;
        return enumerate_sn(n, bound_);
    }
    nlohmann::json to_json(const Element& x) const { return perm_to_json(x); }

private:
    std::size_t bound_;
};

/// (S, e = empty word, mu = [1,2]).
MultOperad<PermOperad> make_perm_operad(std::size_t enumeration_bound = default_enumeration_bound);

} // namespace opmult
