#include "opmult/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace opmult {

Permutation::Permutation(std::vector<unsigned> word) : word_(std::move(word))
{
    std::vector<bool> seen(word_.size() + 1, false);
    for (unsigned v : word_) {
        if (v == 0 || v > word_.size() || seen[v])
            throw OperadError("not a permutation word: " + to_string());
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<unsigned> w(n);
    std::iota(w.begin(), w.end(), 1u);
    return Permutation(std::move(w), Unchecked{});
}

std::vector<std::pair<unsigned, unsigned>> Permutation::inversions() const
{
    std::vector<std::pair<unsigned, unsigned>> out;
    for (std::size_t p = 0; p < word_.size(); ++p)
        for (std::size_t q = p + 1; q < word_.size(); ++q)
            if (word_[p] > word_[q])
                out.emplace_back(word_[q], word_[p]);
    std::sort(out.begin(), out.end());
    return out;
}

Permutation Permutation::inverse() const
{
    std::vector<unsigned> w(word_.size());
    for (std::size_t p = 0; p < word_.size(); ++p)
        w[word_[p] - 1] = static_cast<unsigned>(p + 1);
    return Permutation(std::move(w), Unchecked{});
}

std::string Permutation::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t p = 0; p < word_.size(); ++p)
        os << (p ? "," : "") << word_[p];
    os << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

Permutation standardize(std::span<const long> word)
{
    std::vector<std::size_t> order(word.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return word[a] < word[b]; });
    std::vector<unsigned> out(word.size());
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (r > 0 && word[order[r]] == word[order[r - 1]])
            throw OperadError("standardize: duplicate entry " + std::to_string(word[order[r]]));
        out[order[r]] = static_cast<unsigned>(r + 1);
    }
    return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation standardize(std::initializer_list<long> word)
{
    return standardize(std::span<const long>(word.begin(), word.size()));
}

Permutation insert_perm(const Permutation& x, std::size_t j, const Permutation& y)
{
    const std::size_t n = x.size();
    if (j >= n)
        throw OperadError("insert_perm: slot " + std::to_string(j) + " out of range for arity " +
                          std::to_string(n));
    const unsigned m = static_cast<unsigned>(y.size());
    const unsigned v = x[j];
    const auto relabel = [&](unsigned w) { return w < v ? w : w + m - 1; };

    std::vector<unsigned> z;
    z.reserve(n + m - 1);
    for (std::size_t q = 0; q < j; ++q)
        z.push_back(relabel(x[q]));
    for (unsigned t : y.word())
        z.push_back(v - 1 + t);
    for (std::size_t q = j + 1; q < n; ++q)
        z.push_back(relabel(x[q]));
    return Permutation(std::move(z), Permutation::Unchecked{});
}

std::vector<Permutation> enumerate_sn(std::size_t n, std::size_t bound)
{
    if (n > bound)
        throw std::length_error("enumerate_sn: n = " + std::to_string(n) +
                                " exceeds enumeration bound " + std::to_string(bound));
    std::vector<Permutation> out;
    std::vector<unsigned> w = Permutation::identity(n).word();
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

Permutation longest_element(std::size_t n)
{
    std::vector<unsigned> w(n);
    for (std::size_t p = 0; p < n; ++p)
        w[p] = static_cast<unsigned>(n - p);
    return Permutation(std::move(w));
}

nlohmann::json perm_to_json(const Permutation& p)
{
    return {{"arity", p.size()}, {"word", p.word()}};
}

Permutation perm_from_json(const nlohmann::json& j)
{
    if (j.is_array())
        return Permutation(j.get<std::vector<unsigned>>());
    auto p = Permutation(j.at("word").get<std::vector<unsigned>>());
    if (j.contains("arity") && j.at("arity").get<std::size_t>() != p.size())
        throw OperadError("permutation arity field disagrees with word length");
    return p;
}

MultOperad<PermOperad> make_perm_operad(std::size_t enumeration_bound)
{
    return {PermOperad(enumeration_bound), Permutation(), Permutation::identity(2)};
}

} // namespace opmult
