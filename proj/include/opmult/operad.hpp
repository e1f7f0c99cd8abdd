#pragma once

// Generic planar operads in sets, given by their insertion maps.
//
// Slot numbering is 0-based throughout: x o_j y is defined for
// 0 <= j <= arity(x) - 1. Conversion to 1-based labels (s^1, s^2, ...)
// is j_1based = j + 1.

#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace opmult {

/// Raised by instances on an invalid slot, arity mismatch or malformed element.
class OperadError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation exists in the contract but has no construction yet.
class NotImplementedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

template <typename I>
concept OperadInstance =
    requires(const I& op, const typename I::Element& x, std::size_t j, std::size_t n) {
        typename I::Element;
        requires std::totally_ordered<typename I::Element>;
        { op.name() } -> std::convertible_to<std::string>;
        { op.arity(x) } -> std::convertible_to<std::size_t>;
        { op.unit() } -> std::convertible_to<typename I::Element>;
        { op.insert(x, j, x) } -> std::convertible_to<typename I::Element>;
        { op.enumerate(n) } -> std::convertible_to<std::optional<std::vector<typename I::Element>>>;
        { op.to_json(x) } -> std::convertible_to<nlohmann::json>;
    };

/// Size used for checker bounds. Instances may expose `weight(x)` when the
/// natural size of an element is not its arity (e.g. letter count).
template <OperadInstance I>
std::size_t weight_of(const I& op, const typename I::Element& x)
{
    if constexpr (requires { { op.weight(x) } -> std::convertible_to<std::size_t>; })
        return op.weight(x);
    else
        return op.arity(x);
}

/// An operad together with e in O(0) and mu in O(2).
template <OperadInstance I>
struct MultOperad {
    using Element = typename I::Element;

    I base;
    Element e;
    Element mu;

    MultOperad(I op, Element e_, Element mu_)
        : base(std::move(op)), e(std::move(e_)), mu(std::move(mu_))
    {
        if (base.arity(e) != 0)
            throw OperadError("multiplication unit e must have arity 0");
        if (base.arity(mu) != 2)
            throw OperadError("multiplication mu must have arity 2");
    }
};

/// gamma(x; a_1, ..., a_n) as the left-to-right fold of insertions, the
/// k-th argument going into slot m_1 + ... + m_{k-1}.
template <OperadInstance I>
typename I::Element gamma(const I& op, const typename I::Element& x,
                          std::span<const typename I::Element> args)
{
    if (args.size() != op.arity(x))
        throw OperadError("gamma: expected " + std::to_string(op.arity(x)) +
                          " arguments, got " + std::to_string(args.size()));
    auto result = x;
    std::size_t offset = 0;
    for (const auto& a : args) {
        result = op.insert(result, offset, a);
        offset += op.arity(a);
    }
    return result;
}

/// Coface d^i : O(n) -> O(n+1), 0 <= i <= n+1.
template <OperadInstance I>
typename I::Element coface(const MultOperad<I>& m, std::size_t i, const typename I::Element& x)
{
    const std::size_t n = m.base.arity(x);
    if (i > n + 1)
        throw OperadError("coface index " + std::to_string(i) + " out of range 0.." +
                          std::to_string(n + 1));
    if (i == 0)
        return m.base.insert(m.mu, 1, x);
    if (i == n + 1)
        return m.base.insert(m.mu, 0, x);
    return m.base.insert(x, i - 1, m.mu);
}

/// Codegeneracy s^i : O(n) -> O(n-1), 0 <= i <= n-1.
template <OperadInstance I>
typename I::Element codegeneracy(const MultOperad<I>& m, std::size_t i,
                                 const typename I::Element& x)
{
    const std::size_t n = m.base.arity(x);
    if (n == 0 || i >= n)
        throw OperadError("codegeneracy index " + std::to_string(i) + " out of range for arity " +
                          std::to_string(n));
    return m.base.insert(x, i, m.e);
}

/// x . y = gamma(mu; x, y)
template <OperadInstance I>
typename I::Element dot(const MultOperad<I>& m, const typename I::Element& x,
                        const typename I::Element& y)
{
    const typename I::Element args[] = {x, y};
    return gamma(m.base, m.mu, std::span<const typename I::Element>(args));
}

/// The image e_n of the unique element of Ass(n): e_0 = e, e_1 = 1, e_2 = mu,
/// e_{k+1} = e_k . e_1.
template <OperadInstance I>
typename I::Element ass_unit(const MultOperad<I>& m, std::size_t n)
{
    if (n == 0)
        return m.e;
    auto result = m.base.unit();
    for (std::size_t k = 1; k < n; ++k)
        result = dot(m, result, m.base.unit());
    return result;
}

} // namespace opmult
