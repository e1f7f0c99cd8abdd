#pragma once

// Exhaustive checkers for the planar-operad, multiplication and
// cosimplicial laws. Every checker enumerates all inputs within its bound,
// evaluates both sides of each law and records witnesses for mismatches.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "opmult/operad.hpp"
#include "opmult/parallel.hpp"
#include "opmult/report.hpp"

namespace opmult {

struct AxiomBound {
    std::size_t max_arity = 0;
    /// Bound on weight(x) + weight(y) + weight(z); weight is arity unless
    /// the instance defines it.
    std::size_t max_total_weight = std::numeric_limits<std::size_t>::max();

    nlohmann::json to_json() const
    {
        nlohmann::json j{{"max_arity", max_arity}};
        if (max_total_weight != std::numeric_limits<std::size_t>::max())
            j["max_total_weight"] = max_total_weight;
        return j;
    }
};

namespace detail {

template <OperadInstance I>
struct Catalogue {
    using Element = typename I::Element;
    std::vector<Element> elements;
    std::vector<std::size_t> arity;
    std::vector<std::size_t> weight;
    std::optional<std::size_t> missing_arity;
};

template <OperadInstance I>
Catalogue<I> catalogue(const I& op, std::size_t max_arity)
{
    Catalogue<I> c;
    for (std::size_t a = 0; a <= max_arity; ++a) {
        auto elems = op.enumerate(a);
        if (!elems) {
            c.missing_arity = a;
            return c;
        }
        for (auto& x : *elems) {
            c.arity.push_back(a);
            c.weight.push_back(weight_of(op, x));
            c.elements.push_back(std::move(x));
        }
    }
    return c;
}

template <OperadInstance I>
void compare(CheckReport& r, const I& op, const char* law, nlohmann::json inputs,
             const typename I::Element& lhs, const typename I::Element& rhs)
{
    ++r.cases;
    if (lhs == rhs)
        return;
    r.record({law, std::move(inputs), op.to_json(lhs), op.to_json(rhs)});
}

inline CheckReport unchecked(std::string check, nlohmann::json bound, std::string why)
{
    CheckReport r;
    r.check = std::move(check);
    r.bound = std::move(bound);
    r.verdict = Verdict::unchecked;
    r.note = std::move(why);
    return r;
}

} // namespace detail

/// Unit laws and the nested/disjoint associativity identities
///   (a) i <= j <= i+m-1: (x o_i y) o_j z = x o_i (y o_{j-i} z)
///   (b) j < i:           (x o_i y) o_j z = (x o_j z) o_{i+k-1} y
///   (c) j >= i+m:        (x o_i y) o_j z = (x o_{j-m+1} z) o_i y
/// with m = arity(y), k = arity(z), over every triple within the bound.
template <OperadInstance I>
CheckReport check_operad_axioms(const I& op, const AxiomBound& bound)
{
    using Element = typename I::Element;
    const std::string name = "operad_axioms:" + std::string(op.name());
    auto cat = detail::catalogue(op, bound.max_arity);
    if (cat.missing_arity)
        return detail::unchecked(name, bound.to_json(),
                                 "enumeration unavailable at arity " +
                                     std::to_string(*cat.missing_arity));

    CheckReport report;
    report.check = name;
    report.bound = bound.to_json();

    const auto total = cat.elements.size();
    const Element unit = op.unit();
    const auto within = [&](std::size_t w) { return w <= bound.max_total_weight; };
    // Inner loops run in weight order so they can stop at the bound.
    std::vector<std::size_t> by_weight(total);
    std::iota(by_weight.begin(), by_weight.end(), std::size_t{0});
    std::stable_sort(by_weight.begin(), by_weight.end(),
                     [&](std::size_t a, std::size_t b) { return cat.weight[a] < cat.weight[b]; });

    auto parts = parallel_map(total, [&](std::size_t ix) {
        CheckReport part;
        const Element& x = cat.elements[ix];
        const std::size_t ax = cat.arity[ix];
        if (!within(cat.weight[ix]))
            return part;
        for (std::size_t j = 0; j < ax; ++j)
            detail::compare(part, op, "right_unit", {{"x", op.to_json(x)}, {"j", j}},
                            op.insert(x, j, unit), x);
        detail::compare(part, op, "left_unit", {{"x", op.to_json(x)}}, op.insert(unit, 0, x), x);

        for (const std::size_t iy : by_weight) {
            const std::size_t wy = cat.weight[ix] + cat.weight[iy];
            if (!within(wy))
                break;
            const Element& y = cat.elements[iy];
            const std::size_t m = cat.arity[iy];
            for (std::size_t i = 0; i < ax; ++i) {
                const Element xy = op.insert(x, i, y);
                for (const std::size_t iz : by_weight) {
                    if (!within(wy + cat.weight[iz]))
                        break;
                    const Element& z = cat.elements[iz];
                    const std::size_t k = cat.arity[iz];
                    for (std::size_t j = 0; j + 1 < ax + m; ++j) {
                        const Element lhs = op.insert(xy, j, z);
                        Element rhs;
                        const char* law;
                        if (j >= i && j < i + m) {
                            law = "nested";
                            rhs = op.insert(x, i, op.insert(y, j - i, z));
                        } else if (j < i) {
                            law = "disjoint_left";
                            rhs = op.insert(op.insert(x, j, z), i + k - 1, y);
                        } else {
                            law = "disjoint_right";
                            rhs = op.insert(op.insert(x, j - m + 1, z), i, y);
                        }
                        ++part.cases;
                        if (!(lhs == rhs))
                            part.record({law,
                                         {{"x", op.to_json(x)},
                                          {"i", i},
                                          {"y", op.to_json(y)},
                                          {"j", j},
                                          {"z", op.to_json(z)}},
                                         op.to_json(lhs),
                                         op.to_json(rhs)});
                    }
                }
            }
        }
        return part;
    });
    for (auto& p : parts)
        report.absorb(std::move(p));
    report.finish();
    return report;
}

/// mu o_0 mu = mu o_1 mu and mu o_0 e = mu o_1 e = 1.
template <OperadInstance I>
CheckReport check_mult_axioms(const MultOperad<I>& m)
{
    CheckReport report;
    report.check = "mult_axioms:" + std::string(m.base.name());
    const auto& op = m.base;
    detail::compare(report, op, "associativity_of_mu", {{"mu", op.to_json(m.mu)}},
                    op.insert(m.mu, 0, m.mu), op.insert(m.mu, 1, m.mu));
    detail::compare(report, op, "mu_o0_e", {{"mu", op.to_json(m.mu)}, {"e", op.to_json(m.e)}},
                    op.insert(m.mu, 0, m.e), op.unit());
    detail::compare(report, op, "mu_o1_e", {{"mu", op.to_json(m.mu)}, {"e", op.to_json(m.e)}},
                    op.insert(m.mu, 1, m.e), op.unit());
    report.finish();
    return report;
}

/// The cosimplicial identities for d^i, s^i on O(n), n <= max_degree:
///   d^j d^i = d^i d^{j-1}        (i < j)
///   s^j s^i = s^i s^{j+1}        (i <= j)
///   s^j d^i = d^i s^{j-1}        (i < j)
///           = id                 (i = j, j+1)
///           = d^{i-1} s^j        (i > j+1)
template <OperadInstance I>
CheckReport check_cosimplicial(const MultOperad<I>& mo, std::size_t max_degree)
{
    using Element = typename I::Element;
    const auto& op = mo.base;
    const std::string name = "cosimplicial:" + std::string(op.name());
    const nlohmann::json bound{{"max_degree", max_degree}};
    auto cat = detail::catalogue(op, max_degree);
    if (cat.missing_arity)
        return detail::unchecked(name, bound,
                                 "enumeration unavailable at arity " +
                                     std::to_string(*cat.missing_arity));
    CheckReport report;
    report.check = name;
    report.bound = bound;

    auto parts = parallel_map(cat.elements.size(), [&](std::size_t ix) {
        CheckReport part;
        const Element& x = cat.elements[ix];
        const std::size_t n = cat.arity[ix];
        const auto in = [&](const char* a, std::size_t i, const char* b, std::size_t j) {
            return nlohmann::json{{"x", op.to_json(x)}, {a, i}, {b, j}};
        };
        for (std::size_t j = 1; j <= n + 2; ++j)
            for (std::size_t i = 0; i < j; ++i)
                detail::compare(part, op, "dd", in("i", i, "j", j),
                                coface(mo, j, coface(mo, i, x)),
                                coface(mo, i, coface(mo, j - 1, x)));
        if (n >= 2)
            for (std::size_t j = 0; j + 2 <= n; ++j)
                for (std::size_t i = 0; i <= j; ++i)
                    detail::compare(part, op, "ss", in("i", i, "j", j),
                                    codegeneracy(mo, j, codegeneracy(mo, i, x)),
                                    codegeneracy(mo, i, codegeneracy(mo, j + 1, x)));
        for (std::size_t i = 0; i <= n + 1; ++i) {
            for (std::size_t j = 0; j <= n; ++j) {
                const Element lhs = codegeneracy(mo, j, coface(mo, i, x));
                if (i < j) {
                    detail::compare(part, op, "sd_below", in("i", i, "j", j), lhs,
                                    coface(mo, i, codegeneracy(mo, j - 1, x)));
                } else if (i == j || i == j + 1) {
                    detail::compare(part, op, "sd_identity", in("i", i, "j", j), lhs, x);
                } else {
                    detail::compare(part, op, "sd_above", in("i", i, "j", j), lhs,
                                    coface(mo, i - 1, codegeneracy(mo, j, x)));
                }
            }
        }
        return part;
    });
    for (auto& p : parts)
        report.absorb(std::move(p));
    report.finish();
    return report;
}

/// Compatibility of x . y with cofaces and codegeneracies, associativity of
/// the dot product and the unit family e_n, for arities summing to at most
/// `max_total`.
template <OperadInstance I>
CheckReport check_mult_cosimplicial(const MultOperad<I>& mo, std::size_t max_total)
{
    using Element = typename I::Element;
    const auto& op = mo.base;
    const std::string name = "mult_cosimplicial:" + std::string(op.name());
    const nlohmann::json bound{{"max_total_arity", max_total}};
    auto cat = detail::catalogue(op, max_total);
    if (cat.missing_arity)
        return detail::unchecked(name, bound,
                                 "enumeration unavailable at arity " +
                                     std::to_string(*cat.missing_arity));
    CheckReport report;
    report.check = name;
    report.bound = bound;

    const auto total = cat.elements.size();
    auto parts = parallel_map(total, [&](std::size_t ix) {
        CheckReport part;
        const Element& x = cat.elements[ix];
        const std::size_t m = cat.arity[ix];
        for (std::size_t iy = 0; iy < total; ++iy) {
            const std::size_t n = cat.arity[iy];
            if (m + n > max_total)
                continue;
            const Element& y = cat.elements[iy];
            const Element xy = dot(mo, x, y);
            const auto in = [&](std::size_t i) {
                return nlohmann::json{{"x", op.to_json(x)}, {"y", op.to_json(y)}, {"i", i}};
            };
            for (std::size_t i = 0; i <= m + n + 1; ++i) {
                const Element rhs = i <= m ? dot(mo, coface(mo, i, x), y)
                                           : dot(mo, x, coface(mo, i - m, y));
                detail::compare(part, op, "coface_leibniz", in(i), coface(mo, i, xy), rhs);
            }
            for (std::size_t i = 0; i < m + n; ++i) {
                const Element rhs = i + 1 <= m ? dot(mo, codegeneracy(mo, i, x), y)
                                               : dot(mo, x, codegeneracy(mo, i - m, y));
                detail::compare(part, op, "codegeneracy_leibniz", in(i), codegeneracy(mo, i, xy),
                                rhs);
            }
            detail::compare(part, op, "edge_identity", in(m + 1), dot(mo, coface(mo, m + 1, x), y),
                            dot(mo, x, coface(mo, 0, y)));
            for (std::size_t iz = 0; iz < total; ++iz) {
                if (m + n + cat.arity[iz] > max_total)
                    continue;
                const Element& z = cat.elements[iz];
                detail::compare(part, op, "dot_associativity",
                                {{"x", op.to_json(x)}, {"y", op.to_json(y)}, {"z", op.to_json(z)}},
                                dot(mo, xy, z), dot(mo, x, dot(mo, y, z)));
            }
        }
        return part;
    });
    for (auto& p : parts)
        report.absorb(std::move(p));

    // Units: d^i e_n = e_{n+1}, s^i e_n = e_{n-1}, e_n . e_k = e_{n+k},
    // e_n o_i e_k = e_{n+k-1}.
    std::vector<Element> units;
    for (std::size_t n = 0; n <= max_total + 1; ++n)
        units.push_back(ass_unit(mo, n));
    for (std::size_t n = 0; n <= max_total; ++n) {
        for (std::size_t i = 0; i <= n + 1; ++i)
            detail::compare(report, op, "unit_coface", {{"n", n}, {"i", i}}, coface(mo, i, units[n]),
                            units[n + 1]);
        for (std::size_t i = 0; i < n; ++i)
            detail::compare(report, op, "unit_codegeneracy", {{"n", n}, {"i", i}},
                            codegeneracy(mo, i, units[n]), units[n - 1]);
        for (std::size_t k = 0; n + k <= max_total; ++k) {
            detail::compare(report, op, "unit_dot", {{"n", n}, {"k", k}},
                            dot(mo, units[n], units[k]), units[n + k]);
            if (n + k >= 1)
                for (std::size_t i = 0; i < n; ++i)
                    detail::compare(report, op, "unit_insertion", {{"n", n}, {"k", k}, {"i", i}},
                                    op.insert(units[n], i, units[k]), units[n + k - 1]);
        }
    }
    report.finish();
    return report;
}

} // namespace opmult
