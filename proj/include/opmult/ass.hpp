#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opmult/operad.hpp"

namespace opmult {

/// The unique element e_n of Ass(n).
struct AssElement {
    std::size_t arity = 0;
    auto operator<=>(const AssElement&) const = default;
};

/// Ass: one element per arity. Used to calibrate every generic check.
class AssOperad {
public:
    using Element = AssElement;

    std::string name() const { return "ass"; }
    std::size_t arity(const Element& x) const { return x.arity; }
    Element unit() const { return {1}; }

    Element insert(const Element& x, std::size_t j, const Element& y) const
    {
        if (j >= x.arity)
            throw OperadError("ass: slot " + std::to_string(j) + " out of range for arity " +
                              std::to_string(x.arity));
        return {x.arity + y.arity - 1};
    }

    std::optional<std::vector<Element>> enumerate(std::size_t n) const
    {
        return std::vector<Element>{{n}};
    }

    nlohmann::json to_json(const Element& x) const { return {{"arity", x.arity}}; }
};

inline MultOperad<AssOperad> make_ass_operad()
{
    return {AssOperad{}, AssElement{0}, AssElement{2}};
}

} // namespace opmult
