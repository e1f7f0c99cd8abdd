#pragma once

// Molecules and the Master operad M_d. A molecule of type
// (k_0, d, k_1, d, ..., d, k_n) is the interval [N], N = n*d + sum k_i,
// split into n nuclei of width d separated by runs of k_i electrons.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opmult/operad.hpp"

namespace opmult {

class MoleculeType {
public:
    MoleculeType() = default;
    /// `gaps` = (k_0, ..., k_n), so the number of nuclei is gaps.size() - 1.
    MoleculeType(std::size_t d, std::vector<std::size_t> gaps);

    std::size_t d() const { return d_; }
    const std::vector<std::size_t>& gaps() const { return gaps_; }
    std::size_t nuclei() const { return gaps_.size() - 1; }
    /// Total particle count N.
    std::size_t size() const;
    std::size_t electrons() const;

    /// First particle (1-based) of nucleus j, 1 <= j <= nuclei():
    /// k_0 + ... + k_{j-1} + (j-1) d + 1.
    std::size_t nucleus_start(std::size_t j) const;
    /// Particles of nucleus j.
    std::vector<std::size_t> nucleus(std::size_t j) const;
    std::vector<std::size_t> electron_positions() const;

    auto operator<=>(const MoleculeType&) const = default;

    /// "(k_0,d,k_1,...,d,k_n)"
    std::string to_string() const;

private:
    std::size_t d_ = 1;
    std::vector<std::size_t> gaps_{0};
};

/// k o_j k': nucleus j+1 of k is replaced by the whole molecule k', the
/// boundary electron runs merging.
MoleculeType insert_molecule(const MoleculeType& k, std::size_t j, const MoleculeType& kp);

/// The molecule with n nuclei and no electrons.
MoleculeType molecule_unit(std::size_t d, std::size_t n);

/// Concatenation merging the middle gap.
MoleculeType molecule_dot(const MoleculeType& k, const MoleculeType& kp);

nlohmann::json molecule_to_json(const MoleculeType& k);
MoleculeType molecule_from_json(const nlohmann::json& j);

/// M_d with enumeration restricted to gap entries <= gap_cap.
class MoleculeOperad {
public:
    using Element = MoleculeType;

    explicit MoleculeOperad(std::size_t d, std::size_t gap_cap = 2) : d_(d), gap_cap_(gap_cap) {}

    std::string name() const { return "molecule(d=" + std::to_string(d_) + ")"; }
    std::size_t order() const { return d_; }
    std::size_t arity(const Element& x) const { return x.nuclei(); }
    Element unit() const { return molecule_unit(d_, 1); }
    Element insert(const Element& x, std::size_t j, const Element& y) const
    {
        return insert_molecule(x, j, y);
    }
    std::optional<std::vector<Element>> enumerate(std::size_t n) const;
    nlohmann::json to_json(const Element& x) const { return molecule_to_json(x); }

private:
    std::size_t d_;
    std::size_t gap_cap_;
};

/// (M_d, e_0 = (0), e_2 = (0,d,0,d,0)).
MultOperad<MoleculeOperad> make_molecule_operad(std::size_t d, std::size_t gap_cap = 2);

} // namespace opmult
