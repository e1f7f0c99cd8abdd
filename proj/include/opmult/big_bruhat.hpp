#pragma once

// The big Bruhat operad BB_d: couples (b, k) with k a molecule type and
// b in B(N(k), d). Composition replaces a nucleus by a whole molecule and
// inserts the Bruhat parts at the first letter of that nucleus.

#include <compare>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opmult/bruhat.hpp"
#include "opmult/molecule.hpp"
#include "opmult/operad.hpp"
#include "opmult/report.hpp"

namespace opmult {

struct BigBruhatElement {
    MoleculeType molecule;
    BruhatElement b;

    BigBruhatElement() = default;
    /// Throws OperadError unless b lives on N(molecule) letters with the
    /// molecule's nucleus width as its order.
    BigBruhatElement(MoleculeType k, BruhatElement bruhat);

    auto operator<=>(const BigBruhatElement&) const = default;
};

/// 0-based letter slot receiving the Bruhat part when nucleus j+1 (0-based
/// slot j) is replaced.
using NucleusSlotMap = std::function<std::size_t(const MoleculeType&, std::size_t)>;

/// start(I_{j+1}) - 1.
std::size_t first_letter_slot(const MoleculeType& k, std::size_t j);

BigBruhatElement bb_insert(const BigBruhatElement& x, std::size_t j, const BigBruhatElement& y,
                           const BruhatInsertion& insertion = {},
                           const NucleusSlotMap& slot = first_letter_slot);

/// e_n = (e_{nd,d}, k_0(n)).
BigBruhatElement bb_units(std::size_t d, std::size_t n);

bool is_minimal_pair(const BigBruhatElement& x);

nlohmann::json big_bruhat_to_json(const BigBruhatElement& x);
BigBruhatElement big_bruhat_from_json(const nlohmann::json& j);

class BigBruhatOperad {
public:
    using Element = BigBruhatElement;

    /// Enumeration yields elements of arity n with gap entries <= gap_cap
    /// and at most max_letters letters.
    explicit BigBruhatOperad(std::size_t d, std::size_t gap_cap = 1,
                             std::size_t max_letters = std::numeric_limits<std::size_t>::max(),
                             BruhatInsertion insertion = {}, NucleusSlotMap slot = first_letter_slot)
        : d_(d), gap_cap_(gap_cap), max_letters_(max_letters), insertion_(std::move(insertion)),
          slot_(std::move(slot))
    {
    }

    std::string name() const { return "big-bruhat(d=" + std::to_string(d_) + ")"; }
    std::size_t order() const { return d_; }
    std::size_t arity(const Element& x) const { return x.molecule.nuclei(); }
    /// Letter count N(k).
    std::size_t weight(const Element& x) const { return x.molecule.size(); }
    Element unit() const { return bb_units(d_, 1); }
    Element insert(const Element& x, std::size_t j, const Element& y) const
    {
        return bb_insert(x, j, y, insertion_, slot_);
    }
    std::optional<std::vector<Element>> enumerate(std::size_t n) const;
    nlohmann::json to_json(const Element& x) const { return big_bruhat_to_json(x); }

private:
    std::size_t d_;
    std::size_t gap_cap_;
    std::size_t max_letters_;
    BruhatInsertion insertion_;
    NucleusSlotMap slot_;
};

/// (BB_d, e_0, e_2).
MultOperad<BigBruhatOperad> make_big_bruhat_operad(
    std::size_t d, std::size_t gap_cap = 1,
    std::size_t max_letters = std::numeric_limits<std::size_t>::max());

/// Checks that minimal pairs are closed under composition and that
/// (e, k) -> k intertwines bb_insert with insert_molecule, for molecules of
/// arity <= max_arity with gap entries <= gap_cap. Composition errors are
/// recorded as violations; a missing Bruhat insertion (d >= 2) propagates
/// as NotImplementedError.
CheckReport check_bb0_iso(std::size_t d, std::size_t gap_cap, std::size_t max_arity,
                          const NucleusSlotMap& slot = first_letter_slot,
                          const BruhatInsertion& insertion = {});

} // namespace opmult
