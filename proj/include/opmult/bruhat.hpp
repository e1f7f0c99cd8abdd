#pragma once

// Higher Bruhat orders B(n, d) realized as consistent inversion sets of
// (d+1)-subsets of [n]. A set is consistent when, for every (d+2)-subset P,
// its intersection with the packet of P (the (d+1)-subsets of P in
// lexicographic order) is an initial or a final segment of the packet.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opmult/operad.hpp"
#include "opmult/permutation.hpp"

namespace opmult {

/// Sorted, 1-based.
using Subset = std::vector<unsigned>;

std::uint64_t binomial(std::size_t n, std::size_t k);

/// All k-subsets of [n] in lexicographic order.
std::vector<Subset> k_subsets(std::size_t n, std::size_t k);

/// Packet of a subset: its subsets of one size less, in lexicographic order.
std::vector<Subset> packet(const Subset& p);

/// Checks the packet condition. Throws OperadError on malformed subsets
/// (wrong size, out of range, unsorted or repeated).
bool is_consistent(std::size_t n, std::size_t d, const std::vector<Subset>& inv);

class BruhatElement {
public:
    BruhatElement() = default;
    /// Normalizes the order of `inv`; throws OperadError if malformed or
    /// inconsistent.
    BruhatElement(std::size_t n, std::size_t d, std::vector<Subset> inv);

    std::size_t n() const { return n_; }
    std::size_t d() const { return d_; }
    const std::vector<Subset>& inv() const { return inv_; }
    std::size_t rank() const { return inv_.size(); }
    bool contains(const Subset& t) const;

    /// Canonical order: (n, d, rank, lexicographic inversion list).
    std::strong_ordering operator<=>(const BruhatElement& o) const;
    bool operator==(const BruhatElement& o) const = default;

    std::string to_string() const;

private:
    std::size_t n_ = 0;
    std::size_t d_ = 1;
    std::vector<Subset> inv_;
};

/// Minimal element, empty inversion set.
BruhatElement unit_element(std::size_t n, std::size_t d);

enum class EnumerationMethod {
    /// Breadth-first closure from the unit under single-element additions.
    closure,
    /// Filter all subsets of C([n], d+1); needs C(n, d+1) <= 20.
    exhaustive,
};

inline constexpr std::size_t max_closure_bits = 64;
inline constexpr std::size_t max_exhaustive_bits = 20;

/// All elements of B(n, d) in canonical order. Throws std::length_error when
/// C(n, d+1) exceeds the method's bound.
std::vector<BruhatElement> enumerate_bruhat(std::size_t n, std::size_t d,
                                            EnumerationMethod method = EnumerationMethod::closure);

/// Elements covering b: b plus one (d+1)-subset, still consistent.
std::vector<BruhatElement> covers(const BruhatElement& b);

BruhatElement perm_to_bruhat(const Permutation& x);
/// Throws OperadError unless b has d = 1 and is the inversion set of a
/// permutation.
Permutation bruhat_to_perm(const BruhatElement& b);

nlohmann::json bruhat_to_json(const BruhatElement& b);
BruhatElement bruhat_from_json(const nlohmann::json& j);

/// Insertion B(m, d) x B(n, d) -> B(m+n-d, d). Only d = 1 has a built-in
/// construction (through S(n)); other orders must be installed as plugins.
class BruhatInsertion {
public:
    using Plugin =
        std::function<BruhatElement(const BruhatElement&, std::size_t, const BruhatElement&)>;

    BruhatElement operator()(const BruhatElement& b, std::size_t j, const BruhatElement& c) const;

    void install(std::size_t d, Plugin p) { plugins_[d] = std::move(p); }
    bool supports(std::size_t d) const { return d == 1 || plugins_.contains(d); }

private:
    std::map<std::size_t, Plugin> plugins_;
};

/// Built-in insertion; throws NotImplementedError for d >= 2.
BruhatElement bruhat_insertion(const BruhatElement& b, std::size_t j, const BruhatElement& c);

/// The small Bruhat operad, B_d(n) = B(nd, d), with insertion slots scaled
/// by d. Composition exists only where the insertion does.
class SmallBruhatOperad {
public:
    using Element = BruhatElement;

    explicit SmallBruhatOperad(std::size_t d, BruhatInsertion insertion = {},
                               std::size_t max_bits = max_closure_bits)
        : d_(d), insertion_(std::move(insertion)), max_bits_(max_bits)
    {
    }

    std::string name() const { return "bruhat(d=" + std::to_string(d_) + ")"; }
    std::size_t order() const { return d_; }
    std::size_t arity(const Element& x) const { return x.n() / d_; }
    Element unit() const { return unit_element(d_, d_); }
    Element insert(const Element& x, std::size_t j, const Element& y) const;
    std::optional<std::vector<Element>> enumerate(std::size_t n) const;
    nlohmann::json to_json(const Element& x) const { return bruhat_to_json(x); }

private:
    std::size_t d_;
    BruhatInsertion insertion_;
    std::size_t max_bits_;
};

/// (B_d, e_{0,d}, e_{2d,d}).
MultOperad<SmallBruhatOperad> make_small_bruhat_operad(std::size_t d, BruhatInsertion insertion = {});

// ---------------------------------------------------------------------------
// Wiring diagrams (d = 2)

/// A total order of the crossings C([n], 2) realizing an element of B(n, 2).
struct WiringDiagram {
    std::size_t n = 0;
    std::vector<std::pair<unsigned, unsigned>> crossings;

    /// Triples {a<b<c} whose pairs cross in reversed-lexicographic order.
    std::vector<Subset> reversed_triples() const;
    /// Crossing order as "12,13,23".
    std::string order_string() const;
};

/// Topological sort of the pairs under the triple constraints; ties break
/// lexicographically. Throws std::invalid_argument for d != 2 and
/// std::logic_error if the constraints are cyclic (which would contradict
/// consistency).
WiringDiagram wiring_diagram(const BruhatElement& b);

enum class DiagramFormat { ascii, svg };

std::string render_wiring(const BruhatElement& b, DiagramFormat format);

} // namespace opmult
