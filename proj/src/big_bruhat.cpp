#include "opmult/big_bruhat.hpp"

#include "opmult/parallel.hpp"

namespace opmult {

BigBruhatElement::BigBruhatElement(MoleculeType k, BruhatElement bruhat)
    : molecule(std::move(k)), b(std::move(bruhat))
{
    if (b.n() != molecule.size() || b.d() != molecule.d())
        throw OperadError("big Bruhat element: Bruhat part " + b.to_string() +
                          " does not live on molecule " + molecule.to_string());
}

std::size_t first_letter_slot(const MoleculeType& k, std::size_t j)
{
    return k.nucleus_start(j + 1) - 1;
}

BigBruhatElement bb_insert(const BigBruhatElement& x, std::size_t j, const BigBruhatElement& y,
                           const BruhatInsertion& insertion, const NucleusSlotMap& slot)
{
    if (x.molecule.d() != y.molecule.d())
        throw OperadError("bb_insert: nucleus widths differ");
    if (j >= x.molecule.nuclei())
        throw OperadError("bb_insert: slot " + std::to_string(j) + " out of range for " +
                          std::to_string(x.molecule.nuclei()) + " nuclei");
    auto k = insert_molecule(x.molecule, j, y.molecule);
    auto b = insertion(x.b, slot(x.molecule, j), y.b);
    return BigBruhatElement(std::move(k), std::move(b));
}

BigBruhatElement bb_units(std::size_t d, std::size_t n)
{
    return BigBruhatElement(molecule_unit(d, n), unit_element(n * d, d));
}

bool is_minimal_pair(const BigBruhatElement& x) { return x.b.rank() == 0; }

nlohmann::json big_bruhat_to_json(const BigBruhatElement& x)
{
    return {{"molecule", molecule_to_json(x.molecule)}, {"bruhat", bruhat_to_json(x.b)}};
}

BigBruhatElement big_bruhat_from_json(const nlohmann::json& j)
{
    return BigBruhatElement(molecule_from_json(j.at("molecule")), bruhat_from_json(j.at("bruhat")));
}

std::optional<std::vector<BigBruhatElement>> BigBruhatOperad::enumerate(std::size_t n) const
{
    std::vector<BigBruhatElement> out;
    const auto types = MoleculeOperad(d_, gap_cap_).enumerate(n);
    for (const auto& k : *types) {
        if (k.size() > max_letters_)
            continue;
        if (binomial(k.size(), d_ + 1) > max_closure_bits)
            return std::nullopt;
        for (auto& b : enumerate_bruhat(k.size(), d_))
            out.emplace_back(k, std::move(b));
    }
    return out;
}

MultOperad<BigBruhatOperad> make_big_bruhat_operad(std::size_t d, std::size_t gap_cap,
                                                   std::size_t max_letters)
{
    return {BigBruhatOperad(d, gap_cap, max_letters), bb_units(d, 0), bb_units(d, 2)};
}

CheckReport check_bb0_iso(std::size_t d, std::size_t gap_cap, std::size_t max_arity,
                          const NucleusSlotMap& slot, const BruhatInsertion& insertion)
{
    CheckReport report;
    report.check = "bb0_iso(d=" + std::to_string(d) + ")";
    report.bound = {{"gap_cap", gap_cap}, {"max_arity", max_arity}};

    const MoleculeOperad molecules(d, gap_cap);
    std::vector<MoleculeType> types;
    for (std::size_t n = 0; n <= max_arity; ++n) {
        auto ks = *molecules.enumerate(n);
        types.insert(types.end(), ks.begin(), ks.end());
    }
    const auto lift = [&](const MoleculeType& k) {
        return BigBruhatElement(k, unit_element(k.size(), d));
    };

    for (std::size_t n = 0; n <= max_arity + 1; ++n) {
        ++report.cases;
        const auto u = bb_units(d, n);
        if (!is_minimal_pair(u) || u.molecule != molecule_unit(d, n))
            report.record({"unit_projection", {{"n", n}}, big_bruhat_to_json(u),
                           molecule_to_json(molecule_unit(d, n))});
    }

    auto parts = parallel_map(types.size(), [&](std::size_t ix) {
        CheckReport part;
        const auto& kx = types[ix];
        const auto x = lift(kx);
        for (const auto& ky : types) {
            const auto y = lift(ky);
            for (std::size_t j = 0; j < kx.nuclei(); ++j) {
                ++part.cases;
                const nlohmann::json in{
                    {"x", molecule_to_json(kx)}, {"j", j}, {"y", molecule_to_json(ky)}};
                const auto expected = insert_molecule(kx, j, ky);
                try {
                    const auto z = bb_insert(x, j, y, insertion, slot);
                    if (!is_minimal_pair(z))
                        part.record({"minimal_closure", in, big_bruhat_to_json(z),
                                     big_bruhat_to_json(lift(expected))});
                    else if (z.molecule != expected)
                        part.record({"projection_morphism", in, molecule_to_json(z.molecule),
                                     molecule_to_json(expected)});
                } catch (const NotImplementedError&) {
                    throw;
                } catch (const std::exception& e) {
                    part.record({"composition_defined", in, std::string("error: ") + e.what(),
                                 big_bruhat_to_json(lift(expected))});
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

} // namespace opmult
