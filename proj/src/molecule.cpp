#include "opmult/molecule.hpp"

#include <numeric>
#include <sstream>

namespace opmult {

MoleculeType::MoleculeType(std::size_t d, std::vector<std::size_t> gaps) : d_(d), gaps_(std::move(gaps))
{
    if (d_ == 0)
        throw OperadError("molecule nucleus width must be positive");
    if (gaps_.empty())
        throw OperadError("molecule type needs at least one gap entry");
}

std::size_t MoleculeType::size() const { return nuclei() * d_ + electrons(); }

std::size_t MoleculeType::electrons() const
{
    return std::accumulate(gaps_.begin(), gaps_.end(), std::size_t{0});
}

std::size_t MoleculeType::nucleus_start(std::size_t j) const
{
    if (j == 0 || j > nuclei())
        throw OperadError("nucleus index " + std::to_string(j) + " out of range");
    std::size_t before = 0;
    for (std::size_t i = 0; i < j; ++i)
        before += gaps_[i];
    return before + (j - 1) * d_ + 1;
}

std::vector<std::size_t> MoleculeType::nucleus(std::size_t j) const
{
    const auto s = nucleus_start(j);
    std::vector<std::size_t> out(d_);
    std::iota(out.begin(), out.end(), s);
    return out;
}

std::vector<std::size_t> MoleculeType::electron_positions() const
{
    std::vector<std::size_t> out;
    std::size_t p = 1;
    for (std::size_t i = 0; i < gaps_.size(); ++i) {
        for (std::size_t e = 0; e < gaps_[i]; ++e)
            out.push_back(p++);
        if (i + 1 < gaps_.size())
            p += d_;
    }
    return out;
}

std::string MoleculeType::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < gaps_.size(); ++i) {
        if (i)
            os << ',' << d_ << ',';
        os << gaps_[i];
    }
    os << ')';
    return os.str();
}

MoleculeType insert_molecule(const MoleculeType& k, std::size_t j, const MoleculeType& kp)
{
    if (k.d() != kp.d())
        throw OperadError("insert_molecule: nucleus widths differ");
    if (j >= k.nuclei())
        throw OperadError("insert_molecule: slot " + std::to_string(j) + " out of range for " +
                          std::to_string(k.nuclei()) + " nuclei");
    const auto& a = k.gaps();
    const auto& b = kp.gaps();
    std::vector<std::size_t> g(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(j));
    if (b.size() == 1) {
        // k' has no nuclei: its electrons join the two runs around nucleus j+1.
        g.push_back(a[j] + b[0] + a[j + 1]);
    } else {
        g.push_back(a[j] + b.front());
        g.insert(g.end(), b.begin() + 1, b.end() - 1);
        g.push_back(b.back() + a[j + 1]);
    }
    g.insert(g.end(), a.begin() + static_cast<std::ptrdiff_t>(j) + 2, a.end());
    return MoleculeType(k.d(), std::move(g));
}

MoleculeType molecule_unit(std::size_t d, std::size_t n)
{
    return MoleculeType(d, std::vector<std::size_t>(n + 1, 0));
}

MoleculeType molecule_dot(const MoleculeType& k, const MoleculeType& kp)
{
    if (k.d() != kp.d())
        throw OperadError("molecule_dot: nucleus widths differ");
    std::vector<std::size_t> g(k.gaps().begin(), k.gaps().end() - 1);
    g.push_back(k.gaps().back() + kp.gaps().front());
    g.insert(g.end(), kp.gaps().begin() + 1, kp.gaps().end());
    return MoleculeType(k.d(), std::move(g));
}

nlohmann::json molecule_to_json(const MoleculeType& k)
{
    return {{"d", k.d()}, {"gaps", k.gaps()}};
}

MoleculeType molecule_from_json(const nlohmann::json& j)
{
    return MoleculeType(j.at("d").get<std::size_t>(), j.at("gaps").get<std::vector<std::size_t>>());
}

std::optional<std::vector<MoleculeType>> MoleculeOperad::enumerate(std::size_t n) const
{
    std::vector<MoleculeType> out;
    std::vector<std::size_t> g(n + 1, 0);
    while (true) {
        out.emplace_back(d_, g);
        std::size_t i = g.size();
        while (i > 0 && g[i - 1] == gap_cap_) {
            g[i - 1] = 0;
            --i;
        }
        if (i == 0)
            break;
        ++g[i - 1];
    }
    return out;
}

MultOperad<MoleculeOperad> make_molecule_operad(std::size_t d, std::size_t gap_cap)
{
    return {MoleculeOperad(d, gap_cap), molecule_unit(d, 0), molecule_unit(d, 2)};
}

} // namespace opmult
