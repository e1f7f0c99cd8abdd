#include "opmult/bruhat.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace opmult {

std::uint64_t binomial(std::size_t n, std::size_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<Subset> k_subsets(std::size_t n, std::size_t k)
{
    std::vector<Subset> out;
    if (k > n)
        return out;
    Subset s(k);
    for (std::size_t i = 0; i < k; ++i)
        s[i] = static_cast<unsigned>(i + 1);
    while (true) {
        out.push_back(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i)
            --i;
        if (i == 0)
            break;
        ++s[i - 1];
        for (std::size_t t = i; t < k; ++t)
            s[t] = s[t - 1] + 1;
    }
    return out;
}

std::vector<Subset> packet(const Subset& p)
{
    // Dropping the largest element first gives lexicographic order.
    std::vector<Subset> out;
    for (std::size_t drop = p.size(); drop-- > 0;) {
        Subset s;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (i != drop)
                s.push_back(p[i]);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

void validate_subsets(std::size_t n, std::size_t d, const std::vector<Subset>& inv)
{
    for (const auto& t : inv) {
        bool ok = t.size() == d + 1;
        for (std::size_t i = 0; ok && i < t.size(); ++i)
            ok = t[i] >= 1 && t[i] <= n && (i == 0 || t[i - 1] < t[i]);
        if (!ok) {
            std::ostringstream os;
            os << "malformed inversion subset {";
            for (auto v : t)
                os << v << ' ';
            os << "} for n=" << n << ", d=" << d;
            throw OperadError(os.str());
        }
    }
}

/// Indexing of C([n], d+1) and the packets of all (d+2)-subsets, used for
/// bitmask enumeration.
struct PacketTable {
    std::size_t n, d;
    std::vector<Subset> subsets;
    std::map<Subset, std::size_t> index;
    std::vector<std::vector<std::size_t>> packets;

    PacketTable(std::size_t n_, std::size_t d_) : n(n_), d(d_), subsets(k_subsets(n_, d_ + 1))
    {
        for (std::size_t i = 0; i < subsets.size(); ++i)
            index.emplace(subsets[i], i);
        for (const auto& p : k_subsets(n, d + 2)) {
            std::vector<std::size_t> ix;
            for (const auto& s : packet(p))
                ix.push_back(index.at(s));
            packets.push_back(std::move(ix));
        }
    }

    bool consistent(std::uint64_t mask) const
    {
        for (const auto& pk : packets) {
            // Bits along the chain must read 1..10..0 or 0..01..1.
            std::size_t changes = 0;
            bool first = (mask >> pk[0]) & 1u;
            bool prev = first;
            for (std::size_t i = 1; i < pk.size(); ++i) {
                const bool b = (mask >> pk[i]) & 1u;
                if (b != prev)
                    ++changes;
                prev = b;
            }
            if (changes > 1)
                return false;
        }
        return true;
    }

    std::vector<Subset> decode(std::uint64_t mask) const
    {
        std::vector<Subset> out;
        for (std::size_t i = 0; i < subsets.size(); ++i)
            if ((mask >> i) & 1u)
                out.push_back(subsets[i]);
        return out;
    }
};

bool segment_ok(const std::vector<bool>& bits)
{
    std::size_t changes = 0;
    for (std::size_t i = 1; i < bits.size(); ++i)
        if (bits[i] != bits[i - 1])
            ++changes;
    return changes <= 1;
}

} // namespace

bool is_consistent(std::size_t n, std::size_t d, const std::vector<Subset>& inv)
{
    validate_subsets(n, d, inv);
    const std::set<Subset> members(inv.begin(), inv.end());
    for (const auto& p : k_subsets(n, d + 2)) {
        std::vector<bool> bits;
        for (const auto& s : packet(p))
            bits.push_back(members.contains(s));
        if (!segment_ok(bits))
            return false;
    }
    return true;
}

BruhatElement::BruhatElement(std::size_t n, std::size_t d, std::vector<Subset> inv)
    : n_(n), d_(d), inv_(std::move(inv))
{
    if (d == 0)
        throw OperadError("Bruhat order d must be positive");
    std::sort(inv_.begin(), inv_.end());
    if (std::adjacent_find(inv_.begin(), inv_.end()) != inv_.end())
        throw OperadError("repeated subset in inversion set");
    if (!is_consistent(n, d, inv_))
        throw OperadError("inconsistent inversion set " + to_string());
}

bool BruhatElement::contains(const Subset& t) const
{
    return std::binary_search(inv_.begin(), inv_.end(), t);
}

std::strong_ordering BruhatElement::operator<=>(const BruhatElement& o) const
{
    if (auto c = n_ <=> o.n_; c != 0)
        return c;
    if (auto c = d_ <=> o.d_; c != 0)
        return c;
    if (auto c = inv_.size() <=> o.inv_.size(); c != 0)
        return c;
    return inv_ <=> o.inv_;
}

std::string BruhatElement::to_string() const
{
    std::ostringstream os;
    os << "B(" << n_ << "," << d_ << "){";
    for (std::size_t i = 0; i < inv_.size(); ++i) {
        if (i)
            os << ',';
        for (auto v : inv_[i])
            os << v;
    }
    os << '}';
    return os.str();
}

BruhatElement unit_element(std::size_t n, std::size_t d) { return BruhatElement(n, d, {}); }

std::vector<BruhatElement> enumerate_bruhat(std::size_t n, std::size_t d, EnumerationMethod method)
{
    if (d == 0)
        throw OperadError("Bruhat order d must be positive");
    const std::uint64_t bits = binomial(n, d + 1);
    const std::size_t limit =
        method == EnumerationMethod::closure ? max_closure_bits : max_exhaustive_bits;
    if (bits > limit)
        throw std::length_error("enumerate_bruhat: C(" + std::to_string(n) + "," +
                                std::to_string(d + 1) + ") = " + std::to_string(bits) +
                                " exceeds bound " + std::to_string(limit));
    const PacketTable table(n, d);

    std::set<std::uint64_t> found;
    if (method == EnumerationMethod::exhaustive) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask)
            if (table.consistent(mask))
                found.insert(mask);
    } else {
        std::deque<std::uint64_t> frontier{0};
        found.insert(0);
        while (!frontier.empty()) {
            const std::uint64_t cur = frontier.front();
            frontier.pop_front();
            for (std::size_t i = 0; i < bits; ++i) {
                const std::uint64_t next = cur | (std::uint64_t{1} << i);
                if (next == cur || found.contains(next) || !table.consistent(next))
                    continue;
                found.insert(next);
                frontier.push_back(next);
            }
        }
    }

    std::vector<BruhatElement> out;
    out.reserve(found.size());
    for (auto mask : found)
        out.emplace_back(n, d, table.decode(mask));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BruhatElement> covers(const BruhatElement& b)
{
    std::vector<BruhatElement> out;
    for (const auto& t : k_subsets(b.n(), b.d() + 1)) {
        if (b.contains(t))
            continue;
        auto inv = b.inv();
        inv.push_back(t);
        std::sort(inv.begin(), inv.end());
        if (is_consistent(b.n(), b.d(), inv))
            out.emplace_back(b.n(), b.d(), std::move(inv));
    }
    std::sort(out.begin(), out.end());
    return out;
}

BruhatElement perm_to_bruhat(const Permutation& x)
{
    std::vector<Subset> inv;
    for (auto [a, b] : x.inversions())
        inv.push_back({a, b});
    return BruhatElement(x.size(), 1, std::move(inv));
}

Permutation bruhat_to_perm(const BruhatElement& b)
{
    if (b.d() != 1)
        throw OperadError("bruhat_to_perm needs d = 1, got d = " + std::to_string(b.d()));
    const std::size_t n = b.n();
    // c[a] = number of larger values placed before a.
    std::vector<unsigned> before(n + 1, 0);
    for (const auto& t : b.inv())
        ++before[t[0]];
    std::vector<unsigned> word;
    for (std::size_t a = n; a >= 1; --a) {
        if (before[a] > word.size())
            throw OperadError("inversion set is not realized by a permutation: " + b.to_string());
        word.insert(word.begin() + before[a], static_cast<unsigned>(a));
    }
    Permutation p(std::move(word));
    if (perm_to_bruhat(p) != b)
        throw OperadError("inversion set is not realized by a permutation: " + b.to_string());
    return p;
}

nlohmann::json bruhat_to_json(const BruhatElement& b)
{
    return {{"n", b.n()}, {"d", b.d()}, {"inv", b.inv()}};
}

BruhatElement bruhat_from_json(const nlohmann::json& j)
{
    return BruhatElement(j.at("n").get<std::size_t>(), j.at("d").get<std::size_t>(),
                         j.at("inv").get<std::vector<Subset>>());
}

BruhatElement BruhatInsertion::operator()(const BruhatElement& b, std::size_t j,
                                          const BruhatElement& c) const
{
    if (b.d() != c.d())
        throw OperadError("bruhat_insertion: order mismatch");
    if (auto it = plugins_.find(b.d()); it != plugins_.end())
        return it->second(b, j, c);
    return bruhat_insertion(b, j, c);
}

BruhatElement bruhat_insertion(const BruhatElement& b, std::size_t j, const BruhatElement& c)
{
    if (b.d() != c.d())
        throw OperadError("bruhat_insertion: order mismatch");
    if (b.d() != 1)
        throw NotImplementedError("bruhat_insertion: d = " + std::to_string(b.d()) +
                                  " is not implemented; requires the [KS] 5.6 insertion");
    return perm_to_bruhat(insert_perm(bruhat_to_perm(b), j, bruhat_to_perm(c)));
}

SmallBruhatOperad::Element SmallBruhatOperad::insert(const Element& x, std::size_t j,
                                                     const Element& y) const
{
    if (x.d() != d_ || y.d() != d_)
        throw OperadError("small Bruhat operad: order mismatch");
    if (j >= arity(x))
        throw OperadError("small Bruhat operad: slot " + std::to_string(j) +
                          " out of range for arity " + std::to_string(arity(x)));
    return insertion_(x, j * d_, y);
}

std::optional<std::vector<SmallBruhatOperad::Element>>
SmallBruhatOperad::enumerate(std::size_t n) const
{
    if (binomial(n * d_, d_ + 1) > max_bits_)
        return std::nullopt;
    return enumerate_bruhat(n * d_, d_);
}

MultOperad<SmallBruhatOperad> make_small_bruhat_operad(std::size_t d, BruhatInsertion insertion)
{
    return {SmallBruhatOperad(d, std::move(insertion)), unit_element(0, d), unit_element(2 * d, d)};
}

// ---------------------------------------------------------------------------

std::vector<Subset> WiringDiagram::reversed_triples() const
{
    std::map<std::pair<unsigned, unsigned>, std::size_t> when;
    for (std::size_t t = 0; t < crossings.size(); ++t)
        when[crossings[t]] = t;
    std::vector<Subset> out;
    for (const auto& tr : k_subsets(n, 3)) {
        const auto ab = when.at({tr[0], tr[1]});
        const auto ac = when.at({tr[0], tr[2]});
        const auto bc = when.at({tr[1], tr[2]});
        if (bc < ac && ac < ab)
            out.push_back(tr);
        else if (!(ab < ac && ac < bc))
            throw std::logic_error("crossing order is not admissible at triple " +
                                   std::to_string(tr[0]) + std::to_string(tr[1]) +
                                   std::to_string(tr[2]));
    }
    return out;
}

std::string WiringDiagram::order_string() const
{
    std::string s;
    for (std::size_t t = 0; t < crossings.size(); ++t) {
        if (t)
            s += ',';
        s += std::to_string(crossings[t].first) + std::to_string(crossings[t].second);
    }
    return s;
}

WiringDiagram wiring_diagram(const BruhatElement& b)
{
    if (b.d() != 2)
        throw std::invalid_argument("wiring diagrams need d = 2, got d = " + std::to_string(b.d()));
    const std::size_t n = b.n();
    const auto pairs = k_subsets(n, 2);
    std::map<Subset, std::size_t> index;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        index.emplace(pairs[i], i);

    std::vector<std::set<std::size_t>> succ(pairs.size());
    std::vector<std::size_t> indeg(pairs.size(), 0);
    const auto edge = [&](std::size_t u, std::size_t v) {
        if (succ[u].insert(v).second)
            ++indeg[v];
    };
    for (const auto& tr : k_subsets(n, 3)) {
        const auto ab = index.at({tr[0], tr[1]});
        const auto ac = index.at({tr[0], tr[2]});
        const auto bc = index.at({tr[1], tr[2]});
        if (b.contains(tr)) {
            edge(bc, ac);
            edge(ac, ab);
        } else {
            edge(ab, ac);
            edge(ac, bc);
        }
    }

    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (indeg[i] == 0)
            ready.push(i);
    WiringDiagram w;
    w.n = n;
    while (!ready.empty()) {
        const auto u = ready.top();
        ready.pop();
        w.crossings.emplace_back(pairs[u][0], pairs[u][1]);
        for (auto v : succ[u])
            if (--indeg[v] == 0)
                ready.push(v);
    }
    if (w.crossings.size() != pairs.size())
        throw std::logic_error("internal error: crossing constraints of " + b.to_string() +
                               " are cyclic, contradicting consistency");
    return w;
}

namespace {

/// Position (0-based, top to bottom) of each wire before each crossing.
/// Wires start in order 1..n; every crossing must swap adjacent wires.
std::vector<std::vector<unsigned>> wire_layout(const WiringDiagram& w)
{
    std::vector<unsigned> at(w.n);
    for (std::size_t p = 0; p < w.n; ++p)
        at[p] = static_cast<unsigned>(p + 1);
    std::vector<std::vector<unsigned>> frames{at};
    for (auto [a, b] : w.crossings) {
        auto pa = std::find(at.begin(), at.end(), a);
        auto pb = std::find(at.begin(), at.end(), b);
        if (std::abs(pa - pb) != 1)
            throw std::logic_error("crossing of non-adjacent wires " + std::to_string(a) + "," +
                                   std::to_string(b));
        std::iter_swap(pa, pb);
        frames.push_back(at);
    }
    return frames;
}

std::string render_ascii(const BruhatElement& b, const WiringDiagram& w)
{
    const auto frames = wire_layout(w);
    const std::size_t rows = w.n == 0 ? 0 : 2 * w.n - 1;
    std::vector<std::string> grid(rows);
    for (std::size_t r = 0; r < rows; ++r)
        grid[r] = r % 2 == 0 ? std::to_string(frames.front()[r / 2]) + " --" : "    ";
    for (std::size_t t = 0; t < w.crossings.size(); ++t) {
        const auto& before = frames[t];
        const auto top = static_cast<std::size_t>(
            std::find(before.begin(), before.end(), w.crossings[t].first) - before.begin());
        const auto other = static_cast<std::size_t>(
            std::find(before.begin(), before.end(), w.crossings[t].second) - before.begin());
        const std::size_t p = std::min(top, other);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == 2 * p)
                grid[r] += "\\ /-";
            else if (r == 2 * p + 1)
                grid[r] += " X  ";
            else if (r == 2 * p + 2)
                grid[r] += "/ \\-";
            else
                grid[r] += r % 2 == 0 ? "----" : "    ";
        }
    }
    for (std::size_t r = 0; r < rows; r += 2)
        grid[r] += "- " + std::to_string(frames.back()[r / 2]);

    std::ostringstream os;
    os << "element " << b.to_string() << '\n';
    os << "crossings " << w.order_string() << '\n';
    for (const auto& line : grid) {
        auto end = line.find_last_not_of(' ');
        os << (end == std::string::npos ? std::string() : line.substr(0, end + 1)) << '\n';
    }
    return os.str();
}

std::string render_svg(const BruhatElement& b, const WiringDiagram& w)
{
    const auto frames = wire_layout(w);
    const int dx = 40, dy = 30, margin = 30;
    const int width = margin * 2 + dx * static_cast<int>(w.crossings.size() + 1);
    const int height = margin * 2 + dy * static_cast<int>(w.n == 0 ? 0 : w.n - 1);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\">\n";
    os << "  <title>" << b.to_string() << " crossings " << w.order_string() << "</title>\n";
    for (unsigned wire = 1; wire <= w.n; ++wire) {
        os << "  <polyline fill=\"none\" stroke=\"black\" data-wire=\"" << wire << "\" points=\"";
        for (std::size_t t = 0; t < frames.size(); ++t) {
            const auto pos = std::find(frames[t].begin(), frames[t].end(), wire) - frames[t].begin();
            const int y = margin + dy * static_cast<int>(pos);
            const int x0 = margin + dx * static_cast<int>(t);
            os << (t ? " " : "") << x0 << ',' << y << ' ' << x0 + dx / 2 << ',' << y;
        }
        os << "\"/>\n";
    }
    for (std::size_t p = 0; p < w.n; ++p) {
        os << "  <text x=\"" << margin / 3 << "\" y=\"" << margin + dy * static_cast<int>(p) + 4
           << "\">" << frames.front()[p] << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace

std::string render_wiring(const BruhatElement& b, DiagramFormat format)
{
    const auto w = wiring_diagram(b);
    return format == DiagramFormat::ascii ? render_ascii(b, w) : render_svg(b, w);
}

} // namespace opmult
