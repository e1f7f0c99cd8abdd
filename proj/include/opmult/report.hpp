#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace opmult {

enum class Verdict { pass, fail, unchecked, skipped };

std::string to_string(Verdict v);

/// One failing instance of a law: the inputs and both evaluated sides.
struct Violation {
    std::string law;
    nlohmann::json inputs;
    nlohmann::json lhs;
    nlohmann::json rhs;
};

/// Outcome of an exhaustive check. Only the first `max_witnesses` violations
/// are kept; `violation_count` is the full tally.
struct CheckReport {
    static constexpr std::size_t max_witnesses = 25;

    std::string check;
    nlohmann::json bound = nlohmann::json::object();
    Verdict verdict = Verdict::pass;
    std::vector<Violation> violations;
    std::size_t violation_count = 0;
    std::size_t cases = 0;
    std::string note;
    /// Check-specific extra data (e.g. the sign conventions that were tried).
    nlohmann::json details;
    double elapsed_ms = 0.0;

    bool passed() const { return verdict == Verdict::pass; }
    bool failed() const { return verdict == Verdict::fail; }

    void record(Violation v);
    /// Appends cases and violations of `other` (same check) in order.
    void absorb(CheckReport&& other);
    /// Sets verdict from violation_count unless already unchecked/skipped.
    void finish();

    /// `elapsed_ms` is only emitted when `with_timing` is set, so default
    /// output is byte-stable across runs.
    nlohmann::json to_json(bool with_timing = false) const;
};

/// Runs f() and stamps its wall time on the returned report.
template <typename F>
CheckReport timed(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    CheckReport r = f();
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace opmult
