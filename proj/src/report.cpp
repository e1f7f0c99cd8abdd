#include "opmult/report.hpp"

namespace opmult {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unchecked: return "unchecked";
    case Verdict::skipped: return "skipped";
    }
    return "unknown";
}

void CheckReport::record(Violation v)
{
    ++violation_count;
    if (violations.size() < max_witnesses)
        violations.push_back(std::move(v));
}

void CheckReport::absorb(CheckReport&& other)
{
    cases += other.cases;
    violation_count += other.violation_count;
    for (auto& v : other.violations) {
        if (violations.size() >= max_witnesses)
            break;
        violations.push_back(std::move(v));
    }
    if (other.verdict == Verdict::unchecked)
        verdict = Verdict::unchecked;
    if (note.empty())
        note = std::move(other.note);
}

void CheckReport::finish()
{
    if (verdict == Verdict::unchecked || verdict == Verdict::skipped)
        return;
    verdict = violation_count == 0 ? Verdict::pass : Verdict::fail;
}

nlohmann::json CheckReport::to_json(bool with_timing) const
{
    nlohmann::json j;
    j["check"] = check;
    j["bound"] = bound;
    j["verdict"] = to_string(verdict);
    j["cases"] = cases;
    j["violation_count"] = violation_count;
    auto arr = nlohmann::json::array();
    for (const auto& v : violations)
        arr.push_back({{"law", v.law}, {"inputs", v.inputs}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    j["violations"] = std::move(arr);
    if (!note.empty())
        j["note"] = note;
    if (!details.is_null())
        j["details"] = details;
    if (with_timing)
        j["elapsed_ms"] = elapsed_ms;
    return j;
}

} // namespace opmult
