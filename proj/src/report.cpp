#include "salemkit/report.hpp"

#include <algorithm>
#include <cmath>

namespace salemkit {

VerificationEntry make_entry(std::string check_id, double measured, double tolerance,
                             std::string anchor, std::string notes) {
    VerificationEntry e;
    e.check_id = std::move(check_id);
    e.measured = measured;
    e.tolerance = tolerance;
    e.pass = !std::isnan(measured) && measured <= tolerance;
    e.anchor = std::move(anchor);
    e.notes = std::move(notes);
    return e;
}

void VerificationReport::append(const VerificationReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

void VerificationReport::sort() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
}

bool VerificationReport::all_pass() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.pass; });
}

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

}  // namespace salemkit
