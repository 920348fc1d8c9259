#pragma once

#include <string>
#include <vector>

namespace salemkit {

struct VerificationEntry {
    std::string check_id;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string notes;
    // the identity being checked, written out as a formula
    std::string anchor;
};

/// Builds an entry with pass computed as measured <= tolerance. A NaN
/// measurement never passes.
VerificationEntry make_entry(std::string check_id, double measured, double tolerance,
                             std::string anchor, std::string notes = {});

struct VerificationReport {
    std::vector<VerificationEntry> entries;

    void add(VerificationEntry e) { entries.push_back(std::move(e)); }
    void append(const VerificationReport& other);
    void sort();
    bool all_pass() const;
    std::size_t failures() const;
};

}  // namespace salemkit
