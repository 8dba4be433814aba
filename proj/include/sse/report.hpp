#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace sse {

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Ordered list of named checks. Accepted iff every check passed and there
/// is at least one check.
struct Report {
    std::string title;
    std::vector<std::string> notes;
    std::vector<Check> checks;

    Check& add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
        return checks.back();
    }

    bool accepted() const {
        return !checks.empty() &&
               std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }

    std::vector<const Check*> failures() const {
        std::vector<const Check*> out;
        for (const Check& c : checks)
            if (!c.passed) out.push_back(&c);
        return out;
    }

    const Check* find(const std::string& name) const {
        for (const Check& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    /// Appends `other`'s checks with `prefix` prepended to each name.
    void absorb(const Report& other, const std::string& prefix) {
        for (const Check& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
    }
};

}  // namespace sse
