#pragma once

#include <string>
#include <utility>
#include <vector>

namespace oddgray {

struct Failure {
    std::string check;
    std::string item;
};

// Outcome of a checker: passed iff no failures were recorded.
struct VerificationReport {
    std::vector<Failure> failures;

    bool passed() const { return failures.empty(); }
    void fail(std::string check, std::string item) {
        failures.push_back({std::move(check), std::move(item)});
    }
    void merge(const VerificationReport& other) {
        failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
    std::string summary(std::size_t limit = 5) const {
        if (passed()) return "ok";
        std::string s = std::to_string(failures.size()) + " failure(s):";
        for (std::size_t i = 0; i < failures.size() && i < limit; ++i) {
            s += " [" + failures[i].check + ": " + failures[i].item + "]";
        }
        return s;
    }
};

}  // namespace oddgray
