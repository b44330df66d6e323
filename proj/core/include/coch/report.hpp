#pragma once

#include <string>
#include <vector>

namespace coch {

/* Outcome of a validator. Validators are total: they never throw on bad
 * data, they itemize every violated identity instead. */
struct Report {
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
    void fail(std::string item) { failures.push_back(std::move(item)); }
    void merge(const Report& other, const std::string& prefix = "") {
        for (const auto& f : other.failures)
            failures.push_back(prefix.empty() ? f : prefix + ": " + f);
    }
    std::string to_string() const {
        if (pass()) return "ok";
        std::string out;
        for (const auto& f : failures) {
            out += f;
            out += '\n';
        }
        return out;
    }
};

}  // namespace coch
