#pragma once

#include <string>
#include <vector>

#include "coch/generate.hpp"
#include "coch/json_io.hpp"

namespace coch {

struct FuzzFailure {
    std::uint64_t seed;   // derived seed of the failing trial
    std::string identity; // violated identity name
    json input;           // shrunken failing instance
};

struct FuzzReport {
    std::string campaign;
    int trials = 0;
    std::vector<FuzzFailure> failures;

    bool pass() const { return failures.empty(); }
};

json report_to_json(const FuzzReport& r);

/* Campaigns: "tricks", "path", "semifree", "mc-ar", "mc-contr", plus the
 * deliberately broken "mutation-trick3-sign" and
 * "mutation-drop-side-conditions" used to prove the identity checks can
 * fail. Trials derive independent sub-seeds from cfg.seed; failing inputs
 * are shrunk by halving dimensions and support while the same identity
 * keeps failing. Unknown names raise PreconditionError. */
FuzzReport run_campaign(const std::string& name, int trials, const GenConfig& cfg);

std::vector<std::string> campaign_names();

}  // namespace coch
