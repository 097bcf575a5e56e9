// Copyright 2026 the algint authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace algint {

enum class errc {
    invalid_input,
    unsupported_degree,
    not_squarefree,
    boundary_ambiguous,
    degenerate_strips,
    budget_exceeded,
    invalid_region,
    invalid_curve,
    invalid_gamma,
    invalid_weights,
    invalid_level,
    target_in_exceptional_set,
    slack_exhausted,
    degenerate_target,
    construction_failed,
    cannot_fit_zero_counts,
    internal,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::invalid_input: return "invalid-input";
    case errc::unsupported_degree: return "unsupported-degree";
    case errc::not_squarefree: return "not-squarefree";
    case errc::boundary_ambiguous: return "boundary-ambiguous";
    case errc::degenerate_strips: return "degenerate-strips";
    case errc::budget_exceeded: return "budget-exceeded";
    case errc::invalid_region: return "invalid-region";
    case errc::invalid_curve: return "invalid-curve";
    case errc::invalid_gamma: return "invalid-gamma";
    case errc::invalid_weights: return "invalid-weights";
    case errc::invalid_level: return "invalid-level";
    case errc::target_in_exceptional_set: return "target-in-exceptional-set";
    case errc::slack_exhausted: return "slack-exhausted";
    case errc::degenerate_target: return "degenerate-target";
    case errc::construction_failed: return "construction-failed";
    case errc::cannot_fit_zero_counts: return "cannot-fit-zero-counts";
    case errc::internal: return "internal-error";
    }
    return "internal-error";
}

/** error: the library-wide exception. Carries a stable code so callers
 *  (notably the CLI) can map failures to exit statuses. */
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace algint
