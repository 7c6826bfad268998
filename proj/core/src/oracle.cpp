#include "planrec/oracle.hpp"

#include "planrec/errors.hpp"

namespace planrec {

CandidateGoalSet oracle_candidates(const PlanLibrary& lib,
                                   std::span<const std::string> segments) {
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (segments[i] == ActivityAlphabet::kNoneName) {
            throw DomainError("oracle: segment " + std::to_string(i) +
                              " is \"none\"; input must be collapsed");
        }
        if (i > 0 && segments[i] == segments[i - 1]) {
            throw DomainError("oracle: consecutive duplicate segment \"" + segments[i] +
                              "\" at " + std::to_string(i) + "; input must be collapsed");
        }
    }

    CandidateGoalSet set;
    set.per_goal.assign(lib.goals.size(), 0);
    for (std::size_t g = 0; g < lib.goals.size(); ++g) {
        for (const auto& plan : lib.goals[g].plans) {
            // Proper prefix or full match, checked by scanning the whole
            // plan against the whole segment sequence.
            if (segments.size() > plan.steps.size()) {
                continue;
            }
            bool matches = true;
            for (std::size_t i = 0; i < segments.size(); ++i) {
                if (plan.steps[i] != segments[i]) {
                    matches = false;
                    break;
                }
            }
            if (matches) {
                ++set.per_goal[g];
            }
        }
    }
    return set;
}

} // namespace planrec
