#pragma once

#include <span>
#include <string>

#include "planrec/plan_library.hpp"
#include "planrec/recognizer.hpp"

namespace planrec {

/// Brute-force reference recognizer: rescans every plan of every goal in
/// full on each query and counts plans that the segment sequence is a
/// proper prefix of, or equal to. Shares no state or code path with
/// RecognitionState; quadratic and intended for cross-checking.
///
/// Segments must already be collapsed: no `none`, no consecutive
/// duplicates (throws DomainError otherwise).
CandidateGoalSet oracle_candidates(const PlanLibrary& lib,
                                   std::span<const std::string> segments);

} // namespace planrec
