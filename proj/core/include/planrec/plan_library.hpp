#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace planrec {

/// Index of an activity class within an alphabet's declaration order.
using ClassId = std::size_t;

/// The closed, ordered set of recognizable activity classes. The class
/// literally named "none" is distinguished: it marks frames in which no
/// activity is performed and may never appear as a plan step.
///
/// Immutable after construction; safe to share across threads.
struct ActivityAlphabet {
    std::vector<std::string> classes;
    std::optional<ClassId> none_index;

    static constexpr std::string_view kNoneName = "none";

    /// Builds an alphabet, locating the `none` class if declared.
    static ActivityAlphabet from_classes(std::vector<std::string> classes);

    std::optional<ClassId> index_of(std::string_view name) const;
    bool is_none(ClassId id) const { return none_index && *none_index == id; }
    std::size_t size() const { return classes.size(); }
};

/// One way of achieving a goal: a totally ordered activity sequence.
/// Steps are class names so that invalid libraries remain representable
/// for validate_library to report on.
struct Plan {
    std::vector<std::string> steps;
};

struct Goal {
    std::string name;
    std::vector<Plan> plans;
};

/// Named top-level goals, each with one or more plans over a shared
/// alphabet. Declaration order of goals and plans is preserved and used
/// for deterministic iteration and tie-breaking downstream.
///
/// Two goals may share an identical plan; that is genuine ambiguity, not
/// an error. Immutable after construction; safe to share across
/// concurrent recognizer sessions.
struct PlanLibrary {
    ActivityAlphabet alphabet;
    std::vector<Goal> goals;

    std::optional<std::size_t> goal_index(std::string_view name) const;
    std::size_t total_plan_count() const;
};

/// Parses a library document (see README "Library file format").
/// Rejects everything validate_library would flag, so a returned library
/// always validates cleanly. Throws FormatError with position context.
PlanLibrary parse_library(std::string_view text);

/// Canonical textual form; parse_library(serialize_library(lib)) is
/// structurally equal to lib.
std::string serialize_library(const PlanLibrary& lib);

/// Returns one human-readable violation per broken invariant, naming the
/// goal/plan/step at fault. Empty list iff the library is valid.
std::vector<std::string> validate_library(const PlanLibrary& lib);

bool operator==(const ActivityAlphabet& a, const ActivityAlphabet& b);
bool operator==(const Plan& a, const Plan& b);
bool operator==(const Goal& a, const Goal& b);
bool operator==(const PlanLibrary& a, const PlanLibrary& b);

} // namespace planrec
