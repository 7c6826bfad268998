#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "planrec/plan_library.hpp"
#include "planrec/smoothing.hpp"

namespace planrec {

/// A partially matched plan: `position` steps of plan `plan_index` of
/// goal `goal_index` have been matched. position == plan length marks a
/// completed hypothesis.
struct Hypothesis {
    std::size_t goal_index = 0;
    std::size_t plan_index = 0;
    std::size_t position = 0;

    bool operator==(const Hypothesis&) const = default;
};

/// Goals with at least one surviving hypothesis, plus per-goal hypothesis
/// counts aligned to the library's goal declaration order.
struct CandidateGoalSet {
    std::vector<std::uint32_t> per_goal;

    bool contains(std::size_t goal_index) const {
        return goal_index < per_goal.size() && per_goal[goal_index] > 0;
    }
    bool empty() const;
    std::size_t goal_count() const;
    /// Candidate goal indices in library declaration order.
    std::vector<std::size_t> goal_indices() const;
    std::vector<std::string> goal_names(const PlanLibrary& lib) const;
    /// True when this set's members are a subset of `other`'s.
    bool subset_of(const CandidateGoalSet& other) const;

    bool operator==(const CandidateGoalSet&) const = default;
};

enum class OnDeadPolicy {
    /// The state stays dead; candidate sets are empty for the rest of the
    /// stream.
    Strict,
    /// The offending segment is discarded and the prior hypothesis set is
    /// restored.
    Skip,
    /// Observation of the offending segment throws DeadStateError.
    Halt,
};

struct RecognizerOptions {
    NonePolicy none_policy = NonePolicy::Skip;
    OnDeadPolicy on_dead = OnDeadPolicy::Strict;
};

/// Incremental hypothesis tracker over a label stream. Collapses runs
/// internally (tracking the last opened segment's label), so it accepts
/// live frame-by-frame feeds; feeding it pre-collapsed segments works the
/// same way.
///
/// Updates are sequential within one stream; distinct states over a
/// shared library run fully in parallel.
class RecognitionState {
public:
    /// One hypothesis per (goal, plan) pair, at position 0. The library
    /// must validate cleanly (throws DomainError otherwise) and must
    /// outlive the state.
    static RecognitionState init(const PlanLibrary& lib, RecognizerOptions options = {});

    /// Feeds one frame label. Run continuations and, under the skip
    /// policy, `none` labels leave the hypothesis set unchanged; any
    /// other label opens a new segment and advances or eliminates each
    /// hypothesis. Returns the candidate set after the update.
    CandidateGoalSet observe(ClassId label);

    CandidateGoalSet candidates() const;

    bool dead() const { return alive_.empty(); }
    const std::vector<Hypothesis>& alive() const { return alive_; }
    std::optional<ClassId> last_label() const { return last_label_; }
    const RecognizerOptions& options() const { return options_; }

    /// True iff the label would open a new segment (used by trace
    /// writers; observe() itself performs the same test).
    bool opens_segment(ClassId label) const;

private:
    RecognitionState(const PlanLibrary& lib, RecognizerOptions options);

    const PlanLibrary* lib_;
    RecognizerOptions options_;
    /// Plans compiled to class ids, indexed [goal][plan].
    std::vector<std::vector<std::vector<ClassId>>> compiled_;
    std::vector<Hypothesis> alive_;
    std::optional<ClassId> last_label_;
};

/// Per-frame recognition record. new_segment is a property of the label
/// stream alone: the frame opened a segment under the collapsing rules,
/// whether or not any hypothesis survived it.
struct TraceRecord {
    std::int64_t frame_id = 0;
    ClassId label = 0;
    bool new_segment = false;
    CandidateGoalSet candidates;

    bool operator==(const TraceRecord&) const = default;
};

struct RecognitionTrace {
    std::vector<TraceRecord> records;

    bool operator==(const RecognitionTrace&) const = default;
};

/// Incremental frame-at-a-time pipeline: smoothing chained into a
/// RecognitionState. Suitable for live feeds; recognize_stream is the
/// whole-stream convenience wrapper.
class StreamRecognizer {
public:
    StreamRecognizer(const PlanLibrary& lib, SmoothingConfig smoothing,
                     RecognizerOptions options = {});

    /// Smooths and observes one frame. Frame ids must be strictly
    /// increasing across calls.
    TraceRecord feed(const FrameObservation& obs);

    const RecognitionState& state() const { return state_; }

private:
    const PlanLibrary* lib_;
    SmoothingConfig smoothing_;
    RecognitionState state_;
    std::optional<ClassId> prev_smoothed_;
    std::optional<std::int64_t> prev_frame_id_;
};

/// Runs the full pipeline over a stream: per frame, smooth -> collapse ->
/// observe. The segment sequence implied by the trace (labels of
/// new_segment frames) equals collapse_runs(smooth_stream(stream)) under
/// the same none policy.
RecognitionTrace recognize_stream(const PlanLibrary& lib,
                                  std::span<const FrameObservation> stream,
                                  const SmoothingConfig& smoothing,
                                  RecognizerOptions options = {});

} // namespace planrec
