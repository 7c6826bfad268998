#include "planrec/recognizer.hpp"

#include <algorithm>
#include <sstream>

#include "planrec/errors.hpp"

namespace planrec {

bool CandidateGoalSet::empty() const {
    return std::ranges::all_of(per_goal, [](std::uint32_t n) { return n == 0; });
}

std::size_t CandidateGoalSet::goal_count() const {
    return static_cast<std::size_t>(
        std::ranges::count_if(per_goal, [](std::uint32_t n) { return n > 0; }));
}

std::vector<std::size_t> CandidateGoalSet::goal_indices() const {
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < per_goal.size(); ++i) {
        if (per_goal[i] > 0) {
            indices.push_back(i);
        }
    }
    return indices;
}

std::vector<std::string> CandidateGoalSet::goal_names(const PlanLibrary& lib) const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < per_goal.size() && i < lib.goals.size(); ++i) {
        if (per_goal[i] > 0) {
            names.push_back(lib.goals[i].name);
        }
    }
    return names;
}

bool CandidateGoalSet::subset_of(const CandidateGoalSet& other) const {
    for (std::size_t i = 0; i < per_goal.size(); ++i) {
        if (per_goal[i] > 0 && !other.contains(i)) {
            return false;
        }
    }
    return true;
}

RecognitionState::RecognitionState(const PlanLibrary& lib, RecognizerOptions options)
    : lib_(&lib), options_(options) {}

RecognitionState RecognitionState::init(const PlanLibrary& lib, RecognizerOptions options) {
    const auto violations = validate_library(lib);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "cannot initialize recognizer, invalid library:";
        for (const auto& violation : violations) {
            msg << "\n  " << violation;
        }
        throw DomainError(msg.str());
    }

    RecognitionState state(lib, options);
    state.compiled_.resize(lib.goals.size());
    for (std::size_t g = 0; g < lib.goals.size(); ++g) {
        const auto& goal = lib.goals[g];
        state.compiled_[g].resize(goal.plans.size());
        for (std::size_t p = 0; p < goal.plans.size(); ++p) {
            auto& steps = state.compiled_[g][p];
            steps.reserve(goal.plans[p].steps.size());
            for (const auto& step : goal.plans[p].steps) {
                steps.push_back(*lib.alphabet.index_of(step));
            }
            state.alive_.push_back({g, p, 0});
        }
    }
    return state;
}

bool RecognitionState::opens_segment(ClassId label) const {
    if (options_.none_policy == NonePolicy::Skip && lib_->alphabet.is_none(label)) {
        return false;
    }
    return !last_label_ || *last_label_ != label;
}

CandidateGoalSet RecognitionState::observe(ClassId label) {
    if (label >= lib_->alphabet.size()) {
        throw DomainError("label id " + std::to_string(label) + " out of range (alphabet size " +
                          std::to_string(lib_->alphabet.size()) + ")");
    }
    // `none` under the skip policy neither advances hypotheses nor
    // updates the run label, so equal labels across a pause merge.
    if (options_.none_policy == NonePolicy::Skip && lib_->alphabet.is_none(label)) {
        return candidates();
    }
    if (last_label_ && *last_label_ == label) {
        return candidates(); // run continuation
    }

    // New segment. last_label_ tracks the label stream even when the
    // segment is discarded or leaves the state dead, keeping the trace's
    // segment boundaries aligned with collapse_runs.
    last_label_ = label;

    std::vector<Hypothesis> next;
    next.reserve(alive_.size());
    for (const auto& hyp : alive_) {
        const auto& steps = compiled_[hyp.goal_index][hyp.plan_index];
        if (hyp.position < steps.size() && steps[hyp.position] == label) {
            next.push_back({hyp.goal_index, hyp.plan_index, hyp.position + 1});
        }
    }

    if (next.empty() && !alive_.empty()) {
        switch (options_.on_dead) {
        case OnDeadPolicy::Strict:
            alive_.clear();
            break;
        case OnDeadPolicy::Skip:
            // Discard the inconsistent segment; hypotheses are untouched.
            break;
        case OnDeadPolicy::Halt:
            alive_.clear();
            throw DeadStateError("segment \"" + lib_->alphabet.classes[label] +
                                 "\" is inconsistent with every remaining hypothesis");
        }
    } else {
        alive_ = std::move(next);
    }
    return candidates();
}

CandidateGoalSet RecognitionState::candidates() const {
    CandidateGoalSet set;
    set.per_goal.assign(lib_->goals.size(), 0);
    for (const auto& hyp : alive_) {
        ++set.per_goal[hyp.goal_index];
    }
    return set;
}

StreamRecognizer::StreamRecognizer(const PlanLibrary& lib, SmoothingConfig smoothing,
                                   RecognizerOptions options)
    : lib_(&lib), smoothing_(smoothing), state_(RecognitionState::init(lib, options)) {}

TraceRecord StreamRecognizer::feed(const FrameObservation& obs) {
    if (prev_frame_id_ && obs.frame_id <= *prev_frame_id_) {
        throw FormatError("frame " + std::to_string(obs.frame_id) +
                          ": frame ids must be strictly increasing (previous " +
                          std::to_string(*prev_frame_id_) + ")");
    }
    prev_frame_id_ = obs.frame_id;

    const ClassId label = smooth_frame(lib_->alphabet, obs, prev_smoothed_, smoothing_);
    prev_smoothed_ = label;

    TraceRecord record;
    record.frame_id = obs.frame_id;
    record.label = label;
    record.new_segment = state_.opens_segment(label);
    try {
        record.candidates = state_.observe(label);
    } catch (const DeadStateError& e) {
        throw DeadStateError("frame " + std::to_string(obs.frame_id) + ": " + e.what());
    }
    return record;
}

RecognitionTrace recognize_stream(const PlanLibrary& lib,
                                  std::span<const FrameObservation> stream,
                                  const SmoothingConfig& smoothing, RecognizerOptions options) {
    StreamRecognizer recognizer(lib, smoothing, options);
    RecognitionTrace trace;
    trace.records.reserve(stream.size());
    for (const auto& obs : stream) {
        trace.records.push_back(recognizer.feed(obs));
    }
    return trace;
}

} // namespace planrec
