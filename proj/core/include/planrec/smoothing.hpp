#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "planrec/plan_library.hpp"

namespace planrec {

/// One frame's classifier output: a probability distribution aligned to
/// the alphabet's declaration order.
struct FrameObservation {
    std::int64_t frame_id = 0;
    std::vector<double> probs;
};

struct SmoothingConfig {
    /// Probability-difference threshold below which the top-2 classes are
    /// considered ambiguous and the previous frame's label may be kept.
    double theta = 0.1;
    /// Rescale vectors whose sum is within 1e-3 of 1; reject anything
    /// further off. Without it the sum must be within 1e-6 of 1.
    bool normalize = false;
};

struct LabeledFrame {
    std::int64_t frame_id = 0;
    ClassId label = 0;

    bool operator==(const LabeledFrame&) const = default;
};

/// A maximal run of equally labeled frames, closed on both ends.
struct Segment {
    ClassId label = 0;
    std::int64_t start_frame = 0;
    std::int64_t end_frame = 0;

    bool operator==(const Segment&) const = default;
};

enum class NonePolicy {
    /// Drop `none` runs; equal-labeled neighbors across a dropped run
    /// merge into one segment.
    Skip,
    /// `none` runs become segments like any other.
    Keep,
};

/// Disambiguates one frame. Let c1, c2 be the two highest-probability
/// classes, ties broken by alphabet order. If p(c1) - p(c2) < theta and
/// prev is one of {c1, c2}, returns prev; otherwise returns c1. Without a
/// previous label, returns c1 unconditionally.
ClassId smooth_frame(const ActivityAlphabet& alphabet, const FrameObservation& obs,
                     std::optional<ClassId> prev, const SmoothingConfig& cfg);

/// Folds smooth_frame over the stream, chaining each output as the next
/// frame's previous label. Frame ids must be strictly increasing.
std::vector<LabeledFrame> smooth_stream(const ActivityAlphabet& alphabet,
                                        std::span<const FrameObservation> stream,
                                        const SmoothingConfig& cfg);

/// Collapses maximal equal-label runs into segments. Frame ids must be
/// strictly increasing. See NonePolicy for `none` handling; a merged
/// segment spans the dropped gap (start of the first run to end of the
/// last).
std::vector<Segment> collapse_runs(const ActivityAlphabet& alphabet,
                                   std::span<const LabeledFrame> labels,
                                   NonePolicy none_policy);

} // namespace planrec
