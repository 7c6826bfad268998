#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "planrec/plan_library.hpp"
#include "planrec/smoothing.hpp"

namespace planrec {

/// Synthetic-stream shape. The generator is fully deterministic given the
/// seed; the draw algorithm is fixed (see README "Reproducibility") so
/// identical configs reproduce identical streams bit-for-bit.
struct GenConfig {
    /// Frames per plan step: one count for all steps, or one per step
    /// (list length must equal the plan length).
    std::variant<std::size_t, std::vector<std::size_t>> frames_per_step = std::size_t{1};
    /// Probability mass moved off the true class each frame, in [0, 1).
    double noise = 0.0;
    /// Number of `none`-peaked frames inserted between consecutive steps.
    std::size_t none_gap = 0;
    std::uint64_t seed = 0;
};

struct GeneratedStream {
    std::vector<FrameObservation> frames;
    /// Ground-truth label per frame, aligned with `frames`.
    std::vector<LabeledFrame> truth;
};

/// Emits frames_per_step frames per plan step with 1 - noise mass on the
/// step's class and the noise mass spread uniformly at random over the
/// remaining classes, with none_gap `none`-peaked frames between steps.
/// Frame ids run 0..n-1.
GeneratedStream generate_stream(const PlanLibrary& lib, std::string_view goal,
                                std::size_t plan_index, const GenConfig& cfg);

} // namespace planrec
