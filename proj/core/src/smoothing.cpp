#include "planrec/smoothing.hpp"

#include <cmath>
#include <string>

#include "planrec/errors.hpp"

namespace planrec {

namespace {

constexpr double kStrictSumTolerance = 1e-6;
constexpr double kNormalizeSumTolerance = 1e-3;

/// Validates the vector; returns the scale factor to apply (1 unless
/// normalizing).
double checked_scale(const ActivityAlphabet& alphabet, const FrameObservation& obs,
                     const SmoothingConfig& cfg) {
    if (obs.frame_id < 0) {
        throw FormatError("frame " + std::to_string(obs.frame_id) + ": negative frame id");
    }
    if (obs.probs.size() != alphabet.size()) {
        throw FormatError("frame " + std::to_string(obs.frame_id) + ": expected " +
                          std::to_string(alphabet.size()) + " probabilities, got " +
                          std::to_string(obs.probs.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < obs.probs.size(); ++i) {
        const double p = obs.probs[i];
        if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
            throw FormatError("frame " + std::to_string(obs.frame_id) + ": probability for \"" +
                              alphabet.classes[i] + "\" out of [0, 1]");
        }
        sum += p;
    }
    const double tolerance = cfg.normalize ? kNormalizeSumTolerance : kStrictSumTolerance;
    if (std::abs(sum - 1.0) > tolerance) {
        throw FormatError("frame " + std::to_string(obs.frame_id) +
                          ": probabilities sum to " + std::to_string(sum));
    }
    return cfg.normalize ? 1.0 / sum : 1.0;
}

} // namespace

ClassId smooth_frame(const ActivityAlphabet& alphabet, const FrameObservation& obs,
                     std::optional<ClassId> prev, const SmoothingConfig& cfg) {
    const double scale = checked_scale(alphabet, obs, cfg);

    // Top-2 scan in declaration order; strict > keeps the earlier index
    // on ties, which is the alphabet-order tie-break.
    std::size_t best = 0;
    std::size_t second = alphabet.size(); // sentinel: no runner-up yet
    for (std::size_t i = 1; i < obs.probs.size(); ++i) {
        if (obs.probs[i] > obs.probs[best]) {
            second = best;
            best = i;
        } else if (second == alphabet.size() || obs.probs[i] > obs.probs[second]) {
            second = i;
        }
    }

    if (second == alphabet.size()) {
        return best; // single-class alphabet
    }
    if (!prev) {
        return best;
    }
    if (*prev >= alphabet.size()) {
        throw DomainError("previous label id " + std::to_string(*prev) + " out of range");
    }
    const double margin = (obs.probs[best] - obs.probs[second]) * scale;
    if (margin < cfg.theta && (*prev == best || *prev == second)) {
        return *prev;
    }
    return best;
}

std::vector<LabeledFrame> smooth_stream(const ActivityAlphabet& alphabet,
                                        std::span<const FrameObservation> stream,
                                        const SmoothingConfig& cfg) {
    std::vector<LabeledFrame> out;
    out.reserve(stream.size());
    std::optional<ClassId> prev;
    std::optional<std::int64_t> prev_id;
    for (const auto& obs : stream) {
        if (prev_id && obs.frame_id <= *prev_id) {
            throw FormatError("frame " + std::to_string(obs.frame_id) +
                              ": frame ids must be strictly increasing (previous " +
                              std::to_string(*prev_id) + ")");
        }
        const ClassId label = smooth_frame(alphabet, obs, prev, cfg);
        out.push_back({obs.frame_id, label});
        prev = label;
        prev_id = obs.frame_id;
    }
    return out;
}

std::vector<Segment> collapse_runs(const ActivityAlphabet& alphabet,
                                   std::span<const LabeledFrame> labels,
                                   NonePolicy none_policy) {
    std::vector<Segment> segments;
    std::optional<std::int64_t> prev_id;
    for (const auto& frame : labels) {
        if (prev_id && frame.frame_id <= *prev_id) {
            throw FormatError("frame " + std::to_string(frame.frame_id) +
                              ": frame ids must be strictly increasing (previous " +
                              std::to_string(*prev_id) + ")");
        }
        prev_id = frame.frame_id;
        if (frame.label >= alphabet.size()) {
            throw DomainError("frame " + std::to_string(frame.frame_id) + ": label id " +
                              std::to_string(frame.label) + " out of range");
        }
        if (none_policy == NonePolicy::Skip && alphabet.is_none(frame.label)) {
            continue;
        }
        // Equal label on the last emitted segment covers both plain run
        // continuation and re-entry across a dropped `none` gap; the
        // segment absorbs the gap either way.
        if (!segments.empty() && segments.back().label == frame.label) {
            segments.back().end_frame = frame.frame_id;
        } else {
            segments.push_back({frame.label, frame.frame_id, frame.frame_id});
        }
    }
    return segments;
}

} // namespace planrec
