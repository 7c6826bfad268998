#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "planrec/eval.hpp"
#include "planrec/plan_library.hpp"
#include "planrec/recognizer.hpp"
#include "planrec/smoothing.hpp"

namespace planrec {

/// Incremental observation-stream reader. Accepts both stream formats:
/// line-delimited records `{"frame": <int>, "probs": [...]}` and the
/// column-text alternative (header row of class names, one row per
/// frame). Format is detected from the first non-empty line.
///
/// Column-text columns may appear in any alphabet order; an optional
/// leading `frame` column carries explicit frame ids, otherwise rows are
/// numbered from 0.
class ObservationReader {
public:
    ObservationReader(std::istream& in, const ActivityAlphabet& alphabet);
    ~ObservationReader();

    ObservationReader(const ObservationReader&) = delete;
    ObservationReader& operator=(const ObservationReader&) = delete;

    /// Next frame, or nullopt at end of stream. Throws FormatError with
    /// line context on malformed input.
    std::optional<FrameObservation> next();

    /// Drains the stream.
    std::vector<FrameObservation> read_all();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::vector<FrameObservation> read_observations(std::istream& in,
                                                const ActivityAlphabet& alphabet);

void write_observation(std::ostream& out, const FrameObservation& obs);
void write_observations(std::ostream& out, std::span<const FrameObservation> frames);

/// Labeled-frame records `{"frame": <int>, "label": <string>}`, used for
/// smoothed streams and ground-truth sidecars.
void write_labeled_frame(std::ostream& out, std::int64_t frame_id, std::string_view label);
void write_labeled_frames(std::ostream& out, std::span<const LabeledFrame> labels,
                          const ActivityAlphabet& alphabet);
struct NamedLabel {
    std::int64_t frame_id = 0;
    std::string label;
};
std::vector<NamedLabel> read_labeled_frames(std::istream& in);

/// Trace records `{"frame", "label", "new_segment", "candidates",
/// "hypotheses"}`; candidates and hypothesis counts in library goal
/// declaration order.
void write_trace_record(std::ostream& out, const TraceRecord& record, const PlanLibrary& lib);
void write_trace(std::ostream& out, const RecognitionTrace& trace, const PlanLibrary& lib);
std::vector<EvalFrame> read_trace(std::istream& in);

std::string serialize_report(const EvalReport& report);
void write_report(std::ostream& out, const EvalReport& report);

} // namespace planrec
