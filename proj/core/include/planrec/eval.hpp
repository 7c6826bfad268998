#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace planrec {

/// One trace frame as consumed by the scorer: label and candidate names
/// only, so traces can be scored without the library that produced them.
struct EvalFrame {
    std::int64_t frame_id = 0;
    std::string label;
    std::vector<std::string> candidates;
};

struct EvalReport {
    std::size_t frames_total = 0;
    bool converged = false;
    /// 0-based trace index of the convergence point, present iff
    /// converged. An index rather than a raw frame id, so reports are
    /// invariant under order-preserving frame-id relabeling.
    std::optional<std::size_t> convergence_frame;
    double mean_precision = 0.0;
    double mean_recall = 0.0;
    double frame_accuracy = 0.0;
};

/// Smallest trace index f such that the candidate set is exactly
/// {true_goal} at every frame from f to the end; absent if there is none.
/// Throws DomainError on an empty trace.
std::optional<std::size_t> convergence_point(std::span<const EvalFrame> trace,
                                             std::string_view true_goal);

/// Per-frame precision is the true goal's share of the candidate set
/// (1/|C| when present, else 0); recall is membership. Returns the means.
/// Throws DomainError on an empty trace.
std::pair<double, double> candidate_metrics(std::span<const EvalFrame> trace,
                                            std::string_view true_goal);

/// Fraction of positions where the label sequences agree. Throws
/// DomainError on length mismatch. Empty sequences count as full
/// agreement.
double frame_accuracy(std::span<const std::string> predicted,
                      std::span<const std::string> truth);

/// Bundles the three scores for one trace against its ground truth.
EvalReport evaluate(std::span<const EvalFrame> trace,
                    std::span<const std::string> truth_labels,
                    std::string_view true_goal);

} // namespace planrec
