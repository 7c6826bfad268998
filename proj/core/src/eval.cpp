#include "planrec/eval.hpp"

#include <algorithm>

#include "planrec/errors.hpp"

namespace planrec {

namespace {

bool exactly_true_goal(const EvalFrame& frame, std::string_view true_goal) {
    return frame.candidates.size() == 1 && frame.candidates.front() == true_goal;
}

bool contains_goal(const EvalFrame& frame, std::string_view true_goal) {
    return std::ranges::find(frame.candidates, true_goal) != frame.candidates.end();
}

} // namespace

std::optional<std::size_t> convergence_point(std::span<const EvalFrame> trace,
                                             std::string_view true_goal) {
    if (trace.empty()) {
        throw DomainError("convergence_point: empty trace");
    }
    // Scan backwards for the longest stable suffix of exactly {true_goal}.
    std::size_t stable_from = trace.size();
    for (std::size_t i = trace.size(); i-- > 0;) {
        if (!exactly_true_goal(trace[i], true_goal)) {
            break;
        }
        stable_from = i;
    }
    if (stable_from == trace.size()) {
        return std::nullopt;
    }
    return stable_from;
}

std::pair<double, double> candidate_metrics(std::span<const EvalFrame> trace,
                                            std::string_view true_goal) {
    if (trace.empty()) {
        throw DomainError("candidate_metrics: empty trace");
    }
    double precision_sum = 0.0;
    double recall_sum = 0.0;
    for (const auto& frame : trace) {
        if (contains_goal(frame, true_goal)) {
            precision_sum += 1.0 / static_cast<double>(frame.candidates.size());
            recall_sum += 1.0;
        }
    }
    const auto n = static_cast<double>(trace.size());
    return {precision_sum / n, recall_sum / n};
}

double frame_accuracy(std::span<const std::string> predicted,
                      std::span<const std::string> truth) {
    if (predicted.size() != truth.size()) {
        throw DomainError("frame_accuracy: length mismatch (" +
                          std::to_string(predicted.size()) + " predicted vs " +
                          std::to_string(truth.size()) + " truth)");
    }
    if (predicted.empty()) {
        return 1.0;
    }
    std::size_t matches = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (predicted[i] == truth[i]) {
            ++matches;
        }
    }
    return static_cast<double>(matches) / static_cast<double>(predicted.size());
}

EvalReport evaluate(std::span<const EvalFrame> trace,
                    std::span<const std::string> truth_labels, std::string_view true_goal) {
    EvalReport report;
    report.frames_total = trace.size();
    report.convergence_frame = convergence_point(trace, true_goal);
    report.converged = report.convergence_frame.has_value();
    const auto [precision, recall] = candidate_metrics(trace, true_goal);
    report.mean_precision = precision;
    report.mean_recall = recall;

    std::vector<std::string> predicted;
    predicted.reserve(trace.size());
    for (const auto& frame : trace) {
        predicted.push_back(frame.label);
    }
    report.frame_accuracy = frame_accuracy(predicted, truth_labels);
    return report;
}

} // namespace planrec
