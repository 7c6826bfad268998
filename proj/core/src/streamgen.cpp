#include "planrec/streamgen.hpp"

#include <random>
#include <string>

#include "planrec/errors.hpp"

namespace planrec {

namespace {

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
/// Fixed explicitly (not std::uniform_real_distribution, whose output is
/// implementation-defined) so streams reproduce bit-for-bit everywhere.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// One frame peaked on `true_class`: 1 - noise there, the noise mass
/// split over the other classes proportionally to fresh uniform draws
/// taken in alphabet order.
std::vector<double> make_probs(std::size_t alphabet_size, ClassId true_class, double noise,
                               std::mt19937_64& rng) {
    std::vector<double> probs(alphabet_size, 0.0);
    probs[true_class] = 1.0 - noise;
    if (noise <= 0.0 || alphabet_size < 2) {
        probs[true_class] = 1.0;
        return probs;
    }
    std::vector<double> draws(alphabet_size, 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < alphabet_size; ++i) {
        if (i == true_class) {
            continue;
        }
        draws[i] = uniform01(rng);
        total += draws[i];
    }
    if (total <= 0.0) {
        // All draws zero: put the whole mass on the first other class.
        for (std::size_t i = 0; i < alphabet_size; ++i) {
            if (i != true_class) {
                probs[i] = noise;
                break;
            }
        }
        return probs;
    }
    for (std::size_t i = 0; i < alphabet_size; ++i) {
        if (i != true_class) {
            probs[i] = noise * (draws[i] / total);
        }
    }
    return probs;
}

} // namespace

GeneratedStream generate_stream(const PlanLibrary& lib, std::string_view goal,
                                std::size_t plan_index, const GenConfig& cfg) {
    const auto goal_idx = lib.goal_index(goal);
    if (!goal_idx) {
        throw DomainError("unknown goal \"" + std::string(goal) + "\"");
    }
    const auto& plans = lib.goals[*goal_idx].plans;
    if (plan_index >= plans.size()) {
        throw DomainError("goal \"" + std::string(goal) + "\" has " +
                          std::to_string(plans.size()) + " plans, plan index " +
                          std::to_string(plan_index) + " out of range");
    }
    if (!(cfg.noise >= 0.0 && cfg.noise < 1.0)) {
        throw DomainError("noise must be in [0, 1)");
    }
    const auto& steps = plans[plan_index].steps;

    std::vector<std::size_t> frames_per_step;
    if (const auto* uniform = std::get_if<std::size_t>(&cfg.frames_per_step)) {
        if (*uniform == 0) {
            throw DomainError("frames_per_step must be at least 1");
        }
        frames_per_step.assign(steps.size(), *uniform);
    } else {
        frames_per_step = std::get<std::vector<std::size_t>>(cfg.frames_per_step);
        if (frames_per_step.size() != steps.size()) {
            throw DomainError("frames_per_step list has " +
                              std::to_string(frames_per_step.size()) + " entries for a plan of " +
                              std::to_string(steps.size()) + " steps");
        }
        for (const auto count : frames_per_step) {
            if (count == 0) {
                throw DomainError("frames_per_step must be at least 1");
            }
        }
    }
    if (cfg.none_gap > 0 && !lib.alphabet.none_index) {
        throw DomainError("none_gap requires an alphabet with a \"none\" class");
    }

    std::mt19937_64 rng(cfg.seed);
    GeneratedStream out;
    std::int64_t frame_id = 0;

    auto emit = [&](ClassId cls) {
        out.frames.push_back({frame_id, make_probs(lib.alphabet.size(), cls, cfg.noise, rng)});
        out.truth.push_back({frame_id, cls});
        ++frame_id;
    };

    for (std::size_t s = 0; s < steps.size(); ++s) {
        if (s > 0) {
            for (std::size_t i = 0; i < cfg.none_gap; ++i) {
                emit(*lib.alphabet.none_index);
            }
        }
        const auto cls = lib.alphabet.index_of(steps[s]);
        if (!cls) {
            throw DomainError("plan step \"" + steps[s] + "\" not in alphabet");
        }
        for (std::size_t i = 0; i < frames_per_step[s]; ++i) {
            emit(*cls);
        }
    }
    return out;
}

} // namespace planrec
