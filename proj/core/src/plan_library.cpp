#include "planrec/plan_library.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "planrec/errors.hpp"

namespace planrec {

using json = nlohmann::ordered_json;

ActivityAlphabet ActivityAlphabet::from_classes(std::vector<std::string> classes) {
    ActivityAlphabet alphabet;
    alphabet.classes = std::move(classes);
    for (std::size_t i = 0; i < alphabet.classes.size(); ++i) {
        if (alphabet.classes[i] == kNoneName) {
            alphabet.none_index = i;
            break;
        }
    }
    return alphabet;
}

std::optional<ClassId> ActivityAlphabet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::optional<std::size_t> PlanLibrary::goal_index(std::string_view name) const {
    for (std::size_t i = 0; i < goals.size(); ++i) {
        if (goals[i].name == name) {
            return i;
        }
    }
    return std::nullopt;
}

std::size_t PlanLibrary::total_plan_count() const {
    std::size_t n = 0;
    for (const auto& goal : goals) {
        n += goal.plans.size();
    }
    return n;
}

bool operator==(const ActivityAlphabet& a, const ActivityAlphabet& b) {
    return a.classes == b.classes && a.none_index == b.none_index;
}

bool operator==(const Plan& a, const Plan& b) {
    return a.steps == b.steps;
}

bool operator==(const Goal& a, const Goal& b) {
    return a.name == b.name && a.plans == b.plans;
}

bool operator==(const PlanLibrary& a, const PlanLibrary& b) {
    return a.alphabet == b.alphabet && a.goals == b.goals;
}

std::vector<std::string> validate_library(const PlanLibrary& lib) {
    std::vector<std::string> violations;
    const auto& alphabet = lib.alphabet;

    std::unordered_set<std::string_view> seen_classes;
    for (std::size_t i = 0; i < alphabet.classes.size(); ++i) {
        const auto& name = alphabet.classes[i];
        if (name.empty()) {
            violations.push_back("alphabet class " + std::to_string(i) + ": empty name");
        }
        if (!seen_classes.insert(name).second) {
            violations.push_back("alphabet class \"" + name + "\": duplicate name");
        }
    }
    if (alphabet.none_index) {
        if (*alphabet.none_index >= alphabet.classes.size()) {
            violations.push_back("alphabet: none_index out of range");
        } else if (alphabet.classes[*alphabet.none_index] != ActivityAlphabet::kNoneName) {
            violations.push_back("alphabet: none_index does not address a class named \"none\"");
        }
    } else if (seen_classes.contains(ActivityAlphabet::kNoneName)) {
        violations.push_back("alphabet: class \"none\" declared but none_index unset");
    }

    std::unordered_set<std::string_view> seen_goals;
    for (const auto& goal : lib.goals) {
        if (goal.name.empty()) {
            violations.push_back("goal with empty name");
        }
        if (!seen_goals.insert(goal.name).second) {
            violations.push_back("goal \"" + goal.name + "\": duplicate name");
        }
        if (goal.plans.empty()) {
            violations.push_back("goal \"" + goal.name + "\": no plans");
        }
        for (std::size_t p = 0; p < goal.plans.size(); ++p) {
            const auto& plan = goal.plans[p];
            const std::string where = "goal \"" + goal.name + "\" plan " + std::to_string(p);
            if (plan.steps.empty()) {
                violations.push_back(where + ": empty plan");
                continue;
            }
            for (std::size_t s = 0; s < plan.steps.size(); ++s) {
                const auto& step = plan.steps[s];
                const auto id = alphabet.index_of(step);
                if (!id) {
                    violations.push_back(where + " step " + std::to_string(s) + ": class \"" +
                                         step + "\" not in alphabet");
                } else if (alphabet.is_none(*id)) {
                    violations.push_back(where + " step " + std::to_string(s) +
                                         ": \"none\" is not a plan step");
                }
                if (s > 0 && plan.steps[s - 1] == step) {
                    violations.push_back(where + " step " + std::to_string(s) +
                                         ": consecutive duplicate step \"" + step + "\"");
                }
            }
        }
    }
    return violations;
}

namespace {

[[noreturn]] void fail(const std::string& message) {
    throw FormatError("library: " + message);
}

} // namespace

PlanLibrary parse_library(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(e.what());
    }

    if (!doc.is_object()) {
        fail("top-level value must be an object");
    }
    if (!doc.contains("alphabet") || !doc["alphabet"].is_array()) {
        fail("missing \"alphabet\" array");
    }
    if (!doc.contains("goals") || !doc["goals"].is_array()) {
        fail("missing \"goals\" array");
    }

    std::vector<std::string> classes;
    for (std::size_t i = 0; i < doc["alphabet"].size(); ++i) {
        const auto& entry = doc["alphabet"][i];
        if (!entry.is_string()) {
            fail("alphabet[" + std::to_string(i) + "]: expected a string");
        }
        classes.push_back(entry.get<std::string>());
    }

    PlanLibrary lib;
    lib.alphabet = ActivityAlphabet::from_classes(std::move(classes));

    for (std::size_t g = 0; g < doc["goals"].size(); ++g) {
        const auto& goal_doc = doc["goals"][g];
        const std::string where = "goals[" + std::to_string(g) + "]";
        if (!goal_doc.is_object() || !goal_doc.contains("name") ||
            !goal_doc["name"].is_string()) {
            fail(where + ": expected an object with a \"name\" string");
        }
        if (!goal_doc.contains("plans") || !goal_doc["plans"].is_array()) {
            fail(where + ": missing \"plans\" array");
        }
        Goal goal;
        goal.name = goal_doc["name"].get<std::string>();
        for (std::size_t p = 0; p < goal_doc["plans"].size(); ++p) {
            const auto& plan_doc = goal_doc["plans"][p];
            if (!plan_doc.is_array()) {
                fail(where + ".plans[" + std::to_string(p) + "]: expected an array of steps");
            }
            Plan plan;
            for (std::size_t s = 0; s < plan_doc.size(); ++s) {
                if (!plan_doc[s].is_string()) {
                    fail(where + ".plans[" + std::to_string(p) + "][" + std::to_string(s) +
                         "]: expected a class-name string");
                }
                plan.steps.push_back(plan_doc[s].get<std::string>());
            }
            goal.plans.push_back(std::move(plan));
        }
        lib.goals.push_back(std::move(goal));
    }

    const auto violations = validate_library(lib);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid library:";
        for (const auto& violation : violations) {
            msg << "\n  " << violation;
        }
        fail(msg.str());
    }
    return lib;
}

std::string serialize_library(const PlanLibrary& lib) {
    json doc;
    doc["alphabet"] = lib.alphabet.classes;
    doc["goals"] = json::array();
    for (const auto& goal : lib.goals) {
        json goal_doc;
        goal_doc["name"] = goal.name;
        goal_doc["plans"] = json::array();
        for (const auto& plan : goal.plans) {
            goal_doc["plans"].push_back(plan.steps);
        }
        doc["goals"].push_back(std::move(goal_doc));
    }
    return doc.dump(2) + "\n";
}

} // namespace planrec
