#include "rmaap/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rmaap::io {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path, std::string_view field) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw input_error(std::string(field) + ": cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

json parse_json(std::string_view text, std::string_view origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw input_error(std::string(origin) + ": " + e.what());
    }
}

std::int64_t require_integer(const json& j, std::string_view field) {
    if (!j.is_number_integer())
        throw input_error(std::string(field) + ": must be an integer");
    return j.get<std::int64_t>();
}

} // namespace

ProblemInstance parse_instance(std::string_view text, std::string_view origin) {
    const json doc = parse_json(text, origin);
    if (!doc.is_object())
        throw input_error(std::string(origin) + ": expected an object");

    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (key != "tasks" && key != "agents" && key != "p" && key != "alpha")
            throw input_error(key + ": unknown field");
    }
    if (!doc.contains("tasks"))
        throw input_error("tasks: missing");
    if (!doc.contains("agents"))
        throw input_error("agents: missing");
    const bool has_p = doc.contains("p");
    const bool has_alpha = doc.contains("alpha");
    if (has_p == has_alpha)
        throw input_error(has_p ? "p: give exactly one of `p` or `alpha`"
                                : "p: missing (give exactly one of `p` or `alpha`)");

    const json& tasks_j = doc["tasks"];
    if (!tasks_j.is_array() || tasks_j.empty())
        throw input_error("tasks: must be a non-empty array of positive numbers");
    std::vector<double> values;
    values.reserve(tasks_j.size());
    for (const json& v : tasks_j) {
        if (!v.is_number())
            throw input_error("tasks: must be a non-empty array of positive numbers");
        values.push_back(v.get<double>());
    }

    const std::int64_t agents = require_integer(doc["agents"], "agents");

    FailureModel model;
    if (has_p) {
        const json& p_j = doc["p"];
        if (!p_j.is_number())
            throw input_error("p: must be a number in [0, 1]");
        model = Stochastic{p_j.get<double>()};
    } else {
        model = Adversarial{require_integer(doc["alpha"], "alpha")};
    }

    return ProblemInstance(TaskProfile(std::move(values)), agents, model);
}

ProblemInstance read_instance(const std::string& path) {
    return parse_instance(slurp(path, "instance"), path);
}

Assignment parse_assignment(std::string_view text, const ProblemInstance& instance,
                            std::string_view origin) {
    const json doc = parse_json(text, origin);
    const json* arr = nullptr;
    if (doc.is_array()) {
        arr = &doc;
    } else if (doc.is_object() && doc.contains("assignment") && doc["assignment"].is_array()) {
        arr = &doc["assignment"];
    } else {
        throw input_error("assignment: expected an array or an object with an `assignment` array");
    }

    if (arr->size() != instance.tasks().size())
        throw input_error("assignment: expected " + std::to_string(instance.tasks().size()) +
                          " entries, got " + std::to_string(arr->size()));
    std::vector<std::int64_t> input_order;
    input_order.reserve(arr->size());
    for (const json& v : *arr)
        input_order.push_back(require_integer(v, "assignment"));

    Assignment assignment(
        instance.tasks().from_input_order(std::span<const std::int64_t>(input_order)));
    if (!is_valid_assignment(assignment, instance.agents()))
        throw infeasible_error("assignment: total of " + std::to_string(assignment.total()) +
                               " agents exceeds the budget of " +
                               std::to_string(instance.agents()));
    return assignment;
}

Assignment read_assignment(const std::string& path, const ProblemInstance& instance) {
    return parse_assignment(slurp(path, "assignment"), instance, path);
}

} // namespace rmaap::io
