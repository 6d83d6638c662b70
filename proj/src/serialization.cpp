#include "jensen/serialization.hpp"

namespace jensen {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw InputError(std::string("expected a JSON object containing '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
    return *it;
}

double number(const Json& j, const std::string& where) {
    if (!j.is_number()) throw InputError("field '" + where + "' must be a number");
    return j.get<double>();
}

std::vector<double> numbers(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError("field '" + where + "' must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

Json optional_number(std::optional<double> v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

ConvexFunction function_from_json(const Json& j) {
    if (j.is_string()) return ConvexFunction::make(j.get<std::string>());
    const Json& name = field(j, "name");
    if (!name.is_string()) throw InputError("field 'name' must be a string");
    ConvexFunction::Params params;
    if (auto it = j.find("params"); it != j.end()) {
        if (!it->is_object()) throw InputError("field 'params' must be an object");
        for (const auto& [key, value] : it->items()) params[key] = number(value, "params." + key);
    }
    return ConvexFunction::make(name.get<std::string>(), params);
}

Json to_json(const ConvexFunction& f) {
    Json params = Json::object();
    for (const auto& [k, v] : f.params()) params[k] = v;
    return Json{{"name", f.name()}, {"params", params}};
}

WeightedSample sample_from_json(const Json& j) {
    const Json& pts = field(j, "points");
    if (!pts.is_array()) throw InputError("field 'points' must be an array of arrays");
    std::vector<Point> points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        // bare numbers are one-dimensional points
        if (pts[i].is_number())
            points.push_back({pts[i].get<double>()});
        else
            points.push_back(numbers(pts[i], "points[" + std::to_string(i) + "]"));
    }
    std::vector<double> weights;
    if (auto it = j.find("weights"); it != j.end())
        weights = numbers(*it, "weights");
    else
        weights.assign(points.size(), 1.0);
    return WeightedSample(std::move(points), std::move(weights));
}

Json to_json(const WeightedSample& s) { return Json{{"points", s.points()}, {"weights", s.weights()}}; }

PositiveSample positive_sample_from_json(const Json& j) {
    PositiveSample s{numbers(field(j, "values"), "values"), {}};
    if (auto it = j.find("weights"); it != j.end())
        s.weights = numbers(*it, "weights");
    else
        s.weights.assign(s.values.size(), s.values.empty() ? 0.0 : 1.0 / static_cast<double>(s.values.size()));
    return s;
}

Json to_json(const PositiveSample& s) { return Json{{"values", s.values}, {"weights", s.weights}}; }

DiscreteDistribution distribution_from_json(const Json& j, bool strip_zeros) {
    if (j.is_object() && j.contains("counts"))
        return DiscreteDistribution::from_counts(numbers(j["counts"], "counts"), strip_zeros);
    auto probs = numbers(field(j, "probs"), "probs");
    if (strip_zeros) return DiscreteDistribution::from_probs_stripping_zeros(probs);
    return DiscreteDistribution(std::move(probs));
}

Json to_json(const DiscreteDistribution& d) { return Json{{"probs", d.probs()}}; }

Json to_json(const Bounds& b) { return Json{{"lower", b.lower}, {"upper", b.upper}}; }

Bounds bounds_from_json(const Json& j) {
    Bounds b{numbers(field(j, "lower"), "lower"), numbers(field(j, "upper"), "upper")};
    b.validate();
    return b;
}

Json to_json(const BoundChainReport& r) {
    return Json{{"gap", r.gap},
                {"dg_bound", r.dg_bound},
                {"cbs_bound", r.cbs_bound},
                {"box_bound", r.box_bound},
                {"slack_gap_to_dg", r.slacks[0]},
                {"slack_dg_to_cbs", r.slacks[1]},
                {"slack_cbs_to_box", r.slacks[2]},
                {"box_lower", r.box.lower},
                {"box_upper", r.box.upper},
                {"gradient_lower", r.gradient_bounds.lower},
                {"gradient_upper", r.gradient_bounds.upper},
                {"strict_conditions", r.conditions.strict()},
                {"generalized_conditions", r.conditions.generalized()},
                {"valid", r.valid}};
}

Json to_json(const Certificate& c) {
    Json j{{"name", c.name}, {"lhs", c.lhs}, {"bound", c.bound}, {"lower_anchor", c.lower_anchor}};
    if (c.endpoints) j["endpoints"] = Json{{"m", c.endpoints->m}, {"M", c.endpoints->M}};
    if (c.log_lhs) j["log_lhs"] = optional_number(c.log_lhs);
    if (c.log_bound) j["log_bound"] = optional_number(c.log_bound);
    for (const auto& [k, v] : c.details) j[k] = v;
    if (!c.note.empty()) j["note"] = c.note;
    j["valid"] = c.valid;
    return j;
}

Json to_json(const GradientCheckReport& r) {
    return Json{{"analytic", r.analytic},
                {"numeric", r.numeric},
                {"abs_deviation", r.abs_deviation},
                {"rel_deviation", r.rel_deviation},
                {"max_deviation", r.max_deviation},
                {"pass", r.pass}};
}

std::string dump(const Json& j, int indent) { return j.dump(indent); }

}  // namespace jensen
