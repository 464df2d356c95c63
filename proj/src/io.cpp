#include "fairchore/io.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "fairchore/errors.hpp"

namespace fairchore::io {

json rational_to_json(const Rational& value) {
    if (denominator(value) == 1) {
        const BigInt& num = numerator(value);
        if (num >= std::numeric_limits<std::int64_t>::min() &&
            num <= std::numeric_limits<std::int64_t>::max())
            return num.convert_to<std::int64_t>();
    }
    return format_rational(value);
}

Rational rational_from_json(const json& value) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) return Rational(value.get<std::uint64_t>());
        return Rational(value.get<std::int64_t>());
    }
    if (value.is_string()) return parse_rational(value.get<std::string>());
    throw ValidationError("rationals must be integers or \"p/q\" strings, got: " + value.dump());
}

json instance_to_json(const Instance& instance) {
    json agents = json::array();
    for (int i = 0; i < instance.agent_count(); ++i) {
        json row = json::array();
        for (int j = 0; j < instance.chore_count(); ++j)
            row.push_back(rational_to_json(instance.disutility(i, j)));
        agents.push_back({{"id", instance.agent_name(i)},
                          {"weight", rational_to_json(instance.weights[i])},
                          {"disutilities", row}});
    }
    json document{{"agents", agents}};
    if (!instance.chore_labels.empty()) document["chores"] = instance.chore_labels;
    return document;
}

Instance instance_from_json(const json& document) {
    if (!document.is_object() || !document.contains("agents") || !document["agents"].is_array())
        throw ValidationError("instance file must be an object with an \"agents\" array");
    std::vector<Rational> weights;
    std::vector<std::vector<Rational>> disutilities;
    std::vector<std::string> agent_labels;
    for (const auto& entry : document["agents"]) {
        if (!entry.is_object() || !entry.contains("weight") || !entry.contains("disutilities"))
            throw ValidationError("each agent needs \"weight\" and \"disutilities\"");
        weights.push_back(rational_from_json(entry["weight"]));
        std::vector<Rational> row;
        for (const auto& cell : entry["disutilities"]) row.push_back(rational_from_json(cell));
        disutilities.push_back(std::move(row));
        agent_labels.push_back(entry.value("id", "agent" + std::to_string(agent_labels.size())));
    }
    std::vector<std::string> chore_labels;
    if (document.contains("chores"))
        chore_labels = document["chores"].get<std::vector<std::string>>();
    return Instance::create(std::move(weights), std::move(disutilities),
                            std::move(agent_labels), std::move(chore_labels));
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    json document;
    try {
        in >> document;
    } catch (const json::exception& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
    return instance_from_json(document);
}

void save_instance(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write instance file: " + path);
    out << instance_to_json(instance).dump(2) << "\n";
}

std::string instance_hash(const Instance& instance) {
    std::ostringstream canonical;
    canonical << instance.agent_count() << ";" << instance.chore_count() << ";";
    for (const auto& w : instance.weights) canonical << format_rational(w) << ",";
    canonical << ";";
    for (const auto& row : instance.disutilities)
        for (const auto& d : row) canonical << format_rational(d) << ",";

    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : canonical.str()) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << hash;
    return out.str();
}

json solution_to_json(const Solution& solution) {
    json allocation = json::array();
    for (const auto& bundle : solution.allocation.bundles) allocation.push_back(bundle);
    json payments = json::array();
    for (const auto& p : solution.payments) payments.push_back(rational_to_json(p));
    return json{{"algorithm", solution.algorithm},
                {"instance_hash", solution.hash},
                {"allocation", allocation},
                {"payments", payments},
                {"certificate",
                 {{"mpb_ok", solution.certificate.mpb_ok},
                  {"wef1_ok", solution.certificate.wef1_ok},
                  {"wpef1_ok", solution.certificate.wpef1_ok}}},
                {"trace", solution.trace}};
}

Solution solution_from_json(const json& document) {
    if (!document.is_object() || !document.contains("allocation"))
        throw ValidationError("solution file must be an object with an \"allocation\" array");
    Solution solution;
    solution.algorithm = document.value("algorithm", "");
    solution.hash = document.value("instance_hash", "");
    for (const auto& bundle : document["allocation"]) {
        std::vector<int> chores;
        for (const auto& chore : bundle) {
            if (!chore.is_number_integer())
                throw ValidationError("allocation bundles must hold chore indices");
            chores.push_back(chore.get<int>());
        }
        std::sort(chores.begin(), chores.end());
        solution.allocation.bundles.push_back(std::move(chores));
    }
    if (document.contains("payments"))
        for (const auto& p : document["payments"])
            solution.payments.push_back(rational_from_json(p));
    if (document.contains("certificate")) {
        const auto& cert = document["certificate"];
        solution.certificate.mpb_ok = cert.value("mpb_ok", false);
        solution.certificate.wef1_ok = cert.value("wef1_ok", false);
        solution.certificate.wpef1_ok = cert.value("wpef1_ok", false);
    }
    if (document.contains("trace")) solution.trace = document["trace"];
    return solution;
}

Solution load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open solution file: " + path);
    json document;
    try {
        in >> document;
    } catch (const json::exception& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
    return solution_from_json(document);
}

void save_solution(const Solution& solution, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write solution file: " + path);
    out << solution_to_json(solution).dump(2) << "\n";
}

}  // namespace fairchore::io
