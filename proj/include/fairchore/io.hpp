#pragma once

#include <string>

#include <json.hpp>

#include "fairchore/instance.hpp"

namespace fairchore::io {

using nlohmann::json;

// Rationals in files are JSON integers or exact "p/q" strings, never floats.
json rational_to_json(const Rational& value);
Rational rational_from_json(const json& value);

json instance_to_json(const Instance& instance);
Instance instance_from_json(const json& document);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

/// FNV-1a over the canonical core of the instance (counts, weights,
/// disutilities; labels are cosmetic and excluded). Binds a solution file to
/// its input.
std::string instance_hash(const Instance& instance);

struct Certificate {
    bool mpb_ok = false;
    bool wef1_ok = false;
    bool wpef1_ok = false;
};

struct Solution {
    std::string algorithm;
    std::string hash;
    Allocation allocation;
    PaymentVector payments;
    Certificate certificate;
    json trace = json::array();
};

json solution_to_json(const Solution& solution);
Solution solution_from_json(const json& document);

Solution load_solution(const std::string& path);
void save_solution(const Solution& solution, const std::string& path);

}  // namespace fairchore::io
