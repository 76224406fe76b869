#pragma once

#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"

#include "toric/fan.hpp"

namespace toric {

using json = nlohmann::json;

/** Integers are written as JSON numbers when they fit in 64 bits, else as decimal strings. */
inline json integer_to_json(const Integer& x)
{
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return json(x.convert_to<std::int64_t>());
    return json(x.str());
}

inline Integer integer_from_json(const json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::runtime_error&) {
        }
    }
    throw MalformedInput("expected an integer, got " + j.dump());
}

inline json rational_to_json(const Rational& q) { return json(to_string(q)); }

inline json cone_to_json(const Cone& c)
{
    json a = json::array();
    for (auto i : c)
        a.push_back(i);
    return a;
}

/** Canonical fan document: {"dim": n, "rays": [[...]], "max_cones": [[...]]}. */
inline json fan_to_json(const Fan& f)
{
    json rays = json::array();
    for (const auto& r : f.rays()) {
        json v = json::array();
        for (const auto& x : r)
            v.push_back(integer_to_json(x));
        rays.push_back(std::move(v));
    }
    json cones = json::array();
    for (const auto& c : f.cones())
        cones.push_back(cone_to_json(c));
    return json{{"dim", f.dim()}, {"rays", std::move(rays)}, {"max_cones", std::move(cones)}};
}

inline Fan fan_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
        throw MalformedInput("fan document needs dim, rays and max_cones");
    if (!j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        throw MalformedInput("dim must be a positive integer");
    if (!j["rays"].is_array() || !j["max_cones"].is_array())
        throw MalformedInput("rays and max_cones must be arrays");
    const auto dim = j["dim"].get<std::size_t>();

    std::vector<LatticePoint> rays;
    for (const auto& r : j["rays"]) {
        if (!r.is_array())
            throw MalformedInput("each ray must be an array of integers");
        LatticePoint p;
        for (const auto& x : r)
            p.push_back(integer_from_json(x));
        rays.push_back(std::move(p));
    }
    std::vector<Cone> cones;
    for (const auto& c : j["max_cones"]) {
        if (!c.is_array())
            throw MalformedInput("each cone must be an array of ray indices");
        Cone idx;
        for (const auto& x : c) {
            if (!x.is_number_unsigned())
                throw MalformedInput("cone entries must be non-negative integers");
            idx.push_back(x.get<std::size_t>());
        }
        cones.push_back(std::move(idx));
    }
    return Fan(dim, std::move(rays), std::move(cones));
}

inline Fan parse_fan(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
    return fan_from_json(j);
}

inline Fan read_fan_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw MalformedInput("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fan(ss.str());
}

inline json wall_to_json(const Wall& w)
{
    return json{{"rays", cone_to_json(w.rays)}, {"apexes", json::array({w.apexes.first, w.apexes.second})}};
}

} // namespace toric
