#include "pchaos/serialize.hpp"

#include <algorithm>
#include <bit>

namespace pchaos {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Point& p) {
    Json a = Json::array();
    for (const auto& c : p.coords()) a.push_back(to_json(c));
    return a;
}

Json to_json(const Box& b) {
    Json a = Json::array();
    for (const auto& iv : b.axes()) a.push_back(Json::array({to_json(iv.lo), to_json(iv.hi)}));
    return a;
}

Json to_json(const Region& r) {
    Json a = Json::array();
    for (const auto& b : r.boxes()) a.push_back(to_json(b));
    return a;
}

Json to_json(const RefinementTree& t) {
    Json cells = Json::array();
    for (const auto& [addr, c] : t.cells()) {
        cells.push_back({{"address", addr.str()},
                         {"region", to_json(c.region)},
                         {"marked_points", Json::array({to_json(c.marked[0]), to_json(c.marked[1])})}});
    }
    return {{"model", std::string(to_string(t.model().kind))}, {"depth", t.depth()}, {"cells", std::move(cells)}};
}

Json to_json(const CheckReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks()) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return {{"instance", r.instance()},
            {"checks", std::move(checks)},
            {"summary", {{"total", r.total()}, {"passed", r.passed()}, {"failed", r.failed()}}}};
}

namespace {

std::vector<std::string> members(const FiniteTopSpace& x, Mask m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if ((m >> i) & 1U) out.push_back(x.labels()[i]);
    }
    return out;
}

}  // namespace

Json to_json(const FiniteTopSpace& x) {
    std::vector<std::vector<std::string>> opens;
    for (Mask u : x.opens()) opens.push_back(members(x, u));
    std::sort(opens.begin(), opens.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return {{"points", x.labels()}, {"opens", opens}};
}

Json to_json(const Partition& p, const FiniteTopSpace& x) {
    Json a = Json::array();
    for (Mask b : p.blocks()) a.push_back(members(x, b));
    return a;
}

Json to_json(const WitnessResult& w) {
    Json orbit = Json::array();
    for (const auto& p : w.orbit) orbit.push_back(to_json(p));
    return {{"system", std::string(to_string(w.system))},
            {"word", w.word.str()},
            {"enclosure", to_json(w.enclosure)},
            {"witness", to_json(w.witness)},
            {"orbit", std::move(orbit)}};
}

Json to_json(const PeriodicPoint& p, SystemKind system) {
    Json orbit = Json::array();
    for (const auto& q : p.orbit) orbit.push_back(to_json(q));
    return {{"system", std::string(to_string(system))},
            {"word", p.word.str()},
            {"reduced", p.reduced},
            {"point", to_json(p.point)},
            {"prime_period", p.prime_period},
            {"orbit", std::move(orbit)}};
}

Json to_json(const CantorMap& f) {
    Json doc = {{"kind", std::string(to_string(f.kind()))}};
    Json blocks = Json::array();
    for (std::size_t i = 0; i < f.domain_blocks().size(); ++i)
        blocks.push_back({{"domain", f.domain_blocks()[i].str()}, {"target", f.target_blocks()[i].str()}});
    if (f.kind() == CantorMapKind::bit_flip) {
        for (const auto& r : f.rules()) blocks.push_back({{"domain", r.source.str()}, {"target", r.target.str()}});
    }
    doc["blocks"] = std::move(blocks);
    doc["target"] = std::string(to_string(f.target()));
    doc["padded"] = f.padded();
    return doc;
}

Json to_json(const WaypointSurjection& f) {
    Json wps = Json::array();
    for (const auto& [x, y] : f.waypoint_map().waypoints()) wps.push_back({{"x", to_json(x)}, {"y", to_json(y)}});
    return {{"kind", "waypoint"}, {"waypoints", std::move(wps)}, {"target", std::string(to_string(f.waypoint_map().target()))}};
}

bool looks_rational(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == s.size()) return false;
    auto digits = [](std::string_view v) {
        return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    std::string_view num(s.data(), slash);
    if (num.front() == '-') num.remove_prefix(1);
    return digits(num) && digits(std::string_view(s).substr(slash + 1));
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

}  // namespace

std::string to_csv(const Json& doc, std::optional<int> decimals) {
    std::string out = decimals ? "path,value,approx_decimal\n" : "path,value\n";
    const Json flat = doc.flatten();
    for (const auto& [path, value] : flat.items()) {
        const std::string text = scalar_text(value);
        out += csv_field(path) + "," + csv_field(text);
        if (decimals) {
            out += ",";
            if (value.is_string() && looks_rational(text)) out += Rational::parse(text).decimal(*decimals);
        }
        out += "\n";
    }
    return out;
}

Json with_decimals(const Json& doc, int digits) {
    Json approx = Json::object();
    const Json flat = doc.flatten();
    for (const auto& [path, value] : flat.items()) {
        if (value.is_string() && looks_rational(value.get<std::string>()))
            approx[path] = Rational::parse(value.get<std::string>()).decimal(digits);
    }
    Json out = doc;
    out["approx_decimal"] = std::move(approx);
    return out;
}

}  // namespace pchaos
