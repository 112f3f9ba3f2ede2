#include "qf2/json_io.hpp"

#include <fstream>
#include <sstream>

namespace qf2 {

Json to_json(const Series& s)
{
    Json terms = Json::array();
    s.for_each_term([&](int a, int b, const Rational& c) {
        terms.push_back({{"q2", a}, {"q4", b}, {"num", to_string(num(c))}, {"den", to_string(den(c))}});
    });
    return {{"order", s.span()}, {"terms", terms}};
}

Series series_from_json(const Json& j)
{
    try {
        const int order = j.at("order").get<int>();
        Series s = Series::zero(order);
        for (const auto& t : j.at("terms")) {
            const Rational c = Rational(BigInt(t.at("num").get<std::string>())) /
                               Rational(BigInt(t.at("den").get<std::string>()));
            s += Series::monomial(t.at("q2").get<int>(), t.at("q4").get<int>(), c, order);
        }
        return s;
    } catch (const Json::exception& e) {
        throw InputError(std::string("series: ") + e.what());
    } catch (const std::runtime_error& e) {
        throw InputError(std::string("series: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("series: ") + e.what());
    }
}

Json to_json(const Fan& fan)
{
    Json rays = Json::array(), cones = Json::array();
    for (const auto& r : fan.rays) rays.push_back({r.x(), r.y()});
    for (const auto& c : fan.max_cones) cones.push_back({c[0], c[1]});
    return {{"rays", rays}, {"max_cones", cones}};
}

namespace {

std::vector<std::array<int, 2>> int_pairs(const Json& j, const std::string& field)
{
    if (!j.contains(field)) throw InputError("fan: missing field \"" + field + "\"");
    const Json& a = j.at(field);
    if (!a.is_array()) throw InputError("fan: \"" + field + "\" must be an array");
    std::vector<std::array<int, 2>> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Json& p = a[i];
        const std::string where = "fan: " + field + "[" + std::to_string(i) + "]";
        if (!p.is_array()) throw InputError(where + " must be an array");
        if (field == "rays" && p.size() != 2)
            throw InputError(where + " has " + std::to_string(p.size()) + " coordinates; only 2D fans are supported");
        if (p.size() != 2) throw InputError(where + " must have exactly 2 entries");
        if (!p[0].is_number_integer() || !p[1].is_number_integer()) throw InputError(where + " must hold integers");
        out.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    return out;
}

}  // namespace

Fan parse_fan_json(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("fan: malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("fan: top level must be an object");
    Fan fan;
    for (const auto& r : int_pairs(j, "rays")) fan.rays.emplace_back(r[0], r[1]);
    fan.max_cones = int_pairs(j, "max_cones");
    return fan;
}

Fan load_fan(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("fan: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fan_json(ss.str());
}

Json to_json(const ClassMatrix& cm)
{
    Json rows = Json::array();
    for (int i = 0; i < cm.entries.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < cm.entries.cols(); ++j) row.push_back(cm.entries(i, j));
        rows.push_back(row);
    }
    return {{"basis_rays", cm.basis_rays}, {"entries", rows}};
}

Json to_json(const PrimitiveCollection& p)
{
    return {{"rays", p.rays}, {"relation", p.relation}, {"beta", p.beta}};
}

Json to_json(const Contribution& c)
{
    return {{"graph", c.graph.name()}, {"value", to_string(c.value)}, {"method", to_string(c.method)}};
}

Json to_json(const InvariantKey& k)
{
    return {{"a", k.a}, {"d", k.d}, {"insertions", {to_string(k.first), to_string(k.second)}}};
}

Json to_json(const Report& r)
{
    Json checks = Json::array();
    for (const auto& l : r.lines) {
        std::string status = l.substr(0, l.find(' '));
        checks.push_back({{"status", status}, {"what", l.substr(6)}});
    }
    return {{"ok", r.ok}, {"checks", checks}};
}

Json to_json(const SeriesMatrix& m)
{
    Json rows = Json::array();
    for (int i = 0; i < 4; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 4; ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json fan_summary_json(const Fan& fan)
{
    Json out = {{"fan", to_json(fan)}};
    const auto violations = validate_fan(fan);
    out["valid"] = violations.empty();
    out["violations"] = violations;
    if (!violations.empty()) return out;
    const ClassMatrix cm = class_matrix(fan);
    out["class_matrix"] = to_json(cm);
    Json prims = Json::array();
    for (const auto& p : primitive_collections(fan)) prims.push_back(to_json(primitive_relation(fan, p.rays, cm)));
    out["primitive_collections"] = prims;
    const BatyrevGenerators gens = batyrev_generators(fan, cm);
    Json lin = Json::array(), qsr = Json::array(), pres = Json::array();
    const int n = static_cast<int>(fan.rays.size());
    const int nb = static_cast<int>(cm.basis_rays.size());
    for (const auto& l : gens.linear) lin.push_back(linear_generator_poly(l, nb).str(cm.basis_rays));
    for (const auto& g : gens.quantum_sr) qsr.push_back(quantum_sr_poly(g, n, nb).str(cm.basis_rays));
    for (const auto& p : batyrev_presentation(fan, cm)) pres.push_back(p.str(cm.basis_rays));
    out["batyrev"] = {{"linear", lin}, {"quantum_sr", qsr}, {"presentation", pres}};
    return out;
}

namespace {

const char* factor_name(FFactor f)
{
    switch (f) {
    case FFactor::none: return "1";
    case FFactor::f: return "f";
    case FFactor::one_plus_f: return "1+f";
    }
    return "?";
}

}  // namespace

Json module_table_json(int order)
{
    Json entries = Json::array();
    for (Generator k : {Generator::sigma2, Generator::sigma4}) {
        const SeriesMatrix m = table_matrix(k, order);
        for (int j = 0; j < 4; ++j) {
            Json terms = Json::array();
            for (const auto& t : table_entry(k, j))
                terms.push_back({{"coef", to_string(t.coef)},
                                 {"q2", t.q2},
                                 {"q4", t.q4},
                                 {"factor", factor_name(t.factor)},
                                 {"basis", basis_names()[t.basis]}});
            Json coords = Json::object();
            for (int i = 0; i < 4; ++i) coords[basis_names()[i]] = to_json(m(i, j));
            entries.push_back({{"generator", to_string(k)},
                               {"basis", basis_names()[j]},
                               {"text", format_table_entry(k, j, order)},
                               {"terms", terms},
                               {"coordinates", coords}});
        }
    }
    return {{"order", order}, {"entries", entries}};
}

}  // namespace qf2
