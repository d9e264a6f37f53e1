#include "tropimpl/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "tropimpl/error.hpp"

namespace tropimpl {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "json") return Format::Json;
    if (name == "dot") return Format::Dot;
    if (name == "svg") return Format::Svg;
    throw Error(ErrorKind::UnknownFormat, "unknown output format '" + name + "'");
}

json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return json(z.get_si());
    return json(z.get_str());
}

Integer integer_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        auto q = parse_rational(j.get<std::string>());
        if (q.get_den() == 1) return q.get_num();
    }
    throw Error(ErrorKind::ParseError, "expected an integer", where);
}

json vector_to_json(const IntVector& v) {
    json a = json::array();
    for (const auto& e : v.entries()) a.push_back(integer_to_json(e));
    return a;
}

IntVector vector_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an integer array", where);
    std::vector<Integer> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(integer_from_json(j[i], where + "/" + std::to_string(i)));
    return IntVector(std::move(out));
}

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
    if (!j.is_object() || !j.contains(name)) throw Error(ErrorKind::ParseError, std::string("missing field '") + name + "'", where);
    return j.at(name);
}

std::string string_field(const json& j, const char* name, const std::string& where) {
    const json& v = field(j, name, where);
    if (!v.is_string()) throw Error(ErrorKind::ParseError, std::string("field '") + name + "' must be a string", where);
    return v.get<std::string>();
}

}  // namespace

json graph_to_json(const TropicalGraph& g) {
    json doc;
    doc["vertices"] = json::array();
    for (const auto& v : g.vertices)
        doc["vertices"].push_back({{"id", v.id}, {"label", v.label}, {"point", vector_to_json(v.point)}, {"kind", to_string(v.kind)}});
    doc["edges"] = json::array();
    for (const auto& e : g.edges) doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"weight", e.weight.get_str()}, {"zero", e.zero}});
    json meta{{"delta", integer_to_json(g.meta.delta)}, {"pipeline", g.meta.pipeline}, {"seed", g.meta.seed}, {"forced", g.meta.forced}};
    meta["notes"] = json::object();
    for (const auto& [k, v] : g.meta.notes) meta["notes"][k] = v;
    doc["meta"] = meta;
    return doc;
}

TropicalGraph graph_from_json(const json& j) {
    TropicalGraph g;
    const json& vs = field(j, "vertices", "");
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::string where = "/vertices/" + std::to_string(i);
        const json& v = vs[i];
        g.vertices.push_back({string_field(v, "id", where), string_field(v, "label", where), vector_from_json(field(v, "point", where), where + "/point"),
                              parse_vertex_kind(string_field(v, "kind", where))});
    }
    const json& es = field(j, "edges", "");
    for (std::size_t i = 0; i < es.size(); ++i) {
        std::string where = "/edges/" + std::to_string(i);
        const json& e = es[i];
        Rational w;
        try {
            w = parse_rational(string_field(e, "weight", where));
        } catch (const Error& err) {
            throw Error(ErrorKind::ParseError, err.what(), where + "/weight");
        }
        bool zero = j.is_object() && e.contains("zero") ? e.at("zero").get<bool>() : false;
        g.edges.push_back({string_field(e, "u", where), string_field(e, "v", where), w, zero});
    }
    if (j.contains("meta")) {
        const json& m = j.at("meta");
        if (m.contains("delta")) g.meta.delta = integer_from_json(m.at("delta"), "/meta/delta");
        if (m.contains("pipeline")) g.meta.pipeline = m.at("pipeline").get<std::string>();
        if (m.contains("seed")) g.meta.seed = m.at("seed").get<std::uint64_t>();
        if (m.contains("forced")) g.meta.forced = m.at("forced").get<bool>();
        if (m.contains("notes"))
            for (const auto& [k, v] : m.at("notes").items()) g.meta.notes[k] = v.get<std::string>();
    }
    return g;
}

json fan_to_json(const WeightedFan& fan) {
    json doc{{"rank", fan.rank}, {"dim", fan.dim}};
    doc["cones"] = json::array();
    for (const auto& c : fan.cones) {
        json gens = json::array();
        for (const auto& g : c.generators) gens.push_back(vector_to_json(g));
        doc["cones"].push_back({{"generators", gens}, {"weight", integer_to_json(c.weight)}});
    }
    doc["degenerate"] = json::array();
    for (const auto& d : fan.degenerate) {
        json gens = json::array();
        for (const auto& g : d.generators) gens.push_back(vector_to_json(g));
        doc["degenerate"].push_back({{"generators", gens}, {"reason", d.reason}});
    }
    return doc;
}

WeightedFan fan_from_json(const json& j) {
    WeightedFan fan;
    fan.rank = field(j, "rank", "").get<std::size_t>();
    fan.dim = field(j, "dim", "").get<std::size_t>();
    const json& cs = field(j, "cones", "");
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::string where = "/cones/" + std::to_string(i);
        Cone c;
        const json& gens = field(cs[i], "generators", where);
        for (std::size_t k = 0; k < gens.size(); ++k) {
            c.generators.push_back(vector_from_json(gens[k], where + "/generators/" + std::to_string(k)));
            if (c.generators.back().dim() != fan.rank) throw Error(ErrorKind::DimensionMismatch, "generator dimension differs from rank", where);
        }
        if (c.generators.size() != fan.dim) throw Error(ErrorKind::DimensionMismatch, "cone needs exactly dim generators", where);
        c.weight = integer_from_json(field(cs[i], "weight", where), where + "/weight");
        if (c.weight <= 0) throw Error(ErrorKind::ParseError, "cone weights must be positive", where + "/weight");
        fan.cones.push_back(std::move(c));
    }
    if (j.contains("degenerate")) {
        const json& ds = j.at("degenerate");
        for (std::size_t i = 0; i < ds.size(); ++i) {
            std::string where = "/degenerate/" + std::to_string(i);
            DegenerateCell d;
            const json& gens = field(ds[i], "generators", where);
            for (std::size_t k = 0; k < gens.size(); ++k) d.generators.push_back(vector_from_json(gens[k], where));
            d.reason = ds[i].value("reason", "");
            fan.degenerate.push_back(std::move(d));
        }
    }
    return fan;
}

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
    }
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

// Planar coordinates from the first two rows of a seeded unimodular mix.
class Projector {
public:
    Projector(std::size_t n, std::uint64_t seed) : m_(IntMatrix::identity(n)) {
        if (n < 2) return;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> coef(-2, 2);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (int step = 0; step < 4 * static_cast<int>(n); ++step) {
            std::size_t i = pick(rng), j = pick(rng);
            if (i == j) continue;
            long c = coef(rng);
            for (std::size_t k = 0; k < n; ++k) m_(i, k) += c * m_(j, k);
        }
    }

    std::pair<double, double> operator()(const IntVector& v) const {
        if (v.dim() < 2) return {v.dim() ? v[0].get_d() : 0.0, 0.0};
        IntVector w = m_ * v;
        return {w[0].get_d(), w[1].get_d()};
    }

private:
    IntMatrix m_;
};

struct Canvas {
    double minx = 0, maxx = 0, miny = 0, maxy = 0;

    void include(std::pair<double, double> p) {
        minx = std::min(minx, p.first);
        maxx = std::max(maxx, p.first);
        miny = std::min(miny, p.second);
        maxy = std::max(maxy, p.second);
    }

    std::pair<double, double> place(std::pair<double, double> p) const {
        double span = std::max({maxx - minx, maxy - miny, 1.0});
        double scale = 440.0 / span;
        return {20.0 + (p.first - minx) * scale, 460.0 - (p.second - miny) * scale};
    }
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

const char* kSvgHeader = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";

}  // namespace

std::string serialize(const TropicalGraph& g, Format format, std::uint64_t projection_seed) {
    if (format == Format::Json) return graph_to_json(g).dump(2) + "\n";
    if (format == Format::Dot) {
        std::ostringstream out;
        out << "graph tropical {\n";
        for (const auto& v : g.vertices) out << "  " << quote(v.id) << " [label=" << quote(v.label + "\\n" + v.point.to_string()) << "];\n";
        for (const auto& e : g.edges) {
            out << "  " << quote(e.u) << " -- " << quote(e.v) << " [label=" << quote(e.weight.get_str());
            if (e.zero) out << ", style=dashed";
            out << "];\n";
        }
        out << "}\n";
        return out.str();
    }
    std::size_t n = g.vertices.empty() ? 2 : g.vertices[0].point.dim();
    Projector proj(n, projection_seed);
    Canvas canvas;
    std::map<std::string, std::pair<double, double>> pos;
    for (const auto& v : g.vertices) canvas.include(pos[v.id] = proj(v.point));
    std::ostringstream out;
    out << kSvgHeader;
    for (const auto& e : g.edges) {
        if (!pos.count(e.u) || !pos.count(e.v)) continue;
        auto a = canvas.place(pos[e.u]), b = canvas.place(pos[e.v]);
        out << "  <line x1=\"" << num(a.first) << "\" y1=\"" << num(a.second) << "\" x2=\"" << num(b.first) << "\" y2=\"" << num(b.second)
            << "\" stroke=\"black\"" << (e.zero ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
        out << "  <text x=\"" << num((a.first + b.first) / 2) << "\" y=\"" << num((a.second + b.second) / 2) << "\" font-size=\"10\" fill=\"blue\">"
            << escape_xml(e.weight.get_str()) << "</text>\n";
    }
    for (const auto& v : g.vertices) {
        auto p = canvas.place(pos[v.id]);
        out << "  <circle cx=\"" << num(p.first) << "\" cy=\"" << num(p.second) << "\" r=\"3\"/>\n";
        out << "  <text x=\"" << num(p.first + 4) << "\" y=\"" << num(p.second - 4) << "\" font-size=\"10\">" << escape_xml(v.label) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string serialize(const WeightedFan& fan, Format format, std::uint64_t projection_seed) {
    if (format == Format::Json) return fan_to_json(fan).dump(2) + "\n";
    if (format == Format::Dot) {
        std::ostringstream out;
        out << "graph fan {\n";
        std::map<IntVector, std::string> names;
        for (const auto& c : fan.cones)
            for (const auto& g : c.generators) names.try_emplace(g, "r" + std::to_string(names.size() + 1));
        for (const auto& [g, name] : names) out << "  " << quote(name) << " [label=" << quote(g.to_string()) << "];\n";
        for (const auto& c : fan.cones) {
            if (c.generators.size() != 2) continue;
            out << "  " << quote(names[c.generators[0]]) << " -- " << quote(names[c.generators[1]]) << " [label=" << quote(c.weight.get_str()) << "];\n";
        }
        out << "}\n";
        return out.str();
    }
    Projector proj(std::max<std::size_t>(fan.rank, 2), projection_seed);
    Canvas canvas;
    for (const auto& c : fan.cones)
        for (const auto& g : c.generators) canvas.include(proj(g));
    std::ostringstream out;
    out << kSvgHeader;
    auto o = canvas.place({0.0, 0.0});
    for (const auto& c : fan.cones) {
        out << "  <polygon points=\"" << num(o.first) << "," << num(o.second);
        for (const auto& g : c.generators) {
            auto p = canvas.place(proj(g));
            out << " " << num(p.first) << "," << num(p.second);
        }
        out << "\" fill=\"steelblue\" fill-opacity=\"0.2\" stroke=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

TropicalGraph deserialize_graph(const std::string& text) { return graph_from_json(parse_json(text)); }

WeightedFan deserialize_fan(const std::string& text) { return fan_from_json(parse_json(text)); }

}  // namespace tropimpl
