#include "tropimpl/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "tropimpl/error.hpp"
#include "tropimpl/serialize.hpp"

namespace tropimpl::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Error parse_error(const std::string& message, const std::string& where) { return Error(ErrorKind::ParseError, message, where.empty() ? "/" : where); }

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what(), "byte " + std::to_string(e.byte));
    }
}

void only_fields(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!j.is_object()) throw parse_error("expected an object", where);
    for (const auto& [key, value] : j.items()) {
        bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
        if (!known) throw parse_error("unknown field '" + key + "'", where + "/" + key);
    }
}

const json& required(const json& j, const char* name, const std::string& where) {
    if (!j.contains(name)) throw parse_error(std::string("missing field '") + name + "'", where);
    return j.at(name);
}

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rational(integer_from_json(j, where));
    if (!j.is_string()) throw parse_error("expected a rational string such as \"-3/4\"", where);
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        throw parse_error(e.what(), where);
    }
}

long small_integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw parse_error("expected an integer", where);
    return j.get<long>();
}

bool boolean(const json& j, const std::string& where) {
    if (!j.is_boolean()) throw parse_error("expected true or false", where);
    return j.get<bool>();
}

Integer positive_integer(const json& j, const std::string& where) {
    Integer z;
    try {
        z = integer_from_json(j, where);
    } catch (const Error& e) {
        throw parse_error(e.what(), where);
    }
    if (z <= 0) throw parse_error("expected a positive integer", where);
    return z;
}

ProjPoint point_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) throw parse_error("expected three homogeneous coordinates", where);
    try {
        return ProjPoint(rational_from_json(j[0], where + "/0"), rational_from_json(j[1], where + "/1"), rational_from_json(j[2], where + "/2"));
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        throw parse_error(e.what(), where);
    }
}

json point_to_json(const ProjPoint& p) { return json::array({p[0].get_str(), p[1].get_str(), p[2].get_str()}); }

DocumentOptions options_from_json(const json& j, const std::string& where) {
    only_fields(j, {"keep_zero_edges", "mixed_volume", "force", "suppress_bivalent", "seed", "max_blowups", "blowups", "crossings"}, where);
    DocumentOptions o;
    if (j.contains("keep_zero_edges")) o.keep_zero_edges = boolean(j["keep_zero_edges"], where + "/keep_zero_edges");
    if (j.contains("mixed_volume")) o.mixed_volume = boolean(j["mixed_volume"], where + "/mixed_volume");
    if (j.contains("force")) o.force = boolean(j["force"], where + "/force");
    if (j.contains("suppress_bivalent")) o.suppress_bivalent = boolean(j["suppress_bivalent"], where + "/suppress_bivalent");
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw parse_error("expected a nonnegative integer", where + "/seed");
        o.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("max_blowups")) {
        if (!j["max_blowups"].is_number_unsigned()) throw parse_error("expected a nonnegative integer", where + "/max_blowups");
        o.max_blowups = j["max_blowups"].get<std::size_t>();
    }
    if (j.contains("blowups")) {
        const json& b = j["blowups"];
        if (!b.is_array()) throw parse_error("expected a list of points", where + "/blowups");
        for (std::size_t i = 0; i < b.size(); ++i) o.blowups.push_back(point_from_json(b[i], where + "/blowups/" + std::to_string(i)));
    }
    if (j.contains("crossings")) {
        const json& c = j["crossings"];
        if (!c.is_array()) throw parse_error("expected a list of divisor pairs", where + "/crossings");
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i].is_array() || c[i].size() != 2 || !c[i][0].is_string() || !c[i][1].is_string())
                throw parse_error("expected two divisor names", where + "/crossings/" + std::to_string(i));
            o.crossings.emplace_back(c[i][0].get<std::string>(), c[i][1].get<std::string>());
        }
    }
    return o;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string read_file(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

json error_json(const Error& e) {
    json j{{"status", "error"}, {"error", to_string(e.kind())}, {"message", e.what()}};
    if (!e.location().empty()) j["location"] = e.location();
    return j;
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    json j = parse_json_text(text);
    only_fields(j, {"variables", "delta", "polynomials", "options"}, "");
    InputDocument doc;
    if (j.contains("variables")) {
        const json& v = j["variables"];
        if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) throw parse_error("expected two variable names", "/variables");
        doc.variables = {v[0].get<std::string>(), v[1].get<std::string>()};
        for (std::size_t i = 0; i < 2; ++i)
            if (!is_identifier(doc.variables[i])) throw parse_error("invalid variable name", "/variables/" + std::to_string(i));
        if (doc.variables[0] == doc.variables[1]) throw parse_error("variable names must differ", "/variables");
    }
    if (j.contains("delta")) doc.delta = positive_integer(j["delta"], "/delta");
    const json& ps = required(j, "polynomials", "");
    if (!ps.is_array()) throw parse_error("expected a list of polynomials", "/polynomials");
    for (std::size_t i = 0; i < ps.size(); ++i) {
        std::string where = "/polynomials/" + std::to_string(i);
        only_fields(ps[i], {"name", "terms"}, where);
        std::string name = "f" + std::to_string(i + 1);
        if (ps[i].contains("name")) {
            if (!ps[i]["name"].is_string()) throw parse_error("expected a string", where + "/name");
            name = ps[i]["name"].get<std::string>();
        }
        const json& terms = required(ps[i], "terms", where);
        if (!terms.is_array()) throw parse_error("expected a list of terms", where + "/terms");
        BiPoly p;
        std::set<BiPoly::Exp> seen;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            std::string tw = where + "/terms/" + std::to_string(k);
            only_fields(terms[k], {"coeff", "exp"}, tw);
            Rational c = rational_from_json(required(terms[k], "coeff", tw), tw + "/coeff");
            const json& e = required(terms[k], "exp", tw);
            if (!e.is_array() || e.size() != 2) throw parse_error("expected an exponent pair", tw + "/exp");
            BiPoly::Exp exp{small_integer(e[0], tw + "/exp/0"), small_integer(e[1], tw + "/exp/1")};
            if (!seen.insert(exp).second) throw parse_error("duplicate exponent", tw + "/exp");
            p.add_term(exp, c);
        }
        doc.names.push_back(name);
        doc.polys.emplace_back(std::move(p), doc.variables);
    }
    if (j.contains("options")) doc.options = options_from_json(j["options"], "/options");
    return doc;
}

json document_to_json(const InputDocument& doc) {
    json j{{"variables", {doc.variables[0], doc.variables[1]}}, {"delta", integer_to_json(doc.delta)}};
    j["polynomials"] = json::array();
    for (std::size_t i = 0; i < doc.polys.size(); ++i) {
        json terms = json::array();
        for (const auto& [e, c] : doc.polys[i].terms()) terms.push_back({{"coeff", c.get_str()}, {"exp", {e[0], e[1]}}});
        j["polynomials"].push_back({{"name", i < doc.names.size() ? doc.names[i] : "f" + std::to_string(i + 1)}, {"terms", terms}});
    }
    json o = json::object();
    const auto& opt = doc.options;
    if (opt.keep_zero_edges) o["keep_zero_edges"] = *opt.keep_zero_edges;
    if (opt.mixed_volume) o["mixed_volume"] = *opt.mixed_volume;
    if (opt.force) o["force"] = *opt.force;
    if (opt.suppress_bivalent) o["suppress_bivalent"] = *opt.suppress_bivalent;
    if (opt.seed) o["seed"] = *opt.seed;
    if (opt.max_blowups) o["max_blowups"] = *opt.max_blowups;
    for (const auto& p : opt.blowups) o["blowups"].push_back(point_to_json(p));
    for (const auto& [a, b] : opt.crossings) o["crossings"].push_back({a, b});
    if (!o.empty()) j["options"] = o;
    return j;
}

InputDocument make_document(const std::vector<LaurentPoly>& polys) {
    InputDocument doc;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        doc.names.push_back("f" + std::to_string(i + 1));
        doc.polys.push_back(polys[i]);
    }
    return doc;
}

BoundaryComplexInput parse_complex(const std::string& text) {
    json j = parse_json_text(text);
    only_fields(j, {"rank", "dimension", "divisors", "cells"}, "");
    BoundaryComplexInput in;
    const json& rank = required(j, "rank", "");
    const json& dim = required(j, "dimension", "");
    if (!rank.is_number_unsigned() || rank.get<std::size_t>() == 0) throw parse_error("expected a positive integer", "/rank");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) throw parse_error("expected a positive integer", "/dimension");
    in.rank = rank.get<std::size_t>();
    in.dimension = dim.get<std::size_t>();
    const json& ds = required(j, "divisors", "");
    if (!ds.is_array()) throw parse_error("expected a list", "/divisors");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        std::string where = "/divisors/" + std::to_string(i);
        only_fields(ds[i], {"name", "valuation"}, where);
        const json& name = required(ds[i], "name", where);
        if (!name.is_string()) throw parse_error("expected a string", where + "/name");
        if (!index.emplace(name.get<std::string>(), i).second) throw parse_error("duplicate divisor name", where + "/name");
        in.divisors.push_back({name.get<std::string>(), vector_from_json(required(ds[i], "valuation", where), where + "/valuation")});
    }
    const json& cs = required(j, "cells", "");
    if (!cs.is_array()) throw parse_error("expected a list", "/cells");
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::string where = "/cells/" + std::to_string(i);
        only_fields(cs[i], {"divisors", "intersection_number"}, where);
        const json& members = required(cs[i], "divisors", where);
        if (!members.is_array()) throw parse_error("expected a list", where + "/divisors");
        BoundaryCell cell;
        for (std::size_t k = 0; k < members.size(); ++k) {
            std::string mw = where + "/divisors/" + std::to_string(k);
            if (members[k].is_string()) {
                auto it = index.find(members[k].get<std::string>());
                if (it == index.end()) throw parse_error("unknown divisor", mw);
                cell.divisors.push_back(it->second);
            } else if (members[k].is_number_unsigned() && members[k].get<std::size_t>() < ds.size()) {
                cell.divisors.push_back(members[k].get<std::size_t>());
            } else {
                throw parse_error("expected a divisor name or index", mw);
            }
        }
        cell.intersection_number = integer_from_json(required(cs[i], "intersection_number", where), where + "/intersection_number");
        in.cells.push_back(cell);
    }
    return in;
}

IntMatrix parse_matrix(const std::string& text) {
    json j = parse_json_text(text);
    json rows = j;
    if (j.is_object()) {
        only_fields(j, {"matrix"}, "");
        rows = required(j, "matrix", "");
    }
    if (!rows.is_array() || rows.empty()) throw parse_error("expected a nonempty list of rows", j.is_object() ? "/matrix" : "");
    std::vector<IntVector> out;
    std::string base = j.is_object() ? "/matrix/" : "/";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.push_back(vector_from_json(rows[i], base + std::to_string(i)));
        if (out.back().dim() != out.front().dim() || out.back().dim() == 0) throw parse_error("rows must have one common positive length", base + std::to_string(i));
    }
    return IntMatrix::from_rows(out);
}

WeightedFan load_fan(const std::string& text) {
    json j = parse_json_text(text);
    if (j.is_object() && j.contains("vertices")) return make_fan2d(merge_realized(graph_from_json(j)));
    return fan_from_json(j);
}

ProjPoint parse_point(const std::string& text) {
    std::vector<Rational> c;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ':')) c.push_back(parse_rational(part));
    if (c.size() != 3) throw Error(ErrorKind::ParseError, "expected a point a:b:c", text);
    return ProjPoint(c[0], c[1], c[2]);
}

namespace {

GenericInput generic_input(const InputDocument& doc, const RunFlags& flags) {
    GenericInput in;
    in.polys = doc.polys;
    in.delta = flags.delta.value_or(doc.delta);
    const auto& o = doc.options;
    in.options.keep_zero_edges = flags.keep_zero_edges.value_or(o.keep_zero_edges.value_or(true));
    in.options.use_mixed_volume = flags.mixed_volume || o.mixed_volume.value_or(false);
    in.options.force = flags.force || o.force.value_or(false);
    in.options.seed = flags.seed.value_or(o.seed.value_or(kDefaultSeed));
    return in;
}

bool suppress_wanted(const InputDocument& doc, const RunFlags& flags) { return flags.suppress_bivalent || doc.options.suppress_bivalent.value_or(false); }

std::optional<CommandResult> delta_mismatch(const std::vector<LaurentPoly>& polys, const Integer& delta, std::uint64_t seed) {
    Rng rng(seed);
    Integer counted = count_preimages(polys, rng);
    if (counted == delta) return std::nullopt;
    CommandResult r;
    r.exit_code = 1;
    r.report = {{"status", "delta-mismatch"}, {"declared", integer_to_json(delta)}, {"counted", integer_to_json(counted)}};
    return r;
}

TropicalGraph finish(TropicalGraph g, const InputDocument& doc, const RunFlags& flags) {
    bool suppress = suppress_wanted(doc, flags);
    if (!suppress && !flags.merge) return g;
    TropicalGraph out = realize(g, suppress);
    out.meta.notes["realized"] = suppress ? "merged, suppressed" : "merged";
    return out;
}

}  // namespace

CommandResult run_generic(const InputDocument& doc, const RunFlags& flags) {
    GenericInput in = generic_input(doc, flags);
    auto cert = certify_generic(in);
    CommandResult r;
    if (!cert.accepted() && !in.options.force) {
        r.exit_code = 1;
        r.report = certificate_to_json(cert);
        return r;
    }
    if (flags.verify_delta)
        if (auto bad = delta_mismatch(in.polys, in.delta, in.options.seed)) return *bad;
    TropicalGraph g = build_generic_graph(in, &cert);
    if (!cert.warnings.empty()) {
        std::string w;
        for (const auto& v : cert.warnings) w += (w.empty() ? "" : ", ") + std::string(to_string(v.kind)) + " " + v.witness;
        g.meta.notes["warnings"] = w;
    }
    if (!cert.accepted()) g.meta.notes["violations"] = certificate_to_json(cert)["violations"].dump();
    r.graph = finish(std::move(g), doc, flags);
    return r;
}

CommandResult run_nongeneric(const InputDocument& doc, const RunFlags& flags) {
    ResolutionOptions opt;
    opt.seed = flags.seed.value_or(doc.options.seed.value_or(kDefaultSeed));
    opt.max_steps = flags.max_blowups.value_or(doc.options.max_blowups.value_or(opt.max_steps));
    opt.forced = doc.options.blowups;
    opt.forced.insert(opt.forced.end(), flags.blowups.begin(), flags.blowups.end());
    opt.crossings = doc.options.crossings;
    opt.crossings.insert(opt.crossings.end(), flags.crossings.begin(), flags.crossings.end());
    Integer delta = flags.delta.value_or(doc.delta);
    if (flags.verify_delta)
        if (auto bad = delta_mismatch(doc.polys, delta, opt.seed)) return *bad;
    auto diagram = resolve_arrangement(make_arrangement(doc.polys), opt);
    TropicalGraph g = build_nongeneric_graph(diagram, delta);
    g.meta.seed = opt.seed;
    if (!diagram.noether_ok) g.meta.notes["noether"] = "failed";
    CommandResult r;
    r.graph = finish(std::move(g), doc, flags);
    r.diagram = diagram_to_json(diagram);
    return r;
}

CommandResult run_check(const InputDocument& doc, const RunFlags& flags) {
    auto cert = certify_generic(generic_input(doc, flags));
    CommandResult r;
    r.exit_code = cert.accepted() ? 0 : 1;
    r.report = certificate_to_json(cert);
    return r;
}

json diagram_to_json(const ResolutionDiagram& d) {
    json j;
    j["originals"] = d.originals;
    j["degrees"] = d.degrees;
    j["centers"] = json::array();
    for (const auto& c : d.centers) j["centers"].push_back(point_to_json(c));
    j["steps"] = json::array();
    for (const auto& s : d.steps) {
        json m = json::object();
        for (const auto& [name, k] : s.mult_per_divisor) m[name] = k;
        j["steps"].push_back({{"exceptional", s.exceptional}, {"center", s.center}, {"lineage", s.lineage}, {"multiplicities", m}, {"forced", s.forced}});
    }
    j["intersections"] = json::array();
    for (const auto& [pair, value] : d.intersection_table) j["intersections"].push_back({pair.first, pair.second, value});
    j["valuations"] = json::object();
    for (const auto& name : d.divisors()) j["valuations"][name] = vector_to_json(divisor_point(d, name));
    j["noether_ok"] = d.noether_ok;
    return j;
}

json balance_report(const BalanceReport& report) {
    json j{{"balanced", report.balanced}, {"failures", json::array()}};
    for (const auto& f : report.failures) j["failures"].push_back({{"ray", vector_to_json(f.ray)}, {"residual", vector_to_json(f.residual)}});
    return j;
}

namespace {

struct Shared {
    std::string input, second, dot, svg, diagram, delta, emit;
    std::uint64_t seed = kDefaultSeed;
    bool suppress = false, merge = false, keep_zero = true, mixed = false, force = false, verify = false, list = false;
    std::size_t max_blowups = 64;
    std::vector<std::string> blowups, crossings;
};

struct Seen {
    std::vector<CLI::Option*> delta, seed, keep, max;
};

bool given(const std::vector<CLI::Option*>& opts) {
    return std::any_of(opts.begin(), opts.end(), [](const CLI::Option* o) { return o->count() > 0; });
}

void add_seed(CLI::App* sub, Shared& s, Seen& seen) { seen.seed.push_back(sub->add_option("--seed", s.seed, "seed for shears, random transforms and SVG projection")); }

void add_outputs(CLI::App* sub, Shared& s) {
    sub->add_option("--dot", s.dot, "also write Graphviz output to PATH");
    sub->add_option("--svg", s.svg, "also write an SVG drawing to PATH");
}

void add_graph_flags(CLI::App* sub, Shared& s, Seen& seen) {
    sub->add_option("input", s.input, "input document (- for stdin)")->required();
    seen.delta.push_back(sub->add_option("--delta", s.delta, "degree of the parameterization"));
    add_seed(sub, s, seen);
    sub->add_flag("--merge", s.merge, "merge equal points and refine overlapping edges");
    sub->add_flag("--suppress-bivalent", s.suppress, "merge, refine and remove straight bivalent vertices");
    sub->add_flag("--verify-delta", s.verify, "compare --delta with a fibre count at a random point");
    add_outputs(sub, s);
}

Integer parse_delta(const std::string& text) {
    Rational q = parse_rational(text);
    if (q.get_den() != 1 || q <= 0) throw UsageError("--delta must be a positive integer");
    return q.get_num();
}

RunFlags flags_from(const Shared& s, const Seen& seen) {
    RunFlags f;
    if (given(seen.delta)) f.delta = parse_delta(s.delta);
    if (given(seen.seed)) f.seed = s.seed;
    if (given(seen.keep)) f.keep_zero_edges = s.keep_zero;
    if (given(seen.max)) f.max_blowups = s.max_blowups;
    f.suppress_bivalent = s.suppress;
    f.merge = s.merge;
    f.mixed_volume = s.mixed;
    f.force = s.force;
    f.verify_delta = s.verify;
    for (const auto& b : s.blowups) f.blowups.push_back(parse_point(b));
    for (const auto& c : s.crossings) {
        auto comma = c.find(',');
        if (comma == std::string::npos || comma == 0 || comma + 1 == c.size()) throw UsageError("--blowup-crossing expects A,B");
        f.crossings.emplace_back(c.substr(0, comma), c.substr(comma + 1));
    }
    return f;
}

void emit_graph(const TropicalGraph& g, const Shared& s, std::uint64_t seed, std::ostream& out) {
    out << serialize(g, Format::Json, seed);
    if (!s.dot.empty()) write_file(s.dot, serialize(g, Format::Dot, seed));
    if (!s.svg.empty()) write_file(s.svg, serialize(g, Format::Svg, seed));
}

void emit_fan(const WeightedFan& fan, const Shared& s, std::uint64_t seed, std::ostream& out) {
    out << serialize(fan, Format::Json, seed);
    if (!s.dot.empty()) write_file(s.dot, serialize(fan, Format::Dot, seed));
    if (!s.svg.empty()) write_file(s.svg, serialize(fan, Format::Svg, seed));
}

bool usage_kind(ErrorKind k) { return k == ErrorKind::ParseError || k == ErrorKind::UnknownFormat; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tropicalization of parameterized surfaces in a torus", "tropimpl"};
    app.require_subcommand(1);
    Shared s;
    Seen seen;

    auto* generic = app.add_subcommand("generic", "graph of a generic parameterization from normal fans and intersection counts");
    add_graph_flags(generic, s, seen);
    seen.keep.push_back(generic->add_flag("--keep-zero-edges,!--drop-zero-edges", s.keep_zero, "keep weight-zero edges flagged (default on)"));
    generic->add_flag("--mixed-volume", s.mixed, "use mixed volumes for curve-curve weights (certified inputs only)");
    generic->add_flag("--force", s.force, "build the graph even if the genericity certificate fails");

    auto* nongeneric = app.add_subcommand("nongeneric", "graph from a resolution of the curve arrangement");
    add_graph_flags(nongeneric, s, seen);
    seen.max.push_back(nongeneric->add_option("--max-blowups", s.max_blowups, "upper bound on the number of blow-ups"));
    nongeneric->add_option("--blowup", s.blowups, "extra center a:b:c in the plane (repeatable)")->allow_extra_args(false);
    nongeneric->add_option("--blowup-crossing", s.crossings, "extra blow-up where divisors A,B cross once (repeatable)")->allow_extra_args(false);
    nongeneric->add_option("--diagram", s.diagram, "write the resolution diagram as JSON to PATH");

    auto* check = app.add_subcommand("check", "genericity certificate only");
    check->add_option("input", s.input, "input document (- for stdin)")->required();
    add_seed(check, s, seen);

    auto* complex = app.add_subcommand("complex", "weighted fan of a boundary complex");
    complex->add_option("input", s.input, "boundary complex document")->required();
    add_seed(complex, s, seen);
    add_outputs(complex, s);

    auto* push = app.add_subcommand("pushforward", "push a fan forward along a monomial map");
    push->add_option("fan", s.input, "fan or graph document")->required();
    push->add_option("matrix", s.second, "matrix document")->required();
    seen.delta.push_back(push->add_option("--delta", s.delta, "degree of the map"));
    add_seed(push, s, seen);
    add_outputs(push, s);

    auto* balance = app.add_subcommand("balance", "check the balancing condition of a fan");
    balance->add_option("fan", s.input, "fan or graph document")->required();

    auto* fixtures = app.add_subcommand("fixtures", "run the built-in example suite");
    fixtures->add_flag("--list", s.list, "list fixture names");
    fixtures->add_option("--emit", s.emit, "print the input document of a fixture");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        RunFlags flags = flags_from(s, seen);
        std::uint64_t seed = s.seed;
        if (generic->parsed() || nongeneric->parsed() || check->parsed()) {
            InputDocument doc = parse_input(read_file(s.input));
            if (!given(seen.seed) && doc.options.seed) seed = *doc.options.seed;
            CommandResult r = generic->parsed() ? run_generic(doc, flags) : nongeneric->parsed() ? run_nongeneric(doc, flags) : run_check(doc, flags);
            if (r.graph) {
                emit_graph(*r.graph, s, seed, out);
                if (!s.diagram.empty()) write_file(s.diagram, r.diagram.dump(2) + "\n");
            } else {
                out << r.report.dump(2) << "\n";
            }
            return r.exit_code;
        }
        if (complex->parsed()) {
            emit_fan(realize_weighted_complex(parse_complex(read_file(s.input))), s, seed, out);
            return 0;
        }
        if (push->parsed()) {
            WeightedFan fan = load_fan(read_file(s.input));
            IntMatrix a = parse_matrix(read_file(s.second));
            emit_fan(pushforward_fan(fan, a, flags.delta.value_or(Integer(1))), s, seed, out);
            return 0;
        }
        if (balance->parsed()) {
            auto report = check_balanced(load_fan(read_file(s.input)));
            out << balance_report(report).dump(2) << "\n";
            return report.balanced ? 0 : 1;
        }
        if (s.list) {
            for (const auto& n : fixture_names()) out << n << "\n";
            return 0;
        }
        if (!s.emit.empty()) {
            out << document_to_json(fixture_document(s.emit)).dump(2) << "\n";
            return 0;
        }
        json report = run_fixture_suite();
        out << report.dump(2) << "\n";
        return report["passed"].get<bool>() ? 0 : 1;
    } catch (const Error& e) {
        if (usage_kind(e.kind())) {
            err << "usage error: " << to_string(e.kind()) << ": " << e.what() << "\n";
            return 2;
        }
        out << error_json(e).dump(2) << "\n";
        return 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace tropimpl::cli
