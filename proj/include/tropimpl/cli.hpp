#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tropimpl/complex.hpp"
#include "tropimpl/resolution.hpp"

namespace tropimpl::cli {

struct DocumentOptions {
    std::optional<bool> keep_zero_edges;
    std::optional<bool> mixed_volume;
    std::optional<bool> force;
    std::optional<bool> suppress_bivalent;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> max_blowups;
    std::vector<ProjPoint> blowups;
    std::vector<std::pair<std::string, std::string>> crossings;
};

struct InputDocument {
    std::array<std::string, 2> variables{"s", "t"};
    Integer delta = 1;
    std::vector<std::string> names;
    std::vector<LaurentPoly> polys;
    DocumentOptions options;
};

// Strict reader: unknown fields, duplicate exponents and bad rationals raise ParseError
// with a JSON pointer location.
InputDocument parse_input(const std::string& text);
nlohmann::json document_to_json(const InputDocument& doc);
InputDocument make_document(const std::vector<LaurentPoly>& polys);

BoundaryComplexInput parse_complex(const std::string& text);
IntMatrix parse_matrix(const std::string& text);
// Accepts a fan document or a graph document (merged and coned).
WeightedFan load_fan(const std::string& text);

ProjPoint parse_point(const std::string& text);

struct RunFlags {
    std::optional<Integer> delta;
    std::optional<std::uint64_t> seed;
    bool suppress_bivalent = false;
    bool merge = false;
    std::optional<bool> keep_zero_edges;
    bool mixed_volume = false;
    bool force = false;
    bool verify_delta = false;
    std::optional<std::size_t> max_blowups;
    std::vector<ProjPoint> blowups;
    std::vector<std::pair<std::string, std::string>> crossings;
};

struct CommandResult {
    int exit_code = 0;
    nlohmann::json report;  // printed when there is no graph
    std::optional<TropicalGraph> graph;
    nlohmann::json diagram;  // nongeneric only
};

CommandResult run_generic(const InputDocument& doc, const RunFlags& flags);
CommandResult run_nongeneric(const InputDocument& doc, const RunFlags& flags);
CommandResult run_check(const InputDocument& doc, const RunFlags& flags);

nlohmann::json diagram_to_json(const ResolutionDiagram& d);
nlohmann::json balance_report(const BalanceReport& report);

std::vector<std::string> fixture_names();
InputDocument fixture_document(const std::string& name);
// Regression run over the built-in examples; "passed" is false on any mismatch.
nlohmann::json run_fixture_suite();

// Exit codes: 0 success, 1 rejection or violation, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropimpl::cli
