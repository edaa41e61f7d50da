#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "upsilon/delcon.hpp"
#include "upsilon/monodromy.hpp"
#include "upsilon/motive.hpp"
#include "upsilon/pointcount.hpp"

namespace upsilon {

// Key order is insertion order, so serialized reports are byte-for-byte reproducible.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "upsilon/1";

// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
Json json_integer(const Integer& z);
Json json_polynomial(const IntPolynomial& p);  // ascending coefficient list
Json json_grid(const BiPolynomial& p);         // grid[a][b] = coefficient of x^a y^b
Json json_graph_summary(const Multigraph& g);
Json json_rank_table(const BigradedCohomology& bc);
Json json_filtration(const Filtration& f);
Json json_checks(const std::vector<Check>& checks);

Json cohomology_report(const Multigraph& g, const UpsilonComplex& c, const BigradedCohomology& bc,
                       const Filtration* deletion, const Filtration* grading);

struct MotiveResults {
  std::optional<IntPolynomial> closed, delcon, tutte;
  std::optional<BiPolynomial> tutte_polynomial;
  bool agree() const;
};
Json motive_report(const Multigraph& g, const MotiveResults& r);

Json les_report(const LongExactSequence& seq, const StrictnessReport& deletion, const StrictnessReport& grading);
Json bridge_report(const Multigraph& g, const std::string& edge, const BridgeCheck& check);
Json pw_report_json(const PWReport& r);
Json monodromy_report(const Multigraph& g, const MonodromyReport& r);

struct CountResult {
  FqEta eta;
  GenericityCertificate certificate;
  std::optional<Integer> count;
  Integer motive_value;
};
Json count_report(const Multigraph& g, const CountResult& r);

Json check_report(const Multigraph& g, const std::vector<Check>& checks);

Json error_report(const std::string& kind, const std::string& message, const ParseError* position = nullptr);

// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace upsilon
