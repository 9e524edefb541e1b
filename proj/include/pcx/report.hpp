#pragma once
// JSON views of the report types. Keys keep insertion order so that output
// is stable byte for byte.
#include <nlohmann/json.hpp>

#include "pcx/complex_graph.hpp"
#include "pcx/quotient.hpp"
#include "pcx/suites.hpp"

namespace pcx {

using Json = nlohmann::ordered_json;

// Integers as numbers, other values as "p/q" strings.
Json to_json(const Rational& r);
Json to_json(const AxiomReport& r, const ProjectionSystem& system);
Json to_json(const Constants& c);
Json to_json(const DeltaReport& r);
Json to_json(const ImageConstants& c);
Json to_json(const WindmillData& w);
Json to_json(const QuotientComplex& q);
Json to_json(const QuotientStability& s);
Json to_json(const QuotientDeltaReport& r);
Json to_json(const ProjectedGeodesicReport& r);
Json to_json(const BoundedProjectionReport& r);
Json to_json(const WpdProbe& p);
Json to_json(const IndependenceReport& r);
Json to_json(const ShortenResult& r);
Json to_json(const PivotFactsReport& r);
Json to_json(const EssentialLawsReport& r);
Json to_json(const ShortenSuiteReport& r);
Json to_json(const LiftSuiteReport& r);

// Class graph with labels from the class representatives.
std::string to_dot(const QuotientComplex& q);

}  // namespace pcx
