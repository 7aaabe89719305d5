#pragma once

// File formats: group and torus model inputs (JSON), and deterministic
// JSON / text renderings of sectors, cohomology tables and rings.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "orbcoh/models.hpp"
#include "orbcoh/orbicurve.hpp"
#include "orbcoh/ring.hpp"

namespace orbcoh::io {

using Json = nlohmann::ordered_json;

/// Entry forms: array of rational strings (coefficients of 1, zeta, ...),
/// bare rational string "p/q", or a JSON integer. `where` names the entry in
/// error messages.
cyclo::CycNum parse_cyc(const Json& node, const cyclo::FieldPtr& field, const std::string& where);
Json to_json(const cyclo::CycNum& value);
Json to_json(const cyclo::CycMatrix& value);

struct GroupInput {
  cyclo::FieldPtr field;
  std::size_t dimension = 0;
  std::vector<cyclo::CycMatrix> generators;
};

Json read_json_file(const std::filesystem::path& path);

GroupInput parse_group(const Json& doc);
group::FiniteMatrixGroup load_group(const std::filesystem::path& path,
                                    std::size_t cap = group::kDefaultClosureCap);

models::TorusModel parse_torus(const Json& doc);
models::TorusModel load_torus(const std::filesystem::path& path);

Json sectors_json(const sectors::SectorAnalysis& analysis);
Json multi_sectors_json(const sectors::SectorAnalysis& analysis, std::size_t k, bool product_one);
std::string sectors_text(const sectors::SectorAnalysis& analysis);
std::string multi_sectors_text(const sectors::SectorAnalysis& analysis, std::size_t k, bool product_one);

Json to_json(const models::CohomologyTable& table);
std::string to_text(const models::CohomologyTable& table);

Json to_json(const ring::GradedRing& ring);
std::string to_text(const ring::GradedRing& ring);

Json to_json(const ring::VerifyReport& report);
std::string to_text(const ring::VerifyReport& report);

Json pairing_json(const ring::GradedRing& ring);
std::string pairing_text(const ring::GradedRing& ring);

Json to_json(const orbicurve::GlueReport& report);
std::string to_text(const orbicurve::GlueReport& report);

}  // namespace orbcoh::io
