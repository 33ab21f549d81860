#pragma once

#include <string>

#include "holopois/diagnostics.hpp"
#include "holopois/graded.hpp"
#include "holopois/structure_file.hpp"
#include "json.hpp"

namespace holopois::cli {

using nlohmann::json;

json to_json(const Poly& p);
json to_json(const Polyvector& a);
json to_json(const Count& c);
json to_json(const GroebnerBasis& g);
json to_json(const ZeroLeafLocus& z);
json to_json(const SurfaceLeafReport& r);
json to_json(const SurfaceH2Report& r);
json to_json(const CohomologyTable& t);
json structure_json(const StructureDefinition& def);
json conventions();

std::string sha256_hex(const std::string& bytes);

}  // namespace holopois::cli
