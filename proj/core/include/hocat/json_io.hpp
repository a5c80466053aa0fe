#pragma once

#include <string>

#include "hocat/catdiagram.hpp"
#include "hocat/free_tree.hpp"
#include "hocat/hocolim.hpp"
#include "hocat/snf.hpp"

// vendored single header
#include "json.hpp"

namespace hocat {

using Json = nlohmann::json;

Json fincat_to_json(const FinCat& c);
FinCat fincat_from_json(const Json& j);

Json functor_to_json(const Functor& f);
// src/dst must outlive the functor
Functor functor_from_json(const Json& j, const FinCat& src, const FinCat& dst);

// {"base": ..., "fibers": {objId: fincat}, "functors": {morId: functor}}
Json catdiagram_to_json(const CatDiagram& X);
// The returned diagram owns its base in `base_out`.
CatDiagram catdiagram_from_json(const Json& j, FinCat& base_out);

// {"arities": {"2": fincat, ...}}
Collection collection_from_json(const Json& j);
Collection load_collection_file(const std::string& path);

Json elt_to_json(const OperadElt& e);
OperadElt elt_from_json(const Json& j);
Json mor_to_json(const OperadMor& m);
OperadMor mor_from_json(const Json& j);

Json sset_to_json(const TruncSSet& x);
Json homology_to_json(const HomologyResult& h);
std::string homology_table(const HomologyResult& h);

Json report_to_json(const CheckReport& r);

Json load_json_file(const std::string& path);

} // namespace hocat
