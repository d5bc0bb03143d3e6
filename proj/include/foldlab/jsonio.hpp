#pragma once

#include <string>

#include "json.hpp"

#include "foldlab/analyzer.hpp"
#include "foldlab/constructions.hpp"
#include "foldlab/engine.hpp"

namespace foldlab {

using Json = nlohmann::ordered_json;

// Facemapping as {"width","height","cells":[{x,y,face,corners:[4 vertex ids]}]}.
Json to_json(const Facemapping& fm);
Facemapping facemapping_from_json(const Json& j);

Json to_json(const Polyomino& p);
Json to_json(const Verdict& v);
Json to_json(const SearchStats& s);
Json to_json(const CooperationReport& r);
Json to_json(const FixtureReport& r);

}  // namespace foldlab
