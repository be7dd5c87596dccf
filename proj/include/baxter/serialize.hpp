#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "baxter/bipolar.hpp"
#include "baxter/continuum.hpp"
#include "baxter/permutation.hpp"
#include "baxter/walk.hpp"

namespace baxter {

using Json = nlohmann::ordered_json;

/// 1-based one-line notation: [3,1,2].
Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j);

/// {"start":[x,y],"steps":[[dx,dy],...]}
Json to_json(const QuadrantWalk& w);
QuadrantWalk walk_from_json(const Json& j);

/// {"edges":[[tail,head],...],"out_order":{"v":[e,...]},"in_order":{...},
///  "source":v,"sink":v} with 0-based ids.
Json to_json(const BipolarOrientation& m);
BipolarOrientation map_from_json(const Json& j);

/// {"k":..,"pattern":[..],"n":..,"samples":..,"estimate":..,"stderr":..,"seed":..}
Json to_json(const PatternEstimate& e);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// k rows of k comma-separated masses, row index = x-cell.
void write_csv(std::ostream& out, const PermutonHistogram& h);

/// Parses each non-blank line as JSON; throws ParseError with the line number.
std::vector<Json> read_jsonl(std::istream& in);

}  // namespace baxter
