#pragma once

#include <string>

#include "json.hpp"

#include "tileforge/augment.hpp"
#include "tileforge/cofinite.hpp"
#include "tileforge/pcp.hpp"
#include "tileforge/reduce.hpp"
#include "tileforge/turing.hpp"

namespace tileforge {

using Json = nlohmann::json;

// Malformed documents throw FormatError.
class FormatError : public Error {
 public:
  using Error::Error;
};

Json to_json(const Region& r);
Region region_from_json(const Json& j);

Json to_json(const DecoratedRegion& d);
DecoratedRegion decorated_from_json(const Json& j);

Json to_json(const Tileset& ts);
Tileset tileset_from_json(const Json& j);

// {"placements":[{"tile":..,"offset":[x,y],"orientation":o}]}
Json to_json(const Tiling& t);
Tiling tiling_from_json(const Json& j);

Json to_json(const PcpInstance& p);
PcpInstance pcp_from_json(const Json& j);

Json to_json(const TuringMachine& m);
TuringMachine machine_from_json(const Json& j);

Json to_json(const PeriodicCertificate& c);
PeriodicCertificate certificate_from_json(const Json& j);

Json to_json(const AugWitness& w);
AugWitness aug_witness_from_json(const Json& j);

Json to_json(const ColorTable& t);
Json to_json(const Configuration& c, const std::string& blank);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace tileforge
