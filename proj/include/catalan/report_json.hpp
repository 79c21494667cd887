#pragma once

#include <string>

#include "json.hpp"
#include "catalan/verify.hpp"

namespace catalan {

using Json = nlohmann::ordered_json;

// Wall times are left out unless `timing` is set, so reports for the same bounds compare equal.
Json to_json(const CensusReport& r, bool timing = false);
Json to_json(const DistributionReport& r, bool timing = false);
Json to_json(const InvolutionReport& r, bool timing = false);
Json to_json(const CheckReport& r, bool timing = false);
Json to_json(const Bounds& b);
Json to_json(const VerifyReport& r, bool timing = false);

// {"even":..,"odd":..,"diff":..,"expected":..,"pass":..}
Json census_row_json(const CensusReport& r);
// Sun census row: {"semilength":..,"row":[..],"even":..,"odd":..,"diff":..,"expected":..,"pass":..}
Json sun_row_json(const CensusReport& r);

// kind,n,even,odd,total,diff,expected,pass
std::string census_csv_header();
std::string census_csv_row(const CensusReport& r);

}  // namespace catalan
