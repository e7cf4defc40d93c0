// JSON and CSV serialization for the CLI and golden-file tests.

#ifndef LORENZ_IO_HPP
#define LORENZ_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "lorenz/kneading.hpp"
#include "lorenz/maps.hpp"
#include "lorenz/outside.hpp"
#include "lorenz/periodic.hpp"
#include "lorenz/rotation.hpp"
#include "lorenz/sweep.hpp"

namespace lorenz {

using json = nlohmann::json;

// "p/q" for rationals, decimal "lo..hi" for everything else
std::string scalar_str(const exact_scalar& s);

json to_json(const map_spec& m);
json to_json(const cutting_data& cd);
json to_json(const rotation_result& r);
json to_json(const rotation_estimate& e);
json to_json(const period_report& r);
json to_json(const lift_certificate& c);

std::string cutting_csv(const cutting_data& cd);
std::string complexity_csv(const std::vector<size_t>& p);
std::string sweep_csv(const std::vector<sweep_row>& rows);

} // namespace lorenz

#endif
