#ifndef LORENZ_ERRORS_HPP
#define LORENZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lorenz {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A branch decision on an interval scalar stayed ambiguous after the
// refinement budget was spent.
struct precision_exhausted : error {
  explicit precision_exhausted(const std::string& msg) : error(msg) {}
};

struct parameter_out_of_range : error {
  explicit parameter_out_of_range(const std::string& msg) : error(msg) {}
};

struct not_symmetric : error {
  explicit not_symmetric(const std::string& msg) : error(msg) {}
};

struct not_degree_one : error {
  explicit not_degree_one(const std::string& msg) : error(msg) {}
};

struct depth_exceeded : error {
  explicit depth_exceeded(const std::string& msg) : error(msg) {}
};

struct invalid_cutting_sequence : error {
  explicit invalid_cutting_sequence(const std::string& msg) : error(msg) {}
};

struct offset_mismatch : error {
  explicit offset_mismatch(const std::string& msg) : error(msg) {}
};

struct no_admissible_witness : error {
  explicit no_admissible_witness(const std::string& msg) : error(msg) {}
};

struct lap_budget_exceeded : error {
  explicit lap_budget_exceeded(const std::string& msg) : error(msg) {}
};

struct target_out_of_range : error {
  explicit target_out_of_range(const std::string& msg) : error(msg) {}
};

struct insufficient_length : error {
  explicit insufficient_length(const std::string& msg) : error(msg) {}
};

} // namespace lorenz

#endif
