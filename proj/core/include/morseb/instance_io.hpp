#pragma once

#include <string>

#include "morseb/instance.hpp"

namespace morseb {

/// Instance file format (JSON): fields `name`, `dimension`, `vertices`
/// (array of {id, coords?, f?}), `top_simplices`, `boundary_labels` (array of
/// {component, class}), optional `critical_points` (array of {vertex, index})
/// and `boundary_morse` ({mode, inventory: [{component, k, k_prime, count}]}).
/// Component ids follow detect_boundary order. Throws ParseError.
Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& instance);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

} // namespace morseb
