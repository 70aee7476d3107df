#pragma once

#include <string>
#include <vector>

#include "morseb/instance.hpp"

namespace morseb {

/// Bundled triangulated instances with vertex-sampled Morse functions whose
/// first difference vanishes in the normal direction at the boundary layer
/// (the discrete collar normal form), plus suggested boundary labels.
///
/// Names: interval, disk, annulus, moebius, ball3, solid_torus.
/// Throws UnknownExampleError / ResolutionTooSmallError.
Instance generate_example(const std::string& name, int resolution);

std::vector<std::string> example_names();
int example_minimum_resolution(const std::string& name);

} // namespace morseb
