#pragma once

#include <string>
#include <vector>

namespace glg {

// Minimal static line plot of an entropy diagram: grey polyline over slice
// index, one marker per slice colored by cluster label (-1 = unclustered),
// labeled axis ticks. No timestamps or external references, so output is a
// pure function of the inputs.
std::string render_entropy_svg(const std::vector<double>& entropy,
                               const std::vector<int>& cluster_labels,
                               const std::vector<std::string>& slice_labels);

} // namespace glg
