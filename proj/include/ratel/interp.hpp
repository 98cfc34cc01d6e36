#ifndef RATEL_INTERP_HPP
#define RATEL_INTERP_HPP

#include <optional>

#include "ratel/xfrac.hpp"

namespace ratel {
namespace algebra {

// Cauchy interpolation: the rational function num/den with deg(num) <=
// num_bound, deg(den) <= den_bound, den(xs[i]) != 0 and num/den == vs[i] at
// every point.  Needs xs.size() >= num_bound + den_bound + 1 (extra points
// act as consistency checks).  Returns nullopt when no such function exists.
std::optional<XFrac> rational_interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& vs,
                                          int num_bound, int den_bound);

}  // namespace algebra
}  // namespace ratel

#endif
