#ifndef RATEL_TELESCOPE_HPP
#define RATEL_TELESCOPE_HPP

#include <optional>
#include <string>
#include <string_view>

#include "ratel/ht.hpp"

namespace ratel {

// The four telescoper backends, under the names the CLI accepts.
enum class Method { Hermite, AZ, Lipshitz, Cubic };

const char* method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

// Run the chosen backend on f and return its result in the common shape.
// Hermite and AZ return the minimal telescoper; Lipshitz and Cubic return a
// (generally nonminimal) one found by scanning ansatz spaces of bounded
// total degree resp. bounded (deg_x, order).  Every backend verifies
// L(f) = D_y(certificate) exactly before returning.
ht::TelescoperResult run_telescoper(const RFunc& f, Method m);

}  // namespace ratel

#endif
