#include "ratel/telescope.hpp"

#include "ratel/nonmin.hpp"
#include "ratel/ratz.hpp"

namespace ratel {

const char* method_name(Method m) {
  switch (m) {
    case Method::Hermite: return "hermite";
    case Method::AZ: return "az";
    case Method::Lipshitz: return "lipshitz";
    case Method::Cubic: return "cubic";
  }
  return "?";
}

std::optional<Method> method_from_name(std::string_view name) {
  if (name == "hermite") return Method::Hermite;
  if (name == "az") return Method::AZ;
  if (name == "lipshitz") return Method::Lipshitz;
  if (name == "cubic") return Method::Cubic;
  return std::nullopt;
}

namespace {

ht::TelescoperResult wrap_scan(nonmin::AnnihilatorResult r, const char* name) {
  ht::TelescoperResult out;
  out.order = r.L.order();
  out.method = name;
  out.seconds = r.seconds;
  out.L = std::move(r.L);
  if (!r.g.is_zero_rf()) out.certificate.terms.push_back({XFrac(1), std::move(r.g)});
  return out;
}

}  // namespace

ht::TelescoperResult run_telescoper(const RFunc& f, Method m) {
  switch (m) {
    case Method::Hermite: return ht::hermite_telescoping(f);
    case Method::AZ: return ratz::rat_az(f);
    case Method::Lipshitz: return wrap_scan(nonmin::lipshitz_telescoper(f), "lipshitz");
    case Method::Cubic: return wrap_scan(nonmin::cubic_telescoper(f), "cubic");
  }
  throw InputError("unknown telescoping method");
}

}  // namespace ratel
