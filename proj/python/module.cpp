// placeholder: filled in once the core modules exist
#include <pybind11/pybind11.h>
PYBIND11_MODULE(_ratel, m) { m.doc() = "exact creative telescoping for bivariate rational functions"; }
