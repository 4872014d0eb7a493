#include <pybind11/pybind11.h>
PYBIND11_MODULE(_pipedreams, m) { m.doc() = "stub"; }
