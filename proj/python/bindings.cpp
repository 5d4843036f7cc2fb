#include "berkp/cli.hpp"

#include <pybind11/pybind11.h>

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Berkovich potential theory over Q_p";
  m.def(
      "run",
      [](const std::string& subcommand, const std::string& input, std::int64_t p, int precision,
         std::uint64_t seed, bool natural) {
        berkp::Invocation inv;
        inv.subcommand = subcommand;
        inv.input = berkp::Json::parse(input);
        inv.p = p;
        inv.precision = precision;
        inv.seed = seed;
        inv.natural = natural;
        berkp::Outcome o = berkp::run(inv);
        return py::make_tuple(o.status, o.output);
      },
      py::arg("subcommand"), py::arg("input"), py::arg("p") = 5, py::arg("precision") = 64, py::arg("seed") = 0,
      py::arg("natural") = false);
  m.def("subcommands", &berkp::subcommands);
}
