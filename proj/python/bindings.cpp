#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <numeric>

#include "plbandits/bounds.hpp"
#include "plbandits/environments.hpp"
#include "plbandits/experiments.hpp"
#include "plbandits/oracle.hpp"
#include "plbandits/pac_best_item.hpp"
#include "plbandits/pac_wrapper.hpp"
#include "plbandits/uniform_allocation.hpp"

namespace py = pybind11;
using namespace plb;

PYBIND11_MODULE(_plbandits, mod) {
  mod.doc() = "Plackett-Luce subset-choice best-item identification";

  py::class_<PLInstance>(mod, "PLInstance")
      .def(py::init<std::vector<double>, bool, bool>(), py::arg("theta"),
           py::arg("normalize") = false, py::arg("require_unique_best") = false)
      .def_property_readonly("n", &PLInstance::n)
      .def_property_readonly("thetas", &PLInstance::thetas)
      .def_property_readonly("best_item", &PLInstance::best_item)
      .def("subset_mass", &PLInstance::subset_mass)
      .def("top_k_mass", &PLInstance::top_k_mass)
      .def("pairwise_prob", &PLInstance::pairwise_prob)
      .def("topm_pmf", [](const PLInstance& inst, const std::vector<int>& S,
                          int m) {
        py::dict out;
        for (const auto& [sigma, p] : inst.topm_pmf(S, m))
          out[py::tuple(py::cast(sigma))] = p;
        return out;
      });

  mod.def("load_env", &load_env);
  mod.def("builtin_env_names", &builtin_env_names);

  mod.def(
      "sample_topm",
      [](const PLInstance& inst, const std::vector<int>& S, int m,
         std::uint64_t seed) {
        Rng rng(seed);
        return inst.sample_topm(S, m, rng);
      },
      py::arg("inst"), py::arg("S"), py::arg("m"), py::arg("seed"));

  mod.def("pac_upper_bound", &pac_upper_bound);
  mod.def("winner_lower_bound", &winner_lower_bound);
  mod.def("topm_lower_bound", &topm_lower_bound);
  mod.def("delta_tilde", &delta_tilde);
  mod.def("budget_error_bound", &budget_error_bound);
  mod.def("ua_success_bound", &ua_success_bound);
  mod.def("min_feasible_budget", &min_feasible_budget);

  mod.def(
      "pac_wrapper",
      [](const PLInstance& inst, int k, int m, double eps, double delta,
         std::uint64_t seed) {
        WrapperConfig cfg;
        cfg.k = k;
        cfg.m = m;
        cfg.eps = eps;
        cfg.delta = delta;
        cfg.seed = seed;
        RunReport rep = pac_wrapper(inst, cfg);
        return py::make_tuple(rep.returned_item, rep.total_plays,
                              rep.item_plays);
      },
      py::arg("inst"), py::arg("k") = 5, py::arg("m") = 1, py::arg("eps") = 0.0,
      py::arg("delta") = 0.01, py::arg("seed") = 0);

  mod.def(
      "uniform_allocation",
      [](const PLInstance& inst, long long Q, int k, int m,
         std::uint64_t seed) {
        BudgetConfig cfg;
        cfg.Q = Q;
        cfg.k = k;
        cfg.m = m;
        cfg.seed = seed;
        RunReport rep = uniform_allocation(inst, cfg);
        return py::make_tuple(rep.returned_item, rep.total_plays,
                              rep.item_plays);
      },
      py::arg("inst"), py::arg("Q"), py::arg("k") = 5, py::arg("m") = 1,
      py::arg("seed") = 0);

  mod.def(
      "pac_best_item",
      [](const PLInstance& inst, int k, int m, double eps, double delta,
         std::uint64_t seed) {
        PlayOracle oracle(inst, seed);
        std::vector<int> A(inst.n());
        std::iota(A.begin(), A.end(), 0);
        PacBestItemConfig cfg;
        cfg.k = k;
        cfg.m = m;
        cfg.eps = eps;
        cfg.delta = delta;
        SubroutineReport rep = pac_best_item(oracle, A, A, cfg);
        return py::make_tuple(rep.returned_item, oracle.total_plays());
      },
      py::arg("inst"), py::arg("k") = 5, py::arg("m") = 1,
      py::arg("eps") = 0.01, py::arg("delta") = 0.01, py::arg("seed") = 0);
}
