// Copyright 2026 The capgaps authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <capgaps/capacity.hpp>
#include <capgaps/channel.hpp>
#include <capgaps/coding.hpp>
#include <capgaps/decompose.hpp>
#include <capgaps/entropic.hpp>
#include <capgaps/experiments.hpp>
#include <capgaps/sampling.hpp>

namespace py = pybind11;
using namespace capgaps;

PYBIND11_MODULE(_core, m) {
  m.doc() = "quantum channel capacities, gaps, and codings";
  m.attr("__version__") = CAPGAPS_VERSION;

  // --- channels -------------------------------------------------------
  py::class_<QChannel>(m, "QChannel")
      .def(py::init<int, int, std::vector<CMatrix>>(), py::arg("d_in"),
           py::arg("d_out"), py::arg("kraus"))
      .def_readonly("d_in", &QChannel::d_in)
      .def_readonly("d_out", &QChannel::d_out)
      .def_readonly("kraus", &QChannel::kraus)
      .def("__repr__", [](const QChannel& ch) {
        return "QChannel(d_in=" + std::to_string(ch.d_in) +
               ", d_out=" + std::to_string(ch.d_out) +
               ", kraus=" + std::to_string(ch.kraus.size()) + ")";
      });

  py::class_<ChoiMatrix>(m, "ChoiMatrix")
      .def_readonly("d_in", &ChoiMatrix::d_in)
      .def_readonly("d_out", &ChoiMatrix::d_out)
      .def_readonly("matrix", &ChoiMatrix::matrix);

  py::class_<AffineRep>(m, "AffineRep")
      .def_readonly("t", &AffineRep::t)
      .def_readonly("T", &AffineRep::T);

  auto chans = m.def_submodule("channels", "builtin channel families");
  chans.def("identity", &channels::identity, py::arg("d"));
  chans.def("unitary", &channels::unitary, py::arg("u"));
  chans.def("bit_flip", &channels::bit_flip, py::arg("p"));
  chans.def("phase_flip", &channels::phase_flip, py::arg("p"));
  chans.def("depolarizing", &channels::depolarizing, py::arg("p"));
  chans.def("amplitude_damping", &channels::amplitude_damping,
            py::arg("gamma"));
  chans.def("replacement", &channels::replacement, py::arg("sigma"));
  chans.def("from_name", &channels::from_name, py::arg("name"));

  m.def(
      "apply",
      [](const QChannel& ch, const CMatrix& rho) { return apply(ch, rho); },
      py::arg("channel"), py::arg("rho"));
  m.def("apply_unchecked", &apply_unchecked, py::arg("channel"),
        py::arg("rho"));
  m.def("choi_from_kraus", &choi_from_kraus, py::arg("channel"));
  m.def("kraus_from_choi", &kraus_from_choi, py::arg("choi"));
  m.def("channel_rank", &channel_rank, py::arg("channel"));
  m.def("complementary", &complementary, py::arg("channel"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("tensor_pow", &tensor_pow, py::arg("channel"), py::arg("n"));
  m.def("affine_from_channel", &affine_from_channel, py::arg("channel"));
  m.def("channel_to_json", &channel_to_json, py::arg("channel"));
  m.def("channel_from_json", &channel_from_json, py::arg("text"));

  // --- entropics ------------------------------------------------------
  py::class_<RelativeEntropy>(m, "RelativeEntropy")
      .def_readonly("value", &RelativeEntropy::value)
      .def_readonly("infinite", &RelativeEntropy::infinite);

  m.def("entropy", &entropy, py::arg("rho"));
  m.def("relative_entropy", &relative_entropy, py::arg("rho"),
        py::arg("sigma"));
  m.def("coherent_information", &coherent_information, py::arg("rho"),
        py::arg("channel"));
  m.def("mutual_information", &mutual_information, py::arg("rho"),
        py::arg("channel"));
  m.def("i_of_channel", &i_of_channel, py::arg("channel"));
  m.def("state_fidelity", &state_fidelity, py::arg("rho"), py::arg("sigma"));
  m.def("entanglement_fidelity", &entanglement_fidelity, py::arg("a"),
        py::arg("b"));

  // --- capacities -----------------------------------------------------
  py::class_<OptimizerConfig>(m, "OptimizerConfig")
      .def(py::init([](int restarts, int max_iters, double tol,
                       std::uint64_t seed) {
             OptimizerConfig c;
             c.restarts = restarts;
             c.max_iters = max_iters;
             c.tol = tol;
             c.seed = seed;
             return c;
           }),
           py::arg("restarts") = OptimizerConfig{}.restarts,
           py::arg("max_iters") = OptimizerConfig{}.max_iters,
           py::arg("tol") = OptimizerConfig{}.tol,
           py::arg("seed") = OptimizerConfig{}.seed)
      .def_readwrite("restarts", &OptimizerConfig::restarts)
      .def_readwrite("max_iters", &OptimizerConfig::max_iters)
      .def_readwrite("tol", &OptimizerConfig::tol)
      .def_readwrite("seed", &OptimizerConfig::seed);

  py::class_<OptDiagnostics>(m, "OptDiagnostics")
      .def_readonly("iterations", &OptDiagnostics::iterations)
      .def_readonly("best_restart", &OptDiagnostics::best_restart)
      .def_readonly("converged", &OptDiagnostics::converged);

  py::class_<OptimizeResult>(m, "OptimizeResult")
      .def_readonly("argmax", &OptimizeResult::argmax)
      .def_readonly("value", &OptimizeResult::value)
      .def_readonly("iterations", &OptimizeResult::iterations)
      .def_readonly("best_restart", &OptimizeResult::best_restart)
      .def_readonly("converged", &OptimizeResult::converged)
      .def_readonly("restart_values", &OptimizeResult::restart_values);

  py::class_<CapacityReport>(m, "CapacityReport")
      .def_readonly("rank", &CapacityReport::rank)
      .def_readonly("t_norm", &CapacityReport::t_norm)
      .def_readonly("t_frob", &CapacityReport::t_frob)
      .def_readonly("q1", &CapacityReport::q1)
      .def_readonly("q2", &CapacityReport::q2)
      .def_readonly("q5", &CapacityReport::q5)
      .def_readonly("q4", &CapacityReport::q4)
      .def_readonly("q3_ub", &CapacityReport::q3_ub)
      .def_readonly("decomposition_residual",
                    &CapacityReport::decomposition_residual)
      .def_readonly("dq15", &CapacityReport::dq15)
      .def_readonly("dq25", &CapacityReport::dq25)
      .def_readonly("dq24", &CapacityReport::dq24)
      .def_readonly("dq23", &CapacityReport::dq23)
      .def_readonly("dq34", &CapacityReport::dq34)
      .def_readonly("q5_diag", &CapacityReport::q5_diag)
      .def_readonly("q4_diag", &CapacityReport::q4_diag);

  m.def("q1_capacity", &q1_capacity, py::arg("channel"));
  m.def("q1_capacity_floored", &q1_capacity_floored, py::arg("channel"));
  m.def("q2_capacity", &q2_capacity, py::arg("channel"));
  m.def("q5_one_shot", &q5_one_shot, py::arg("channel"), py::arg("config"));
  m.def("q4_capacity", &q4_capacity, py::arg("channel"), py::arg("config"));
  m.def("ea_classical", &ea_classical, py::arg("channel"), py::arg("config"));
  m.def("capacity_report", &capacity_report, py::arg("channel"),
        py::arg("config"));
  m.def("attach_q3_bound", &attach_q3_bound, py::arg("report"),
        py::arg("q3_ub"), py::arg("residual"));
  m.def("optimize_input", &optimize_input, py::arg("objective"), py::arg("d"),
        py::arg("config"));

  // --- sampling -------------------------------------------------------
  py::class_<SampleSpec>(m, "SampleSpec")
      .def(py::init([](int rank, int count, std::uint64_t seed) {
             SampleSpec s;
             s.rank = rank;
             s.count = count;
             s.seed = seed;
             return s;
           }),
           py::arg("rank") = SampleSpec{}.rank,
           py::arg("count") = SampleSpec{}.count,
           py::arg("seed") = SampleSpec{}.seed)
      .def_readwrite("rank", &SampleSpec::rank)
      .def_readwrite("count", &SampleSpec::count)
      .def_readwrite("seed", &SampleSpec::seed);

  py::class_<SampleBatch>(m, "SampleBatch")
      .def_readonly("spec", &SampleBatch::spec)
      .def_readonly("channels", &SampleBatch::channels)
      .def_readonly("rejected", &SampleBatch::rejected);

  py::class_<Descriptors>(m, "Descriptors")
      .def_readonly("t_norm", &Descriptors::t_norm)
      .def_readonly("t_frob", &Descriptors::t_frob);

  m.def("sample_channels", &sample_channels, py::arg("spec"));
  m.def("descriptors", &descriptors, py::arg("channel"));
  m.def("batch_to_json", &batch_to_json, py::arg("batch"));
  m.def("batch_from_json", &batch_from_json, py::arg("text"));

  // --- decomposition --------------------------------------------------
  py::class_<GenExtremeParams>(m, "GenExtremeParams")
      .def(py::init<>())
      .def_readwrite("u", &GenExtremeParams::u)
      .def_readwrite("v", &GenExtremeParams::v)
      .def_readwrite("pre", &GenExtremeParams::pre)
      .def_readwrite("post", &GenExtremeParams::post);

  py::class_<DecompositionResult>(m, "DecompositionResult")
      .def_readonly("success", &DecompositionResult::success)
      .def_readonly("p", &DecompositionResult::p)
      .def_readonly("ge1", &DecompositionResult::ge1)
      .def_readonly("ge2", &DecompositionResult::ge2)
      .def_readonly("residual", &DecompositionResult::residual)
      .def_readonly("bound", &DecompositionResult::bound)
      .def_readonly("restarts_used", &DecompositionResult::restarts_used)
      .def_readonly("successes", &DecompositionResult::successes);

  m.def("gen_extreme_channel", &gen_extreme_channel, py::arg("params"));
  m.def("q_cap_gen_extreme", &q_cap_gen_extreme, py::arg("u"), py::arg("v"));
  m.def("q_cap_rank2", &q_cap_rank2, py::arg("channel"), py::arg("config"));
  m.def("decompose_channel", &decompose_channel, py::arg("channel"),
        py::arg("config"));
  m.def("q3_upper_bound", &q3_upper_bound, py::arg("channel"),
        py::arg("config"));

  // --- codings --------------------------------------------------------
  py::class_<Coding>(m, "Coding")
      .def(py::init<QChannel, QChannel, int, int, std::string>(),
           py::arg("encoder"), py::arg("decoder"), py::arg("n"), py::arg("k"),
           py::arg("tag") = "I")
      .def_readonly("encoder", &Coding::encoder)
      .def_readonly("decoder", &Coding::decoder)
      .def_readonly("n", &Coding::n)
      .def_readonly("k", &Coding::k)
      .def_readonly("model_tag", &Coding::model_tag);

  py::class_<StabCode>(m, "StabCode")
      .def_readonly("name", &StabCode::name)
      .def_readonly("n", &StabCode::n)
      .def_readonly("k", &StabCode::k)
      .def_readonly("isometry", &StabCode::isometry);

  m.def("coded_channel", &coded_channel, py::arg("coding"),
        py::arg("channel"));
  m.def("coding_error", &coding_error, py::arg("coding"), py::arg("channel"));
  m.def("bare_error", &bare_error, py::arg("channel"), py::arg("k"));
  m.def("kl_check", &kl_check, py::arg("code"), py::arg("errors"),
        py::arg("tol") = 1e-10);
  m.def("builtin_code", &builtin_code, py::arg("name"));
  m.def("builtin_coding", &builtin_coding, py::arg("name"));
  m.def("entanglement_entropy", &entanglement_entropy, py::arg("psi"),
        py::arg("dims"), py::arg("keep"));

  // --- experiments ----------------------------------------------------
  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init([](std::vector<int> ranks, int count, std::uint64_t seed,
                       OptimizerConfig opt, int threads, bool with_decompose) {
             RunConfig c;
             c.ranks = std::move(ranks);
             c.count = count;
             c.seed = seed;
             c.opt = opt;
             c.threads = threads;
             c.with_decompose = with_decompose;
             return c;
           }),
           py::arg("ranks") = RunConfig{}.ranks,
           py::arg("count") = RunConfig{}.count,
           py::arg("seed") = RunConfig{}.seed,
           py::arg("opt") = OptimizerConfig{},
           py::arg("threads") = RunConfig{}.threads,
           py::arg("with_decompose") = RunConfig{}.with_decompose)
      .def_readwrite("ranks", &RunConfig::ranks)
      .def_readwrite("count", &RunConfig::count)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("opt", &RunConfig::opt)
      .def_readwrite("threads", &RunConfig::threads)
      .def_readwrite("with_decompose", &RunConfig::with_decompose);

  py::class_<ResultRow>(m, "ResultRow")
      .def(py::init<>())
      .def_readwrite("index", &ResultRow::index)
      .def_readwrite("rank", &ResultRow::rank)
      .def_readwrite("seed", &ResultRow::seed)
      .def_readwrite("t_norm", &ResultRow::t_norm)
      .def_readwrite("t_frob", &ResultRow::t_frob)
      .def_readwrite("q1", &ResultRow::q1)
      .def_readwrite("q2", &ResultRow::q2)
      .def_readwrite("q5", &ResultRow::q5)
      .def_readwrite("q4", &ResultRow::q4)
      .def_readwrite("q3_ub", &ResultRow::q3_ub)
      .def_readwrite("dq15", &ResultRow::dq15)
      .def_readwrite("dq25", &ResultRow::dq25)
      .def_readwrite("dq24", &ResultRow::dq24)
      .def_readwrite("dq23", &ResultRow::dq23)
      .def_readwrite("dq34", &ResultRow::dq34)
      .def_readwrite("residual", &ResultRow::residual)
      .def_readwrite("q5_converged", &ResultRow::q5_converged)
      .def_readwrite("q4_converged", &ResultRow::q4_converged)
      .def_readwrite("decompose_ok", &ResultRow::decompose_ok);

  m.def("run_scatter", &run_scatter, py::arg("config"),
        py::call_guard<py::gil_scoped_release>());
  m.def("row_for_channel", &row_for_channel, py::arg("channel"),
        py::arg("rank"), py::arg("index"), py::arg("seed"), py::arg("opt"),
        py::arg("with_decompose"),
        py::call_guard<py::gil_scoped_release>());
  m.def("write_csv", &write_csv, py::arg("rows"), py::arg("path"));
  m.def("read_csv", &read_csv, py::arg("path"));
  m.def("plot_scatter", &plot_scatter, py::arg("rows"), py::arg("x_field"),
        py::arg("y_field"), py::arg("group_by_rank") = true);
  m.def("row_field", &row_field, py::arg("row"), py::arg("field"));
  m.def("transition_statistic", &transition_statistic, py::arg("rows"));
  m.def("sign_statistics", &sign_statistics, py::arg("rows"));
}
