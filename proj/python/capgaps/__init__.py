# Copyright 2026 The capgaps authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Quantum channel capacities, gaps, and codings."""

from ._core import (  # noqa: F401
    AffineRep,
    CapacityReport,
    ChoiMatrix,
    Coding,
    DecompositionResult,
    Descriptors,
    GenExtremeParams,
    OptDiagnostics,
    OptimizeResult,
    OptimizerConfig,
    QChannel,
    RelativeEntropy,
    ResultRow,
    RunConfig,
    SampleBatch,
    SampleSpec,
    StabCode,
    __version__,
    affine_from_channel,
    apply,
    apply_unchecked,
    attach_q3_bound,
    bare_error,
    batch_from_json,
    batch_to_json,
    builtin_code,
    builtin_coding,
    capacity_report,
    channel_from_json,
    channel_rank,
    channel_to_json,
    channels,
    choi_from_kraus,
    coded_channel,
    coding_error,
    coherent_information,
    complementary,
    compose,
    decompose_channel,
    descriptors,
    ea_classical,
    entanglement_entropy,
    entanglement_fidelity,
    entropy,
    gen_extreme_channel,
    i_of_channel,
    kl_check,
    kraus_from_choi,
    mutual_information,
    optimize_input,
    plot_scatter,
    q1_capacity,
    q1_capacity_floored,
    q2_capacity,
    q3_upper_bound,
    q4_capacity,
    q5_one_shot,
    q_cap_gen_extreme,
    q_cap_rank2,
    read_csv,
    relative_entropy,
    row_field,
    row_for_channel,
    run_scatter,
    sample_channels,
    sign_statistics,
    state_fidelity,
    tensor_pow,
    transition_statistic,
    write_csv,
)
