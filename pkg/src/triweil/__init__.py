"""Exact binomial character sums over GF(3^n) and their verification toolkit."""

from .ff import FieldCtx, FieldError, build_field
from .weil import (
    CharSumValue,
    Spectrum,
    check_family,
    is_degenerate,
    power_moment,
    spectrum,
    validate_exponent,
    weil_sum,
)
from .kernel_curve import (
    fourth_moment_via_kernel,
    kernel_count_charsum,
    kernel_count_direct,
    kernel_report,
)
from .digits import (
    carry_sequence,
    family_witness,
    stickelberger_bound,
    verify_divisibility,
    weight,
)
from .motif_graph import build_graph, find_negative_cycle, graph_report, tarjan_scc, trace_cycle
from .proof_lab import (
    check_minimizer_structure,
    check_surgery,
    derive_motifs,
    enumerate_sequences,
)

__version__ = "0.1.0"
