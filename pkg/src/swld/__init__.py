"""Syndrome-based compression with decoder-only side information.

Blocks are compressed to code syndromes plus a short checksum; the
decoder recovers them from correlated side information by list decoding
(Guruswami-Sudan on Reed-Solomon codes, supercode decoding for binary
BCH) and checksum disambiguation.  The planner picks codes, radii and
checksum budgets algebraically from the correlation parameters, and a
feedback session adapts the rate over nested parity rows.
"""

from .bch import BchCode, bch_list_decode, bch_syndrome, build_bch, designed_distance_ladder
from .codec import (DecodeOutcome, DecodeStatus, FeedbackResult, SyndromePacket,
                    decode, decode_oracle, encode, feedback_encode_step, feedback_run,
                    parse_packet, serialize_packet, start_feedback_session)
from .correlation import (CorrelationModel, central_window, conditional_entropy,
                          tail_radius)
from .crc import CrcSpec, crc_compute, crc_select, default_crc_for_field, get_crc, required_rho
from .errors import SwldError
from .gf import Field, Poly, get_field, poly_mod, solve_linear
from .listdecode import (GsConfig, ListDecodeResult, brute_force_list, gs_list_decode,
                         gs_radius, gs_radius_limit, min_multiplicity_for_radius,
                         min_weight_coset_list)
from .planner import (FeedbackSchedule, RatePlan, choose_bch, choose_rs, choose_rs_unique,
                      plan, plan_feedback, sweep, sweep_csv, theoretical_rate)
from .rs import RsCode, get_rs_code

__version__ = "0.1.0"

__all__ = [
    "BchCode", "CorrelationModel", "CrcSpec", "DecodeOutcome", "DecodeStatus",
    "FeedbackResult", "FeedbackSchedule", "Field", "GsConfig", "ListDecodeResult",
    "Poly", "RatePlan", "RsCode", "SwldError", "SyndromePacket",
    "bch_list_decode", "bch_syndrome", "brute_force_list", "build_bch",
    "central_window", "choose_bch", "choose_rs", "choose_rs_unique",
    "conditional_entropy", "crc_compute", "crc_select", "decode", "decode_oracle",
    "default_crc_for_field", "designed_distance_ladder", "encode",
    "feedback_encode_step", "feedback_run", "get_crc", "get_field", "get_rs_code",
    "gs_list_decode", "gs_radius", "gs_radius_limit", "min_multiplicity_for_radius",
    "min_weight_coset_list", "parse_packet", "plan", "plan_feedback", "poly_mod",
    "required_rho", "serialize_packet", "solve_linear", "start_feedback_session",
    "sweep", "sweep_csv", "tail_radius", "theoretical_rate",
]
