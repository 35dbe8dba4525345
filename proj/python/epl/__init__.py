"""Evidential path logic over multi-relational networks.

Evidence tuples <w+, w-> form a commutative semiring; sparse matrices of
tuples carry one predicate slice each, and the syllogisms, path
expressions and quad-file I/O operate on those slices.
"""

from ._epl import (
    DEFAULT_EVIDENCE_CONSTANT,
    EvalError,
    EvidenceMatrix,
    EvidenceNetwork,
    EvidenceTuple,
    InferenceResult,
    MergeMode,
    PathExpr,
    QuadFormatError,
    Rule,
    RuleParseError,
    RuleProgram,
    SyllogismKind,
    TruthValue,
    abduce,
    apply,
    clip,
    converse_transpose,
    deduce,
    entrywise_sum,
    evaluate,
    exemplify,
    hadamard,
    identity,
    induce,
    infer,
    load_quads,
    matmul,
    not_filter,
    parse_expr,
    parse_rules,
    quads_to_string,
    run,
    save_quads,
    step,
    transpose,
    truth_report,
    truth_value,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_EVIDENCE_CONSTANT",
    "EvalError",
    "EvidenceMatrix",
    "EvidenceNetwork",
    "EvidenceTuple",
    "InferenceResult",
    "MergeMode",
    "PathExpr",
    "QuadFormatError",
    "Rule",
    "RuleParseError",
    "RuleProgram",
    "SyllogismKind",
    "TruthValue",
    "abduce",
    "apply",
    "clip",
    "converse_transpose",
    "deduce",
    "entrywise_sum",
    "evaluate",
    "exemplify",
    "hadamard",
    "identity",
    "induce",
    "infer",
    "load_quads",
    "matmul",
    "not_filter",
    "parse_expr",
    "parse_rules",
    "quads_to_string",
    "run",
    "save_quads",
    "step",
    "transpose",
    "truth_report",
    "truth_value",
]
