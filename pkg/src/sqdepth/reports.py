"""Report documents and the verification checks behind `verify`.

Documents are plain dicts with a fixed key set, serialized as sorted-key
JSON so identical inputs produce byte-identical output.  Entries of alpha,
beta and h vectors are rendered as decimal strings, since they can outgrow
64-bit integers for large n; structural integers stay JSON numbers.
"""

from __future__ import annotations

import json
import time
from math import comb
from typing import Optional

from . import __version__
from .complexes import (
    complex_of_ideal,
    relative_facets_of_pair,
    relative_of_pair,
    skeleton,
)
from .homology import (
    DEFAULT_FACE_CAP,
    CoefficientField,
    depth as homology_depth,
    is_cm_relative,
    is_cohen_macaulay,
)
from .ideals import DEFAULT_ENUMERATION_CAP, IdealPair, colon
from .invariants import (
    AlphaVector,
    alpha,
    beta,
    beta_recurrence_check,
    dim_module_colon,
    h_vector,
    hdepth_of_alpha,
)
from .macaulay import chu_vandermonde_check, cm_admissible

SCHEMA = "sqdepth-report/v1"

RELATIVE_CM_NOTE = (
    "relative Cohen-Macaulayness is tested by link-pair relative homology; "
    "the criterion is adopted from the relative Stanley-Reisner literature"
)


def _strings(values) -> list[str]:
    return [str(int(v)) for v in values]


def _face_label(mask: int) -> str:
    vertices = [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]
    return "{" + ",".join(str(v) for v in vertices) + "}"


def _check(name: str, status: str, details: str) -> dict:
    return {"name": name, "status": status, "details": details}


def _passfail(ok: bool) -> str:
    return "pass" if ok else "fail"


class ReportBuilder:
    """Shared computation for the three report commands."""

    def __init__(self, pair: IdealPair, field: CoefficientField,
                 cap: int = DEFAULT_ENUMERATION_CAP, face_cap: int = DEFAULT_FACE_CAP,
                 label: Optional[str] = None):
        self.pair = pair
        self.field = field
        self.cap = cap
        self.face_cap = face_cap
        self.label = label
        self.alpha = alpha(pair, cap)
        self.hdepth = hdepth_of_alpha(self.alpha)
        self.dim = self.alpha.max_degree
        self.is_quotient = pair.upper.is_unit
        self.depth: Optional[int] = None
        self.cm: Optional[bool] = None
        self.cm_witness = None

    def compute_depth(self) -> None:
        self.depth = homology_depth(self.pair, self.field, self.cap, self.face_cap)
        self.cm = self.depth == self.dim
        if not self.cm:
            psi = relative_of_pair(self.pair, self.cap)
            if psi.gamma.is_void:
                verdict = is_cohen_macaulay(psi.delta, self.field, self.face_cap)
            else:
                verdict = is_cm_relative(skeleton(psi, psi.dim + 1), self.field, self.face_cap)
            if not verdict.is_cm:
                self.cm_witness = {
                    "face": _face_label(verdict.witness_face),
                    "dimension": verdict.witness_dim,
                }

    def beta_rows(self) -> list[dict]:
        rows = []
        for q in range(self.alpha.min_degree, self.dim + 1):
            bv = beta(self.alpha, q)
            rows.append({
                "q": q,
                "values": _strings(bv.values),
                "first_negative_k": bv.first_negative(),
            })
        return rows

    def document(self, command: str, flags: dict) -> dict:
        h = beta(self.alpha, self.dim)
        notes = []
        if self.depth is not None and not self.is_quotient:
            notes.append(RELATIVE_CM_NOTE)
        provenance = {
            "alpha": "subset enumeration over all masks",
            "beta_table": "signed binomial transform of alpha",
            "hdepth": "downward scan from the alpha degree bound",
            "dim": "max degree with alpha positive",
            "h_vector": "beta at level dim",
            "depth": None if self.depth is None
            else f"skeleton scan with Reisner link tests over {self.field.label()}",
            "cm": None if self.cm is None else "depth equals dim",
        }
        return {
            "schema": SCHEMA,
            "tool_version": __version__,
            "command": command,
            "label": self.label,
            "n": self.pair.n,
            "field": self.field.label(),
            "flags": flags,
            "alpha": _strings(self.alpha.counts),
            "beta_table": self.beta_rows(),
            "hdepth": self.hdepth,
            "dim": self.dim,
            "depth": self.depth,
            "h_vector": _strings(h.values),
            "cm": self.cm,
            "cm_witness": self.cm_witness,
            "notes": notes,
            "provenance": provenance,
            "checks": [],
        }


def build_invariants_document(pair, field, flags, label=None, cap=DEFAULT_ENUMERATION_CAP):
    start = time.perf_counter()
    builder = ReportBuilder(pair, field, cap=cap, label=label)
    doc = builder.document("invariants", flags)
    doc["timing_ms"] = int((time.perf_counter() - start) * 1000)
    return doc


def build_depth_document(pair, field, flags, label=None, cap=DEFAULT_ENUMERATION_CAP,
                         face_cap=DEFAULT_FACE_CAP):
    start = time.perf_counter()
    builder = ReportBuilder(pair, field, cap=cap, face_cap=face_cap, label=label)
    builder.compute_depth()
    doc = builder.document("depth", flags)
    doc["timing_ms"] = int((time.perf_counter() - start) * 1000)
    return doc


def build_verify_document(pair, field, flags, label=None, skip_depth=False,
                          cap=DEFAULT_ENUMERATION_CAP, face_cap=DEFAULT_FACE_CAP):
    """Run every applicable identity and inequality and record a verdict each.

    Every asserted relation is a proved statement, so a failure indicates an
    implementation bug, never a property of the input.
    """
    start = time.perf_counter()
    builder = ReportBuilder(pair, field, cap=cap, face_cap=face_cap, label=label)
    if not skip_depth:
        builder.compute_depth()
    doc = builder.document("verify", flags)
    doc["checks"] = _run_checks(builder)
    doc["timing_ms"] = int((time.perf_counter() - start) * 1000)
    return doc


def _run_checks(b: ReportBuilder) -> list[dict]:
    checks = []
    n = b.pair.n
    a = b.alpha

    lo, hi = a.min_degree, a.max_degree
    checks.append(_check(
        "hdepth-degree-bounds", _passfail(lo <= b.hdepth <= hi),
        f"{lo} <= hdepth={b.hdepth} <= {hi}",
    ))

    checks.append(_check(
        "hdepth-le-dim", _passfail(b.hdepth <= b.dim),
        f"hdepth={b.hdepth} <= dim={b.dim}",
    ))

    colon_dim = dim_module_colon(b.pair, b.cap)
    checks.append(_check(
        "dim-colon-agreement", _passfail(colon_dim == b.dim),
        f"alpha path {b.dim}, colon path {colon_dim}",
    ))

    psi_facets = relative_facets_of_pair(b.pair, b.cap)
    colon_facets = complex_of_ideal(colon(b.pair.lower, b.pair.upper), b.cap).facets
    checks.append(_check(
        "facet-colon-agreement", _passfail(psi_facets == colon_facets),
        f"{len(psi_facets)} facets on both sides" if psi_facets == colon_facets
        else "facet sets differ",
    ))

    failure = None
    for d in range(1, n + 1):
        failure = beta_recurrence_check(a, d)
        if failure is not None:
            break
    checks.append(_check(
        "transform-recurrences", _passfail(failure is None),
        "levels 1..n verified" if failure is None
        else f"identity {failure[0]} fails at k={failure[1]} (d={d})",
    ))

    magic_ok = all(
        chu_vandermonde_check(n, d, k) for d in range(n + 1) for k in range(d + 1)
    )
    checks.append(_check(
        "chu-vandermonde", _passfail(magic_ok),
        f"all 0 <= k <= d <= {n} at n={n}",
    ))

    checks.append(_skeleton_h_check(b))

    checks.extend(_depth_checks(b))
    return checks


def _skeleton_h_check(b: ReportBuilder) -> dict:
    psi = relative_of_pair(b.pair, b.cap)
    for dprime in range(0, b.dim + 1):
        expected = beta(b.alpha, dprime).values
        got = h_vector(skeleton(psi, dprime), level=dprime, cap=b.cap).values
        if expected != got:
            return _check(
                "skeleton-h-vector", "fail",
                f"level {dprime}: transform {expected} vs skeleton h-vector {got}",
            )
    return _check("skeleton-h-vector", "pass", f"levels 0..{b.dim} agree")


def _depth_checks(b: ReportBuilder) -> list[dict]:
    checks = []
    n = b.pair.n
    if b.depth is None:
        skipped = "depth skipped"
        checks.append(_check("depth-le-hdepth", "skipped", skipped))
        checks.append(_check("quotient-depth-chain", "skipped", skipped))
        checks.append(_check("cm-equalities", "skipped", skipped))
        checks.append(_check("cm-quotient-hdepth-gap", "skipped", skipped))
        checks.append(_check("cm-h-bounds", "skipped", skipped))
        return checks

    checks.append(_check(
        "depth-le-hdepth", _passfail(b.depth <= b.hdepth),
        f"depth={b.depth} <= hdepth={b.hdepth}",
    ))

    if b.is_quotient and not b.pair.lower.is_zero:
        ok = b.depth <= b.hdepth <= b.dim <= n - 1
        checks.append(_check(
            "quotient-depth-chain", _passfail(ok),
            f"depth={b.depth} <= hdepth={b.hdepth} <= dim={b.dim} <= {n - 1}",
        ))
    else:
        checks.append(_check("quotient-depth-chain", "skipped", "applies to proper quotients S/I"))

    if b.cm:
        checks.append(_check(
            "cm-equalities", _passfail(b.hdepth == b.dim == b.depth),
            f"hdepth={b.hdepth}, dim={b.dim}, depth={b.depth}",
        ))
    else:
        checks.append(_check("cm-equalities", "skipped", "module is not Cohen-Macaulay"))

    if b.is_quotient and not b.pair.lower.is_zero and b.cm:
        companion = tuple(comb(n, j) - c for j, c in enumerate(b.alpha.counts))
        module_hdepth = hdepth_of_alpha(AlphaVector(n, companion))
        ok = b.hdepth == b.dim == b.depth and module_hdepth >= b.hdepth + 1
        checks.append(_check(
            "cm-quotient-hdepth-gap", _passfail(ok),
            f"hdepth(S/I)={b.hdepth}=dim=depth and hdepth(I)={module_hdepth} >= {b.hdepth + 1}",
        ))
        h = beta(b.alpha, b.dim).values
        admissible, violation = cm_admissible(h, n, b.dim)
        checks.append(_check(
            "cm-h-bounds", _passfail(admissible),
            "h-vector satisfies both Cohen-Macaulay growth bounds" if admissible
            else f"condition {violation[0]} fails at k={violation[1]}",
        ))
    else:
        reason = ("applies to Cohen-Macaulay proper quotients S/I")
        checks.append(_check("cm-quotient-hdepth-gap", "skipped", reason))
        checks.append(_check("cm-h-bounds", "skipped", reason))
    return checks


def has_failures(doc: dict) -> bool:
    return any(c["status"] == "fail" for c in doc.get("checks", []))


def serialize_document(doc: dict, include_timing: bool = True) -> str:
    out = dict(doc)
    if not include_timing:
        out.pop("timing_ms", None)
    return json.dumps(out, sort_keys=True, indent=2) + "\n"
