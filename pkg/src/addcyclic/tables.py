"""Built-in reference tables of codes and the verification harness.

Three tables ship with the library, all entries stored as the literal
generator/matrix strings of their source:

  table 1 — additive cyclic codes over F_q2 (q = 4 and 8) claimed to
            attain the Singleton bound, rows (n, (q^2)^K, d);
  table 2 — Gray images over F_3 of mixed-alphabet additive cyclic codes
            with block lengths [alpha, beta], rows [n, k, d];
  table 3 — ternary codes built from raw mixed generator matrices, with
            LCD claims, rows [n, k, d] for the Gray image.

verify_all rebuilds every row from its literals and classifies each
claim as exactly verified, bound-verified or skipped.  Sizes always come
from the module-closure rank; distances use the exact engine inside the
codeword budget and the seeded sampling bound beyond it.  "Optimal" and
"BKLC" remarks reference external databases and are stored as metadata
only — they are never part of pass/fail.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field as dc_field

from . import linalg
from .codes import (
    GeneratorMatrixCode,
    MixedCode,
    PureCode,
    singleton_check,
)
from .distance import (
    DEFAULT_BUDGET,
    DistanceBudgetError,
    WeightProfile,
    min_distance_exact,
    min_distance_upper,
)
from .fields import tower as get_tower
from .gray import QUASI_CYCLIC_3, gray_image, shift_invariance_check
from .lcd import hull, is_lcd, lcd_pipeline, load_matrix_document
from .poly import parse_poly

OPTIMALITY_NOTE = (
    "Optimal/BKLC remarks cite external code databases and are recorded as "
    "metadata only; they are excluded from pass/fail."
)


@dataclass(frozen=True)
class TableEntry:
    table_id: int
    row: int
    q: int
    expected_n: int
    expected_k: int          # F_q-dimension (table 1: 2K, the F_q2-expansion)
    expected_d: int
    n: int | None = None     # table 1 length
    alpha: int | None = None
    beta: int | None = None
    s: str | None = None
    l: str | None = None
    g: str | None = None
    h: str | None = None
    k: str | None = None
    matrix: tuple | None = None
    remark: str = ""
    footnotes: tuple = ()
    annotation: str = ""


def _t1(row, q, n, g, h, k, K, d):
    return TableEntry(
        table_id=1, row=row, q=q, n=n, g=g, h=h, k=k,
        expected_n=n, expected_k=2 * K, expected_d=d,
    )


TABLE1 = (
    _t1(1, 4, 5, "1", "x^2+ux", "x^4+x^3+x^2+x+1", 3, 3),
    _t1(2, 4, 6, "x^2+u", "x^4+x^3+ux+u^2", "x^6+1", 2, 5),
    _t1(3, 4, 7, "1", "x^3+ux^2+x", "x^6+x^5+x^4+x^3+x^2+x+1", 4, 4),
    _t1(4, 4, 8, "1", "x^3+x^2+ux", "x^6+x^4+x^2+1", 5, 4),
    _t1(5, 4, 9, "1", "x^5+x^4+x^3+ux",
        "x^8+ux^7+u^2x^6+x^5+ux^4+u^2x^3+x^2+ux+u^2", 5, 5),
    _t1(6, 4, 10, "1", "x^7+x^6+x^5+ux^3+x^2+u^2x", "x^10+1", 5, 6),
    _t1(7, 4, 13, "1", "x^5+x^3+ux^2+u^2x", "x^6+ux^5+u^2x^3+ux+1", 10, 4),
    _t1(8, 4, 15, "1", "x^2+x", "x^4+x+u^2", 13, 3),
    _t1(9, 4, 17, "1", "x^7+x^6+ux^3+u^2x",
        "x^8+ux^7+ux^5+ux^4+ux^3+ux+1", 13, 5),
    _t1(10, 8, 5, "1", "x^2+ux", "x^4+x^3+x^2+x+1", 3, 3),
    _t1(11, 8, 6, "1", "x^3+x^2+ux", "x^6+1", 3, 4),
    _t1(12, 8, 7, "1", "x^2+x", "x^4+u^5x^3+u^4x^2+x+u^4", 5, 3),
    _t1(13, 8, 8, "1", "x^4+x^3+ux^2+u^3x", "x^8+1", 4, 5),
    _t1(14, 8, 9, "1", "x^3+x^2+ux",
        "x^6+u^6x^5+ux^4+u^5x^3+ux^2+u^6x+1", 6, 4),
    _t1(15, 8, 10, "1", "x^5+x^4+ux^3+u^6x^2+u^2x", "x^10+1", 5, 6),
    _t1(16, 8, 11, "1", "x^6+x^4+ux^3+u^5x^2+x",
        "x^10+x^9+x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1", 6, 6),
    _t1(17, 8, 13, "1", "x^2+x", "x^4+u^6x^3+u^3x^2+u^6x+1", 11, 3),
    _t1(18, 8, 15, "1", "x^2+ux", "x^4+x^3+1", 13, 3),
    _t1(19, 8, 17, "1", "x^6+ux^5+u^3x^3+ux^2+u^3x",
        "x^8+x^5+x^4+x^3+1", 13, 5),
)


def _t2(row, s, g, h, k, l, alpha, beta, n, kdim, d, remark, foot, note=""):
    return TableEntry(
        table_id=2, row=row, q=3, alpha=alpha, beta=beta,
        s=s, g=g, h=h, k=k, l=l,
        expected_n=n, expected_k=kdim, expected_d=d,
        remark=remark, footnotes=foot, annotation=note,
    )


def _ones(deg):
    return "+".join(f"x^{d}" if d > 1 else ("x" if d == 1 else "1")
                    for d in range(deg, -1, -1))


TABLE2 = (
    _t2(1, "1", "x+2", "x+2", "x^3+2", "x^2+x+1",
        1, 3, 7, 3, 4, "Optimal", ()),
    _t2(2, "1", "1", "x^2+2x+2", "x^5+2", "x^2+(2w+2)x+w+1",
        1, 5, 11, 6, 5, "Optimal", ()),
    _t2(3, "1", _ones(6), "x^7+2", "x^7+2",
        "(2w+2)x^4+(w+1)y^3+2wy^2+(w+2)y+w+1",
        1, 7, 15, 8, 5, "Optimal", ("b", "‡"),
        note="source table writes y for x in l(x); the parser accepts the alias"),
    _t2(4, "1", _ones(8), "x^9+2", "x^9+2",
        "x^4+(2w+1)x^3+(2w+1)x^2+(w+2)x+w",
        1, 9, 19, 9, 7, "Optimal", ("b", "‡")),
    _t2(5, "1", _ones(8), "x^9+2", "x^9+2",
        "x^4+(2w+1)x^3+(2w+1)x^2+(w+2)x+2w+2",
        1, 9, 19, 10, 6, "Optimal", ("‡",)),
    _t2(6, "1", _ones(13), "x^14+2", "x^14+2",
        "(w+1)x^4+2wx^2+x+w",
        1, 14, 29, 15, 8, "BKLC", ("‡",)),
    _t2(7, "1", _ones(16), "x^17+2", "x^17+2",
        "wx^8+(2w+2)x^7+wx^6+(w+1)x^5+(w+2)x^3+(w+2)x^2+(w+2)x+2w",
        1, 17, 35, 18, 11, "Optimal", ()),
    _t2(8, "x^2+x+1", "x^3+2", "2x^2+2x+2", "x^3+2",
        "(w+1)x^2+(w+1)x+(w+1)",
        3, 3, 9, 2, 6, "Optimal", ("a", "‡")),
    _t2(9, "1", "1", "x", "x^3+2", "2w+2",
        3, 3, 9, 6, 3, "Optimal", ("a", "b")),
    _t2(10, "x+2", "1", "x", "x^3+2x^2+x+2", "x+2w",
        3, 4, 11, 7, 3, "Optimal", ("‡",)),
    _t2(11, "1", "1", "x^3+x^2+2x", "x^3+2x^2+x+2", "(2w+1)x^3+2x",
        3, 4, 11, 10, 2, "MDS", ("b",)),
    _t2(12, "x^2+x+1", _ones(6), "x^7+2", "x^7+2",
        "(w+2)x^5+x^4+(2w+2)x^3+wx^2+2",
        3, 7, 17, 8, 6, "Optimal", ("b", "‡")),
    _t2(13, "1", "1", "x", "x^4+2", "2w+2",
        4, 4, 12, 8, 3, "Optimal", ("a", "b", "‡")),
    _t2(14, "1", "1", "x", "x+2", "(2w+2)x^3+wx^2+(2w+1)x",
        4, 4, 12, 11, 2, "MDS", ("a",),
        note="source table carries a stray ')' at the end of l(x); dropped"),
)


def _t3(row, alpha, beta, rows, n, kdim, d, remark):
    return TableEntry(
        table_id=3, row=row, q=3, alpha=alpha, beta=beta,
        matrix=tuple(tuple(r) for r in rows),
        expected_n=n, expected_k=kdim, expected_d=d, remark=remark,
    )


TABLE3 = (
    _t3(1, 4, 2, [("1", "1", "1", "0", "w", "w"),
                  ("1", "2", "0", "1", "2", "w+1")],
        8, 2, 5, "Optimal"),
    _t3(2, 4, 2, [("1", "1", "1", "0", "w", "w+1"),
                  ("1", "2", "0", "1", "w+2", "2"),
                  ("1", "2", "0", "1", "2", "w")],
        8, 3, 4, "Optimal LCD code"),
    _t3(3, 4, 3, [("1", "1", "1", "0", "w", "w", "1"),
                  ("1", "2", "0", "1", "2", "w+1", "w")],
        10, 2, 7, "Optimal"),
    _t3(4, 4, 3, [("0", "0", "0", "0", "w", "w+1", "w+1"),
                  ("1", "1", "1", "0", "w+2", "2", "w"),
                  ("1", "2", "0", "1", "2", "w+1", "2w")],
        10, 3, 6, "Optimal"),
    _t3(5, 4, 4, [("1", "1", "1", "0", "w", "w", "1", "w"),
                  ("1", "2", "0", "1", "2", "w+1", "w", "1")],
        12, 2, 8, "Optimal LCD code"),
    _t3(6, 4, 4, [("1", "1", "1", "0", "w", "w+1", "w+1", "w"),
                  ("1", "2", "0", "1", "w+2", "2", "w", "1"),
                  ("1", "2", "0", "1", "2", "w", "2", "w")],
        12, 3, 7, "Optimal LCD code"),
    _t3(7, 4, 5, [("1", "1", "1", "0", "w", "w", "1", "w+2", "w"),
                  ("1", "2", "0", "1", "2", "w+1", "w", "1", "2")],
        14, 2, 10, "Optimal"),
    _t3(8, 4, 6, [("1", "1", "1", "0", "w", "w", "1", "w+2", "w", "w"),
                  ("1", "2", "0", "1", "2", "w+1", "w", "1", "2", "w")],
        16, 2, 11, "Optimal LCD code"),
    _t3(9, 4, 6, [("1", "1", "1", "0", "2w", "2w+2", "0", "w+1", "2w+2", "2w+1"),
                  ("1", "1", "1", "0", "2", "w+1", "2w", "0", "2", "w+1"),
                  ("1", "2", "0", "1", "2w+1", "0", "w+1", "2w+2", "1", "w+2")],
        16, 3, 10, "Optimal"),
    _t3(10, 4, 8, [("1", "1", "1", "0", "w", "w", "1", "w+2", "w", "w+1", "2w", "2w+1"),
                   ("1", "2", "0", "1", "2", "w+1", "w", "1", "2", "w", "2", "2")],
        20, 2, 14, "Optimal LCD code"),
)

TABLES = {1: TABLE1, 2: TABLE2, 3: TABLE3}

# the worked LCD example: table 3 row 6, together with the generator
# matrices its source prints for the two Gray images
WORKED_EXAMPLE_ROW = 6
WORKED_EXAMPLE_PHI_BETA = (
    (1, 0, 0, 1, 2, 2, 2, 2),
    (0, 1, 0, 1, 0, 2, 0, 2),
    (0, 0, 1, 2, 1, 2, 1, 2),
)
WORKED_EXAMPLE_PHI_FULL = (
    (1, 0, 2, 2, 0, 0, 2, 1, 2, 1, 2, 1),
    (0, 1, 2, 1, 0, 1, 1, 0, 1, 1, 1, 1),
    (0, 0, 0, 0, 1, 1, 2, 0, 1, 2, 1, 2),
)


# ---------------------------------------------------------------------------
# building codes from entries


def build_table1_code(entry: TableEntry) -> PureCode:
    tw = get_tower(entry.q)
    return PureCode(
        tw, entry.n,
        parse_poly(entry.g, tw.base, tw),
        parse_poly(entry.h, tw.base, tw),
        parse_poly(entry.k, tw.base, tw),
    )


def build_table2_code(entry: TableEntry, strict=False) -> MixedCode:
    tw = get_tower(3)
    return MixedCode(
        tw, entry.alpha, entry.beta,
        parse_poly(entry.s, tw.base, tw),
        parse_poly(entry.l, tw.ext, tw),
        parse_poly(entry.g, tw.base, tw),
        parse_poly(entry.h, tw.base, tw),
        parse_poly(entry.k, tw.base, tw),
        strict=strict,
    )


def build_table3_words(entry: TableEntry):
    return load_matrix_document({
        "q": entry.q,
        "alpha": entry.alpha,
        "beta": entry.beta,
        "rows": [list(r) for r in entry.matrix],
    })


# ---------------------------------------------------------------------------
# verification


@dataclass
class EntryReport:
    table: int
    row: int
    expected_n: int
    expected_k: int
    expected_d: int
    expected_k_or_size: str = ""   # dimension (tables 2, 3) or |C| (table 1)
    computed_n: int | None = None
    computed_size: int | None = None
    computed_k: int | None = None
    computed_d: int | None = None
    d_mode: str = "exact"          # exact | bound | skipped
    singleton: str = "-"
    qc: str = "-"
    lcd: str = "-"
    status: str = "ok"             # ok | mismatch | error
    details: tuple = ()
    runtime: float = dc_field(default=0.0, compare=False)

    CSV_FIELDS = (
        "table", "row", "expected_n", "expected_k_or_size", "expected_d",
        "computed_n", "computed_size", "computed_d", "d_mode",
        "singleton", "qc", "lcd", "status",
    )

    def csv_row(self):
        return [
            str(self.table), str(self.row), str(self.expected_n),
            self.expected_k_or_size, str(self.expected_d),
            "" if self.computed_n is None else str(self.computed_n),
            "" if self.computed_size is None else str(self.computed_size),
            "" if self.computed_d is None else str(self.computed_d),
            self.d_mode, self.singleton, self.qc, self.lcd, self.status,
        ]

    def as_dict(self):
        # runtime intentionally omitted: reports must be byte-identical
        # across reruns with the same seed and budget
        return {
            "table": self.table, "row": self.row,
            "expected_n": self.expected_n, "expected_k": self.expected_k,
            "expected_k_or_size": self.expected_k_or_size,
            "expected_d": self.expected_d,
            "computed_n": self.computed_n,
            "computed_size": self.computed_size,
            "computed_k": self.computed_k, "computed_d": self.computed_d,
            "d_mode": self.d_mode, "singleton": self.singleton,
            "qc": self.qc, "lcd": self.lcd, "status": self.status,
            "details": list(self.details),
        }


@dataclass
class VerificationReport:
    entries: list
    note: str = OPTIMALITY_NOTE

    @property
    def counts(self):
        out = {"exact": 0, "bound": 0, "skipped": 0, "mismatch": 0}
        for e in self.entries:
            out[e.d_mode] = out.get(e.d_mode, 0) + 1
            if e.status != "ok":
                out["mismatch"] += 1
        return out

    @property
    def has_mismatch(self):
        return any(e.status != "ok" for e in self.entries)

    def to_csv(self) -> str:
        lines = [",".join(EntryReport.CSV_FIELDS)]
        for e in self.entries:
            lines.append(",".join(e.csv_row()))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "note": self.note,
            "summary": self.counts,
            "entries": [e.as_dict() for e in self.entries],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _expected_size_t1(entry):
    return entry.q ** entry.expected_k


def verify_entry(entry: TableEntry, budget=DEFAULT_BUDGET, seed=0,
                 long=False) -> EntryReport:
    start = time.perf_counter()
    if entry.table_id == 1:
        rep = _verify_table1(entry, budget, seed)
    elif entry.table_id == 2:
        rep = _verify_table2(entry, budget, seed, long)
    elif entry.table_id == 3:
        rep = _verify_table3(entry, budget, seed)
    else:
        raise ValueError(f"unknown table id {entry.table_id}")
    rep.runtime = time.perf_counter() - start
    return rep


def _finish(rep, mismatches, details):
    if mismatches:
        rep.status = "mismatch"
        details = list(details) + [f"MISMATCH: {m}" for m in mismatches]
    rep.details = tuple(details)
    return rep


def _verify_table1(entry, budget, seed):
    rep = EntryReport(
        table=1, row=entry.row, expected_n=entry.expected_n,
        expected_k=entry.expected_k, expected_d=entry.expected_d,
        expected_k_or_size=str(_expected_size_t1(entry)),
    )
    mism, details = [], []
    code = build_table1_code(entry)
    size = code.cardinality()
    rep.computed_n = entry.n
    rep.computed_size = size.actual
    rep.computed_k = code.dimension
    if not size.agree:
        details.append(
            f"cardinality formula {size.formula} != rank-derived {size.actual}")
    expected_size = _expected_size_t1(entry)
    if size.actual != expected_size:
        mism.append(f"size {size.actual} != expected {expected_size}")
    if size.formula != expected_size:
        mism.append(f"formula size {size.formula} != expected {expected_size}")
    profile = WeightProfile.mixed(0, entry.n)
    try:
        res = min_distance_exact(code.closure, profile, budget=budget)
        rep.computed_d = res.value
        rep.d_mode = "exact"
        if res.value != entry.expected_d:
            mism.append(f"d {res.value} != expected {entry.expected_d}")
    except DistanceBudgetError:
        res = min_distance_upper(code.closure, profile, seed=seed)
        rep.computed_d = res.value
        rep.d_mode = "bound"
        if res.value < entry.expected_d:
            mism.append(
                f"found weight {res.value} below claimed d {entry.expected_d}")
        elif res.value > entry.expected_d:
            mism.append(
                f"claimed weight {entry.expected_d} not found by sampling "
                f"(best {res.value})")
        else:
            details.append(
                f"d<= {entry.expected_d} confirmed by a witness codeword; "
                "exactness out of desk scale")
    sing = singleton_check(entry.n, expected_size, entry.q**2, entry.expected_d)
    rep.singleton = "attains" if sing.attains else f"slack:{sing.slack}"
    if not sing.attains:
        mism.append("Singleton bound not attained")
    return _finish(rep, mism, details)


def _verify_table2(entry, budget, seed, long):
    rep = EntryReport(
        table=2, row=entry.row, expected_n=entry.expected_n,
        expected_k=entry.expected_k, expected_d=entry.expected_d,
        expected_k_or_size=str(entry.expected_k),
    )
    mism, details = [], []
    code = build_table2_code(entry, strict=False)
    if code.condition_failures:
        details.append(
            "generator conditions violated (closure is still the codeword "
            "set): " + "; ".join(code.condition_failures))
    card = code.cardinality()
    if not card.agree:
        span = code.spanning_set()
        details.append(
            f"cardinality formula {card.formula} != closure {card.actual}; "
            f"degree-counted spanning set spans_ok={span.spans_ok}")
    image = gray_image(code)
    rep.computed_n = image.length
    rep.computed_k = image.rank
    rep.computed_size = 3**image.rank
    if image.length != entry.expected_n:
        mism.append(f"length {image.length} != expected {entry.expected_n}")
    if image.rank != entry.expected_k:
        mism.append(f"dimension {image.rank} != expected {entry.expected_k}")
    sigma_ok = shift_invariance_check(image)
    rep.qc = f"{image.classification}:{'ok' if sigma_ok else 'FAIL'}"
    if not sigma_ok:
        mism.append("Gray image not shift-invariant")
    if "a" in entry.footnotes and image.classification != QUASI_CYCLIC_3:
        mism.append("expected quasi-cyclic of index 3")
    size = 3**image.rank
    if size <= budget or long:
        profile = WeightProfile.singletons(image.length)
        res = min_distance_exact(image.base, profile, budget=max(budget, size))
        rep.computed_d = res.value
        rep.d_mode = "exact"
        if res.value != entry.expected_d:
            mism.append(f"d {res.value} != expected {entry.expected_d}")
        if entry.remark == "MDS":
            if res.value != image.length - image.rank + 1:
                mism.append("MDS remark but d != n-k+1")
    else:
        rep.d_mode = "skipped"
        details.append("distance enumeration needs --long")
    if "b" in entry.footnotes:
        lcd_now = is_lcd(image.base)
        rep.lcd = "yes" if lcd_now else "no"
        if not lcd_now:
            mism.append("footnote claims LCD but hull is nontrivial")
    return _finish(rep, mism, details)


def _verify_table3(entry, budget, seed):
    rep = EntryReport(
        table=3, row=entry.row, expected_n=entry.expected_n,
        expected_k=entry.expected_k, expected_d=entry.expected_d,
        expected_k_or_size=str(entry.expected_k),
    )
    mism, details = [], []
    tw, alpha, beta, words = build_table3_words(entry)
    expanded = linalg.as_matrix([w.expand() for w in words],
                                width=alpha + 2 * beta)
    code = GeneratorMatrixCode(tw, expanded, alpha=alpha, beta=beta)
    image = gray_image(code)
    rep.computed_n = image.length
    rep.computed_k = image.rank
    rep.computed_size = 3**image.rank
    if image.length != entry.expected_n:
        mism.append(f"length {image.length} != expected {entry.expected_n}")
    if image.rank != entry.expected_k:
        mism.append(f"dimension {image.rank} != expected {entry.expected_k}")
    profile = WeightProfile.singletons(image.length)
    res = min_distance_exact(image.base, profile, budget=budget)
    rep.computed_d = res.value
    rep.d_mode = "exact"
    if res.value != entry.expected_d:
        mism.append(f"d {res.value} != expected {entry.expected_d}")
    cert = lcd_pipeline(tw, alpha, beta, words)
    lcd_now = hull(image.base).rank == 0
    rep.lcd = "yes" if lcd_now else "no"
    details.append(
        f"certificate: self-orth={cert.c_alpha_self_orthogonal} "
        f"indep={cert.g_beta_rows_independent} "
        f"beta-lcd={cert.phi_c_beta_lcd} -> {cert.conclusion}; "
        f"hull dim {cert.hull_dimension_observed}")
    if entry.remark == "Optimal LCD code" and not lcd_now:
        mism.append("LCD claimed but hull is nontrivial")
    if cert.guaranteed and cert.hull_dimension_observed != 0:
        mism.append("certificate guaranteed LCD but observed hull nonzero")
    return _finish(rep, mism, details)


def verify_all(table_id, budget=DEFAULT_BUDGET, seed=0, long=False):
    """Verify one table (1, 2, 3) or 'all'; deterministic entry order."""
    if table_id == "all":
        ids = (1, 2, 3)
    else:
        ids = (int(table_id),)
        if ids[0] not in TABLES:
            raise ValueError(f"no such table: {table_id}")
    entries = []
    for tid in ids:
        for entry in TABLES[tid]:
            entries.append(verify_entry(entry, budget=budget, seed=seed,
                                         long=long))
    return VerificationReport(entries)
