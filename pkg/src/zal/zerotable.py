"""Reference tables of zeta-zero ordinates: parsing, matching, writing.

Format: one decimal ordinate per line, ascending; blank lines and lines
starting with ``#`` are ignored.
"""
from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .audit import AuditReport
from .errors import IntegrityError, ParseError


@dataclass(frozen=True)
class ReferenceTable:
    ordinates: np.ndarray
    declared_precision: int
    provenance: str = ""

    def __len__(self):
        return self.ordinates.size

    def window(self, lo, hi):
        """Ordinates in (lo, hi]."""
        o = self.ordinates
        return o[np.searchsorted(o, lo, side="right"):np.searchsorted(o, hi, side="right")]

    def count(self, t):
        """Number of ordinates <= t (vectorized)."""
        return np.searchsorted(self.ordinates, t, side="right")


def load_table(stream, provenance=None) -> ReferenceTable:
    """Parse a table from a text stream, a path, or a string of lines."""
    if isinstance(stream, str) and "\n" not in stream:
        with open(stream) as fh:
            return load_table(fh, provenance or stream)
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    vals, prec, comments = [], 0, []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        try:
            v = float(line)
        except ValueError:
            raise ParseError(f"not a number: {line!r}", line=lineno) from None
        if not np.isfinite(v):
            raise ParseError(f"non-finite ordinate {line!r}", line=lineno)
        if vals and v <= vals[-1]:
            raise IntegrityError(f"line {lineno}: ordinates not ascending ({v} after {vals[-1]})")
        mant = line.lower().split("e")[0]
        if "." in mant:
            prec = max(prec, len(mant.split(".")[1]))
        vals.append(v)
    ords = np.array(vals, dtype=np.float64)
    if ords.size > 1 and np.min(np.diff(ords)) <= 10.0 ** (-prec):
        raise IntegrityError("two ordinates closer than the declared precision")
    label = provenance if provenance is not None else "; ".join(comments)
    return ReferenceTable(ords, prec, label)


def serialize(table: ReferenceTable, with_header=True) -> str:
    """Inverse of :func:`load_table` at the table's declared precision."""
    out = []
    if with_header and table.provenance:
        out.append(f"# {table.provenance}")
    p = table.declared_precision
    out.extend(f"{x:.{p}f}" for x in table.ordinates)
    return "\n".join(out) + ("\n" if out else "")


def match(computed, reference, match_tol):
    """Greedy nearest-neighbour matching of two ascending arrays.

    Returns (pairs, missing, spurious): index pairs (i_computed, j_reference),
    unmatched reference indices and unmatched computed indices.
    """
    c = np.asarray(computed, dtype=np.float64)
    r = np.asarray(reference, dtype=np.float64)
    pairs, missing, spurious = [], [], []
    i = j = 0
    while i < c.size and j < r.size:
        d = c[i] - r[j]
        if abs(d) <= match_tol:
            # prefer the closer partner if the next reference is nearer
            if j + 1 < r.size and abs(c[i] - r[j + 1]) < abs(d):
                missing.append(j)
                j += 1
                continue
            pairs.append((i, j))
            i += 1
            j += 1
        elif d < 0:
            spurious.append(i)
            i += 1
        else:
            missing.append(j)
            j += 1
    spurious.extend(range(i, c.size))
    missing.extend(range(j, r.size))
    return pairs, missing, spurious


def validate(zeros, table: ReferenceTable, match_tol=1e-6, window=None) -> AuditReport:
    """Classify computed zeros against the table over their common window."""
    comp = np.asarray(getattr(zeros, "ordinates", zeros), dtype=np.float64)
    if window is None:
        lo = comp[0] if comp.size else 0.0
        hi = comp[-1] if comp.size else 0.0
        ref = table.ordinates[(table.ordinates >= lo - match_tol) & (table.ordinates <= hi + match_tol)]
    else:
        ref = table.window(*window)
        comp = comp[(comp > window[0]) & (comp <= window[1])]
    pairs, missing, spurious = match(comp, ref, match_tol)
    disc = max((abs(comp[i] - ref[j]) for i, j in pairs), default=0.0)
    ok = not missing and not spurious
    return AuditReport(
        name="zero-table",
        verdict="pass" if ok else "fail",
        params={"match_tol": match_tol, "provenance": table.provenance},
        statistics={
            "computed": int(comp.size), "reference": int(ref.size), "matched": len(pairs),
            "missing": len(missing), "spurious": len(spurious),
            "max_discrepancy": float(disc),
            "missing_ordinates": [float(ref[j]) for j in missing[:20]],
            "spurious_ordinates": [float(comp[i]) for i in spurious[:20]],
        },
    )
