"""Point-set JSON files: ``{"dim": d, "points": [["num/den", ...], ...]}``."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .kernel import PointSet


def format_scalar(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def pointset_to_dict(P: PointSet) -> dict:
    return {"dim": P.dim, "points": [[format_scalar(c) for c in p] for p in P.points]}


def pointset_from_dict(doc: dict, allow_duplicates: bool = False) -> PointSet:
    try:
        dim = int(doc["dim"])
        raw = doc["points"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed point-set document: {exc}") from None
    pts = []
    for row in raw:
        if any(not isinstance(c, (str, int)) or isinstance(c, bool) for c in row):
            raise ValueError(f"coordinates must be exact strings or integers: {row!r}")
        pts.append(tuple(Fraction(c) for c in row))
    return PointSet(dim, tuple(pts), allow_duplicates=allow_duplicates)


def dumps(doc: dict) -> str:
    # stable formatting so identical inputs give byte-identical files
    return json.dumps(doc, sort_keys=True, indent=1) + "\n"


def save_pointset(P: PointSet, path) -> None:
    Path(path).write_text(dumps(pointset_to_dict(P)))


def load_pointset(path, allow_duplicates: bool = False) -> PointSet:
    return pointset_from_dict(json.loads(Path(path).read_text()), allow_duplicates)


def save_json(doc: dict, path) -> None:
    Path(path).write_text(dumps(doc))
