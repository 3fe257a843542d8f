"""Input characters: closed forms, Weyl-factor lists and JSON character files.

File format (UTF-8 JSON, integers only, unknown keys rejected)::

    {"group": "G2", "rank": 2, "p": 2, "module_kind": "pim",
     "highest_weight": [2, 2],
     "weyl_factors": [{"weight": [2, 2], "mult": 1}, ...],
     "provenance": "...", "conventions": "..."}

``terms`` (a list of ``{"weight": [...], "mult": m}`` with arbitrary weights)
may replace ``weyl_factors``.  ``highest_weight`` is the highest weight of
the module, i.e. ``(p-1) rho + lam`` for the Steinberg quotient indexed by lam.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .charring import Character, chi, decompose_orbit_sums, decompose_weyl_basis, find_asymmetry
from .rootdata import (
    RootDatum,
    Weight,
    build_root_datum,
    dominance_leq,
    dominant_representative,
    parse_type,
)
from .steinberg import KINDS, steinberg_chi, steinberg_quotient

REQUIRED_KEYS = {"group", "rank", "p", "module_kind", "highest_weight"}
OPTIONAL_KEYS = {"weyl_factors", "terms", "provenance", "conventions"}
# sections written by ``steinquot quotient --format json``; checked on load
RESULT_KEYS = {"lambda", "quotient", "orbit_coeffs"}


class SourceError(ValueError):
    """Invalid character file or factor list.  ``weight`` names the offender."""

    def __init__(self, msg: str, weight: Weight | None = None):
        super().__init__(msg)
        self.weight = weight


@dataclass
class CharacterSource:
    group: str
    rank: int
    p: int
    module_kind: str
    highest_weight: Weight
    weyl_factors: list | None = None
    raw_terms: list | None = None
    provenance: str = ""
    conventions: str = ""
    character: Character | None = field(default=None, repr=False)

    @property
    def datum(self) -> RootDatum:
        return build_root_datum(self.group)

    @property
    def lam(self) -> Weight:
        """Index of the Steinberg quotient: highest weight minus (p-1) rho."""
        return tuple(x - (self.p - 1) for x in self.highest_weight)

    def to_json(self) -> dict:
        out = {
            "group": self.group,
            "rank": self.rank,
            "p": self.p,
            "module_kind": self.module_kind,
            "highest_weight": list(self.highest_weight),
        }
        if self.weyl_factors is not None:
            out["weyl_factors"] = [{"weight": list(w), "mult": m} for w, m in self.weyl_factors]
        else:
            out["terms"] = [{"weight": list(w), "mult": m} for w, m in self.raw_terms]
        if self.provenance:
            out["provenance"] = self.provenance
        if self.conventions:
            out["conventions"] = self.conventions
        return out


def steinberg_character(datum: RootDatum, p: int) -> Character:
    if p < 2:
        raise SourceError("p must be at least 2")
    return steinberg_chi(datum, p)


def sl2_tilting_character(p: int, m: int) -> Character:
    """``ch T(m)`` for SL2 and ``0 <= m <= 2p - 2``."""
    if not 0 <= m <= 2 * p - 2:
        raise SourceError(f"SL2 tilting character only supported for 0 <= m <= {2 * p - 2}, got {m}")
    a1 = build_root_datum("A1")
    if m <= p - 1:
        return chi(a1, (m,))
    return chi(a1, (m,)) + chi(a1, (2 * p - 2 - m,))


def character_from_weyl_factors(datum: RootDatum, factors: Iterable[tuple[Sequence[int], int]]) -> Character:
    out = Character.zero(datum)
    for weight, mult in factors:
        weight = datum.check_weight(weight)
        if not datum.is_dominant(weight):
            raise SourceError(f"Weyl factor weight {weight} is not dominant", weight)
        if mult < 1:
            raise SourceError(f"Weyl factor {weight} has multiplicity {mult} < 1", weight)
        out = out + mult * chi(datum, weight)
    return out


def source_from_character(datum: RootDatum, p: int, ch: Character, kind: str,
                          provenance: str = "", conventions: str = "") -> CharacterSource:
    """Wrap a character, preferring the Weyl-factor form when it is nonnegative."""
    top = max(ch.terms, key=datum.sort_key)
    dec = decompose_weyl_basis(ch)
    if dec.is_nonnegative():
        factors = [(w, m) for w, m in dec.sorted_items()]
        raw = None
    else:
        factors = None
        raw = ch.sorted_terms()
    return CharacterSource(datum.type_label, datum.rank, p, kind, top, factors, raw,
                           provenance, conventions, ch)


def _int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SourceError(f"{what} must be an integer, got {value!r}")
    return value


def _weight(value, rank: int, what: str) -> Weight:
    if not isinstance(value, list):
        raise SourceError(f"{what} must be a list of integers, got {value!r}")
    w = tuple(_int(x, what) for x in value)
    if len(w) != rank:
        raise SourceError(f"{what} {list(w)} has length {len(w)}, expected {rank}", w)
    return w


def _entries(value, rank: int, what: str) -> list[tuple[Weight, int]]:
    if not isinstance(value, list):
        raise SourceError(f"{what} must be a list")
    out = []
    for entry in value:
        if not isinstance(entry, dict) or set(entry) != {"weight", "mult"}:
            raise SourceError(f"each {what} entry needs exactly 'weight' and 'mult': {entry!r}")
        w = _weight(entry["weight"], rank, f"{what} weight")
        m = _int(entry["mult"], f"{what} mult")
        if m < 1:
            raise SourceError(f"{what} entry {list(w)} has multiplicity {m} < 1", w)
        out.append((w, m))
    return out


def parse_character_source(data: dict, datum: RootDatum | None = None) -> CharacterSource:
    """Validate a decoded character file and assemble its character."""
    if not isinstance(data, dict):
        raise SourceError("character file must contain a JSON object")
    unknown = set(data) - REQUIRED_KEYS - OPTIONAL_KEYS - RESULT_KEYS
    if unknown:
        raise SourceError(f"unknown field(s): {sorted(unknown)}")
    missing = REQUIRED_KEYS - set(data)
    if missing:
        raise SourceError(f"missing field(s): {sorted(missing)}")
    if ("weyl_factors" in data) == ("terms" in data):
        raise SourceError("exactly one of 'weyl_factors' or 'terms' is required")

    group = data["group"]
    if not isinstance(group, str):
        raise SourceError("group must be a string such as 'G2'")
    rank = _int(data["rank"], "rank")
    try:
        kind, rank = parse_type(group, rank)
        file_datum = build_root_datum(f"{kind}{rank}")
    except ValueError as exc:
        raise SourceError(str(exc)) from None
    if datum is not None and datum != file_datum:
        raise SourceError(f"file describes {file_datum.type_label}, expected {datum.type_label}")
    datum = file_datum
    p = _int(data["p"], "p")
    if p < 2:
        raise SourceError(f"p must be at least 2, got {p}")
    module_kind = data["module_kind"]
    if module_kind not in KINDS:
        raise SourceError(f"module_kind must be one of {KINDS}, got {module_kind!r}")
    top = _weight(data["highest_weight"], rank, "highest_weight")
    provenance = data.get("provenance", "")
    conventions = data.get("conventions", "")
    if not isinstance(provenance, str) or not isinstance(conventions, str):
        raise SourceError("provenance and conventions must be strings")

    factors = raw = None
    if "weyl_factors" in data:
        factors = _entries(data["weyl_factors"], rank, "weyl_factors")
        for w, _ in factors:
            if not datum.is_dominant(w):
                raise SourceError(f"Weyl factor weight {list(w)} is not dominant", w)
        tops = [m for w, m in factors if w == top]
        if tops != [1]:
            raise SourceError(f"highest weight {list(top)} must appear exactly once with multiplicity 1", top)
        for w, _ in factors:
            if not dominance_leq(datum, w, top):
                raise SourceError(f"Weyl factor {list(w)} is not below the highest weight {list(top)}", w)
        ch = character_from_weyl_factors(datum, factors)
    else:
        raw = _entries(data["terms"], rank, "terms")
        ch = Character(datum, raw)
        if ch.coeff(top) == 0 or max(ch.terms, key=datum.sort_key) != top:
            raise SourceError(f"highest_weight {list(top)} is not the top weight of the terms", top)

    bad = find_asymmetry(ch)
    if bad is not None:
        dom, _ = dominant_representative(datum, bad)
        raise SourceError(f"assembled character is not W-invariant on the orbit of {list(dom)}", dom)
    source = CharacterSource(datum.type_label, rank, p, module_kind, top, factors, raw,
                             provenance, conventions, ch)
    if set(data) & RESULT_KEYS:
        _check_result_sections(data, source)
    return source


def _coeff_map(value, rank: int, what: str) -> dict[Weight, int]:
    if not isinstance(value, list):
        raise SourceError(f"{what} must be a list")
    out = {}
    for entry in value:
        if not isinstance(entry, dict) or set(entry) != {"weight", "coeff"}:
            raise SourceError(f"each {what} entry needs exactly 'weight' and 'coeff': {entry!r}")
        out[_weight(entry["weight"], rank, f"{what} weight")] = _int(entry["coeff"], f"{what} coeff")
    return out


def _check_result_sections(data: dict, source: CharacterSource) -> None:
    datum = source.datum
    if "lambda" in data and _weight(data["lambda"], source.rank, "lambda") != source.lam:
        raise SourceError(f"lambda {data['lambda']} does not match highest_weight - (p-1)rho")
    q = steinberg_quotient(datum, source.p, source.character)
    if "quotient" in data and _coeff_map(data["quotient"], source.rank, "quotient") != dict(q.items()):
        raise SourceError("stored quotient does not match the recomputed Steinberg quotient")
    if "orbit_coeffs" in data:
        if _coeff_map(data["orbit_coeffs"], source.rank, "orbit_coeffs") != decompose_orbit_sums(q).coeffs:
            raise SourceError("stored orbit_coeffs do not match the recomputed quotient")


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("steinquot") / "data" / name))


def list_fixtures() -> list[str]:
    return sorted(p.name for p in Path(str(resources.files("steinquot") / "data")).glob("*.json"))


def load_character_file(path, datum: RootDatum | None = None) -> CharacterSource:
    """Load and validate a JSON character file.

    A bare file name that does not exist on disk is looked up among the
    bundled fixtures.
    """
    path = Path(path)
    if not path.exists() and path.name == str(path) and fixture_path(path.name).exists():
        path = fixture_path(path.name)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SourceError(f"cannot read {path}: {exc}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SourceError(f"{path}: parse error: {exc}") from None
    return parse_character_source(data, datum)


def format_character_json(data: dict) -> str:
    """Pretty JSON with one factor per line."""
    lines = []
    for key, value in data.items():
        if key in ("weyl_factors", "terms"):
            rows = ",\n".join("    " + json.dumps(v) for v in value)
            lines.append(f'  "{key}": [\n{rows}\n  ]')
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value, ensure_ascii=False)}")
    return "{\n" + ",\n".join(lines) + "\n}\n"


def dump_character_file(source: CharacterSource, path) -> None:
    Path(path).write_text(format_character_json(source.to_json()), encoding="utf-8")
