"""Reading and writing model files (spaces, frames, operator and neighbourhood tables)."""

from __future__ import annotations

import json
import math
from importlib import resources
from pathlib import Path
from typing import Any

from .errors import DEFAULT_LIMIT, InputError
from .frames import DFrame, check_d_frame
from .fuzzy import Carrier, FuzzySet, parse_fuzzy
from .mvcore import Chain, Subquantale, parse_value
from .operators import InteriorOperator, NbhdFunction
from .spaces import MVSpace, check_axioms, generate_topology

SPACE_KEYS = {"carrier", "chain_denominator", "D", "generators", "opens", "name", "description"}
FRAME_KEYS = {"elements", "join", "meet", "plus", "times", "scalar", "one", "zero", "D",
              "chain_denominator", "name", "description"}
TABLE_KEYS = {"carrier", "chain_denominator", "table", "kind", "name", "description"}


def fixtures_dir() -> Path:
    return Path(str(resources.files("mvtop") / "fixtures"))


def resolve(path: str | Path) -> Path:
    """A path as given, or the name of a bundled fixture (with or without ``.json``)."""
    p = Path(path)
    if p.exists():
        return p
    name = p.name if p.suffix == ".json" else p.name + ".json"
    cand = fixtures_dir() / name
    if cand.exists():
        return cand
    raise InputError(f"no such file or fixture: {path}")


def load_json(path: str | Path) -> dict[str, Any]:
    p = resolve(path)
    try:
        data = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InputError(f"{p}: invalid JSON ({e})") from None
    if not isinstance(data, dict):
        raise InputError(f"{p}: top-level JSON value must be an object")
    return data


def _check_keys(data: dict, allowed: set[str], what: str) -> None:
    extra = sorted(set(data) - allowed)
    if extra:
        raise InputError(f"unknown key(s) in {what} file: {extra}")


def _chain(data: dict) -> Chain:
    q = data.get("chain_denominator")
    if isinstance(q, bool) or not isinstance(q, int) or q < 1:
        raise InputError(f"chain_denominator must be a positive integer, got {q!r}")
    return Chain(q)


def _carrier(data: dict) -> Carrier:
    names = data.get("carrier")
    if not isinstance(names, list):
        raise InputError("carrier must be a list of point names")
    return Carrier(names)


def parse_D(raw: Any, chain: Chain) -> Subquantale:
    if raw == "boolean":
        return Subquantale.boolean(chain)
    if raw == "chain":
        return Subquantale.full(chain)
    if isinstance(raw, list):
        vals = [parse_value(v) for v in raw]
        for v in vals:
            if v not in chain:
                raise InputError(f"D value {v} is not in {chain}")
        return Subquantale(vals, chain)
    raise InputError(f'D must be "boolean", "chain" or a list of values, got {raw!r}')


def _fuzzy(carrier: Carrier, chain: Chain, obj: Any) -> FuzzySet:
    if isinstance(obj, (dict, str)):
        return parse_fuzzy(carrier, chain, obj)
    raise InputError(f"fuzzy set must be an object or compact string, got {obj!r}")


def space_from_dict(data: dict, limit: int = DEFAULT_LIMIT, name: str | None = None,
                    validate: bool = True) -> MVSpace:
    """Build a space; explicit ``opens`` are rejected unless they pass the axioms (when validating)."""
    _check_keys(data, SPACE_KEYS, "space")
    carrier = _carrier(data)
    chain = _chain(data)
    D = parse_D(data.get("D", "boolean"), chain)
    has_g, has_o = "generators" in data, "opens" in data
    if has_g == has_o:
        raise InputError("exactly one of 'generators' and 'opens' is required")
    name = data.get("name", name)
    if has_g:
        gens = data["generators"]
        if isinstance(gens, dict):
            items = list(gens.values())
        elif isinstance(gens, list):
            items = gens
        else:
            raise InputError("generators must be an object or a list")
        return generate_topology(carrier, chain, D, [_fuzzy(carrier, chain, g) for g in items],
                                 limit=limit, name=name)
    if not isinstance(data["opens"], list):
        raise InputError("opens must be a list")
    S = MVSpace(carrier, chain, D, [_fuzzy(carrier, chain, o) for o in data["opens"]], name=name)
    rep = check_axioms(S, limit) if validate else None
    if rep is not None and not rep.passed:
        raise InputError(f"opens do not form a topology: {rep.counterexamples[0]}")
    return S


def parse_space(path: str | Path, limit: int = DEFAULT_LIMIT) -> MVSpace:
    p = resolve(path)
    return space_from_dict(load_json(p), limit, name=p.stem)


def space_to_dict(S: MVSpace) -> dict[str, Any]:
    out: dict[str, Any] = {"carrier": list(S.carrier.names), "chain_denominator": S.chain.q,
                           "D": S.D.to_json(), "opens": [o.to_json() for o in S.opens]}
    if S.name:
        out["name"] = S.name
    return out


def frame_from_dict(data: dict, name: str | None = None, validate: bool = True) -> DFrame:
    _check_keys(data, FRAME_KEYS, "frame")
    for k in ("elements", "join", "meet", "plus", "times", "scalar", "one", "zero"):
        if k not in data:
            raise InputError(f"frame file is missing {k!r}")
    d_raw = data.get("D", "boolean")
    if "chain_denominator" in data:
        chain = _chain(data)
    elif isinstance(d_raw, list):
        chain = Chain(math.lcm(*(parse_value(v).denominator for v in d_raw)))
    elif d_raw == "boolean":
        chain = Chain(1)
    else:
        raise InputError('D = "chain" needs an explicit chain_denominator')
    D = parse_D(d_raw, chain)
    if not isinstance(data["scalar"], dict):
        raise InputError("scalar must map D values to rows of elements")
    M = DFrame.from_names(data["elements"], data["join"], data["meet"], data["plus"],
                          data["times"], data["scalar"], data["one"], data["zero"], D,
                          chain, data.get("name", name))
    if validate:
        rep = check_d_frame(M)
        if not rep.passed:
            raise InputError(f"frame violates D-frame laws: {rep.counterexamples[0]}")
    return M


def parse_frame(path: str | Path, validate: bool = True) -> DFrame:
    p = resolve(path)
    return frame_from_dict(load_json(p), name=p.stem, validate=validate)


def frame_to_dict(M: DFrame) -> dict[str, Any]:
    el = M.elements

    def tab(t):
        return [[el[k] for k in row] for row in t.tolist()]

    out: dict[str, Any] = {
        "elements": list(el), "join": tab(M.join), "meet": tab(M.meet), "plus": tab(M.plus),
        "times": tab(M.times),
        "scalar": {str(r): [el[k] for k in M.scalar[r].tolist()] for r in M.D.values},
        "one": el[M.one], "zero": el[M.zero], "D": M.D.to_json(),
    }
    if M.chain is not None:
        out["chain_denominator"] = M.chain.q
    if M.name:
        out["name"] = M.name
    return out


def table_from_dict(data: dict, kind: str, limit: int):
    _check_keys(data, TABLE_KEYS, "table")
    carrier = _carrier(data)
    chain = _chain(data)
    declared = data.get("kind")
    rows = data.get("table")
    if not isinstance(rows, list):
        raise InputError("table must be a list of entries")
    entries = []
    for e in rows:
        if not isinstance(e, dict) or "in" not in e:
            raise InputError("each table entry needs an 'in' fuzzy set")
        alpha = _fuzzy(carrier, chain, e["in"])
        if kind == "nbhd":
            val = e.get("mu", e.get("out"))
        else:
            val = e.get("out")
        if val is None:
            raise InputError(f"table entry for {alpha.compact()} has no output")
        entries.append((alpha, _fuzzy(carrier, chain, val).levels))
    cls = NbhdFunction if kind == "nbhd" else InteriorOperator
    if declared is not None and declared not in ("interior", "nbhd"):
        raise InputError(f"unknown table kind {declared!r}")
    return cls.from_entries(carrier, chain, entries, limit)


def table_kind(data: dict) -> str:
    if data.get("kind") in ("interior", "nbhd"):
        return data["kind"]
    rows = data.get("table") or [{}]
    return "nbhd" if isinstance(rows[0], dict) and "mu" in rows[0] else "interior"


def parse_operator(path: str | Path, limit: int = DEFAULT_LIMIT) -> InteriorOperator:
    return table_from_dict(load_json(path), "interior", limit)


def parse_nbhd(path: str | Path, limit: int = DEFAULT_LIMIT) -> NbhdFunction:
    return table_from_dict(load_json(path), "nbhd", limit)


def parse_table(path: str | Path, limit: int = DEFAULT_LIMIT) -> InteriorOperator | NbhdFunction:
    data = load_json(path)
    return table_from_dict(data, table_kind(data), limit)


def table_to_dict(T: InteriorOperator | NbhdFunction) -> dict[str, Any]:
    nb = isinstance(T, NbhdFunction)
    key = "mu" if nb else "out"
    rows = []
    for inp, out in zip(T.inputs.tolist(), T.table.tolist()):
        rows.append({"in": FuzzySet(T.carrier, T.chain, inp).to_json(),
                     key: FuzzySet(T.carrier, T.chain, out).to_json()})
    return {"kind": "nbhd" if nb else "interior", "carrier": list(T.carrier.names),
            "chain_denominator": T.chain.q, "table": rows}


def dump(obj: dict[str, Any], path: str | Path | None = None) -> str:
    text = json.dumps(obj, indent=1, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
