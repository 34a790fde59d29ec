"""Regenerate the bundled fixture files.

The space and frame files are hand-written model descriptions; only the
paper3 operator and neighbourhood tables are derived (from the paper3
topology) by this script.
"""

import json
from pathlib import Path

from mvtop.io import dump, parse_space, table_to_dict
from mvtop.operators import InteriorOperator, nbhd_from_interior

FIX = Path(__file__).resolve().parent.parent / "src" / "mvtop" / "fixtures"

E = ["bot", "m", "top"]
LATTICE = {
    "elements": E,
    "join": [[E[max(i, j)] for j in range(3)] for i in range(3)],
    "meet": [[E[min(i, j)] for j in range(3)] for i in range(3)],
    "plus": [["bot", "m", "top"], ["m", "top", "top"], ["top", "top", "top"]],
    "scalar": {"0": ["bot", "bot", "bot"], "1": E},
    "one": "top",
    "zero": "bot",
    "D": "boolean",
}

SPACES = {
    "paper3": {"carrier": ["x", "y", "z"], "chain_denominator": 10, "D": "boolean",
               "generators": {"rho": {"x": "1/2", "y": "3/5", "z": "3/5"}}},
    "disc2": {"carrier": ["x", "y"], "chain_denominator": 2, "D": "boolean",
              "opens": [{"x": a, "y": b} for a in ("0", "1/2", "1") for b in ("0", "1/2", "1")]},
    "onept": {"carrier": ["p"], "chain_denominator": 10, "D": "chain", "generators": {}},
    "indiscrete3": {"carrier": ["x", "y", "z"], "chain_denominator": 10, "D": "boolean",
                    "opens": [{"x": "0", "y": "0", "z": "0"}, {"x": "1", "y": "1", "z": "1"}]},
    "sierpinski": {"carrier": ["a", "b"], "chain_denominator": 2, "D": "boolean",
                   "generators": {"chi_a": {"a": "1", "b": "0"}}},
    "lowen2": {"carrier": ["a", "b"], "chain_denominator": 10, "D": "chain",
               "generators": {"g": {"a": "1", "b": "3/10"}}},
}

FRAMES = {
    "f3": dict(LATTICE, times=[["bot", "bot", "bot"], ["bot", "bot", "m"], ["bot", "m", "top"]],
               chain_denominator=2),
    "f4": dict(LATTICE, times=[["bot", "bot", "bot"], ["bot", "m", "m"], ["bot", "m", "top"]],
               chain_denominator=10),
}


def main() -> None:
    FIX.mkdir(parents=True, exist_ok=True)
    for name, data in {**SPACES, **FRAMES}.items():
        (FIX / f"{name}.json").write_text(json.dumps(data, indent=1) + "\n", encoding="utf-8")
    S = parse_space(FIX / "paper3.json")
    f = InteriorOperator.from_space(S)
    dump(table_to_dict(f), FIX / "paper3_interior.json")
    dump(table_to_dict(nbhd_from_interior(f)), FIX / "paper3_nbhd.json")


if __name__ == "__main__":
    main()
