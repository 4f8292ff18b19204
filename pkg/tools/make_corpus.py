#!/usr/bin/env python3
"""Regenerate the shipped example corpus under src/quadlie/corpus.

Each *.construction.json is written by hand here; the matching
*.algebra.json is the byte-canonical output of `quadlie construct`.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from quadlie.documents import (
    AlgebraDocument,
    algebra_document_to_json,
    construct_from_json,
    dumps_canonical,
)
from quadlie.liealg import LieAlgebra

CORPUS = pathlib.Path(__file__).resolve().parents[1] / "src" / "quadlie" / "corpus"

SL2_DOC = {
    "name": "sl2",
    "dim": 3,
    "basis": ["h", "e", "f"],
    "brackets": [
        {"i": 0, "j": 1, "terms": [{"k": 1, "c": "2"}]},
        {"i": 0, "j": 2, "terms": [{"k": 2, "c": "-2"}]},
        {"i": 1, "j": 2, "terms": [{"k": 0, "c": "1"}]},
    ],
    "metric": [
        ["8", "0", "0"],
        ["0", "0", "4"],
        ["0", "4", "0"],
    ],
}

ABELIAN2_DOC = {
    "name": "abelian2",
    "dim": 2,
    "basis": ["a1", "a2"],
    "brackets": [],
    "metric": [["1", "0"], ["0", "1"]],
}

ABELIAN1_DOC = {
    "name": "abelian1",
    "dim": 1,
    "basis": ["s"],
    "brackets": [],
    "metric": [["1"]],
}

H1_DOC = {
    "name": "h1_inner",
    "dim": 3,
    "basis": ["u1", "u2", "hbar"],
    "brackets": [{"i": 0, "j": 1, "terms": [{"k": 2, "c": "1"}]}],
}

CONSTRUCTIONS = {
    "h1": {"kind": "heisenberg", "name": "h1", "parameters": {"m": 1}},
    "h2": {"kind": "heisenberg", "name": "h2", "parameters": {"m": 2}},
    "h1_phi": {
        "kind": "extend_heisenberg",
        "name": "h1_phi",
        "parameters": {"m": 1, "phi": [["1", "0"], ["0", "-1"]]},
    },
    "h2_phi": {
        "kind": "extend_heisenberg",
        "name": "h2_phi",
        "parameters": {
            "m": 2,
            "phi": [
                ["1", "0", "0", "0"],
                ["0", "2", "0", "0"],
                ["0", "0", "-1", "0"],
                ["0", "0", "0", "-2"],
            ],
        },
    },
    "oscillator": {
        "kind": "double_extension",
        "name": "oscillator",
        "parameters": {"S": ABELIAN2_DOC, "D": [["0", "1"], ["-1", "0"]]},
    },
    "build_sl2": {
        "kind": "build_with_heisenberg_ideal",
        "name": "build_sl2",
        "parameters": {
            "S": SL2_DOC,
            "D": [["0", "0", "0"], ["0", "0", "0"], ["0", "0", "0"]],
            "m": 1,
            "sigmaD": [["1", "0"], ["0", "-1"]],
        },
    },
    "build_abelian_line": {
        "kind": "build_with_heisenberg_ideal",
        "name": "build_abelian_line",
        "parameters": {
            "S": ABELIAN1_DOC,
            "D": [["0"]],
            "m": 1,
            "sigmaD": [["1", "0"], ["0", "-1"]],
        },
    },
    "coadjoint_h1": {
        "kind": "coadjoint_double",
        "name": "coadjoint_h1",
        "parameters": {"g": H1_DOC},
    },
    # abelian core with an invertible skew derivation: over the small
    # Heisenberg ideal (indices 3,4,5) the quotient admits no metric
    "build_rotation_core": {
        "kind": "build_with_heisenberg_ideal",
        "name": "build_rotation_core",
        "parameters": {
            "S": ABELIAN2_DOC,
            "D": [["0", "1"], ["-1", "0"]],
            "m": 1,
            "sigmaD": [["1", "0"], ["0", "-1"]],
        },
    },
}


def five_dim_doc() -> dict:
    algebra = LieAlgebra(
        5,
        {
            (0, 1): [(2, 1)],
            (0, 2): [(1, -1)],
            (0, 3): [(3, 1)],
            (0, 4): [(4, -1)],
        },
        ["d", "x1", "x2", "x3", "x4"],
    )
    return algebra_document_to_json(
        AlgebraDocument("five_dim_trace_zero", algebra, None)
    )


def main() -> None:
    CORPUS.mkdir(parents=True, exist_ok=True)
    for name, construction in CONSTRUCTIONS.items():
        (CORPUS / f"{name}.construction.json").write_text(
            dumps_canonical(construction), encoding="utf-8"
        )
        doc = construct_from_json(construction)
        (CORPUS / f"{name}.algebra.json").write_text(
            dumps_canonical(algebra_document_to_json(doc)), encoding="utf-8"
        )
    (CORPUS / "five_dim_trace_zero.algebra.json").write_text(
        dumps_canonical(five_dim_doc()), encoding="utf-8"
    )
    print(f"wrote corpus to {CORPUS}")


if __name__ == "__main__":
    main()
