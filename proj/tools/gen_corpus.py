#!/usr/bin/env python3
"""Writes corpus/schemas and corpus/configs.

Curves are given with slots local to each curve; the files use one shared
numbering per configuration, with strands of earlier curves first on every
edge. Run from the repository root, then `mtw canonicalize` any file to
check it.
"""

import json
import math
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent / "corpus"


def standard_polygon(genus):
    out = []
    for k in range(1, genus + 1):
        out += [f"x{k}", f"y{k}", f"x{k}-", f"y{k}-"]
    return out


SCHEMAS = {
    "torus": {"name": "torus", "polygons": [["x", "y", "x-", "y-"]], "punctures": [], "genus": 1},
    "genus2": {"name": "genus2", "polygons": [standard_polygon(2)], "punctures": [], "genus": 2},
    "genus3": {"name": "genus3", "polygons": [standard_polygon(3)], "punctures": [], "genus": 3},
    "genus5": {"name": "genus5", "polygons": [standard_polygon(5)], "punctures": [], "genus": 5},
    "genus2-p2": {
        "name": "genus2-p2",
        "polygons": [standard_polygon(2)],
        "punctures": [{"polygon": 0}, {"polygon": 0}],
        "genus": 2,
    },
}


def torus_line(p, q):
    """Straight (p, q) curve on the square x y x- y-.

    Starts at (a, b) with generic offsets and records each edge crossing:
    leaving right is y, left y-, up x-, down x. Slots rank the crossing
    points along the edge direction.
    """
    a, b = Fraction(1234567, 10**7), Fraction(3456789, 10**7)
    events = []
    for m in range(-abs(p) - 2, abs(p) + 3):
        if p == 0:
            break
        t = (m - a) / p
        if 0 < t <= 1:
            y = b + q * t
            events.append((t, "y" if p > 0 else "y-", y - math.floor(y)))
    for m in range(-abs(q) - 2, abs(q) + 3):
        if q == 0:
            break
        t = (m - b) / q
        if 0 < t <= 1:
            x = a + p * t
            events.append((t, "x-" if q > 0 else "x", x - math.floor(x)))
    events.sort()
    word = []
    for t, label, coord in events:
        edge = label.rstrip("-")
        rank = sum(1 for _, l2, c2 in events if l2.rstrip("-") == edge and c2 < coord)
        word.append([label, rank])
    return word


def dual(label):
    return [[label, 0]]


def globalize(curves):
    """Local slots -> shared slots, earlier curves first on each edge."""
    base = {}
    out = []
    for name, word in curves:
        used = {}
        for label, slot in word:
            edge = label.rstrip("-")
            used[edge] = max(used.get(edge, 0), slot + 1)
        out.append({"name": name,
                    "word": [[label, slot + base.get(label.rstrip("-"), 0)] for label, slot in word]})
        for edge, n in used.items():
            base[edge] = base.get(edge, 0) + n
    return out


def link(k):
    """Crosses y_k and y_{k+1} once each; links for different k are disjoint."""
    return [[f"x{k}", 0], [f"y{k}", 1], [f"x{k + 1}-", 0], [f"y{k}-", 0]]


def config(name, schema, curves, **extra):
    doc = {"name": name, "schema": schema, "curves": globalize(curves)}
    doc.update(extra)
    return doc


def mt(*components):
    return {"components": [[c, n] for c, n in components]}


def genus2_curves():
    return [
        ("Dx1", dual("x1")), ("Dy1", dual("y1")), ("Dx2", dual("x2")), ("Dy2", dual("y2")),
        # crosses x1 and x2: meets Dy1 and Dy2 once, misses Dx1 and Dx2
        ("g1", [["x1", 0], ["x2", 0]]),
        ("h1", [["y1", 0], ["y2", 0]]),
        ("k1", [["x1", 0], ["y2", 0]]),
    ]


GENUS2_EXTRA = dict(
    test_set={"red": ["Dx1", "g1", "Dx2"], "blue": ["Dy1", "Dy2"]},
    chain=["Dx1", "Dy1", "g1", "Dy2", "Dx2"],
    pants=[["Dx1", "Dx2", "g1"], ["Dy1", "Dy2", "h1"], ["Dx1", "Dy2", "k1"]],
)


def configs():
    out = {}
    slopes = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2), (2, 1), (2, 3), (3, -2)]
    names = {(1, 0): "x", (0, 1): "y"}
    torus_curves = []
    for p, q in slopes:
        n = names.get((p, q), f"s{p}_{q}".replace("-", "m"))
        torus_curves.append((n, torus_line(p, q)))
    out["torus"] = config(
        "torus", "torus", torus_curves,
        test_set={"red": ["x"], "blue": ["y"]},
        chain=["x", "y"],
        pants=[["x"], ["y"], ["s1_1"], ["s1_m1"], ["s2_1"]],
        multitwists={"Tx": mt(("x", 1)), "Ty": mt(("y", 1))},
    )

    out["genus2"] = config(
        "genus2", "genus2", genus2_curves(),
        derived=[{"name": "e2", "base": "Dx1", "apply": [mt(("Dy1", 2))]}],
        multitwists={
            "A": mt(("Dx1", 1)), "B": mt(("Dy1", 1)),
            "Adisjoint": mt(("Dx1", 1)), "Bdisjoint": mt(("Dx2", 1)),
            "Atwice": mt(("Dx1", 1)), "Btwice": mt(("e2", 1)),
        },
        **GENUS2_EXTRA,
    )

    # c1, c2, c3 cut genus 2 into pants, where an arc of a from c1 back to c1
    # cannot coexist with the arc from c3 to c2. Genus 3 leaves room for the
    # crossing order c2 c1 c1 c3.
    ex = [("c1", dual("x1")), ("c2", dual("x2")), ("c3", dual("x3")),
          ("b1", dual("y1")), ("b2", dual("y2")), ("b3", dual("y3")),
          ("g1", link(1)), ("g2", link(2)),
          ("a", [["y2-", 0], ["y1", 0], ["y1", 1], ["x1-", 0], ["y3-", 0]])]
    out["example23"] = config(
        "example23", "genus3", ex,
        multitwists={"C": mt(("c1", 2), ("c2", -1), ("c3", 1))},
        test_set={"red": ["c1", "g1", "g2", "c3"], "blue": ["b1", "b2", "b3"]},
        chain=["c1", "b1", "g1", "b2", "g2", "b3", "c3"],
        pants=[["c1", "c2", "c3"]],
    )

    fig = []
    for k in range(1, 5):
        fig.append((f"a{k}", dual(f"x{k}")))
    for k in range(1, 5):
        fig.append((f"b{k}", dual(f"y{k}")))
    fig.append(("d", dual("x5")))
    fig.append(("y5", dual("y5")))
    for k in range(1, 5):
        fig.append((f"g{k}", link(k)))
    out["figure1"] = config(
        "figure1", "genus5", fig,
        test_set={"red": ["a1", "g1", "g2", "g3", "g4", "d"], "blue": ["b1", "b2", "b3", "b4", "y5"]},
        chain=["a1", "b1", "g1", "b2", "g2", "b3", "g3", "b4", "g4", "y5", "d"],
        pants=[["a1", "a2", "a3", "a4", "d"]],
        multitwists={
            "A": mt(("a1", 1), ("a2", 1), ("a3", 1), ("a4", -1)),
            "B": mt(("b1", 1), ("b2", 1), ("b3", 1), ("b4", -1)),
        },
    )

    # g1 and g1p cobound a once-punctured annulus
    p2 = genus2_curves() + [("g1p", [["_p0", 0], ["x1", 0], ["x2", 0]])]
    out["genus2-p2"] = config(
        "genus2-p2", "genus2-p2", p2,
        test_set={"red": ["Dx1", "g1", "g1p", "Dx2"], "blue": ["Dy1", "Dy2"]},
        chain=["Dx1", "Dy1", "g1", "Dy2", "Dx2"],
        pants=[["Dx1", "Dx2", "g1"], ["Dy1", "Dy2", "h1"], ["Dx1", "Dy2", "k1"]],
    )
    return out


def write(path, doc):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def main():
    for name, doc in SCHEMAS.items():
        write(ROOT / "schemas" / f"{name}.json", doc)
    for name, doc in configs().items():
        write(ROOT / "configs" / f"{name}.json", doc)


if __name__ == "__main__":
    main()
