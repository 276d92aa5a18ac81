#!/usr/bin/env python3
"""Print the first levels of the b = q = 2 diagram family.

For each (a, p) the six first-level gamma labels should read
4a, 3a-p, 2(a-p+1), 2(a-p-1), a-3p, -4p, and the lexicographically first
second-level vertex should emit contents {a+2, a-2, -p}.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tbh.bratteli import build_diagram, dimension_vector
from tbh.params import HeckeParams
from tbh.scalars import rational_to_str


def show(a, p):
    params = HeckeParams(a, 2, p, 2, 1)
    diagram = build_diagram(params)
    print(f"== rectangles ({a}^{p}) and (2^2)")
    print("   level sizes:", [len(level) for level in diagram.levels])
    labels = sorted((label for _, _, label in diagram.edges[0]), reverse=True)
    print("   first-level labels:", [rational_to_str(l) for l in labels])
    predicted = sorted(
        {4 * a, 3 * a - p, 2 * (a - p + 1), 2 * (a - p - 1), a - 3 * p, -4 * p},
        reverse=True,
    )
    print("   gamma recursion:   ", [f"{v}/1" for v in predicted])
    first = diagram.levels[1][0]
    out = sorted(
        label
        for si, _, label in diagram.edges[1]
        if diagram.levels[1][si] == first
    )
    print(f"   outgoing contents of {first}: {[rational_to_str(l) for l in out]}")
    dims = dimension_vector(diagram, 2)
    print("   two-path vertices:", sorted(lam for lam, d in dims.items() if d == 2))
    print()


if __name__ == "__main__":
    for a, p in [(4, 4), (3, 3), (5, 3), (3, 4)]:
        show(a, p)
