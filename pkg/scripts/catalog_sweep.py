#!/usr/bin/env python3
"""Sweep the embedded transitive-group catalog through the pair decision.

Prints, per degree, how many groups are Q-trivial, how many of those are
doubly transitive, and which decision path fired for each group.  The
degree-4 and degree-6 rows are the interesting ones: 4 is a prime power so
the module check runs, while 6 lies outside the degree class and every
non-2-transitive group is rejected without touching the module machinery.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from xlat.drivers import is_qtrivial_group  # noqa: E402
from xlat.galois import load_catalog  # noqa: E402


def main():
    entries = load_catalog()
    degrees = sorted({e.degree for e in entries})
    print(f"{'Deg':>4} {'#Groups':>8} {'2-Transitive':>13} {'Qtrivial':>9} {'NotQtrivial':>12}")
    for degree in degrees:
        rows = [e for e in entries if e.degree == degree]
        verdicts = {e.label(): is_qtrivial_group(e) for e in rows}
        qtriv = sum(v.verdict for v in verdicts.values())
        two_t = sum(e.is_2transitive for e in rows)
        print(f"{degree:>4} {len(rows):>8} {two_t:>13} {qtriv:>9} {len(rows) - qtriv:>12}")
    print()
    for degree in degrees:
        for e in (e for e in entries if e.degree == degree):
            v = is_qtrivial_group(e)
            mark = "Qtrivial    " if v.verdict else "NotQtrivial "
            print(f"  {e.label():<6} {e.name:<10} order {e.order:>5}  {mark} via {v.path}")


if __name__ == "__main__":
    main()
