#!/usr/bin/env python3
"""Regenerate the fixture corpus for the root-permutation verification lab.

Each JSONL line: {"polynomial": [coeffs low-first], "expected_Rf_rank": k,
"expected_basis": [[...]] | null, "source": "Example1"|"Example2"|"derived",
"advisory": bool}.

Expected values come from machinery that is independent of the numeric
oracle wherever possible:
  * products of distinct rationals          -> exact rational-vector lattice;
  * irreducible all-roots-of-rational       -> exact congruence-kernel lattice;
  * certified-generic random quartics       -> rank 0 or the all-ones line,
    proven through the Q-triviality + no-root-of-rational certificate;
  * a few mixed products                    -> hand-derived ranks (worked out
    in comments below), cross-checked here;
  * the two literature polynomials          -> pinned published values.
The script re-runs the oracle on every non-advisory item and refuses to write
a corpus that disagrees.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from xlat.drivers import fastbasis_plus  # noqa: E402
from xlat.galoislike import numeric_lattices  # noqa: E402
from xlat.lattice import rat_mult_lattice, ror_lattice  # noqa: E402
from xlat.numtests import cyclotomic_polynomial, is_ror  # noqa: E402
from xlat.polycore import UnivariatePolynomial, factor_z, is_squarefree, poly  # noqa: E402
from xlat.rng import SplitMix64  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "src" / "xlat" / "data"


def item(f, rank, basis, source, advisory=False):
    return {
        "polynomial": list(f.coeffs),
        "expected_Rf_rank": rank,
        "expected_basis": None if basis is None else [list(r) for r in basis],
        "source": source,
        "advisory": advisory,
    }


def product_poly(values):
    f = poly([1])
    for v in values:
        f = f * poly([-v, 1])
    return f


def main():
    items = []

    # --- published ground truth -------------------------------------------
    ex1 = poly([6, 0, 4, -4, 1])
    items.append(item(ex1, 1, [[2, -2, -2, 2]], "Example1"))
    items.append(item(ex1.shift(-1), 0, [], "Example1"))
    ex2 = poly([-1, 3, 3, -4, -1, 1])
    items.append(item(ex2, 1, [[1, 1, 1, 1, 1]], "Example2"))

    # --- cyclotomics: full-rank lattices, exact via the congruence kernel ---
    for d in (3, 4, 6, 5, 8, 10, 12, 7, 9, 14, 18):
        f = cyclotomic_polynomial(d)
        lat = ror_lattice(f, is_ror(f))
        assert lat.rank == f.degree
        items.append(item(f, lat.rank, [list(r) for r in lat.basis], "derived"))

    # --- radicals and twisted radicals: exact via the congruence kernel -----
    for coeffs in (
        [-2, 0, 1],          # x^2 - 2
        [-3, 0, 1],          # x^2 - 3
        [2, 0, 1],           # x^2 + 2
        [-2, 0, 0, 1],       # x^3 - 2
        [-5, 0, 0, 1],       # x^3 - 5
        [-2, 0, 0, 0, 1],    # x^4 - 2
        [2, 0, 0, 0, 1],     # x^4 + 2
        [-7, 0, 0, 0, 0, 1], # x^5 - 7
    ):
        f = poly(coeffs)
        w = is_ror(f)
        lat = ror_lattice(f, w)
        items.append(item(f, lat.rank, [list(r) for r in lat.basis], "derived"))

    # --- products of distinct rationals: exact rational-vector lattices -----
    for values in (
        [2, 3, 6],
        [1, 2, 3],
        [2, 3, 5],
        [6, 10, 15],
        [2, 4],
        [-2, 3],
        [2, 3, 4, 6],
        [-1, 2, -2],
    ):
        values = sorted(values)  # canonical root order is ascending here
        f = product_poly(values)
        assert is_squarefree(f)
        lat = rat_mult_lattice(values)
        items.append(item(f, lat.rank, [list(r) for r in lat.basis], "derived"))

    # --- mixed products, hand-derived ranks ---------------------------------
    # (x^2+1)(x-2): canonical roots (-i, i, 2); value (-i)^a i^b 2^c =
    #   i^(3a+b) 2^c: relations need c = 0 and 3a + b = 0 mod 4 -> rank 2
    # (x^2-2)(x-3): roots (-s, s, 3), s = sqrt2: need c = 0, a + b = 0, a even
    #   -> rank 1
    # (x^2+x+1)(x-1): roots (w, w-bar, 1) all roots of unity -> rank 3 (full)
    # (x^2-2)(x-2): roots (-s, s, 2): value (-1)^a 2^((a+b)/2 + c):
    #   a even, a + b + 2c = 0 -> rank 2
    # (x^2+1)(x^2-2): roots (-s, -i, i, s): |.| gives u1 + u4 = 0; argument
    #   gives 2u1 - u2 + u3 = 0 mod 4 -> rank 3
    mixed = [
        (poly([1, 0, 1]) * poly([-2, 1]), 2),
        (poly([-2, 0, 1]) * poly([-3, 1]), 1),
        (poly([1, 1, 1]) * poly([-1, 1]), 3),
        (poly([-2, 0, 1]) * poly([-2, 1]), 2),
        (poly([1, 0, 1]) * poly([-2, 0, 1]), 3),
    ]
    for f, rank in mixed:
        r_f, _ = numeric_lattices(f, precision=120)
        assert r_f.rank == rank, (f.coeffs, r_f.basis, rank)
        items.append(item(f, rank, [list(r) for r in r_f.basis], "derived"))

    # --- degenerate mixed items: oracle completeness not asserted -----------
    # (x^2-2)(x^2-8): roots (-2s, -s, s, 2s): modulus a+b+3(c+d)... rank 3
    advisory = [
        poly([-2, 0, 1]) * poly([-8, 0, 1]),
        poly([-3, 0, 1]) * poly([-12, 0, 1]),
    ]
    for f in advisory:
        r_f, _ = numeric_lattices(f, precision=120)
        items.append(item(f, r_f.rank, None, "derived", advisory=True))

    # --- certified-generic random quartics ----------------------------------
    rng = SplitMix64(0xC0 + 2024)
    added = 0
    while added < 25:
        coeffs = [rng.randint(-10, 10) for _ in range(4)] + [rng.choice([c for c in range(-10, 11) if c])]
        f = poly(coeffs)
        if f(0) == 0 or f.degree != 4 or not is_squarefree(f):
            continue
        if not factor_z(f).is_irreducible:
            continue
        try:
            out = fastbasis_plus(f)
        except Exception:
            continue
        if out.status != "Basis" or out.certificate != "QtrivialTrivialLattice":
            continue
        items.append(
            item(f, out.basis.rank, [list(r) for r in out.basis.basis], "derived")
        )
        added += 1

    # --- oracle must agree on every non-advisory item -----------------------
    for it in items:
        if it["advisory"]:
            continue
        f = UnivariatePolynomial(it["polynomial"])
        r_f, r_fq = numeric_lattices(f, precision=120)
        assert r_f.rank == it["expected_Rf_rank"], (it, r_f.basis)
        if it["expected_basis"] is not None:
            assert [list(r) for r in r_f.basis] == it["expected_basis"], (it, r_f.basis)

    DATA.mkdir(parents=True, exist_ok=True)
    out_path = DATA / "corpus.jsonl"
    with out_path.open("w") as fh:
        for it in items:
            fh.write(json.dumps(it) + "\n")
    print(f"wrote {out_path}: {len(items)} items")


if __name__ == "__main__":
    main()
