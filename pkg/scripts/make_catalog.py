#!/usr/bin/env python3
"""Regenerate the transitive-group catalog and resolvent pattern tables.

Builds explicit generators for every transitive permutation group of degree
2..7 (36 conjugacy classes), verifies orders / transitivity / pairwise
non-conjugacy, computes the orbit-size patterns used by the resolvent stage
of Galois-group identification, and writes:

    src/xlat/data/catalog.txt        one line per group
    src/xlat/data/catalog.sha256     checksum of the catalog
    src/xlat/data/resolvents.txt     (degree, t, kind) -> factor-degree pattern

Also prints a separability report: for every ordered pair (true group A,
candidate B != A) it checks whether parity + cycle-type containment + the
resolvent patterns rule B out; unresolved pairs are listed (these become
honest identification failures at runtime).
"""

import hashlib
import itertools
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from xlat.permgroup import (  # noqa: E402
    Permutation,
    PermutationGroup,
    orbit_size_pattern,
    parse_permutation,
)

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "xlat" / "data"


# ---------------------------------------------------------------------------
# constructions


def coset_action(big: PermutationGroup, sub_elements, degree_hint=None):
    """Left-multiplication action of `big` on the left cosets of a subgroup,
    returned as generator permutations on 1..k (cosets sorted by least rep)."""
    elements = big.enumerate_elements()
    sub = set(sub_elements)
    cosets = {}
    for e in elements:
        key = min((e * h).images for h in sub)
        cosets.setdefault(key, min((e * h for h in sub), key=lambda p: p.images))
    reps = sorted(cosets.values(), key=lambda p: p.images)
    index = {}
    for i, rep in enumerate(reps):
        for h in sub:
            index[(rep * h).images] = i + 1
    out = []
    for g in big.generators:
        images = [index[(g * rep).images] for rep in reps]
        out.append(Permutation(tuple(images)))
    return out


def build_6t8():
    """S4 acting on the six cosets of a cyclic subgroup of order 4."""
    s4 = PermutationGroup(4, ["(1 2 3 4)", "(1 2)"])
    c4 = PermutationGroup(4, ["(1 2 3 4)"]).enumerate_elements()
    gens = coset_action(s4, c4)
    return [g.to_cycle_string() for g in gens]


def build_6t10():
    """3^2 : 4 of degree 6: search for c with c a c^-1 = b, c b c^-1 = a^-1."""
    a = parse_permutation("(1 2 3)", 6)
    b = parse_permutation("(4 5 6)", 6)
    for images in itertools.permutations(range(1, 7)):
        c = Permutation(images)
        ci = c.inverse()
        if c * a * ci == b and c * b * ci == a.inverse():
            g = PermutationGroup(6, [a, b, c])
            if g.order() == 36:
                return [p.to_cycle_string() for p in (a, b, c)]
    raise AssertionError("no suitable order-4 twist found")


def build_7t5():
    """PSL(3,2) of degree 7: first involution joining a 7-cycle to order 168."""
    seven = parse_permutation("(1 2 3 4 5 6 7)", 7)
    for images in itertools.permutations(range(1, 8)):
        tau = Permutation(images)
        if tau.is_identity or (tau * tau).images != Permutation.identity(7).images:
            continue
        g = PermutationGroup(7, [seven, tau])
        if g.order() == 168:
            return [seven.to_cycle_string(), tau.to_cycle_string()]
    raise AssertionError("PSL(3,2) generators not found")


def catalog_definitions():
    t6_8 = build_6t8()
    t6_10 = build_6t10()
    t7_5 = build_7t5()
    return [
        # (degree, t, name, order, generators)
        (2, 1, "S2", 2, ["(1 2)"]),
        (3, 1, "C3", 3, ["(1 2 3)"]),
        (3, 2, "S3", 6, ["(1 2 3)", "(1 2)"]),
        (4, 1, "C4", 4, ["(1 2 3 4)"]),
        (4, 2, "V4", 4, ["(1 2)(3 4)", "(1 3)(2 4)"]),
        (4, 3, "D4", 8, ["(1 2 3 4)", "(1 3)"]),
        (4, 4, "A4", 12, ["(1 2 3)", "(2 3 4)"]),
        (4, 5, "S4", 24, ["(1 2 3 4)", "(1 2)"]),
        (5, 1, "C5", 5, ["(1 2 3 4 5)"]),
        (5, 2, "D5", 10, ["(1 2 3 4 5)", "(2 5)(3 4)"]),
        (5, 3, "F20", 20, ["(1 2 3 4 5)", "(2 3 5 4)"]),
        (5, 4, "A5", 60, ["(1 2 3 4 5)", "(1 2 3)"]),
        (5, 5, "S5", 120, ["(1 2 3 4 5)", "(1 2)"]),
        (6, 1, "C6", 6, ["(1 2 3 4 5 6)"]),
        (6, 2, "S3(6)", 6, ["(1 2 3)(4 5 6)", "(1 4)(2 6)(3 5)"]),
        (6, 3, "D6", 12, ["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]),
        (6, 4, "A4(6)", 12, ["(1 4 2)(3 5 6)", "(2 5)(3 4)"]),
        (6, 5, "F18", 18, ["(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)"]),
        (6, 6, "2A4", 24, ["(1 4 2)(3 5 6)", "(2 5)(3 4)", "(1 6)(2 5)(3 4)"]),
        (6, 7, "S4(6+)", 24, ["(1 4 6 3)(2 5)", "(2 4)(3 5)"]),
        (6, 8, "S4(6-)", 24, t6_8),
        (6, 9, "F18:2", 36, ["(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)", "(2 3)(5 6)"]),
        (6, 10, "F36", 36, t6_10),
        (6, 11, "2S4", 48, ["(1 4 6 3)(2 5)", "(2 4)(3 5)", "(1 6)(2 5)(3 4)"]),
        (6, 12, "PSL(2,5)", 60, ["(2 3 4 5 6)", "(1 2)(3 6)"]),
        (6, 13, "F36:2", 72, ["(1 2 3)", "(4 5 6)", "(1 4)(2 5)(3 6)", "(2 3)(5 6)"] + [t6_10[2]]),
        (6, 14, "PGL(2,5)", 120, ["(2 3 4 5 6)", "(1 2)(3 6)", "(3 4 6 5)"]),
        (6, 15, "A6", 360, ["(1 2 3)", "(2 3 4 5 6)"]),
        (6, 16, "S6", 720, ["(1 2)", "(1 2 3 4 5 6)"]),
        (7, 1, "C7", 7, ["(1 2 3 4 5 6 7)"]),
        (7, 2, "D7", 14, ["(1 2 3 4 5 6 7)", "(2 7)(3 6)(4 5)"]),
        (7, 3, "F21", 21, ["(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)"]),
        (7, 4, "F42", 42, ["(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"]),
        (7, 5, "PSL(3,2)", 168, t7_5),
        (7, 6, "A7", 2520, ["(1 2 3 4 5 6 7)", "(1 2 3)"]),
        (7, 7, "S7", 5040, ["(1 2 3 4 5 6 7)", "(1 2)"]),
    ]


# ---------------------------------------------------------------------------
# resolvent objects (must mirror xlat.galois exactly)


def unordered_pairs(n):
    return [frozenset(p) for p in itertools.combinations(range(1, n + 1), 2)]


def unordered_triples(n):
    return [frozenset(t) for t in itertools.combinations(range(1, n + 1), 3)]


def ordered_pairs(n):
    return [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]


def matchings6():
    out = []
    for p1 in itertools.combinations(range(1, 7), 2):
        rest = [x for x in range(1, 7) if x not in p1]
        if p1[0] != 1:
            continue
        for p2 in itertools.combinations(rest, 2):
            if p2[0] != rest[0]:
                continue
            p3 = tuple(x for x in rest if x not in p2)
            out.append(frozenset({frozenset(p1), frozenset(p2), frozenset(p3)}))
    return out


def quintic_cosets():
    """Left cosets of F20 = <(12345),(2354)> in S5, as frozensets of images."""
    s5 = PermutationGroup(5, ["(1 2 3 4 5)", "(1 2)"])
    f20 = PermutationGroup(5, ["(1 2 3 4 5)", "(2 3 5 4)"]).enumerate_elements()
    elements = s5.enumerate_elements()
    cosets = {}
    for e in elements:
        key = frozenset((e * h).images for h in f20)
        cosets[key] = None
    return sorted(cosets.keys(), key=lambda fs: sorted(fs))


def act_set(g, s):
    return frozenset(g(x) for x in s)


def act_pair(g, p):
    return (g(p[0]), g(p[1]))


def act_matching(g, m):
    return frozenset(frozenset(g(x) for x in pair) for pair in m)


def act_coset(g, coset):
    return frozenset((g * Permutation(images)).images for images in coset)


KINDS = {
    4: ["P2", "OP2"],
    5: ["P2", "OP2", "COS6"],
    6: ["P2", "P3", "OP2", "M15"],
    7: ["P2", "P3"],
}


def pattern_for(group, kind):
    n = group.degree
    if kind == "P2":
        return orbit_size_pattern(group, unordered_pairs(n), act_set)
    if kind == "P3":
        return orbit_size_pattern(group, unordered_triples(n), act_set)
    if kind == "OP2":
        return orbit_size_pattern(group, ordered_pairs(n), act_pair)
    if kind == "M15":
        return orbit_size_pattern(group, matchings6(), act_matching)
    if kind == "COS6":
        return orbit_size_pattern(group, quintic_cosets(), act_coset)
    raise ValueError(kind)


# ---------------------------------------------------------------------------


def main():
    defs = catalog_definitions()
    groups = {}
    for degree, t, name, order, gens in defs:
        g = PermutationGroup(degree, gens)
        assert g.order() == order, (name, g.order(), order)
        assert g.is_transitive(), name
        groups[(degree, t)] = g
    counts = {}
    for (degree, _t), _g in groups.items():
        counts[degree] = counts.get(degree, 0) + 1
    assert counts == {2: 1, 3: 2, 4: 5, 5: 5, 6: 16, 7: 7}, counts

    # pairwise non-conjugacy within each degree (distinguish by invariants first)
    for degree in sorted(counts):
        entries = [(t, g) for (d, t), g in groups.items() if d == degree]
        for (t1, g1), (t2, g2) in itertools.combinations(entries, 2):
            if g1.order() != g2.order():
                continue
            inv1 = (sorted(g1.cycle_types()), g1.is_even_subgroup())
            inv2 = (sorted(g2.cycle_types()), g2.is_even_subgroup())
            if inv1 != inv2:
                continue
            from xlat.permgroup import are_conjugate_in_sym

            assert not are_conjugate_in_sym(g1, g2), (degree, t1, t2)
    print("catalog verified: 36 pairwise non-conjugate transitive groups")

    # resolvent patterns
    patterns = {}
    for (degree, t), g in sorted(groups.items()):
        for kind in KINDS.get(degree, []):
            patterns[(degree, t, kind)] = pattern_for(g, kind)

    # separability report
    print("\nseparability (parity + cycle types + resolvent patterns):")
    unresolved = []
    for degree in sorted(counts):
        entries = [(t, g) for (d, t), g in groups.items() if d == degree]
        for (ta, ga), (tb, gb) in itertools.permutations(entries, 2):
            if gb.is_even_subgroup() != ga.is_even_subgroup():
                continue
            types_a = set(ga.cycle_types())
            types_b = set(gb.cycle_types())
            if not types_a <= types_b:
                continue
            kinds = KINDS.get(degree, [])
            if any(patterns[(degree, ta, k)] != patterns[(degree, tb, k)] for k in kinds):
                continue
            unresolved.append((degree, ta, tb))
    if unresolved:
        for degree, ta, tb in unresolved:
            print(f"  degree {degree}: true {degree}T{ta} cannot exclude {degree}T{tb}")
    else:
        print("  every ordered pair separable")

    # write data files
    DATA_DIR.mkdir(parents=True, exist_ok=True)
    lines = []
    for degree, t, name, order, _gens in defs:
        g = groups[(degree, t)]
        gen_str = " ".join(p.to_cycle_string().replace(" ", ",") for p in g.generators)
        lines.append(f"{degree} {t} {order} {name} {gen_str}")
    catalog_text = "\n".join(lines) + "\n"
    (DATA_DIR / "catalog.txt").write_text(catalog_text)
    digest = hashlib.sha256(catalog_text.encode()).hexdigest()
    (DATA_DIR / "catalog.sha256").write_text(digest + "\n")

    res_lines = []
    for (degree, t, kind), pat in sorted(patterns.items()):
        res_lines.append(f"{degree} {t} {kind} {','.join(map(str, pat))}")
    (DATA_DIR / "resolvents.txt").write_text("\n".join(res_lines) + "\n")
    print(f"\nwrote {DATA_DIR / 'catalog.txt'} (sha256 {digest[:16]}...)")
    print(f"wrote {DATA_DIR / 'resolvents.txt'} ({len(res_lines)} patterns)")


if __name__ == "__main__":
    main()
