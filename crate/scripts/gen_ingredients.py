#!/usr/bin/env python3
"""Regenerate the bundled ingredient designs under crates/core/data/.

Every family is found as the orbit of one base system under a cyclic
permutation group (a cycle on the first m points, the remaining points
fixed). The library re-verifies all of these files when it loads them, so
this script is only provenance; nothing it prints is trusted.

Usage: python3 scripts/gen_ingredients.py [outdir]
"""

import itertools
import os
import sys

sys.setrecursionlimit(10000)


def shift(x, m, s):
    return (x + s) % m if x < m else x


def orbit_id_table(v, m):
    """Map each triple of range(v) to a canonical orbit representative under Z_m."""
    ids = {}
    for t in itertools.combinations(range(v), 3):
        rep = min(tuple(sorted(shift(x, m, s) for x in t)) for s in range(m))
        ids[t] = rep
    return ids


def translates(system, m):
    out = []
    for s in range(m):
        out.append(sorted(tuple(sorted(shift(x, m, s) for x in t)) for t in system))
    return out


def pairs_of(t):
    a, b, c = t
    return ((a, b), (a, c), (b, c))


def orbit_sts(v, m):
    """An STS(v) meeting every Z_m-orbit of triples exactly once (m = v - 2)."""
    ids = orbit_id_table(v, m)
    covered = set()
    used = set()
    chosen = []
    all_pairs = list(itertools.combinations(range(v), 2))

    def dfs():
        first = next((p for p in all_pairs if p not in covered), None)
        if first is None:
            return True
        x, y = first
        for z in range(v):
            if z in (x, y):
                continue
            t = tuple(sorted((x, y, z)))
            o = ids[t]
            if o in used:
                continue
            ps = pairs_of(t)
            if any(p in covered for p in ps):
                continue
            used.add(o)
            covered.update(ps)
            chosen.append(t)
            if dfs():
                return True
            chosen.pop()
            covered.difference_update(ps)
            used.discard(o)
        return False

    assert dfs(), f"no orbit STS({v})"
    return translates(chosen, m)


def covering_number(a):
    return -(-a * (-(-(a - 1) // 2)) // 3)


def cyclic_group(v, m):
    return [[shift(x, m, s) for x in range(v)] for s in range(m)]


def group_orbit_ids(v, group):
    ids = {}
    for t in itertools.combinations(range(v), 3):
        ids[t] = min(tuple(sorted(g[x] for x in t)) for g in group)
    return ids


def apply_all(system, group):
    return [sorted(tuple(sorted(g[x] for x in t)) for t in system) for g in group]


def orbit_covering_family(a, m=None, size=None, exact_orbits=False, excess_matching=False,
                          group=None, skip=()):
    """Base covering of K_a hitting every orbit of triples; returns its images."""
    size = size or covering_number(a)
    group = group or cyclic_group(a, m)
    ids = group_orbit_ids(a, group)
    for t in skip:
        del ids[t]
    orbits = sorted(set(ids.values()))
    mult = {p: 0 for p in itertools.combinations(range(a), 2)}
    excess = [0] * a
    used = {}
    chosen = []
    all_pairs = sorted(mult)

    def add(t, d):
        for p in pairs_of(t):
            before = mult[p]
            mult[p] += d
            if d > 0 and before >= 1:
                excess[p[0]] += 1
                excess[p[1]] += 1
            if d < 0 and before >= 2:
                excess[p[0]] -= 1
                excess[p[1]] -= 1
        o = ids[t]
        used[o] = used.get(o, 0) + d

    def ok(t):
        if exact_orbits and used.get(ids[t], 0) > 0:
            return False
        if excess_matching:
            for p in pairs_of(t):
                if mult[p] >= 1 and (excess[p[0]] >= 1 or excess[p[1]] >= 1):
                    return False
        return True

    def dfs():
        left = size - len(chosen)
        unhit = [o for o in orbits if used.get(o, 0) == 0]
        first = next((p for p in all_pairs if mult[p] == 0), None)
        uncovered = sum(1 for p in all_pairs if mult[p] == 0)
        if first is None and not unhit:
            return True
        if left <= 0 or len(unhit) > left or uncovered > 3 * left:
            return False
        if first is not None:
            x, y = first
            cands = [tuple(sorted((x, y, z))) for z in range(a) if z not in (x, y)]
            cands = [t for t in cands if t in ids]
            cands.sort(key=lambda t: (used.get(ids[t], 0) > 0, sum(mult[p] > 0 for p in pairs_of(t)), t))
        else:
            o = unhit[0]
            cands = [t for t in ids if ids[t] == o]
        for t in cands:
            if not ok(t):
                continue
            add(t, 1)
            chosen.append(t)
            if dfs():
                return True
            chosen.pop()
            add(t, -1)
        return False

    assert dfs(), f"no orbit covering family for a={a}"
    return apply_all(chosen, group)


def sts7_family():
    """Six STS(7) whose union contains all 35 triples (no cyclic base exists)."""
    base = [(0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (0, 4, 5), (1, 5, 6), (0, 2, 6)]
    systems = set()
    for perm in itertools.permutations(range(7)):
        systems.add(frozenset(tuple(sorted(perm[x] for x in t)) for t in base))
    systems = sorted(systems, key=sorted)
    full = set(itertools.combinations(range(7), 3))

    def dfs(start, chosen, union):
        if len(chosen) == 6:
            return chosen if union == full else None
        missing = sorted(full - union)
        if len(missing) > 7 * (6 - len(chosen)):
            return None
        target = missing[0]
        for i in range(start, len(systems)):
            s = systems[i]
            if target not in s:
                continue
            got = dfs(i + 1, chosen + [s], union | s)
            if got:
                return got
        return None

    fam = dfs(0, [], set())
    assert fam
    return [sorted(s) for s in fam]


def disjoint_coverings_6():
    """Three pairwise disjoint optimal coverings of K_6."""
    trip = list(itertools.combinations(range(6), 3))
    pairs = list(itertools.combinations(range(6), 2))
    covs = []
    for combo in itertools.combinations(trip, 6):
        if all(any(p[0] in t and p[1] in t for t in combo) for p in pairs):
            covs.append(frozenset(combo))
    for c1 in covs:
        for c2 in covs:
            if c1 & c2 or min(c2) < min(c1):
                continue
            for c3 in covs:
                if c3 & c1 or c3 & c2:
                    continue
                return [sorted(c1), sorted(c2), sorted(c3)]
    raise AssertionError("no three disjoint coverings of K6")


def sqs10():
    triples = list(itertools.combinations(range(10), 3))
    covered = set()
    chosen = []

    def dfs():
        first = next((t for t in triples if t not in covered), None)
        if first is None:
            return True
        for z in range(10):
            if z in first:
                continue
            q = tuple(sorted(first + (z,)))
            ts = list(itertools.combinations(q, 3))
            if any(t in covered for t in ts):
                continue
            covered.update(ts)
            chosen.append(q)
            if dfs():
                return True
            chosen.pop()
            covered.difference_update(ts)
        return False

    assert dfs()
    return sorted(chosen)


def sts_with_blocks(v, forced):
    pairs = list(itertools.combinations(range(v), 2))
    covered = set()
    chosen = list(forced)
    for t in forced:
        covered.update(pairs_of(t))

    def dfs():
        first = next((p for p in pairs if p not in covered), None)
        if first is None:
            return True
        x, y = first
        for z in range(v):
            if z in (x, y):
                continue
            t = tuple(sorted((x, y, z)))
            ps = pairs_of(t)
            if any(p in covered for p in ps):
                continue
            covered.update(ps)
            chosen.append(t)
            if dfs():
                return True
            chosen.pop()
            covered.difference_update(ps)
        return False

    assert dfs()
    return sorted(chosen)


def write_family(path, kind, r, n, members, extra=""):
    with open(path, "w", newline="\n") as f:
        f.write(f"design {kind} r={r} n={n} k={len(members)}{extra}\n")
        for i, mem in enumerate(members):
            if i:
                f.write("--\n")
            for b in sorted(mem):
                f.write(" ".join(map(str, b)) + "\n")


def write_single(path, kind, r, n, blocks):
    with open(path, "w", newline="\n") as f:
        f.write(f"design {kind} r={r} n={n}\n")
        for b in sorted(blocks):
            f.write(" ".join(map(str, b)) + "\n")


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "crates", "core", "data")
    os.makedirs(out, exist_ok=True)

    write_single(os.path.join(out, "sqs10.design"), "sqs", 4, 10, sqs10())

    for v in (9, 13, 15):
        print("large set", v, flush=True)
        fam = orbit_sts(v, v - 2)
        write_family(os.path.join(out, f"large_set_sts_{v}.design"), "large_set_sts", 3, v, fam)

    # mu-type covering families: mu(a) optimal coverings whose union holds every triple
    for a, m in ((4, 2), (5, 3), (6, 5), (7, 6), (8, 6), (10, 8), (11, 9)):
        print("covering family", a, flush=True)
        fam = sts7_family() if a == 7 else orbit_covering_family(a, m)
        write_family(os.path.join(out, f"covering_family_{a}.design"), "covering_family", 3, a, fam)

    write_family(os.path.join(out, "disjoint_coverings_6.design"), "disjoint_coverings", 3, 6,
                 disjoint_coverings_6())

    # a = 12: nine pairwise disjoint optimal coverings missing exactly four
    # triples that partition the points, plus an STS(13) containing those four.
    # Z_3 x Z_3 acting on the four aligned triples {3k, 3k+1, 3k+2}, rotating
    # them by u, v, u+v, u+2v: every other triple has a regular orbit.
    group = []
    for u in range(3):
        for v in range(3):
            rot = (u, v, (u + v) % 3, (u + 2 * v) % 3)
            group.append([3 * (x // 3) + (x % 3 + rot[x // 3]) % 3 for x in range(12)])
    aligned = [(0, 1, 2), (3, 4, 5), (6, 7, 8), (9, 10, 11)]
    fam = orbit_covering_family(12, exact_orbits=True, excess_matching=True, group=group, skip=aligned)
    sts = sts_with_blocks(13, aligned)
    write_family(os.path.join(out, "aligned_covering_family_12.design"), "aligned_covering_family", 3, 13,
                 fam + [sts], extra=" a=12")


if __name__ == "__main__":
    main()
