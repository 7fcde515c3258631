"""Generative machinery: cyclic orbit expansion, Bose-style constructions
from Steiner triple systems and pairwise balanced designs, and composition
of pentagonal geometries over group divisible designs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import Design, DesignError, ParseError, PairCoverage, records
from .analysis import verify_pentagonal


class ConstructionError(DesignError):
    """A construction's preconditions or declared expectations failed."""


# ---------------------------------------------------------------------------
# Cyclic orbit development

@dataclass(frozen=True)
class OrbitSpec:
    modulus: int
    step: int
    k: int
    bases: tuple[tuple[int, ...], ...]
    r: int | None = None
    expected_lines: int | None = None

    def __post_init__(self):
        if self.step <= 0 or self.modulus % self.step != 0:
            raise ConstructionError(
                f"step {self.step} must be positive and divide modulus {self.modulus}")
        for base in self.bases:
            if len(set(p % self.modulus for p in base)) != self.k:
                raise ConstructionError(f"bad base block {base}")


def expand_orbits(spec: OrbitSpec) -> Design:
    """Develop each base block under x -> x + step (mod modulus).

    Every orbit must have full length modulus/step and all generated lines
    must be distinct; a repeat signals a transcription error in the base blocks.
    """
    n, c = spec.modulus, spec.step
    lines: set[tuple[int, ...]] = set()
    for base in spec.bases:
        for j in range(n // c):
            line = tuple(sorted((p + j * c) % n for p in base))
            if line in lines:
                raise ConstructionError(
                    f"duplicate generated line {line} (base {base}, shift {j * c})")
            lines.add(line)
    if spec.expected_lines is not None and len(lines) != spec.expected_lines:
        raise ConstructionError(
            f"expected {spec.expected_lines} lines, generated {len(lines)}")
    return Design.make(v=n, k=spec.k, lines=lines, r_claimed=spec.r, kind="pent")


def parse_orbit(text: str) -> OrbitSpec:
    header: dict[str, int] = {}
    bases: list[tuple[int, ...]] = []
    for key, value in records(text):
        if key == "kind":
            if value != "orbit":
                raise ParseError(f"expected kind orbit, got {value!r}")
        elif key == "base":
            bases.append(tuple(int(p) for p in value.split()))
        elif key in ("modulus", "step", "k", "r", "lines"):
            header[key] = int(value)
        else:
            raise ParseError(f"unknown field {key!r} in orbit file")
    for req in ("modulus", "step", "k"):
        if req not in header:
            raise ParseError(f"orbit file missing {req!r}")
    return OrbitSpec(modulus=header["modulus"], step=header["step"],
                     k=header["k"], bases=tuple(bases),
                     r=header.get("r"), expected_lines=header.get("lines"))


def serialize_orbit(spec: OrbitSpec) -> str:
    out = ["kind: orbit", f"modulus: {spec.modulus}", f"step: {spec.step}",
           f"k: {spec.k}"]
    if spec.r is not None:
        out.append(f"r: {spec.r}")
    if spec.expected_lines is not None:
        out.append(f"lines: {spec.expected_lines}")
    out += ["base: " + " ".join(str(p) for p in base) for base in spec.bases]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Quasigroups and Steiner triple systems

@dataclass(frozen=True)
class Quasigroup:
    order: int
    table: tuple[tuple[int, ...], ...]

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def check(self) -> None:
        """Latin square, commutative and idempotent; raises on violation."""
        n = self.order
        full = set(range(n))
        for x in range(n):
            if set(self.table[x]) != full:
                raise ConstructionError(f"row {x} is not a permutation")
            if set(row[x] for row in self.table) != full:
                raise ConstructionError(f"column {x} is not a permutation")
            if self.table[x][x] != x:
                raise ConstructionError(f"not idempotent at {x}")
            for y in range(x + 1, n):
                if self.table[x][y] != self.table[y][x]:
                    raise ConstructionError(f"not commutative at ({x},{y})")


def cyclic_idempotent_quasigroup(n: int) -> Quasigroup:
    """x*y = (x+y)/2 on Z_n; commutative idempotent, needs n odd."""
    if n % 2 == 0:
        raise ConstructionError(f"order must be odd, got {n}")
    half = (n + 1) // 2
    table = tuple(tuple((x + y) * half % n for y in range(n)) for x in range(n))
    return Quasigroup(order=n, table=table)


@dataclass(frozen=True)
class Sts:
    v: int
    triples: tuple[tuple[int, ...], ...]

    def check(self) -> None:
        if self.v % 6 not in (1, 3):
            raise ConstructionError(f"STS order must be 1 or 3 (mod 6), got {self.v}")
        _check_exact_pair_cover(self.v, self.triples, what="STS")


@dataclass(frozen=True)
class Pbd:
    """Pairwise balanced design with triples plus one distinguished 5-block."""
    v: int
    distinguished: tuple[int, ...]
    triples: tuple[tuple[int, ...], ...]

    def check(self) -> None:
        if len(set(self.distinguished)) != 5:
            raise ConstructionError("distinguished block must have 5 distinct points")
        if self.v % 6 != 5:
            raise ConstructionError(f"PBD order must be 5 (mod 6), got {self.v}")
        blocks = self.triples + (tuple(sorted(self.distinguished)),)
        _check_exact_pair_cover(self.v, blocks, what="PBD")


def _check_exact_pair_cover(v: int, blocks: Sequence[tuple[int, ...]],
                            what: str) -> None:
    cov = PairCoverage(v)
    for block in blocks:
        if len(set(block)) != len(block) or min(block) < 0 or max(block) >= v:
            raise ConstructionError(f"{what}: bad block {block}")
        for i in range(len(block)):
            for j in range(i + 1, len(block)):
                if cov.add(block[i], block[j]) > 1:
                    raise ConstructionError(
                        f"{what}: pair ({block[i]},{block[j]}) covered twice")
    for x in range(v):
        for y in range(x + 1, v):
            if cov.count(x, y) != 1:
                raise ConstructionError(f"{what}: pair ({x},{y}) uncovered")


def bose_sts(q: Quasigroup) -> Sts:
    """Bose construction: STS(3n) on Q x Z_3 from a commutative idempotent
    quasigroup of odd order n.  Point (x,i) is encoded as i*n + x."""
    n = q.order
    triples = [(x, n + x, 2 * n + x) for x in range(n)]
    for i in range(3):
        for x in range(n):
            for y in range(x + 1, n):
                triples.append(tuple(sorted((i * n + x, i * n + y,
                                             ((i + 1) % 3) * n + q.op(x, y)))))
    sts = Sts(v=3 * n, triples=tuple(sorted(triples)))
    sts.check()
    return sts


def sts_bose(n: int) -> Sts:
    """Direct STS(n) for n = 3 (mod 6) via the cyclic midpoint quasigroup."""
    if n % 6 != 3:
        raise ConstructionError(f"sts_bose needs n = 3 (mod 6), got {n}")
    return bose_sts(cyclic_idempotent_quasigroup(n // 3))


def steiner_quasigroup(s: Sts) -> Quasigroup:
    """x*x = x; x*y = the third point of the triple through x and y."""
    s.check()
    table = [[x if x == y else -1 for y in range(s.v)] for x in range(s.v)]
    for x, y, z in s.triples:
        table[x][y] = table[y][x] = z
        table[x][z] = table[z][x] = y
        table[y][z] = table[z][y] = x
    q = Quasigroup(order=s.v, table=tuple(tuple(row) for row in table))
    q.check()
    return q


def _pent3_from_quasigroup(q: Quasigroup, a: int) -> Design:
    """Bose STS(3n) minus the three points (a,0), (a,1), (a,2) and every
    triple meeting them; remaining points are relabeled densely."""
    n = q.order
    full = bose_sts(q)
    dropped = {a, n + a, 2 * n + a}
    relabel = {}
    for old in range(3 * n):
        if old not in dropped:
            relabel[old] = len(relabel)
    lines = [tuple(relabel[p] for p in t) for t in full.triples
             if not dropped & set(t)]
    return Design.make(v=3 * n - 3, k=3, lines=lines, kind="pent")


def bose_pent3(s: Sts, a: int) -> Design:
    """Pentagonal geometry from an STS: PENT(3,(3v-1)/2 - 3) on 3v-3 points."""
    if not 0 <= a < s.v:
        raise ConstructionError(f"drop point {a} not in 0..{s.v - 1}")
    return _pent3_from_quasigroup(steiner_quasigroup(s), a)


def pbd_pent3(p: Pbd, a: int) -> Design:
    """Same pipeline from a PBD(v,{3,5*}): the quasigroup uses triples for
    ordinary pairs and the midpoint rule inside the distinguished 5-block."""
    p.check()
    if a in p.distinguished:
        raise ConstructionError(
            f"drop point {a} must lie outside the distinguished block")
    if not 0 <= a < p.v:
        raise ConstructionError(f"drop point {a} not in 0..{p.v - 1}")
    dist = tuple(sorted(p.distinguished))
    pos = {pt: i for i, pt in enumerate(dist)}
    table = [[x if x == y else -1 for y in range(p.v)] for x in range(p.v)]
    for x, y, z in p.triples:
        table[x][y] = table[y][x] = z
        table[x][z] = table[z][x] = y
        table[y][z] = table[z][y] = x
    for x in dist:
        for y in dist:
            if x != y:
                table[x][y] = dist[(pos[x] + pos[y]) * 3 % 5]
    q = Quasigroup(order=p.v, table=tuple(tuple(row) for row in table))
    q.check()
    return _pent3_from_quasigroup(q, a)


# ---------------------------------------------------------------------------
# Group divisible designs and composition

@dataclass(frozen=True)
class Gdd:
    v: int
    k: int
    groups: tuple[tuple[int, ...], ...]
    blocks: tuple[tuple[int, ...], ...]

    @property
    def group_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(g) for g in self.groups))

    def check(self) -> None:
        seen = sorted(p for g in self.groups for p in g)
        if seen != list(range(self.v)):
            raise ConstructionError("groups do not partition the point set")
        cov = PairCoverage(self.v)
        for g in self.groups:
            for i in range(len(g)):
                for j in range(i + 1, len(g)):
                    cov.add(g[i], g[j])
        group_of = {}
        for gi, g in enumerate(self.groups):
            for p in g:
                group_of[p] = gi
        for block in self.blocks:
            if len(set(block)) != self.k:
                raise ConstructionError(f"block {block} is not a {self.k}-set")
            if len({group_of[p] for p in block}) != self.k:
                raise ConstructionError(f"block {block} meets a group twice")
            for i in range(self.k):
                for j in range(i + 1, self.k):
                    if cov.add(block[i], block[j]) > 1:
                        raise ConstructionError(
                            f"pair ({block[i]},{block[j]}) covered twice "
                            "(group/block overlap or repeated block)")
        for x in range(self.v):
            for y in range(x + 1, self.v):
                if cov.count(x, y) != 1:
                    raise ConstructionError(f"pair ({x},{y}) uncovered")


def td3(g: int) -> Gdd:
    """Transversal design TD(3,g) from the addition table of Z_g."""
    if g < 2:
        raise ConstructionError(f"group size must be >= 2, got {g}")
    groups = tuple(tuple(range(i * g, (i + 1) * g)) for i in range(3))
    blocks = tuple((i, g + j, 2 * g + (i + j) % g)
                   for i in range(g) for j in range(g))
    gdd = Gdd(v=3 * g, k=3, groups=groups, blocks=blocks)
    gdd.check()
    return gdd


def degenerate_pent(k: int) -> Design:
    """PENT(k,1): two disjoint k-lines, mutually opposite."""
    if k < 2:
        raise ConstructionError(f"k must be >= 2, got {k}")
    return Design.make(v=2 * k, k=k,
                       lines=[tuple(range(k)), tuple(range(k, 2 * k))],
                       r_claimed=1, kind="pent")


def gdd_compose(gdd: Gdd, parts: Sequence[tuple[int, Design]]) -> Design:
    """Overlay one pentagonal geometry per group and adjoin the GDD blocks.

    Part points are relabeled onto their group in ascending point order.
    The result is fully re-verified rather than trusted.
    """
    gdd.check()
    by_group = dict(parts)
    if sorted(by_group) != list(range(len(gdd.groups))):
        raise ConstructionError("need exactly one part design per group")
    lines = list(gdd.blocks)
    for gi, group in enumerate(gdd.groups):
        part = by_group[gi]
        if part.k != gdd.k:
            raise ConstructionError(
                f"part for group {gi} has k={part.k}, GDD has k={gdd.k}")
        if part.v != len(group):
            raise ConstructionError(
                f"group {gi} has {len(group)} points but part has v={part.v}")
        ordered = sorted(group)
        lines += [tuple(ordered[p] for p in line) for line in part.lines]
    result = Design.make(v=gdd.v, k=gdd.k, lines=lines, kind="pent")
    report = verify_pentagonal(result)
    if not report.ok:
        raise ConstructionError(
            f"composition is not pentagonal: {report.violations[:3]}")
    return result


# ---------------------------------------------------------------------------
# Ingredient file parsers

def parse_sts(text: str) -> Sts:
    v = None
    triples = []
    for key, value in records(text):
        if key == "kind":
            if value != "sts":
                raise ParseError(f"expected kind sts, got {value!r}")
        elif key == "v":
            v = int(value)
        elif key == "triple":
            triples.append(tuple(sorted(int(p) for p in value.split())))
        else:
            raise ParseError(f"unknown field {key!r} in sts file")
    if v is None:
        raise ParseError("sts file missing 'v:'")
    sts = Sts(v=v, triples=tuple(sorted(triples)))
    sts.check()
    return sts


def parse_pbd(text: str) -> Pbd:
    v = None
    distinguished = None
    triples = []
    for key, value in records(text):
        if key == "kind":
            if value != "pbd":
                raise ParseError(f"expected kind pbd, got {value!r}")
        elif key == "v":
            v = int(value)
        elif key == "distinguished":
            distinguished = tuple(sorted(int(p) for p in value.split()))
        elif key == "triple":
            triples.append(tuple(sorted(int(p) for p in value.split())))
        else:
            raise ParseError(f"unknown field {key!r} in pbd file")
    if v is None or distinguished is None:
        raise ParseError("pbd file missing 'v:' or 'distinguished:'")
    pbd = Pbd(v=v, distinguished=distinguished, triples=tuple(sorted(triples)))
    pbd.check()
    return pbd


def parse_gdd(text: str) -> Gdd:
    v = None
    k = None
    groups = []
    blocks = []
    for key, value in records(text):
        if key == "kind":
            if value != "gdd":
                raise ParseError(f"expected kind gdd, got {value!r}")
        elif key == "v":
            v = int(value)
        elif key == "k":
            k = int(value)
        elif key == "group":
            groups.append(tuple(sorted(int(p) for p in value.split())))
        elif key == "block":
            blocks.append(tuple(sorted(int(p) for p in value.split())))
        else:
            raise ParseError(f"unknown field {key!r} in gdd file")
    if v is None or k is None:
        raise ParseError("gdd file missing 'v:' or 'k:'")
    gdd = Gdd(v=v, k=k, groups=tuple(groups), blocks=tuple(sorted(blocks)))
    gdd.check()
    return gdd


def serialize_gdd(gdd: Gdd) -> str:
    out = ["kind: gdd", f"v: {gdd.v}", f"k: {gdd.k}"]
    out += ["group: " + " ".join(str(p) for p in g) for g in gdd.groups]
    out += ["block: " + " ".join(str(p) for p in b) for b in gdd.blocks]
    return "\n".join(out) + "\n"
