"""Catalan objects: Dyck paths, noncrossing matchings, noncrossing partitions.

The three families are linked by the classical bijections (step pairing,
region reading, interval-part removal, lattice-point labeling), all of which
are implemented here together with the two orders on Dyck paths, dual
partitions (Kreweras complements) and Catalan subsets.

Conventions: indices are 0-based internally and 1-based in every serialized
form.  Matchings on [2n] serialize as "15|26|34" (pairs sorted by left
endpoint; elements comma-separated once n >= 5).  Partitions of [n] serialize
as "12|3" (parts sorted by minimum, same comma rule).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class InputError(ValueError):
    """Raised when an argument violates an operation's precondition."""


def _fmt_group(elements, n):
    if n >= 5:
        return ",".join(str(e) for e in elements)
    return "".join(str(e) for e in elements)


def _parse_group(text):
    if "," in text:
        return tuple(int(p) for p in text.split(","))
    return tuple(int(ch) for ch in text)


@dataclass(frozen=True)
class DyckPath:
    """A Dyck path of semilength n, stored as its 0/1 step vector v(P).

    v[j] == 1 iff step j is an upstep.

    >>> DyckPath.parse("UUDD").heights()
    (0, 1, 2, 1, 0)
    """

    steps: tuple

    def __post_init__(self):
        if len(self.steps) % 2 != 0 or not self.steps:
            raise InputError("a Dyck path needs a positive even number of steps")
        h = 0
        for s in self.steps:
            if s not in (0, 1):
                raise InputError("steps must be 0 (down) or 1 (up)")
            h += 1 if s else -1
            if h < 0:
                raise InputError("path dips below the axis")
        if h != 0:
            raise InputError("path does not return to the axis")

    @property
    def n(self):
        return len(self.steps) // 2

    def heights(self):
        """Heights after 0,1,...,2n steps (length 2n+1)."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (1 if s else -1))
        return tuple(out)

    @staticmethod
    def parse(text):
        try:
            return DyckPath(tuple(1 if c == "U" else 0 for c in text.upper()))
        except InputError:
            raise
        except Exception as exc:  # pragma: no cover
            raise InputError(f"bad Dyck path {text!r}") from exc

    def __str__(self):
        return "".join("U" if s else "D" for s in self.steps)


@dataclass(frozen=True)
class Matching:
    """A perfect matching of {1,...,2n}, stored as a 0-based partner array."""

    partner: tuple

    def __post_init__(self):
        p = self.partner
        if len(p) % 2 != 0:
            raise InputError("matchings live on an even number of points")
        for i, j in enumerate(p):
            if j == i or not 0 <= j < len(p) or p[j] != i:
                raise InputError("partner array is not a fixed-point-free involution")

    @property
    def n(self):
        return len(self.partner) // 2

    def pairs(self):
        """Sorted list of 1-based pairs (a, b) with a < b."""
        return [(i + 1, j + 1) for i, j in enumerate(self.partner) if i < j]

    @staticmethod
    def from_pairs(pairs, n=None):
        pts = [q for p in pairs for q in p]
        size = 2 * n if n is not None else len(pts)
        if sorted(pts) != list(range(1, size + 1)):
            raise InputError(f"pairs {pairs!r} do not match {size} points")
        partner = [0] * size
        for a, b in pairs:
            partner[a - 1] = b - 1
            partner[b - 1] = a - 1
        return Matching(tuple(partner))

    @staticmethod
    def parse(text):
        return Matching.from_pairs([_parse_group(part) for part in text.split("|")])

    def is_noncrossing(self):
        return not any(True for _ in _crossing_quads(self))

    def rotate(self, k=1):
        """Rotate labels by k: point i goes to i+k (mod 2n)."""
        m = len(self.partner)
        partner = [0] * m
        for i, j in enumerate(self.partner):
            partner[(i + k) % m] = (j + k) % m
        return Matching(tuple(partner))

    def __str__(self):
        return "|".join(_fmt_group(p, self.n) for p in self.pairs())


@dataclass(frozen=True)
class NoncrossingPartition:
    """A noncrossing set partition of {1,...,n}; parts sorted by minimum."""

    parts: tuple

    def __post_init__(self):
        seen = sorted(e for part in self.parts for e in part)
        n = len(seen)
        if seen != list(range(1, n + 1)):
            raise InputError("parts must partition {1,...,n}")
        for part in self.parts:
            if tuple(sorted(part)) != part:
                raise InputError("each part must be sorted")
        if list(self.parts) != sorted(self.parts, key=lambda p: p[0]):
            raise InputError("parts must be sorted by minimum")
        block = self.block_index()
        for a, b, c, d in itertools.combinations(range(1, n + 1), 4):
            if block[a] == block[c] and block[b] == block[d] and block[a] != block[b]:
                raise InputError("partition is crossing")

    @property
    def n(self):
        return sum(len(p) for p in self.parts)

    def block_index(self):
        """Map element -> index of its part."""
        out = {}
        for k, part in enumerate(self.parts):
            for e in part:
                out[e] = k
        return out

    @staticmethod
    def from_blocks(blocks):
        parts = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda p: p[0]))
        return NoncrossingPartition(parts)

    @staticmethod
    def parse(text):
        return NoncrossingPartition.from_blocks(
            _parse_group(part) for part in text.split("|")
        )

    def rotate(self, k=1):
        n = self.n
        return NoncrossingPartition.from_blocks(
            [[(e - 1 + k) % n + 1 for e in part] for part in self.parts]
        )

    def __str__(self):
        return "|".join(_fmt_group(p, self.n) for p in self.parts)


@dataclass(frozen=True)
class PathChain:
    """A chain P_1 <= P_2 <= ... <= P_d of Dyck paths of equal semilength."""

    paths: tuple

    def __post_init__(self):
        if not self.paths:
            raise InputError("empty chain")
        for p, q in zip(self.paths, self.paths[1:]):
            if compare(p, q) not in ("below", "equal"):
                raise InputError("paths do not form a chain")

    def __str__(self):
        return ";".join(str(p) for p in self.paths)


# ---------------------------------------------------------------------------
# orders


def compare(p: DyckPath, q: DyckPath):
    """Partial order by pointwise height: below/above/equal/incomparable."""
    if p.n != q.n:
        raise InputError("semilength mismatch")
    hp, hq = p.heights(), q.heights()
    below = all(a <= b for a, b in zip(hp, hq))
    above = all(a >= b for a, b in zip(hp, hq))
    if below and above:
        return "equal"
    if below:
        return "below"
    if above:
        return "above"
    return "incomparable"


def lex_compare(p: DyckPath, q: DyckPath):
    """Total order on v(P) vectors: -1, 0 or 1 as v(P) <, =, > v(Q)."""
    if p.n != q.n:
        raise InputError("semilength mismatch")
    if p.steps < q.steps:
        return -1
    if p.steps > q.steps:
        return 1
    return 0


# ---------------------------------------------------------------------------
# bijections


def _crossing_quads(m: Matching):
    pairs = m.pairs()
    for (a, c), (b, d) in itertools.combinations(pairs, 2):
        if a < b < c < d:
            yield (a, b, c, d)
        elif b < a < d < c:
            yield (b, a, d, c)


def dyck_to_ncm(p: DyckPath) -> Matching:
    """Pair each upstep with the matching downstep at equal height."""
    partner = [0] * (2 * p.n)
    stack = []
    for j, s in enumerate(p.steps):
        if s:
            stack.append(j)
        else:
            i = stack.pop()
            partner[i], partner[j] = j, i
    return Matching(tuple(partner))


def ncm_to_dyck(m: Matching) -> DyckPath:
    """Left endpoints become upsteps."""
    if not m.is_noncrossing():
        raise InputError("matching is crossing")
    return DyckPath(tuple(1 if m.partner[i] > i else 0 for i in range(2 * m.n)))


def ncm_to_ncp(m: Matching) -> NoncrossingPartition:
    """Region reading: label i sits in the gap (2i-1, 2i) of the arc diagram.

    Two labels share a part iff their gaps lie under the same innermost arc.
    """
    if not m.is_noncrossing():
        raise InputError("matching is crossing")
    n = m.n
    innermost = {}  # gap index i (label) -> innermost covering arc or None
    stack = []
    for pos in range(1, 2 * n + 1):
        if m.partner[pos - 1] + 1 > pos:
            stack.append(pos)
        if pos % 2 == 1:
            innermost[(pos + 1) // 2] = stack[-1] if stack else None
        if m.partner[pos - 1] + 1 < pos:
            stack.pop()
    blocks = {}
    for label, arc in innermost.items():
        blocks.setdefault(arc, []).append(label)
    return NoncrossingPartition.from_blocks(blocks.values())


def ncp_to_ncm(sigma: NoncrossingPartition) -> Matching:
    """Inverse region reading by removing interval parts, leftmost first."""
    n = sigma.n
    partner = [0] * (2 * n)
    # active[i] = label occupying slot i; each label owns two consecutive points
    active = list(range(1, n + 1))
    points = {i: (2 * i - 1, 2 * i) for i in range(1, n + 1)}
    remaining = [set(part) for part in sigma.parts]
    while active:
        pos = {lbl: k for k, lbl in enumerate(active)}
        part = None
        for cand in sorted(remaining, key=lambda s: min(s)):
            idx = sorted(pos[l] for l in cand)
            if idx == list(range(idx[0], idx[0] + len(idx))):
                part = cand
                break
        if part is None:  # unreachable for noncrossing input
            raise InputError("no interval part found; partition is crossing")
        labels = sorted(part, key=lambda l: pos[l])
        q = [pt for l in labels for pt in points[l]]
        k = len(labels)
        joins = [(q[0], q[2 * k - 1])]
        joins += [(q[2 * t], q[2 * t + 1]) for t in range(k - 1)]
        for a, b in joins:
            partner[a - 1], partner[b - 1] = b - 1, a - 1
        remaining.remove(part)
        active = [l for l in active if l not in part]
    return Matching(tuple(partner))


def dyck_to_ncp(p: DyckPath) -> NoncrossingPartition:
    """Lattice-point labeling: label i at abscissa 2i-1; i ~ j iff equal
    heights and the path never dips below that height in between."""
    h = p.heights()
    n = p.n
    parts = []
    for i in range(1, n + 1):
        hi = h[2 * i - 1]
        for part in parts:
            j = part[-1]
            if h[2 * j - 1] == hi and all(
                h[x] >= hi for x in range(2 * j - 1, 2 * i)
            ):
                part.append(i)
                break
        else:
            parts.append([i])
    return NoncrossingPartition.from_blocks(parts)


def ncp_to_dyck(sigma: NoncrossingPartition) -> DyckPath:
    return ncm_to_dyck(ncp_to_ncm(sigma))


def dyck_of(x) -> DyckPath:
    if isinstance(x, DyckPath):
        return x
    if isinstance(x, Matching):
        return ncm_to_dyck(x)
    if isinstance(x, NoncrossingPartition):
        return ncp_to_dyck(x)
    raise InputError(f"cannot convert {type(x).__name__} to a Dyck path")


def ncm_of(x) -> Matching:
    if isinstance(x, Matching):
        if not x.is_noncrossing():
            raise InputError("matching is crossing")
        return x
    if isinstance(x, DyckPath):
        return dyck_to_ncm(x)
    if isinstance(x, NoncrossingPartition):
        return ncp_to_ncm(x)
    raise InputError(f"cannot convert {type(x).__name__} to a matching")


def ncp_of(x) -> NoncrossingPartition:
    if isinstance(x, NoncrossingPartition):
        return x
    if isinstance(x, Matching):
        return ncm_to_ncp(x)
    if isinstance(x, DyckPath):
        return dyck_to_ncp(x)
    raise InputError(f"cannot convert {type(x).__name__} to a partition")


def convert(x, target):
    """Convert between 'dyck', 'ncm' and 'ncp' encodings."""
    funcs = {"dyck": dyck_of, "ncm": ncm_of, "ncp": ncp_of}
    if target not in funcs:
        raise InputError(f"unknown target {target!r}")
    return funcs[target](x)


def dual_partition(sigma: NoncrossingPartition) -> NoncrossingPartition:
    """Kreweras complement: i~ and j~ (gaps after i and j) share a part iff
    the labels strictly between them form a union of parts of sigma."""
    n = sigma.n
    block = sigma.block_index()

    def joined(i, j):  # gaps i < j
        between = [(x - 1) % n + 1 for x in range(i + 1, j + 1)]
        inside = set(between)
        return all(
            all(e in inside for e in sigma.parts[block[b]]) for b in between
        )

    # joined() already sees the wrap-around (a circular arc is a union of
    # parts iff its complement is), and it is an equivalence, so one
    # representative per part suffices.
    parts = []
    for i in range(1, n + 1):
        for part in parts:
            if joined(part[-1], i):
                part.append(i)
                break
        else:
            parts.append([i])
    return NoncrossingPartition.from_blocks(parts)


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def all_dyck(n):
    """All Dyck paths of semilength n in lex (v-vector) order."""
    if n < 1:
        raise InputError("n must be >= 1")
    out = []

    def rec(prefix, ups, downs):
        if ups == n and downs == n:
            out.append(DyckPath(tuple(prefix)))
            return
        if downs < ups:
            prefix.append(0)
            rec(prefix, ups, downs + 1)
            prefix.pop()
        if ups < n:
            prefix.append(1)
            rec(prefix, ups + 1, downs)
            prefix.pop()

    rec([], 0, 0)
    return tuple(out)


@lru_cache(maxsize=None)
def all_matchings(n):
    """All (2n-1)!! matchings on [2n], sorted by partner encoding."""
    if n < 1:
        raise InputError("n must be >= 1")
    out = []

    def rec(partner, free):
        if not free:
            out.append(Matching(tuple(partner)))
            return
        i = free[0]
        for j in free[1:]:
            partner[i], partner[j] = j, i
            rec(partner, [k for k in free if k not in (i, j)])
        partner[i] = -1

    rec([-1] * (2 * n), list(range(2 * n)))
    out.sort(key=lambda m: m.partner)
    return tuple(out)


@lru_cache(maxsize=None)
def all_tc(n):
    """All 3-noncrossing matchings on [2n]."""
    from . import crossings as _cr

    return tuple(m for m in all_matchings(n) if _cr.is_k_noncrossing(m, 3))


def all_chains(n, d):
    """All chains of length d in the Dyck path poset, lex order on tuples."""
    if d < 1:
        raise InputError("chain length must be >= 1")
    paths = all_dyck(n)
    below = {
        p: [q for q in paths if compare(p, q) in ("below", "equal")] for p in paths
    }
    out = []

    def rec(chain):
        if len(chain) == d:
            out.append(PathChain(tuple(chain)))
            return
        for q in below[chain[-1]]:
            chain.append(q)
            rec(chain)
            chain.pop()

    for p in paths:
        rec([p])
    return out


def enumerate_objects(n, kind, d=None):
    """Complete listing of Catalan-type objects in canonical order."""
    if n < 1:
        raise InputError("n must be >= 1")
    if kind == "dyck":
        return list(all_dyck(n))
    if kind == "ncm":
        return [dyck_to_ncm(p) for p in all_dyck(n)]
    if kind == "ncp":
        return sorted(
            (dyck_to_ncp(p) for p in all_dyck(n)), key=lambda s: s.parts
        )
    if kind == "matchings":
        return list(all_matchings(n))
    if kind == "tc":
        return list(all_tc(n))
    if kind == "chains":
        if d is None:
            raise InputError("chains enumeration needs d")
        return all_chains(n, d)
    raise InputError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# Catalan subsets


def catalan_subset(p: DyckPath):
    """I(P): sorted (n-1)-subset with {1} u {a+1 : a in I} the upstep slots."""
    ups = [j + 1 for j, s in enumerate(p.steps) if s == 1]
    assert ups[0] == 1
    return [u - 1 for u in ups[1:]]


def is_catalan_subset(i_set, n):
    """Criterion a_i <= 2i on the sorted (n-1)-subset of [2n]."""
    a = sorted(i_set)
    if len(a) != n - 1 or len(set(a)) != n - 1:
        return False
    if any(not 1 <= x <= 2 * n for x in a):
        return False
    return all(x <= 2 * (k + 1) for k, x in enumerate(a))


def path_of_subset(i_set, n) -> DyckPath:
    if not is_catalan_subset(i_set, n):
        raise InputError(f"{sorted(i_set)} is not a Catalan subset for n={n}")
    ups = {1} | {a + 1 for a in i_set}
    return DyckPath(tuple(1 if j in ups else 0 for j in range(1, 2 * n + 1)))
