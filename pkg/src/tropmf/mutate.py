"""Adjacent-line swaps and exact verification of polytope mutations.

For an adjacent pair (i, j) the swap data is a pair of integer 3 x n
matrices: w is supported on columns i and j, and f puts +1 in row 1 of
every green or yellow column and -1 in row 2 of columns i, j and the
green or yellow ones.  The piecewise map q -> q - min(0, <q, f>) w
fixes everything on the nonnegative side of f and shears the other
side.  A certificate records, for one swap:

  k1  every polytope vertex pairs with f to -1, 0, or 1;
  k2  the map sends the vertex set exactly onto the swapped field's;
  k3  for each vertex pair with f-values (-1, +1) the midpoint lies in
      the swapped polytope (equivalent to: the image of the polytope is
      contained in the hull of the image vertices);
  k4  the same with the two polytopes exchanged;
  k5  a witness table for the row-swap patterns, with an exhaustive
      fallback over f-value-0 vertex pairs.

Verdicts: VERIFIED (k1-k4 pass), REFUTED (a battery fails although the
star condition holds), INAPPLICABLE (the swap hypothesis is unmet: not
generic, not adjacent, a boundary apex, no workable epsilon, or a
two-sided swap whose star condition fails).  The swap itself is found
by a halving search on how far line i moves past line j, accepted only
when the induced field changes by exactly the red-region flips.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction

from .arrange import Arrangement, TiedX, apexes, x_order
from .mfcore import (MatchingField, Tableau, TieError, WeightMatrix,
                     genericity, induce, mf_diff, weight_matrix_to_text)
from .polytope import (LatticePoint, VertexSet, add, lattice_point, member,
                       midpoint, pair, scale, tableau_of, vertices)
from .regions import (Boundary, NotAdjacent, Region, RegionAssignment,
                      StarReport, classify, star)


class NotSwappable(ValueError):
    """No horizontal move of line i past line j realizes the exact flip."""


class PatternMismatch(ValueError):
    """A red-region triple does not carry the (j, i, k) tableau."""

    def __init__(self, index: int):
        self.index = index
        super().__init__("red line %d: triple does not place j over i" % index)


class SlabViolation(ValueError):
    """A vertex pairs with f outside {-1, 0, 1}."""


@dataclass(frozen=True)
class MutationData:
    """The pair (w, f) plus the region groups behind f."""

    i: int
    j: int
    w: LatticePoint
    f: LatticePoint
    group_red: frozenset
    group_two: frozenset
    group_three: frozenset


@dataclass(frozen=True)
class WitnessEntry:
    u: Tableau
    v: Tableau
    kind: str            # case1 / case2 / case3 / search / none
    t: Tableau | None
    t2: Tableau | None


@dataclass
class MutationCertificate:
    digest: str
    n: int
    i: int
    j: int
    verdict: str                      # VERIFIED / REFUTED / INAPPLICABLE
    reason: str | None = None
    case: str | None = None
    kind: str | None = None
    star: StarReport | None = None
    epsilon: Fraction | None = None
    matrix_after: WeightMatrix | None = None
    order_before: tuple | None = None
    order_after: tuple | None = None
    data: MutationData | None = None
    diff: list = field(default_factory=list)
    images: list = field(default_factory=list)
    k1: bool | None = None
    k2: bool | None = None
    k3: bool | None = None
    k3_failures: list = field(default_factory=list)
    k4: bool | None = None
    k4_failures: list = field(default_factory=list)
    witnesses: list | None = None


def build_wf(A: Arrangement, i: int, j: int, R: RegionAssignment) -> MutationData:
    """Mutation data from a finished region classification."""
    n = A.n
    group_red = R.group(Region.RED)
    group_two = R.group(Region.GREEN, Region.YELLOW)
    group_three = R.group(Region.PURPLE)
    wrows = [[0] * n for _ in range(3)]
    wrows[0][i - 1], wrows[1][i - 1] = 1, -1
    wrows[0][j - 1], wrows[1][j - 1] = -1, 1
    frows = [[0] * n for _ in range(3)]
    for k in group_two:
        frows[0][k - 1] = 1
        frows[1][k - 1] = -1
    frows[1][i - 1] = -1
    frows[1][j - 1] = -1
    return MutationData(i=i, j=j, w=lattice_point(wrows), f=lattice_point(frows),
                        group_red=group_red, group_two=group_two,
                        group_three=group_three)


def tropical_map(q: LatticePoint, D: MutationData) -> LatticePoint:
    """q - min(0, <q, f>) * w; the identity where q pairs nonnegatively
    with f, a shear by w where it pairs negatively."""
    value = pair(q, D.f)
    if value >= 0:
        return lattice_point(q)
    return add(q, scale(-value, D.w))


def expected_flip(L: MatchingField, i: int, j: int, R: RegionAssignment) -> MatchingField:
    """The field after the swap, predicted from the red group: each
    triple {i, j, k} with k red swaps its first two rows."""
    assignment = dict(L.assignment)
    for k in sorted(R.group(Region.RED)):
        T = tuple(sorted((i, j, k)))
        tab = assignment[T]
        if not (tab[0] == j and tab[1] == i):
            raise PatternMismatch(k)
        assignment[T] = (i, j, tab[2])
    return MatchingField(L.n, assignment)


def swap(M: WeightMatrix, i: int, j: int):
    """Move line i's apex horizontally to just past line j's.

    Halving search over the landing offset: the move is accepted only
    when the result is generic, the x order is the old one with i and j
    transposed, and the induced field equals the red-flip prediction.
    A fixed landing spot can silently flip extra triples by crossing
    other lines' rays; the field check makes the hypothesis executable.
    """
    report = genericity(M)
    if not report.ok:
        raise TieError(report.offending[0])
    A = apexes(M)
    order = x_order(A)
    ai, aj = A.apex(i)[0], A.apex(j)[0]
    if not ai < aj:
        raise NotAdjacent("line %d is not left of line %d" % (i, j))
    pi, pj = order.index(i), order.index(j)
    if pj != pi + 1:
        raise NotAdjacent("lines %d and %d are not adjacent" % (i, j))
    L = induce(M)
    R = classify(A, i, j)
    expected = expected_flip(L, i, j, R)
    if pj + 1 < A.n:
        gap = A.apex(order[pj + 1])[0] - aj
    else:
        gap = Fraction(1)
    target = list(order)
    target[pi], target[pj] = target[pj], target[pi]
    target = tuple(target)
    eps = gap
    m1i = M.entry(1, i)
    for _ in range(64):
        eps = eps / 2
        M2 = M.with_entry(2, i, m1i + aj + eps)
        if not genericity(M2).ok:
            continue
        try:
            order2 = x_order(apexes(M2))
        except TiedX:
            continue
        if order2 != target:
            continue
        if induce(M2) == expected:
            return M2, eps
    raise NotSwappable("no landing offset in (0, %s) realizes the swap of "
                       "lines %d and %d" % (gap, i, j))


def _complement_in_sum(u: Tableau, v: Tableau, t: Tableau) -> Tableau | None:
    """The tableau t2 with t + t2 = u + v rowwise, if one exists."""
    out = []
    for r in range(3):
        if t[r] == u[r]:
            out.append(v[r])
        elif t[r] == v[r]:
            out.append(u[r])
        else:
            return None
    return tuple(out)


def witness_table(P: VertexSet, D: MutationData, R: RegionAssignment) -> list:
    """Witness search for every (f = -1, f = +1) vertex pair.

    Tries the row-swap pattern named by the +1 vertex's third row (row-1
    swap unless the third row is j, then row-2 swap), then searches all
    pairs of f-value-0 vertices summing to u + v.  A 'none' entry is
    reported but is not by itself a refutation; the midpoint batteries
    are the decisive test.
    """
    fvals = {}
    for p in P:
        value = pair(D.f, p)
        if value not in (-1, 0, 1):
            raise SlabViolation("vertex %r pairs to %s" % (tableau_of(p), value))
        fvals[p] = value
    neg = sorted(tableau_of(p) for p, v in fvals.items() if v == -1)
    pos = sorted(tableau_of(p) for p, v in fvals.items() if v == 1)
    zeros = sorted(tableau_of(p) for p, v in fvals.items() if v == 0)
    zero_set = set(zeros)
    entries = []
    for u in neg:
        for v in pos:
            if v[2] == D.i:
                kind = "case2"
            elif v[2] == D.j:
                kind = "case3"
            else:
                kind = "case1"
            if kind == "case3":
                t, t2 = (u[0], v[1], u[2]), (v[0], u[1], v[2])
            else:
                t, t2 = (v[0], u[1], u[2]), (u[0], v[1], v[2])
            if t in zero_set and t2 in zero_set:
                entries.append(WitnessEntry(u, v, kind, t, t2))
                continue
            hit = None
            for t in zeros:
                t2 = _complement_in_sum(u, v, t)
                if t2 is not None and t2 in zero_set:
                    hit = (t, t2)
                    break
            if hit:
                entries.append(WitnessEntry(u, v, "search", hit[0], hit[1]))
            else:
                entries.append(WitnessEntry(u, v, "none", None, None))
    return entries


def matrix_digest(M: WeightMatrix) -> str:
    return hashlib.sha256(weight_matrix_to_text(M).encode()).hexdigest()


def certify(M: WeightMatrix, i: int, j: int) -> MutationCertificate:
    """Run the whole pipeline for one adjacent pair and record everything.

    The pair is reoriented so i is the left line.  Early failures
    (genericity, adjacency, boundary apexes, unswappable pairs) yield
    INAPPLICABLE certificates carrying whatever was computed by then.
    """
    if i == j or not (1 <= i <= M.n and 1 <= j <= M.n):
        raise ValueError("bad pair (%d, %d) for %d columns" % (i, j, M.n))
    cert = MutationCertificate(digest=matrix_digest(M), n=M.n, i=i, j=j,
                               verdict="INAPPLICABLE")
    report = genericity(M)
    if not report.ok:
        cert.reason = "not generic: tie at triple %d %d %d" % report.offending[0]
        return cert
    A = apexes(M)
    try:
        order = x_order(A)
    except TiedX as e:
        cert.reason = str(e)
        return cert
    if A.apex(i)[0] > A.apex(j)[0]:
        i, j = j, i
        cert.i, cert.j = i, j
    cert.order_before = order
    try:
        R = classify(A, i, j)
    except (NotAdjacent, Boundary) as e:
        cert.reason = str(e)
        return cert
    S = star(A, i, j)
    cert.star = S
    cert.case = R.case.value
    D = build_wf(A, i, j, R)
    cert.data = D
    L = induce(M)
    V = vertices(L)
    fvals = {p: pair(D.f, p) for p in V}
    if not D.group_red:
        cert.kind = "NOOP"
    elif all(v >= 0 for v in fvals.values()) or all(v <= 0 for v in fvals.values()):
        cert.kind = "SHEAR"
    else:
        cert.kind = "MUTATION"
    cert.k1 = all(v in (-1, 0, 1) for v in fvals.values())
    cert.witnesses = witness_table(V, D, R)
    try:
        M2, eps = swap(M, i, j)
    except (NotSwappable, PatternMismatch) as e:
        cert.reason = str(e)
        return cert
    cert.epsilon = eps
    cert.matrix_after = M2
    cert.order_after = x_order(apexes(M2))
    L2 = induce(M2)
    cert.diff = mf_diff(L, L2)
    V2 = vertices(L2)
    images = {p: tropical_map(p, D) for p in V}
    cert.images = sorted((tableau_of(p), tableau_of(images[p])) for p in V)
    cert.k2 = set(images.values()) == V2.points
    neg = sorted((p for p, v in fvals.items() if v == -1), key=tableau_of)
    pos = sorted((p for p, v in fvals.items() if v == 1), key=tableau_of)
    cert.k3_failures = [(tableau_of(u), tableau_of(v))
                        for u in neg for v in pos
                        if not member(midpoint(u, v), V2)]
    cert.k3 = not cert.k3_failures
    fvals2 = {p: pair(D.f, p) for p in V2}
    neg2 = sorted((p for p, v in fvals2.items() if v == -1), key=tableau_of)
    pos2 = sorted((p for p, v in fvals2.items() if v == 1), key=tableau_of)
    cert.k4_failures = [(tableau_of(u), tableau_of(v))
                        for u in neg2 for v in pos2
                        if not member(midpoint(u, v), V)]
    cert.k4 = not cert.k4_failures
    if cert.kind == "MUTATION" and not S.overall:
        cert.verdict = "INAPPLICABLE"
        cert.reason = "star condition fails for a two-sided swap"
    elif cert.k1 and cert.k2 and cert.k3 and cert.k4:
        cert.verdict = "VERIFIED"
    else:
        cert.verdict = "REFUTED"
    return cert


# ---------------------------------------------------------------------------
# certificate text format

def _opt(value) -> str:
    return "-" if value is None else str(value)


def _ints(seq) -> str:
    seq = list(seq)
    return " ".join(str(x) for x in seq) if seq else "-"


def _tab(t: Tableau | None) -> str:
    return "*" if t is None else "%d %d %d" % t


def _flag(value: bool | None) -> str:
    if value is None:
        return "-"
    return "pass" if value else "fail"


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _matrix_lines(M: WeightMatrix | None, key: str) -> list:
    if M is None:
        return ["%s: -" % key]
    lines = ["%s:" % key]
    lines.extend("  " + ln for ln in weight_matrix_to_text(M).splitlines())
    return lines


def _point_lines(p: LatticePoint, key: str) -> list:
    lines = ["%s:" % key]
    for row in p:
        lines.append("  " + " ".join(str(x) for x in row))
    return lines


def certificate_to_text(c: MutationCertificate) -> str:
    out = ["CERTIFICATE",
           "version: 1",
           "digest: %s" % c.digest,
           "n: %d" % c.n,
           "pair: %d %d" % (c.i, c.j),
           "case: %s" % _opt(c.case),
           "kind: %s" % _opt(c.kind),
           "verdict: %s" % c.verdict,
           "reason: %s" % _opt(c.reason),
           "STAR",
           "present: %s" % _bool(c.star is not None)]
    if c.star is not None:
        s = c.star
        out += ["a: %s" % _bool(s.a), "b: %s" % _bool(s.b),
                "c: %s" % _bool(s.c), "d: %s" % _bool(s.d),
                "overall: %s" % _bool(s.overall),
                "red: %s" % _ints(s.red),
                "blue-olive: %s" % _ints(s.blue_olive),
                "yellow-green: %s" % _ints(s.yellow_green),
                "red-purple: %s" % _ints(s.red_purple)]
    out.append("SWAP")
    out.append("epsilon: %s" % _opt(c.epsilon))
    out.append("order-before: %s" % (_ints(c.order_before) if c.order_before else "-"))
    out.append("order-after: %s" % (_ints(c.order_after) if c.order_after else "-"))
    out.extend(_matrix_lines(c.matrix_after, "matrix-after"))
    out.append("WF")
    out.append("present: %s" % _bool(c.data is not None))
    if c.data is not None:
        out.append("group-1: %s" % _ints(sorted(c.data.group_red)))
        out.append("group-2: %s" % _ints(sorted(c.data.group_two)))
        out.append("group-3: %s" % _ints(sorted(c.data.group_three)))
        out.extend(_point_lines(c.data.w, "w"))
        out.extend(_point_lines(c.data.f, "f"))
    out.append("DIFF")
    out.append("count: %d" % len(c.diff))
    for T, before, after in c.diff:
        out.append("%d %d %d : %s -> %s" % (T + (_tab(before), _tab(after))))
    out.append("IMAGES")
    out.append("count: %d" % len(c.images))
    for src, dst in c.images:
        out.append("%s -> %s" % (_tab(src), _tab(dst)))
    out.append("CHECKS")
    out.append("k1-slab: %s" % _flag(c.k1))
    out.append("k2-vertex-image: %s" % _flag(c.k2))
    out.append("k3-forward-midpoints: %s" % _flag(c.k3))
    out.append("k3-fail-count: %d" % len(c.k3_failures))
    for u, v in c.k3_failures:
        out.append("k3-fail: %s | %s" % (_tab(u), _tab(v)))
    out.append("k4-backward-midpoints: %s" % _flag(c.k4))
    out.append("k4-fail-count: %d" % len(c.k4_failures))
    for u, v in c.k4_failures:
        out.append("k4-fail: %s | %s" % (_tab(u), _tab(v)))
    out.append("WITNESSES")
    out.append("present: %s" % _bool(c.witnesses is not None))
    if c.witnesses is not None:
        out.append("count: %d" % len(c.witnesses))
        for e in c.witnesses:
            if e.kind == "none":
                out.append("%s | %s : none" % (_tab(e.u), _tab(e.v)))
            else:
                out.append("%s | %s : %s : %s + %s"
                           % (_tab(e.u), _tab(e.v), e.kind, _tab(e.t), _tab(e.t2)))
    out.append("END")
    return "\n".join(out) + "\n"


class _Reader:
    def __init__(self, lines):
        self.lines = lines
        self.pos = 0

    def take(self):
        ln = self.lines[self.pos]
        self.pos += 1
        return ln

    def expect(self, literal):
        ln = self.take()
        if ln != literal:
            raise ValueError("expected %r, got %r" % (literal, ln))

    def value(self, key):
        ln = self.take()
        prefix = key + ":"
        if not ln.startswith(prefix):
            raise ValueError("expected key %r, got %r" % (key, ln))
        return ln[len(prefix):].strip()


def _parse_tab(text: str) -> Tableau | None:
    if text == "*":
        return None
    return tuple(int(t) for t in text.split())


def _parse_ints(text: str) -> tuple:
    if text == "-":
        return ()
    return tuple(int(t) for t in text.split())


def _parse_flag(text: str) -> bool | None:
    return {"pass": True, "fail": False, "-": None}[text]


def parse_certificate(text: str) -> MutationCertificate:
    """Inverse of certificate_to_text (on its exact output format)."""
    rd = _Reader(text.splitlines())
    rd.expect("CERTIFICATE")
    if rd.value("version") != "1":
        raise ValueError("unknown certificate version")
    digest = rd.value("digest")
    n = int(rd.value("n"))
    i, j = (int(t) for t in rd.value("pair").split())
    case = rd.value("case")
    kind = rd.value("kind")
    verdict = rd.value("verdict")
    reason = rd.value("reason")
    cert = MutationCertificate(digest=digest, n=n, i=i, j=j, verdict=verdict,
                               reason=None if reason == "-" else reason,
                               case=None if case == "-" else case,
                               kind=None if kind == "-" else kind)
    rd.expect("STAR")
    if rd.value("present") == "true":
        a = rd.value("a") == "true"
        b = rd.value("b") == "true"
        cc = rd.value("c") == "true"
        d = rd.value("d") == "true"
        rd.value("overall")
        cert.star = StarReport(a=a, b=b, c=cc, d=d,
                               red=_parse_ints(rd.value("red")),
                               blue_olive=_parse_ints(rd.value("blue-olive")),
                               yellow_green=_parse_ints(rd.value("yellow-green")),
                               red_purple=_parse_ints(rd.value("red-purple")))
    rd.expect("SWAP")
    eps = rd.value("epsilon")
    cert.epsilon = None if eps == "-" else Fraction(eps)
    before = rd.value("order-before")
    cert.order_before = None if before == "-" else _parse_ints(before)
    after = rd.value("order-after")
    cert.order_after = None if after == "-" else _parse_ints(after)
    head = rd.value("matrix-after")
    if head != "-":
        rows = [rd.take().strip() for _ in range(4)]
        cert.matrix_after = WeightMatrix.from_rows(
            [[Fraction(t) for t in row.split()] for row in rows[1:]])
    rd.expect("WF")
    if rd.value("present") == "true":
        g1 = frozenset(_parse_ints(rd.value("group-1")))
        g2 = frozenset(_parse_ints(rd.value("group-2")))
        g3 = frozenset(_parse_ints(rd.value("group-3")))
        rd.value("w")
        w = lattice_point([[Fraction(t) for t in rd.take().split()] for _ in range(3)])
        rd.value("f")
        f = lattice_point([[Fraction(t) for t in rd.take().split()] for _ in range(3)])
        cert.data = MutationData(i=i, j=j, w=w, f=f, group_red=g1,
                                 group_two=g2, group_three=g3)
    rd.expect("DIFF")
    for _ in range(int(rd.value("count"))):
        ln = rd.take()
        left, _, rest = ln.partition(" : ")
        before_t, _, after_t = rest.partition(" -> ")
        cert.diff.append((tuple(int(t) for t in left.split()),
                          _parse_tab(before_t), _parse_tab(after_t)))
    rd.expect("IMAGES")
    for _ in range(int(rd.value("count"))):
        src, _, dst = rd.take().partition(" -> ")
        cert.images.append((_parse_tab(src), _parse_tab(dst)))
    rd.expect("CHECKS")
    cert.k1 = _parse_flag(rd.value("k1-slab"))
    cert.k2 = _parse_flag(rd.value("k2-vertex-image"))
    cert.k3 = _parse_flag(rd.value("k3-forward-midpoints"))
    for _ in range(int(rd.value("k3-fail-count"))):
        u, _, v = rd.value("k3-fail").partition(" | ")
        cert.k3_failures.append((_parse_tab(u), _parse_tab(v)))
    cert.k4 = _parse_flag(rd.value("k4-backward-midpoints"))
    for _ in range(int(rd.value("k4-fail-count"))):
        u, _, v = rd.value("k4-fail").partition(" | ")
        cert.k4_failures.append((_parse_tab(u), _parse_tab(v)))
    rd.expect("WITNESSES")
    if rd.value("present") == "true":
        cert.witnesses = []
        for _ in range(int(rd.value("count"))):
            ln = rd.take()
            pairs, _, rest = ln.partition(" : ")
            u, _, v = pairs.partition(" | ")
            if rest == "none":
                cert.witnesses.append(WitnessEntry(_parse_tab(u), _parse_tab(v),
                                                   "none", None, None))
            else:
                kind, _, wit = rest.partition(" : ")
                t, _, t2 = wit.partition(" + ")
                cert.witnesses.append(WitnessEntry(_parse_tab(u), _parse_tab(v),
                                                   kind, _parse_tab(t), _parse_tab(t2)))
    rd.expect("END")
    return cert
