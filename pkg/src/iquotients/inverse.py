"""Inverse-semigroup recognition, Brandt semigroups, sigma, properness, E-unitarity."""

from .errors import ConsistencyError, InputError
from .relations import RelationTable, green, is_left_ample, r_star
from .tables import FiniteSemigroup


class InverseSemigroupView:
    """A finite inverse semigroup: a table together with its (unique) inversion map."""

    __slots__ = ("semigroup", "inv")

    def __init__(self, semigroup, inv, check=True):
        inv = tuple(inv)
        if len(inv) != semigroup.order or any(
            not (0 <= v < semigroup.order) for v in inv
        ):
            raise InputError("inversion map must assign an element to each element")
        object.__setattr__(self, "semigroup", semigroup)
        object.__setattr__(self, "inv", inv)
        if check:
            self._validate()

    def __setattr__(self, name, value):
        raise AttributeError("InverseSemigroupView is immutable")

    def _validate(self):
        s = self.semigroup
        for a in range(s.order):
            b = self.inv[a]
            if s.product((a, b, a)) != a or s.product((b, a, b)) != b:
                raise InputError("map is not an inversion at element %d" % a)
        idem = s.idempotents()
        for e in idem:
            for f in idem:
                if s.mul(e, f) != s.mul(f, e):
                    raise InputError(
                        "idempotents %d and %d do not commute; not inverse" % (e, f)
                    )

    @property
    def order(self):
        return self.semigroup.order

    def mul(self, a, b):
        return self.semigroup.mul(a, b)

    def invert(self, a):
        return self.inv[a]

    def idempotents(self):
        return self.semigroup.idempotents()

    def __eq__(self, other):
        return (
            isinstance(other, InverseSemigroupView)
            and self.semigroup == other.semigroup
            and self.inv == other.inv
        )

    def __hash__(self):
        return hash((self.semigroup, self.inv))

    def __repr__(self):
        return "InverseSemigroupView(order=%d)" % self.order


class InverseRecognition:
    """Result of recognize_inverse: the view on success, a reason and witness on failure."""

    __slots__ = ("ok", "view", "reason", "witness")

    def __init__(self, ok, view=None, reason=None, witness=None):
        self.ok = ok
        self.view = view
        self.reason = reason
        self.witness = witness

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "InverseRecognition(ok=True)"
        return "InverseRecognition(ok=False, reason=%r, witness=%r)" % (
            self.reason,
            self.witness,
        )


def recognize_inverse(s):
    """Decide whether a finite semigroup is inverse and compute its inversion map.

    Inverse means every element has at least one inverse and idempotents
    commute; together these force the inverse to be unique.
    """
    idem = s.idempotents()
    for e in idem:
        for f in idem:
            if s.mul(e, f) != s.mul(f, e):
                return InverseRecognition(
                    False, reason="idempotents_dont_commute", witness=(e, f)
                )
    inv = []
    for a in range(s.order):
        partners = [
            x
            for x in range(s.order)
            if s.product((a, x, a)) == a and s.product((x, a, x)) == x
        ]
        if not partners:
            return InverseRecognition(False, reason="not_regular", witness=(a,))
        if len(partners) > 1:
            raise ConsistencyError(
                "element %d has two inverses %d and %d despite commuting idempotents"
                % (a, partners[0], partners[1])
            )
        inv.append(partners[0])
    return InverseRecognition(True, view=InverseSemigroupView(s, inv, check=False))


class BrandtSemigroup:
    """A Brandt semigroup over a group: a zero plus I x G x I coordinate triples."""

    __slots__ = ("view", "group", "index_size", "coords", "index_of")

    def __init__(self, group, index_size):
        if not isinstance(index_size, int) or isinstance(index_size, bool) or index_size < 1:
            raise InputError("index size must be a positive integer, got %r" % (index_size,))
        if not group.is_group():
            raise InputError("component is not a group")
        k = group.order
        coords = [None]
        for i in range(index_size):
            for g in range(k):
                for j in range(index_size):
                    coords.append((i, g, j))
        index_of = {c: idx for idx, c in enumerate(coords) if c is not None}
        n = len(coords)
        table = [[0] * n for _ in range(n)]
        for a in range(1, n):
            i, g, j = coords[a]
            for b in range(1, n):
                kk, h, l = coords[b]
                if j == kk:
                    table[a][b] = index_of[(i, group.mul(g, h), l)]
        ginv = [group.inverse_of(g) for g in range(k)]
        inv = [0] + [index_of[(j, ginv[g], i)] for (i, g, j) in coords[1:]]
        names = ["0"]
        for i, g, j in coords[1:]:
            names.append("(%d,%s,%d)" % (i, group.element_name(g), j))
        semigroup = FiniteSemigroup(table, names=names, check=False)
        object.__setattr__(self, "view", InverseSemigroupView(semigroup, inv, check=False))
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "index_size", index_size)
        object.__setattr__(self, "coords", tuple(coords))
        object.__setattr__(self, "index_of", dict(index_of))

    def __setattr__(self, name, value):
        raise AttributeError("BrandtSemigroup is immutable")

    @property
    def semigroup(self):
        return self.view.semigroup

    @property
    def zero(self):
        return 0

    def element(self, i, g, j):
        return self.index_of[(i, g, j)]

    def row_subsemigroup(self, i):
        """{0} together with all triples whose first coordinate is i, as a member set."""
        if not 0 <= i < self.index_size:
            raise InputError("row index out of range")
        return frozenset([0]) | frozenset(
            idx for idx, c in enumerate(self.coords) if c is not None and c[0] == i
        )

    def coordinate_lines(self):
        """The coordinate dictionary, one '(i,g,j) -> index' line per nonzero element."""
        lines = []
        for idx, c in enumerate(self.coords):
            if c is None:
                continue
            i, g, j = c
            lines.append("(%d,%s,%d) -> %d" % (i, self.group.element_name(g), j, idx))
        return lines


def brandt(group, index_size):
    """Build the Brandt semigroup with the given group and index set size."""
    return BrandtSemigroup(group, index_size)


class SigmaResult:
    """The congruence identifying elements with a common left idempotent multiple."""

    __slots__ = ("relation", "classes", "class_of", "quotient")

    def __init__(self, relation, classes, class_of, quotient):
        self.relation = relation
        self.classes = classes
        self.class_of = class_of
        self.quotient = quotient

    def related(self, a, b):
        return self.relation.related(a, b)

    def __repr__(self):
        return "SigmaResult(classes=%d)" % len(self.classes)


def sigma_relation(s):
    """The relation a ~ b iff ea = eb for some idempotent e, with no structure checks."""
    n = s.order
    idem = s.idempotents()
    matrix = [
        [any(s.mul(e, a) == s.mul(e, b) for e in idem) for b in range(n)] for a in range(n)
    ]
    return RelationTable("sigma", matrix)


def sigma(s):
    """The least right cancellative congruence of a left ample semigroup.

    Computed by the direct formula (some idempotent merges the pair), then
    audited: the formula must give a congruence whose quotient is right
    cancellative, which the theory guarantees for left ample input.
    """
    report = is_left_ample(s)
    if not report:
        raise InputError(
            "sigma requires a left ample semigroup; clause %r fails at %r"
            % (report.clause, report.witness)
        )
    rel = sigma_relation(s)
    if not rel.is_equivalence():
        raise ConsistencyError("sigma is not an equivalence on a left ample semigroup")
    n = s.order
    for a in range(n):
        for b in range(n):
            if not rel.related(a, b):
                continue
            for c in range(n):
                if not rel.related(s.mul(c, a), s.mul(c, b)) or not rel.related(
                    s.mul(a, c), s.mul(b, c)
                ):
                    raise ConsistencyError(
                        "sigma is not a congruence on a left ample semigroup"
                    )
    classes = rel.classes()
    class_of = [0] * n
    for ci, cls in enumerate(classes):
        for a in cls:
            class_of[a] = ci
    k = len(classes)
    table = [[0] * k for _ in range(k)]
    for ci, cls in enumerate(classes):
        for cj, cls2 in enumerate(classes):
            table[ci][cj] = class_of[s.mul(cls[0], cls2[0])]
    quotient = FiniteSemigroup(table, check=True)
    for c in range(k):
        seen = {}
        for x in range(k):
            p = quotient.mul(x, c)
            if p in seen:
                raise ConsistencyError(
                    "sigma quotient of a left ample semigroup is not right cancellative"
                )
            seen[p] = x
    return SigmaResult(rel, classes, tuple(class_of), quotient)


def is_proper(s):
    """Whether Rstar meets sigma only on the diagonal (left ample input)."""
    result = sigma(s)
    both = r_star(s).meet(result.relation)
    return both.is_identity()


def is_e_unitary(view):
    """Whether an idempotent left multiple being idempotent forces the element idempotent."""
    s = view.semigroup
    idem = set(s.idempotents())
    for e in idem:
        for a in range(s.order):
            if s.mul(e, a) in idem and a not in idem:
                return False
    return True


def is_bisimple(s):
    """Whether the semigroup has a single D-class."""
    return green(s)["D"].is_universal()


def is_simple(s):
    """Whether the semigroup has a single J-class."""
    return green(s)["J"].is_universal()
