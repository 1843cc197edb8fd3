"""Partial bijections (charts) on a finite ground set, and their closure.

A chart is stored as a full map tuple with -1 marking points outside the
domain.  Composition is left to right: x(f*g) = (xf)g, defined where xf
lands in the domain of g.
"""

from .errors import InputError, ResourceError
from .tables import FiniteSemigroup


class PartialBijection:
    """An injective partial map on the ground set {0, ..., ground-1}."""

    __slots__ = ("map",)

    def __init__(self, ground, entries=()):
        m = [-1] * ground
        seen_targets = set()
        for s, t in entries:
            if not (0 <= s < ground and 0 <= t < ground):
                raise InputError(f"entry {s}->{t} is outside ground {ground}")
            if m[s] != -1:
                raise InputError(f"source {s} mapped twice")
            if t in seen_targets:
                raise InputError(f"target {t} hit twice; chart must be injective")
            m[s] = t
            seen_targets.add(t)
        object.__setattr__(self, "map", tuple(m))

    def __setattr__(self, name, value):
        raise AttributeError("PartialBijection is immutable")

    @classmethod
    def from_map(cls, map_tuple):
        ground = len(map_tuple)
        return cls(ground, [(s, t) for s, t in enumerate(map_tuple) if t != -1])

    @classmethod
    def identity(cls, ground, subset=None):
        if subset is None:
            subset = range(ground)
        return cls(ground, [(x, x) for x in subset])

    @classmethod
    def empty(cls, ground):
        return cls(ground, ())

    @property
    def ground(self):
        return len(self.map)

    @property
    def entries(self):
        return tuple((s, t) for s, t in enumerate(self.map) if t != -1)

    def domain(self):
        return tuple(s for s, t in enumerate(self.map) if t != -1)

    def image(self):
        return tuple(sorted(t for t in self.map if t != -1))

    def __call__(self, x):
        t = self.map[x]
        if t == -1:
            raise InputError(f"{x} is outside the domain")
        return t

    def compose(self, other):
        """This chart followed by other."""
        if other.ground != self.ground:
            raise InputError("charts live on different ground sets")
        om = other.map
        return PartialBijection.from_map(
            tuple(-1 if t == -1 else om[t] for t in self.map)
        )

    def __mul__(self, other):
        return self.compose(other)

    def invert(self):
        m = [-1] * self.ground
        for s, t in enumerate(self.map):
            if t != -1:
                m[t] = s
        return PartialBijection.from_map(tuple(m))

    def sort_key(self):
        """Canonical order: domain size, then domain, then targets."""
        dom = self.domain()
        return (len(dom), dom, tuple(self.map[s] for s in dom))

    def to_text(self):
        body = ", ".join(f"{s}->{t}" for s, t in self.entries)
        return f"{self.ground}; {body}"

    @classmethod
    def from_text(cls, text):
        head, _, body = text.partition(";")
        try:
            ground = int(head.strip())
        except ValueError:
            raise InputError(f"chart text must start with the ground size: {text!r}")
        entries = []
        for piece in body.split(","):
            piece = piece.strip()
            if not piece:
                continue
            src, arrow, tgt = piece.partition("->")
            if not arrow:
                raise InputError(f"bad chart entry {piece!r}")
            try:
                entries.append((int(src), int(tgt)))
            except ValueError:
                raise InputError(f"bad chart entry {piece!r}")
        return cls(ground, entries)

    def token(self):
        """Compact whitespace-free rendering usable as an element name."""
        if not self.entries:
            return "~"
        return ",".join(f"{s}>{t}" for s, t in self.entries)

    def __eq__(self, other):
        if not isinstance(other, PartialBijection):
            return NotImplemented
        return self.map == other.map

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return f"PartialBijection({self.to_text()!r})"


def closure(generators, include_inverses=False, budget=100000):
    """Close a set of charts under composition (and optionally inversion).

    Breadth first from the generators: each round composes every known
    chart with the charts discovered in the previous round, appending the
    new ones in canonical chart order.  Inversion closure reduces to adding
    the generator inverses because (f*g)^-1 = g^-1 * f^-1.

    Returns (semigroup, elements): the abstract Cayley table over discovery
    indices, and the charts in index order.
    """
    gens = list(generators)
    if not gens:
        raise InputError("closure needs at least one generator")
    ground = gens[0].ground
    for g in gens:
        if g.ground != ground:
            raise InputError("generators live on different ground sets")
    if include_inverses:
        gens = gens + [g.invert() for g in gens]
    elements = []
    index = {}
    for g in gens:
        if g not in index:
            index[g] = len(elements)
            elements.append(g)
    frontier = list(elements)
    while frontier:
        fresh = set()
        for f in frontier:
            for g in elements:
                fresh.add(f.compose(g))
                fresh.add(g.compose(f))
        new = sorted((c for c in fresh if c not in index), key=PartialBijection.sort_key)
        if len(elements) + len(new) > budget:
            raise ResourceError(
                f"closure exceeded the budget of {budget} elements",
                partial_size=len(elements) + len(new),
            )
        for c in new:
            index[c] = len(elements)
            elements.append(c)
        frontier = new
    table = [[index[f.compose(g)] for g in elements] for f in elements]
    names = None
    tokens = [c.token() for c in elements]
    if len(set(tokens)) == len(tokens):
        names = tokens
    semigroup = FiniteSemigroup(table, names=names, check=False)
    return semigroup, tuple(elements)
