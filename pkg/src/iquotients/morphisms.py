"""Semigroup morphisms between finite tables, and exhaustive morphism search."""

from .errors import InputError
from .relations import is_left_ample, plus_table
from .tables import FiniteSemigroup


class Morphism:
    """A multiplicative map between two finite semigroups, validated on construction."""

    __slots__ = ("source", "target", "mapping")

    def __init__(self, source, target, mapping, check=True):
        mapping = tuple(mapping)
        if len(mapping) != source.order:
            raise InputError("mapping must assign an image to every source element")
        for v in mapping:
            if not (0 <= v < target.order):
                raise InputError("image %r is outside the target semigroup" % (v,))
        object.__setattr__(self, "source", source)
        object.__setattr__(self, "target", target)
        object.__setattr__(self, "mapping", mapping)
        if check:
            for a in range(source.order):
                for b in range(source.order):
                    if target.mul(mapping[a], mapping[b]) != mapping[source.mul(a, b)]:
                        raise InputError(
                            "map is not multiplicative at (%d, %d)" % (a, b)
                        )

    def __setattr__(self, name, value):
        raise AttributeError("Morphism is immutable")

    def __call__(self, a):
        return self.mapping[a]

    @classmethod
    def identity(cls, s):
        return cls(s, s, range(s.order), check=False)

    def image(self):
        return sorted(set(self.mapping))

    def is_injective(self):
        return len(set(self.mapping)) == self.source.order

    def is_surjective(self):
        return len(set(self.mapping)) == self.target.order

    def is_isomorphism(self):
        return self.is_injective() and self.is_surjective()

    def is_two_one(self):
        """Whether the map also preserves the plus operation (both sides left ample)."""
        if not is_left_ample(self.source) or not is_left_ample(self.target):
            return False
        plus_s = plus_table(self.source)
        plus_t = plus_table(self.target)
        return all(
            self.mapping[plus_s[a]] == plus_t[self.mapping[a]]
            for a in range(self.source.order)
        )

    def then(self, other):
        """Composite applying self first, then other."""
        if other.source is not self.target and other.source != self.target:
            raise InputError("composition source/target mismatch")
        return Morphism(
            self.source,
            other.target,
            tuple(other.mapping[v] for v in self.mapping),
            check=False,
        )

    def inverse(self):
        if not self.is_isomorphism():
            raise InputError("only an isomorphism has an inverse")
        inv = [0] * self.target.order
        for a, v in enumerate(self.mapping):
            inv[v] = a
        return Morphism(self.target, self.source, inv, check=False)

    def to_text(self):
        return "\n".join("%d -> %d" % (a, v) for a, v in enumerate(self.mapping)) + "\n"

    @classmethod
    def from_text(cls, source, target, text):
        """Parse 'i -> j' lines into a morphism."""
        assigned = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("->")
            if len(parts) != 2:
                raise InputError("expected 'i -> j', got %r" % line)
            try:
                a, v = int(parts[0]), int(parts[1])
            except ValueError:
                raise InputError("expected integer indices, got %r" % line)
            if a in assigned:
                raise InputError("element %d assigned twice" % a)
            assigned[a] = v
        if sorted(assigned) != list(range(source.order)):
            raise InputError("mapping must cover exactly the source elements")
        return cls(source, target, [assigned[a] for a in range(source.order)])

    def __eq__(self, other):
        return (
            isinstance(other, Morphism)
            and self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash((self.source, self.target, self.mapping))

    def __repr__(self):
        return "Morphism(%d -> %d, %r)" % (
            self.source.order,
            self.target.order,
            self.mapping,
        )


def enumerate_morphisms(source, target, two_one=False):
    """All multiplicative maps from source to target, in lexicographic image order.

    With two_one, both semigroups must be left ample and only maps
    preserving the plus operation are produced.
    """
    n, m = source.order, target.order
    plus_s = plus_t = None
    if two_one:
        if not is_left_ample(source) or not is_left_ample(target):
            raise InputError("two_one search requires left ample source and target")
        plus_s = plus_table(source)
        plus_t = plus_table(target)
    mapping = [0] * n

    def consistent(k):
        for i in range(k + 1):
            for j in range(k + 1):
                p = source.mul(i, j)
                if p <= k and (i == k or j == k or p == k):
                    if target.mul(mapping[i], mapping[j]) != mapping[p]:
                        return False
        if two_one:
            for a in range(k + 1):
                p = plus_s[a]
                if p <= k and (a == k or p == k):
                    if mapping[p] != plus_t[mapping[a]]:
                        return False
        return True

    def rec(k):
        if k == n:
            yield Morphism(source, target, tuple(mapping), check=False)
            return
        for v in range(m):
            mapping[k] = v
            if consistent(k):
                yield from rec(k + 1)

    yield from rec(0)
