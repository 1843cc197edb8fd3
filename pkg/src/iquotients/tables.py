"""Finite semigroups as immutable Cayley tables over indices 0..n-1."""

from collections import Counter

from . import kernels
from .errors import InputError


class FiniteSemigroup:
    """A finite semigroup given by its Cayley table.

    table[a][b] is the index of the product a*b.  Instances are immutable
    and hashable so relation computations can be memoized per semigroup.
    """

    __slots__ = ("table", "names", "has_adjoined_identity", "_hash")

    def __init__(self, table, names=None, has_adjoined_identity=False, check=True):
        rows = tuple(tuple(row) for row in table)
        n = len(rows)
        if n == 0:
            raise InputError("a semigroup needs at least one element")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InputError(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise InputError(f"cell ({i},{j}) holds {v!r}, expected 0..{n - 1}")
        if check:
            bad = kernels.find_nonassociative_triple(
                bytes(v for row in rows for v in row), n
            )
            if bad is not None:
                a, b, c = bad
                raise InputError(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")
        if names is not None:
            names = tuple(str(x) for x in names)
            if len(names) != n:
                raise InputError(f"{len(names)} names for {n} elements")
            if len(set(names)) != n:
                raise InputError("element names must be distinct")
            for name in names:
                if not name or any(ch.isspace() for ch in name):
                    raise InputError(f"bad element name {name!r}")
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "has_adjoined_identity", bool(has_adjoined_identity))
        object.__setattr__(self, "_hash", hash((rows, names)))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteSemigroup is immutable")

    @property
    def order(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def product(self, seq):
        """Product of a nonempty sequence of element indices, left to right."""
        items = list(seq)
        if not items:
            raise InputError("empty product is undefined")
        acc = items[0]
        for x in items[1:]:
            acc = self.table[acc][x]
        return acc

    def flat(self):
        return bytes(v for row in self.table for v in row)

    def element_name(self, i):
        return self.names[i] if self.names else str(i)

    def idempotents(self):
        return tuple(e for e in range(self.order) if self.table[e][e] == e)

    def identity(self):
        """Index of the two-sided identity, or None."""
        for e in range(self.order):
            row = self.table[e]
            if all(row[x] == x and self.table[x][e] == x for x in range(self.order)):
                return e
        return None

    def is_monoid(self):
        return self.identity() is not None

    def is_commutative(self):
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    def is_idempotent_semigroup(self):
        return len(self.idempotents()) == self.order

    def is_semilattice(self):
        return self.is_commutative() and self.is_idempotent_semigroup()

    def is_group(self):
        e = self.identity()
        if e is None:
            return False
        n = self.order
        return all(any(self.table[a][x] == e for x in range(n)) for a in range(n))

    def inverse_of(self, a):
        """The group inverse of a; only meaningful in a group."""
        e = self.identity()
        if e is None:
            raise InputError("no identity, so no group inverses")
        for x in range(self.order):
            if self.table[a][x] == e and self.table[x][a] == e:
                return x
        raise InputError("element %d has no two-sided group inverse" % a)

    def with_adjoined_identity(self):
        """Copy with a new identity appended as the last element."""
        n = self.order
        t = [list(row) + [i] for i, row in enumerate(self.table)]
        t.append(list(range(n + 1)))
        names = None
        if self.names:
            one = "1"
            while one in self.names:
                one += "'"
            names = self.names + (one,)
        return FiniteSemigroup(t, names=names, has_adjoined_identity=True, check=False)

    def subsemigroup(self, members):
        """Restrict to a multiplicatively closed subset.

        Returns (sub, to_sub, from_sub) where to_sub maps old indices to new
        and from_sub lists old indices in the new order.
        """
        from_sub = tuple(sorted(set(members)))
        if not from_sub:
            raise InputError("a subsemigroup needs at least one element")
        for m in from_sub:
            if not 0 <= m < self.order:
                raise InputError(f"member {m} out of range")
        to_sub = {m: i for i, m in enumerate(from_sub)}
        rows = []
        for a in from_sub:
            row = []
            for b in from_sub:
                p = self.table[a][b]
                if p not in to_sub:
                    raise InputError(
                        f"subset not closed: {a}*{b} = {p} is outside it"
                    )
                row.append(to_sub[p])
            rows.append(row)
        names = tuple(self.element_name(m) for m in from_sub) if self.names else None
        return FiniteSemigroup(rows, names=names, check=False), to_sub, from_sub

    def is_closed_subset(self, members):
        members = set(members)
        return all(self.table[a][b] in members for a in members for b in members)

    def canonical_form(self, fix_first=False):
        return kernels.canonical_table(self.flat(), self.order, fix_first)

    def relabel(self, perm):
        """Apply the index permutation perm (old index -> new index)."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise InputError("relabeling must be a permutation of the indices")
        t = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                t[perm[a]][perm[b]] = perm[self.table[a][b]]
        names = None
        if self.names:
            names = [None] * n
            for old, new in enumerate(perm):
                names[new] = self.names[old]
            names = tuple(names)
        return FiniteSemigroup(t, names=names, check=False)

    def to_text(self):
        """Serialize in the table text format (order line, then rows)."""
        lines = [str(self.order)]
        if self.names:
            lines.append("# names: " + " ".join(self.names))
        for row in self.table:
            lines.append(" ".join(str(v) for v in row))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        """Parse the table text format.

        Line one holds the order n, the next n non-comment lines hold the
        rows as space-separated indices.  A comment line '# names: ...' may
        supply element names; other comment lines are ignored.
        """
        names = None
        lines = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.startswith("names:"):
                    names = body[len("names:"):].split()
                continue
            lines.append(line)
        if not lines:
            raise InputError("empty table text")
        try:
            n = int(lines[0])
        except ValueError:
            raise InputError(f"first line must be the order, got {lines[0]!r}")
        if n < 1:
            raise InputError(f"order must be positive, got {n}")
        if len(lines) != n + 1:
            raise InputError(f"expected {n} rows after the order line, got {len(lines) - 1}")
        rows = []
        for k, line in enumerate(lines[1:]):
            parts = line.split()
            if len(parts) != n:
                raise InputError(f"row {k} has {len(parts)} entries, expected {n}")
            try:
                rows.append([int(p) for p in parts])
            except ValueError:
                raise InputError(f"row {k} holds a non-integer entry")
        return cls(rows, names=names)

    def __eq__(self, other):
        if not isinstance(other, FiniteSemigroup):
            return NotImplemented
        return self.table == other.table and self.names == other.names

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order})"


def _fingerprint(s):
    """Per-element isomorphism invariants used to prune the search."""
    n = s.order
    occurrences = Counter(v for row in s.table for v in row)
    prints = []
    for a in range(n):
        # length of the power trajectory a, a^2, ... until it repeats
        seen = []
        x = a
        while x not in seen:
            seen.append(x)
            x = s.table[x][a]
        prints.append((
            s.table[a][a] == a,
            occurrences[a],
            len(set(s.table[a])),
            len(set(row[a] for row in s.table)),
            len(seen),
        ))
    return prints


def isomorphisms(s, t):
    """Yield every isomorphism s -> t as a tuple mapping indices of s to t."""
    if s.order != t.order:
        return
    n = s.order
    fs = _fingerprint(s)
    ft = _fingerprint(t)
    if Counter(fs) != Counter(ft):
        return
    candidates = [[b for b in range(n) if ft[b] == fs[a]] for a in range(n)]
    image = [-1] * n
    preimage = [-1] * n

    def consistent(k):
        for a in range(k + 1):
            for b in range(k + 1):
                p = s.table[a][b]
                q = t.table[image[a]][image[b]]
                if image[p] != -1:
                    if image[p] != q:
                        return False
                elif preimage[q] != -1:
                    return False
        return True

    def extend(k):
        if k == n:
            yield tuple(image)
            return
        for cand in candidates[k]:
            if preimage[cand] != -1:
                continue
            image[k] = cand
            preimage[cand] = k
            if consistent(k):
                yield from extend(k + 1)
            image[k] = -1
            preimage[cand] = -1

    yield from extend(0)


def find_isomorphism(s, t):
    """First isomorphism s -> t in search order, or None."""
    for iso in isomorphisms(s, t):
        return iso
    return None


def are_isomorphic(s, t):
    return find_isomorphism(s, t) is not None
