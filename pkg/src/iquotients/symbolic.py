"""Closed-form infinite semigroups with window-bounded enumeration.

Three kinds: "bicyclic" (pairs of naturals), "nat" (naturals under
addition), and "free2" (words over a two-letter alphabet).  Elements are
plain values — pairs, ints, strings — and every structural question is
answered by a closed form rather than a table.
"""

from .errors import InputError

KINDS = ("bicyclic", "nat", "free2")

_LETTERS = ("x", "y")


class SymbolicSemigroup:
    """An infinite semigroup given by formulas, plus a finite enumeration window."""

    __slots__ = ("kind", "window")

    def __init__(self, kind, window=20):
        if kind not in KINDS:
            raise InputError("unknown symbolic kind %r; choose from %s" % (kind, ", ".join(KINDS)))
        if not isinstance(window, int) or isinstance(window, bool) or window < 1:
            raise InputError("window must be a positive integer, got %r" % (window,))
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "window", window)

    def __setattr__(self, name, value):
        raise AttributeError("SymbolicSemigroup is immutable")

    # -- element plumbing ------------------------------------------------

    def contains(self, x):
        if self.kind == "bicyclic":
            return (
                isinstance(x, tuple)
                and len(x) == 2
                and all(isinstance(c, int) and not isinstance(c, bool) and c >= 0 for c in x)
            )
        if self.kind == "nat":
            return isinstance(x, int) and not isinstance(x, bool) and x >= 0
        return isinstance(x, str) and all(c in _LETTERS for c in x)

    def _check(self, x):
        if not self.contains(x):
            raise InputError("%r is not an element of the %s semigroup" % (x, self.kind))
        return x

    def elements(self):
        """All elements inside the window, in a fixed order."""
        w = self.window
        if self.kind == "bicyclic":
            return [(a, b) for a in range(w + 1) for b in range(w + 1)]
        if self.kind == "nat":
            return list(range(w + 1))
        out = [""]
        frontier = [""]
        for _ in range(w):
            frontier = [word + c for word in frontier for c in _LETTERS]
            out.extend(frontier)
        return out

    def format_element(self, x):
        self._check(x)
        if self.kind == "bicyclic":
            return "(%d,%d)" % x
        if self.kind == "nat":
            return str(x)
        return x or "1"

    def parse_element(self, text):
        """Inverse of format_element."""
        text = text.strip()
        if self.kind == "bicyclic":
            if not (text.startswith("(") and text.endswith(")")):
                raise InputError("expected a pair like (0,3), got %r" % text)
            parts = text[1:-1].split(",")
            if len(parts) != 2:
                raise InputError("expected a pair like (0,3), got %r" % text)
            try:
                pair = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise InputError("expected integer coordinates, got %r" % text)
            return self._check(pair)
        if self.kind == "nat":
            try:
                value = int(text)
            except ValueError:
                raise InputError("expected a natural number, got %r" % text)
            return self._check(value)
        if text == "1":
            return ""
        return self._check(text)

    # -- algebra ---------------------------------------------------------

    def multiply(self, x, y):
        self._check(x)
        self._check(y)
        if self.kind == "bicyclic":
            a, b = x
            c, d = y
            m = max(b, c)
            return (a - b + m, d - c + m)
        if self.kind == "nat":
            return x + y
        return x + y

    def identity_element(self):
        if self.kind == "bicyclic":
            return (0, 0)
        if self.kind == "nat":
            return 0
        return ""

    @property
    def has_inversion(self):
        return self.kind == "bicyclic"

    def invert(self, x):
        self._check(x)
        if self.kind != "bicyclic":
            raise InputError("the %s semigroup has no inversion" % self.kind)
        a, b = x
        return (b, a)

    def is_idempotent(self, x):
        return self.multiply(x, x) == x

    def idempotents(self):
        return [x for x in self.elements() if self.is_idempotent(x)]

    def plus_of(self, x):
        """The idempotent in the Rstar-class of x."""
        self._check(x)
        if self.kind == "bicyclic":
            return (x[0], x[0])
        return self.identity_element()

    # -- relations, closed forms ------------------------------------------

    def leq_r(self, x, y):
        """x lies in the principal right ideal of y."""
        self._check(x)
        self._check(y)
        if self.kind == "bicyclic":
            return x[0] >= y[0]
        if self.kind == "nat":
            return x >= y
        return x.startswith(y)

    def leq_l(self, x, y):
        self._check(x)
        self._check(y)
        if self.kind == "bicyclic":
            return x[1] >= y[1]
        if self.kind == "nat":
            return x >= y
        return x.endswith(y)

    def r_related(self, x, y):
        if self.kind == "bicyclic":
            self._check(x)
            self._check(y)
            return x[0] == y[0]
        return self._check(x) == self._check(y)

    def l_related(self, x, y):
        if self.kind == "bicyclic":
            self._check(x)
            self._check(y)
            return x[1] == y[1]
        return self._check(x) == self._check(y)

    def h_related(self, x, y):
        return self.r_related(x, y) and self.l_related(x, y)

    def d_related(self, x, y):
        self._check(x)
        self._check(y)
        if self.kind == "bicyclic":
            return True
        return x == y

    def j_related(self, x, y):
        return self.d_related(x, y)

    def rstar_related(self, x, y):
        """Closed form: bicyclic is inverse so Rstar = R; the other two are cancellative."""
        self._check(x)
        self._check(y)
        if self.kind == "bicyclic":
            return x[0] == y[0]
        return True

    def in_left_ideal(self, x, a):
        """Whether x lies in Sa (a included, as S is a monoid)."""
        self._check(x)
        self._check(a)
        if self.kind == "bicyclic":
            return x[1] >= a[1]
        if self.kind == "nat":
            return x >= a
        return x.endswith(a)

    def in_right_ideal(self, x, a):
        self._check(x)
        self._check(a)
        if self.kind == "bicyclic":
            return x[0] >= a[0]
        if self.kind == "nat":
            return x >= a
        return x.startswith(a)

    def lc_witness(self, a, b):
        """c with Sa meet Sb = Sc, or None when the intersection is not principal."""
        self._check(a)
        self._check(b)
        if self.kind == "bicyclic":
            return (0, max(a[1], b[1]))
        if self.kind == "nat":
            return max(a, b)
        if a.endswith(b):
            return a
        if b.endswith(a):
            return b
        return None

    def has_lc(self):
        return self.kind != "free2"

    def is_cancellative(self):
        return self.kind != "bicyclic"

    def with_window(self, window):
        return SymbolicSemigroup(self.kind, window)

    def __eq__(self, other):
        return (
            isinstance(other, SymbolicSemigroup)
            and self.kind == other.kind
            and self.window == other.window
        )

    def __hash__(self):
        return hash((self.kind, self.window))

    def __repr__(self):
        return "SymbolicSemigroup(%r, window=%d)" % (self.kind, self.window)


def bicyclic(window=20):
    return SymbolicSemigroup("bicyclic", window)

def additive_naturals(window=20):
    return SymbolicSemigroup("nat", window)

def free_monoid_rank2(window=6):
    return SymbolicSemigroup("free2", window)
