"""Exhaustive generation of small semigroup multiplication tables."""

from .errors import InputError
from .hull import has_lc
from .inverse import recognize_inverse
from .kernels import canonical_table, enumerate_tables
from .relations import is_left_ample
from .tables import FiniteSemigroup

FILTER_NAMES = ("left_ample", "lc", "inverse")

MAX_ORDER = 4


def _table_stream(n, identity0=False, commutative=False, idempotent=False,
                  up_to_iso=False, fix_first=False):
    seen = set()
    for flat in enumerate_tables(n, identity0=identity0, commutative=commutative,
                                 idempotent=idempotent):
        if up_to_iso:
            key = canonical_table(flat, n, fix_first=fix_first)
            if key in seen:
                continue
            seen.add(key)
        rows = [list(flat[i * n:(i + 1) * n]) for i in range(n)]
        yield FiniteSemigroup(rows, check=False)


def enumerate_semigroups(n, filters=(), up_to_iso=False):
    """All associative tables on n labeled elements, in a fixed backtracking order.

    filters is a subset of {"left_ample", "lc", "inverse"}; up_to_iso keeps
    one table per isomorphism class (the first produced).  Orders above 4
    are refused: this is the oracle substrate, not a classification tool.
    """
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= MAX_ORDER:
        raise InputError("order must be an integer between 1 and %d, got %r" % (MAX_ORDER, n))
    filters = tuple(filters)
    for f in filters:
        if f not in FILTER_NAMES:
            raise InputError("unknown filter %r; choose from %s" % (f, ", ".join(FILTER_NAMES)))
    preds = []
    if "left_ample" in filters:
        preds.append(lambda s: bool(is_left_ample(s)))
    if "lc" in filters:
        preds.append(lambda s: bool(has_lc(s)))
    if "inverse" in filters:
        preds.append(lambda s: bool(recognize_inverse(s)))
    for s in _table_stream(n, up_to_iso=up_to_iso):
        if all(p(s) for p in preds):
            yield s


def monoid_tables(n, up_to_iso=False):
    """All monoid tables on n elements with the identity at index 0.

    Deduplication fixes index 0, which loses nothing: any isomorphism maps
    identity to identity.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError("order must be a positive integer, got %r" % (n,))
    return _table_stream(n, identity0=True, up_to_iso=up_to_iso, fix_first=True)


def semilattice_tables(n, up_to_iso=False):
    """All commutative idempotent associative tables on n elements."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError("order must be a positive integer, got %r" % (n,))
    return _table_stream(n, commutative=True, idempotent=True, up_to_iso=up_to_iso)
