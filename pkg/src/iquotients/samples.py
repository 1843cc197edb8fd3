"""Small stock semigroups used across tests and examples."""

from itertools import permutations

from .tables import FiniteSemigroup


def cyclic_group(n):
    """The cyclic group of order n under addition mod n."""
    return FiniteSemigroup([[(i + j) % n for j in range(n)] for i in range(n)], check=False)


def klein_four():
    """The Klein four-group, realized as bitwise xor on 0..3."""
    return FiniteSemigroup([[i ^ j for j in range(4)] for i in range(4)], check=False)


def symmetric_group_3():
    """All permutations of three points, composed left to right."""
    perms = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(q[p[x]] for x in range(3))] for q in perms] for p in perms
    ]
    return FiniteSemigroup(table, check=False)


def chain_semilattice(n):
    """The chain 0 < 1 < ... < n-1 under minimum."""
    return FiniteSemigroup([[min(i, j) for j in range(n)] for i in range(n)], check=False)


def left_zero(n):
    """The left zero semigroup: every product equals its left factor."""
    return FiniteSemigroup([[i for _ in range(n)] for i in range(n)], check=False)


def right_zero(n):
    """The right zero semigroup: every product equals its right factor."""
    return FiniteSemigroup([[j for j in range(n)] for _ in range(n)], check=False)


def null_semigroup(n):
    """The semigroup where every product is the zero element 0."""
    return FiniteSemigroup([[0] * n for _ in range(n)], check=False)


def ample_not_inverse():
    """A three-element left ample semigroup with (LC) that is not inverse.

    Element 0 is a left identity, element 2 is a zero, and element 1 is a
    non-regular element sharing its R*-class with 0.
    """
    return FiniteSemigroup([[0, 1, 2], [2, 2, 2], [2, 2, 2]])


def groups_up_to_order(max_order=6):
    """Named groups of each order up to max_order, one per isomorphism type."""
    stock = [
        ("C1", cyclic_group(1)),
        ("C2", cyclic_group(2)),
        ("C3", cyclic_group(3)),
        ("C4", cyclic_group(4)),
        ("V4", klein_four()),
        ("C5", cyclic_group(5)),
        ("C6", cyclic_group(6)),
        ("S3", symmetric_group_3()),
    ]
    return [(name, g) for name, g in stock if g.order <= max_order]
