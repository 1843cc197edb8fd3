"""Questions about a distinguished subsemigroup inside an inverse semigroup.

A SubsetEmbedding pairs a finite ambient inverse semigroup with a
multiplicatively closed member set; BicyclicEmbedding is its symbolic twin
for the identity R-class inside the bicyclic semigroup.  On top of these
live the left I-order and straightness verdicts, quotient-equality witness
search, the ternary ideal-inclusion relation, and the two big consistency
suites for ample I-orders.
"""

from .errors import ConsistencyError, InputError
from .hull import has_lc, left_ideal
from .inverse import (
    InverseSemigroupView,
    is_bisimple,
    is_e_unitary,
    is_proper,
    is_simple,
    sigma,
    sigma_relation,
)
from .relations import (
    compose_relations,
    green,
    is_cancellative,
    is_left_ample,
    plus_table,
    r_star,
)
from .symbolic import SymbolicSemigroup


class SubsetEmbedding:
    """A multiplicatively closed subset of a finite inverse semigroup."""

    __slots__ = ("view", "members", "sub", "to_sub", "from_sub", "_cache")

    def __init__(self, view, members):
        if not isinstance(view, InverseSemigroupView):
            raise InputError("ambient must be an InverseSemigroupView")
        members = frozenset(members)
        if not members:
            raise InputError("member set is empty")
        for m in members:
            if not (0 <= m < view.order):
                raise InputError("member %r is outside the ambient semigroup" % (m,))
        sub, to_sub, from_sub = view.semigroup.subsemigroup(sorted(members))
        object.__setattr__(self, "view", view)
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "sub", sub)
        object.__setattr__(self, "to_sub", to_sub)
        object.__setattr__(self, "from_sub", from_sub)
        object.__setattr__(self, "_cache", {})

    def __setattr__(self, name, value):
        raise AttributeError("SubsetEmbedding is immutable")

    @property
    def member_list(self):
        """Members in ambient indexing, sorted."""
        return list(self.from_sub)

    def is_plus_closed(self):
        """Whether a times its ambient inverse stays inside for every member."""
        v = self.view
        return all(v.mul(a, v.invert(a)) in self.members for a in self.members)

    def __repr__(self):
        return "SubsetEmbedding(ambient=%d, members=%d)" % (
            self.view.order,
            len(self.members),
        )


class BicyclicEmbedding:
    """The R-class of the identity inside the bicyclic semigroup, window-bounded."""

    __slots__ = ("semigroup",)

    def __init__(self, window=20):
        object.__setattr__(self, "semigroup", SymbolicSemigroup("bicyclic", window))

    def __setattr__(self, name, value):
        raise AttributeError("BicyclicEmbedding is immutable")

    @property
    def window(self):
        return self.semigroup.window

    @property
    def member_list(self):
        return [(0, n) for n in range(self.window + 1)]

    def is_member(self, x):
        self.semigroup._check(x)
        return x[0] == 0

    def is_plus_closed(self):
        return True

    def __repr__(self):
        return "BicyclicEmbedding(window=%d)" % self.window


class IOrderReport:
    """Left I-order verdict with a quotient witness per ambient element."""

    __slots__ = ("ok", "witnesses", "failure")

    def __init__(self, ok, witnesses=None, failure=None):
        self.ok = ok
        self.witnesses = witnesses
        self.failure = failure

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "IOrderReport(ok=True)"
        return "IOrderReport(ok=False, failure=%r)" % (self.failure,)


def quotient_witness(embedding, q, require_r=False):
    """The least member pair (a, b) with a inverted times b equal to q, or None."""
    if isinstance(embedding, BicyclicEmbedding):
        s = embedding.semigroup
        s._check(q)
        a, b = (0, q[0]), (0, q[1])
        if require_r and not s.r_related(a, b):
            return None
        if s.multiply(s.invert(a), b) != q:
            raise ConsistencyError("bicyclic quotient witness formula failed at %r" % (q,))
        return (a, b)
    v = embedding.view
    rel = green(v.semigroup)["R"] if require_r else None
    for a in embedding.member_list:
        left = v.invert(a)
        for b in embedding.member_list:
            if require_r and not rel.related(a, b):
                continue
            if v.mul(left, b) == q:
                return (a, b)
    return None


def is_left_i_order(embedding):
    """Whether every ambient element is a quotient of two members."""
    if isinstance(embedding, BicyclicEmbedding):
        witnesses = {}
        for q in embedding.semigroup.elements():
            witnesses[q] = quotient_witness(embedding, q)
        return IOrderReport(True, witnesses=witnesses)
    cache = embedding._cache
    if "iorder" not in cache:
        witnesses = {}
        verdict = IOrderReport(True, witnesses=witnesses)
        for q in range(embedding.view.order):
            w = quotient_witness(embedding, q)
            if w is None:
                verdict = IOrderReport(False, failure=q)
                break
            witnesses[q] = w
        cache["iorder"] = verdict
    return cache["iorder"]


def is_straight(embedding):
    """Whether every ambient element is a quotient of an R-related member pair.

    Requires a left I-order.  When the members are closed under the plus
    operation (making them a left ample subalgebra), straightness is
    guaranteed, so a negative answer raises ConsistencyError.
    """
    if isinstance(embedding, BicyclicEmbedding):
        witnesses = {}
        for q in embedding.semigroup.elements():
            witnesses[q] = quotient_witness(embedding, q, require_r=True)
        return IOrderReport(True, witnesses=witnesses)
    io = is_left_i_order(embedding)
    if not io:
        raise InputError(
            "straightness is only defined for left I-orders; element %r has no witness"
            % (io.failure,)
        )
    cache = embedding._cache
    if "straight" not in cache:
        witnesses = {}
        verdict = IOrderReport(True, witnesses=witnesses)
        for q in range(embedding.view.order):
            w = quotient_witness(embedding, q, require_r=True)
            if w is None:
                verdict = IOrderReport(False, failure=q)
                break
            witnesses[q] = w
        if not verdict.ok and embedding.is_plus_closed():
            if is_left_ample(embedding.sub):
                raise ConsistencyError(
                    "a plus-closed left ample left I-order failed straightness at %r"
                    % (verdict.failure,)
                )
        cache["straight"] = verdict
    return cache["straight"]


def _ambient_ops(ambient):
    """(mul, invert, r_related, l_related) for a view or a symbolic bicyclic."""
    if isinstance(ambient, SymbolicSemigroup):
        if not ambient.has_inversion:
            raise InputError("ambient %s semigroup is not inverse" % ambient.kind)
        return ambient.multiply, ambient.invert, ambient.r_related, ambient.l_related
    g = green(ambient.semigroup)
    return ambient.mul, ambient.invert, g["R"].related, g["L"].related


def cross_equation_holds(ambient, b, c, x, y):
    """If x and y are R-related and b times inverse-of-c equals inverse-of-x times y, then xb = yc.

    Returns True when the premises fail (nothing to check) or the
    conclusion holds.
    """
    mul, inv, r_rel, _ = _ambient_ops(ambient)
    if not r_rel(x, y):
        return True
    if mul(b, inv(c)) != mul(inv(x), y):
        return True
    return mul(x, b) == mul(y, c)


def quotient_equality_witness(embedding, a, b, c, d):
    """The least member pair (x, y) certifying that the quotients of (a,b) and (c,d) agree.

    The certificate is: xa = yc, xb = yd, a R-related to the inverse of x,
    x R-related to y, and y L-related to the inverse of c.  Requires a R b
    and c R d, all four elements members, and a straight embedding; a
    witness exists exactly when inverse-of-a times b equals inverse-of-c
    times d.
    """
    if isinstance(embedding, BicyclicEmbedding):
        s = embedding.semigroup
        for q in (a, b, c, d):
            if not embedding.is_member(q):
                raise InputError("%r is not a member" % (q,))
        mul, inv, r_rel, l_rel = _ambient_ops(s)
        members = embedding.member_list
    else:
        for q in (a, b, c, d):
            if q not in embedding.members:
                raise InputError("%r is not a member" % (q,))
        if not is_straight(embedding):
            raise InputError("the embedding is not straight")
        mul, inv, r_rel, l_rel = _ambient_ops(embedding.view)
        members = embedding.member_list
    if not r_rel(a, b):
        raise InputError("the first pair is not R-related in the ambient semigroup")
    if not r_rel(c, d):
        raise InputError("the second pair is not R-related in the ambient semigroup")
    for x in members:
        if not r_rel(a, inv(x)):
            continue
        for y in members:
            if not r_rel(x, y):
                continue
            if not l_rel(y, inv(c)):
                continue
            if mul(x, a) == mul(y, c) and mul(x, b) == mul(y, d):
                return (x, y)
    return None


class TernaryRelation:
    """Member triples (a, b, c) with the right ideal of a b-inverse inside that of c-inverse."""

    __slots__ = ("triples",)

    def __init__(self, triples):
        object.__setattr__(self, "triples", frozenset(triples))

    def __setattr__(self, name, value):
        raise AttributeError("TernaryRelation is immutable")

    def __contains__(self, triple):
        return triple in self.triples

    def __len__(self):
        return len(self.triples)

    def __eq__(self, other):
        return isinstance(other, TernaryRelation) and self.triples == other.triples

    def __hash__(self):
        return hash(self.triples)

    def __repr__(self):
        return "TernaryRelation(size=%d)" % len(self.triples)


def _right_ideal_table(s):
    n = s.order
    return [frozenset([x]) | frozenset(s.mul(x, q) for q in range(n)) for x in range(n)]


def t_relation(embedding):
    """All member triples (a, b, c) with (a b^-1) Q^1 contained in c^-1 Q^1."""
    if isinstance(embedding, BicyclicEmbedding):
        raise InputError("the ternary relation is only computed on finite ambients")
    cache = embedding._cache
    if "t_relation" not in cache:
        v = embedding.view
        rids = _right_ideal_table(v.semigroup)
        members = embedding.member_list
        inv_rids = {c: rids[v.invert(c)] for c in members}
        triples = set()
        for a in members:
            for b in members:
                lhs = rids[v.mul(a, v.invert(b))]
                for c in members:
                    if lhs <= inv_rids[c]:
                        triples.add((a, b, c))
        cache["t_relation"] = TernaryRelation(triples)
    return cache["t_relation"]


def _require_ample_union_hypotheses(embedding):
    """Validate: members left ample, a left I-order, and a union of ambient R-classes."""
    report = is_left_ample(embedding.sub)
    if not report:
        raise InputError(
            "members are not left ample: clause %r fails at %r"
            % (report.clause, report.witness)
        )
    io = is_left_i_order(embedding)
    if not io:
        raise InputError(
            "members are not a left I-order: element %r has no witness" % (io.failure,)
        )
    amb_r = green(embedding.view.semigroup)["R"]
    for m in embedding.members:
        for x in range(embedding.view.order):
            if amb_r.related(m, x) and x not in embedding.members:
                raise InputError(
                    "members are not a union of ambient R-classes: %r relates to %r"
                    % (m, x)
                )


AMPLE_SUITE_CLAUSES = (
    "ambient a a^-1 equals the member plus and stays inside",
    "a^-1 b idempotent only for equal Rstar-related members",
    "member and ambient principal left ideal inclusions agree",
    "member and ambient principal left ideal intersections agree",
    "members satisfy Condition (LC)",
    "ambient bisimple iff L then Rstar is universal on members",
    "ambient simple iff every pair admits an Rstar L-below interpolant",
)


def ample_iorder_suite(embedding):
    """Seven facts tying a left ample I-order to its ambient semigroup.

    Every clause is computed on both sides independently; the theory makes
    them agree, so a mismatch raises ConsistencyError.  Returns the list of
    (clause, True) pairs.
    """
    if isinstance(embedding, BicyclicEmbedding):
        return _bicyclic_ample_suite(embedding)
    _require_ample_union_hypotheses(embedding)
    v = embedding.view
    sub = embedding.sub
    to_sub, from_sub = embedding.to_sub, embedding.from_sub
    plus = plus_table(sub)
    rstar = r_star(sub)
    gsub = green(sub)
    k = sub.order
    idem_q = set(v.semigroup.idempotents())

    for i in range(k):
        a = from_sub[i]
        p = v.mul(a, v.invert(a))
        if p not in embedding.members or to_sub[p] != plus[i]:
            raise ConsistencyError(
                "clause (%s) fails at member %r" % (AMPLE_SUITE_CLAUSES[0], a)
            )

    for i in range(k):
        for j in range(k):
            if not rstar.related(i, j):
                continue
            q = v.mul(v.invert(from_sub[i]), from_sub[j])
            if (q in idem_q) != (i == j):
                raise ConsistencyError(
                    "clause (%s) fails at members (%r, %r)"
                    % (AMPLE_SUITE_CLAUSES[1], from_sub[i], from_sub[j])
                )

    sub_ideals = [left_ideal(sub, i) for i in range(k)]
    amb_ideals = _left_ideal_table(v.semigroup)
    for i in range(k):
        for j in range(k):
            inner = sub_ideals[i] <= sub_ideals[j]
            outer = amb_ideals[from_sub[i]] <= amb_ideals[from_sub[j]]
            if inner != outer:
                raise ConsistencyError(
                    "clause (%s) fails at members (%r, %r)"
                    % (AMPLE_SUITE_CLAUSES[2], from_sub[i], from_sub[j])
                )

    for i in range(k):
        for j in range(k):
            meet_sub = sub_ideals[i] & sub_ideals[j]
            meet_amb = amb_ideals[from_sub[i]] & amb_ideals[from_sub[j]]
            for c in range(k):
                inner = sub_ideals[c] == meet_sub
                outer = amb_ideals[from_sub[c]] == meet_amb
                if inner != outer:
                    raise ConsistencyError(
                        "clause (%s) fails at members (%r, %r, %r)"
                        % (
                            AMPLE_SUITE_CLAUSES[3],
                            from_sub[i],
                            from_sub[j],
                            from_sub[c],
                        )
                    )

    if not has_lc(sub).ok:
        raise ConsistencyError("clause (%s) fails" % (AMPLE_SUITE_CLAUSES[4],))

    bis = is_bisimple(v.semigroup)
    universal = compose_relations(gsub["L"], rstar).is_universal()
    if bis != universal:
        raise ConsistencyError(
            "clause (%s) fails: bisimple=%r universal=%r"
            % (AMPLE_SUITE_CLAUSES[5], bis, universal)
        )

    simple = is_simple(v.semigroup)
    leq_l = gsub["leqL"]
    interp = all(
        any(rstar.related(a, c) and leq_l.related(c, b) for c in range(k))
        for a in range(k)
        for b in range(k)
    )
    if simple != interp:
        raise ConsistencyError(
            "clause (%s) fails: simple=%r interpolation=%r"
            % (AMPLE_SUITE_CLAUSES[6], simple, interp)
        )

    return [(clause, True) for clause in AMPLE_SUITE_CLAUSES]


def _left_ideal_table(s):
    n = s.order
    return [frozenset(s.mul(x, a) for x in range(n)) for a in range(n)]


def _bicyclic_ample_suite(embedding):
    s = embedding.semigroup
    w = embedding.window
    members = embedding.member_list

    for m in members:
        p = s.multiply(m, s.invert(m))
        if p != (0, 0) or p != s.plus_of(m) or not embedding.is_member(p):
            raise ConsistencyError(
                "clause (%s) fails at member %r" % (AMPLE_SUITE_CLAUSES[0], m)
            )

    for a in members:
        for b in members:
            q = s.multiply(s.invert(a), b)
            if s.is_idempotent(q) != (a == b):
                raise ConsistencyError(
                    "clause (%s) fails at members (%r, %r)"
                    % (AMPLE_SUITE_CLAUSES[1], a, b)
                )

    # Member ideals live in the copy of the naturals {(0, n)}; ambient
    # ideals come from the closed form.  Quantifiers run over the window.
    for a in members:
        for b in members:
            inner = a[1] >= b[1]
            outer = all(
                not s.in_left_ideal(q, a) or s.in_left_ideal(q, b)
                for q in s.elements()
            )
            if inner != outer:
                raise ConsistencyError(
                    "clause (%s) fails at members (%r, %r)"
                    % (AMPLE_SUITE_CLAUSES[2], a, b)
                )

    for a in members:
        for b in members:
            for c in members:
                inner = c[1] == max(a[1], b[1])
                outer = all(
                    (s.in_left_ideal(q, a) and s.in_left_ideal(q, b))
                    == s.in_left_ideal(q, c)
                    for q in s.elements()
                )
                if inner != outer:
                    raise ConsistencyError(
                        "clause (%s) fails at members (%r, %r, %r)"
                        % (AMPLE_SUITE_CLAUSES[3], a, b, c)
                    )

    for a in members:
        for b in members:
            if s.lc_witness(a, b) is None:
                raise ConsistencyError("clause (%s) fails" % (AMPLE_SUITE_CLAUSES[4],))

    bis = all(s.d_related(x, y) for x in s.elements()[: w + 1] for y in s.elements()[: w + 1])
    universal = all(
        any(a[1] == c[1] and s.rstar_related(c, b) for c in members)
        for a in members
        for b in members
    )
    if bis != universal:
        raise ConsistencyError("clause (%s) fails" % (AMPLE_SUITE_CLAUSES[5],))

    simple = all(s.j_related(x, y) for x in s.elements()[: w + 1] for y in s.elements()[: w + 1])
    interp = all(
        any(s.rstar_related(a, c) and c[1] >= b[1] for c in members)
        for a in members
        for b in members
    )
    if simple != interp:
        raise ConsistencyError("clause (%s) fails" % (AMPLE_SUITE_CLAUSES[6],))

    return [(clause, True) for clause in AMPLE_SUITE_CLAUSES]


E_UNITARY_CLAUSES = (
    "ambient is E-unitary",
    "members are proper and member sigma matches restricted ambient sigma",
    "members are proper with a cancellative sigma quotient",
)


def e_unitary_equivalence(embedding):
    """Three equivalent facts about an ample I-order, computed independently.

    The ambient is E-unitary; the members are proper and their sigma is the
    restriction of the ambient sigma; the members are proper and the sigma
    quotient is cancellative.  Disagreement raises ConsistencyError.
    """
    if isinstance(embedding, BicyclicEmbedding):
        verdicts = _bicyclic_e_unitary(embedding)
    else:
        _require_ample_union_hypotheses(embedding)
        v = embedding.view
        sub = embedding.sub
        from_sub = embedding.from_sub
        k = sub.order
        clause1 = is_e_unitary(v)
        proper = is_proper(sub)
        sig = sigma(sub)
        amb_sigma = sigma_relation(v.semigroup)
        restricted_matches = all(
            amb_sigma.related(from_sub[i], from_sub[j]) == sig.relation.related(i, j)
            for i in range(k)
            for j in range(k)
        )
        clause2 = proper and restricted_matches
        clause3 = proper and is_cancellative(sig.quotient)
        verdicts = (clause1, clause2, clause3)
    if len(set(verdicts)) != 1:
        raise ConsistencyError(
            "E-unitary clauses disagree: %r" % (dict(zip(E_UNITARY_CLAUSES, verdicts)),)
        )
    return dict(zip(E_UNITARY_CLAUSES, verdicts))


def _bicyclic_e_unitary(embedding):
    s = embedding.semigroup
    w = embedding.window
    idem = [(k, k) for k in range(w + 1)]
    clause1 = all(
        not s.is_idempotent(s.multiply(e, q)) or s.is_idempotent(q)
        for e in idem
        for q in s.elements()
    )
    members = embedding.member_list
    # The only member idempotent is the identity, so member sigma collapses
    # to equality; that also makes the members proper.
    member_sigma = {
        (a, b)
        for a in members
        for b in members
        if s.multiply((0, 0), a) == s.multiply((0, 0), b)
    }
    proper = all(a == b for a, b in member_sigma)
    restricted = all(
        (any(s.multiply(e, a) == s.multiply(e, b) for e in idem)) == ((a, b) in member_sigma)
        for a in members
        for b in members
    )
    clause2 = proper and restricted
    cancellative = True
    for a in members:
        for b in members:
            for c in members:
                if s.multiply(a, c) == s.multiply(b, c) and a != b:
                    cancellative = False
                if s.multiply(c, a) == s.multiply(c, b) and a != b:
                    cancellative = False
    clause3 = proper and cancellative
    return (clause1, clause2, clause3)


class ClassicalOrderReport:
    """Verdict for the classical left-order property, with an unreachable element."""

    __slots__ = ("ok", "failure")

    def __init__(self, ok, failure=None):
        self.ok = ok
        self.failure = failure

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "ClassicalOrderReport(ok=True)"
        return "ClassicalOrderReport(ok=False, failure=%r)" % (self.failure,)


def is_classical_left_order(embedding):
    """Whether every ambient element is (group inverse of a) times b for members a, b.

    The group inverse must be taken inside a subgroup of the member
    subsemigroup, so only members whose member-H-class contains an
    idempotent contribute quotients.
    """
    if isinstance(embedding, BicyclicEmbedding):
        s = embedding.semigroup
        covered = set()
        for b in embedding.member_list:
            covered.add(s.multiply((0, 0), b))
        for q in s.elements():
            if q not in covered:
                return ClassicalOrderReport(False, failure=q)
        return ClassicalOrderReport(True)
    v = embedding.view
    sub = embedding.sub
    from_sub = embedding.from_sub
    h = green(sub)["H"]
    idem = set(sub.idempotents())
    covered = set()
    for i in range(sub.order):
        cls = [j for j in range(sub.order) if h.related(i, j)]
        es = [j for j in cls if j in idem]
        if not es:
            continue
        e = es[0]
        sharp = [x for x in cls if sub.mul(i, x) == e and sub.mul(x, i) == e]
        if not sharp:
            continue
        inv_amb = from_sub[sharp[0]]
        for j in range(sub.order):
            covered.add(v.mul(inv_amb, from_sub[j]))
    for q in range(v.order):
        if q not in covered:
            return ClassicalOrderReport(False, failure=q)
    return ClassicalOrderReport(True)
