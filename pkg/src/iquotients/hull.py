"""Principal left ideals, Condition (LC), the rho charts, and the inverse hull."""

from .charts import PartialBijection, closure
from .errors import ConsistencyError, InputError
from .inverse import is_bisimple, recognize_inverse
from .relations import compose_relations, green, is_left_ample, plus_table, r_star
from .symbolic import SymbolicSemigroup


def left_ideal(s, a):
    """Sa = {xa : x in S} as a frozenset of element indices."""
    return frozenset(s.mul(x, a) for x in range(s.order))


def lc_witness(s, a, b):
    """The least c with Sa meet Sb = Sc, or None if the intersection is not principal.

    Works on finite tables and on symbolic kinds with ideal oracles.
    """
    if isinstance(s, SymbolicSemigroup):
        return s.lc_witness(a, b)
    meet = left_ideal(s, a) & left_ideal(s, b)
    for c in range(s.order):
        if left_ideal(s, c) == meet:
            return c
    return None


class LcReport:
    """Condition (LC) verdict: witnesses for every pair, or the first failing pair."""

    __slots__ = ("ok", "witnesses", "failure")

    def __init__(self, ok, witnesses=None, failure=None):
        self.ok = ok
        self.witnesses = witnesses
        self.failure = failure

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "LcReport(ok=True)"
        return "LcReport(ok=False, failure=%r)" % (self.failure,)


def has_lc(s):
    """Whether every intersection of two principal left ideals is principal."""
    if isinstance(s, SymbolicSemigroup):
        return LcReport(s.has_lc(), witnesses=None)
    witnesses = {}
    for a in range(s.order):
        for b in range(s.order):
            c = lc_witness(s, a, b)
            if c is None:
                return LcReport(False, failure=(a, b))
            witnesses[(a, b)] = c
    return LcReport(True, witnesses=witnesses)


def rho(s, a):
    """The chart sending x to xa, defined on S(a+), with image Sa."""
    report = is_left_ample(s)
    if not report:
        raise InputError(
            "rho requires a left ample semigroup; clause %r fails at %r"
            % (report.clause, report.witness)
        )
    plus = plus_table(s)
    dom = left_ideal(s, plus[a])
    return PartialBijection(s.order, [(x, s.mul(x, a)) for x in sorted(dom)])


class HullResult:
    """The inverse hull of a left ample semigroup, with its embedding and verdicts."""

    __slots__ = (
        "hull",
        "elements",
        "embedding",
        "is_i_order",
        "lc",
        "image_union_of_r_classes",
    )

    def __init__(self, hull, elements, embedding, is_i_order, lc, image_union_of_r_classes):
        self.hull = hull
        self.elements = elements
        self.embedding = embedding
        self.is_i_order = is_i_order
        self.lc = lc
        self.image_union_of_r_classes = image_union_of_r_classes

    def embed(self, a):
        """Hull index of rho_a."""
        return self.embedding[a]

    @property
    def members(self):
        """The image of the embedding as a frozenset of hull indices."""
        return frozenset(self.embedding)

    def __repr__(self):
        return "HullResult(order=%d, is_i_order=%r)" % (self.hull.order, self.is_i_order)


def inverse_hull(s, budget=200000):
    """Close the rho charts under composition and inversion, and audit the result.

    The audit raises ConsistencyError when a fact the theory guarantees
    fails to hold: the embedding must be an injective multiplicative map
    preserving the plus operation, the closure must be inverse, the
    quotient-coverage verdict must match the (LC) verdict, and under (LC)
    the image must be a union of R-classes of the hull.
    """
    report = is_left_ample(s)
    if not report:
        raise InputError(
            "inverse_hull requires a left ample semigroup; clause %r fails at %r"
            % (report.clause, report.witness)
        )
    plus = plus_table(s)
    gens = [rho(s, a) for a in range(s.order)]
    sub, elements = closure(gens, include_inverses=True, budget=budget)
    rec = recognize_inverse(sub)
    if not rec:
        raise ConsistencyError(
            "closure of the rho charts failed inverse recognition: %s" % rec.reason
        )
    view = rec.view
    index = {ch: i for i, ch in enumerate(elements)}
    embedding = tuple(index[g] for g in gens)
    if len(set(embedding)) != s.order:
        raise ConsistencyError("the rho embedding of a left ample semigroup is not injective")
    for a in range(s.order):
        for b in range(s.order):
            if view.mul(embedding[a], embedding[b]) != embedding[s.mul(a, b)]:
                raise ConsistencyError("the rho embedding is not multiplicative")
    for a in range(s.order):
        image_plus = view.mul(embedding[a], view.invert(embedding[a]))
        if embedding[plus[a]] != image_plus:
            raise ConsistencyError("the rho embedding does not preserve the plus operation")
    lc = has_lc(s)
    quotients = set()
    for ga in gens:
        left = ga.invert()
        for gb in gens:
            quotients.add(left.compose(gb))
    is_i_order = quotients == set(elements)
    if is_i_order != lc.ok:
        raise ConsistencyError(
            "quotient coverage of the hull disagrees with the ideal-intersection test"
        )
    members = frozenset(embedding)
    hull_r = green(sub)["R"]
    union_r = True
    for m in members:
        for x in range(sub.order):
            if hull_r.related(m, x) and x not in members:
                union_r = False
                break
        if not union_r:
            break
    if lc.ok and not union_r:
        raise ConsistencyError(
            "the embedded image is not a union of R-classes despite (LC)"
        )
    return HullResult(view, elements, embedding, is_i_order, lc, union_r)


def bisimple_hull_equivalence(s, budget=200000):
    """Three facts that hold or fail together for a left ample semigroup.

    Computed independently: the hull is bisimple; (LC) holds and Rstar
    composed with L is universal; the embedded image is a left I-order and
    Rstar composed with L is universal.  Disagreement raises
    ConsistencyError.  For the symbolic naturals the answers come from the
    closed forms.
    """
    if isinstance(s, SymbolicSemigroup):
        if s.kind != "nat":
            raise InputError("only the additive naturals support this symbolic check")
        hull_bisimple = True
        composite_universal = True
        verdicts = (
            hull_bisimple,
            s.has_lc() and composite_universal,
            composite_universal,
        )
    else:
        result = inverse_hull(s, budget=budget)
        universal = compose_relations(r_star(s), green(s)["L"]).is_universal()
        verdicts = (
            is_bisimple(result.hull.semigroup),
            result.lc.ok and universal,
            result.is_i_order and universal,
        )
    if len(set(verdicts)) != 1:
        raise ConsistencyError(
            "bisimple-hull clauses disagree: hull_bisimple=%r lc_and_universal=%r "
            "iorder_and_universal=%r" % verdicts
        )
    return {
        "hull_bisimple": verdicts[0],
        "lc_and_rstar_l_universal": verdicts[1],
        "iorder_and_rstar_l_universal": verdicts[2],
    }


def quotient_chart(s, a, b):
    """The chart rho_a inverted then rho_b, the generic hull element."""
    return rho(s, a).invert().compose(rho(s, b))


def remark_identities(s, budget=200000):
    """Audit the domain, image, and action formulas for quotient charts.

    Returns a list of (claim, True) lines; a violated identity raises
    ConsistencyError since each is guaranteed for left ample input.
    """
    report = is_left_ample(s)
    if not report:
        raise InputError(
            "remark identities require a left ample semigroup; clause %r fails at %r"
            % (report.clause, report.witness)
        )
    plus = plus_table(s)
    rstar = r_star(s)
    n = s.order
    charts = [rho(s, a) for a in range(n)]
    for a in range(n):
        for b in range(n):
            q = charts[a].invert().compose(charts[b])
            if set(q.domain()) != left_ideal(s, s.mul(plus[b], a)):
                raise ConsistencyError(
                    "quotient chart domain formula fails at (%d, %d)" % (a, b)
                )
            if set(q.image()) != left_ideal(s, s.mul(plus[a], b)):
                raise ConsistencyError(
                    "quotient chart image formula fails at (%d, %d)" % (a, b)
                )
            for y in range(n):
                src = s.mul(y, s.mul(plus[b], a))
                if q(src) != s.mul(y, s.mul(plus[a], b)):
                    raise ConsistencyError(
                        "quotient chart action formula fails at (%d, %d, y=%d)" % (a, b, y)
                    )
            if rstar.related(a, b):
                if set(q.domain()) != left_ideal(s, a) or set(q.image()) != left_ideal(s, b):
                    raise ConsistencyError(
                        "quotient chart domain/image for an Rstar pair fails at (%d, %d)"
                        % (a, b)
                    )
                for y in range(n):
                    if q(s.mul(y, a)) != s.mul(y, b):
                        raise ConsistencyError(
                            "quotient chart action for an Rstar pair fails at (%d, %d)"
                            % (a, b)
                        )
    result = inverse_hull(s, budget=budget)
    hull_l = green(result.hull.semigroup)["L"]
    s_l = green(s)["L"]
    for a in range(n):
        for b in range(n):
            if hull_l.related(result.embed(a), result.embed(b)) != s_l.related(a, b):
                raise ConsistencyError(
                    "L-relation transfer through the embedding fails at (%d, %d)" % (a, b)
                )
    lc = has_lc(s)
    if lc.ok:
        for b in range(n):
            for c in range(n):
                w = lc.witnesses[(b, c)]
                us = sorted(
                    {s.mul(u1, plus[b]) for u1 in range(n) if s.mul(u1, b) == w}
                )
                vs = sorted(
                    {s.mul(v1, plus[c]) for v1 in range(n) if s.mul(v1, c) == w}
                )
                if len(us) != 1 or len(vs) != 1:
                    raise ConsistencyError(
                        "normalized ideal-intersection solutions are not unique at (%d, %d)"
                        % (b, c)
                    )
                u, v = us[0], vs[0]
                if not rstar.related(u, v):
                    raise ConsistencyError(
                        "ideal-intersection solutions are not Rstar-related at (%d, %d)"
                        % (b, c)
                    )
                lhs = charts[b].compose(charts[c].invert())
                rhs = charts[u].invert().compose(charts[v])
                if lhs != rhs:
                    raise ConsistencyError(
                        "product-quotient chart identity fails at (%d, %d)" % (b, c)
                    )
                for x in range(n):
                    if lhs(s.mul(x, u)) != s.mul(x, v):
                        raise ConsistencyError(
                            "product-quotient action formula fails at (%d, %d, x=%d)"
                            % (b, c, x)
                        )
    return [
        ("quotient chart domain, image, and action formulas", True),
        ("L-relation transfer through the embedding", True),
        ("product-quotient chart identities under (LC)", True),
    ]


def nat_hull_apply(pair, x):
    """Apply the partial shift encoded by (cutoff, shift) to a natural, or None."""
    a, b = pair
    if x < a:
        return None
    return x - a + b


def nat_hull(window=20):
    """The hull of the additive naturals: partial shifts encoded as pairs.

    A pair (a, b) is the map x -> x - a + b defined on x >= a; composition
    of shifts reproduces exactly the bicyclic multiplication, so the hull
    is the bicyclic semigroup itself.
    """
    return SymbolicSemigroup("bicyclic", window)


def nat_hull_embedding(a):
    """The hull element representing right addition by a: a total shift."""
    return (0, a)
