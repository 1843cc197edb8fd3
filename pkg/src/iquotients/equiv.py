"""Round trips between left ample (LC) semigroups and bisimple inverse pairs.

A LacObject is a left ample semigroup with Condition (LC) whose composite
relation R* then L is universal.  A BisObject is a bisimple inverse
semigroup with a distinguished subsemigroup that is a union of its
R-classes.  Passing to the inverse hull turns the former into the latter;
restricting to the members goes back; and both round trips land on
isomorphic copies, naturally in morphisms.
"""

from .errors import ConsistencyError, InputError
from .hull import has_lc, inverse_hull, nat_hull, nat_hull_apply
from .inverse import is_bisimple
from .iorder import BicyclicEmbedding, SubsetEmbedding, is_left_i_order, is_straight
from .lifting import hull_embedding, is_lc_preserving, lift_between_hulls
from .morphisms import Morphism
from .relations import compose_relations, green, is_left_ample, r_star
from .symbolic import SymbolicSemigroup, additive_naturals


class LacObject:
    """A left ample semigroup with (LC) whose R* then L composite is universal."""

    __slots__ = ("semigroup", "symbolic")

    def __init__(self, semigroup):
        symbolic = isinstance(semigroup, SymbolicSemigroup)
        if symbolic:
            if semigroup.kind != "nat":
                raise InputError(
                    "the additive naturals are the only symbolic carrier supported"
                )
        else:
            report = is_left_ample(semigroup)
            if not report:
                raise InputError(
                    "carrier is not left ample: clause %r fails at %r"
                    % (report.clause, report.witness)
                )
            if not has_lc(semigroup):
                raise InputError("carrier lacks Condition (LC)")
            composite = compose_relations(r_star(semigroup), green(semigroup)["L"])
            if not composite.is_universal():
                raise InputError("the R* then L composite is not universal")
        self.semigroup = semigroup
        self.symbolic = symbolic

    def __repr__(self):
        if self.symbolic:
            return "LacObject(naturals, window=%d)" % self.semigroup.window
        return "LacObject(order=%d)" % self.semigroup.order


class BisObject:
    """A bisimple inverse semigroup with members forming a union of R-classes."""

    __slots__ = ("embedding", "symbolic")

    def __init__(self, embedding):
        if isinstance(embedding, BicyclicEmbedding):
            self.embedding = embedding
            self.symbolic = True
            return
        if not isinstance(embedding, SubsetEmbedding):
            raise InputError("expected a SubsetEmbedding or a BicyclicEmbedding")
        ambient = embedding.view.semigroup
        if not is_bisimple(ambient):
            raise InputError("ambient semigroup is not bisimple")
        r = green(ambient)["R"]
        members = embedding.members
        for a in sorted(members):
            for x in range(ambient.order):
                if r.related(a, x) and x not in members:
                    raise InputError(
                        "members are not a union of ambient R-classes:"
                        " %d is R-related to the non-member %d" % (a, x)
                    )
        report = is_left_ample(embedding.sub)
        if not report:
            raise ConsistencyError(
                "member semigroup is not left ample: clause %r fails at %r"
                % (report.clause, report.witness)
            )
        if not is_left_i_order(embedding):
            raise ConsistencyError("members are not a left I-order in the ambient semigroup")
        if not is_straight(embedding):
            raise ConsistencyError("members are not straight in the ambient semigroup")
        if not has_lc(embedding.sub):
            raise ConsistencyError("member semigroup lacks Condition (LC)")
        self.embedding = embedding
        self.symbolic = False

    def __repr__(self):
        if self.symbolic:
            return "BisObject(bicyclic, window=%d)" % self.embedding.window
        return "BisObject(ambient=%d, members=%d)" % (
            self.embedding.view.order,
            len(self.embedding.members),
        )


def _bis_guaranteed(embedding):
    """Wrap a hull-built embedding whose pair certificates are guaranteed."""
    try:
        return BisObject(embedding)
    except InputError as exc:
        raise ConsistencyError("hull pair lost a guaranteed property: %s" % exc)


def _lac_guaranteed(semigroup):
    """Wrap a member semigroup whose carrier certificates are guaranteed."""
    try:
        return LacObject(semigroup)
    except InputError as exc:
        raise ConsistencyError("member semigroup lost a guaranteed property: %s" % exc)


def pair_of_order(lac, budget=200000):
    """The bisimple pair built from a left ample (LC) semigroup via its hull."""
    if lac.symbolic:
        return BisObject(BicyclicEmbedding(lac.semigroup.window))
    hull = inverse_hull(lac.semigroup, budget=budget)
    return _bis_guaranteed(hull_embedding(hull))


def order_of_pair(bis):
    """The member semigroup of a bisimple pair, recertified as a carrier."""
    if bis.symbolic:
        return LacObject(additive_naturals(bis.embedding.window))
    return _lac_guaranteed(bis.embedding.sub)


def pair_of_morphism(phi, budget=200000):
    """Lift a plus- and (LC)-preserving morphism between the hulls of its ends.

    Requires left ample (LC) carriers on both sides.  The lift is
    guaranteed to exist and to restrict to phi on the embedded copies; the
    returned result carries both hulls and the lifted ambient morphism.
    """
    if not phi.is_two_one():
        raise InputError("phi does not preserve the plus operation")
    preserving = is_lc_preserving(phi)
    if not preserving:
        raise InputError(
            "phi does not preserve (LC) witnesses: %r" % (preserving.witness,)
        )
    result = lift_between_hulls(phi, budget=budget)
    if not result.outcome:
        raise ConsistencyError("an (LC)-preserving morphism refused to lift between hulls")
    return result


def order_of_morphism(source, target, psi):
    """Restrict an ambient morphism of bisimple pairs to the member semigroups.

    psi must map the source ambient semigroup into the target one and carry
    members into members.  The restriction is then guaranteed to preserve
    the plus operation and (LC) witnesses.
    """
    if source.symbolic or target.symbolic:
        raise InputError("symbolic pairs are not supported here")
    src, dst = source.embedding, target.embedding
    if psi.source != src.view.semigroup or psi.target != dst.view.semigroup:
        raise InputError("psi must map the source ambient to the target ambient")
    mapping = [0] * src.sub.order
    for a in src.members:
        image = psi(a)
        if image not in dst.members:
            raise InputError("psi sends member %d outside the target members" % a)
        mapping[src.to_sub[a]] = dst.to_sub[image]
    try:
        restriction = Morphism(src.sub, dst.sub, mapping)
    except InputError:
        raise ConsistencyError("restriction of an ambient morphism is not multiplicative")
    if not restriction.is_two_one():
        raise ConsistencyError("restriction does not preserve the plus operation")
    preserving = is_lc_preserving(restriction)
    if not preserving:
        raise ConsistencyError(
            "restriction does not preserve (LC) witnesses at %r" % (preserving.witness,)
        )
    return restriction


class RoundtripReport:
    """The isomorphism witnessing a round trip, plus the rebuilt object."""

    __slots__ = ("ok", "iso", "rebuilt")

    def __init__(self, ok, iso, rebuilt):
        self.ok = ok
        self.iso = iso
        self.rebuilt = rebuilt

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "RoundtripReport(ok=%r)" % self.ok


def roundtrip_order(lac, budget=200000):
    """Check a carrier is isomorphic to the members of its own hull pair.

    The comparison map sends each element to its embedded copy; it must be
    a bijective morphism onto the members that preserves the plus
    operation.  Failures raise ConsistencyError.
    """
    if lac.symbolic:
        window = lac.semigroup.window
        bis = BisObject(BicyclicEmbedding(window))
        q = bis.embedding.semigroup
        for m in range(window + 1):
            for n in range(window + 1):
                if m + n <= window:
                    if q.multiply((0, m), (0, n)) != (0, m + n):
                        raise ConsistencyError(
                            "embedding of the naturals is not multiplicative at (%d, %d)"
                            % (m, n)
                        )
        return RoundtripReport(True, None, bis)
    hull = inverse_hull(lac.semigroup, budget=budget)
    embedding = hull_embedding(hull)
    bis = _bis_guaranteed(embedding)
    mapping = [embedding.to_sub[hull.embed(a)] for a in range(lac.semigroup.order)]
    try:
        theta = Morphism(lac.semigroup, embedding.sub, mapping)
    except InputError:
        raise ConsistencyError("the hull embedding is not multiplicative")
    if not theta.is_isomorphism():
        raise ConsistencyError("the hull embedding is not bijective onto the members")
    if not theta.is_two_one():
        raise ConsistencyError("the hull embedding does not preserve the plus operation")
    return RoundtripReport(True, theta, bis)


def roundtrip_pair(bis, budget=200000):
    """Check a bisimple pair is isomorphic to the hull pair of its members.

    The comparison map sends each inverse-times-member quotient to the
    corresponding quotient of embedded members; it must be well defined
    across all witness pairs, an isomorphism, and fix the embedded members.
    Failures raise ConsistencyError.
    """
    if bis.symbolic:
        window = bis.embedding.window
        if not check_nat_hull(window):
            raise ConsistencyError("the chart model of the naturals' hull went wrong")
        return RoundtripReport(True, None, LacObject(additive_naturals(window)))
    src = bis.embedding
    v = src.view
    hull = inverse_hull(src.sub, budget=budget)
    target = hull.hull
    rebuilt = _bis_guaranteed(hull_embedding(hull))
    r = green(v.semigroup)["R"]
    members = src.member_list
    mapping = []
    for q in range(v.order):
        images = set()
        for a in members:
            left = v.invert(a)
            for b in members:
                if r.related(a, b) and v.mul(left, b) == q:
                    images.add(
                        target.mul(
                            target.invert(hull.embed(src.to_sub[a])),
                            hull.embed(src.to_sub[b]),
                        )
                    )
        if len(images) != 1:
            raise ConsistencyError(
                "the hull comparison map is not well defined at %r" % (q,)
            )
        mapping.append(images.pop())
    try:
        mu = Morphism(v.semigroup, target.semigroup, mapping)
    except InputError:
        raise ConsistencyError("the hull comparison map is not multiplicative")
    if not mu.is_isomorphism():
        raise ConsistencyError("the hull comparison map is not an isomorphism")
    for a in members:
        if mu(a) != hull.embed(src.to_sub[a]):
            raise ConsistencyError("the hull comparison map moves the embedded member %d" % a)
    return RoundtripReport(True, mu, rebuilt)


def naturality_order(phi, budget=200000):
    """Check the round-trip square of a carrier morphism commutes.

    Embedding into the hull and then applying the lifted morphism must
    agree with applying phi first and embedding after.
    """
    result = pair_of_morphism(phi, budget=budget)
    lifted = result.outcome.lifted
    for a in range(phi.source.order):
        if lifted(result.source_hull.embed(a)) != result.target_hull.embed(phi(a)):
            raise ConsistencyError("round-trip square fails at element %d" % a)
    return True


def naturality_pair(source, target, psi, budget=200000):
    """Check the round-trip square of an ambient pair morphism commutes.

    Comparing with the hull pair and then applying the lifted restriction
    must agree with applying psi first and comparing after.
    """
    restriction = order_of_morphism(source, target, psi)
    lift_result = pair_of_morphism(restriction, budget=budget)
    lifted = lift_result.outcome.lifted
    mu_source = roundtrip_pair(source, budget=budget).iso
    mu_target = roundtrip_pair(target, budget=budget).iso
    for q in range(source.embedding.view.order):
        if lifted(mu_source(q)) != mu_target(psi(q)):
            raise ConsistencyError("round-trip square fails at element %d" % q)
    return True


def check_nat_hull(window=20):
    """Verify the two-coordinate model of the naturals' hull on a window.

    Every pair (a, b) stands for the partial shift x -> x - a + b defined on
    x >= a.  The check composes those shifts pointwise and compares against
    the closed-form product, confirms the embedding n -> (0, n) is
    multiplicative, and confirms (a, b) is the quotient of the embedded
    shifts a and b.  A failure raises ConsistencyError.
    """
    q = nat_hull(window)
    pairs = [(a, b) for a in range(window + 1) for b in range(window + 1)]
    for first in pairs:
        for second in pairs:
            product = q.multiply(first, second)
            cutoff = product[0]
            probes = {cutoff, cutoff + 1, cutoff + window}
            if cutoff > 0:
                probes.add(cutoff - 1)
            for x in sorted(probes):
                step = nat_hull_apply(first, x)
                via = None if step is None else nat_hull_apply(second, step)
                if via != nat_hull_apply(product, x):
                    raise ConsistencyError(
                        "shift composition disagrees with the closed form at %r * %r on %d"
                        % (first, second, x)
                    )
    for m in range(window + 1):
        for n in range(window + 1):
            if m + n <= window and q.multiply((0, m), (0, n)) != (0, m + n):
                raise ConsistencyError(
                    "embedding of the naturals is not multiplicative at (%d, %d)" % (m, n)
                )
    for a in range(window + 1):
        for b in range(window + 1):
            if q.multiply(q.invert((0, a)), (0, b)) != (a, b):
                raise ConsistencyError(
                    "pair (%d, %d) is not the quotient of its embedded shifts" % (a, b)
                )
    return True
