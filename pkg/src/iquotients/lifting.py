"""Lifting morphisms of straight left I-orders to their ambient inverse semigroups."""

from .errors import ConsistencyError, InputError
from .hull import has_lc, inverse_hull, lc_witness, left_ideal
from .iorder import SubsetEmbedding, is_left_i_order, is_straight, t_relation
from .morphisms import Morphism
from .relations import green, is_left_ample


class LiftOutcome:
    """Either the lifted ambient morphism, or the violated condition with a witness."""

    __slots__ = ("ok", "lifted", "condition", "witness")

    def __init__(self, ok, lifted=None, condition=None, witness=None):
        self.ok = ok
        self.lifted = lifted
        self.condition = condition
        self.witness = witness

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "LiftOutcome(ok=True)"
        return "LiftOutcome(ok=False, condition=%r, witness=%r)" % (
            self.condition,
            self.witness,
        )


def _member_image_map(embedding, other, phi):
    """Ambient image of each member under a morphism between the two member tables."""
    return {
        a: other.from_sub[phi(embedding.to_sub[a])] for a in embedding.members
    }


def lift_morphism(embedding, other, phi):
    """Extend a member morphism to the whole ambient semigroup, or refuse.

    Requires the source embedding to be a straight left I-order and phi to
    map its member table into the other member table.  The extension exists
    exactly when ambient R-related member pairs stay R-related and the
    ternary ideal-inclusion triples are preserved; a refusal carries the
    violated condition ("r_pairs" or "t_triples") and a witness.  On
    success the extension is computed from every straight witness pair,
    cross-checked for well-definedness, multiplicativity, agreement with
    phi, and surjectivity when the image is a left I-order.
    """
    if phi.source != embedding.sub or phi.target != other.sub:
        raise InputError("phi must map the source member table to the target member table")
    straight = is_straight(embedding)
    if not straight:
        raise InputError(
            "lifting requires a straight left I-order; element %r has no R-related witness"
            % (straight.failure,)
        )
    v, w = embedding.view, other.view
    r_q = green(v.semigroup)["R"]
    r_p = green(w.semigroup)["R"]
    amb_phi = _member_image_map(embedding, other, phi)
    members = embedding.member_list
    for a in members:
        for b in members:
            if r_q.related(a, b) and not r_p.related(amb_phi[a], amb_phi[b]):
                return LiftOutcome(False, condition="r_pairs", witness=(a, b))
    t_q = t_relation(embedding)
    t_p = t_relation(other)
    for triple in sorted(t_q.triples):
        mapped = (amb_phi[triple[0]], amb_phi[triple[1]], amb_phi[triple[2]])
        if mapped not in t_p:
            return LiftOutcome(False, condition="t_triples", witness=triple)
    mapping = []
    for q in range(v.order):
        images = set()
        for a in members:
            left = v.invert(a)
            for b in members:
                if r_q.related(a, b) and v.mul(left, b) == q:
                    images.add(w.mul(w.invert(amb_phi[a]), amb_phi[b]))
        if len(images) != 1:
            raise ConsistencyError(
                "lift of element %r is not well defined across witness pairs" % (q,)
            )
        mapping.append(images.pop())
    try:
        lifted = Morphism(v.semigroup, w.semigroup, mapping)
    except InputError:
        raise ConsistencyError(
            "lift is not multiplicative despite both lifting conditions holding"
        )
    for a in members:
        if lifted(a) != amb_phi[a]:
            raise ConsistencyError("lift does not restrict to the given morphism")
    image_members = frozenset(amb_phi.values())
    image_embedding = SubsetEmbedding(w, image_members)
    if is_left_i_order(image_embedding):
        if not lifted.is_surjective():
            raise ConsistencyError(
                "image members form a left I-order yet the lift is not onto"
            )
    return LiftOutcome(True, lifted=lifted)


class IsoOutcome:
    """Mutually inverse ambient isomorphisms, or the refusing direction and witness."""

    __slots__ = ("ok", "forward", "backward", "direction", "condition", "witness")

    def __init__(self, ok, forward=None, backward=None, direction=None, condition=None,
                 witness=None):
        self.ok = ok
        self.forward = forward
        self.backward = backward
        self.direction = direction
        self.condition = condition
        self.witness = witness

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "IsoOutcome(ok=True)"
        return "IsoOutcome(ok=False, direction=%r, condition=%r, witness=%r)" % (
            self.direction,
            self.condition,
            self.witness,
        )


def iso_over_s(embedding, other, phi):
    """Lift an isomorphism of member tables to mutually inverse ambient isomorphisms."""
    if not phi.is_isomorphism():
        raise InputError("phi must be an isomorphism between the member tables")
    forward = lift_morphism(embedding, other, phi)
    if not forward:
        return IsoOutcome(
            False, direction="forward", condition=forward.condition, witness=forward.witness
        )
    backward = lift_morphism(other, embedding, phi.inverse())
    if not backward:
        return IsoOutcome(
            False,
            direction="backward",
            condition=backward.condition,
            witness=backward.witness,
        )
    round1 = forward.lifted.then(backward.lifted)
    round2 = backward.lifted.then(forward.lifted)
    if round1.mapping != tuple(range(embedding.view.order)) or round2.mapping != tuple(
        range(other.view.order)
    ):
        raise ConsistencyError("lifted isomorphisms are not mutually inverse")
    return IsoOutcome(True, forward=forward.lifted, backward=backward.lifted)


class LcPreservingReport:
    """Whether a morphism carries ideal-intersection witnesses to witnesses."""

    __slots__ = ("ok", "witness")

    def __init__(self, ok, witness=None):
        self.ok = ok
        self.witness = witness

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "LcPreservingReport(ok=True)"
        return "LcPreservingReport(ok=False, witness=%r)" % (self.witness,)


def is_lc_preserving(phi):
    """Check T(b phi) meet T(c phi) = T(w phi) for every witness Sb meet Sc = Sw.

    Requires left ample source and target, both with (LC), and phi a
    morphism preserving the plus operation.
    """
    s, t = phi.source, phi.target
    for side, name in ((s, "source"), (t, "target")):
        report = is_left_ample(side)
        if not report:
            raise InputError(
                "%s is not left ample: clause %r fails at %r"
                % (name, report.clause, report.witness)
            )
        if not has_lc(side):
            raise InputError("%s lacks Condition (LC)" % name)
    if not phi.is_two_one():
        raise InputError("phi does not preserve the plus operation")
    for b in range(s.order):
        for c in range(s.order):
            w = lc_witness(s, b, c)
            lhs = left_ideal(t, phi(b)) & left_ideal(t, phi(c))
            if lhs != left_ideal(t, phi(w)):
                return LcPreservingReport(False, witness=(b, c, w))
    return LcPreservingReport(True)


class HullLiftResult:
    """A lift attempt between two inverse hulls, with the hulls and embeddings."""

    __slots__ = (
        "outcome",
        "source_hull",
        "target_hull",
        "source_embedding",
        "target_embedding",
        "hull_phi",
    )

    def __init__(self, outcome, source_hull, target_hull, source_embedding,
                 target_embedding, hull_phi):
        self.outcome = outcome
        self.source_hull = source_hull
        self.target_hull = target_hull
        self.source_embedding = source_embedding
        self.target_embedding = target_embedding
        self.hull_phi = hull_phi

    def __bool__(self):
        return bool(self.outcome)

    def __repr__(self):
        return "HullLiftResult(ok=%r)" % bool(self.outcome)


def hull_embedding(hull_result):
    """The embedded image of a semigroup inside its hull, as a SubsetEmbedding."""
    return SubsetEmbedding(hull_result.hull, hull_result.members)


def lift_between_hulls(phi, budget=200000):
    """Attempt to lift a morphism of left ample (LC) semigroups between their hulls.

    When phi preserves the plus operation the attempt must succeed exactly
    when phi preserves (LC) witnesses; the two verdicts are cross-checked
    and a disagreement raises ConsistencyError.
    """
    s, t = phi.source, phi.target
    for side, name in ((s, "source"), (t, "target")):
        report = is_left_ample(side)
        if not report:
            raise InputError(
                "%s is not left ample: clause %r fails at %r"
                % (name, report.clause, report.witness)
            )
        if not has_lc(side):
            raise InputError(
                "%s lacks Condition (LC), so its image in the hull is not an I-order" % name
            )
    source_hull = inverse_hull(s, budget=budget)
    target_hull = inverse_hull(t, budget=budget)
    source_embedding = hull_embedding(source_hull)
    target_embedding = hull_embedding(target_hull)
    mapping = [0] * s.order
    for a in range(s.order):
        member = source_hull.embed(a)
        target_member = target_hull.embed(phi(a))
        mapping[source_embedding.to_sub[member]] = target_embedding.to_sub[target_member]
    hull_phi = Morphism(source_embedding.sub, target_embedding.sub, mapping)
    outcome = lift_morphism(source_embedding, target_embedding, hull_phi)
    if phi.is_two_one():
        preserving = is_lc_preserving(phi)
        if bool(preserving) != bool(outcome):
            raise ConsistencyError(
                "hull lift verdict %r disagrees with the (LC)-preservation verdict %r"
                % (bool(outcome), bool(preserving))
            )
    return HullLiftResult(
        outcome, source_hull, target_hull, source_embedding, target_embedding, hull_phi
    )
