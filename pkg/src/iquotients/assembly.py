"""Strong semilattices of semigroups: building, extracting, and assembling hulls."""

import os

from . import kernels
from .errors import ConsistencyError, InputError
from .hull import has_lc, inverse_hull
from .inverse import recognize_inverse
from .iorder import SubsetEmbedding, is_left_i_order, is_straight
from .lifting import hull_embedding, is_lc_preserving, iso_over_s, lift_morphism
from .morphisms import Morphism
from .relations import is_left_ample, r_star
from .tables import FiniteSemigroup


class SemilatticeDiagram:
    """A semilattice of semigroups with connecting morphisms down the order.

    y is a finite semilattice on vertex indices, components maps each vertex
    to a semigroup, and connectors maps each strictly comparable pair
    (upper, lower) to a morphism from the upper component to the lower one.
    Identity connectors on the diagonal are implicit.  The connectors must
    commute: following upper -> mid -> lower equals upper -> lower.
    """

    __slots__ = ("y", "components", "connectors")

    def __init__(self, y, components, connectors):
        if not y.is_semilattice():
            raise InputError("the vertex table must be a semilattice")
        if set(components) != set(range(y.order)):
            raise InputError("need exactly one component per vertex")
        full = {}
        for v in range(y.order):
            full[(v, v)] = Morphism.identity(components[v])
        for (upper, lower), phi in connectors.items():
            if upper == lower:
                if phi.mapping != full[(upper, lower)].mapping:
                    raise InputError(
                        "connector %d -> %d must be the identity" % (upper, lower)
                    )
                continue
            if y.mul(upper, lower) != lower:
                raise InputError(
                    "connector %d -> %d does not follow the semilattice order"
                    % (upper, lower)
                )
            if phi.source != components[upper] or phi.target != components[lower]:
                raise InputError(
                    "connector %d -> %d maps the wrong components" % (upper, lower)
                )
            full[(upper, lower)] = phi
        for upper in range(y.order):
            for lower in range(y.order):
                if upper != lower and y.mul(upper, lower) == lower:
                    if (upper, lower) not in full:
                        raise InputError(
                            "missing connector %d -> %d" % (upper, lower)
                        )
        for upper in range(y.order):
            for mid in range(y.order):
                if y.mul(upper, mid) != mid:
                    continue
                for lower in range(y.order):
                    if y.mul(mid, lower) != lower:
                        continue
                    via = full[(upper, mid)].then(full[(mid, lower)])
                    if via.mapping != full[(upper, lower)].mapping:
                        raise InputError(
                            "connectors do not commute along %d -> %d -> %d"
                            % (upper, mid, lower)
                        )
        self.y = y
        self.components = dict(components)
        self.connectors = full

    def comparable_pairs(self):
        """All strictly comparable (upper, lower) vertex pairs."""
        return [
            (u, l)
            for u in range(self.y.order)
            for l in range(self.y.order)
            if u != l and self.y.mul(u, l) == l
        ]

    def connector(self, upper, lower):
        return self.connectors[(upper, lower)]


class BuiltSemilattice:
    """A semigroup glued from a diagram, with the vertex/local bookkeeping."""

    __slots__ = ("semigroup", "diagram", "vertex_of", "local_of", "_offsets")

    def __init__(self, semigroup, diagram, vertex_of, local_of, offsets):
        self.semigroup = semigroup
        self.diagram = diagram
        self.vertex_of = vertex_of
        self.local_of = local_of
        self._offsets = offsets

    def global_index(self, vertex, local):
        return self._offsets[vertex] + local

    def part(self, vertex):
        """Global indices carried by one vertex, in local order."""
        size = self.diagram.components[vertex].order
        start = self._offsets[vertex]
        return tuple(range(start, start + size))


def build_strong_semilattice(diagram):
    """Glue the components of a diagram into one semigroup.

    The product of elements over vertices u and v pushes both through the
    connectors into the meet vertex and multiplies there.  Vertices occupy
    contiguous index blocks in vertex order.
    """
    y = diagram.y
    offsets = {}
    vertex_of = []
    local_of = []
    names = []
    total = 0
    for v in range(y.order):
        comp = diagram.components[v]
        offsets[v] = total
        for a in range(comp.order):
            vertex_of.append(v)
            local_of.append(a)
            names.append("%s@%s" % (comp.element_name(a), y.element_name(v)))
        total += comp.order
    table = [[0] * total for _ in range(total)]
    for g in range(total):
        u, a = vertex_of[g], local_of[g]
        for h in range(total):
            v, b = vertex_of[h], local_of[h]
            meet = y.mul(u, v)
            down_a = diagram.connector(u, meet)(a)
            down_b = diagram.connector(v, meet)(b)
            table[g][h] = offsets[meet] + diagram.components[meet].mul(down_a, down_b)
    flat = bytes(cell for row in table for cell in row)
    bad = kernels.find_nonassociative_triple(flat, total)
    if bad is not None:
        raise ConsistencyError(
            "glued product is not associative at %r despite commuting connectors" % (bad,)
        )
    semigroup = FiniteSemigroup(table, names=tuple(names), check=False)
    return BuiltSemilattice(semigroup, diagram, tuple(vertex_of), tuple(local_of), offsets)


class ExtractionResult:
    """A diagram recovered from a partitioned semigroup, plus the reindexing."""

    __slots__ = ("diagram", "built", "to_built", "from_built")

    def __init__(self, diagram, built, to_built, from_built):
        self.diagram = diagram
        self.built = built
        self.to_built = to_built
        self.from_built = from_built


def extract_strong_structure(p, parts):
    """Recover the diagram of a semigroup partitioned into monoid parts.

    parts lists the element indices of each part.  The parts must partition
    the semigroup, multiply into single parts semilattice-fashion, and each
    must be a monoid; the part identities must multiply among themselves.
    Once those hypotheses hold, the part identities must be central, the
    maps a -> a e_lower must be connecting morphisms, and regluing must
    reproduce the original product; failures of those facts raise
    ConsistencyError.
    """
    part_lists = [tuple(sorted(set(block))) for block in parts]
    seen = [m for block in part_lists for m in block]
    if sorted(seen) != list(range(p.order)) or len(seen) != p.order:
        raise InputError("parts must partition the element indices exactly")
    part_of = {}
    for k, block in enumerate(part_lists):
        for m in block:
            part_of[m] = k
    count = len(part_lists)
    y_table = [[0] * count for _ in range(count)]
    for i, block_i in enumerate(part_lists):
        for j, block_j in enumerate(part_lists):
            targets = {part_of[p.mul(a, b)] for a in block_i for b in block_j}
            if len(targets) != 1:
                raise InputError(
                    "products of part %d and part %d land in several parts" % (i, j)
                )
            y_table[i][j] = targets.pop()
    try:
        y = FiniteSemigroup(y_table)
    except InputError:
        raise InputError("part products do not compose associatively")
    if not y.is_semilattice():
        raise InputError("part products do not form a semilattice")
    components = {}
    locals_of = {}
    for k, block in enumerate(part_lists):
        if not p.is_closed_subset(block):
            raise InputError("part %d is not closed under the product" % k)
        sub, to_sub, _ = p.subsemigroup(block)
        if not sub.is_monoid():
            raise InputError("part %d is not a monoid" % k)
        components[k] = sub
        locals_of[k] = to_sub
    identities = {k: part_lists[k][components[k].identity()] for k in range(count)}
    for i in range(count):
        for j in range(count):
            product = p.mul(identities[i], identities[j])
            if product != identities[y.mul(i, j)]:
                raise InputError(
                    "part identities are not closed: %d * %d = %d is not the"
                    " identity of part %d"
                    % (identities[i], identities[j], product, y.mul(i, j))
                )
    for k, e in identities.items():
        for x in range(p.order):
            if p.mul(e, x) != p.mul(x, e):
                raise ConsistencyError(
                    "part identity %d fails to be central against %d" % (e, x)
                )
    connectors = {}
    for upper in range(count):
        for lower in range(count):
            if upper == lower or y.mul(upper, lower) != lower:
                continue
            e_low = identities[lower]
            mapping = []
            for a in part_lists[upper]:
                image = p.mul(a, e_low)
                if part_of[image] != lower:
                    raise ConsistencyError(
                        "multiplying %d by the identity of part %d leaves that part"
                        % (a, lower)
                    )
                mapping.append(locals_of[lower][image])
            try:
                connectors[(upper, lower)] = Morphism(
                    components[upper], components[lower], mapping
                )
            except InputError:
                raise ConsistencyError(
                    "the map into part %d along its identity is not a morphism" % lower
                )
            if mapping[components[upper].identity()] != components[lower].identity():
                raise ConsistencyError(
                    "the extracted connector %d -> %d fails to preserve the identity"
                    % (upper, lower)
                )
    try:
        diagram = SemilatticeDiagram(y, components, connectors)
    except InputError as exc:
        raise ConsistencyError("extracted connectors are not a valid diagram: %s" % exc)
    built = build_strong_semilattice(diagram)
    to_built = [0] * p.order
    for k, block in enumerate(part_lists):
        for m in block:
            to_built[m] = built.global_index(k, locals_of[k][m])
    from_built = [0] * p.order
    for m, g in enumerate(to_built):
        from_built[g] = m
    for a in range(p.order):
        for b in range(p.order):
            if to_built[p.mul(a, b)] != built.semigroup.mul(to_built[a], to_built[b]):
                raise ConsistencyError(
                    "regluing the extracted diagram changes the product at (%d, %d)"
                    % (a, b)
                )
    return ExtractionResult(diagram, built, tuple(to_built), tuple(from_built))


def ample_semilattice_report(diagram):
    """Audit a glued semigroup built from left ample components.

    Requires every component left ample and every connector to preserve the
    plus operation.  Returns verdicts for: the glued semigroup being left
    ample, its R* relation matching the per-component one on shared
    vertices, and (when every component has (LC)) the glued semigroup
    having (LC) exactly when every connector preserves (LC) witnesses.
    Each verdict is guaranteed, so any failure raises ConsistencyError.
    """
    for v, comp in diagram.components.items():
        report = is_left_ample(comp)
        if not report:
            raise InputError(
                "component at vertex %d is not left ample: clause %r fails at %r"
                % (v, report.clause, report.witness)
            )
    for (upper, lower), phi in diagram.connectors.items():
        if upper != lower and not phi.is_two_one():
            raise InputError(
                "connector %d -> %d does not preserve the plus operation"
                % (upper, lower)
            )
    built = build_strong_semilattice(diagram)
    ample = is_left_ample(built.semigroup)
    if not ample:
        raise ConsistencyError(
            "glued semigroup is not left ample: clause %r fails at %r"
            % (ample.clause, ample.witness)
        )
    star = r_star(built.semigroup)
    component_star = {
        v: r_star(comp) for v, comp in diagram.components.items()
    }
    for g in range(built.semigroup.order):
        for h in range(built.semigroup.order):
            same_vertex = built.vertex_of[g] == built.vertex_of[h]
            predicted = same_vertex and component_star[built.vertex_of[g]].related(
                built.local_of[g], built.local_of[h]
            )
            if star.related(g, h) != predicted:
                raise ConsistencyError(
                    "R* on the glued semigroup deviates from the components at (%d, %d)"
                    % (g, h)
                )
    components_have_lc = all(has_lc(comp) for comp in diagram.components.values())
    lc_verdict = None
    if components_have_lc:
        built_lc = bool(has_lc(built.semigroup))
        connectors_preserve = all(
            bool(is_lc_preserving(phi))
            for (upper, lower), phi in diagram.connectors.items()
            if upper != lower
        )
        if built_lc != connectors_preserve:
            raise ConsistencyError(
                "glued (LC) verdict %r disagrees with connector preservation %r"
                % (built_lc, connectors_preserve)
            )
        lc_verdict = built_lc
    return {
        "left_ample": True,
        "rstar_matches_components": True,
        "lc_iff_connectors_preserve": lc_verdict,
    }


class AssemblyResult:
    """A glued semigroup, the glued hulls, and the isomorphism to the big hull."""

    __slots__ = (
        "built",
        "hulls",
        "hull_connectors",
        "quotient_built",
        "view",
        "member_embedding",
        "big_hull",
        "iso",
    )

    def __init__(self, built, hulls, hull_connectors, quotient_built, view,
                 member_embedding, big_hull, iso):
        self.built = built
        self.hulls = hulls
        self.hull_connectors = hull_connectors
        self.quotient_built = quotient_built
        self.view = view
        self.member_embedding = member_embedding
        self.big_hull = big_hull
        self.iso = iso


def assemble_hull_semilattice(diagram, budget=200000):
    """Glue per-component hulls along lifted connectors and match the big hull.

    Requires left ample (LC) components and plus-preserving, (LC)-preserving
    connectors.  Lifts every connector between the component hulls, glues
    the hulls over the same semilattice, and checks the guaranteed facts:
    the glued hulls form an inverse semigroup, the glued components sit
    inside it as a straight left I-order, and it is isomorphic over the
    glued components to their inverse hull.
    """
    for v, comp in diagram.components.items():
        report = is_left_ample(comp)
        if not report:
            raise InputError(
                "component at vertex %d is not left ample: clause %r fails at %r"
                % (v, report.clause, report.witness)
            )
        if not has_lc(comp):
            raise InputError("component at vertex %d lacks Condition (LC)" % v)
    for (upper, lower), phi in diagram.connectors.items():
        if upper == lower:
            continue
        if not phi.is_two_one():
            raise InputError(
                "connector %d -> %d does not preserve the plus operation"
                % (upper, lower)
            )
        preserving = is_lc_preserving(phi)
        if not preserving:
            raise InputError(
                "connector %d -> %d does not preserve (LC) witnesses: %r"
                % (upper, lower, preserving.witness)
            )
    built = build_strong_semilattice(diagram)
    hulls = {v: inverse_hull(comp, budget=budget) for v, comp in diagram.components.items()}
    embeddings = {v: hull_embedding(hulls[v]) for v in hulls}
    hull_connectors = {}
    for upper, lower in diagram.comparable_pairs():
        phi = diagram.connector(upper, lower)
        src, dst = embeddings[upper], embeddings[lower]
        mapping = [0] * src.sub.order
        for a in range(phi.source.order):
            mapping[src.to_sub[hulls[upper].embed(a)]] = dst.to_sub[
                hulls[lower].embed(phi(a))
            ]
        member_phi = Morphism(src.sub, dst.sub, mapping)
        outcome = lift_morphism(src, dst, member_phi)
        if not outcome:
            raise ConsistencyError(
                "connector %d -> %d refuses to lift between hulls (%s at %r)"
                % (upper, lower, outcome.condition, outcome.witness)
            )
        hull_connectors[(upper, lower)] = outcome.lifted
    hull_components = {v: hulls[v].hull.semigroup for v in hulls}
    try:
        hull_diagram = SemilatticeDiagram(diagram.y, hull_components, hull_connectors)
    except InputError as exc:
        raise ConsistencyError("lifted connectors are not a valid diagram: %s" % exc)
    quotient_built = build_strong_semilattice(hull_diagram)
    recognition = recognize_inverse(quotient_built.semigroup)
    if not recognition.ok:
        raise ConsistencyError(
            "glued hulls are not an inverse semigroup (%s)" % recognition.reason
        )
    members = frozenset(
        quotient_built.global_index(v, hulls[v].embed(a))
        for v, comp in diagram.components.items()
        for a in range(comp.order)
    )
    member_embedding = SubsetEmbedding(recognition.view, members)
    if not is_left_i_order(member_embedding):
        raise ConsistencyError("glued components are not a left I-order in the glued hulls")
    if not is_straight(member_embedding):
        raise ConsistencyError("glued components are not straight in the glued hulls")
    big_hull = inverse_hull(built.semigroup, budget=budget)
    big_embedding = hull_embedding(big_hull)
    mapping = [0] * member_embedding.sub.order
    for v, comp in diagram.components.items():
        for a in range(comp.order):
            g = built.global_index(v, a)
            q_member = quotient_built.global_index(v, hulls[v].embed(a))
            mapping[member_embedding.to_sub[q_member]] = big_embedding.to_sub[
                big_hull.embed(g)
            ]
    member_iso = Morphism(member_embedding.sub, big_embedding.sub, mapping)
    iso = iso_over_s(member_embedding, big_embedding, member_iso)
    if not iso:
        raise ConsistencyError(
            "glued hulls and the inverse hull refuse to match (%s in the %s direction at %r)"
            % (iso.condition, iso.direction, iso.witness)
        )
    return AssemblyResult(
        built,
        hulls,
        hull_connectors,
        quotient_built,
        recognition.view,
        member_embedding,
        big_hull,
        iso,
    )


def load_diagram(path):
    """Read a diagram description file.

    Lines are 'semilattice <file>', 'component <vertex> <file>', and
    'connector <upper> <lower> <file>'; paths are relative to the
    description file, vertices are indices into the semilattice table, and
    component files hold tables while connector files hold morphisms as
    'i -> j' lines.
    """
    base = os.path.dirname(os.path.abspath(path))
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    y = None
    component_paths = {}
    connector_paths = {}
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        words = line.split()
        if words[0] == "semilattice" and len(words) == 2:
            if y is not None:
                raise InputError("line %d: second semilattice line" % number)
            y = _read_table(os.path.join(base, words[1]))
        elif words[0] == "component" and len(words) == 3:
            vertex = _parse_vertex(words[1], number)
            if vertex in component_paths:
                raise InputError("line %d: second component for vertex %d" % (number, vertex))
            component_paths[vertex] = os.path.join(base, words[2])
        elif words[0] == "connector" and len(words) == 4:
            upper = _parse_vertex(words[1], number)
            lower = _parse_vertex(words[2], number)
            connector_paths[(upper, lower)] = os.path.join(base, words[3])
        else:
            raise InputError("line %d: expected semilattice/component/connector" % number)
    if y is None:
        raise InputError("diagram file names no semilattice table")
    components = {v: _read_table(p) for v, p in component_paths.items()}
    if set(components) != set(range(y.order)):
        raise InputError("need exactly one component per semilattice vertex")
    connectors = {}
    for (upper, lower), p in connector_paths.items():
        if upper not in components or lower not in components:
            raise InputError("connector %d -> %d names an unknown vertex" % (upper, lower))
        with open(p, "r", encoding="utf-8") as handle:
            connectors[(upper, lower)] = Morphism.from_text(
                components[upper], components[lower], handle.read()
            )
    return SemilatticeDiagram(y, components, connectors)


def _parse_vertex(word, number):
    try:
        return int(word)
    except ValueError:
        raise InputError("line %d: vertex %r is not an index" % (number, word))


def _read_table(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return FiniteSemigroup.from_text(handle.read())
    except OSError as exc:
        raise InputError("cannot read table file %s: %s" % (path, exc))
