"""Exact permutation-group engine.

Groups carry a base and strong generating set built by a deterministic
Schreier-Sims procedure, which gives exact orders, membership tests and
element enumeration.  Centralizers, normalizers and subgroup-conjugacy
transporters are computed by orbit-stabilizer searches on the conjugation
action; their correctness is anchored by brute-force oracles in the test
suite for every group below the oracle cap.

All objects are immutable after construction and safe for concurrent
reads.  Derived data (classes, element lists, local subgroups) is memoised
on the instance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CapExceeded, InternalInconsistency, NotAbelian, NotNormalized
from .perms import Perm

__all__ = [
    "PermGroup",
    "ConjClass",
    "group_order",
    "conjugacy_classes",
    "centralizer",
    "normalizer",
    "sylow_subgroup",
    "o_p_residual",
    "is_conjugate_subgroups",
    "subgroup_transporter",
    "subgroup_classes_of_p_group",
    "fixed_points",
    "normal_closure",
    "derived_subgroup",
    "center",
    "quotient_by_normal",
    "conjugation_image",
    "all_subgroups",
    "abelian_invariants",
    "subgroup_fingerprint",
    "same_subgroup",
    "ORDER_CAP",
    "SUBGROUP_ENUM_CAP",
]

# Refuse element enumeration and class computation above this order.
ORDER_CAP = 10**6
# Cap on |P| for exhaustive p-subgroup enumeration.
SUBGROUP_ENUM_CAP = 2**8


# ---------------------------------------------------------------------------
# base and strong generating set


class _BSGS:
    """Deterministic Schreier-Sims data: base, strong generators, transversals.

    Uses the plain textbook fixpoint iteration: after any strong-generator
    addition the Schreier condition is rechecked at every level until a
    clean pass.  Quadratic but simple, and fast at the scales this library
    is used at.
    """

    __slots__ = ("degree", "base", "strong", "orbits", "identity")

    def __init__(self, degree: int, gens):
        self.degree = degree
        self.base: list[int] = []
        self.strong: list[Perm] = []
        self.orbits: list[dict[int, Perm]] = []  # per level: point -> u with u(b)=point
        self.identity = Perm.identity(degree)
        for g in gens:
            if not g.is_identity() and g not in self.strong:
                self._insert(g)
        self._close()

    def order(self) -> int:
        n = 1
        for orb in self.orbits:
            n *= len(orb)
        return n

    def _level_of(self, g: Perm) -> int:
        for i, b in enumerate(self.base):
            if g(b) != b:
                return i
        return len(self.base)

    def _insert(self, g: Perm):
        lvl = self._level_of(g)
        if lvl == len(self.base):
            self.base.append(g.min_moved())
            self.orbits.append({})
        self.strong.append(g)
        for i in range(lvl + 1):
            self._rebuild_orbit(i)

    def _gens_at(self, level: int):
        base_prefix = self.base[:level]
        return [g for g in self.strong if all(g(b) == b for b in base_prefix)]

    def _rebuild_orbit(self, level: int):
        b = self.base[level]
        gens = self._gens_at(level)
        orbit = {b: self.identity}
        queue = [b]
        while queue:
            pt = queue.pop()
            u = orbit[pt]
            for g in gens:
                im = g(pt)
                if im not in orbit:
                    orbit[im] = u * g
                    queue.append(im)
        self.orbits[level] = orbit

    def sift(self, g: Perm):
        """Return (residue, level): residue is identity iff g is a member."""
        for i, b in enumerate(self.base):
            im = g(b)
            orb = self.orbits[i]
            if im not in orb:
                return g, i
            g = g * orb[im].inverse()
        return g, len(self.base)

    def contains(self, g: Perm) -> bool:
        r, _ = self.sift(g)
        return r.is_identity()

    def _close(self):
        # fixpoint: all Schreier generators at all levels must sift to identity
        while True:
            residue = None
            for level in range(len(self.base) - 1, -1, -1):
                orb = self.orbits[level]
                gens = self._gens_at(level)
                for pt in sorted(orb):
                    u = orb[pt]
                    for g in gens:
                        u2 = orb[g(pt)]
                        s = u * g * u2.inverse()
                        r, _ = self.sift(s)
                        if not r.is_identity():
                            residue = r
                            break
                    if residue is not None:
                        break
                if residue is not None:
                    break
            if residue is None:
                return
            self._insert(residue)

    def iter_elements(self):
        levels = len(self.base)
        transversals = [sorted(orb.items()) for orb in self.orbits]

        def rec(level):
            if level == levels:
                yield self.identity
                return
            for _, u in transversals[level]:
                for h in rec(level + 1):
                    yield h * u

        return rec(0)

    def random_element(self, rng) -> Perm:
        g = self.identity
        for orb in self.orbits:
            pts = sorted(orb)
            g = g * orb[pts[rng.randrange(len(pts))]]
        return g


# ---------------------------------------------------------------------------
# groups


@dataclass(frozen=True)
class ConjClass:
    representative: Perm
    size: int
    element_order: int
    centralizer_order: int
    elements: tuple

    def is_p_regular(self, p: int) -> bool:
        return self.element_order % p != 0


class PermGroup:
    """A finite permutation group, optionally a handle into a parent group.

    Subgroup handles built with :meth:`subgroup` verify that every
    generator is a member of the parent; their own order is computed from
    a fresh base and strong generating set.
    """

    def __init__(self, degree: int, generators, parent: "PermGroup | None" = None,
                 name: str | None = None, _skip_check: bool = False):
        gens = []
        for g in generators:
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self.parent = parent
        self.name = name
        if parent is not None and not _skip_check:
            for g in gens:
                if g not in parent:
                    raise ValueError("subgroup generator outside parent group")
        self._bsgs = None
        self._cache: dict = {}

    # -- construction helpers

    def subgroup(self, generators, name: str | None = None) -> "PermGroup":
        return PermGroup(self.degree, generators, parent=self._top(), name=name)

    def _top(self) -> "PermGroup":
        return self if self.parent is None else self.parent

    @staticmethod
    def trivial(degree: int) -> "PermGroup":
        return PermGroup(degree, [])

    # -- BSGS-backed primitives

    @property
    def bsgs(self) -> _BSGS:
        if self._bsgs is None:
            self._bsgs = _BSGS(self.degree, self.generators)
        return self._bsgs

    @property
    def order(self) -> int:
        n = self._cache.get("order")
        if n is None:
            n = self._cache["order"] = self.bsgs.order()
        return n

    def __contains__(self, g: Perm) -> bool:
        return g.degree == self.degree and self.bsgs.contains(g)

    def __len__(self):
        return self.order

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} deg={self.degree} order={self.order}>"

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def elements(self, cap: int = ORDER_CAP) -> tuple:
        elems = self._cache.get("elements")
        if elems is None:
            if self.order > cap:
                raise CapExceeded(f"order {self.order} exceeds cap {cap}")
            elems = self._cache["elements"] = tuple(self.bsgs.iter_elements())
        return elems

    def element_set(self, cap: int = ORDER_CAP) -> frozenset:
        es = self._cache.get("element_set")
        if es is None:
            es = self._cache["element_set"] = frozenset(self.elements(cap))
        return es

    def random_element(self, rng) -> Perm:
        return self.bsgs.random_element(rng)

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return all(g in other for g in self.generators)

    def is_abelian(self) -> bool:
        val = self._cache.get("abelian")
        if val is None:
            gens = self.generators
            val = all(gens[i] * gens[j] == gens[j] * gens[i]
                      for i in range(len(gens)) for j in range(i))
            self._cache["abelian"] = val
        return val

    def is_p_group(self, p: int) -> bool:
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    def exponent(self) -> int:
        e = 1
        for cls in self.conjugacy_classes():
            e = math.lcm(e, cls.element_order)
        return e

    # -- conjugacy classes

    def conjugacy_classes(self, cap: int = ORDER_CAP) -> tuple:
        classes = self._cache.get("classes")
        if classes is not None:
            return classes
        if self.order > cap:
            raise CapExceeded(f"order {self.order} exceeds cap {cap}")
        elems = self.elements(cap)
        order = self.order
        gens = self.generators
        unseen = set(elems)
        raw = []
        for x in sorted(elems):
            if x not in unseen:
                continue
            # conjugation orbit of x under the generators
            orbit = {x}
            queue = [x]
            while queue:
                y = queue.pop()
                for g in gens:
                    z = y ** g
                    if z not in orbit:
                        orbit.add(z)
                        queue.append(z)
            unseen -= orbit
            rep = min(orbit)
            raw.append(ConjClass(
                representative=rep,
                size=len(orbit),
                element_order=rep.order(),
                centralizer_order=order // len(orbit),
                elements=tuple(sorted(orbit)),
            ))
        raw.sort(key=lambda c: (c.element_order, c.size, c.representative.images))
        classes = tuple(raw)
        self._cache["classes"] = classes
        self._cache["class_of"] = {x: i for i, c in enumerate(classes) for x in c.elements}
        return classes

    def class_of(self, g: Perm) -> int:
        self.conjugacy_classes()
        return self._cache["class_of"][g]


def group_order(g: PermGroup) -> int:
    return g.order


def conjugacy_classes(g: PermGroup, cap: int = ORDER_CAP) -> tuple:
    return g.conjugacy_classes(cap=cap)


# ---------------------------------------------------------------------------
# orbit-stabilizer searches on the conjugation action


def _stabilizer_of_action(group: PermGroup, seed, act, key=None):
    """Orbit-stabilizer for an arbitrary action of `group`.

    `act(x, g)` applies a generator; `key(x)` gives a hashable form.
    Returns (orbit_keys dict key->witness, stabilizer PermGroup), where
    witness * ... maps the seed to that orbit point.  Stabilizer generators
    are sifted Schreier generators.
    """
    key = key or (lambda x: x)
    seed_key = key(seed)
    orbit = {seed_key: (seed, group.identity)}
    queue = [seed_key]
    stab_gens: list[Perm] = []
    stab_bsgs = _BSGS(group.degree, [])
    while queue:
        k = queue.pop(0)
        x, wit = orbit[k]
        for g in group.generators:
            y = act(x, g)
            yk = key(y)
            if yk not in orbit:
                orbit[yk] = (y, wit * g)
                queue.append(yk)
            else:
                s = wit * g * orbit[yk][1].inverse()
                if not stab_bsgs.contains(s):
                    stab_gens.append(s)
                    stab_bsgs._insert(s)
                    stab_bsgs._close()
    stab = PermGroup(group.degree, stab_gens, parent=group._top(), _skip_check=True)
    return orbit, stab


def centralizer(g: PermGroup, h) -> PermGroup:
    """C_g(h) for a single permutation or a subgroup handle."""
    if isinstance(h, Perm):
        targets = [h]
    else:
        targets = list(h.generators)
        if not targets:
            return PermGroup(g.degree, g.generators, parent=g._top() if g.parent else g,
                             _skip_check=True)
    current = g
    for t in targets:
        _, current = _stabilizer_of_action(current, t, lambda x, gg: x ** gg)
    return current


def normalizer(g: PermGroup, h: PermGroup) -> PermGroup:
    """N_g(h), the stabilizer of the element set of h under conjugation.

    Memoised on g by the element set of h, so repeated queries share the
    handle (and everything cached on it, like its character table).
    """
    hset = frozenset(h.elements())
    memo = g._cache.setdefault("normalizers", {})
    if hset in memo:
        return memo[hset]
    act = lambda s, gg: frozenset(x ** gg for x in s)
    _, stab = _stabilizer_of_action(g, hset, act)
    # h itself normalizes h; fold its generators in so the handle is complete
    gens = list(stab.generators) + [x for x in h.generators if x not in stab]
    result = PermGroup(g.degree, gens, parent=g._top() if g.parent else g,
                       _skip_check=True)
    memo[hset] = result
    return result


def subgroup_transporter(g: PermGroup, a: PermGroup, b: PermGroup):
    """An element x of g with a^x = b, or None.

    Breadth-first search over the conjugation orbit of a's element set,
    pruned up front by order and cheap isomorphism fingerprints.
    """
    if a.order != b.order:
        return None
    if subgroup_fingerprint(a) != subgroup_fingerprint(b):
        return None
    target = frozenset(b.elements())
    seed = frozenset(a.elements())
    if seed == target:
        return g.identity
    orbit = {seed: g.identity}
    queue = [seed]
    while queue:
        s = queue.pop(0)
        wit = orbit[s]
        for gg in g.generators:
            t = frozenset(x ** gg for x in s)
            if t not in orbit:
                orbit[t] = wit * gg
                if t == target:
                    return orbit[t]
                queue.append(t)
    return None


def is_conjugate_subgroups(g: PermGroup, a: PermGroup, b: PermGroup):
    return subgroup_transporter(g, a, b)


# ---------------------------------------------------------------------------
# characteristic constructions


def normal_closure(g: PermGroup, seeds) -> PermGroup:
    """Smallest normal subgroup of g containing the given permutations."""
    gens: list[Perm] = []
    bsgs = _BSGS(g.degree, [])

    def add(x):
        if not bsgs.contains(x):
            gens.append(x)
            bsgs._insert(x)
            bsgs._close()
            return True
        return False

    queue = [s for s in seeds if not s.is_identity()]
    for s in list(queue):
        add(s)
    while queue:
        x = queue.pop()
        for gg in g.generators:
            c = x ** gg
            if add(c):
                queue.append(c)
    return PermGroup(g.degree, gens, parent=g._top() if g.parent else g, _skip_check=True)


def derived_subgroup(g: PermGroup) -> PermGroup:
    comms = []
    gens = g.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            comms.append(a.inverse() * b.inverse() * a * b)
    return normal_closure(g, comms)


def center(g: PermGroup) -> PermGroup:
    return centralizer(g, g)


def _p_part(n: int, p: int) -> int:
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def _pprime_part_of_perm(x: Perm, p: int) -> Perm:
    n = x.order()
    a = _p_part(n, p)
    m = n // a
    if m == 1:
        return Perm.identity(x.degree)
    # x^(a*t) with a*t = 1 mod m has order m and generates the p'-part of <x>
    t = pow(a, -1, m)
    return x ** (a * t)


def o_p_residual(g: PermGroup, p: int) -> PermGroup:
    """O^p(g): the smallest normal subgroup with p-group quotient.

    Equals the normal closure of all p'-elements; we close over p'-parts of
    generators and then scan for missed p'-parts until the quotient index
    is a p-power (at which point minimality is automatic).
    """
    seeds = [_pprime_part_of_perm(x, p) for x in g.generators]
    n = normal_closure(g, seeds)
    while _p_part(g.order // n.order, p) != g.order // n.order:
        grew = False
        for x in g.bsgs.iter_elements():
            xp = _pprime_part_of_perm(x, p)
            if not xp.is_identity() and xp not in n:
                n = normal_closure(g, list(n.generators) + [xp])
                grew = True
                break
        if not grew:  # pragma: no cover - cannot happen: some p'-part is missing
            raise InternalInconsistency("o_p_residual failed to close")
    return n


def sylow_subgroup(g: PermGroup, p: int, seed: int | None = None) -> PermGroup:
    """A Sylow p-subgroup, grown by normalizer climbing.

    Deterministic for a fixed seed: candidate p-elements are taken from
    seeded random sampling first (when a seed is given), then from the
    deterministic element enumeration.
    """
    target = _p_part(g.order, p)
    s = PermGroup(g.degree, [], parent=g._top() if g.parent else g, _skip_check=True)
    if target == 1:
        return s
    import random
    rng = random.Random(seed) if seed is not None else None
    while s.order < target:
        n = normalizer(g, s) if s.order > 1 else g
        z = None
        if rng is not None:
            for _ in range(200):
                x = n.random_element(rng)
                xp = x ** (x.order() // _p_part(x.order(), p))
                if not xp.is_identity() and xp not in s:
                    z = xp
                    break
        if z is None:
            for x in n.bsgs.iter_elements():
                xp = x ** (x.order() // _p_part(x.order(), p))
                if not xp.is_identity() and xp not in s:
                    z = xp
                    break
        if z is None:  # pragma: no cover - contradicts Sylow theory
            raise InternalInconsistency("sylow climb stalled")
        s = PermGroup(g.degree, list(s.generators) + [z],
                      parent=g._top() if g.parent else g, _skip_check=True)
        if _p_part(s.order, p) != s.order:  # pragma: no cover
            raise InternalInconsistency("sylow climb left the p-group")
    return s


def fixed_points(sub: PermGroup, actors: PermGroup) -> PermGroup:
    """C_sub(actors): elements of sub commuting with every actor generator.

    Requires actors to normalize sub.
    """
    for a in actors.generators:
        for s in sub.generators:
            if s ** a not in sub:
                raise NotNormalized("actors do not normalize sub")
    fixed = [x for x in sub.elements(cap=SUBGROUP_ENUM_CAP * 64)
             if all(x * a == a * x for a in actors.generators)]
    return PermGroup(sub.degree, fixed, parent=sub._top() if sub.parent else sub,
                     _skip_check=True)


# ---------------------------------------------------------------------------
# subgroup enumeration and fusion


def _subgroups_of_p_group(pgrp: PermGroup, p: int) -> list[frozenset]:
    """All subgroups of a p-group, as element sets, by maximal extension."""
    if pgrp.order > SUBGROUP_ENUM_CAP:
        raise CapExceeded(f"|P| = {pgrp.order} exceeds enumeration cap {SUBGROUP_ENUM_CAP}")
    identity = pgrp.identity
    trivial = frozenset([identity])
    layers = [{trivial}]
    all_sets = {trivial}
    size = 1
    while size < pgrp.order:
        prev = layers[-1]
        nxt = set()
        for hset in prev:
            h = pgrp.subgroup([x for x in hset if not x.is_identity()] or [])
            norm = normalizer(pgrp, h)
            for x in norm.elements():
                if x in hset:
                    continue
                if (x ** p) not in hset:
                    continue
                # <h, x> = union of cosets h x^i since x normalizes h
                new = set(hset)
                coset = hset
                y = x
                while y not in new:
                    coset = frozenset(c * y for c in hset)
                    new |= coset
                    y = y * x
                fz = frozenset(new)
                if len(fz) == size * p and fz not in all_sets:
                    nxt.add(fz)
                    all_sets.add(fz)
        if not nxt:
            break
        layers.append(nxt)
        size *= p
    return sorted(all_sets, key=lambda s: (len(s), sorted(x.images for x in s)))


def _set_orbit(ambient: PermGroup, sset: frozenset) -> set[frozenset]:
    """Conjugation orbit of an element set; memoised per orbit on the group."""
    memo = ambient._cache.setdefault("set_orbits", {})
    cached = memo.get(sset)
    if cached is not None:
        return cached
    orbit = {sset}
    queue = [sset]
    while queue:
        s = queue.pop()
        for g in ambient.generators:
            t = frozenset(x ** g for x in s)
            if t not in orbit:
                orbit.add(t)
                queue.append(t)
    for t in orbit:
        memo[t] = orbit
    return orbit


def subgroup_classes_of_p_group(pgrp: PermGroup, ambient: PermGroup,
                                p: int | None = None) -> list[PermGroup]:
    """All subgroups of pgrp, one representative per ambient-conjugacy class.

    Deterministic order: by (order, canonical minimal element tuple).
    The representative is the lexicographically least class member that
    lies inside pgrp.
    """
    if p is None:
        p = _smallest_prime_factor(pgrp.order) if pgrp.order > 1 else 2
    subs = _subgroups_of_p_group(pgrp, p)
    canon_of: dict[frozenset, tuple] = {}
    classes: dict[tuple, list[frozenset]] = {}
    for s in subs:
        if s in canon_of:
            continue
        orbit = _set_orbit(ambient, s)
        key = min(tuple(sorted(x.images for x in t)) for t in orbit)
        for t in orbit:
            canon_of[t] = key
        classes.setdefault(key, [])
    for s in subs:
        classes[canon_of[s]].append(s)
    reps = []
    for key in sorted(classes, key=lambda k: (len(classes[k][0]), k)):
        members = sorted(classes[key], key=lambda s: sorted(x.images for x in s))
        rep_set = members[0]
        reps.append(ambient.subgroup([x for x in rep_set if not x.is_identity()]))
    return reps


def _smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def all_subgroups(g: PermGroup, cap: int = 10**4) -> list[PermGroup]:
    """Every subgroup of a small group, by closing cyclic subgroups under join."""
    if g.order > 200:
        raise CapExceeded(f"subgroup lattice of order {g.order} group not enumerated")
    elems = g.elements()
    sets = {frozenset([g.identity])}
    for x in elems:
        cyc = frozenset(x ** k for k in range(x.order()))
        sets.add(cyc)
    frontier = list(sets)
    while frontier:
        new = []
        for a in frontier:
            for b in list(sets):
                if a <= b or b <= a:
                    continue
                join = _generated_set(g, a | b, cap=g.order)
                if join not in sets:
                    sets.add(join)
                    new.append(join)
        frontier = new
    out = [g.subgroup([x for x in s if not x.is_identity()]) for s in
           sorted(sets, key=lambda s: (len(s), sorted(x.images for x in s)))]
    return out


def _generated_set(g: PermGroup, seed, cap: int) -> frozenset:
    gens = [x for x in seed if not x.is_identity()]
    elems = {g.identity}
    queue = [g.identity]
    while queue:
        x = queue.pop()
        for gg in gens:
            y = x * gg
            if y not in elems:
                if len(elems) >= cap:
                    raise CapExceeded("generated set exceeded cap")
                elems.add(y)
                queue.append(y)
    return frozenset(elems)


# ---------------------------------------------------------------------------
# quotients and actions


def conjugation_image(group: PermGroup, normalized: PermGroup):
    """The image of `group` acting by conjugation on `normalized`'s elements.

    Returns (image PermGroup, lift dict image-perm -> preimage).  The
    kernel is the centralizer, so `image ~ group / C_group(normalized)`.
    """
    domain = sorted(normalized.elements())
    index = {x: i for i, x in enumerate(domain)}

    def act_perm(n: Perm) -> Perm:
        return Perm._raw(tuple(index[x ** n] for x in domain))

    gen_imgs = [act_perm(n) for n in group.generators]
    image = PermGroup(len(domain), gen_imgs)
    lift: dict[Perm, Perm] = {image.identity: group.identity}
    queue = [image.identity]
    while queue:
        q = queue.pop(0)
        a = lift[q]
        for n, ni in zip(group.generators, gen_imgs):
            q2 = q * ni
            if q2 not in lift:
                lift[q2] = a * n
                queue.append(q2)
    return image, lift


def quotient_by_normal(g: PermGroup, n: PermGroup, cap: int = 10**5):
    """g / n as a permutation group on the cosets of a normal subgroup n.

    Returns (quotient, project, section) where project maps an element of
    g to its coset permutation and section lists one preimage per coset.
    """
    for x in n.generators:
        for gg in g.generators:
            if x ** gg not in n:
                raise NotNormalized("subgroup is not normal")
    n_elems = sorted(n.elements())

    def coset_key(rep: Perm):
        return min((m * rep).images for m in n_elems)

    reps = [g.identity]
    keys = {coset_key(g.identity): 0}
    i = 0
    while i < len(reps):
        for gg in g.generators:
            cand = reps[i] * gg
            k = coset_key(cand)
            if k not in keys:
                if len(reps) >= cap:
                    raise CapExceeded("quotient index exceeds cap")
                keys[k] = len(reps)
                reps.append(cand)
        i += 1

    def project(x: Perm) -> Perm:
        return Perm._raw(tuple(keys[coset_key(reps[j] * x)] for j in range(len(reps))))

    q = PermGroup(len(reps), [project(gg) for gg in g.generators])
    return q, project, reps


# ---------------------------------------------------------------------------
# structure descriptors


def abelian_invariants(g: PermGroup) -> tuple[int, ...]:
    """Elementary divisors of an abelian group, e.g. (2, 4, 4)."""
    if not g.is_abelian():
        raise NotAbelian("abelian invariants require an abelian group")
    if g.order == 1:
        return ()
    orders = [x.order() for x in g.elements()]
    out = []
    n = g.order
    for q in _prime_factors(n):
        qa = _p_part(n, q)
        # c_i = #elements whose order divides q^i; c_i / c_{i-1} = q^(number of
        # cyclic q-factors of exponent >= q^i), which recovers the type.
        counts = [sum(1 for o in orders if q**i % o == 0)
                  for i in range(_int_log(qa, q) + 1)]
        lam: list[int] = []
        for i in range(1, len(counts)):
            h = _int_log(counts[i] // counts[i - 1], q)
            while len(lam) < h:
                lam.append(0)
            for j in range(h):
                lam[j] = i
        out.extend(q**e for e in lam)
    return tuple(sorted(out))


def _int_log(d: int, q: int) -> int:
    e = 0
    while d > 1:
        d //= q
        e += 1
    return e


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def subgroup_fingerprint(h: PermGroup) -> str:
    """Cheap isomorphism fingerprint: order plus structure summary.

    Abelian groups report their elementary divisors; non-abelian groups an
    element-order histogram.  Not a full isomorphism test.
    """
    if h.order == 1:
        return "1"
    if h.order <= SUBGROUP_ENUM_CAP * 16 and h.is_abelian():
        inv = abelian_invariants(h)
        return f"{h.order}:ab[{','.join(map(str, inv))}]"
    hist: dict[int, int] = {}
    for x in h.elements():
        hist[x.order()] = hist.get(x.order(), 0) + 1
    body = ",".join(f"{k}^{v}" for k, v in sorted(hist.items()))
    return f"{h.order}:ord{{{body}}}"


def same_subgroup(a: PermGroup, b: PermGroup) -> bool:
    return a.order == b.order and all(g in b for g in a.generators)
