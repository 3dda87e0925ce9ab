"""The fusion system of a finite group on a fixed Sylow p-subgroup.

Morphisms are conjugation maps between subgroups of P induced by elements
of G.  The module answers conjugacy queries, computes the hyperfocal
subgroup by two independent algorithms (commutator generation over all
subgroup classes, and P meet O^p(G)), locates essential subgroup classes
with their automizers, and decides control by normalizers via Alperin's
fusion theorem.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import CapExceeded, MethodDisagreement, NoComplementFound, NotAbelian
from .groups import (PermGroup, SUBGROUP_ENUM_CAP, abelian_invariants, centralizer,
                     conjugation_image, normalizer, normal_closure, o_p_residual,
                     quotient_by_normal, subgroup_classes_of_p_group,
                     subgroup_fingerprint, sylow_subgroup, all_subgroups,
                     _pprime_part_of_perm, _set_orbit, same_subgroup)
from .perms import Perm

__all__ = ["FusionSystem", "HyperfocalReport", "EssentialClass", "AutomizerInfo",
           "omega1"]


@dataclass(frozen=True)
class HyperfocalReport:
    subgroup: PermGroup
    invariants: tuple
    commutator_order: int | None   # None when the enumeration cap forced a fallback
    residual_order: int
    agree: bool


@dataclass(frozen=True)
class AutomizerInfo:
    """Structure descriptor of N_G(U) / U C_G(U)."""

    order: int
    is_symmetric_3: bool
    abelian_invariants: tuple | None
    sylow_orders: tuple


@dataclass(frozen=True)
class EssentialClass:
    representative: PermGroup          # fully normalized class representative
    automizer: AutomizerInfo
    witness: str                       # strongly p-embedded subgroup description


def omega1(q: PermGroup, p: int = 2) -> PermGroup:
    """Subgroup of elements of order dividing p in an abelian p-group."""
    if not q.is_abelian():
        raise NotAbelian("omega1 requires an abelian group")
    gens = [x for x in q.elements() if not x.is_identity() and (x ** p).is_identity()]
    return PermGroup(q.degree, gens, parent=q._top() if q.parent else q,
                     _skip_check=True)


class FusionSystem:
    """Queries against the fusion category of G on a Sylow p-subgroup P."""

    def __init__(self, group: PermGroup, sylow: PermGroup | None = None, p: int = 2):
        self.group = group
        self.p = p
        self.sylow = sylow if sylow is not None else sylow_subgroup(group, p)
        if self.sylow.order != _p_part(group.order, p):
            raise ValueError("subgroup is not Sylow")
        self._cache: dict = {}

    # -- conjugacy of tuples

    def are_conjugate(self, a, b):
        """g in G with a_i^g = b_i for all i, or None.

        Brute scan with first-coordinate pruning; exact at catalog scale.
        """
        a = tuple(a)
        b = tuple(b)
        if len(a) != len(b):
            return None
        if not a:
            return self.group.identity
        pset = self.sylow.element_set()
        for x in list(a) + list(b):
            if x not in pset:
                raise ValueError("tuple entries must lie in the Sylow subgroup")
        for g in self.group.elements():
            if a[0] ** g != b[0]:
                continue
            if all(x ** g == y for x, y in zip(a[1:], b[1:])):
                return g
        return None

    # -- hyperfocal subgroup

    def hyperfocal_subgroup(self) -> PermGroup:
        """The hyperfocal subgroup P meet O^p(G), cached without the
        two-method report (cheap; used by downstream verification passes)."""
        q = self._cache.get("hyperfocal_q")
        if q is None:
            q = self._cache["hyperfocal_q"] = self._hyperfocal_residual()
        return q

    def hyperfocal(self, samples: int = 50, seed: int = 0) -> HyperfocalReport:
        cached = self._cache.get(("hyperfocal", samples, seed))
        if cached is not None:
            return cached
        residual = self.hyperfocal_subgroup()
        commutator = None
        if self.sylow.order <= SUBGROUP_ENUM_CAP:
            commutator = self._hyperfocal_commutator(samples, seed)
            if not same_subgroup(commutator, residual):
                raise MethodDisagreement(
                    f"hyperfocal methods disagree: commutator order "
                    f"{commutator.order}, residual order {residual.order}")
        report = HyperfocalReport(
            subgroup=residual,
            invariants=(abelian_invariants(residual) if residual.is_abelian() else None),
            commutator_order=None if commutator is None else commutator.order,
            residual_order=residual.order,
            agree=commutator is not None,
        )
        self._cache[("hyperfocal", samples, seed)] = report
        return report

    def _hyperfocal_residual(self) -> PermGroup:
        """P meet O^p(G), the hyperfocal subgroup by the residual characterization."""
        opg = o_p_residual(self.group, self.p)
        gens = [x for x in self.sylow.elements() if x in opg and not x.is_identity()]
        return self.group.subgroup(gens)

    def _hyperfocal_commutator(self, samples: int, seed: int) -> PermGroup:
        """Commutator generation: [u, x] over subgroup classes U of P and
        p'-elements x normalizing U, closed under P-normalization.

        x ranges over p'-parts of the normalizer's strong generators plus
        seeded random elements; full enumeration of p'-elements is not
        needed because agreement with the residual method is asserted.
        """
        p = self.p
        rng = random.Random(seed)
        gens: list[Perm] = []
        for u in self.subgroup_classes():
            if u.order == 1:
                continue
            n = normalizer(self.group, u)
            xs = {x for x in
                  ( [_pprime_part_of_perm(g, p) for g in n.bsgs.strong]
                  + [_pprime_part_of_perm(n.random_element(rng), p)
                     for _ in range(samples)])
                  if not x.is_identity()}
            if not xs:
                continue
            for uu in u.elements():
                if uu.is_identity():
                    continue
                for x in xs:
                    c = uu.inverse() * (uu ** x)
                    if not c.is_identity():
                        gens.append(c)
        if not gens:
            return self.group.subgroup([])
        return normal_closure(self.sylow, gens)

    # -- subgroup classes of P up to G-conjugacy

    def subgroup_classes(self) -> list[PermGroup]:
        from .blocks import p_subgroup_classes
        return p_subgroup_classes(self.group, self.p, sylow=self.sylow)

    # -- automizers

    def automizer_group(self, u: PermGroup) -> tuple[PermGroup, dict]:
        """N_G(u)/(u C_G(u)) as a permutation group, with lifts to N_G(u).

        Realized as the quotient of the conjugation image of N_G(u) on u by
        the image of u (inner automorphisms).
        """
        n = normalizer(self.group, u)
        image, lift = conjugation_image(n, u)
        inner_gens = [g for g in u.generators]
        inner_image = PermGroup(image.degree,
                                [_conj_perm_on(u, g) for g in inner_gens])
        quo, project, reps = quotient_by_normal(image, inner_image)
        out_lift = {}
        for i, rep in enumerate(reps):
            out_lift[i] = lift[rep]
        return quo, {"project": project, "coset_lift": out_lift,
                     "image_lift": lift, "normalizer": n}

    def automizer(self, u: PermGroup) -> AutomizerInfo:
        quo, _ = self.automizer_group(u)
        return _automizer_info(quo)

    # -- essential subgroups

    def essential_classes(self) -> list[EssentialClass]:
        cached = self._cache.get("essentials")
        if cached is not None:
            return cached
        if self.sylow.order > SUBGROUP_ENUM_CAP:
            raise CapExceeded("Sylow subgroup too large for essential enumeration")
        p = self.p
        pset_all = self.sylow.element_set()
        out = []
        for u in self.subgroup_classes():
            if u.order == 1:
                continue
            # P itself is excluded automatically: its outer automizer has
            # order prime to p, so the divisibility test below fails
            if not self._is_centric(u, pset_all):
                continue
            quo, _ = self.automizer_group(u)
            if quo.order % p != 0:
                continue
            witness = _strongly_p_embedded(quo, p)
            if witness is None:
                continue
            rep = self._fully_normalized_rep(u)
            out.append(EssentialClass(
                representative=rep,
                automizer=_automizer_info(quo),
                witness=witness,
            ))
        cached = out
        self._cache["essentials"] = cached
        return cached

    def _is_centric(self, u: PermGroup, pset_all) -> bool:
        """C_P(u') = Z(u') for every conjugate u' of u inside P."""
        uset = u.element_set()
        # cheap local test first
        if not self._centric_local(uset):
            return False
        for conj in _set_orbit(self.group, frozenset(uset)):
            if conj <= pset_all and not self._centric_local(conj):
                return False
        return True

    def _centric_local(self, uset) -> bool:
        gens = [x for x in uset if not x.is_identity()]
        for y in self.sylow.elements():
            if all(y * x == x * y for x in gens) and y not in uset:
                return False
        return True

    def _fully_normalized_rep(self, u: PermGroup) -> PermGroup:
        """Class member inside P maximizing |N_P(member)|, canonical tie-break."""
        pset_all = self.sylow.element_set()
        best = None
        for conj in sorted(_set_orbit(self.group, frozenset(u.element_set())),
                           key=lambda s: sorted(x.images for x in s)):
            if not conj <= pset_all:
                continue
            member = self.group.subgroup([x for x in conj if not x.is_identity()])
            nsize = normalizer(self.sylow, member).order
            if best is None or nsize > best[0]:
                best = (nsize, member)
        return best[1]

    # -- control by normalizers

    def is_controlled_by_normalizer(self, h: PermGroup | None = None) -> bool:
        """Control by h (default N_G(P)).

        For h = N_G(P) this is Alperin's criterion: no essential classes.
        For general h it checks that the automizer of P and of every
        essential representative is induced by h.
        """
        essentials = self.essential_classes()
        if h is None or same_subgroup(h, normalizer(self.group, self.sylow)):
            return not essentials
        targets = [self.sylow] + [e.representative for e in essentials]
        for x in targets:
            n = normalizer(self.group, x)
            c = centralizer(self.group, x)
            h_in_n = [g for g in h.elements() if all(s ** g in x for s in x.generators)]
            gens = list(c.generators) + h_in_n
            if self.group.subgroup(gens).order != n.order:
                return False
        return True

    def check_normalizer_realizes_fusion(self, samples: int = 100, seed: int = 0) -> bool:
        """Randomized check: sampled G-fusion between tuples in P is realized
        by N_G(P).  Used as evidence when there are no essential classes."""
        rng = random.Random(seed)
        n_p = normalizer(self.group, self.sylow)
        n_elems = n_p.elements()
        p_elems = self.sylow.elements()
        pset = self.sylow.element_set()
        for _ in range(samples):
            size = rng.randrange(1, 3)
            tup = tuple(p_elems[rng.randrange(len(p_elems))] for _ in range(size))
            g = self.group.random_element(rng)
            img = tuple(x ** g for x in tup)
            if not all(x in pset for x in img):
                continue
            if not any(all(x ** m == y for x, y in zip(tup, img)) for m in n_elems):
                return False
        return True

    # -- odd complements and their fixed points

    def odd_complement_fixed_points(self, u: PermGroup):
        """(E, C_u(E)): E is the preimage in N_G(u) of an odd-order complement
        to the Sylow p-subgroup of N_G(u)/C_G(u).

        The quotient has a normal Sylow p-subgroup when u is P (image of P)
        and the complement is then a Hall p'-subgroup; here the odd part is
        a prime power in every supported case, so a Sylow subgroup of the
        conjugation image suffices, with a subgroup-lattice search fallback.
        """
        n = normalizer(self.group, u)
        image, lift = conjugation_image(n, u)
        m = image.order
        odd = m // _p_part(m, self.p)
        cent = centralizer(self.group, u)
        if odd == 1:
            return cent, _fixed_in(u, cent)
        qprimes = _prime_factors(odd)
        comp_img = None
        if len(qprimes) == 1:
            comp_img = sylow_subgroup(image, qprimes[0])
            if comp_img.order != odd:
                comp_img = None
        if comp_img is None:
            try:
                for cand in all_subgroups(image):
                    if cand.order == odd:
                        comp_img = cand
                        break
            except CapExceeded:
                pass
        if comp_img is None:
            raise NoComplementFound(
                f"no odd-order complement of order {odd} in the automizer layer")
        e_gens = list(cent.generators) + [lift[g] for g in comp_img.generators]
        e = self.group.subgroup(e_gens)
        return e, _fixed_in(u, e)


def _fixed_in(u: PermGroup, actors: PermGroup) -> PermGroup:
    fixed = [x for x in u.elements()
             if not x.is_identity() and all(x * a == a * x for a in actors.generators)]
    return u._top().subgroup(fixed)


def _conj_perm_on(u: PermGroup, g: Perm) -> Perm:
    domain = sorted(u.elements())
    index = {x: i for i, x in enumerate(domain)}
    return Perm._raw(tuple(index[x ** g] for x in domain))


def _automizer_info(quo: PermGroup) -> AutomizerInfo:
    order = quo.order
    is_s3 = order == 6 and not quo.is_abelian()
    inv = abelian_invariants(quo) if quo.is_abelian() else None
    sylos = []
    n = order
    d = 2
    while d * d <= n:
        if n % d == 0:
            sylos.append(_p_part(order, d))
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        sylos.append(_p_part(order, n))
    return AutomizerInfo(order=order, is_symmetric_3=is_s3,
                         abelian_invariants=inv, sylow_orders=tuple(sorted(sylos)))


def _strongly_p_embedded(quo: PermGroup, p: int):
    """Description of a strongly p-embedded subgroup of quo, or None.

    Exhaustive over the subgroup lattice: M < quo with p | |M| and
    p not dividing |M meet M^a| for every a outside M.
    """
    if quo.order % p != 0:
        return None
    elems = quo.elements()
    for m in all_subgroups(quo):
        if m.order % p != 0 or m.order == quo.order:
            continue
        mset = m.element_set()
        good = True
        for a in elems:
            if a in mset:
                continue
            inter = [x for x in mset if (x ** a) in mset]
            if _has_p_element(inter, p):
                good = False
                break
        if good:
            return f"order {m.order}: {subgroup_fingerprint(m)}"
    return None


def _has_p_element(elems, p: int) -> bool:
    return any(x.order() % p == 0 and not x.is_identity() for x in elems)


def _p_part(n: int, p: int) -> int:
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


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
