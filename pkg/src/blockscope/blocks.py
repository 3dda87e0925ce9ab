"""p-blocks of a character table and their invariants.

Block distribution uses the standard central-character criterion: two
irreducible characters lie in the same p-block exactly when the reduced
central characters omega(K) = |K| chi(g_K) / chi(1) agree modulo the
fixed maximal ideal above p, for every class K.

k(b) is the number of ordinary characters in the block; l(b) is the rank
over the cyclotomic field of the block's character values restricted to
the p-regular classes.  Lower defect multiplicities come from the defect
filtration of the projected p-regular class sums inside the center of the
modular group algebra: m(b, R) is the dimension jump of
e_b * span{class sums with defect group below R} against the strictly
smaller subgroup classes, and the sum over all R must equal l(b); that
identity is enforced as a hard runtime assertion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chartable import CharacterTable, _class_matrices, character_table
from .cyclotomic import Cyclo
from .errors import (AmbiguousMatch, InternalInconsistency, NoDefectClass)
from .groups import (PermGroup, centralizer, is_conjugate_subgroups,
                     subgroup_classes_of_p_group, sylow_subgroup,
                     subgroup_fingerprint)
from .modp import ModPContext, mod_p_context

__all__ = ["Block", "LowerDefectTable", "central_characters", "block_distribution",
           "block_defect_group", "block_invariants", "brauer_induce",
           "lower_defect_multiplicities", "block_idempotent_vectors",
           "p_subgroup_classes"]


def _nu(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


@dataclass(frozen=True)
class Block:
    """A p-block as an index set of Irr(G) plus its basic invariants."""

    table: CharacterTable
    p: int
    char_indices: tuple[int, ...]
    defect: int
    defect_group: PermGroup
    is_principal: bool
    k: int
    l: int
    signature: tuple   # reduced central character, one field element per class

    @property
    def group(self) -> PermGroup:
        return self.table.group

    def degrees(self) -> tuple[int, ...]:
        return tuple(self.table.degrees[i] for i in self.char_indices)

    def to_json(self):
        from .groups import abelian_invariants
        dg = self.defect_group
        return {
            "p": self.p,
            "characters": list(self.char_indices),
            "degrees": list(self.degrees()),
            "defect": self.defect,
            "defect_group_order": dg.order,
            "defect_group_invariants": (list(abelian_invariants(dg))
                                        if dg.is_abelian() else None),
            "is_principal": self.is_principal,
            "k": self.k,
            "l": self.l,
        }


def central_characters(table: CharacterTable):
    """omega_chi(K) = |K| chi(g_K) / chi(1); all values must be algebraic integers."""
    cached = table.group._cache.get("central_chars")
    if cached is not None:
        return cached
    rows = []
    for i in range(table.n_classes):
        deg = table.degrees[i]
        row = []
        for j, cls in enumerate(table.classes):
            w = table.values[i][j] * Fraction(cls.size, deg)
            if not w.is_integral():
                raise InternalInconsistency(
                    f"central character ({i},{j}) is not an algebraic integer")
            row.append(w)
        rows.append(tuple(row))
    cached = tuple(rows)
    table.group._cache["central_chars"] = cached
    return cached


def _context_for(table: CharacterTable, p: int) -> ModPContext:
    return mod_p_context(table.exponent, p)


def block_distribution(table: CharacterTable, p: int) -> list[Block]:
    """Partition of Irr(G) into p-blocks, principal block first."""
    key = ("blocks", p)
    cached = table.group._cache.get(key)
    if cached is not None:
        return cached
    ctx = _context_for(table, p)
    omegas = central_characters(table)
    sig_of: dict[tuple, list[int]] = {}
    for i in range(table.n_classes):
        sig = tuple(ctx.reduce(w) for w in omegas[i])
        sig_of.setdefault(sig, []).append(i)

    n = table.group.order
    nu_g = _nu(n, p)
    blocks = []
    for sig, idxs in sig_of.items():
        idxs = tuple(sorted(idxs))
        defect = nu_g - min(_nu(table.degrees[i], p) for i in idxs)
        principal = 0 in idxs
        dg = _defect_group_from_signature(table, p, sig, defect)
        blocks.append(Block(
            table=table, p=p, char_indices=idxs, defect=defect,
            defect_group=dg, is_principal=principal, k=len(idxs),
            l=_l_by_rank(table, p, idxs), signature=sig,
        ))
    blocks.sort(key=lambda b: (not b.is_principal, b.char_indices))
    # sanity: the blocks partition Irr(G)
    seen = sorted(i for b in blocks for i in b.char_indices)
    if seen != list(range(table.n_classes)):
        raise InternalInconsistency("blocks do not partition the characters")
    if blocks[0].is_principal:
        sylow = sylow_subgroup(table.group, p)
        if blocks[0].defect_group.order != sylow.order:
            raise InternalInconsistency("principal block defect group is not Sylow")
    table.group._cache[key] = blocks
    return blocks


def _defect_group_from_signature(table: CharacterTable, p: int, sig, defect: int):
    """Defect group: Sylow p-subgroup of the centralizer of a defect class.

    A defect class is a p-regular class with nonzero reduced central
    character whose class defect equals the block defect.
    """
    group = table.group
    nu_g = _nu(group.order, p)
    zero = mod_p_context(table.exponent, p).field.zero
    for j, cls in enumerate(table.classes):
        if not cls.is_p_regular(p):
            continue
        if sig[j] == zero:
            continue
        class_defect = nu_g - _nu(cls.size, p)
        if class_defect == defect:
            cent = centralizer(group, cls.representative)
            return sylow_subgroup(cent, p)
    raise NoDefectClass(f"no defect class found for a block of defect {defect}")


def _l_by_rank(table: CharacterTable, p: int, idxs) -> int:
    """l(b): rank over the cyclotomic field of block rows on p-regular classes."""
    cols = table.p_regular_indices(p)
    rows = [[table.values[i][j] for j in cols] for i in idxs]
    return _cyclo_rank(rows)


def _cyclo_rank(rows) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(rows)):
            if not rows[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def block_defect_group(blk: Block) -> PermGroup:
    return blk.defect_group


def block_invariants(blk: Block) -> tuple[int, int]:
    return blk.k, blk.l


def principal_block(group: PermGroup, p: int) -> Block:
    return block_distribution(character_table(group), p)[0]


# ---------------------------------------------------------------------------
# Brauer induction


def brauer_induce(blk_local: Block, group: PermGroup):
    """Induced block of `group`, or None when induction is undefined.

    The induced central function evaluates the local block's central
    character on the intersection of each class with the subgroup; the
    result is a block of `group` exactly when the reduced values match
    some block's signature on every class.  Both sides are reduced in the
    big group's context so the maximal-ideal choice is shared.
    """
    h = blk_local.group
    table_g = character_table(group)
    p = blk_local.p
    ctx = _context_for(table_g, p)
    table_h = blk_local.table
    chi = blk_local.char_indices[0]
    deg = Fraction(1, table_h.degrees[chi])

    h_class_of_g_class: dict[int, list[int]] = {}
    for x in h.elements():
        j = group.class_of(x)
        h_class_of_g_class.setdefault(j, []).append(table_h.class_index(x))

    sig = []
    for j in range(table_g.n_classes):
        total = Cyclo.zero()
        for hj in h_class_of_g_class.get(j, ()):  # one term per element of K cap H
            total = total + table_h.values[chi][hj]
        sig.append(ctx.reduce(total * deg))
    sig = tuple(sig)

    matches = [b for b in block_distribution(table_g, p) if b.signature == sig]
    if not matches:
        return None
    if len(matches) > 1:  # pragma: no cover - signatures are distinct by construction
        raise AmbiguousMatch("induced central function matches several blocks")
    return matches[0]


# ---------------------------------------------------------------------------
# block idempotents mod p and lower defect groups


def block_idempotent_vectors(table: CharacterTable, p: int):
    """e_b mod p as vectors over the class-sum basis of Z(kG).

    The class-K coefficient of e_b is sum_{chi in b} chi(1) chi(g_K^-1) / |G|,
    a p-integral cyclotomic value; p-integrality is asserted by the
    reduction itself (a p-divisible denominator raises).
    """
    key = ("idempotents", p)
    cached = table.group._cache.get(key)
    if cached is not None:
        return cached
    ctx = _context_for(table, p)
    n = table.group.order
    out = []
    for blk in block_distribution(table, p):
        vec = []
        for j in range(table.n_classes):
            total = Cyclo.zero()
            jinv = table.inverse_class[j]
            for i in blk.char_indices:
                total = total + table.values[i][jinv] * table.degrees[i]
            vec.append(ctx.reduce(total * Fraction(1, n)))
        out.append(tuple(vec))
    cached = (tuple(out), ctx)
    table.group._cache[key] = cached
    return cached


def _center_multiply(table: CharacterTable, ctx: ModPContext, vec, j: int):
    """(sum_i vec_i K_i) * K_j in Z(kG), as a vector over class sums."""
    mats = _class_matrices(table.group)
    field = ctx.field
    r = table.n_classes
    out = [field.zero] * r
    for i in range(r):
        ci = vec[i]
        if ci == field.zero:
            continue
        row = mats[i][j]
        for k in range(r):
            a = int(row[k]) % ctx.p
            if a:
                out[k] = field.add(out[k], field.mul(ci, field.scalar(a)))
    return tuple(out)


def _gf_rank(field, rows) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != field.zero), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != field.zero:
                f = rows[r][col]
                rows[r] = [field.sub(a, field.mul(f, b))
                           for a, b in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def p_subgroup_classes(group: PermGroup, p: int,
                       sylow: PermGroup | None = None) -> list[PermGroup]:
    """G-conjugacy classes of p-subgroups (all lie in a fixed Sylow)."""
    key = ("p_subgroup_classes", p)
    cached = group._cache.get(key)
    if cached is None:
        if sylow is None:
            sylow = sylow_subgroup(group, p)
        cached = subgroup_classes_of_p_group(sylow, group, p=p)
        group._cache[key] = cached
    return cached


@dataclass(frozen=True)
class LowerDefectTable:
    block: Block
    subgroup_classes: tuple          # PermGroup representatives, deterministic order
    multiplicities: tuple[int, ...]  # aligned with subgroup_classes

    def by_order(self) -> dict[int, int]:
        """Nonzero multiplicities keyed by subgroup order (orders distinct here)."""
        out: dict[int, int] = {}
        for r, m in zip(self.subgroup_classes, self.multiplicities):
            if m:
                out[r.order] = out.get(r.order, 0) + m
        return out

    def to_json(self):
        entries = []
        for idx, (r, m) in enumerate(zip(self.subgroup_classes, self.multiplicities)):
            entries.append({
                "fingerprint": f"{subgroup_fingerprint(r)}#{idx}",
                "order": r.order,
                "multiplicity": m,
            })
        return entries


def lower_defect_multiplicities(blk: Block) -> LowerDefectTable:
    """Multiplicities m(b, R) over p-subgroup classes R, via the defect filtration.

    Hard assertions: the multiplicities sum to l(b), the defect group
    carries multiplicity at least 1, and classes not below the defect
    group carry 0.
    """
    table = blk.table
    group = table.group
    p = blk.p
    ctx = _context_for(table, p)
    field = ctx.field
    reps = p_subgroup_classes(group, p)
    idempotents, _ = block_idempotent_vectors(table, p)
    bidx = block_distribution(table, p).index(blk)
    e_b = idempotents[bidx]

    # defect group of each p-regular class, matched into the class list
    pr = table.p_regular_indices(p)
    class_rep_of = []
    for j in pr:
        d = sylow_subgroup(centralizer(group, table.classes[j].representative), p)
        class_rep_of.append(_match_subgroup_class(group, d, reps))

    # containment partial order on the subgroup classes
    leq = _containment_matrix(group, reps)

    vectors = [_center_multiply(table, ctx, e_b, j) for j in pr]

    def span_rank(pred):
        rows = [v for v, cls in zip(vectors, class_rep_of) if pred(cls)]
        return _gf_rank(field, rows) if rows else 0

    mult = []
    for ri in range(len(reps)):
        below = span_rank(lambda c: leq[c][ri])
        strictly = span_rank(lambda c: leq[c][ri] and c != ri)
        mult.append(below - strictly)

    total = sum(mult)
    if total != blk.l:
        raise InternalInconsistency(
            f"lower defect multiplicities sum to {total}, expected l(b) = {blk.l}")
    dclass = _match_subgroup_class(group, blk.defect_group, reps)
    if mult[dclass] < 1:
        raise InternalInconsistency("defect group multiplicity is zero")
    for ri, m in enumerate(mult):
        if m and not leq[ri][dclass]:
            raise InternalInconsistency(
                "nonzero multiplicity outside the defect group's subgroups")
    return LowerDefectTable(block=blk, subgroup_classes=tuple(reps),
                            multiplicities=tuple(mult))


def _match_subgroup_class(group: PermGroup, h: PermGroup, reps) -> int:
    for i, r in enumerate(reps):
        if r.order == h.order and subgroup_fingerprint(r) == subgroup_fingerprint(h):
            if is_conjugate_subgroups(group, h, r) is not None:
                return i
    raise InternalInconsistency("subgroup matches no enumerated p-subgroup class")


def _containment_matrix(group: PermGroup, reps):
    """leq[a][b]: some conjugate of reps[a] is contained in reps[b]."""
    from .groups import _set_orbit

    key = ("p_subgroup_leq", tuple(id(r) for r in reps))
    cached = group._cache.get(key)
    if cached is not None:
        return cached
    sets = [r.element_set() for r in reps]
    orbits = [_set_orbit(group, frozenset(r.element_set())) for r in reps]
    n = len(reps)
    leq = [[False] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            if reps[a].order > reps[b].order:
                continue
            leq[a][b] = any(s <= sets[b] for s in orbits[a])
    group._cache[key] = leq
    return leq
