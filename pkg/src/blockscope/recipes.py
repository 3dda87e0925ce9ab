"""Group construction from recipe expression trees.

A recipe is a nested description built from six constructors:

    symmetric(n), alternating(n), cyclic(n),
    direct(a, b), semidirect(base, acting, action), wreath(base, top)

Evaluation is deterministic: the same recipe always yields the identical
generator list.  The JSON form uses ``{"kind": ..., ...}`` objects with
permutations written in 1-based disjoint-cycle text.

Semidirect products are realized on the disjoint union of the base
group's element set (right translation, twisted by the action) and the
acting group's own points, which keeps the representation faithful for
any action.  The action table maps each acting generator to images of the
base generators; each column is verified to define an automorphism, and
the final group order is checked against the recipe-theoretic order, so a
table that fails to respect the acting group's relations is rejected.

Wreath products ``base wr top`` take one base copy per moved point of the
top group.
"""

from __future__ import annotations

import json

from .errors import DegreeOverflow, InvalidAction, ParseError
from .groups import PermGroup
from .perms import Perm, parse_perm

__all__ = ["GroupRecipe", "construct_group", "recipe_from_json", "recipe_to_json",
           "symmetric", "alternating", "cyclic", "direct", "semidirect", "wreath",
           "DEGREE_CAP"]

DEGREE_CAP = 2**14
# Base groups of semidirect products are realized on their element sets.
SEMIDIRECT_BASE_CAP = 2**12


class GroupRecipe:
    """Immutable recipe node; use the module-level constructor helpers."""

    def __init__(self, kind: str, **args):
        self.kind = kind
        self.args = args

    def __repr__(self):
        return f"GroupRecipe({self.kind}, {self.args})"


def symmetric(n: int) -> GroupRecipe:
    return GroupRecipe("symmetric", n=n)


def alternating(n: int) -> GroupRecipe:
    return GroupRecipe("alternating", n=n)


def cyclic(n: int) -> GroupRecipe:
    return GroupRecipe("cyclic", n=n)


def direct(a: GroupRecipe, b: GroupRecipe) -> GroupRecipe:
    return GroupRecipe("direct", a=a, b=b)


def semidirect(base: GroupRecipe, acting: GroupRecipe, action) -> GroupRecipe:
    """action[i][j]: image of base generator j under acting generator i.

    Entries are permutations of the base group's points (Perm objects or
    1-based cycle strings).
    """
    return GroupRecipe("semidirect", base=base, acting=acting, action=action)


def wreath(base: GroupRecipe, top: GroupRecipe) -> GroupRecipe:
    return GroupRecipe("wreath", base=base, top=top)


# ---------------------------------------------------------------------------
# evaluation


def construct_group(recipe: GroupRecipe, degree_cap: int = DEGREE_CAP) -> PermGroup:
    group, order = _eval(recipe, degree_cap)
    if group.order != order:
        raise InvalidAction(
            f"recipe-theoretic order {order} != constructed order {group.order}")
    return group


def _eval(recipe: GroupRecipe, cap: int):
    kind = recipe.kind
    if kind == "symmetric":
        n = _check_n(recipe.args["n"], cap)
        gens = []
        if n >= 2:
            gens.append(Perm.from_cycles(n, [[0, 1]]))
        if n >= 3:
            gens.append(Perm.from_cycles(n, [list(range(n))]))
        from math import factorial
        return PermGroup(n, gens, name=f"S{n}"), factorial(n)
    if kind == "alternating":
        n = _check_n(recipe.args["n"], cap)
        gens = []
        if n >= 3:
            gens.append(Perm.from_cycles(n, [[0, 1, 2]]))
        if n >= 4:
            cyc = list(range(n)) if n % 2 == 1 else list(range(1, n))
            gens.append(Perm.from_cycles(n, [cyc]))
        from math import factorial
        return PermGroup(n, gens, name=f"A{n}"), factorial(n) // 2 if n >= 2 else 1
    if kind == "cyclic":
        n = _check_n(recipe.args["n"], cap)
        gens = [Perm.from_cycles(n, [list(range(n))])] if n > 1 else []
        return PermGroup(n, gens, name=f"Z{n}"), n
    if kind == "direct":
        ga, na = _eval(recipe.args["a"], cap)
        gb, nb = _eval(recipe.args["b"], cap)
        deg = ga.degree + gb.degree
        if deg > cap:
            raise DegreeOverflow(f"direct product degree {deg} exceeds cap {cap}")
        gens = [p.extend(deg) for p in ga.generators]
        gens += [p.shift(ga.degree, deg) for p in gb.generators]
        return PermGroup(deg, gens), na * nb
    if kind == "semidirect":
        return _eval_semidirect(recipe, cap)
    if kind == "wreath":
        return _eval_wreath(recipe, cap)
    raise ParseError(f"unknown recipe kind: {kind!r}")


def _check_n(n, cap: int) -> int:
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"invalid size parameter: {n!r}")
    if n > cap:
        raise DegreeOverflow(f"degree {n} exceeds cap {cap}")
    return n


def _eval_semidirect(recipe: GroupRecipe, cap: int):
    base, base_order = _eval(recipe.args["base"], cap)
    acting, acting_order = _eval(recipe.args["acting"], cap)
    action = recipe.args["action"]
    if base_order > SEMIDIRECT_BASE_CAP:
        raise DegreeOverflow(
            f"semidirect base order {base_order} exceeds cap {SEMIDIRECT_BASE_CAP}")
    deg = base_order + acting.degree
    if deg > cap:
        raise DegreeOverflow(f"semidirect degree {deg} exceeds cap {cap}")
    if len(action) != len(acting.generators):
        raise InvalidAction("action table must have one row per acting generator")

    base_elems = sorted(base.elements())
    index = {x: i for i, x in enumerate(base_elems)}

    auts = []
    for row in action:
        if len(row) != len(base.generators):
            raise InvalidAction("action row must have one image per base generator")
        images = [_as_perm(entry, base.degree) for entry in row]
        for img in images:
            if img not in base:
                raise InvalidAction("generator image lies outside the base group")
        auts.append(_automorphism_map(base, base_elems, index, images))

    gens = []
    # base generators: right translation on the element set
    for b in base.generators:
        images = [0] * deg
        for i, x in enumerate(base_elems):
            images[i] = index[x * b]
        for j in range(acting.degree):
            images[base_order + j] = base_order + j
        gens.append(Perm(images))
    # acting generators: automorphism on the element set, natural action on own points
    for aut, a in zip(auts, acting.generators):
        images = [0] * deg
        for i in range(base_order):
            images[i] = aut[i]
        for j in range(acting.degree):
            images[base_order + j] = base_order + a(j)
        gens.append(Perm(images))
    return PermGroup(deg, gens), base_order * acting_order


def _automorphism_map(base: PermGroup, base_elems, index, gen_images):
    """Extend generator images to a permutation of the element set.

    Verifies multiplicativity along the way and bijectivity at the end;
    raises InvalidAction when the table is not an automorphism.
    """
    phi: dict[Perm, Perm] = {base.identity: base.identity}
    queue = [base.identity]
    while queue:
        x = queue.pop(0)
        fx = phi[x]
        for g, fg in zip(base.generators, gen_images):
            y = x * g
            fy = fx * fg
            if y in phi:
                if phi[y] != fy:
                    raise InvalidAction("action table does not preserve products")
            else:
                phi[y] = fy
                queue.append(y)
    if len(phi) != len(base_elems) or len(set(phi.values())) != len(base_elems):
        raise InvalidAction("action table is not bijective on the base group")
    return [index[phi[x]] for x in base_elems]


def _eval_wreath(recipe: GroupRecipe, cap: int):
    base, base_order = _eval(recipe.args["base"], cap)
    top, top_order = _eval(recipe.args["top"], cap)
    support = sorted({p for g in top.generators for p in g.moved_points()})
    m = len(support)
    pos = {pt: i for i, pt in enumerate(support)}
    deg = m * base.degree
    if deg > cap:
        raise DegreeOverflow(f"wreath degree {deg} exceeds cap {cap}")
    gens = []
    for i in range(m):
        for b in base.generators:
            gens.append(b.shift(i * base.degree, deg))
    for t in top.generators:
        images = [0] * deg
        for i, pt in enumerate(support):
            j = pos[t(pt)]
            for k in range(base.degree):
                images[i * base.degree + k] = j * base.degree + k
        gens.append(Perm(images))
    return PermGroup(deg, gens), base_order**m * top_order


def _as_perm(entry, degree: int) -> Perm:
    if isinstance(entry, Perm):
        return entry
    if isinstance(entry, str):
        return parse_perm(entry, degree)
    raise ParseError(f"cannot interpret {entry!r} as a permutation")


# ---------------------------------------------------------------------------
# JSON surface


def recipe_from_json(obj) -> GroupRecipe:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("recipe JSON must be an object with a 'kind' field")
    kind = obj["kind"]
    if kind in ("symmetric", "alternating", "cyclic"):
        return GroupRecipe(kind, n=obj["n"])
    if kind == "direct":
        return GroupRecipe(kind, a=recipe_from_json(obj["a"]), b=recipe_from_json(obj["b"]))
    if kind == "semidirect":
        return GroupRecipe(kind, base=recipe_from_json(obj["base"]),
                           acting=recipe_from_json(obj["acting"]),
                           action=[list(row) for row in obj["action"]])
    if kind == "wreath":
        return GroupRecipe(kind, base=recipe_from_json(obj["base"]),
                           top=recipe_from_json(obj["top"]))
    raise ParseError(f"unknown recipe kind: {kind!r}")


def recipe_to_json(recipe: GroupRecipe):
    kind = recipe.kind
    if kind in ("symmetric", "alternating", "cyclic"):
        return {"kind": kind, "n": recipe.args["n"]}
    if kind == "direct":
        return {"kind": kind, "a": recipe_to_json(recipe.args["a"]),
                "b": recipe_to_json(recipe.args["b"])}
    if kind == "semidirect":
        rows = []
        for row in recipe.args["action"]:
            rows.append([e.cycle_string() if isinstance(e, Perm) else e for e in row])
        return {"kind": kind, "base": recipe_to_json(recipe.args["base"]),
                "acting": recipe_to_json(recipe.args["acting"]), "action": rows}
    if kind == "wreath":
        return {"kind": kind, "base": recipe_to_json(recipe.args["base"]),
                "top": recipe_to_json(recipe.args["top"])}
    raise ParseError(f"unknown recipe kind: {kind!r}")
