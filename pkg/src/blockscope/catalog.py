"""Catalog loading and the end-to-end verification pipeline.

Each catalog entry names a group recipe, a prime, an expected case label
and optional expected invariants with provenance notes.  ``run_catalog``
evaluates every entry (classify, verify counts, weights, local structure,
lower defect tables, block suites), compares against the expectations,
and assembles a deterministic machine-readable report.  An entry that
raises a cap or input error is marked errored and the run continues.

Exit status: 0 all pass, 1 any verdict failed or entry errored,
2 an internal consistency assertion tripped, 3 unusable input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .blocks import (block_distribution, block_idempotent_vectors, brauer_induce,
                     lower_defect_multiplicities, principal_block, p_subgroup_classes)
from .chartable import character_table, _class_matrices
from .classify import (check_local_structure, classify_case, count_weights,
                       verify_counts)
from .errors import (BlockscopeError, CapExceeded, InputError,
                     InternalInconsistency, ParseError)
from .groups import PermGroup, normalizer
from .recipes import construct_group, recipe_from_json, recipe_to_json

__all__ = ["CatalogEntry", "load_catalog", "builtin_catalog_path", "run_catalog",
           "analyze_group", "EXIT_PASS", "EXIT_VERDICT_FAIL", "EXIT_INTERNAL",
           "EXIT_INPUT"]

EXIT_PASS = 0
EXIT_VERDICT_FAIL = 1
EXIT_INTERNAL = 2
EXIT_INPUT = 3

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    recipe: object
    prime: int
    expected: dict
    provenance: str


def builtin_catalog_path() -> str:
    return str(resources.files("blockscope").joinpath("data/catalog.json"))


def load_catalog(path: str) -> list[CatalogEntry]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read catalog {path}: {exc}") from exc
    if not isinstance(data, dict) or "entries" not in data:
        raise ParseError("catalog must be an object with an 'entries' list")
    entries = []
    for raw in data["entries"]:
        try:
            entries.append(CatalogEntry(
                name=raw["name"],
                recipe=recipe_from_json(raw["recipe"]),
                prime=int(raw.get("prime", 2)),
                expected=dict(raw.get("expected", {})),
                provenance=raw.get("provenance", ""),
            ))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"malformed catalog entry: {exc}") from exc
    return entries


# ---------------------------------------------------------------------------
# per-group pipeline


def analyze_group(group: PermGroup, p: int, strict_lt_threshold: bool = False,
                  seed: int = 0) -> dict:
    """Full pipeline for one group; returns the report dictionary."""
    report = classify_case(group, p, strict_lt_threshold=strict_lt_threshold,
                           seed=seed)
    out = {
        "case_label": report.case_label,
        "threshold_reading": "lt16" if strict_lt_threshold else "le16",
        "evidence": dict(sorted(report.evidence.items())),
        "predicted": {},
        "measured": {},
        "verdicts": {},
        "local_structure": {},
        "blocks": [],
        "lower_defect": [],
    }
    if p == 2 and report.in_scope:
        verify_counts(report)
        check_local_structure(report)
        blk = principal_block(group, p)
        weights = count_weights(group, p, blk)
        report.measured["weights"] = weights
        report.verdicts["weights_equal_l"] = "pass" if weights == blk.l else "fail"
        out["predicted"] = dict(sorted(report.predicted.items()))
        out["measured"] = dict(sorted(report.measured.items()))
        out["verdicts"] = dict(sorted(report.verdicts.items()))
        out["local_structure"] = dict(sorted(report.local_structure.items()))

    table = character_table(group)
    blocks = block_distribution(table, p)
    suite = _invariant_suite(group, table, blocks, p)
    out["invariant_suite"] = suite
    for blk in blocks:
        entry = blk.to_json()
        ldt = lower_defect_multiplicities(blk)
        entry["lower_defect"] = ldt.to_json()
        out["blocks"].append(entry)
        if blk.is_principal:
            out["lower_defect"] = [[order, m] for order, m in
                                   sorted(ldt.by_order().items(), reverse=True)]
    return out


def _invariant_suite(group: PermGroup, table, blocks, p: int) -> dict:
    """Hard block-theoretic identities, checked on every analyzed group."""
    n_pregular = len(table.p_regular_indices(p))
    suite = {
        "blocks_partition_irr": sum(b.k for b in blocks) == table.n_classes,
        "sum_l_equals_p_regular_classes": sum(b.l for b in blocks) == n_pregular,
        "defect_zero_blocks_trivial": all(
            b.k == 1 and b.l == 1 and b.defect_group.order == 1
            for b in blocks if b.defect == 0),
        "idempotents_orthogonal_sum_one": _check_idempotents(group, table, p),
        "principal_induction_from_local": _check_brauer_third(group, p),
    }
    return suite


def _check_idempotents(group: PermGroup, table, p: int) -> bool:
    """e_b mod p are orthogonal idempotents summing to 1 in Z(kG)."""
    vectors, ctx = block_idempotent_vectors(table, p)
    field = ctx.field
    mats = _class_matrices(group)
    r = table.n_classes

    def mult(u, v):
        out = [field.zero] * r
        for i in range(r):
            if u[i] == field.zero:
                continue
            for j in range(r):
                if v[j] == field.zero:
                    continue
                uv = field.mul(u[i], v[j])
                row = mats[i][j]
                for k in range(r):
                    a = int(row[k]) % p
                    if a:
                        out[k] = field.add(out[k], field.mul(uv, field.scalar(a)))
        return tuple(out)

    one = tuple([field.one] + [field.zero] * (r - 1))
    total = [field.zero] * r
    for i, u in enumerate(vectors):
        for k in range(r):
            total[k] = field.add(total[k], u[k])
        if mult(u, u) != u:
            return False
        for v in vectors[i + 1:]:
            if any(x != field.zero for x in mult(u, v)):
                return False
    return tuple(total) == one


def _check_brauer_third(group: PermGroup, p: int) -> bool:
    """The principal block of N_G(R) induces to the principal block of G,
    for every p-subgroup class representative R."""
    b0 = principal_block(group, p)
    for r in p_subgroup_classes(group, p):
        n = normalizer(group, r) if r.order > 1 else group
        local = principal_block(n, p)
        ind = local if n is group else brauer_induce(local, group)
        if ind is None or not ind.is_principal:
            return False
    return True


# ---------------------------------------------------------------------------
# catalog runner


def _check_expected(entry: CatalogEntry, result: dict) -> dict:
    verdicts = {}
    exp = entry.expected
    if "case_label" in exp:
        verdicts["expected_case_label"] = _v(result["case_label"] == exp["case_label"])
    ev = result["evidence"]
    if "hyperfocal_invariants" in exp:
        verdicts["expected_hyperfocal"] = _v(
            ev.get("hyperfocal_invariants") == exp["hyperfocal_invariants"])
    if "controlled" in exp:
        verdicts["expected_controlled"] = _v(
            ev.get("controlled_by_sylow_normalizer") == exp["controlled"])
    if "essential_order" in exp:
        verdicts["expected_essential_order"] = _v(
            ev.get("essential_order") == exp["essential_order"])
    if "essential_automizer_s3" in exp:
        verdicts["expected_essential_automizer"] = _v(
            ev.get("essential_automizer_is_s3") == exp["essential_automizer_s3"])
    measured = result["measured"]
    principal = next((b for b in result["blocks"] if b["is_principal"]), None)
    for key in ("k_b", "l_b", "k_c", "l_c"):
        if key in exp:
            got = measured.get(key)
            if got is None and principal is not None and key in ("k_b", "l_b"):
                got = principal[key[0]]
            verdicts[f"expected_{key}"] = _v(got == exp[key])
    if "weights" in exp:
        verdicts["expected_weights"] = _v(measured.get("weights") == exp["weights"])
    if "block_count" in exp:
        verdicts["expected_block_count"] = _v(len(result["blocks"]) == exp["block_count"])
    if "lower_defect" in exp:
        want = sorted(map(tuple, exp["lower_defect"]), reverse=True)
        got = sorted(map(tuple, result["lower_defect"]), reverse=True)
        verdicts["expected_lower_defect"] = _v(want == got)
    return verdicts


def _v(ok: bool) -> str:
    return "pass" if ok else "fail"


def run_catalog(path: str, filters: list[str] | None = None,
                strict_lt_threshold: bool = False, seed: int = 0) -> tuple[dict, int]:
    """Evaluate a catalog file; returns (report, exit_code)."""
    entries = load_catalog(path)
    if filters:
        entries = [e for e in entries
                   if e.name in filters or e.expected.get("case_label") in filters]
    report = {
        "schema": SCHEMA_VERSION,
        "seed": seed,
        "threshold_reading": "lt16" if strict_lt_threshold else "le16",
        "entries": [],
        "summary": {"total": len(entries), "passed": 0, "failed": 0, "errored": 0},
    }
    exit_code = EXIT_PASS
    for entry in entries:
        item = {
            "name": entry.name,
            "prime": entry.prime,
            "recipe": recipe_to_json(entry.recipe),
            "provenance": entry.provenance,
        }
        try:
            group = construct_group(entry.recipe)
            result = analyze_group(group, entry.prime,
                                   strict_lt_threshold=strict_lt_threshold, seed=seed)
            item.update(result)
            item["expected"] = entry.expected
            item["expected_verdicts"] = _check_expected(entry, result)
            all_checks = (list(result["verdicts"].values())
                          + list(result["local_structure"].values())
                          + list(item["expected_verdicts"].values())
                          + [_v(v) for v in result["invariant_suite"].values()])
            ok = all(v == "pass" for v in all_checks if v != "skipped")
            item["status"] = "pass" if ok else "fail"
        except InternalInconsistency as exc:
            item["status"] = "errored"
            item["error"] = f"{type(exc).__name__}: {exc}"
            exit_code = EXIT_INTERNAL
        except (CapExceeded, InputError, BlockscopeError) as exc:
            item["status"] = "errored"
            item["error"] = f"{type(exc).__name__}: {exc}"
        report["entries"].append(item)
        if item["status"] == "pass":
            report["summary"]["passed"] += 1
        elif item["status"] == "fail":
            report["summary"]["failed"] += 1
        else:
            report["summary"]["errored"] += 1
    if exit_code == EXIT_PASS and (report["summary"]["failed"]
                                   or report["summary"]["errored"]):
        exit_code = EXIT_VERDICT_FAIL
    return report, exit_code


def summarize(report: dict) -> str:
    lines = []
    lines.append(f"catalog run (threshold reading: {report['threshold_reading']}, "
                 f"seed {report['seed']})")
    for item in report["entries"]:
        status = item["status"].upper()
        label = item.get("case_label", "-")
        extra = ""
        m = item.get("measured") or {}
        if "l_b" in m:
            extra = (f"  k={m.get('k_b')} l={m.get('l_b')}"
                     f" weights={m.get('weights')}")
        if item["status"] == "errored":
            extra = f"  {item['error']}"
        lines.append(f"  [{status:>7}] {item['name']:<10} {label or '-':<28}{extra}")
    s = report["summary"]
    lines.append(f"total {s['total']}: {s['passed']} passed, {s['failed']} failed, "
                 f"{s['errored']} errored")
    return "\n".join(lines)
