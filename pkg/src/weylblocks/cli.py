"""Command-line frontend and batch corpus runner.

Single-shot verbs emit one JSON document on stdout (diagnostics on stderr);
``run`` executes the registered invariant checks over a corpus file and
writes a deterministic JSON report (timings are kept out of the report
unless --timings is passed, so two seeded runs are byte-identical).
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources

from . import cat_o, hecke, jsonio, soergel
from .coxeter import (
    DEFAULT_GROUP_BOUND,
    double_cosets,
    dot_stabilizer,
    generate_group,
    sort_key,
)
from .integral import (
    are_compatible,
    dominant_dot_rep,
    enumerate_Xi,
    find_regular_dominant,
    find_subgeneric,
    integral_datum,
    lambda_sharp,
    tau,
)
from .jsonio import SchemaError
from .rootsys import (
    GroupBoundExceeded,
    UnknownTypeError,
    build_root_system,
    classify_weight,
    dot_action,
    to_dominant_dot,
)

DEFAULT_SEED = 20250801


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# single-shot verbs
# ---------------------------------------------------------------------------

def cmd_integral(args) -> int:
    datum = build_root_system(args.type)
    lam = jsonio.parse_weight(datum, getattr(args, "lambda"))
    idat = integral_datum(datum, lam, args.bound)
    doc = {
        "type": datum.type_label,
        "lambda": jsonio.weight_to_json(lam),
        "integral_simples": [list(r.simple_coords)
                             for r in idat.integral_simples],
        "lambda_sharp": jsonio.weight_to_json(lambda_sharp(idat)),
        "w_int_order": idat.w_int.order,
        "w_ext_order": len(idat.w_ext),
        "chamber": [jsonio.element_to_json(datum, c)
                    for c in idat.chamber.sorted_elements],
        "chamber_order": idat.chamber.order,
        "tau": {jsonio.element_to_str(datum, w): str(tau(idat, w))
                for w in idat.w_ext},
    }
    _emit(doc)
    return 0


def cmd_xi(args) -> int:
    datum = build_root_system(args.type)
    mu = jsonio.parse_weight(datum, args.mu)
    lam = jsonio.parse_weight(datum, getattr(args, "lambda"))
    pairs = enumerate_Xi(datum, mu, lam, args.bound)
    _emit({
        "count": len(pairs),
        "pairs": [{"mu": jsonio.weight_to_json(p.mu),
                   "lambda": jsonio.weight_to_json(p.lam)} for p in pairs],
    })
    return 0


def cmd_cosets(args) -> int:
    datum = build_root_system(args.type)
    lam = jsonio.parse_weight(datum, getattr(args, "lambda"))
    left = jsonio.parse_weight(datum, args.left_stab)
    right = jsonio.parse_weight(datum, args.right_stab)
    idat = integral_datum(datum, lam, args.bound)
    dec = double_cosets(datum, frozenset(idat.w_ext),
                        dot_stabilizer(datum, left),
                        dot_stabilizer(datum, right))
    _emit({
        "left_gens": [jsonio.element_to_json(datum, g)
                      for g in dec.left.generators],
        "right_gens": [jsonio.element_to_json(datum, g)
                       for g in dec.right.generators],
        "cosets": [{"rep": jsonio.element_to_json(datum, rep),
                    "size": len(members)} for rep, members in dec.cosets],
    })
    return 0


def cmd_bimod(args) -> int:
    datum = build_root_system(args.type)
    lam = jsonio.parse_weight(datum, getattr(args, "lambda"))
    idat = integral_datum(datum, lam, args.bound)
    if args.action == "index":
        if args.mu is None:
            raise SchemaError("bimod index requires --mu")
        mu = jsonio.parse_weight(datum, args.mu)
        labels = soergel.indecomposable_index(datum, mu, lam, args.bound)
        _emit({
            "count": len(labels),
            "labels": [{"c": jsonio.element_to_json(datum, c),
                        "rep": jsonio.element_to_json(datum, rep)}
                       for c, rep in labels],
        })
        return 0
    if args.word is None:
        raise SchemaError(f"bimod {args.action} requires --word")
    letters = jsonio.parse_letters(idat, json.loads(args.word))
    word = soergel.make_word(idat, letters)
    if args.action == "grade":
        _emit({"grading": str(soergel.grading(word))})
    else:
        normal = soergel.normalize(word)
        _emit({
            "input": jsonio.letters_to_json(word),
            "normalized": jsonio.letters_to_json(normal),
            "grading": str(soergel.grading(normal)),
            "rank_left": soergel.rank_left(normal),
        })
    return 0


def cmd_hecke(args) -> int:
    datum = build_root_system(args.type)
    lam = jsonio.parse_weight(datum, getattr(args, "lambda"))
    idat = integral_datum(datum, lam, args.bound)
    if args.action == "kl":
        if args.x is None or args.w is None:
            raise SchemaError("hecke kl requires --x and --w")
        x = jsonio.parse_element(datum, args.x)
        w = jsonio.parse_element(datum, args.w)
        poly = hecke.kl_polynomial(hecke.kl_cache(idat), x, w)
        _emit({
            "x": jsonio.element_to_json(datum, x),
            "w": jsonio.element_to_json(datum, w),
            "variable": "q",
            "kl": jsonio.poly_to_json(poly),
        })
        return 0
    if args.word is None:
        raise SchemaError("hecke decompose requires --word")
    letters = jsonio.parse_letters(idat, json.loads(args.word))
    word = soergel.make_word(idat, letters)
    image = hecke.bs_character(idat, word)
    graded = hecke.decompose_graded(idat, image)
    mults = hecke.decompose(idat, image)
    terms = []
    for (c, x), poly in sorted(
            graded.items(),
            key=lambda kv: (sort_key(datum, kv[0][0]),
                            idat.int_sort_key(kv[0][1]))):
        terms.append({
            "c": jsonio.element_to_json(datum, c),
            "x": jsonio.element_to_json(datum, x),
            "poly": jsonio.poly_to_json(poly),
            "mult": mults[(c, x)],
        })
    _emit({"basis": "KL", "terms": terms})
    return 0


def cmd_cato(args) -> int:
    datum = build_root_system(args.type)
    if args.action == "weights":
        if args.highest is None:
            raise SchemaError("catO weights requires --highest")
        highest = jsonio.parse_weight(datum, args.highest)
        multiset = cat_o.irrep_weight_multiset(datum, highest)
        _emit([{"weight": jsonio.weight_to_json(w), "mult": m}
               for w, m in sorted(multiset.items())])
        return 0
    if getattr(args, "lambda") is None or args.mu is None or args.w is None:
        raise SchemaError("catO translate requires --lambda, --mu and --w")
    lam = jsonio.parse_weight(datum, getattr(args, "lambda"))
    mu = jsonio.parse_weight(datum, args.mu)
    w = jsonio.parse_element(datum, args.w)
    combo = cat_o.translate_verma(datum, lam, mu, w, args.bound)
    _emit({"terms": [{"weight": jsonio.weight_to_json(wt), "mult": m}
                     for wt, m in combo.items()]})
    return 0


# ---------------------------------------------------------------------------
# corpus runner
# ---------------------------------------------------------------------------

@dataclass
class CorpusEntry:
    index: int
    type_label: str
    lam: tuple
    mu: tuple | None
    tags: tuple[str, ...]


def load_corpus(doc) -> list[CorpusEntry]:
    if not isinstance(doc, dict) or "entries" not in doc \
            or not isinstance(doc["entries"], list):
        raise SchemaError("corpus must be an object with an 'entries' list")
    entries = []
    for i, raw in enumerate(doc["entries"]):
        where = f"entries[{i}]"
        if not isinstance(raw, dict):
            raise SchemaError(f"{where}: entry must be an object")
        unknown = set(raw) - {"type", "lambda", "mu", "tags"}
        if unknown:
            raise SchemaError(f"{where}: unknown fields {sorted(unknown)}")
        try:
            datum = build_root_system(raw["type"])
        except (KeyError, UnknownTypeError, TypeError) as exc:
            raise SchemaError(f"{where}.type: {exc}") from None
        try:
            lam = jsonio.parse_weight(datum, raw["lambda"])
        except (KeyError, SchemaError) as exc:
            raise SchemaError(f"{where}.lambda: {exc}") from None
        mu = None
        if raw.get("mu") is not None:
            try:
                mu = jsonio.parse_weight(datum, raw["mu"])
            except SchemaError as exc:
                raise SchemaError(f"{where}.mu: {exc}") from None
        tags = tuple(raw.get("tags", ()))
        entries.append(CorpusEntry(i, datum.type_label, lam, mu, tags))
    return entries


def default_corpus_path() -> str:
    return str(resources.files("weylblocks").joinpath("corpus/default.json"))


# -- the registered per-entry checks ----------------------------------------

def _check_tau_homomorphism(datum, idat, entry, rng):
    # compose bare root permutations: tau only needs the element's key
    by_perm = {w.root_perm: tau(idat, w) for w in idat.w_ext}
    for a in idat.w_ext:
        pa, ta = a.root_perm, by_perm[a.root_perm]
        for b in idat.w_ext:
            composed = tuple(pa[p] for p in b.root_perm)
            if by_perm[composed] != ta + by_perm[b.root_perm]:
                return "fail", (f"tau not additive at "
                                f"{jsonio.element_to_str(datum, a)}, "
                                f"{jsonio.element_to_str(datum, b)}")
    for w in idat.w_ext:
        if tau(idat, w).is_zero != (w in idat.w_int.elements):
            return "fail", f"kernel mismatch at {jsonio.element_to_str(datum, w)}"
    return "pass", None


def _check_semidirect(datum, idat, entry, rng):
    ch = idat.chamber.elements
    for c in ch:
        for d in ch:
            if c * d != d * c:
                return "fail", "chamber not abelian"
    if ch & idat.w_int.elements != {datum.identity}:
        return "fail", "chamber meets W_int"
    if idat.chamber.order * idat.w_int.order != len(idat.w_ext):
        return "fail", "|C|*|W_int| != |W_ext|"
    simple_indices = {r.index for r in idat.integral_simples}
    for c in ch:
        if {c.root_perm[i] for i in simple_indices} != simple_indices:
            return "fail", ("chamber element "
                            f"{jsonio.element_to_str(datum, c)} does not "
                            "permute the simple system")
    if classify_weight(datum, entry.lam).dominant:
        for c in ch:
            if not classify_weight(datum, dot_action(datum, c, entry.lam)).dominant:
                return "fail", (f"c.lam not dominant for "
                                f"{jsonio.element_to_str(datum, c)}")
    return "pass", None


def _check_integral_consistency(datum, idat, entry, rng):
    n = datum.num_positive
    pos = {r.index for r in idat.integral_positive}
    for r in idat.integral_positive:  # closed under negation by layout
        if (r.index + n) not in {x.index for x in idat.integral_roots}:
            return "fail", f"negative of {r} missing"
    # two dominance tests agree on random translates of lam
    for _ in range(12):
        shift = tuple(rng.randint(-3, 3) for _ in range(datum.rank))
        x = tuple(a + b for a, b in zip(entry.lam, shift))
        shifted = tuple(a + b for a, b in zip(x, datum.rho))
        full = classify_weight(datum, x).dominant
        integral_only = all(r.pair(shifted) >= 0 for r in idat.integral_positive)
        if full != integral_only:
            return "fail", f"dominance criteria disagree at {x}"
    # the integral system transports along the dot action
    group = generate_group(datum)
    for _ in range(6):
        w = group[rng.randrange(len(group))]
        moved = dot_action(datum, w, entry.lam)
        direct = {r.index for r in datum.positive_roots
                  if r.pair(moved).denominator == 1}
        transported = set()
        for r in idat.integral_positive:
            img = w.root_perm[r.index]
            transported.add(img if img < n else img - n)
        if direct != transported:
            return "fail", (f"integral roots of w.lam differ from w(roots) "
                            f"at w = {jsonio.element_to_str(datum, w)}")
    return "pass", None


def _check_subgeneric(datum, idat, entry, rng):
    nu = find_regular_dominant(idat)
    cls = classify_weight(datum, nu)
    diff_ok = all((a - b).denominator == 1 for a, b in zip(nu, entry.lam))
    if not (cls.dominant and cls.regular and diff_ok):
        return "fail", f"regular dominant certificate {nu} invalid"
    for j in range(1, idat.rank + 1):
        mu_j = find_subgeneric(idat, j)
        stab = dot_stabilizer(datum, mu_j)
        wall = idat.simple_reflections[j - 1]
        if not classify_weight(datum, mu_j).dominant \
                or stab.elements != {datum.identity, wall}:
            return "fail", f"subgeneric certificate {mu_j} invalid at i={j}"
    return "pass", None


def _check_xi_counts(datum, idat, entry, rng):
    if entry.mu is None:
        return "skip", "no mu in entry"
    if not are_compatible(datum, entry.mu, entry.lam):
        return "skip", "orbits not compatible"
    pairs = enumerate_Xi(datum, entry.mu, entry.lam)
    _, lam_dom = to_dominant_dot(datum, entry.lam)
    idat_dom = integral_datum(datum, lam_dom)
    aligned = next(dot_action(datum, w, entry.mu)
                   for w in generate_group(datum)
                   if all((x - y).denominator == 1
                          for x, y in zip(dot_action(datum, w, entry.mu),
                                          lam_dom)))
    _, mu_dom = dominant_dot_rep(idat_dom, aligned)
    dc = double_cosets(datum, frozenset(idat_dom.w_ext),
                       dot_stabilizer(datum, mu_dom),
                       dot_stabilizer(datum, lam_dom))
    labels = soergel.indecomposable_index(datum, mu_dom, lam_dom)
    if not len(pairs) == dc.count == len(labels):
        return "fail", (f"counts disagree: Xi={len(pairs)}, "
                        f"cosets={dc.count}, labels={len(labels)}")
    return "pass", None


def _check_translate_verma(datum, idat, entry, rng):
    if entry.mu is None:
        return "skip", "no mu in entry"
    lam, mu = entry.lam, entry.mu
    if not (classify_weight(datum, lam).dominant
            and classify_weight(datum, mu).dominant):
        return "skip", "pair not dominant as given"
    if any((a - b).denominator != 1 for a, b in zip(mu, lam)):
        return "skip", "mu - lambda not a lattice weight"
    stab_lam = dot_stabilizer(datum, lam).elements
    stab_mu = dot_stabilizer(datum, mu).elements
    if not stab_lam <= stab_mu:
        return "skip", "stabilizer of lambda not inside stabilizer of mu"
    for w in idat.w_int.sorted_elements:
        try:
            combo = cat_o.translate_verma(datum, lam, mu, w)
        except AssertionError as exc:
            return "fail", (f"identity failed at w = "
                            f"{jsonio.element_to_str(datum, w)}: {exc}")
        if combo.terms != {dot_action(datum, w, mu): 1}:
            return "fail", (f"unexpected image at w = "
                            f"{jsonio.element_to_str(datum, w)}")
    return "pass", None


def _random_word(idat, rng, max_len=8):
    letters = []
    for _ in range(rng.randrange(max_len + 1)):
        if idat.rank and rng.randrange(5) < 3:
            letters.append(soergel.BsLetter(rng.randrange(1, idat.rank + 1)))
        else:
            pool = idat.chamber.sorted_elements or (idat.datum.identity,)
            letters.append(soergel.RwLetter(pool[rng.randrange(len(pool))]))
    return soergel.make_word(idat, letters)


def _random_rewrite(word, rng, cap=400):
    for _ in range(cap):
        sites = soergel.rewrite_sites(word)
        if not sites:
            return word
        word = soergel.rewrite_step(word, sites[rng.randrange(len(sites))])
    raise AssertionError("random rewriting exceeded the step cap")


def _check_rewriter(datum, idat, entry, rng, words=40):
    for _ in range(words):
        word = _random_word(idat, rng)
        nf = soergel.normalize(word)
        for _ in range(2):
            alt = _random_rewrite(word, rng)
            if alt != nf:
                return "fail", f"normal forms differ for {jsonio.letters_to_json(word)}"
        if soergel.grading(nf) != soergel.grading(word):
            return "fail", f"grading changed for {jsonio.letters_to_json(word)}"
        if nf.bs_count != word.bs_count:
            return "fail", f"Bs count changed for {jsonio.letters_to_json(word)}"
        if soergel.rank_left(nf) != 2 ** word.bs_count:
            return "fail", f"rank changed for {jsonio.letters_to_json(word)}"
    return "pass", None


def _check_hecke_block(datum, idat, entry, rng, words=6):
    cache = hecke.kl_cache(idat)  # construction validates the KL table
    vpv = hecke.V + hecke.V_INV
    for j in range(1, idat.rank + 1):
        b = hecke.kl_generator(idat, j)
        if b * b != b.scale(vpv):
            return "fail", f"quadratic relation fails at simple {j}"
    for _ in range(words):
        word = _random_word(idat, rng, max_len=6)
        if hecke.bs_character(idat, word) != \
                hecke.bs_character(idat, _random_rewrite(word, rng)):
            return "fail", (f"character not rewrite-invariant for "
                            f"{jsonio.letters_to_json(word)}")
    # nonnegativity of b_s b_w in the KL basis, sampled for large blocks
    elements = idat.int_elements()
    sample = elements if len(elements) <= 48 else \
        [elements[rng.randrange(len(elements))] for _ in range(16)]
    e = datum.identity
    for w in sample:
        for j in range(1, idat.rank + 1):
            prod = hecke.kl_generator(idat, j) * cache.kl_basis_element(e, w)
            try:
                hecke.decompose(idat, prod, cache)
            except ValueError as exc:
                return "fail", (f"negative structure constant at "
                                f"{idat.int_reduced_word(w)}, simple {j}: {exc}")
    return "pass", None


CHECKS = (
    ("tau_homomorphism", _check_tau_homomorphism),
    ("semidirect", _check_semidirect),
    ("integral_consistency", _check_integral_consistency),
    ("subgeneric_certificates", _check_subgeneric),
    ("xi_triple_count", _check_xi_counts),
    ("translate_verma", _check_translate_verma),
    ("rewriter", _check_rewriter),
    ("hecke_block", _check_hecke_block),
)


def run_entry(entry: CorpusEntry, seed: int, bound: int) -> tuple[dict, float]:
    start = time.perf_counter()
    datum = build_root_system(entry.type_label)
    idat = integral_datum(datum, entry.lam, bound)
    checks = {}
    for name, fn in CHECKS:
        # string seeds hash stably across processes (byte-identical reports)
        rng = random.Random(f"{seed}:{entry.index}:{name}")
        try:
            status, witness = fn(datum, idat, entry, rng)
        except Exception as exc:  # a crash is a failing check, with witness
            status, witness = "fail", f"{type(exc).__name__}: {exc}"
        checks[name] = {"status": status}
        if witness is not None and status != "pass":
            checks[name]["witness"] = witness
    return checks, time.perf_counter() - start


def run_corpus(path: str, workers: int = 1, seed: int = DEFAULT_SEED,
               bound: int = DEFAULT_GROUP_BOUND,
               with_timings: bool = False) -> tuple[dict, list[float]]:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"corpus is not valid JSON: {exc}") from None
    entries = load_corpus(doc)
    results: list[tuple[dict, float]] = [None] * len(entries)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {pool.submit(run_entry, e, seed, bound): e.index
                       for e in entries}
            for fut, idx in futures.items():
                results[idx] = fut.result()
    else:
        for e in entries:
            results[e.index] = run_entry(e, seed, bound)

    out_entries = []
    passed = failed = skipped = 0
    for entry, (checks, elapsed) in zip(entries, results):
        for res in checks.values():
            if res["status"] == "pass":
                passed += 1
            elif res["status"] == "fail":
                failed += 1
            else:
                skipped += 1
        row = {
            "index": entry.index,
            "type": entry.type_label,
            "lambda": jsonio.weight_to_json(entry.lam),
            "mu": jsonio.weight_to_json(entry.mu) if entry.mu else None,
            "tags": list(entry.tags),
            "checks": checks,
        }
        if with_timings:
            row["elapsed_ms"] = round(elapsed * 1000, 3)
        out_entries.append(row)
    report = {
        "seed": seed,
        "entries": out_entries,
        "summary": {
            "entries": len(entries),
            "checks_passed": passed,
            "checks_failed": failed,
            "checks_skipped": skipped,
            "all_passed": failed == 0,
        },
    }
    return report, [r[1] for r in results]


def cmd_run(args) -> int:
    path = args.corpus or default_corpus_path()
    report, timings = run_corpus(path, workers=args.workers, seed=args.seed,
                                 bound=args.bound,
                                 with_timings=args.timings)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stdout.write(text)
    for row, elapsed in zip(report["entries"], timings):
        statuses = " ".join(f"{name}={res['status']}"
                            for name, res in sorted(row["checks"].items()))
        print(f"[{row['index']:3d}] {row['type']:6s} "
              f"lambda={','.join(row['lambda']):>12s} "
              f"({elapsed * 1000:7.1f} ms) {statuses}", file=sys.stderr)
    summary = report["summary"]
    print(f"entries={summary['entries']} passed={summary['checks_passed']} "
          f"failed={summary['checks_failed']} "
          f"skipped={summary['checks_skipped']}", file=sys.stderr)
    return 0 if summary["all_passed"] else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

# let option values like "-1,1/2,0" or "-1/2" pass as weights, not flags
_NEGATIVE_WEIGHT = re.compile(r"^-\d[\d,/-]*$")


def _weight_friendly(p: argparse.ArgumentParser) -> argparse.ArgumentParser:
    p._negative_number_matcher = _NEGATIVE_WEIGHT
    return p


def _add_common(p, with_lambda=True):
    p.add_argument("--type", required=True, help="Cartan type, e.g. A3 or A1xA1")
    if with_lambda:
        p.add_argument("--lambda", required=True,
                       help="comma-separated rational coordinates, e.g. 0,1/2,0")
    p.add_argument("--bound", type=int, default=DEFAULT_GROUP_BOUND,
                   help="group enumeration bound")


def build_parser() -> argparse.ArgumentParser:
    parser = _weight_friendly(argparse.ArgumentParser(
        prog="weylblocks",
        description="Exact block combinatorics for Weyl groups: integral "
                    "root data, double cosets, graded word calculus, "
                    "Hecke-algebra decompositions and character-level "
                    "translation identities."))
    sub = parser.add_subparsers(dest="verb", required=True)

    p = _weight_friendly(sub.add_parser("integral", help="integral package of a weight"))
    _add_common(p)
    p.set_defaults(fn=cmd_integral)

    p = _weight_friendly(sub.add_parser("xi", help="proper pairs of a compatible orbit pair"))
    _add_common(p)
    p.add_argument("--mu", required=True)
    p.set_defaults(fn=cmd_xi)

    p = _weight_friendly(sub.add_parser("cosets", help="double cosets inside the extended group"))
    _add_common(p)
    p.add_argument("--left-stab", required=True,
                   help="weight whose dot stabilizer acts on the left")
    p.add_argument("--right-stab", required=True)
    p.set_defaults(fn=cmd_cosets)

    p = _weight_friendly(sub.add_parser("bimod", help="graded word calculus"))
    p.add_argument("action", choices=("normalize", "grade", "index"))
    _add_common(p)
    p.add_argument("--word", help='JSON array of letters, e.g. \'["R:s2*s1*s3*s2","B:s1"]\'')
    p.add_argument("--mu")
    p.set_defaults(fn=cmd_bimod)

    p = _weight_friendly(sub.add_parser("hecke", help="Hecke algebra of the block"))
    p.add_argument("action", choices=("kl", "decompose"))
    _add_common(p)
    p.add_argument("--x", help="reduced word, e.g. s1*s2")
    p.add_argument("--w", help="reduced word")
    p.add_argument("--word", help="JSON array of letters")
    p.set_defaults(fn=cmd_hecke)

    p = _weight_friendly(sub.add_parser("catO", help="character-level category O data"))
    p.add_argument("action", choices=("weights", "translate"))
    p.add_argument("--type", required=True)
    p.add_argument("--highest", help="dominant integral highest weight")
    p.add_argument("--lambda")
    p.add_argument("--mu")
    p.add_argument("--w", help="reduced word")
    p.add_argument("--bound", type=int, default=DEFAULT_GROUP_BOUND)
    p.set_defaults(fn=cmd_cato)

    p = _weight_friendly(sub.add_parser("run", help="run the invariant checks over a corpus"))
    p.add_argument("--corpus", help="corpus JSON path (default: bundled)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", help="also write the report here")
    p.add_argument("--timings", action="store_true",
                   help="include per-entry timings in the JSON report")
    p.add_argument("--bound", type=int, default=DEFAULT_GROUP_BOUND)
    p.set_defaults(fn=cmd_run)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (SchemaError, UnknownTypeError, GroupBoundExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
