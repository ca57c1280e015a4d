"""
bll.py - Business Logic Layer for lpbetti.

This module contains the logic behind the command-line surface, including:
- Poset loading (DAL + validation + parsing)
- Engine selection and dispatch for graded and multigraded tables
- The summary printed by `info` and the generator listing of `gens`
- The bundled poset listing of `posets`, with optional seeding
- The cross-validation suite run by `check`

User-facing operations return (result, error_message) tuples; the engines
below raise exceptions from lpbetti.errors, which are caught here.
"""

import logging
import os

from . import catalog
from . import config
from . import dal
from . import validation
from .errors import InvariantError, LetterplaceError, PosetError, SizeGuardError
from .hochster import (
    Multidegree,
    beta_R_oracle,
    betti_table_oracle,
    consecutive_leq,
    degree_budget,
    enumerate_multidegrees,
    multigraded_betti_oracle,
)
from .letterplace import (
    colp_generators,
    delta_complex,
    facets_from_duality,
    lp_generators,
    multiplicity,
    multiplicity_bounds,
)
from .poset import (
    Poset,
    is_antichain,
    is_rooted_forest,
    maximal_antichains,
    max_of,
    min_of,
    parse_poset,
    width,
)
from .report import FAIL, INFO, PASS, SKIP, Report
from .simplicial import FieldSpec, reduced_homology
from .strand import beta_poly, beta_polys, betti_table_fast, classify_strands, multigraded_betti_fast
from .tree import betti_table_tree, tree_multigraded_beta

logger = logging.getLogger(__name__)

# Largest n*|P| for which check builds all faces of Delta(n,P) or scans every unpruned multidegree
CHECK_FACE_VERTICES = 12
CHECK_SHORTCUT_VERTICES = 12

# --- Poset Loading ---

def load_poset(name: str):
    """
    Loads and parses a poset file.

    Args:
        name (str): A path or the name of a bundled poset

    Returns:
        tuple: (result, error_message)
            - If successful: (Poset, "")
            - If failed: (None, error_message)
    """
    text = dal.read_poset_text(name)
    if text is None:
        return None, f"Poset file '{name}' not found or unreadable."

    is_valid, error = validation.validate_poset_text(text)
    if not is_valid:
        logger.error("BLL: %s", error)
        return None, error

    try:
        poset = parse_poset(text)
    except PosetError as e:
        logger.error("BLL: could not parse %s: %s", name, e)
        return None, str(e)

    logger.info("BLL: loaded poset %s with %d elements", name, len(poset))
    return poset, ""

# --- Engine Dispatch ---

def choose_engine(engine: str, P: Poset) -> str:
    """Resolves 'auto' to the tree engine for rooted forests and the strand engine otherwise."""
    if engine != 'auto':
        return engine
    return 'tree' if is_rooted_forest(P) else 'strand'


def _run_engine(engine: str, n: int, P: Poset, k: FieldSpec, workers: int = 1):
    if engine == 'oracle':
        return betti_table_oracle(n, P, k, workers=workers)
    if engine == 'strand':
        return betti_table_fast(n, P, k, workers=workers)
    if engine == 'tree':
        return betti_table_tree(n, P)
    raise ValueError(f"unknown engine '{engine}'")


def compute_betti_table(P: Poset, n: int, engine: str = 'auto', characteristic: int = 0, workers: int = 1):
    """
    Computes the graded Betti table of L(n,P).

    Args:
        P (Poset): The poset
        n (int): Number of slots
        engine (str): 'auto', 'oracle', 'strand' or 'tree'
        characteristic (int): 0 or a prime
        workers (int): Worker processes for per-multidegree engines

    Returns:
        tuple: (result, error_message)
            - If successful: (BettiTable in the ideal convention, "")
            - If failed: (None, error_message)
    """
    name = choose_engine(engine, P)
    try:
        table = _run_engine(name, n, P, FieldSpec(characteristic), workers)
    except LetterplaceError as e:
        logger.error("BLL: %s engine failed: %s", name, e)
        return None, str(e)

    logger.info("BLL: %s engine produced %d entries for n=%d", name, len(table), n)
    return table, ""


def compute_multigraded(P: Poset, n: int, engine: str = 'auto', characteristic: int = 0, workers: int = 1):
    """
    Lists the nonzero multigraded Betti numbers in enumeration order.

    Returns:
        tuple: (list of (Multidegree, {i: beta}) pairs, error_message)
    """
    k = FieldSpec(characteristic)
    name = 'strand' if engine == 'auto' else engine
    try:
        if name == 'oracle':
            pairs = list(multigraded_betti_oracle(n, P, k, workers=workers))
        elif name == 'strand':
            pairs = list(multigraded_betti_fast(n, P, k, workers=workers))
        else:
            pairs = []
            for R in enumerate_multidegrees(n, P):
                value = tree_multigraded_beta(n, P, R)
                if value is not None:
                    _, i, beta = value
                    pairs.append((R, {i: beta}))
    except LetterplaceError as e:
        logger.error("BLL: multigraded %s engine failed: %s", name, e)
        return None, str(e)
    return pairs, ""

# --- Info and Generators ---

def poset_summary(P: Poset, n: int):
    """
    Predicted invariants of L(n,P) from the poset alone.

    Returns:
        tuple: (dict of label -> value, error_message)
    """
    try:
        c = width(P)
        sizes = sorted({len(a) for a in maximal_antichains(P)})
        mult = multiplicity(n, P)
    except (SizeGuardError, InvariantError) as e:
        return None, str(e)
    lower, upper = multiplicity_bounds(n, P)
    level = n == 1 or len(sizes) == 1
    summary = {
        'elements': len(P),
        'width': c,
        'codimension': len(P),
        'projective dimension': len(P) - 1,
        'regularity': c * (n - 1) + 1,
        'multiplicity': f"{mult} (bounds {lower} <= e <= {upper})",
        'maximal antichain sizes': ", ".join(map(str, sizes)),
        'level': str(level).lower(),
        'top internal degrees': ", ".join(str(len(P) + (n - 1) * d) for d in sizes) if n > 1 else str(len(P)),
        'generators': len(lp_generators(n, P)),
        'rooted forest': str(is_rooted_forest(P)).lower(),
    }
    return summary, ""


def generators_text(P: Poset, n: int, colp: bool = False) -> str:
    """Generators of L(n,P), or of L(P,n) when colp is set, one monomial per line."""
    monomials = colp_generators(P, n) if colp else lp_generators(n, P)
    return "".join(f"{m}\n" for m in monomials)

# --- Bundled Posets ---

def list_posets(seed: bool = False, overwrite: bool = False):
    """
    Describes every poset file in the bundled directory.

    Args:
        seed (bool): Write the catalog posets into the directory first
        overwrite (bool): With seed, replace files that already exist

    Returns:
        tuple: (result, error_message)
            - If successful: (list of row dicts, "")
            - If the directory holds no poset files: (None, error_message)
    """
    if seed:
        written = catalog.seed_poset_files(overwrite=overwrite)
        logger.info("BLL: seeded %d poset files", len(written))

    names = dal.list_bundled_posets()
    if not names:
        return None, f"No poset files in {dal.POSET_DIR}; run `posets --seed` to create them."

    rows = []
    for name in names:
        row = {'name': name, 'elements': '-', 'width': '-', 'forest': '-', 'status': 'ok'}
        poset, error = load_poset(os.path.join(dal.POSET_DIR, name))
        if poset is None:
            row['status'] = error
        else:
            row['elements'] = len(poset)
            row['forest'] = str(is_rooted_forest(poset)).lower()
            try:
                row['width'] = width(poset)
            except SizeGuardError:
                row['width'] = '?'
        rows.append(row)
    return rows, ""

# --- Check Suite ---

def characteristic_probe(P: Poset) -> Multidegree:
    """The n = 2 multidegree {1} x min(P) union {2} x (max(P) - min(P)), or max(P) if that is empty."""
    low = min_of(P, P.elements)
    high = max_of(P, P.elements) - low
    return Multidegree.of(low, high or max_of(P, P.elements))


def _check_tables(report, tables, P, n):
    c = width(P)
    for (engine, k), table in tables.items():
        pd_ok = table.projective_dimension == len(P) - 1
        reg_ok = table.regularity == c * (n - 1) + 1
        status = PASS if pd_ok and reg_ok else FAIL
        report.add(f"pd/regularity [{engine}, {k}]", status,
                   f"pd {table.projective_dimension} (expected {len(P) - 1}), "
                   f"regularity {table.regularity} (expected {c * (n - 1) + 1})")


def _check_equivalence(report, tables, k):
    computed = [(engine, table) for (engine, kk), table in tables.items() if kk == k]
    if len(computed) < 2:
        report.add(f"engine equivalence [{k}]", SKIP, "fewer than two engines ran")
        return
    first_engine, first = computed[0]
    differing = [engine for engine, table in computed[1:] if table != first]
    engines = ", ".join(engine for engine, _ in computed)
    if differing:
        report.add(f"engine equivalence [{k}]", FAIL,
                   f"{', '.join(differing)} differ from {first_engine}", len(computed))
    else:
        report.add(f"engine equivalence [{k}]", PASS, f"{engines} agree", len(computed))


def _check_multigraded(report, n, P, k):
    oracle = {R: betti for R, betti in multigraded_betti_oracle(n, P, k)}
    fast = {R: betti for R, betti in multigraded_betti_fast(n, P, k)}
    if oracle == fast:
        report.add(f"multigraded equivalence [{k}]", PASS, f"{len(oracle)} multidegrees", len(oracle))
    else:
        differing = sum(1 for R in set(oracle) | set(fast) if oracle.get(R) != fast.get(R))
        report.add(f"multigraded equivalence [{k}]", FAIL, f"{differing} multidegrees differ", differing)


def _check_zero_shortcut(report, n, P, k):
    if n * len(P) > CHECK_SHORTCUT_VERTICES:
        report.add(f"zero shortcut [{k}]", SKIP, f"n*|P| > {CHECK_SHORTCUT_VERTICES}")
        return
    budget = degree_budget(n, P)
    checked = 0
    nonzero = 0
    for R in enumerate_multidegrees(n, P, prune=False):
        if R.size > budget or consecutive_leq(P, R.masks(P)):
            continue
        checked += 1
        if beta_R_oracle(n, P, R, k):
            nonzero += 1
    status = FAIL if nonzero else PASS
    report.add(f"zero shortcut [{k}]", status, f"{nonzero} of {checked} excluded multidegrees nonzero", checked)


def _check_duality(report, n, P):
    if n * len(P) > CHECK_FACE_VERTICES:
        report.add("duality facets", SKIP, f"n*|P| > {CHECK_FACE_VERTICES}")
        report.add("ball/sphere homology", SKIP, f"n*|P| > {CHECK_FACE_VERTICES}")
        return
    delta = delta_complex(n, P)
    facets = set(delta.facets())
    dual = set(facets_from_duality(n, P))
    mult = multiplicity(n, P)
    if facets == dual and len(facets) == mult:
        report.add("duality facets", PASS, f"{len(facets)} facets = |Hom(P,[n])|", len(facets))
    else:
        report.add("duality facets", FAIL, f"{len(facets)} facets, {len(dual)} dual supports, multiplicity {mult}")

    homology = reduced_homology(delta, FieldSpec(0))
    # L(1,P) is the maximal ideal, so Delta(1,P) is the empty complex
    if n == 1 or is_antichain(P, P.elements):
        ok = len(homology.items()) == 1 and homology.items()[0][1] == 1
        report.add("ball/sphere homology", PASS if ok else FAIL, f"sphere, H~ = {homology}")
    else:
        report.add("ball/sphere homology", PASS if homology.is_zero() else FAIL, f"ball, H~ = {homology}")


def _check_multiplicity(report, n, P):
    try:
        mult = multiplicity(n, P)
    except InvariantError as e:
        report.add("multiplicity bounds", FAIL, str(e))
        return
    lower, upper = multiplicity_bounds(n, P)
    notes = []
    if mult == lower:
        notes.append("lower bound attained")
    if mult == upper:
        notes.append("upper bound attained")
    report.add("multiplicity bounds", PASS, f"{lower} <= {mult} <= {upper} {' '.join(notes)}".strip(), mult)


def _check_characteristics(report, n, P, fields, tables):
    if len(fields) < 2:
        return
    for engine in ('strand', 'oracle'):
        per_field = [tables.get((engine, k)) for k in fields]
        if all(t is not None for t in per_field):
            dependent = any(t != per_field[0] for t in per_field[1:])
            detail = "characteristic-dependence detected" if dependent else "no characteristic dependence observed"
            report.add("characteristic dependence", INFO, f"{detail} ({engine} tables)")
            return
    if n != 2:
        report.add("characteristic dependence", SKIP, "tables beyond guards and probe needs n = 2")
        return
    R = characteristic_probe(P)
    polys = {k: beta_poly(n, P, R, k) for k in fields}
    first = polys[fields[0]]
    dependent = any(poly != first for poly in polys.values())
    values = "; ".join(f"{k}: {poly}" for k, poly in polys.items())
    detail = "characteristic-dependence detected" if dependent else "no characteristic dependence observed"
    report.add("characteristic dependence", INFO, f"{detail} at probe multidegree ({values})")

    if n * len(P) <= config.delta_vertex_limit():
        mismatched = []
        for k, poly in polys.items():
            expected = {R.size - p: value for p, value in poly.items()}
            if beta_R_oracle(n, P, R, k) != expected:
                mismatched.append(str(k))
        status = FAIL if mismatched else PASS
        report.add("probe oracle agreement", status,
                   f"mismatch over {', '.join(mismatched)}" if mismatched else "Betti polynomial matches oracle")


def run_checks(P: Poset, n: int, characteristics=(0,), engines=None, structural=True, workers: int = 1):
    """
    Runs the cross-validation suite on L(n,P).

    Guard violations are reported as skipped checks, never as failures.

    Args:
        P (Poset): The poset
        n (int): Number of slots
        characteristics (iterable of int): Fields to compute over
        engines (list, optional): Engines to compare; oracle, strand and
            (for rooted forests) tree by default
        structural (bool): Run the structural strand classifier
        workers (int): Worker processes for per-multidegree engines

    Returns:
        tuple: (Report, error_message)
    """
    fields = [FieldSpec(p) for p in characteristics]
    if engines is None:
        engines = ['oracle', 'strand'] + (['tree'] if is_rooted_forest(P) else [])
    report = Report()
    tables = {}
    try:
        for k in fields:
            for engine in engines:
                if engine == 'tree' and not is_rooted_forest(P):
                    report.add(f"tree table [{k}]", SKIP, "not a rooted forest")
                    continue
                try:
                    tables[(engine, k)] = _run_engine(engine, n, P, k, workers)
                except SizeGuardError as e:
                    report.add(f"{engine} table [{k}]", SKIP, str(e))
            _check_equivalence(report, tables, k)
            if ('oracle', k) in tables and ('strand', k) in tables:
                _check_multigraded(report, n, P, k)
            if ('oracle', k) in tables:
                _check_zero_shortcut(report, n, P, k)
            if structural:
                table = next((t for (e, kk), t in tables.items() if kk == k), None)
                if table is None or not config.strand_within_limits(n, len(P)):
                    report.add(f"structural [{k}]", SKIP, "no table within the strand guard")
                else:
                    structure = classify_strands(n, P, k, table, beta_polys(n, P, k, workers))
                    for result in structure.results:
                        result.name = f"{result.name} [{k}]"
                    report.extend(structure)
        _check_tables(report, tables, P, n)
        _check_multiplicity(report, n, P)
        _check_duality(report, n, P)
        _check_characteristics(report, n, P, fields, tables)
    except LetterplaceError as e:
        logger.error("BLL: check suite aborted: %s", e)
        return None, str(e)

    logger.info("BLL: %d checks, %d failures", len(report.results), len(report.failures))
    return report, ""
