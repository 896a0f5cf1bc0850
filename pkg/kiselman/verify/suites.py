import logging
import random
from itertools import permutations, product
import numpy as np
from tqdm import tqdm
from .report import VerificationReport, first_failure
from ..count import CLOSED_FORMULAS, brute_count, closed_value, compare_counts
from ..element import content
from ..endomorphism import identity_endomorphism
from ..matrix import (
    avoids_pattern, avoids_pattern_batch, bool_mul, enumerate_dn, find_units, find_units_exhaustive, from_flat,
    identity_matrix, in_dn, is_permutation_matrix, permutation_matrix
)
from ..morphism import (
    apply, brute_force_enumerate_end, compose, compose_by_substitution, monotone_enumerate_end, phi, psi, psi_inv
)
from ..rewrite import critical_pairs, relations_hold
from ..semigroup import get_semigroup, idempotent_word
from ..sequence import enumerate_mn, is_monotone, star, unit_sequence
from ..subset import full_subset

SUITES = ("core", "monotone", "boolmat", "morphisms", "units", "counting")

MAX_EXHAUSTIVE_N = 3
MAX_PERMUTATION_N = 6
MAX_TRANSPOSE_BITS = 16
MAX_SCALAR_BITS = 10

logger = logging.getLogger(__name__)


def _pairs(items, n, opt, rng):
    """ All pairs when n is small enough, otherwise opt.samples random pairs

    """
    if n <= MAX_EXHAUSTIVE_N:
        return product(items, repeat=2), "exhaustive, %d pairs" % (len(items) ** 2)
    return [(rng.choice(items), rng.choice(items)) for _ in range(opt.samples)], "sampled, %d pairs" % (opt.samples)


def _triples(items, exhaustive, opt, rng):
    if exhaustive:
        return product(items, repeat=3), "exhaustive, %d triples" % (len(items) ** 3)
    return [tuple(rng.choice(items) for _ in range(3)) for _ in range(opt.samples)], "sampled, %d triples" % (opt.samples)


def _words_up_to(n, length):
    for k in range(length + 1):
        for word in product(range(1, n + 1), repeat=k):
            yield word


def verify_core(opt):
    """ Rewriting, content, idempotents and the idempotent product conditions in K_n

    """
    n = opt.n
    report = VerificationReport("core")
    rng = random.Random(opt.seed)
    sg = get_semigroup(n, opt.max_rules)
    scope = "n=%d" % (n)

    report.record("core.completion_confluent", "%s, %d rules" % (scope, len(sg.rs)), (critical_pairs(sg.rs) or [None])[0])
    report.record("core.relations_hold", scope, None if relations_hold(sg.rs) else "defining relations")

    length = n + 2
    report.record(
        "core.content_well_defined", "%s, all words of length <= %d" % (scope, length),
        first_failure(_words_up_to(n, length), lambda w: content(w) == sg.reduce(w).content)
    )

    elements = sg.enumerate_elements(opt.max_elements)
    pairs, pair_scope = _pairs(elements, n, opt, rng)
    report.record(
        "core.content_epimorphism", "%s, %s" % (scope, pair_scope),
        first_failure(pairs, lambda ab: sg.multiply(*ab).content == ab[0].content | ab[1].content)
    )
    report.record("core.content_onto", scope, None if sg.content_is_onto(opt.max_elements) else "missing content")

    idempotents = [x for x in elements if sg.is_idempotent(x)]
    report.record(
        "core.idempotent_census", "%s, %d elements" % (scope, len(elements)),
        None if len(idempotents) == 1 << n else {"found": len(idempotents), "expected": 1 << n}
    )
    report.record(
        "core.idempotents_are_e_X", scope,
        first_failure(idempotents, lambda x: x.nf == idempotent_word(x.content))
    )
    e_forms = [sg.idempotent(bits) for bits in range(full_subset(n) + 1)]
    report.record(
        "core.e_X_distinct_idempotents", scope,
        None if len(set(e_forms)) == len(e_forms) and all(sg.is_idempotent(e) for e in e_forms) else e_forms
    )

    subset_pairs = list(product(range(full_subset(n) + 1), repeat=2))
    report.record(
        "core.tfae", "%s, exhaustive, %d pairs" % (scope, len(subset_pairs)),
        first_failure(subset_pairs, lambda xy: len(set(sg.tfae_check(*xy))) == 1)
    )
    report.record(
        "core.braid_lemma", "%s, exhaustive, %d pairs" % (scope, len(subset_pairs)),
        first_failure(subset_pairs, lambda xy: len(set(sg.braid_check(*xy))) == 1)
    )

    triples, triple_scope = _triples(elements, n <= MAX_EXHAUSTIVE_N, opt, rng)
    report.record(
        "core.associativity", "%s, %s" % (scope, triple_scope),
        first_failure(
            triples,
            lambda t: sg.multiply(sg.multiply(t[0], t[1]), t[2]) == sg.multiply(t[0], sg.multiply(t[1], t[2]))
        )
    )
    report.record(
        "core.unit", "%s, exhaustive" % (scope),
        first_failure(elements, lambda x: sg.multiply(sg.unit, x) == x == sg.multiply(x, sg.unit))
    )
    logger.info("core suite for K_%d: %s" % (n, "pass" if report.passed else "FAIL"))
    return report.finish()


def verify_monotone(opt):
    """ Monoid laws and closure of (M_n, *), and |M_n| = |D_n|

    """
    n = opt.n
    report = VerificationReport("monotone")
    rng = random.Random(opt.seed)
    scope = "n=%d" % (n)
    members = enumerate_mn(n, max_n=opt.max_n)
    unit = unit_sequence(n)

    report.record(
        "monotone.unit", "%s, exhaustive" % (scope),
        first_failure(members, lambda s: star(s, unit) == s == star(unit, s))
    )
    pairs, pair_scope = _pairs(members, n, opt, rng)
    report.record(
        "monotone.closure", "%s, %s" % (scope, pair_scope),
        first_failure(pairs, lambda st: is_monotone(star(*st)))
    )
    triples, triple_scope = _triples(members, n <= 2, opt, rng)
    report.record(
        "monotone.associativity", "%s, %s" % (scope, triple_scope),
        first_failure(triples, lambda t: star(star(t[0], t[1]), t[2]) == star(t[0], star(t[1], t[2])))
    )
    dn_size = len(enumerate_dn(n))
    report.record(
        "monotone.cardinality_matches_dn", scope,
        None if len(members) == dn_size else {"M_n": len(members), "D_n": dn_size}
    )
    return report.finish()


def _transposed_flat(flat, m, n):
    transposed = np.zeros_like(flat)
    for x in range(m):
        for i in range(n):
            bit = (flat >> np.uint64(x * n + i)) & np.uint64(1)
            transposed |= bit << np.uint64(i * m + x)
    return transposed


def verify_boolmat(opt):
    """ Closure, unit and associativity of (D_n, .), the pattern checks and permutation matrices

    """
    n = opt.n
    report = VerificationReport("boolmat")
    rng = random.Random(opt.seed)
    scope = "n=%d" % (n)
    members = enumerate_dn(n)
    identity = identity_matrix(n)

    report.record(
        "boolmat.unit", "%s, exhaustive" % (scope),
        first_failure(members, lambda a: bool_mul(identity, a) == a == bool_mul(a, identity))
    )
    pairs, pair_scope = _pairs(members, n, opt, rng)
    report.record(
        "boolmat.closure", "%s, %s" % (scope, pair_scope),
        first_failure(pairs, lambda ab: in_dn(bool_mul(*ab)))
    )
    triples, triple_scope = _triples(members, False, opt, rng)
    report.record(
        "boolmat.associativity", "%s, %s" % (scope, triple_scope),
        first_failure(triples, lambda t: bool_mul(bool_mul(t[0], t[1]), t[2]) == bool_mul(t[0], bool_mul(t[1], t[2])))
    )
    brute = brute_count(n, n, guard_bits=max(opt.guard_bits, n * n)).value
    report.record(
        "boolmat.enumeration_matches_count", scope,
        None if len(members) == brute else {"enumerated": len(members), "brute_force": brute}
    )

    shapes = [(a, b) for a in range(1, MAX_TRANSPOSE_BITS + 1) for b in range(1, MAX_TRANSPOSE_BITS // a + 1)]
    witness = None
    for a, b in shapes:
        flat = np.arange(1 << (a * b), dtype=np.uint64)
        mismatch = avoids_pattern_batch(flat, a, b) != avoids_pattern_batch(_transposed_flat(flat, a, b), b, a)
        if mismatch.any():
            witness = from_flat(int(flat[np.argmax(mismatch)]), a, b)
            break
    report.record("boolmat.transpose_symmetry", "all shapes with m*n <= %d" % (MAX_TRANSPOSE_BITS), witness)

    witness = None
    for a, b in [(a, b) for a, b in shapes if a * b <= MAX_SCALAR_BITS]:
        flat = np.arange(1 << (a * b), dtype=np.uint64)
        batch = avoids_pattern_batch(flat, a, b)
        witness = first_failure(range(1 << (a * b)), lambda v: avoids_pattern(from_flat(v, a, b)) == bool(batch[v]))
        if witness is not None:
            witness = from_flat(witness, a, b)
            break
    report.record("boolmat.batch_matches_scalar", "all shapes with m*n <= %d" % (MAX_SCALAR_BITS), witness)

    witness = None
    for k in range(1, MAX_PERMUTATION_N + 1):
        for perm in permutations(range(1, k + 1)):
            matrix = permutation_matrix(perm)
            if not is_permutation_matrix(matrix) or (in_dn(matrix) != (matrix == identity_matrix(k))):
                witness = matrix
                break
        if witness is not None:
            break
    report.record("boolmat.only_identity_permutation", "n <= %d, all permutations" % (MAX_PERMUTATION_N), witness)
    return report.finish()


def verify_morphisms(opt):
    """ End(K_n) = M_n = D_n: the census, both homomorphisms, round trips and the composition oracle

    """
    n = opt.n
    report = VerificationReport("morphisms")
    rng = random.Random(opt.seed)
    scope = "n=%d" % (n)
    sg = get_semigroup(n, opt.max_rules)

    brute = brute_force_enumerate_end(
        n, max_n=opt.max_n, n_workers=opt.n_workers, max_rules=opt.max_rules, progress=opt.progress
    )
    endos = monotone_enumerate_end(n, max_n=opt.max_n)
    dn_size = len(enumerate_dn(n))
    report.record(
        "morphisms.census", scope,
        None if len(brute) == len(endos) == dn_size else {"brute_force": len(brute), "M_n": len(endos), "D_n": dn_size}
    )
    report.record(
        "morphisms.bijection", scope,
        None if set(brute) == set(endos) else sorted(set(brute) ^ set(endos))[:1]
    )
    identity = identity_endomorphism(n)
    report.record(
        "morphisms.phi_unit", scope, None if phi(identity) == unit_sequence(n) else phi(identity)
    )

    pairs, pair_scope = _pairs(endos, n, opt, rng)
    pairs = list(pairs)
    report.record(
        "morphisms.phi_homomorphism", "%s, %s" % (scope, pair_scope),
        first_failure(tqdm(pairs, disable=not opt.progress, desc="phi"),
                      lambda gf: phi(compose(*gf)) == star(phi(gf[0]), phi(gf[1])))
    )
    report.record(
        "morphisms.compose_matches_substitution", "%s, %s" % (scope, pair_scope),
        first_failure(tqdm(pairs, disable=not opt.progress, desc="compose"),
                      lambda gf: compose(*gf) == compose_by_substitution(*gf, sg=sg))
    )

    sequences = [phi(f) for f in endos]
    seq_pairs, seq_scope = _pairs(sequences, n, opt, rng)
    report.record(
        "morphisms.psi_homomorphism", "%s, %s" % (scope, seq_scope),
        first_failure(seq_pairs, lambda st: psi(star(*st)) == bool_mul(psi(st[0]), psi(st[1])))
    )
    report.record("morphisms.psi_unit", scope, None if psi(unit_sequence(n)) == identity_matrix(n) else n)
    report.record(
        "morphisms.psi_inv_psi", "%s, exhaustive" % (scope),
        first_failure(sequences, lambda s: psi_inv(psi(s)) == s)
    )
    report.record(
        "morphisms.psi_psi_inv", "%s, exhaustive" % (scope),
        first_failure(enumerate_dn(n), lambda m: psi(psi_inv(m)) == m)
    )

    idempotent_words = [idempotent_word(bits) for bits in range(full_subset(n) + 1)]
    report.record(
        "morphisms.apply_preserves_idempotents", "%s, %d endomorphisms x %d idempotents" % (scope, len(endos), len(idempotent_words)),
        first_failure(
            product(endos, idempotent_words), lambda fw: sg.is_idempotent(apply(fw[0], fw[1], sg=sg))
        )
    )
    words = [w for w in _words_up_to(n, 3)]
    word_pairs = [(rng.choice(words), rng.choice(words)) for _ in range(opt.samples)]
    endo_samples = [rng.choice(endos) for _ in range(opt.samples)]
    report.record(
        "morphisms.apply_is_homomorphism", "%s, sampled, %d cases" % (scope, opt.samples),
        first_failure(
            zip(endo_samples, word_pairs),
            lambda c: apply(c[0], c[1][0] + c[1][1], sg=sg) == sg.multiply(apply(c[0], c[1][0], sg=sg), apply(c[0], c[1][1], sg=sg))
        )
    )
    return report.finish()


def verify_units(opt):
    """ The identity is the only invertible element of D_k for every k <= n

    """
    report = VerificationReport("units")
    for k in range(1, opt.n + 1):
        units = find_units(k)
        report.record("units.only_identity", "n=%d, permutation filter" % (k), None if units == [identity_matrix(k)] else units)
        if k <= 3:
            units = find_units_exhaustive(k)
            report.record("units.only_identity_exhaustive", "n=%d, all pairs" % (k), None if units == [identity_matrix(k)] else units)
    return report.finish()


def verify_counting(opt):
    """ Closed formulas against brute force, transpose symmetry, growth and integrality

    """
    report = VerificationReport("counting")
    max_bits = opt.guard_bits
    shapes = [(m, k) for m in sorted(CLOSED_FORMULAS) for k in range(1, max_bits // m + 1)]
    rows = [
        compare_counts(m, k, guard_bits=max_bits, n_workers=opt.n_workers)
        for m, k in tqdm(shapes, disable=not opt.progress, desc="grid")
    ]
    report.record(
        "counting.closed_matches_brute", "m in 2..5, m*n <= %d, %d shapes" % (max_bits, len(rows)),
        first_failure(rows, lambda row: row["agree"])
    )
    report.record(
        "counting.integrality", "m in 2..5, n <= 30",
        first_failure(
            [(m, k) for m in sorted(CLOSED_FORMULAS) for k in range(1, 31)],
            lambda mk: closed_value(*mk).denominator == 1
        )
    )
    by_shape = {(row["m"], row["n"]): row["brute"] for row in rows}
    report.record(
        "counting.monotone_in_n", "m*n <= %d" % (max_bits),
        first_failure(
            [mk for mk in by_shape if (mk[0], mk[1] + 1) in by_shape],
            lambda mk: by_shape[mk] <= by_shape[(mk[0], mk[1] + 1)] and (mk[0] < 2 or mk[1] < 2 or by_shape[mk] < 1 << (mk[0] * mk[1]))
        )
    )
    transpose_bits = min(max_bits, MAX_TRANSPOSE_BITS)
    report.record(
        "counting.transpose_symmetry", "m*n <= %d" % (transpose_bits),
        first_failure(
            [(m, k) for m in range(1, transpose_bits + 1) for k in range(m + 1, transpose_bits // m + 1)],
            lambda mk: brute_count(*mk, guard_bits=transpose_bits).value == brute_count(mk[1], mk[0], guard_bits=transpose_bits).value
        )
    )
    return report.finish()


SUITE_FUNCTIONS = {
    "core": verify_core,
    "monotone": verify_monotone,
    "boolmat": verify_boolmat,
    "morphisms": verify_morphisms,
    "units": verify_units,
    "counting": verify_counting,
}


def run_suites(opt, suites=None):
    """ Run verification suites

    :param opt: the run configuration
    :type opt: argparse.Namespace
    :param suites: suite names (all when omitted)
    :type suites: List[str]
    :return: one report per suite
    :rtype: List[kiselman.verify.report.VerificationReport]
    """

    reports = []
    for name in suites or SUITES:
        logger.info("Running the %s suite at n=%d." % (name, opt.n))
        reports.append(SUITE_FUNCTIONS[name](opt))
    return reports
