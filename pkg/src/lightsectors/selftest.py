"""Built-in invariant suite behind the `selftest` CLI verb.

Seeded and deterministic: reruns exercise identical instances.  Covers the
model regressions, transport operator invariants, the block-structure
checks on generated separated configurations, the criterion equivalences
on a small exhaustive pool, and scenario/report round-trip determinism.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .linalg import Matrix, rank, vector
from .pairing import CycleConfiguration, PairingSpace, make_pairing_space, pair, standard_symplectic
from .transport import commutator, commutes_all, interaction_matrix, pl_operator
from .atoms import atom_splitting
from .package import classify, verify_block_structure
from .gluing import ExtensionVerdict
from .report import analysis_document, render_report
from .scenarios import builtin_scenario, parse_scenario, serialize_scenario, to_package
from .modelgen import random_block_scenario

SELFTEST_SEED = 20250808


def _random_skew_space(rng: random.Random, dim: int) -> PairingSpace:
    grid = [[Fraction(rng.randint(-3, 3)) for _ in range(dim)] for _ in range(dim)]
    a = Matrix.from_rows(grid, cols=dim)
    return make_pairing_space(a - a.transpose())


def _check_builtin_regressions() -> str:
    pkg = to_package(builtin_scenario("a1xa1"))
    c = classify(pkg)
    assert pkg.interaction.entries.is_zero()
    assert pkg.realized.is_full
    assert c.extension_side is ExtensionVerdict.SPLIT
    assert c.atom_side.value == "Split" and c.transport_side.value == "Commuting"

    pkg = to_package(builtin_scenario("a2"))
    c = classify(pkg)
    assert pkg.realized.v_geom.dim == 1
    assert c.extension_side is ExtensionVerdict.INTERACTING
    assert c.collapsed_dim == 1
    assert not pkg.atom.is_split and pkg.atom.clusters == ((0, 1),)

    pkg = to_package(builtin_scenario("three_node"))
    assert pkg.realized.v_geom.dim == 2
    assert pkg.atom.clusters == ((0, 1), (2,))
    assert not pkg.separation_holds
    return "a1xa1 / a2 / three_node verdicts"


def _check_transport_invariants(n_cases: int = 200) -> str:
    rng = random.Random(SELFTEST_SEED + 1)
    for _ in range(n_cases):
        dim = rng.randint(1, 8)
        space = _random_skew_space(rng, dim)
        delta = vector([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(dim)])
        cfg = CycleConfiguration(space, (delta,))
        op = pl_operator(cfg, 0)
        n = op.n_matrix
        assert (n @ n).is_zero()
        assert rank(n) <= 1
        assert op.t_matrix @ op.inverse() == Matrix.identity(dim)
        alpha = vector([Fraction(rng.randint(-4, 4)) for _ in range(dim)])
        expected = tuple(pair(space, alpha, delta) * d for d in delta)
        assert n.apply(alpha) == expected
    return f"{n_cases} random transport operators"


def _check_block_structure(n_cases: int = 60) -> str:
    rng = random.Random(SELFTEST_SEED + 2)
    for i in range(n_cases):
        scenario = random_block_scenario(rng, name=f"selftest_{i}")
        pkg = to_package(scenario)
        report = verify_block_structure(pkg)
        assert report.overall, [f.name for f in report.failures]
    return f"{n_cases} generated block-separated configurations"


def _check_criterion_equivalences() -> str:
    space = standard_symplectic(1)
    pool = [
        vector(v) for v in [(0, 0), (1, 0), (0, 1), (1, 1), (2, -1)]
    ]
    count = 0
    for r in range(5):
        for combo in itertools.product(pool, repeat=r):
            cfg = CycleConfiguration(space, combo)
            lam = interaction_matrix(cfg)
            ops = [pl_operator(cfg, i) for i in range(r)]
            brute = all(
                commutator(ops[i], ops[j]).is_zero()
                for i in range(r)
                for j in range(i + 1, r)
            )
            report = atom_splitting(lam)
            singles = all(len(c) == 1 for c in report.clusters)
            assert commutes_all(lam) == brute == report.is_split == singles
            count += 1
    return f"{count} pool configurations, all criteria equivalent"


def _check_determinism() -> str:
    for name in ("a1xa1", "a2", "three_node"):
        scenario = builtin_scenario(name)
        assert parse_scenario(serialize_scenario(scenario)) == scenario
        pkg = to_package(scenario)
        doc = analysis_document(pkg, scenario.name)
        again = analysis_document(to_package(scenario), scenario.name)
        assert render_report(doc, "machine") == render_report(again, "machine")
        assert render_report(doc, "text") == render_report(again, "text")
    return "round trips and byte-identical reports"


GROUPS = (
    ("model regressions", _check_builtin_regressions),
    ("transport invariants", _check_transport_invariants),
    ("block structure", _check_block_structure),
    ("criterion equivalences", _check_criterion_equivalences),
    ("determinism", _check_determinism),
)


def run_selftest(quiet: bool = False) -> bool:
    ok = True
    for label, fn in GROUPS:
        try:
            detail = fn()
        except AssertionError as exc:
            ok = False
            if not quiet:
                print(f"selftest {label}: FAILED {exc}")
        else:
            if not quiet:
                print(f"selftest {label}: ok ({detail})")
    return ok
