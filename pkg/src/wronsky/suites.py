"""Seeded property suites behind ``wronsky verify``.

Every trial draws from its own ``random.Random`` (Mersenne Twister) seeded
with the first 8 bytes of ``sha256(f"{seed}:{suite}:{trial}")``, so any
single trial can be replayed without running the ones before it.  Reports
hold no timings, which keeps them byte-identical across runs.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Any, Callable

from .cells import (
    all_cells,
    complement,
    hook_lemma_check,
    length,
    level_sets,
    partition_of,
    partitions_in_box,
    path_count,
    semi_infinite,
    transpose,
)
from .exact import Matrix, MultiPoly, Permutation, UniPoly, column_reversal, det
from .identities import (
    desnanot_jacobi_check,
    elementary,
    mutation_check,
    mutation_solve,
    pluecker_relation_check,
    w5_check,
)
from .maps import (
    bruhat_cell,
    contraction,
    degree_vector,
    permutation_degrees,
    pluecker,
    unit_wronskian_minor,
    wronskian,
    wronskian_component,
    wronsky_map,
)
from .reconstruct import (
    coordinate_order,
    coordinate_value,
    lex_coordinates,
    reconstruct_unitriangular,
    unknown_order,
)
from .tau import (
    kdv_residual,
    reversal_sign,
    schur_initial,
    schur_t,
    tau,
    tau_initial,
    toeplitz_schur_check,
)

DEFAULT_SEED = 1


def trial_rng(seed: int, suite: str, trial: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}:{suite}:{trial}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


@dataclass
class Property:
    name: str
    checked: int = 0
    failures: int = 0
    counterexample: Any = None

    def record(self, ok: bool, witness: Callable[[], Any] | Any = None) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None:
                self.counterexample = witness() if callable(witness) else witness

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "checked": self.checked, "failures": self.failures}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class SuiteResult:
    suite: str
    trials: int
    nmax: int
    properties: list[Property] = field(default_factory=list)

    def prop(self, name: str) -> Property:
        for p in self.properties:
            if p.name == name:
                return p
        p = Property(name)
        self.properties.append(p)
        return p

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "trials": self.trials,
            "nmax": self.nmax,
            "properties": [p.to_json() for p in self.properties],
        }


# ---------------------------------------------------------------------------
# random inputs


def random_matrix(rng: random.Random, n: int, m: int, lo: int = -9, hi: int = 9) -> Matrix:
    return Matrix.from_rows([[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)])


def random_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        M = random_matrix(rng, n, n)
        if det(M) != 0:
            return M


def random_lower(rng: random.Random, n: int) -> Matrix:
    """Invertible lower triangular matrix with small nonzero diagonal."""
    return Matrix(n, n, [
        rng.choice([-3, -2, -1, 1, 2, 3]) if r == c else (rng.randint(-9, 9) if c < r else 0)
        for r in range(n) for c in range(n)
    ])


def random_unitriangular(rng: random.Random, n: int) -> Matrix:
    return Matrix(n, n, [1 if r == c else (rng.randint(-9, 9) if c > r else 0)
                         for r in range(n) for c in range(n)])


def random_rational(rng: random.Random, num: int = 9, den: int = 6) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_poly(rng: random.Random, degree: int) -> UniPoly:
    return UniPoly(random_rational(rng) for _ in range(degree + 1))


def _rows(M: Matrix) -> list[list[str]]:
    return [[str(e) for e in r] for r in M.to_rows()]


# ---------------------------------------------------------------------------
# suites


def suite_theorem33(res: SuiteResult, seed: int) -> None:
    fact = res.prop("wronskian = contraction o pluecker")
    rel = res.prop("pluecker relation on 2x4 blocks")
    for t in range(res.trials):
        rng = trial_rng(seed, res.suite, t)
        n = rng.randint(2, max(2, res.nmax))
        m = rng.randint(n, max(n, res.nmax))
        M = random_matrix(rng, n, m)
        for i in range(1, n + 1):
            ok = wronskian_component(M, i) == contraction(i, m, pluecker(M, i))
            fact.record(ok, lambda: {"trial": t, "i": i, "matrix": _rows(M)})
        B = random_matrix(rng, 2, 4)
        rel.record(pluecker_relation_check(B).holds, lambda: {"trial": t, "matrix": _rows(B)})


def suite_tau_initial(res: SuiteResult, seed: int) -> None:
    ident = res.prop("tau_initial = sign * y_i(M J)")
    at_x = res.prop("tau at (x,0,..) = tau_initial")
    for t in range(res.trials):
        rng = trial_rng(seed, res.suite, t)
        n = rng.randint(1, max(1, res.nmax))
        m = rng.randint(n, max(n, res.nmax))
        M = random_matrix(rng, n, m)
        MJ = M @ column_reversal(m)
        for i in range(1, n + 1):
            ok = tau_initial(M, i) == wronskian_component(MJ, i) * reversal_sign(i)
            ident.record(ok, lambda: {"trial": t, "i": i, "matrix": _rows(M)})
        if m <= 4:
            i = rng.randint(1, n)
            at_x.record(tau(M, i).initial_value() == tau_initial(M, i),
                        lambda: {"trial": t, "i": i, "matrix": _rows(M)})


def suite_hook_lemma(res: SuiteResult, seed: int) -> None:
    lemma = res.prop("hook(nu(I)) = m(I^t) / l(I^t)!")
    size = res.prop("|nu(I)| = l(I^t)")
    box = res.prop("nu(I^t) = complement of nu(I) in the i x (n-i) box")
    conj = res.prop("nu(reversed complement of I) = conjugate of nu(I)")
    semi = res.prop("semi-infinite embedding keeps nu(I)")
    for n in range(1, res.nmax + 1):
        for i in range(0, n + 1):
            for I in all_cells(n, i):
                nu = partition_of(I)
                lemma.record(hook_lemma_check(I), str(I))
                size.record(nu.size == length(transpose(I)), str(I))
                box.record(partition_of(transpose(I)) == nu.complement_in(i, n - i), str(I))
                conj.record(partition_of(transpose(complement(I))) == nu.conjugate(), str(I))
                semi.record(all(semi_infinite(I, d).partition() == nu for d in (-1, 0, 2)), str(I))


def suite_w5(res: SuiteResult, seed: int) -> None:
    w5 = res.prop("W(W(f_A), W(f_B)) = W(f_{A&B}) W(f_{A|B})")
    for t in range(res.trials):
        rng = trial_rng(seed, res.suite, t)
        a = 1 + t % 3
        fs = [random_poly(rng, rng.randint(0, 6)) for _ in range(a + 2)]
        w5.record(w5_check(fs, a).holds,
                  lambda: {"trial": t, "a": a, "fs": [f.to_str() for f in fs]})


def suite_desnanot(res: SuiteResult, seed: int) -> None:
    dj = res.prop("desnanot-jacobi")
    top = max(3, min(res.nmax, 7))
    for t in range(res.trials):
        rng = trial_rng(seed, res.suite, t)
        n = 3 + t % (top - 2)
        A = Matrix.from_rows([[random_rational(rng) for _ in range(n)] for _ in range(n)])
        dj.record(desnanot_jacobi_check(A).holds, lambda: {"trial": t, "matrix": _rows(A)})


def suite_mutation(res: SuiteResult, seed: int) -> None:
    mut = res.prop("W(y2, y2(e23(c) M)) = c y1 y3")
    fix = res.prop("y1(e23(c) M) = y1(M)")
    sol = res.prop("mutation_solve matches the matrix side modulo y2")
    for t in range(res.trials):
        rng = trial_rng(seed, res.suite, t)
        n = 4 + t % 2
        M = random_invertible(rng, n)
        c = random_rational(rng)
        report = mutation_check(M, c)
        witness = lambda: {"trial": t, "c": str(c), "matrix": _rows(M)}  # noqa: E731
        mut.record(report.holds, witness)
        fix.record(report.context["y1_unchanged"], witness)
        y1, y2, y3 = (wronskian_component(M, i) for i in (1, 2, 3))
        if y2.is_zero():
            continue
        solved = mutation_solve(y1, y2, y3, c)
        _, rem = divmod(solved - wronskian_component(elementary(n, 2, 3, c) @ M, 2), y2)
        sol.record(rem.is_zero() and wronskian([y2, solved]) == y1 * y3 * c, witness)


def suite_degrees(res: SuiteResult, seed: int) -> None:
    cls = res.prop("bruhat_cell(b w b') = w")
    deg = res.prop("degree_vector = permutation_degrees")
    hexagon = res.prop("all n! degree vectors realized")
    trial = 0
    for n in range(2, max(2, min(res.nmax, 5)) + 1):
        per_w = 20 if n <= 3 else 3
        seen = set()
        for images in permutations(range(1, n + 1)):
            w = Permutation(images)
            for _ in range(per_w):
                rng = trial_rng(seed, res.suite, trial)
                trial += 1
                g = random_lower(rng, n) @ w.matrix() @ random_lower(rng, n)
                d = degree_vector(g)
                seen.add(d)
                deg.record(d == permutation_degrees(w), lambda: {"w": list(images), "matrix": _rows(g)})
                cls.record(bruhat_cell(g) == w, lambda: {"w": list(images), "matrix": _rows(g)})
        hexagon.record(len(seen) == factorial(n), {"n": n, "realized": len(seen)})


def _symbolic_unitriangular(n: int) -> Matrix:
    unknowns = unknown_order(n)
    V = MultiPoly.variables(len(unknowns))
    entries: list[Any] = [1 if r == c else 0 for r in range(n) for c in range(n)]
    for k, (r, c) in enumerate(unknowns):
        entries[(r - 1) * n + c - 1] = V[k]
    return Matrix(n, n, entries)


def suite_reconstruct(res: SuiteResult, seed: int) -> None:
    trip = res.prop("reconstruct(lex(W(g))) = g")
    slope = res.prop("coordinate k moves one-for-one with unknown k")
    symb = res.prop("symbolic n=5 sweep")
    for t in range(res.trials):
        rng = trial_rng(seed, res.suite, t)
        n = rng.randint(2, max(2, res.nmax))
        g = random_unitriangular(rng, n)
        trip.record(reconstruct_unitriangular(lex_coordinates(wronsky_map(g), n)) == g,
                    lambda: {"trial": t, "matrix": _rows(g)})
        # bump unknown k after zeroing later ones; coordinate k changes by the bump
        order = unknown_order(n)
        k = rng.randrange(len(order))
        entries = list(g.entries)
        for r, c in order[k + 1:]:
            entries[(r - 1) * n + c - 1] = 0
        r, c = order[k]
        i, q = coordinate_order(n)[k]
        before = coordinate_value(Matrix(n, n, entries), i, q)
        entries[(r - 1) * n + c - 1] += 5
        after = coordinate_value(Matrix(n, n, entries), i, q)
        slope.record(after - before == 5, lambda: {"trial": t, "k": k, "matrix": _rows(g)})
    g = _symbolic_unitriangular(5)
    coords = lex_coordinates(wronsky_map(g), 5)
    a1, a2, b2, b3 = (g[0, 1], g[0, 2], g[1, 2], g[1, 3])
    symb.record(coords.values[5] == b3 + a1 * b2 - a2 and reconstruct_unitriangular(coords) == g,
                "coefficient of x^2/2 in y_2")


def suite_unit_wronskian(res: SuiteResult, seed: int) -> None:
    minors = res.prop("Delta_I(W_n) = m(I) x^l / l!")
    hooks = res.prop("Delta_{I^t}(W_n) = hook(nu(I)) x^|nu(I)|")
    for n in range(1, res.nmax + 1):
        for i in range(1, n + 1):
            for I in all_cells(n, i):
                q = length(I)
                want = UniPoly.monomial(q, Fraction(path_count(I), factorial(q)))
                minors.record(unit_wronskian_minor(n, i, I) == want, str(I))
                hooks.record(unit_wronskian_minor(n, i, transpose(I)) == schur_initial(partition_of(I)), str(I))


def suite_toeplitz_schur(res: SuiteResult, seed: int) -> None:
    toe = res.prop("s_nu(I)(h) = Delta_{I^t}(T)")
    init = res.prop("s_nu(x,0,..) = hook(nu) x^|nu|")
    for n in range(1, res.nmax + 1):
        for i in range(0, n + 1):
            for I in all_cells(n, i):
                toe.record(toeplitz_schur_check(I), str(I))
    side = max(1, min(res.nmax - 3, 4))
    for nu in partitions_in_box(side, side):
        K = nu.parts[0] + len(nu) - 1 if nu.parts else 0
        init.record(schur_t(nu, K).initial_value() == schur_initial(nu), str(nu))


def suite_kdv(res: SuiteResult, seed: int) -> None:
    kdv = res.prop("6 u u_x + u_xxx = 0 for tau = b + a x")
    for t in range(res.trials):
        rng = trial_rng(seed, res.suite, t)
        a = random_rational(rng)
        b = 1 if t % 2 == 0 else random_rational(rng) or 1
        kdv.record(kdv_residual(UniPoly([b, a])).is_zero(), {"trial": t, "a": str(a), "b": str(b)})


def suite_level_sets(res: SuiteResult, seed: int) -> None:
    pal = res.prop("level counts palindromic")
    gap = res.prop("level counts gap-free")
    for n in range(1, res.nmax + 1):
        for i in range(1, n + 1):
            counts = level_sets(n, i)
            pal.record(counts == counts[::-1], {"n": n, "i": i})
            gap.record(all(counts), {"n": n, "i": i})


# name -> (runner, default trials, default nmax)
SUITES: dict[str, tuple[Callable[[SuiteResult, int], None], int, int]] = {
    "theorem33": (suite_theorem33, 500, 6),
    "tau-initial": (suite_tau_initial, 300, 6),
    "hook-lemma": (suite_hook_lemma, 0, 9),
    "w5": (suite_w5, 100, 0),
    "desnanot": (suite_desnanot, 100, 7),
    "mutation": (suite_mutation, 100, 5),
    "degrees": (suite_degrees, 0, 5),
    "reconstruct": (suite_reconstruct, 200, 8),
    "unit-wronskian": (suite_unit_wronskian, 0, 8),
    "toeplitz-schur": (suite_toeplitz_schur, 0, 7),
    "kdv": (suite_kdv, 50, 0),
    "level-sets": (suite_level_sets, 0, 10),
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, seed: int = DEFAULT_SEED, trials: int | None = None,
              nmax: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    runner, default_trials, default_nmax = SUITES[name]
    res = SuiteResult(name, default_trials if trials is None else trials,
                      default_nmax if nmax is None else nmax)
    runner(res, seed)
    return res


def verify(suite: str, seed: int = DEFAULT_SEED, trials: int | None = None,
           nmax: int | None = None) -> dict:
    """Run one suite (or ``all``) and return the JSON-ready report."""
    names = list(SUITES) if suite == "all" else [suite]
    results = [run_suite(name, seed, trials, nmax) for name in names]
    return {
        "seed": seed,
        "suite": suite,
        "passed": all(r.passed for r in results),
        "suites": [r.to_json() for r in results],
    }
