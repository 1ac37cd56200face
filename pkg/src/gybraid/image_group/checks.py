"""Matrix-level verification of the structure of the image of rho_R."""
from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass, field

import numpy as np

from ..braidrep import RepContext, operator_order, rho_sigma
from ..gates import GateParams, ParameterError, not_i, pauli_x, pauli_z, s_kl
from ..qlinalg import basis_state, canonical_key, identity, max_entry_distance, matpow
from ..reports import CheckReport, stopwatch
from .matrices import (gamma_not_generator_matrix, gamma_skl_generator_matrix,
                       pair_generator_matrix, pair_generator_power,
                       symbolic_to_matrix)
from .permutation import Permutation
from .symbolic import (ExponentVector, all_elements, interval_to_pair, pair_action, pairs,
                       theoretical_order)

_FAIL = math.inf


def conjugation_case(j: int, k: int, l: int) -> tuple[int, int, int]:
    """Where conjugation by the j-th symmetric generator sends ``S_{k,l}``.

    Returns ``(sign, k', l')`` with ``t_j S_{k,l} t_j = sign * S_{k',l'}``.
    """
    if j == k - 1:
        return -1, k - 1, l
    if j == k and k < l:
        return -1, k + 1, l
    if j == l and k < l:
        return -1, k, l - 1
    if j == l + 1:
        return -1, k, l + 1
    return 1, k, l


def conjugation_table_check(ctx: RepContext, tol: float = 1e-12) -> CheckReport:
    """Check the conjugation table for every generator pair ``(t_j, S_{k,l})``.

    For each case three things are checked: the Pauli-word identity, the
    same identity for the exponentiated abelian generators, and agreement
    of the table with the endpoint action on strand pairs.
    """
    clock = stopwatch()
    params = GateParams(ctx.n, ctx.m)
    n = ctx.n
    out = []
    for j in range(2, n + 1):
        t = gamma_not_generator_matrix(j, ctx)
        swap = Permutation.transposition(j - 1, j, n)
        for k in range(2, n + 1):
            for l in range(k, n + 1):
                sign, k2, l2 = conjugation_case(j, k, l)
                s = s_kl(k, l, params).matrix()
                s2 = s_kl(k2, l2, params).matrix()
                out.append((f"S j={j} [{k},{l}]", max_entry_distance(t @ s @ t, sign * s2)))
                g = gamma_skl_generator_matrix(k, l, ctx)
                g2 = gamma_skl_generator_matrix(k2, l2, ctx)
                out.append((f"exp j={j} [{k},{l}]", max_entry_distance(t @ g @ t, g2)))
                moved = pair_action(swap, ExponentVector.unit(interval_to_pair(k, l), n, ctx.m))
                expected = ExponentVector.unit(interval_to_pair(k2, l2), n, ctx.m)
                out.append((f"pair j={j} [{k},{l}]", 0.0 if moved == expected else _FAIL))
    report = CheckReport.from_residuals("conjugation_table", n, ctx.m, out, tol)
    report.elapsed_ms = clock()
    return report


def factorization_check(ctx: RepContext, tol: float = 1e-9) -> CheckReport:
    """Powers of ``rho(sigma_{k-1})`` recover both kinds of generator.

    With ``rho(sigma_{k-1}) = g_k t_k``: the m-th power is ``t_k`` and the
    (m+1)-th power is ``g_k``.
    """
    clock = stopwatch()
    out = []
    for k in range(2, ctx.n + 1):
        rho = rho_sigma(k - 1, ctx)
        g = gamma_skl_generator_matrix(k, k, ctx)
        t = gamma_not_generator_matrix(k, ctx)
        out.append((f"rho{k-1}=g t", max_entry_distance(rho, g @ t)))
        out.append((f"rho{k-1}^m=t", max_entry_distance(matpow(rho, ctx.m), t)))
        out.append((f"rho{k-1}^(m+1)=g", max_entry_distance(matpow(rho, ctx.m + 1), g)))
    report = CheckReport.from_residuals("generator_factorization", ctx.n, ctx.m, out, tol)
    report.elapsed_ms = clock()
    return report


def gamma_skl_independence_check(ctx: RepContext, sample: int = 1000, seed: int = 0,
                                 full_limit: int = 20000, tol: float = 1e-12) -> CheckReport:
    """Abelian generators commute, have order exactly m, and are independent.

    Independence is checked by mapping exponent vectors to matrices and
    comparing canonical keys: every vector when there are at most
    ``full_limit`` of them, otherwise ``sample`` random vectors.
    """
    clock = stopwatch()
    n, m = ctx.n, ctx.m
    prs = pairs(n)
    gens = {p: pair_generator_matrix(p, ctx) for p in prs}
    out = []
    for p, q in itertools.combinations(prs, 2):
        a, b = gens[p], gens[q]
        out.append((f"[{p},{q}]", max_entry_distance(a @ b, b @ a)))
    for p in prs:
        order = operator_order(gens[p], max_k=m, tol=ctx.tol_eq)
        out.append((f"order{p}={order}", 0.0 if order == m else _FAIL))

    total = m ** len(prs)
    if total <= full_limit:
        vectors = itertools.product(range(m), repeat=len(prs))
        exhaustive = True
    else:
        rng = random.Random(seed)
        seen = set()
        while len(seen) < sample:
            seen.add(tuple(rng.randrange(m) for _ in prs))
        vectors = sorted(seen)
        exhaustive = False
    keys = set()
    count = 0
    for vec in vectors:
        mat = identity(ctx.qubits)
        for p, e in zip(prs, vec):
            if e:
                mat = mat @ pair_generator_power(p, e, ctx)
        if not any(vec):
            out.append(("zero->I", max_entry_distance(mat, identity(ctx.qubits))))
        keys.add(canonical_key(mat, ctx.grid))
        count += 1
    out.append((f"injective {len(keys)}/{count}", 0.0 if len(keys) == count else _FAIL))
    report = CheckReport.from_residuals("gamma_skl_independence", n, m, out, tol)
    report.notes = {"vectors": count, "distinct": len(keys), "exhaustive": exhaustive}
    report.elapsed_ms = clock()
    return report


def faithfulness_check(ctx: RepContext, limit: int = 20000) -> CheckReport:
    """Distinct normal forms evaluate to distinct matrices (full enumeration)."""
    clock = stopwatch()
    total = theoretical_order(ctx.n, ctx.m)
    if total > limit:
        raise ParameterError(f"{total} elements exceed the enumeration limit {limit}")
    keys = {canonical_key(symbolic_to_matrix(g, ctx), ctx.grid)
            for g in all_elements(ctx.n, ctx.m)}
    out = [(f"distinct {len(keys)}/{total}", 0.0 if len(keys) == total else _FAIL)]
    report = CheckReport.from_residuals("faithfulness", ctx.n, ctx.m, out, 1.0)
    report.notes = {"elements": total, "distinct": len(keys)}
    report.elapsed_ms = clock()
    return report


# --------------------------------------------------------------------------
# witnesses for the symmetric part

_TOKEN = re.compile(r"^(-?)(NOT|X|Z|I)(\d*)$")


def parse_gate_word(text: str, n: int) -> np.ndarray:
    """Operator for a product like ``"Z1 Z3 NOT2"`` or ``"-NOT2 -NOT3"``.

    Factors multiply in the written order (leftmost is the leftmost matrix).
    """
    q = n + 1
    out = identity(q)
    for tok in text.split():
        hit = _TOKEN.match(tok)
        if not hit:
            raise ParameterError(f"bad gate token {tok!r}")
        sign, name, idx = hit.groups()
        if name == "I":
            op = identity(q)
        elif not idx:
            raise ParameterError(f"gate {tok!r} needs an index")
        elif name == "NOT":
            op = not_i(int(idx), n)
        elif name == "X":
            op = pauli_x(int(idx), q)
        else:
            op = pauli_z(int(idx), q)
        out = out @ (-op if sign else op)
    return out


@dataclass
class WitnessReport:
    state: str
    labels: list[str]
    distinct: bool
    collisions: list[tuple[str, str]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def to_record(self) -> dict:
        return {
            "check_name": "witness_distinctness",
            "pass": self.distinct,
            "state": self.state,
            "words": self.labels,
            "collisions": [list(c) for c in self.collisions],
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def summary(self) -> str:
        status = "DISTINCT" if self.distinct else "NOT DISTINCT"
        lines = [f"{status}  {len(self.labels)} words on |{self.state}>"]
        lines += [f"  collision: {a}  ==  {b}" for a, b in self.collisions]
        return "\n".join(lines)


def witness_distinctness(words, state: str, n: int | None = None,
                         tol: float = 1e-9) -> WitnessReport:
    """Apply each word to the basis state ``|state>`` and compare the results.

    ``words`` holds gate-word strings (parsed with ``n`` strands, default
    ``len(state) - 1``) or ready-made operators.  Phases count: ``v`` and
    ``-v`` are different.
    """
    clock = stopwatch()
    if n is None:
        n = len(state) - 1
    vec = basis_state(state)
    labels, images = [], []
    for idx, w in enumerate(words):
        if isinstance(w, str):
            op, label = parse_gate_word(w, n), w
        else:
            op, label = np.asarray(w), f"word{idx}"
        if op.shape[1] != vec.shape[0]:
            raise ParameterError(f"word {label!r} acts on {op.shape[1]} states, "
                                 f"|{state}> has {vec.shape[0]}")
        labels.append(label)
        images.append(op @ vec)
    collisions = [(labels[a], labels[b])
                  for a, b in itertools.combinations(range(len(images)), 2)
                  if max_entry_distance(images[a], images[b]) < tol]
    return WitnessReport(state, labels, not collisions, collisions, clock())


def _symmetric_token(k: int, variant: str) -> str:
    if variant == "plain":
        return f"NOT{k}"
    if variant == "dressed":
        return f"Z{k-1} Z{k+1} NOT{k}"
    return f"-NOT{k}"


def witness_variant(m: int | None) -> str:
    """``plain`` for the bare NOT group, else the generators used for odd ``m``."""
    if m is None:
        return "plain"
    return "dressed" if m == 3 else "negated"


def witness_words(n: int, variant: str = "plain") -> list[str]:
    """The distinguishing word lists for ``n`` = 3 and 4.

    ``variant`` is ``plain`` (NOT_k), ``dressed`` (Z_{k-1} Z_{k+1} NOT_k, m = 3)
    or ``negated`` (-NOT_k, m >= 5).
    """
    if variant not in ("plain", "dressed", "negated"):
        raise ParameterError(f"unknown witness variant {variant!r}")
    t = {k: _symmetric_token(k, variant) for k in range(2, 5)}
    if n == 3:
        return [t[2], t[3], f"{t[2]} {t[3]}"]
    if n == 4:
        return [t[2], t[3], t[4], f"{t[2]} {t[3]}", f"{t[3]} {t[4]}",
                f"{t[3]} {t[2]}", f"{t[4]} {t[3]}"]
    raise ParameterError(f"witness sets exist for n = 3 and 4, not {n}")


def witness_state(n: int) -> str:
    """``|0100>`` for n = 3; for n = 4, ``|0110>`` with a trailing 0 to fill 5 qubits."""
    if n == 3:
        return "0100"
    if n == 4:
        return "01100"
    raise ParameterError(f"witness states exist for n = 3 and 4, not {n}")
