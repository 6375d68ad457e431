"""
Orbit search over monomials acting on the second code of a pair.

For a fixed ``base1`` and a monomial ``m`` the search looks at
``base1 n m(base2)``; its dual type is the type of the span of the two
parity-check matrices, which is what gets recorded.  Monomials act on
``base2`` only: applying one monomial to both codes gives an isomorphic
intersection, so one-sided action already covers every pair.

Exhaustive runs walk the orbit in a fixed order (quaternary part outer,
binary permutation inner, both lexicographic) and keep, for every type,
the first monomial that produced it.  Pruning by the stabiliser of
``base2`` visits only the first element of each left coset, which never
changes those first witnesses.
"""

from __future__ import annotations

import itertools
import math
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .algebra import CodeType
from .batch import apply_batch, batch_type
from .code import AdditiveCode, Monomial, apply_monomial
from .config import GuardExceeded, settings
from .duality import dual
from .lattice import intersection_dual_type

CHUNK = 1 << 16


@dataclass(frozen=True)
class Witness:
    """A monomial together with the dual type and size of the intersection."""

    monomial: Monomial
    achieved: CodeType
    eta: int
    seed: Optional[int] = None

    def replay(self, base1: AdditiveCode, base2: AdditiveCode) -> bool:
        C = apply_monomial(base2, self.monomial)
        t = intersection_dual_type(base1, C)
        return t == self.achieved and (1 << (t.alpha + 2 * t.beta - t.log2_size)) == self.eta

    def line(self) -> str:
        m = self.monomial
        pi = "".join("(" + ",".join(map(str, c)) + ")" for c in m.cycles()) or "Id"
        signs = ",".join(str(s + 1) for s in sorted(m.signs)) or "-"
        seed = "-" if self.seed is None else str(self.seed)
        return f"{self.achieved} eta={self.eta} pi={pi} signs={signs} seed={seed}"


@dataclass(frozen=True)
class NotFound:
    samples: int
    seed: Optional[int] = None


@dataclass(frozen=True)
class RefutedByExhaustion:
    orbit_size: int
    visited: int
    use_signs: bool


@dataclass
class SearchTask:
    base1: AdditiveCode
    base2: AdditiveCode
    target: Union[CodeType, int, None] = None
    budget: int = 10_000
    mode: str = "randomized"
    use_signs: bool = False
    seed: int = 0
    prune: bool = True


# ---------------------------------------------------------------------------
# monomial groups as index spaces
# ---------------------------------------------------------------------------

def _all_perms(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(math.factorial(n), n)


def orbit_size(alpha: int, beta: int, use_signs: bool) -> int:
    return math.factorial(alpha) * math.factorial(beta) * ((1 << beta) if use_signs else 1)


def _to_monomial(alpha, beta, pb, pq, smask) -> Monomial:
    perm = [int(x) for x in pb] + [alpha + int(x) for x in pq]
    signs = [alpha + j for j in range(beta) if (int(smask) >> j) & 1]
    return Monomial(alpha, beta, perm, signs)


class _Pair:
    """Packed parity-check rows of a base pair plus batch evaluation."""

    def __init__(self, base1: AdditiveCode, base2: AdditiveCode):
        if base1.shape != base2.shape:
            raise ValueError(f"shape mismatch: {base1.shape} vs {base2.shape}")
        self.alpha, self.beta = base1.shape
        self.H1 = dual(base1).gens.packed()
        self.H2 = dual(base2).gens.packed()
        self.n_total = self.alpha + 2 * self.beta

    def types(self, PB, PQ, S):
        return _eval_chunk(self.H1, self.H2, self.alpha, self.beta, PB, PQ, S)


def _eval_chunk(H1, H2, alpha, beta, PB, PQ, S):
    n = PB.shape[0]
    fixed = [
        (np.full(n, b, dtype=np.int64), np.full(n, lo, dtype=np.int64), np.full(n, hi, dtype=np.int64))
        for b, lo, hi in H1
    ]
    moved = apply_batch(H2, PB, PQ, S)
    return batch_type(fixed + moved, alpha, beta)


def _stabiliser_mask(H, alpha, beta, PB, PQ, S):
    """True where the monomial maps the row space of H onto itself."""
    g0, d0, _ = batch_type([tuple(np.full(1, x, dtype=np.int64) for x in r) for r in H], alpha, beta)
    g, d, _ = _eval_chunk(H, H, alpha, beta, PB, PQ, S)
    return (g + 2 * d) == (g0[0] + 2 * d0[0])


class _Space:
    """Enumeration order over split-preserving monomials, optionally pruned."""

    def __init__(self, pair: _Pair, use_signs: bool, prune: bool):
        a, b = pair.alpha, pair.beta
        self.alpha, self.beta = a, b
        self.bin = _all_perms(a)
        qp = _all_perms(b)
        ns = (1 << b) if use_signs else 1
        self.qperm = np.repeat(qp, ns, axis=0)
        self.qsign = np.tile(np.arange(ns, dtype=np.int64), qp.shape[0])
        self.full_size = self.bin.shape[0] * self.qperm.shape[0]
        self.bin_reps = np.arange(self.bin.shape[0])
        self.q_reps = np.arange(self.qperm.shape[0])
        if prune:
            self._prune(pair)

    def _prune(self, pair: _Pair):
        a, b = self.alpha, self.beta
        nb, nq = self.bin.shape[0], self.qperm.shape[0]
        idq = np.tile(np.arange(b, dtype=np.int64), (nb, 1))
        stab_b = np.nonzero(
            _stabiliser_mask(pair.H2, a, b, self.bin, idq, np.zeros(nb, dtype=np.int64))
        )[0]
        idb = np.tile(np.arange(a, dtype=np.int64), (nq, 1))
        stab_q = np.nonzero(_stabiliser_mask(pair.H2, a, b, idb, self.qperm, self.qsign))[0]
        self.stab_sizes = (len(stab_b), len(stab_q))

        bkey = {tuple(p): i for i, p in enumerate(self.bin.tolist())}
        A = self.bin[stab_b]
        seen = np.zeros(nb, dtype=bool)
        reps = []
        for i in range(nb):
            if seen[i]:
                continue
            reps.append(i)
            for row in self.bin[i][A].tolist():
                seen[bkey[tuple(row)]] = True
        self.bin_reps = np.array(reps, dtype=np.int64)

        qkey = {(tuple(p), int(s)): i for i, (p, s) in enumerate(zip(self.qperm.tolist(), self.qsign.tolist()))}
        Aq = [(self.qperm[j], int(self.qsign[j])) for j in stab_q]
        seen = np.zeros(nq, dtype=bool)
        reps = []
        for i in range(nq):
            if seen[i]:
                continue
            reps.append(i)
            tau, s = self.qperm[i], int(self.qsign[i])
            for ta, sa in Aq:
                moved = 0
                for j in range(b):
                    if (sa >> j) & 1:
                        moved |= 1 << int(tau[j])
                seen[qkey[(tuple(tau[ta].tolist()), moved ^ s)]] = True
        self.q_reps = np.array(reps, dtype=np.int64)

    @property
    def size(self) -> int:
        return len(self.bin_reps) * len(self.q_reps)

    def chunk(self, start: int, stop: int):
        g = np.arange(start, stop, dtype=np.int64)
        nb = len(self.bin_reps)
        bi = self.bin_reps[g % nb]
        qi = self.q_reps[g // nb]
        return self.bin[bi], self.qperm[qi], self.qsign[qi]

    def monomial(self, idx: int) -> Monomial:
        PB, PQ, S = self.chunk(idx, idx + 1)
        return _to_monomial(self.alpha, self.beta, PB[0], PQ[0], S[0])


# ---------------------------------------------------------------------------
# random monomials
# ---------------------------------------------------------------------------

def _random_perms(rng: np.random.Generator, n_samples: int, n: int) -> np.ndarray:
    """Products of k random transpositions with k uniform in 0..n per sample."""
    P = np.tile(np.arange(n, dtype=np.int64), (n_samples, 1))
    if n < 2:
        return P
    k = rng.integers(0, n + 1, size=n_samples)
    rows = np.arange(n_samples)
    for step in range(n):
        active = rows[k > step]
        if active.size == 0:
            break
        i = rng.integers(0, n, size=active.size)
        j = rng.integers(0, n, size=active.size)
        vi = P[active, i].copy()
        P[active, i] = P[active, j]
        P[active, j] = vi
    return P


def _random_batch(rng, n_samples, alpha, beta, use_signs):
    PB = _random_perms(rng, n_samples, alpha)
    PQ = _random_perms(rng, n_samples, beta)
    if use_signs and beta:
        p = rng.random(n_samples)[:, None]
        bits = (rng.random((n_samples, beta)) < p).astype(np.int64)
        S = bits @ (1 << np.arange(beta, dtype=np.int64))
    else:
        S = np.zeros(n_samples, dtype=np.int64)
    return PB, PQ, S


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

def _first_by_type(g, d, k, offset):
    """{(gamma, delta, kappa): first index} for one evaluated chunk."""
    key = np.stack([g, d, k], axis=1)
    uniq, first = np.unique(key, axis=0, return_index=True)
    return {tuple(int(x) for x in u): offset + int(f) for u, f in zip(uniq, first)}


def _exhaustive_chunk(args):
    pair, space, start, stop = args
    PB, PQ, S = space.chunk(start, stop)
    g, d, k = pair.types(PB, PQ, S)
    return _first_by_type(g, d, k, start)


def _scan_exhaustive(pair: _Pair, space: _Space, stop_when=None):
    """Yield per-chunk {type key: first index} maps in orbit order."""
    bounds = [(s, min(s + CHUNK, space.size)) for s in range(0, space.size, CHUNK)]
    jobs = [(pair, space, s, e) for s, e in bounds]
    if settings.workers > 1 and len(jobs) > 1 and stop_when is None:
        with ProcessPoolExecutor(settings.workers) as ex:
            yield from ex.map(_exhaustive_chunk, jobs)
        return
    for job in jobs:
        found = _exhaustive_chunk(job)
        yield found
        if stop_when is not None and stop_when(found):
            return


def _merge(acc: dict, found: dict):
    for key, idx in found.items():
        if key not in acc or idx < acc[key]:
            acc[key] = idx


def _check_ceiling(alpha, beta, use_signs):
    size = orbit_size(alpha, beta, use_signs)
    if size > (1 << settings.orbit_ceiling_log2):
        raise GuardExceeded(
            f"orbit of {size} monomials exceeds the exhaustive ceiling 2^{settings.orbit_ceiling_log2}"
        )
    return size


def _witness(pair, key, monomial, seed):
    t = CodeType(pair.alpha, pair.beta, *key)
    return Witness(monomial, t, 1 << (pair.n_total - t.log2_size), seed)


def enumerate_types(
    base1: AdditiveCode,
    base2: AdditiveCode,
    mode: str = "exhaustive",
    budget: int = 10_000,
    use_signs: bool = False,
    seed: int = 0,
    prune: bool = True,
) -> dict:
    """Achieved intersection dual types, each with its first witness.

    Returns a dict ordered by type.  In exhaustive mode the set is complete
    for the monomial orbit.
    """
    pair = _Pair(base1, base2)
    a, b = pair.alpha, pair.beta
    acc = {}
    if mode == "exhaustive":
        _check_ceiling(a, b, use_signs)
        space = _Space(pair, use_signs, prune)
        for found in _scan_exhaustive(pair, space):
            _merge(acc, found)
        out = {key: _witness(pair, key, space.monomial(idx), None) for key, idx in acc.items()}
    elif mode == "randomized":
        rng = np.random.default_rng(seed)
        batches = []
        done = 0
        while done < budget:
            n = min(CHUNK, budget - done)
            PB, PQ, S = _random_batch(rng, n, a, b, use_signs)
            g, d, k = pair.types(PB, PQ, S)
            found = _first_by_type(g, d, k, done)
            batches.append((done, PB, PQ, S))
            _merge(acc, found)
            done += n
        out = {}
        for key, idx in acc.items():
            start, PB, PQ, S = max((bt for bt in batches if bt[0] <= idx), key=lambda bt: bt[0])
            j = idx - start
            out[key] = _witness(pair, key, _to_monomial(a, b, PB[j], PQ[j], S[j]), seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return {CodeType(a, b, *key): out[key] for key in sorted(out)}


def enumerate_eta(base1, base2, mode="exhaustive", budget=10_000, use_signs=False, seed=0, prune=True) -> dict:
    """Achieved log2 intersection numbers, each with a witness."""
    types = enumerate_types(base1, base2, mode, budget, use_signs, seed, prune)
    out = {}
    for t, w in types.items():
        l = w.eta.bit_length() - 1
        if l not in out:
            out[l] = w
    return dict(sorted(out.items()))


def _matches(target, pair):
    if isinstance(target, CodeType):
        want = (target.gamma, target.delta, target.kappa)
        return lambda key: key == want
    return lambda key: pair.n_total - (key[0] + 2 * key[1]) == target


def search(task: SearchTask):
    """Find a monomial realising ``task.target``.

    Returns a :class:`Witness`, :class:`NotFound` (randomized mode, budget
    spent) or :class:`RefutedByExhaustion` (the whole orbit was covered).
    """
    pair = _Pair(task.base1, task.base2)
    a, b = pair.alpha, pair.beta
    if isinstance(task.target, CodeType) and (task.target.alpha, task.target.beta) != (a, b):
        raise ValueError("target shape differs from the codes")
    hit = _matches(task.target, pair)
    if task.mode == "exhaustive":
        full = _check_ceiling(a, b, task.use_signs)
        space = _Space(pair, task.use_signs, task.prune)
        for found in _scan_exhaustive(pair, space, stop_when=lambda f: any(hit(k) for k in f)):
            keys = [k for k in found if hit(k)]
            if keys:
                key = min(keys, key=lambda k: found[k])
                return _witness(pair, key, space.monomial(found[key]), None)
        return RefutedByExhaustion(full, space.size, task.use_signs)
    if task.mode == "randomized":
        rng = np.random.default_rng(task.seed)
        done = 0
        while done < task.budget:
            n = min(CHUNK, task.budget - done)
            PB, PQ, S = _random_batch(rng, n, a, b, task.use_signs)
            found = _first_by_type(*pair.types(PB, PQ, S), 0)
            keys = [k for k in found if hit(k)]
            if keys:
                key = min(keys, key=lambda k: found[k])
                j = found[key]
                return _witness(pair, key, _to_monomial(a, b, PB[j], PQ[j], S[j]), task.seed)
            done += n
        return NotFound(task.budget, task.seed)
    raise ValueError(f"unknown mode {task.mode!r}")


def replay(base1: AdditiveCode, base2: AdditiveCode, monomial: Monomial) -> Witness:
    """Witness for a given monomial, computed through the exact path."""
    t = intersection_dual_type(base1, apply_monomial(base2, monomial))
    return Witness(monomial, t, 1 << (t.alpha + 2 * t.beta - t.log2_size))


_LINE = re.compile(
    r"^\((\d+),(\d+);(\d+),(\d+);(\d+)\) eta=(\d+) pi=(Id|(?:\(\d+(?:,\d+)*\))+) "
    r"signs=(-|\d+(?:,\d+)*) seed=(-|-?\d+)$"
)


def parse_witness(line: str) -> Witness:
    """Inverse of :meth:`Witness.line`."""
    m = _LINE.match(line.strip())
    if not m:
        raise ValueError(f"malformed report line: {line!r}")
    a, b, g, d, k, n = (int(x) for x in m.groups()[:6])
    pi, signs, seed = m.group(7), m.group(8), m.group(9)
    cycles = [] if pi == "Id" else [tuple(int(x) for x in c.split(",")) for c in re.findall(r"\(([^)]*)\)", pi)]
    flips = [] if signs == "-" else [int(x) for x in signs.split(",")]
    mono = Monomial.from_cycles(a, b, cycles, flips)
    return Witness(mono, CodeType(a, b, g, d, k), n, None if seed == "-" else int(seed))


def parse_report(text: str) -> list:
    return [parse_witness(line) for line in text.splitlines() if line.strip()]


def format_report(witnesses) -> str:
    """One line per witness, in the order given."""
    return "".join(w.line() + "\n" for w in witnesses)


def enumerate_window(base1: AdditiveCode, base2: AdditiveCode, window: int, offset: int = 0) -> dict:
    """Exhaustive types over quaternary permutations moving only ``window``
    consecutive quaternary coordinates starting at ``offset``.

    A tractable substitute for full exhaustion when beta! is out of reach.
    """
    pair = _Pair(base1, base2)
    a, b = pair.alpha, pair.beta
    if offset + window > b:
        raise ValueError("window runs past the quaternary block")
    if math.factorial(window) > (1 << settings.orbit_ceiling_log2):
        raise GuardExceeded(f"window {window} exceeds the exhaustive ceiling")
    sub = _all_perms(window) + offset
    acc = {}
    for start in range(0, sub.shape[0], CHUNK):
        part = sub[start:start + CHUNK]
        n = part.shape[0]
        PQ = np.tile(np.arange(b, dtype=np.int64), (n, 1))
        PQ[:, offset:offset + window] = part
        PB = np.tile(np.arange(a, dtype=np.int64), (n, 1))
        S = np.zeros(n, dtype=np.int64)
        found = _first_by_type(*pair.types(PB, PQ, S), start)
        for key, idx in found.items():
            if key not in acc or idx < acc[key][0]:
                j = idx - start
                acc[key] = (idx, _to_monomial(a, b, PB[j], PQ[j], S[j]))
    return {CodeType(a, b, *key): _witness(pair, key, acc[key][1], None) for key in sorted(acc)}
