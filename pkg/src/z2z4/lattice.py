"""Spans, intersections, intersection numbers and the bound predicates."""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CodeType, MixedMatrix, packed_type
from .code import AdditiveCode
from .duality import dual


@dataclass(frozen=True)
class BoundReport:
    quantity: str
    lower: int
    upper: int
    observed: int

    @property
    def passed(self) -> bool:
        return self.lower <= self.observed <= self.upper

    def __str__(self):
        mark = "ok" if self.passed else "VIOLATED"
        return f"{self.quantity}: {self.lower} <= {self.observed} <= {self.upper} [{mark}]"


def _same_shape(C1, C2):
    if C1.shape != C2.shape:
        raise ValueError(f"shape mismatch: {C1.shape} vs {C2.shape}")


def span(C1: AdditiveCode, C2: AdditiveCode) -> AdditiveCode:
    _same_shape(C1, C2)
    return AdditiveCode(C1.gens.stack(C2.gens))


def intersect(C1: AdditiveCode, C2: AdditiveCode) -> AdditiveCode:
    """C1 n C2, computed as the dual of the span of the duals."""
    _same_shape(C1, C2)
    return dual(span(dual(C1), dual(C2)))


def span_type_of(H1: MixedMatrix, H2: MixedMatrix) -> CodeType:
    """Type of the code generated by H1 || H2 (fast path, no canonical form)."""
    g, d, k = packed_type(H1.packed() + H2.packed(), H1.beta)
    return CodeType(H1.alpha, H1.beta, g, d, k)


def intersection_dual_type(C1: AdditiveCode, C2: AdditiveCode) -> CodeType:
    """Dual type of C1 n C2, i.e. the type of <C1^perp, C2^perp>."""
    _same_shape(C1, C2)
    return span_type_of(dual(C1).gens, dual(C2).gens)


def eta(C1: AdditiveCode, C2: AdditiveCode) -> int:
    """|C1 n C2| = 2^(alpha + 2 beta) / |<C1^perp, C2^perp>|."""
    t = intersection_dual_type(C1, C2)
    return 1 << (t.alpha + 2 * t.beta - t.log2_size)


# ---------------------------------------------------------------------------
# generic bounds
# ---------------------------------------------------------------------------

def check_span_bounds(C1: AdditiveCode, C2: AdditiveCode) -> list:
    """Bounds on delta, kappa+delta and gamma+delta of <C1, C2>."""
    _same_shape(C1, C2)
    t1, t2 = C1.ctype, C2.ctype
    s = span(C1, C2).ctype
    a, b = s.alpha, s.beta
    reports = [
        BoundReport("delta", max(t1.delta, t2.delta), min(t1.delta + t2.delta, b), s.delta),
        BoundReport(
            "kappa+delta",
            max(s.delta, t1.kappa + t1.delta, t2.kappa + t2.delta),
            min(t1.kappa + t2.kappa + t1.delta + t2.delta, a + b),
            s.kappa + s.delta,
        ),
    ]
    lo = s.kappa + s.delta
    if a == 0:
        lo = max(s.delta, t1.gamma + t1.delta, t2.gamma + t2.delta)
    reports.append(
        BoundReport(
            "gamma+delta",
            lo,
            min(t1.gamma + t2.gamma + t1.delta + t2.delta, a + b),
            s.gamma + s.delta,
        )
    )
    return reports


def _mu(t1: CodeType, t2: CodeType) -> int:
    a, b = t1.alpha, t1.beta
    return min(
        t1.gamma + t2.gamma + 2 * (t1.delta + t2.delta),
        t1.gamma + t2.gamma + t1.delta + t2.delta + b,
        t1.delta + t2.delta + a + b,
        a + 2 * b,
    )


def _size_floor(t1: CodeType, t2: CodeType) -> int:
    return max(t1.kappa + t1.delta, t2.kappa + t2.delta) + max(t1.delta, t2.delta)


def check_dual_size_bounds(C1: AdditiveCode, C2: AdditiveCode) -> BoundReport:
    """gamma + 2 delta of <C1, C2> against the four-term minimum mu."""
    _same_shape(C1, C2)
    t1, t2 = C1.ctype, C2.ctype
    s = span(C1, C2).ctype
    return BoundReport("gamma+2delta", _size_floor(t1, t2), _mu(t1, t2), s.log2_size)


FAMILIES = ("generic", "quaternary-perfect", "additive-extended-perfect")


def _log2_exact(n: int) -> int:
    if n <= 0 or n & (n - 1):
        raise ValueError(f"{n} is not a power of two")
    return n.bit_length() - 1


def eta_bounds(family: str, d1: CodeType, d2: CodeType) -> tuple:
    """(lower, upper) on log2 eta for codes of dual types ``d1`` and ``d2``."""
    if (d1.alpha, d1.beta) != (d2.alpha, d2.beta):
        raise ValueError("shape mismatch")
    a, b = d1.alpha, d1.beta
    n = a + 2 * b
    if family == "generic":
        return n - _mu(d1, d2), n - _size_floor(d1, d2)
    if family == "quaternary-perfect":
        if a != 0:
            raise ValueError("quaternary-perfect family needs alpha = 0")
        t = _log2_exact(b) + 1
        for d in (d1, d2):
            if d.gamma + 2 * d.delta != t + 1:
                raise ValueError(f"dual type {d} is not that of a quaternary perfect code")
        return 2 * b - 2 * t, 2 * b - t - 1
    if family == "additive-extended-perfect":
        if a == 0:
            raise ValueError("additive-extended-perfect family needs alpha != 0")
        t = _log2_exact(n)
        for d in (d1, d2):
            if d.gamma + 2 * d.delta != t + 1:
                raise ValueError(f"dual type {d} is not that of an extended perfect code")
        if d1.delta == 1:
            return n - 2 * t, n - t - 1
        return n - 2 * t - 1, n - t - 1
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def check_eta_bounds(C1: AdditiveCode, C2: AdditiveCode, family: str = "generic") -> BoundReport:
    _same_shape(C1, C2)
    d1, d2 = dual(C1).ctype, dual(C2).ctype
    lo, hi = eta_bounds(family, d1, d2)
    return BoundReport("log2 eta", lo, hi, _log2_exact(eta(C1, C2)))


# ---------------------------------------------------------------------------
# structure bounds for the perfect families (on the dual type of C1 n C2)
# ---------------------------------------------------------------------------

def structure_bounds(family: str, d1: CodeType, d2: CodeType, observed: CodeType) -> list:
    """Reports for the dual type ``observed`` of an intersection.

    ``family`` is ``quaternary-perfect``, ``additive-extended-perfect`` or
    ``additive-perfect`` (the non-extended codes).
    """
    g, d, k = observed.gamma, observed.delta, observed.kappa
    if family == "quaternary-perfect":
        return [
            BoundReport("delta", max(d1.delta, d2.delta), d1.delta + d2.delta - 1, d),
            BoundReport(
                "gamma+delta",
                max(d, d1.gamma + d1.delta, d2.gamma + d2.delta),
                d1.gamma + d2.gamma + d1.delta + d2.delta - 1,
                g + d,
            ),
        ]
    if (d1.gamma, d1.delta) != (d2.gamma, d2.delta):
        raise ValueError("additive perfect codes of one length share gamma and delta")
    gb, db = d1.gamma, d1.delta
    if family == "additive-extended-perfect":
        if db == 0:
            return [
                BoundReport("delta", 0, 0, d),
                BoundReport("kappa", gb, 2 * gb - 1, k),
                BoundReport("gamma-kappa", 0, 0, g - k),
            ]
        if db == 1:
            return [
                BoundReport("delta", 1, 1, d),
                BoundReport("kappa", gb, g, k),
                BoundReport("gamma", k, 2 * gb, g),
            ]
        return [
            BoundReport("delta", db, 2 * db, d),
            BoundReport("kappa", gb, g, k),
            BoundReport("gamma", k, 2 * gb + 2 * db - d - 1, g),
        ]
    if family == "additive-perfect":
        if db == 1:
            return [
                BoundReport("delta", 1, 1, d),
                BoundReport("kappa", gb, g, k),
                BoundReport("gamma", k, 2 * gb + 1, g),
            ]
        return [
            BoundReport("delta", db, 2 * db, d),
            BoundReport("kappa", gb, g, k),
            BoundReport("gamma", k, 2 * gb + 2 * db - d, g),
        ]
    raise ValueError(f"unknown family {family!r}")


def structure_range(family: str, d1: CodeType, d2: CodeType) -> set:
    """Every dual type (gamma, delta, kappa) admitted by :func:`structure_bounds`."""
    a, b = d1.alpha, d1.beta
    out = set()
    for d in range(0, b + 1):
        for g in range(0, a + b + 1):
            for k in range(0, min(g, a) + 1) if a else (0,):
                t = CodeType(a, b, g, d, k)
                if all(r.passed for r in structure_bounds(family, d1, d2, t)):
                    out.add(t)
    return out
