"""Coefficient operators on q-expansions and their weight/level bookkeeping.

The series-level maps (theta, U_m, V_m, twisting, Hecke) act coefficient by
coefficient.  Alongside them, `theta_mod_rule` records in which space a
theta image lives when working modulo ell^t, distinguishing the regimes
where the filtration step is exactly understood from the conservative
fallback bound.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import gcd, lcm

from .characters import Character
from .qseries import QSeries


@dataclass(frozen=True)
class FormMeta:
    """Weight, level, nebentypus, and cuspidality tag for a tracked form."""

    weight: int
    level: int
    nebentypus: Character
    cuspidal: bool = True


@dataclass(frozen=True)
class ThetaSpace:
    """Where theta^j f lands modulo ell^t, and how rigorously we know it."""

    weight: int
    level: int
    regime: str  # "exact" | "conservative"


def theta(series: QSeries, times: int = 1) -> QSeries:
    """Apply the q d/dq operator `times` times: a(n) -> n^times a(n)."""
    if times < 0:
        raise ValueError("theta cannot be un-applied")
    if times == 0:
        return series
    return series.map_coeffs(lambda n, c: n**times * c)


def theta_mod_rule(ell: int, t: int, applications: int, meta: FormMeta) -> ThetaSpace:
    """Weight/level bookkeeping for theta^applications on M_k(N) taken mod ell^t.

    Three regimes:
      * t = 1: classical filtration, weight steps by ell + 1, level unchanged.
      * ell = 3, t >= 2 or ell = 2, t >= 4: weight steps by 2 + phi(ell^t)
        and the level picks up one factor ell^(t-1).
      * otherwise: conservative - weight steps by 2 + 2 ell^(t-1)(ell - 1)
        and the level picks up one factor ell^t.
    """
    if applications < 1:
        raise ValueError("need at least one application")
    k, n_level = meta.weight, meta.level
    if t == 1:
        return ThetaSpace(k + applications * (ell + 1), n_level, "exact")
    if (ell == 3 and t >= 2) or (ell == 2 and t >= 4):
        step = 2 + ell ** (t - 1) * (ell - 1)
        return ThetaSpace(k + applications * step, n_level * ell ** (t - 1), "exact")
    step = 2 + 2 * ell ** (t - 1) * (ell - 1)
    return ThetaSpace(k + applications * step, n_level * ell**t, "conservative")


def u_operator(series: QSeries, m: int) -> QSeries:
    """U_m picks every m-th coefficient: sum a(mn) q^n, precision P // m."""
    if m < 1:
        raise ValueError("U_m needs m >= 1")
    p = series.precision // m
    return QSeries(series.ring, [series.coeffs[m * n] for n in range(p + 1)], p)


def v_operator(series: QSeries, m: int) -> QSeries:
    """V_m substitutes q -> q^m; the truncation keeps the input precision."""
    if m < 1:
        raise ValueError("V_m needs m >= 1")
    return series.dilate(m, series.precision)


def twist(series: QSeries, chi: Character) -> QSeries:
    """Coefficient twist a(n) -> chi(n) a(n)."""
    return series.map_coeffs(lambda n, c: chi(n) * c)


def twist_level(level: int, chi: Character) -> int:
    """Safe level for a twist by chi: lcm(N, modulus(chi)^2)."""
    return lcm(level, chi.modulus**2)


def twist_meta(meta: FormMeta, chi: Character) -> FormMeta:
    """Metadata after twisting: level grows, nebentypus picks up chi^2."""
    return replace(
        meta,
        level=twist_level(meta.level, chi),
        nebentypus=meta.nebentypus * chi * chi,
    )


def hecke_tp(series: QSeries, p: int, meta: FormMeta) -> QSeries:
    """Hecke operator T_p: b(n) = a(pn) + chi(p) p^(k-1) a(n/p)."""
    from .qseries import _is_prime

    if not _is_prime(p):
        raise ValueError(f"T_p wants a prime, got {p}")
    chi_p = meta.nebentypus(p)
    mult = chi_p * p ** (meta.weight - 1)
    out_p = series.precision // p
    coeffs = []
    for n in range(out_p + 1):
        val = series.coeffs[p * n]
        if mult and n % p == 0:
            val = val + mult * series.coeffs[n // p]
        coeffs.append(val)
    return QSeries(series.ring, coeffs, out_p)


def hecke_tn(series: QSeries, n: int, meta: FormMeta) -> QSeries:
    """General Hecke operator T_n via b(m) = sum_{d | (m,n)} chi(d) d^(k-1) a(mn/d^2)."""
    if n < 1:
        raise ValueError("T_n needs n >= 1")
    out_p = series.precision // n
    chi, k = meta.nebentypus, meta.weight
    coeffs = []
    for m in range(out_p + 1):
        total = 0
        g = gcd(m, n)
        for d in range(1, g + 1):
            if g % d == 0:
                cd = chi(d)
                if cd:
                    total += cd * d ** (k - 1) * series.coeffs[m * n // (d * d)]
        coeffs.append(total)
    return QSeries(series.ring, coeffs, out_p)
