"""Scaled thermodynamics of the photon gas between parallel plates.

After removing the extensive cube contributions, the free energy,
entropy, pressure and internal energy per unit plate area reduce to
dimensionless functions of a single variable, the reduced temperature

    v = a k_B T / (pi hbar c),

where a is the plate separation.  Each function has two equivalent
representations related by Poisson resummation:

    form (A), accurate at low temperature, built on kfun(1/v), hfun(1/v);
    form (B), accurate at high temperature, built on kfun(4 pi^2 v), hfun(4 pi^2 v).

form (A):
    f = -1/720 - v^3 (z3/2 - (pi^4/45) v + k)
    s = v^2 (3 z3/2 - (4 pi^4/45) v + 3 k - h)
    p = -1/240 - v^3 ((pi^4/45) v + h)
    e = -1/720 + v^3 (z3 - (pi^4/15) v + 2 k - h)

form (B):
    f = -(v/4 pi^2) (z3/2 + k)
    s = (1/4 pi^2) (z3/2 + k + h)
    p = -(v/4 pi^2) (z3 + 2 k - h)
    e = (v/4 pi^2) h

with z3 = zeta(3).  Exact linear relations hold in either form:

    3 f + v s - p = 0        and        e = f + v s.

Dropping (k, h) from form (A) gives the low-temperature expansion
(relative error < 1% for v <= 0.09); dropping them from form (B) gives
the high-temperature asymptotics (errors <= 1% already at v = 0.25 for
f, s, p), in particular p -> -v zeta(3)/(4 pi^2).
"""

import math
from dataclasses import dataclass
from enum import Enum

from . import specfun
from .errors import DomainError
from .specfun import DEFAULT_CONTROL, ZETA3, SeriesControl, hfun, kfun

__all__ = [
    "Form",
    "UnitContext",
    "DEFAULT_UNITS",
    "ReducedState",
    "ThermoPoint",
    "DimensionalPoint",
    "AUTO_CROSSOVER",
    "PA_PER_N_CM2",
    "reduced_temperature",
    "g_of_v",
    "thermo_point",
    "thermo_point_approx",
    "casimir_pressure_t0",
    "dimensional_point",
]

FOUR_PI_SQ = 4.0 * math.pi**2
PI4_45 = math.pi**4 / 45.0

# Form selection crossover: at v = 1/(2 pi) the series arguments 1/v and
# 4 pi^2 v coincide, so the faster-converging form is used on each side.
AUTO_CROSSOVER = 1.0 / (2.0 * math.pi)

# 1 N/cm^2 = 1e4 Pa
PA_PER_N_CM2 = 1.0e4


class Form(str, Enum):
    """Representation used for a thermodynamic evaluation."""

    A = "A"
    B = "B"
    AUTO = "auto"
    LOW_T = "lowT"
    HIGH_T = "highT"


_SELECTABLE = (Form.A, Form.B, Form.AUTO)


@dataclass(frozen=True)
class UnitContext:
    """Physical constants for dimensional input and output (CODATA 2018).

    hbar_c in J m, k_B in J/K.  length_scale(T) = pi hbar c / (k_B T) is
    the separation at which the reduced temperature reaches 1.
    """

    hbar_c: float = 3.16152677e-26
    k_B: float = 1.380649e-23

    def __post_init__(self):
        if self.hbar_c <= 0.0 or self.k_B <= 0.0:
            raise DomainError("physical constants must be positive")

    def length_scale(self, T: float) -> float:
        if T <= 0.0:
            raise DomainError(f"length_scale requires T > 0, got {T}")
        return math.pi * self.hbar_c / (self.k_B * T)


DEFAULT_UNITS = UnitContext()


@dataclass(frozen=True)
class ReducedState:
    """Reduced temperature v, optionally with the generating pair (a, T)."""

    v: float
    a: float | None = None  # m
    T: float | None = None  # K
    units: UnitContext = DEFAULT_UNITS

    def __post_init__(self):
        if self.v < 0.0:
            raise DomainError(f"reduced temperature must be >= 0, got {self.v}")
        if (self.a is None) != (self.T is None):
            raise DomainError("a and T must be given together or not at all")
        if self.a is not None:
            expected = self.a * self.units.k_B * self.T / (math.pi * self.units.hbar_c)
            scale = max(abs(expected), abs(self.v), 1e-300)
            if abs(self.v - expected) > 1e-14 * scale:
                raise DomainError(
                    f"inconsistent reduced state: v={self.v} but a,T give {expected}"
                )


def reduced_temperature(a: float, T: float, units: UnitContext = DEFAULT_UNITS) -> ReducedState:
    """Reduced temperature v = a k_B T / (pi hbar c) for a in m, T in K."""
    if a <= 0.0:
        raise DomainError(f"plate separation must be positive, got {a}")
    if T < 0.0:
        raise DomainError(f"temperature must be >= 0, got {T}")
    v = a * units.k_B * T / (math.pi * units.hbar_c)
    return ReducedState(v=v, a=a, T=T, units=units)


@dataclass(frozen=True)
class ThermoPoint:
    """Scaled free energy f, entropy s, pressure p and energy e at one v."""

    v: float
    f: float
    s: float
    p: float
    e: float
    form: Form


def _resolve_form(v: float, form: Form) -> Form:
    if form not in _SELECTABLE:
        raise DomainError(f"form must be one of A, B, auto; got {form}")
    if form is Form.AUTO:
        return Form.A if v < AUTO_CROSSOVER else Form.B
    return form


def g_of_v(v: float, form: Form = Form.AUTO, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Interior free-energy kernel g(v); both forms agree within 1e-10.

    form (A):  -v^3 (z3/2 + k(1/v))
    form (B):  1/720 - (pi^4/45) v^4 - (v/4 pi^2)(z3/2 + k(4 pi^2 v))

    The limit g(0) = 0 is returned exactly.
    """
    if v < 0.0:
        raise DomainError(f"g_of_v requires v >= 0, got {v}")
    if v == 0.0:
        return 0.0
    resolved = _resolve_form(v, form)
    if resolved is Form.A:
        return -(v**3) * (0.5 * ZETA3 + kfun(1.0 / v, control))
    return (
        1.0 / 720.0
        - PI4_45 * v**4
        - v / FOUR_PI_SQ * (0.5 * ZETA3 + kfun(FOUR_PI_SQ * v, control))
    )


_ZERO_POINT_F = -1.0 / 720.0
_ZERO_POINT_P = -1.0 / 240.0


def thermo_point(
    v: float, form: Form = Form.AUTO, control: SeriesControl = DEFAULT_CONTROL
) -> ThermoPoint:
    """Evaluate (f, s, p, e) at reduced temperature v.

    At v = 0 the exact limits f = e = -1/720, s = 0, p = -1/240 are
    returned without evaluating the series.
    """
    if v < 0.0:
        raise DomainError(f"thermo_point requires v >= 0, got {v}")
    if v == 0.0:
        resolved = Form.A if form in (Form.A, Form.AUTO) else Form.B
        return ThermoPoint(0.0, _ZERO_POINT_F, 0.0, _ZERO_POINT_P, _ZERO_POINT_F, resolved)
    resolved = _resolve_form(v, form)
    if resolved is Form.A:
        x = 1.0 / v
        k = kfun(x, control)
        h = hfun(x, control)
        return ThermoPoint(v, *_form_a(v, k, h), Form.A)
    x = FOUR_PI_SQ * v
    k = kfun(x, control)
    h = hfun(x, control)
    return ThermoPoint(v, *_form_b(v, k, h), Form.B)


def _form_a(v, k, h):
    v3 = v**3
    f = _ZERO_POINT_F - v3 * (0.5 * ZETA3 - PI4_45 * v + k)
    s = v * v * (1.5 * ZETA3 - 4.0 * PI4_45 * v + 3.0 * k - h)
    p = _ZERO_POINT_P - v3 * (PI4_45 * v + h)
    e = _ZERO_POINT_F + v3 * (ZETA3 - 3.0 * PI4_45 * v + 2.0 * k - h)
    return f, s, p, e


def _form_b(v, k, h):
    f = -v / FOUR_PI_SQ * (0.5 * ZETA3 + k)
    s = (0.5 * ZETA3 + k + h) / FOUR_PI_SQ
    p = -v / FOUR_PI_SQ * (ZETA3 + 2.0 * k - h)
    e = v / FOUR_PI_SQ * h
    return f, s, p, e


def thermo_point_approx(
    v: float, regime: Form, control: SeriesControl = DEFAULT_CONTROL
) -> ThermoPoint:
    """Low- or high-temperature approximation: the matching form with k = h = 0.

    regime LOW_T drops (k, h) from form (A); regime HIGH_T drops them
    from form (B), giving in particular p = -v zeta(3)/(4 pi^2).
    """
    if v < 0.0:
        raise DomainError(f"thermo_point_approx requires v >= 0, got {v}")
    if regime is Form.LOW_T:
        return ThermoPoint(v, *_form_a(v, 0.0, 0.0), Form.LOW_T)
    if regime is Form.HIGH_T:
        return ThermoPoint(v, *_form_b(v, 0.0, 0.0), Form.HIGH_T)
    raise DomainError(f"regime must be LOW_T or HIGH_T, got {regime}")


def casimir_pressure_t0(a: float, units: UnitContext = DEFAULT_UNITS) -> float:
    """Magnitude of the zero-temperature Casimir pressure, in N/cm^2.

    pi^2 hbar c / (240 a^4) with a in m; equals 1.3001e-7 N/cm^2 at
    a = 1 micron.
    """
    if a <= 0.0:
        raise DomainError(f"plate separation must be positive, got {a}")
    pressure_pa = math.pi**2 * units.hbar_c / (240.0 * a**4)
    return pressure_pa / PA_PER_N_CM2


@dataclass(frozen=True)
class DimensionalPoint:
    """Finite (non-extensive) dimensional observables at (a, T)."""

    v: float
    P: float  # Pa
    phi_fin: float  # J/m^2
    sigma_fin: float  # 1/m^2 (entropy per area, in units of k_B)
    eps_fin: float  # J/m^2


def dimensional_point(
    a: float,
    T: float,
    units: UnitContext = DEFAULT_UNITS,
    form: Form = Form.AUTO,
    control: SeriesControl = DEFAULT_CONTROL,
) -> DimensionalPoint:
    """Dimensional pressure and finite parts of the per-area potentials.

    P = (pi^2 hbar c / a^4) p(v), phi_fin = (pi^2 hbar c / a^3) f(v),
    sigma_fin = (pi / a^2) s(v), eps_fin = (pi^2 hbar c / a^3) e(v).
    """
    state = reduced_temperature(a, T, units)
    point = thermo_point(state.v, form, control)
    energy_scale = math.pi**2 * units.hbar_c / a**3
    return DimensionalPoint(
        v=state.v,
        P=energy_scale / a * point.p,
        phi_fin=energy_scale * point.f,
        sigma_fin=math.pi / a**2 * point.s,
        eps_fin=energy_scale * point.e,
    )
