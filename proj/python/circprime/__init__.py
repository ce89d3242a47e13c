"""Circulant-matrix primality test, baselines and spectral analysis."""

from ._circprime import (
    ConfigError,
    DomainError,
    IntegralityError,
    PrecisionError,
    Verdict,
    eigenvalues,
    minpoly,
    orbit_count,
    orbit_count_divisor_formula,
    orbits,
    phase_point,
    spectral_property,
    sweep,
    test,
)

METHODS = (
    "trial-division",
    "optimized-trial-division",
    "miller-rabin",
    "aks",
    "circulant-full",
    "circulant-simplified",
)


def is_prime(n: int, method: str = "circulant-full", **options) -> bool:
    return test(n, method, **options).is_prime


__all__ = [
    "METHODS",
    "ConfigError",
    "DomainError",
    "IntegralityError",
    "PrecisionError",
    "Verdict",
    "eigenvalues",
    "is_prime",
    "minpoly",
    "orbit_count",
    "orbit_count_divisor_formula",
    "orbits",
    "phase_point",
    "spectral_property",
    "sweep",
    "test",
]
