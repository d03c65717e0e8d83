"""Solutions of a^x + b^y = c^z in positive integers."""

from ._core import (
    DomainError,
    EffortExceeded,
    InternalError,
    allowed_classes,
    association_signature,
    check_order_condition,
    count_factorizations,
    discrete_log,
    factorize,
    find_primitive_root,
    gamma_components,
    is_prime,
    mul_order,
    perfect_power_decompose,
    search,
    solve,
    sqrt_mod,
    verify,
)

__all__ = [
    "DomainError",
    "EffortExceeded",
    "InternalError",
    "allowed_classes",
    "association_signature",
    "check_order_condition",
    "count_factorizations",
    "discrete_log",
    "factorize",
    "find_primitive_root",
    "gamma_components",
    "is_prime",
    "mul_order",
    "perfect_power_decompose",
    "search",
    "solve",
    "sqrt_mod",
    "verify",
]
