try:
    from ._crysred import (
        DomainError,
        HypothesisError,
        PrecisionError,
        classify,
        exceptional_discs,
        hecke_T,
        section2_suite,
        section4_suite,
        sweep,
        t_exponent,
        theta_branch,
    )
except ImportError:  # in-tree test runs put the extension on sys.path directly
    from _crysred import (
        DomainError,
        HypothesisError,
        PrecisionError,
        classify,
        exceptional_discs,
        hecke_T,
        section2_suite,
        section4_suite,
        sweep,
        t_exponent,
        theta_branch,
    )

__all__ = [
    "DomainError",
    "HypothesisError",
    "PrecisionError",
    "classify",
    "exceptional_discs",
    "hecke_T",
    "section2_suite",
    "section4_suite",
    "sweep",
    "t_exponent",
    "theta_branch",
]
