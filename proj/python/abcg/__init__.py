"""Exact computations in finitely generated abelian-by-cyclic groups.

The heavy lifting lives in the compiled extension `_abcg`; this package
re-exports its surface.  The extension sits inside the package in wheel
builds and next to it on the interpreter path in development builds.
"""

try:
    from ._abcg import (  # noqa: F401
        LaurentPoly,
        Presentation,
        coset_intersect,
        evaluate_word,
        gadget_holds,
        hermite_normal_form,
        solve_monomial,
        subgroup_member,
        subgroup_structure,
        verify_coset_witness,
    )
except ImportError:  # development layout
    from _abcg import (  # noqa: F401
        LaurentPoly,
        Presentation,
        coset_intersect,
        evaluate_word,
        gadget_holds,
        hermite_normal_form,
        solve_monomial,
        subgroup_member,
        subgroup_structure,
        verify_coset_witness,
    )

__all__ = [
    "LaurentPoly",
    "Presentation",
    "coset_intersect",
    "evaluate_word",
    "gadget_holds",
    "hermite_normal_form",
    "solve_monomial",
    "subgroup_member",
    "subgroup_structure",
    "verify_coset_witness",
]
