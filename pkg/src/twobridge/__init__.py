"""Quasipositivity and alternating-diagram invariants of two-bridge links.

The library decides whether K(p,q) is quasipositive (equivalently
positive and strongly quasipositive, for knots) from the parity of the
subtractive continued fraction of p/q, and computes braid index,
exponent sum, Seifert-circle and spanning-tree statistics both from
closed-form block formulas and from an explicit diagram-level
computation that double-checks them.

The deciding function itself lives in the submodule of the same name:
``from twobridge.classify import classify, TwoBridge``.
"""

from . import braidstats, classify, contfrac, diagram, render, verify  # noqa: F401
from .braidstats import (  # noqa: F401
    BraidStats,
    braid_index_exponent,
    braid_stats,
    check_inequalities,
    closed_form_stats,
    mirror_stats,
    r_pm,
    stats_for,
)
from .classify import (  # noqa: F401
    Classification,
    LiscaOMembership,
    TwoBridge,
    canonical_isotopy_rep,
    in_lisca_O,
    inverse_rep,
    is_even_cf,
    mirror,
    pq_odd_shortcut,
    verify_slice_nonqp,
)
from .contfrac import (  # noqa: F401
    Rational,
    eval_even_cf,
    eval_neg_cf,
    eval_reg_cf,
    murasugi_even_cf,
    neg_cf,
    reg_cf_odd,
    reg_to_neg,
    reg_to_neg_complement,
    riemenschneider_dual,
)
from .diagram import (  # noqa: F401
    DiagramStats,
    LinkDiagram,
    SeifertGraph,
    SignedEdge,
    build_murasugi,
    build_standard,
    is_alternating,
    is_reduced,
    seifert_data,
    spanning_tree_signs,
)

__version__ = "0.1.0"
