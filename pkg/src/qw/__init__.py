"""Exact symbolic computation in the q-deformed W(2,2) Lie algebra and its Hopf algebra.

Scalars live in the rational function field Q(q).  Elements of the
enveloping Hopf algebra are kept in the normal order
``T^t C^c L... W...``.
"""

from .algebra import (
    AlgebraElement,
    GeneratorSymbol,
    LieGenerator,
    NormalMonomial,
    C,
    L,
    T,
    W,
    bracket_table,
    check_antisymmetry,
    check_q_jacobi,
    f_q,
    lie_bracket,
    q_jacobi_sum,
)
from .cocycle import check_cocycle_identity, closed_form_psi, solve_cocycle
from .errors import (
    DivisionByZero,
    EvalTypeError,
    GeneratorIndexError,
    ParseError,
    PoleError,
    QwError,
    WeightError,
)
from .hopf import (
    TensorElement,
    antipode,
    check_antipode_antihom,
    check_antipode_axiom,
    check_coassociativity,
    check_cocommutativity,
    check_counit_axiom,
    check_delta_respects_relations,
    coproduct,
    counit,
    tensor,
)
from .rewrite import CENTRAL, STRICT_PAPER, RelationMode, confluence_probe, multiply, normal_form
from .scalars import ONE, Q, ZERO, QPolynomial, QScalar, central_coeff, eval_at, q_integer, q_power
from .textio import evaluate_text, from_json, parse, render, to_json

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
