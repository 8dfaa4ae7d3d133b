# derlie/invariants.py
"""
gl(V)-invariant subcomplexes.

The invariants of a block are the common kernel of the gl(V) operators
stored on the complex under names "gl:a,b". A complex built on the torus
weight-zero part only needs the raising operators E_{a,a+1}: a weight-zero
vector killed by them spans a trivial summand.
"""
from typing import Dict, List, Tuple

from core.exceptions import ChainComplexError, EquivarianceError
from core.logging import get_logger
from exactla.complex import BlockKey, ChainComplex, below
from exactla.rank import Subspace, intersect_kernels
from exactla.sparse import SparseMatrix

logger = get_logger(__name__)

PREFIX = "gl:"


def _gl_operators(c: ChainComplex, key: BlockKey) -> List[SparseMatrix]:
    return [
        ops[key] for name, ops in sorted(c.operators.items())
        if name.startswith(PREFIX) and key in ops
    ]


def invariant_subspaces(c: ChainComplex, dim_v: int) -> Dict[BlockKey, Subspace]:
    """
    Common kernel of the stored E_ab actions, per block.

    Raises:
        EquivarianceError: no gl(V) action is stored on the complex
    """
    if dim_v > 1 and c.blocks and not any(name.startswith(PREFIX) for name in c.operators):
        raise EquivarianceError(f"no gl({dim_v}) action stored on {c.name}")
    return {key: intersect_kernels(c.dim(key), _gl_operators(c, key)) for key in c.keys()}


def restrict_to_subspaces(
    c: ChainComplex, subspaces: Dict[BlockKey, Subspace], name: str = ""
) -> ChainComplex:
    """
    The subcomplex spanned by the given subspaces, with the stored S_n
    actions restricted to it.

    Raises:
        ChainComplexError: the differential does not map a subspace into
            the one below it
        EquivarianceError: a stored S_n action does not preserve a subspace
    """
    diffs: Dict[BlockKey, SparseMatrix] = {}
    for key, matrix in c.differentials.items():
        source = subspaces.get(key)
        if source is None or not source.dim:
            continue
        target = subspaces.get(below(key))
        columns = []
        for vector in source.vectors:
            image = matrix.apply(vector)
            if target is None:
                if image:
                    raise ChainComplexError("differential leaves the subcomplex", block=key)
                columns.append({})
                continue
            if not target.contains(image):
                raise ChainComplexError("differential leaves the subcomplex", block=key)
            columns.append(target.coordinates(image))
        rows = target.dim if target is not None else 0
        diffs[key] = SparseMatrix.from_columns(rows, columns)
    actions: Dict[Tuple[int, int, int, int], SparseMatrix] = {}
    for (n, w, d, i), matrix in c.group_actions.items():
        space = subspaces.get((n, w, d))
        if space is None or not space.dim:
            continue
        columns = []
        for vector in space.vectors:
            image = matrix.apply(vector)
            if not space.contains(image):
                raise EquivarianceError("group action leaves the subcomplex", block=(n, w, d))
            columns.append(space.coordinates(image))
        actions[(n, w, d, i)] = SparseMatrix.from_columns(space.dim, columns)
    return ChainComplex(
        blocks={k: s.dim for k, s in subspaces.items()},
        differentials={k: m for k, m in diffs.items() if below(k) in subspaces},
        group_actions=actions,
        bases={k: [tuple(sorted(v.items())) for v in s.vectors] for k, s in subspaces.items()},
        untrusted=frozenset(k for k in c.untrusted if k in subspaces),
        name=name or c.name,
    )


def gl_invariants(c: ChainComplex, dim_v: int) -> ChainComplex:
    """The gl(V)-invariant subcomplex, with the restriction of d checked."""
    subspaces = invariant_subspaces(c, dim_v)
    result = restrict_to_subspaces(c, subspaces, name=f"{c.name}^gl({dim_v})")
    logger.debug(
        "gl_invariants",
        complex=c.name,
        dim_v=dim_v,
        dims={k: v for k, v in result.blocks.items() if v},
    )
    return result
