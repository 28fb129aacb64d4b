"""Small random graded data for the property tests (dims <= 8)."""

import random

from corings.exactla import QQ, Mat
from corings import graded as gr
from corings.algebra import field_algebra


def setups():
    """(graded algebra, G-set) pairs used by the generators, one object each."""
    if hasattr(setups, "cache"):
        return setups.cache
    T1 = gr.FiniteGroup.trivial()
    k = gr.GradedAlgebra.trivially_graded(field_algebra(QQ), T1)
    C2 = gr.FiniteGroup.cyclic(2)
    C3 = gr.FiniteGroup.cyclic(3)
    A2 = gr.GradedAlgebra.group_algebra(QQ, C2)
    A3 = gr.GradedAlgebra.group_algebra(QQ, C3)
    out = [
        (k, gr.GSet.trivial_action(T1, 2, "X2")),
        (k, gr.GSet.trivial_action(T1, 3, "X3")),
        (A2, gr.GSet.regular(C2)),
        (A2, gr.GSet(C2, [[0, 1], [1, 0], [2, 2]], "C2+pt")),
        (A2, gr.GSet.singleton(C2)),
        (A3, gr.GSet.regular(C3)),
    ]
    setups.cache = out
    return out


def _invertible(rng, n):
    while True:
        M = Mat.from_rows(QQ, [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)], n)
        if M.rank() == n:
            return M


def scramble(rng, Bg):
    "Random change of basis inside each bidegree."
    n = Bg.dim
    P = Mat.zeros(QQ, n, n)
    classes = {}
    for i in range(n):
        classes.setdefault((Bg.ldeg[i], Bg.rdeg[i]), []).append(i)
    for idx in classes.values():
        B = _invertible(rng, len(idx))
        for a, i in enumerate(idx):
            for b, j in enumerate(idx):
                P.A[i, j] = B.A[a, b]
    return gr.regrade(Bg, P)


def graded_module(rng, Ag, X, side="right", max_dim=8):
    "A random graded module: free over A, scrambled inside components."
    if Ag.dim == 1:
        dims = [rng.randint(0, 2) for _ in range(X.size)]
        if sum(dims) == 0:
            dims[rng.randrange(X.size)] = 1
        M = gr.graded_vector_space(QQ, X, dims, side=side)
    else:
        ngen = rng.randint(1, max(1, max_dim // Ag.dim // 2))
        M = gr.free_graded_module(Ag, X, [rng.randrange(X.size) for _ in range(ngen)], side=side)
    return scramble(rng, M)


def bigraded(rng, Ag, X):
    "An X x X-graded A-bimodule: a scrambled hat module, or a bigraded vector space."
    if Ag.dim == 1 and rng.random() < 0.6:
        dims = [[rng.randint(0, 1) for _ in range(X.size)] for _ in range(X.size)]
        if not any(any(r) for r in dims):
            dims[0][0] = 1
        return scramble(rng, gr.graded_vector_space(QQ, X, dims, side="both"))
    return scramble(rng, gr.hat(Ag, X))


def instance(seed):
    rng = random.Random(seed)
    Ag, X = rng.choice(setups())
    return rng, Ag, X
