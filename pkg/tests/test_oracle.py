"""Brute-force oracle for two-term silting over small algebras.

Independently of the mutation/BFS machinery, enumerate all candidate
minimal two-term complexes (bounded multiplicities, differential entries
with 0/1 coefficients -- sufficient up to isomorphism for the Schurian
tree-quiver algebras used here), keep the indecomposable presilting ones,
and assemble silting sets as n-subsets with pairwise-vanishing positive
self-extensions.  The resulting canonical g-matrix sets must equal what
the exploration engine produces.
"""

import itertools

import pytest

from twosilt import (
    QQ,
    parse_presentation,
    build_based_algebra,
    resolve_algebra,
    enumerate_2silt,
    hom_dim,
    canonical_gmatrix,
)
from twosilt.complexes import TwoTermComplex, local_residue_dim


def _multisets(n, max_size, max_mult):
    """Vertex multisets as multiplicity tuples."""
    out = []
    for mult in itertools.product(range(max_mult + 1), repeat=n):
        if 0 < sum(mult) <= max_size:
            out.append(mult)
    return [()] + [tuple(v for v in range(n) for _ in range(m[v]))
                   for m in out]


def _entry_choices(A, u, v):
    """Radical elements of Hom(P_u, P_v) with 0/1 coefficients."""
    basis = [k for k in A.hom_basis(u, v) if A.basis_source[k] !=
             A.basis_target[k] or k not in A.idem]
    basis = [k for k in basis if k not in A.idem]
    choices = [{}]
    for picks in itertools.product((0, 1), repeat=len(basis)):
        if any(picks):
            choices.append({k: QQ.of(1)
                            for k, take in zip(basis, picks) if take})
    return choices


def brute_force_candidates(A, max_size, max_mult):
    seen = {}
    for degm1 in _multisets(A.n, max_size, max_mult):
        for deg0 in _multisets(A.n, max_size - len(degm1), max_mult):
            if not degm1 and not deg0:
                continue
            per_cell = [[_entry_choices(A, degm1[c], deg0[r])
                         for c in range(len(degm1))]
                        for r in range(len(deg0))]
            flat = [cell for row in per_cell for cell in row]
            for combo in itertools.product(*flat):
                d = [list(combo[r * len(degm1):(r + 1) * len(degm1)])
                     for r in range(len(deg0))]
                X = TwoTermComplex(A, deg0, degm1, d)
                if degm1 and deg0 and any(
                        not any(d[r][c] for r in range(len(deg0)))
                        for c in range(len(degm1))):
                    continue  # a summand of P^{-1} maps to zero: split
                # indecomposable iff End(X) is local (1-dim residue)
                if local_residue_dim(X) != 1:
                    continue
                if hom_dim(X, X, 1) != 0:
                    continue
                seen.setdefault(X.g_vector(), X)
    return list(seen.values())


def brute_force_2silt(A, max_size=None, max_mult=2):
    if max_size is None:
        max_size = A.n + 1
    cands = brute_force_candidates(A, max_size, max_mult)
    results = set()
    for subset in itertools.combinations(cands, A.n):
        gs = [X.g_vector() for X in subset]
        if len(set(gs)) != A.n:
            continue
        if all(hom_dim(X, Y, 1) == 0
               for X in subset for Y in subset):
            results.add(canonical_gmatrix(gs))
    return results


@pytest.mark.parametrize("name", ["linear:2", "linear:3"])
def test_oracle_matches_exploration_path_algebras(name):
    A = resolve_algebra(name)
    graph, report = enumerate_2silt(A)
    assert report.complete
    assert brute_force_2silt(A) == set(graph.nodes)


def test_oracle_matches_exploration_with_relation():
    pres = parse_presentation(
        "vertices: 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrel a*b")
    A = build_based_algebra(pres, QQ)
    graph, report = enumerate_2silt(A)
    assert report.complete
    assert brute_force_2silt(A) == set(graph.nodes)
