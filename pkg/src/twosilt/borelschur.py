"""Constructors and structural checks for a family of Borel-type Schur
algebras S(n, r; p), together with the quotient/truncation certificates
that witness tau-tilting infiniteness and the full classification table.

For n = 2 the algebra has an explicit presentation: vertices 0..r (0 a
sink, r a source) and, for every power s = p^d <= r, arrows x_t: t+s -> t
(0 <= t <= r-s).  The admissible ideal is generated by the p-fold chains
of a single step size and the commutativity binomials between two step
sizes; a relation is emitted exactly when all of its arrows exist.  For
p = 0 the algebra is the path algebra of the linear quiver.
"""

from .fields import QQ
from .presentation import Arrow, Quiver, Presentation
from .algebra import (
    build_based_algebra,
    idempotent_truncation,
    quotient_by_ideal,
    minimal_relation_matrix,
    verify_anti_automorphism,
)


def compositions(n, r):
    """All weak compositions of r into n parts, ascending lexicographic."""
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    out = []

    def rec(prefix, rest, parts_left):
        if parts_left == 1:
            out.append(prefix + (rest,))
            return
        for first in range(rest + 1):
            rec(prefix + (first,), rest - first, parts_left - 1)

    rec((), r, n)
    out.sort()
    return out


def iota(lam):
    """Reversal of a composition; an involution."""
    return tuple(reversed(lam))


def p_digit_sum(s, p):
    """Sum of the digits of s in base p."""
    if s < 0:
        raise ValueError("negative input")
    total = 0
    while s:
        total += s % p
        s //= p
    return total


def _steps(r, p):
    """Step sizes p^d <= r, ascending; for p = 0 only step 1."""
    if p == 0:
        return [1] if r >= 1 else []
    steps = []
    s = 1
    while s <= r:
        steps.append(s)
        s *= p
    return steps


def _composition_label(lam):
    if all(part <= 9 for part in lam):
        return "".join(str(part) for part in lam)
    return ",".join(str(part) for part in lam)


def borel_schur_quiver(n, r, p):
    """The quiver of S(n, r; p): vertices are the compositions of r into n
    parts; there is an arrow lam -> mu whenever mu - lam = p^d * gamma_i
    with gamma_i = -e_i + e_{i+1} (for p = 0 only d = 0 occurs)."""
    verts = compositions(n, r)
    index = {lam: k for k, lam in enumerate(verts)}
    arrows = []
    for s in _steps(r, p):
        for i in range(n - 1):
            for k, lam in enumerate(verts):
                mu = list(lam)
                mu[i] -= s
                mu[i + 1] += s
                if mu[i] < 0:
                    continue
                mu = tuple(mu)
                arrows.append(Arrow("x%d_%d_%d" % (s, i, k), k, index[mu]))
    return Quiver([_composition_label(lam) for lam in verts], arrows)


def borel_schur_presentation_n2(r, p):
    """Presentation of S(2, r; p) on vertices 0..r (0 sink, r source).

    Arrows of step s = p^d are named with the d-th letter of the alphabet
    followed by their target: a0, a1, ... for step 1, b0, b1, ... for
    step p, and so on.
    """
    if r < 1:
        raise ValueError("need r >= 1")
    if p < 0 or p == 1:
        raise ValueError("p must be 0 or a prime")
    labels = [str(v) for v in range(r + 1)]
    steps = _steps(r, p)
    arrows = []
    letter = {}
    for d, s in enumerate(steps):
        letter[s] = chr(ord("a") + d)
        for t in range(r - s + 1):
            arrows.append(Arrow(letter[s] + str(t), t + s, t))
    relations = []
    if p > 0:
        # p-fold chains: x_{t+(p-1)s} ... x_{t+s} x_t, read left to right
        for s in steps:
            for t in range(r - p * s + 1):
                word = tuple(letter[s] + str(t + i * s)
                             for i in range(p - 1, -1, -1))
                relations.append({word: 1})
        # commutativity between steps s < s2
        for ia, s in enumerate(steps):
            for s2 in steps[ia + 1:]:
                for t in range(r - s - s2 + 1):
                    relations.append({
                        (letter[s] + str(t + s2), letter[s2] + str(t)): 1,
                        (letter[s2] + str(t + s), letter[s] + str(t)): -1,
                    })
    return Presentation(Quiver(labels, arrows), relations)


def borel_schur_algebra(r, p, field=QQ):
    return build_based_algebra(borel_schur_presentation_n2(r, p), field)


def sigma_permutation(r):
    """The vertex permutation i -> r - i induced by the anti-automorphism
    of S(2, r; p)."""
    return [r - i for i in range(r + 1)]


def structural_checks(r, p, field=QQ):
    """Assert the structural facts used downstream: acyclic quiver,
    Schurian hom spaces, the i -> r-i anti-automorphism, and the
    one-point-extension compatibility with S(2, r-1; p)."""
    pres = borel_schur_presentation_n2(r, p)
    A = build_based_algebra(pres, field)
    report = {}
    report["acyclic"] = pres.quiver.is_acyclic()
    report["schurian"] = A.is_schurian()
    report["anti_automorphism"] = verify_anti_automorphism(
        A, sigma_permutation(r))
    report["dim"] = A.dim
    if r >= 2:
        corner = idempotent_truncation(A, list(range(r)))
        small = build_based_algebra(
            borel_schur_presentation_n2(r - 1, p), field)
        report["one_point_extension"] = (
            corner.dim == small.dim
            and corner.arrow_matrix() == small.arrow_matrix()
            and corner.dim_table() == small.dim_table())
    else:
        report["one_point_extension"] = True
    report["ok"] = all(bool(report[k]) for k in
                       ("acyclic", "schurian", "anti_automorphism",
                        "one_point_extension"))
    return report


def _match_up_to_permutation(mats_a, mats_b):
    """Find a vertex permutation identifying each matrix in mats_a with
    the corresponding one in mats_b (same shape, integer entries)."""
    n = len(mats_a[0])
    if any(len(m) != n for m in mats_a + mats_b):
        return None

    def signature(mats, v):
        return tuple(
            (tuple(sorted(m[v])), tuple(sorted(m[u][v] for u in range(n))))
            for m in mats)

    sig_a = [signature(mats_a, v) for v in range(n)]
    sig_b = [signature(mats_b, v) for v in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None
    candidates = [[u for u in range(n) if sig_b[u] == sig_a[v]]
                  for v in range(n)]
    order = sorted(range(n), key=lambda v: len(candidates[v]))

    def rec(pos, assign, used):
        if pos == n:
            return dict(assign)
        v = order[pos]
        for u in candidates[v]:
            if u in used:
                continue
            ok = True
            for v2, u2 in assign.items():
                for ma, mb in zip(mats_a, mats_b):
                    if ma[v][v2] != mb[u][u2] or ma[v2][v] != mb[u2][u]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                assign[v] = u
                used.add(u)
                res = rec(pos + 1, assign, used)
                if res is not None:
                    return res
                del assign[v]
                used.remove(u)
        return None

    return rec(0, {}, set())


def concealed_certificate(A, target_pres, quotient=None, truncate=None):
    """Verify that the given quotient and/or idempotent truncation of A is
    structurally identical to the target bound quiver algebra: same vertex
    count, same total dimension, and arrow-multiplicity matrix, hom-space
    dimension table and minimal-relation-count matrix all equal up to one
    common vertex permutation.

    Returns a report dict with "pass" plus diagnostics.  A passing
    certificate, for an acyclic target presenting a tau-tilting-infinite
    algebra, witnesses tau-tilting infiniteness of A.
    """
    B = A
    if quotient:
        gens = [B.parse_element(text) for text in quotient]
        B = quotient_by_ideal(B, gens)
    if truncate is not None:
        B = idempotent_truncation(B, truncate)
    if not target_pres.quiver.is_acyclic():
        raise ValueError("certificate targets must be acyclic")
    T = build_based_algebra(target_pres, A.field)
    report = {
        "constructed_dim": B.dim,
        "target_dim": T.dim,
        "constructed_vertices": B.n,
        "target_vertices": T.n,
    }
    if B.n != T.n or B.dim != T.dim:
        report["pass"] = False
        report["reason"] = "vertex count or dimension mismatch"
        return report
    mats_b = [B.arrow_matrix(), B.dim_table(), minimal_relation_matrix(B)]
    mats_t = [T.arrow_matrix(), T.dim_table(), minimal_relation_matrix(T)]
    perm = _match_up_to_permutation(mats_b, mats_t)
    if perm is None:
        report["pass"] = False
        report["reason"] = "no vertex permutation matches quiver/relations"
        return report
    report["pass"] = True
    report["vertex_map"] = {B.vertex_labels[v]: T.vertex_labels[u]
                            for v, u in sorted(perm.items())}
    return report


def is_tau_tilting_finite(n, r, p):
    """The classification: finite iff n = 1, or r <= 1, or n = 2 with
    p = 0, or p = 2 and r <= 4, or p = 3 and r <= 5, or p = 5 and
    r <= 6, or p >= 7 and r <= p."""
    if n == 1 or r <= 1:
        return True
    if n >= 3:
        return False
    if p == 0:
        return True
    if p == 2:
        return r <= 4
    if p == 3:
        return r <= 5
    if p == 5:
        return r <= 6
    return r <= p


def classification_report(n, r, p):
    """Verdict plus the evidence path available in this artifact."""
    finite = is_tau_tilting_finite(n, r, p)
    if n == 1 or r <= 1:
        evidence = "semisimple or linear quiver; representation-finite"
    elif n >= 3:
        evidence = ("quiver-level evidence only: contains an acyclic "
                    "square truncation (relations for n >= 3 are out of "
                    "scope); cited classification")
    elif finite:
        if p == 0 or (p >= 2 and r <= p):
            evidence = "path algebra of a linear quiver (no relations)"
        else:
            evidence = "per-sign-region enumeration (all regions finite)"
    else:
        if p == 2:
            base = (5, "bipartite 6-cycle quotient certificate")
        elif p == 3:
            base = (6, "7-vertex star-shaped quotient certificate")
        elif p == 5:
            base = (7, "8-vertex quotient certificate")
        else:
            base = (p + 1, "8-vertex truncation + quotient certificate")
        if r == base[0]:
            evidence = base[1]
        else:
            evidence = ("truncation onto S(2,%d) + %s" % base)
    return {"n": n, "r": r, "p": p, "tau_tilting_finite": finite,
            "evidence": evidence}
