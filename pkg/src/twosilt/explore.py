"""Enumeration of two-term silting complexes and sign-restricted regions.

The Hasse quiver of two-term silting complexes is explored by breadth-first
search along irreducible left mutations, starting from the algebra itself
(full enumeration) or from the maximum of a sign region (restricted
enumeration).  A finite connected component exhausts the poset, so a
closed search is a complete enumeration.

The sign region of a silting complex is the componentwise sign of its
total g-vector; for a sign vector epsilon the region is the interval
between one left mutation of A and one right mutation of A[1], which makes
pruning by sign sound.

Also provided: the reduced algebra A_epsilon (corner quotient carrying the
same sign region), and three verification harnesses transporting a region
to the opposite algebra, along an anti-automorphism, and across a tilting
mutation.
"""

import json
import time
from collections import deque

from .linalg import nullspace
from .algebra import BasedAlgebra, quotient_by_ideal, verify_anti_automorphism
from .complexes import (
    HomCache,
    end_algebra,
    g_matrix,
    is_tilting,
    left_mutation,
    mutate,
    projective_stalks,
    shifted_stalks,
)


class BudgetExhausted(RuntimeError):
    pass


def _is_negative_unit(row):
    return sum(row) == -1 and all(c in (0, -1) for c in row)


def total_g_vector(key):
    """Sum of the rows of a canonical g-matrix key."""
    return tuple(sum(col) for col in zip(*key))


class HasseGraph:
    """Nodes keyed by canonical g-matrix (rows sorted descending); each
    node stores the summand list and the tau-tilting flag (no summand of
    the form P_i -> 0).  Edges are irreducible left mutations labeled by
    the index of the mutated summand."""

    def __init__(self, A):
        self.A = A
        self.nodes = {}
        self.edges = []

    def add_node(self, summands):
        key = g_matrix(summands)
        if key not in self.nodes:
            self.nodes[key] = {
                "summands": summands,
                "tau": not any(_is_negative_unit(row) for row in key),
            }
        return key

    def tau_count(self):
        return sum(1 for node in self.nodes.values() if node["tau"])

    def support_only_count(self):
        return len(self.nodes) - self.tau_count()

    def tau_keys(self):
        return {key for key, node in self.nodes.items() if node["tau"]}


class ExplorationReport:
    def __init__(self, status, node_count, tau_count, seconds,
                 expanded, max_frontier):
        self.status = status  # "complete" or "budget-exhausted"
        self.node_count = node_count
        self.tau_count = tau_count
        self.support_only_count = node_count - tau_count
        self.seconds = seconds
        self.expanded = expanded
        self.max_frontier = max_frontier

    @property
    def complete(self):
        return self.status == "complete"

    def as_dict(self):
        return {
            "status": self.status,
            "nodes": self.node_count,
            "tau_tilting": self.tau_count,
            "support_only": self.support_only_count,
            "seconds": self.seconds,
            "expanded": self.expanded,
            "max_frontier": self.max_frontier,
        }


class _Registry:
    """One canonical object per indecomposable presilting summand, keyed
    by g-vector (which determines a two-term presilting complex up to
    isomorphism), backing a HomCache keyed by object identity."""

    def __init__(self):
        self.by_g = {}
        self.cache = HomCache()

    def canon(self, X):
        g = X.g_vector()
        Y = self.by_g.get(g)
        if Y is None:
            self.by_g[g] = X
            return X
        return Y

    def canon_list(self, summands):
        return [self.canon(X) for X in summands]


def _explore(A, start, budget, epsilon=None, registry=None):
    """BFS along left mutations from `start`; if `epsilon` is given, only
    nodes with that sign region are kept.  Budget bounds the node count."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    reg = registry or _Registry()
    t0 = time.perf_counter()
    graph = HasseGraph(A)
    start = reg.canon_list(sorted(start, key=lambda X: X.g_vector(),
                                  reverse=True))
    key0 = graph.add_node(start)
    queue = deque([key0])
    status = "complete"
    expanded = 0
    max_frontier = 1
    while queue:
        key = queue.popleft()
        summands = graph.nodes[key]["summands"]
        expanded += 1
        for i in range(len(summands)):
            new = mutate(summands, [i], "left", reg.cache)
            if new is None:
                continue
            new = reg.canon_list(new)
            nk = g_matrix(new)
            if epsilon is not None and _region_key(nk) != epsilon:
                continue
            if nk not in graph.nodes:
                if len(graph.nodes) >= budget:
                    status = "budget-exhausted"
                    queue.clear()
                    break
                graph.add_node(new)
                queue.append(nk)
                max_frontier = max(max_frontier, len(queue))
            graph.edges.append((key, nk, i))
        if status == "budget-exhausted":
            break
    report = ExplorationReport(status, len(graph.nodes), graph.tau_count(),
                               time.perf_counter() - t0, expanded,
                               max_frontier)
    return graph, report


def _region_key(gmatrix_key):
    total = total_g_vector(gmatrix_key)
    if any(c == 0 for c in total):
        return None
    return tuple(1 if c > 0 else -1 for c in total)


def sign_region_of(summands):
    """Componentwise sign of the total g-vector of a silting complex."""
    region = _region_key(g_matrix(summands))
    if region is None:
        raise ValueError("total g-vector has a zero entry (not silting)")
    return region


def normalize_epsilon(epsilon, n):
    """Accept [-1, 1] lists, "+"/"-" sequences, or strings like
    "[-,-,+,+]"; return a tuple over {1, -1} of length n."""
    if isinstance(epsilon, str):
        epsilon = [c for c in epsilon if c in "+-"]
    out = []
    for e in epsilon:
        if e in (1, "+", "+1"):
            out.append(1)
        elif e in (-1, "-", "-1"):
            out.append(-1)
        else:
            raise ValueError("bad sign entry %r" % (e,))
    if len(out) != n:
        raise ValueError("sign vector length %d, expected %d"
                         % (len(out), n))
    return tuple(out)


def enumerate_2silt(A, budget=100000):
    """Full BFS enumeration of two-term silting complexes from A."""
    return _explore(A, projective_stalks(A), budget)


def epsilon_bounds(A, epsilon, registry=None):
    """(maximum, minimum) of the sign region: the left mutation of A at
    the negative part and the right mutation of A[1] at the positive
    part."""
    epsilon = normalize_epsilon(epsilon, A.n)
    reg = registry or _Registry()
    neg = [i for i, e in enumerate(epsilon) if e < 0]
    pos = [i for i, e in enumerate(epsilon) if e > 0]
    if not neg:
        upper = lower = reg.canon_list(projective_stalks(A))
        return upper, lower
    if not pos:
        upper = lower = reg.canon_list(shifted_stalks(A))
        return upper, lower
    upper = mutate(projective_stalks(A), neg, "left", reg.cache)
    lower = mutate(shifted_stalks(A), pos, "right", reg.cache)
    if upper is None or lower is None:
        raise AssertionError("mutation of a stalk complex left two terms")
    upper = reg.canon_list(upper)
    lower = reg.canon_list(lower)
    for bound in (upper, lower):
        if sign_region_of(bound) != epsilon:
            raise AssertionError("region bound has the wrong sign vector")
    return upper, lower


def enumerate_2silt_epsilon(A, epsilon, budget=100000):
    """Enumerate the sign region: BFS from the region maximum, pruning any
    neighbor whose total g-vector leaves the region.  On completion the
    region minimum is asserted to be present."""
    epsilon = normalize_epsilon(epsilon, A.n)
    reg = _Registry()
    upper, lower = epsilon_bounds(A, epsilon, reg)
    graph, report = _explore(A, upper, budget, epsilon=epsilon, registry=reg)
    if report.complete and g_matrix(lower) not in graph.nodes:
        raise AssertionError("region minimum missing from the component")
    return graph, report


# --- the reduced algebra A_epsilon -----------------------------------------


def build_A_epsilon(A, epsilon):
    """The triangular reduction of A at a sign vector: restrict the basis
    to the blocks (+,+), (-,-) and (+,-), then factor out the corner
    ideals J_+ (radical elements of e+Ae+ killed by right multiplication
    into e+Ae-) and J_- (dually, by left multiplication)."""
    epsilon = normalize_epsilon(epsilon, A.n)

    def sgn(v):
        return epsilon[v] > 0

    keep = [k for k in range(A.dim)
            if not (not sgn(A.basis_source[k]) and sgn(A.basis_target[k]))]
    sub = _restrict_basis(A, keep)
    mixed = [k for k in range(sub.dim)
             if sgn(sub.basis_source[k]) and not sgn(sub.basis_target[k])]
    gens = []
    for positive in (True, False):
        corner = [k for k in sub.radical_basis()
                  if sgn(sub.basis_source[k]) == positive
                  and sgn(sub.basis_target[k]) == positive]
        if not corner:
            continue
        rows = {}
        for c in corner:
            for m in mixed:
                pair = (c, m) if positive else (m, c)
                for k, coeff in sub.table.get(pair, {}).items():
                    rows.setdefault((m, k), {})[c] = coeff
        for v in nullspace(list(rows.values()), corner,
                           sub.field.one):
            gens.append(dict(v))
    return quotient_by_ideal(sub, gens)


def _restrict_basis(A, keep):
    """Subalgebra of A spanned by the kept basis elements (which must be
    closed under multiplication and contain every idempotent)."""
    remap = {k: i for i, k in enumerate(keep)}
    table = {}
    for (i, j), prod in A.table.items():
        if i in remap and j in remap:
            table[(remap[i], remap[j])] = {remap[k]: c
                                           for k, c in prod.items()}
    gens = {}
    for name, elt in A.generators.items():
        if all(k in remap for k in elt):
            gens[name] = {remap[k]: c for k, c in elt.items()}
    return BasedAlgebra(
        A.field, A.vertex_labels,
        [A.basis_source[k] for k in keep],
        [A.basis_target[k] for k in keep],
        [A.basis_names[k] for k in keep],
        [remap[A.idem[v]] for v in range(A.n)],
        table, gens)


def source_sink_simplify(A, epsilon):
    """Build A_epsilon and report which vertices became isolated; sources
    of the quiver of A carrying a minus sign and sinks carrying a plus
    sign are always among them."""
    epsilon = normalize_epsilon(epsilon, A.n)
    reduced = build_A_epsilon(A, epsilon)
    m_orig = A.arrow_matrix()
    m_red = reduced.arrow_matrix()
    isolated = [v for v in range(A.n)
                if not any(m_red[v]) and not any(row[v] for row in m_red)]
    predicted = []
    for v in range(A.n):
        is_source = not any(row[v] for row in m_orig)
        is_sink = not any(m_orig[v])
        if (is_source and epsilon[v] < 0) or (is_sink and epsilon[v] > 0):
            predicted.append(v)
    return {
        "algebra": reduced,
        "isolated": isolated,
        "predicted_isolated": predicted,
        "predicted_ok": all(v in isolated for v in predicted),
    }


# --- transport harnesses ----------------------------------------------------


def duality_transport(A, epsilon, budget=100000):
    """Check the duality bijection: the region epsilon over A matches the
    region -epsilon over the opposite algebra, with every g-matrix negated
    row by row."""
    epsilon = normalize_epsilon(epsilon, A.n)
    minus = tuple(-e for e in epsilon)
    g1, r1 = enumerate_2silt_epsilon(A, epsilon, budget)
    g2, r2 = enumerate_2silt_epsilon(A.opposite(), minus, budget)
    if not (r1.complete and r2.complete):
        raise BudgetExhausted("duality transport: enumeration inconclusive")
    image = {tuple(sorted((tuple(-c for c in row) for row in key),
                          reverse=True))
             for key in g1.nodes}
    ok = image == set(g2.nodes.keys())
    return {
        "pass": ok,
        "count": len(g1.nodes),
        "opposite_count": len(g2.nodes),
        "epsilon": epsilon,
    }


def sigma_transport(A, perm, epsilon, budget=100000):
    """Check the anti-automorphism symmetry: perm must extend to an
    anti-automorphism of A; the region epsilon then has the same size as
    the region epsilon' = -perm(epsilon), and A_epsilon is the opposite
    of A_epsilon' (compared via dimension tables)."""
    epsilon = normalize_epsilon(epsilon, A.n)
    if not verify_anti_automorphism(A, perm):
        raise ValueError("permutation does not give an anti-automorphism")
    eps_prime = tuple(-epsilon[perm[i]] for i in range(A.n))
    g1, r1 = enumerate_2silt_epsilon(A, epsilon, budget)
    g2, r2 = enumerate_2silt_epsilon(A, eps_prime, budget)
    if not (r1.complete and r2.complete):
        raise BudgetExhausted("sigma transport: enumeration inconclusive")
    d1 = build_A_epsilon(A, epsilon).dim_table()
    d2 = build_A_epsilon(A, eps_prime).dim_table()
    tables_ok = all(d1[u][v] == d2[perm[v]][perm[u]]
                    for u in range(A.n) for v in range(A.n))
    return eps_prime, {
        "pass": len(g1.nodes) == len(g2.nodes) and tables_ok,
        "count": len(g1.nodes),
        "image_count": len(g2.nodes),
        "dim_tables_match": tables_ok,
    }


def tilting_mutation(A, i, cache=None):
    """The left mutation of A at P_i as an ordered summand list (stalk P_j
    in position j, the mutated complex in position i), with its g-matrix
    in vertex order."""
    stalks = projective_stalks(A)
    others = [stalks[j] for j in range(A.n) if j != i]
    new = left_mutation(stalks[i], others, cache)
    if new is None or len(new) != 1:
        raise AssertionError("mutation at one projective is one summand")
    summands = list(stalks)
    summands[i] = new[0]
    G = [summands[j].g_vector() for j in range(A.n)]
    return summands, G


def _integer_inverse(G):
    """Exact inverse of an integer matrix with determinant +-1."""
    from fractions import Fraction
    n = len(G)
    M = [[Fraction(G[r][c]) for c in range(n)]
         + [Fraction(1 if c == r else 0) for c in range(n)]
         for r in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        scale = M[col][col]
        M[col] = [x / scale for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    inv = [[M[r][n + c] for c in range(n)] for r in range(n)]
    assert all(x.denominator == 1 for row in inv for x in row)
    return [[int(x) for x in row] for row in inv]


def tilting_transport(A, i, sign_set, budget=100000):
    """Check the tilting transport: when T = left mutation of A at P_i is
    tilting with endomorphism algebra B, right multiplication by G(T)
    carries each region in `sign_set` (every member must have a minus in
    position i) bijectively onto a region over B, matching total
    g-vectors."""
    cache = HomCache()
    summands, G = tilting_mutation(A, i, cache)
    if not is_tilting(summands):
        raise ValueError("mutation at vertex %d is not tilting" % i)
    B = end_algebra(summands)
    results = []
    for epsilon in sign_set:
        epsilon = normalize_epsilon(epsilon, A.n)
        if epsilon[i] >= 0:
            raise ValueError("transported sign vectors need a minus at %d"
                             % i)
        gA, rA = enumerate_2silt_epsilon(A, epsilon, budget)
        images = set()
        image_regions = set()
        for key in gA.nodes:
            total = total_g_vector(key)
            img = tuple(sum(total[j] * G[j][k] for j in range(A.n))
                        for k in range(A.n))
            images.add(img)
            image_regions.add(tuple(1 if c > 0 else -1 for c in img))
        if len(image_regions) != 1:
            raise AssertionError("transported region is not constant")
        eps_image = next(iter(image_regions))
        gB, rB = enumerate_2silt_epsilon(B, eps_image, budget)
        if not (rA.complete and rB.complete):
            raise BudgetExhausted("tilting transport: inconclusive")
        targets = {total_g_vector(key) for key in gB.nodes}
        record = {
            "epsilon": epsilon,
            "epsilon_image": eps_image,
            "count": len(gA.nodes),
            "image_count": len(gB.nodes),
            "pass": images == targets,
            "image_subset": images <= targets,
        }
        # The sharper, always-true statement is a bijection on the union
        # over all sign vectors with a minus in position i: any totals of
        # the B-region not hit from this A-region must be hit from
        # companion A-regions (minus at i) under the same G.
        missing = targets - images
        record["missing_count"] = len(missing)
        Ginv = _integer_inverse(G)
        companions = {}
        union_ok = record["image_subset"]
        for m in missing:
            pre = tuple(sum(m[j] * Ginv[j][k] for j in range(A.n))
                        for k in range(A.n))
            reg = tuple(1 if c > 0 else -1 if c < 0 else 0 for c in pre)
            if 0 in reg or reg[i] != -1:
                union_ok = False
                continue
            companions.setdefault(reg, set()).add(pre)
        for reg, pres in sorted(companions.items()):
            gC, rC = enumerate_2silt_epsilon(A, reg, budget)
            totals = {total_g_vector(key) for key in gC.nodes}
            if not (rC.complete and pres <= totals):
                union_ok = False
        record["companion_regions"] = sorted(companions)
        record["union_pass"] = union_ok
        results.append(record)
    return {
        "g_matrix": G,
        "tilting": True,
        "regions": results,
        "pass": all(rec["pass"] for rec in results),
    }


# --- fixtures ---------------------------------------------------------------


def canonical_gmatrix(rows):
    return tuple(sorted((tuple(int(c) for c in row) for row in rows),
                        reverse=True))


def verify_fixture(fixture, resolve_algebra=None):
    """Run the construction + enumeration named by a fixture (a dict or a
    path to a JSON file) and compare counts and, when present, expected
    g-matrix row multisets.  Returns a report dict with "pass"."""
    if isinstance(fixture, str):
        with open(fixture) as fh:
            fixture = json.load(fh)
    if resolve_algebra is None:
        from .catalog import resolve_algebra
    A = resolve_algebra(fixture["algebra"])
    budget = fixture.get("budget", 100000)
    if "epsilon" in fixture and fixture["epsilon"] is not None:
        epsilon = normalize_epsilon(fixture["epsilon"], A.n)
        graph, rep = enumerate_2silt_epsilon(A, epsilon, budget)
    else:
        graph, rep = enumerate_2silt(A, budget)
    report = {
        "algebra": fixture["algebra"],
        "epsilon": fixture.get("epsilon"),
        "status": rep.status,
        "count": len(graph.nodes),
        "tau_count": graph.tau_count(),
        "pass": True,
    }
    if rep.status != "complete":
        report["pass"] = False
        report["reason"] = "budget exhausted (inconclusive)"
        return report

    def fail(reason):
        report["pass"] = False
        report.setdefault("reason", reason)

    if "expect_count" in fixture and report["count"] != fixture["expect_count"]:
        fail("node count %d != expected %d"
             % (report["count"], fixture["expect_count"]))
    if ("expect_tau_count" in fixture
            and report["tau_count"] != fixture["expect_tau_count"]):
        fail("tau count %d != expected %d"
             % (report["tau_count"], fixture["expect_tau_count"]))
    if "expect_gmatrices" in fixture:
        expected = {canonical_gmatrix(m) for m in fixture["expect_gmatrices"]}
        got = graph.tau_keys() if fixture.get("tau_only") else set(graph.nodes)
        if expected != got:
            diff = sorted(expected.symmetric_difference(got))[0]
            fail("g-matrix mismatch, first difference: %s" % (diff,))
    return report
