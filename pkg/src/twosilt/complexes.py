"""Two-term complexes of projectives and silting mutation.

A two-term complex is P^{-1} -> P^0 with both terms finite direct sums of
indecomposable projectives P_v = e_v A (right modules).  A map P_u -> P_v
is left multiplication by an element of e_v A e_u, i.e. a basis element
tagged with source v and target u; composition of maps corresponds to the
algebra product in the same order (g o f <-> a_g * a_f).  Differentials
and chain-map components are matrices whose rows index the target's
summands and whose columns index the source's summands.

Everything is computed in the homotopy category: hom spaces are chain
maps modulo null-homotopic ones, mutation takes cones over minimal
approximations and reduces them to minimal (direct-summand-free)
representatives via the Gaussian elimination lemma.
"""

from .algebra import BasedAlgebra
from .linalg import Echelon, nullspace, vec_add_scaled, vec_scale


class TwoTermComplex:
    """A complex P^{-1} -> P^0 concentrated in degrees -1 and 0."""

    __slots__ = ("A", "deg0", "degm1", "d", "_g")

    def __init__(self, A, deg0, degm1, d):
        self.A = A
        self.deg0 = tuple(deg0)    # vertex index of each degree-0 summand
        self.degm1 = tuple(degm1)  # vertex index of each degree -1 summand
        self.d = d                 # len(deg0) x len(degm1) element matrix
        self._g = None

    @classmethod
    def stalk(cls, A, v):
        """The projective P_v in degree 0."""
        return cls(A, [v], [], [[]])

    @classmethod
    def shifted_stalk(cls, A, v):
        """The projective P_v in degree -1 (i.e. P_v[1])."""
        return cls(A, [], [v], [])

    def g_vector(self):
        """Class in K_0: multiplicity of [P_v] in [P^0] - [P^-1]."""
        if self._g is None:
            g = [0] * self.A.n
            for v in self.deg0:
                g[v] += 1
            for v in self.degm1:
                g[v] -= 1
            self._g = tuple(g)
        return self._g

    def size(self):
        return len(self.deg0) + len(self.degm1)

    def direct_sum(self, other):
        n0, m0 = len(self.deg0), len(other.deg0)
        n1, m1 = len(self.degm1), len(other.degm1)
        d = [[{} for _ in range(n1 + m1)] for _ in range(n0 + m0)]
        for r in range(n0):
            for c in range(n1):
                d[r][c] = dict(self.d[r][c])
        for r in range(m0):
            for c in range(m1):
                d[n0 + r][n1 + c] = dict(other.d[r][c])
        return TwoTermComplex(self.A, self.deg0 + other.deg0,
                              self.degm1 + other.degm1, d)

    def __repr__(self):
        lab = self.A.vertex_labels
        p0 = "+".join("P%s" % lab[v] for v in self.deg0) or "0"
        p1 = "+".join("P%s" % lab[v] for v in self.degm1) or "0"
        return "(%s -> %s)" % (p1, p0)


def direct_sum_all(A, pieces):
    total = TwoTermComplex(A, [], [], [])
    for p in pieces:
        total = total.direct_sum(p)
    return total


def mat_mul(A, X, Y):
    """Product of element matrices (composition of maps in the same order)."""
    rows = len(X)
    inner = len(Y)
    cols = len(Y[0]) if inner else 0
    out = [[{} for _ in range(cols)] for _ in range(rows)]
    for r in range(rows):
        Xr = X[r]
        for m in range(inner):
            x = Xr[m]
            if not x:
                continue
            Ym = Y[m]
            for c in range(cols):
                y = Ym[c]
                if y:
                    vec_add_scaled(out[r][c], A.mul(x, y), A.field.one)
    return out


# --- hom spaces in the homotopy category ---------------------------------


def _matrix_vars(A, tgt, src, tag):
    """Flattened coordinates of the space of maps P(src) -> P(tgt):
    one (tag, r, c, k) per basis element k of e_{tgt[r]} A e_{src[c]}."""
    out = []
    for r, vr in enumerate(tgt):
        for c, vc in enumerate(src):
            for k in A.block(vr, vc):
                out.append((tag, r, c, k))
    return out


def _flatten_matrix(mat, tag, out=None):
    if out is None:
        out = {}
    for r, row in enumerate(mat):
        for c, elt in enumerate(row):
            for k, coeff in elt.items():
                out[(tag, r, c, k)] = coeff
    return out


def _unflatten(vec, tag, nrows, ncols):
    mat = [[{} for _ in range(ncols)] for _ in range(nrows)]
    for (t, r, c, k), coeff in vec.items():
        if t == tag:
            mat[r][c][k] = coeff
    return mat


def chain_map_kernel(S, T):
    """Basis of chain maps S -> T as flattened vectors with coordinates
    ("0", r, c, k) for the degree-0 component and ("m", r, c, k) for the
    degree -1 component."""
    A = S.A
    vars0 = _matrix_vars(A, T.deg0, S.deg0, "0")
    varsm = _matrix_vars(A, T.degm1, S.degm1, "m")
    rows = {}

    def constrain(var, r, c, elt, sign):
        for k, coeff in elt.items():
            key = (r, c, k)
            row = rows.setdefault(key, {})
            cur = row.get(var, A.field.zero) + sign * coeff
            if cur:
                row[var] = cur
            else:
                row.pop(var, None)

    # f0 . d_S - d_T . fm1 = 0 on each (r in T.deg0, c in S.degm1)
    one = A.field.one
    for (tag, r, m, k) in vars0:
        bk = {k: one}
        for c in range(len(S.degm1)):
            y = S.d[m][c]
            if y:
                constrain((tag, r, m, k), r, c, A.mul(bk, y), one)
    for (tag, m, c, k) in varsm:
        bk = {k: one}
        for r in range(len(T.deg0)):
            x = T.d[r][m]
            if x:
                constrain((tag, m, c, k), r, c, A.mul(x, bk), -one)
    return nullspace(list(rows.values()), vars0 + varsm, A.field.one)


def homotopy_boundaries(S, T):
    """Flattened null-homotopic chain maps S -> T: (d_T.h, h.d_S) for the
    elementary homotopies h: S^0 -> T^{-1}."""
    A = S.A
    one = A.field.one
    out = []
    for m, vm in enumerate(T.degm1):
        for c, vc in enumerate(S.deg0):
            for k in A.block(vm, vc):
                bk = {k: one}
                vec = {}
                for r in range(len(T.deg0)):
                    x = T.d[r][m]
                    if x:
                        for kk, coeff in A.mul(x, bk).items():
                            vec[("0", r, c, kk)] = coeff
                for cc in range(len(S.degm1)):
                    y = S.d[c][cc]
                    if y:
                        for kk, coeff in A.mul(bk, y).items():
                            vec[("m", m, cc, kk)] = coeff
                if vec:
                    out.append(vec)
    return out


def hom_dim(S, T, shift=0):
    """dim Hom(S, T[shift]) in the homotopy category, shift in {-1, 0, 1}."""
    A = S.A
    one = A.field.one
    if shift == 0:
        kernel = chain_map_kernel(S, T)
        ech = Echelon()
        for b in homotopy_boundaries(S, T):
            ech.add(b)
        return sum(1 for v in kernel if ech.add(v) is not None)
    if shift == 1:
        # all maps S^{-1} -> T^0 are chain maps; boundaries are
        # d_T.h (h: S^{-1} -> T^{-1}) and h'.d_S (h': S^0 -> T^0)
        total = sum(len(A.block(vr, vc))
                    for vr in T.deg0 for vc in S.degm1)
        ech = Echelon()
        for m, vm in enumerate(T.degm1):
            for c, vc in enumerate(S.degm1):
                for k in A.block(vm, vc):
                    bk = {k: one}
                    vec = {}
                    for r in range(len(T.deg0)):
                        x = T.d[r][m]
                        if x:
                            for kk, coeff in A.mul(x, bk).items():
                                vec[("s", r, c, kk)] = coeff
                    if vec:
                        ech.add(vec)
        for r, vr in enumerate(T.deg0):
            for c0, vc in enumerate(S.deg0):
                for k in A.block(vr, vc):
                    bk = {k: one}
                    vec = {}
                    for c in range(len(S.degm1)):
                        y = S.d[c0][c]
                        if y:
                            for kk, coeff in A.mul(bk, y).items():
                                vec[("s", r, c, kk)] = coeff
                    if vec:
                        ech.add(vec)
        return total - ech.dim
    if shift == -1:
        # maps f: S^0 -> T^{-1} with d_T.f = 0 and f.d_S = 0; no homotopies
        vars_ = _matrix_vars(A, T.degm1, S.deg0, "s")
        rows = {}
        for (tag, m, c0, k) in vars_:
            bk = {k: one}
            for r in range(len(T.deg0)):
                x = T.d[r][m]
                if x:
                    for kk, coeff in A.mul(x, bk).items():
                        rows.setdefault(("u", r, c0, kk), {})[
                            (tag, m, c0, k)] = coeff
            for c in range(len(S.degm1)):
                y = S.d[c0][c]
                if y:
                    for kk, coeff in A.mul(bk, y).items():
                        rows.setdefault(("l", m, c, kk), {})[
                            (tag, m, c0, k)] = coeff
        return len(nullspace(list(rows.values()), vars_, A.field.one))
    raise ValueError("shift must be -1, 0 or 1")


# --- generic bounded complexes and minimization ---------------------------


class BoundedComplex:
    """A bounded complex of projectives given by summand vertex lists per
    degree and differentials d[k]: C^k -> C^{k+1}."""

    def __init__(self, A, summands, diffs):
        self.A = A
        self.summands = {k: list(v) for k, v in summands.items() if v}
        self.diffs = diffs  # k -> matrix rows=summands[k+1], cols=summands[k]

    def degrees(self):
        return sorted(self.summands.keys())


def _corner_inverse(A, u, v):
    """Inverse of a unit u in the local corner algebra e_v A e_v."""
    e = A.idem[v]
    c = u.get(e)
    if not c:
        raise ValueError("element is not invertible")
    one = A.field.one
    n = {k: val for k, val in u.items() if k != e}
    inv = {}
    term = {e: one}
    minus = -(one / c)
    while term:
        vec_add_scaled(inv, term, one / c)
        term = vec_scale(A.mul(term, n), minus)
    return inv


def minimize(cx):
    """Strip contractible summands via the Gaussian elimination lemma.

    An entry u of d_k at (row b, col a) with equal source and target vertex
    and nonzero idempotent coefficient is an isomorphism P -> P; cancelling
    it replaces d_k by its Schur complement and simply drops the matching
    row of d_{k-1} and column of d_{k+1}."""
    A = cx.A
    summands = {k: list(v) for k, v in cx.summands.items()}
    diffs = {k: [[dict(e) for e in row] for row in m]
             for k, m in cx.diffs.items()}
    while True:
        hit = None
        for k in sorted(diffs):
            mat = diffs[k]
            low = summands.get(k, [])
            high = summands.get(k + 1, [])
            for b in range(len(high)):
                for a in range(len(low)):
                    if low[a] != high[b]:
                        continue
                    u = mat[b][a]
                    if u.get(A.idem[low[a]]):
                        hit = (k, b, a, u)
                        break
                if hit:
                    break
            if hit:
                break
        if hit is None:
            break
        k, b, a, u = hit
        uinv = _corner_inverse(A, u, summands[k][a])
        mat = diffs[k]
        nrows, ncols = len(summands[k + 1]), len(summands[k])
        for r in range(nrows):
            if r == b or not mat[r][a]:
                continue
            left = A.mul(mat[r][a], uinv)
            for c in range(ncols):
                if c == a or not mat[b][c]:
                    continue
                vec_add_scaled(mat[r][c], A.mul(left, mat[b][c]),
                               -A.field.one)
        diffs[k] = [[mat[r][c] for c in range(ncols) if c != a]
                    for r in range(nrows) if r != b]
        if k - 1 in diffs:
            diffs[k - 1] = [row for r, row in enumerate(diffs[k - 1])
                            if r != a]
        if k + 1 in diffs:
            diffs[k + 1] = [[e for c, e in enumerate(row) if c != b]
                            for row in diffs[k + 1]]
        summands[k].pop(a)
        summands[k + 1].pop(b)
        for kk in (k, k + 1):
            if not summands[kk]:
                del summands[kk]
    return BoundedComplex(A, summands, diffs)


def to_two_term(cx):
    """View a minimized bounded complex supported in degrees {-1, 0} as a
    TwoTermComplex; returns None if other degrees survive."""
    for k in cx.summands:
        if k not in (-1, 0):
            return None
    deg0 = cx.summands.get(0, [])
    degm1 = cx.summands.get(-1, [])
    d = cx.diffs.get(-1)
    if d is None:
        d = [[{} for _ in degm1] for _ in deg0]
    return TwoTermComplex(cx.A, deg0, degm1, d)


def split_indecomposables(T):
    """Split a two-term complex with no contractible summands into
    connected components of its nonzero-entry graph.  Components are
    indecomposable for the complexes arising here (minimal cones over
    approximations between indecomposables)."""
    n0, n1 = len(T.deg0), len(T.degm1)
    parent = list(range(n0 + n1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    for r in range(n0):
        for c in range(n1):
            if T.d[r][c]:
                union(r, n0 + c)
    comps = {}
    for r in range(n0):
        comps.setdefault(find(r), ([], []))[0].append(r)
    for c in range(n1):
        comps.setdefault(find(n0 + c), ([], []))[1].append(c)
    out = []
    for rows, cols in comps.values():
        d = [[dict(T.d[r][c]) for c in cols] for r in rows]
        out.append(TwoTermComplex(T.A, [T.deg0[r] for r in rows],
                                  [T.degm1[c] for c in cols], d))
    out.sort(key=lambda X: X.g_vector(), reverse=True)
    return out


# --- endomorphism rings and radicals --------------------------------------


def _identity_chain_map(T):
    vec = {}
    one = T.A.field.one
    for r, v in enumerate(T.deg0):
        vec[("0", r, r, T.A.idem[v])] = one
    for r, v in enumerate(T.degm1):
        vec[("m", r, r, T.A.idem[v])] = one
    return vec


def _compose_chain_vecs(S, M, T, g, f):
    """Composition g o f of chain maps f: S -> M, g: M -> T (flattened)."""
    A = S.A
    f0 = _unflatten(f, "0", len(M.deg0), len(S.deg0))
    fm = _unflatten(f, "m", len(M.degm1), len(S.degm1))
    g0 = _unflatten(g, "0", len(T.deg0), len(M.deg0))
    gm = _unflatten(g, "m", len(T.degm1), len(M.degm1))
    out = _flatten_matrix(mat_mul(A, g0, f0), "0")
    return _flatten_matrix(mat_mul(A, gm, fm), "m", out)


def _quotient_reps(kernel, boundaries):
    """Chain maps among `kernel` whose classes form a basis of
    kernel-span / boundary-span; also returns the tracking echelon for
    expressing arbitrary vectors in those classes."""
    ech = Echelon(track=True)
    for b in boundaries:
        ech.add(b)  # boundaries are congruent to zero: no label
    reps = []
    for vec in kernel:
        if ech.add(vec, label=len(reps)) is not None:
            reps.append(vec)
    return reps, ech


def hom_quotient_reps(S, T):
    return _quotient_reps(chain_map_kernel(S, T), homotopy_boundaries(S, T))


def end_radical_reps(Y):
    """Chain maps spanning the radical of End(Y) in the homotopy category.

    Uses the trace form of the regular representation (exact in
    characteristic zero); in positive characteristic the trace-form kernel
    is verified to be a nilpotent ideal (hence equal to the radical), and
    a failure raises NotImplementedError.
    """
    reps, ech = hom_quotient_reps(Y, Y)
    d = len(reps)
    if d == 0:
        return []
    field = Y.A.field

    def express(vec):
        res, expr = ech.reduce_tracked(vec)
        if res:
            raise AssertionError("composition left the endomorphism ring")
        return expr

    # structure constants: reps[i] o reps[j] = sum_k c_ijk reps[k]
    mult = [[express(_compose_chain_vecs(Y, Y, Y, reps[i], reps[j]))
             for j in range(d)] for i in range(d)]

    def left_mult_matrix(x):
        # x a dict index -> coeff; returns L_x as dense d x d
        L = [[field.zero] * d for _ in range(d)]
        for i, ci in x.items():
            for j in range(d):
                for k, c in mult[i][j].items():
                    L[k][j] = L[k][j] + ci * c
        return L

    basis_L = [left_mult_matrix({i: field.one}) for i in range(d)]
    # trace form: T[i][j] = tr(L_{e_i e_j}) = tr(L_{e_i} L_{e_j})
    rows = []
    for i in range(d):
        row = {}
        Li = basis_L[i]
        for j in range(d):
            Lj = basis_L[j]
            t = field.zero
            for a in range(d):
                for b in range(d):
                    t = t + Li[a][b] * Lj[b][a]
            if t:
                row[j] = t
        rows.append(row)
    kern = nullspace(rows, list(range(d)), field.one)
    if field.characteristic != 0 and kern:
        # The trace-form kernel always contains the radical; equality holds
        # once the kernel is shown to be a nilpotent ideal.
        span = Echelon()
        for v in kern:
            span.add(dict(v))

        def times_basis(x, i, on_left):
            prod = {}
            for j, cj in x.items():
                vec_add_scaled(prod, mult[i][j] if on_left else mult[j][i],
                               cj)
            return prod

        for v in kern:
            for i in range(d):
                for on_left in (True, False):
                    prod = times_basis(v, i, on_left)
                    if prod and not span.contains(prod):
                        raise NotImplementedError(
                            "radical computation failed in positive "
                            "characteristic")
        layer = [dict(v) for v in kern]
        for _ in range(d + 1):
            if not layer:
                break
            nxt = []
            for x in layer:
                for v in kern:
                    prod = {}
                    for i, ci in x.items():
                        for j, cj in v.items():
                            vec_add_scaled(prod, mult[i][j], ci * cj)
                    if prod:
                        nxt.append(prod)
            layer = nxt
        if layer:
            raise NotImplementedError(
                "radical computation failed in positive characteristic")
    out = []
    for v in kern:
        vec = {}
        for i, c in v.items():
            vec_add_scaled(vec, reps[i], c)
        out.append(vec)
    return out


def local_residue_dim(Y):
    """dim_K of End(Y)/rad End(Y) for an indecomposable complex Y."""
    reps, _ = hom_quotient_reps(Y, Y)
    return len(reps) - len(end_radical_reps(Y))


# --- minimal approximations and mutation -----------------------------------


class HomCache:
    """Memoizes hom computations between complexes compared by object
    identity.  Callers must reuse summand objects (e.g. keep one canonical
    representative per g-vector, valid for presilting complexes) for the
    cache to take effect."""

    def __init__(self):
        self._kernel = {}
        self._rad = {}
        self._res = {}
        self._hom1 = {}
        self._keep = []  # keeps cached complexes alive while ids are keys

    def kernel(self, S, T):
        key = (id(S), id(T))
        if key not in self._kernel:
            self._keep.append((S, T))
            self._kernel[key] = chain_map_kernel(S, T)
        return self._kernel[key]

    def radical(self, Y):
        key = id(Y)
        if key not in self._rad:
            self._keep.append(Y)
            self._rad[key] = end_radical_reps(Y)
        return self._rad[key]

    def residue(self, Y):
        key = id(Y)
        if key not in self._res:
            self._keep.append(Y)
            self._res[key] = local_residue_dim(Y)
        return self._res[key]

    def hom1(self, S, T):
        key = (id(S), id(T))
        if key not in self._hom1:
            self._keep.append((S, T))
            self._hom1[key] = hom_dim(S, T, 1)
        return self._hom1[key]


def minimal_left_approximation(X, targets, cache=None):
    """Minimal left add(Y)-approximation of X, Y = direct sum of `targets`
    (indecomposable, pairwise non-isomorphic two-term complexes).

    Returns (Y_sum, pi0, pim1): the approximation target as a direct sum
    (with multiplicities) and the chain-map components X -> Y_sum.
    """
    A = X.A
    kern = cache.kernel if cache else chain_map_kernel
    chosen = []  # list of (target, chain map vec)
    homs = [kern(X, Y) for Y in targets]
    for j, Yj in enumerate(targets):
        ech = Echelon()
        for b in homotopy_boundaries(X, Yj):
            ech.add(b)
        # radical factorizations: rho o psi, psi: X -> Y_k, rho in
        # rad(Y_k, Y_j); for k != j every map is radical
        for k, Yk in enumerate(targets):
            if k == j:
                rads = cache.radical(Yj) if cache else end_radical_reps(Yj)
            else:
                rads = kern(Yk, Yj)
            if not rads:
                continue
            for psi in homs[k]:
                for rho in rads:
                    ech.add(_compose_chain_vecs(X, Yk, Yj, rho, psi))
        picked = []
        for phi in homs[j]:
            if ech.add(phi) is not None:
                picked.append(phi)
        if picked:
            div = cache.residue(Yj) if cache else local_residue_dim(Yj)
            if div != 1:
                if len(picked) % div:
                    raise AssertionError("inconsistent multiplicity")
                raise NotImplementedError(
                    "approximations over non-split endomorphism rings")
            chosen.extend((Yj, phi) for phi in picked)
    Y_sum = direct_sum_all(A, [Yj for Yj, _ in chosen])
    pi0 = [[{} for _ in X.deg0] for _ in Y_sum.deg0]
    pim1 = [[{} for _ in X.degm1] for _ in Y_sum.degm1]
    off0 = offm = 0
    for Yj, phi in chosen:
        f0 = _unflatten(phi, "0", len(Yj.deg0), len(X.deg0))
        fm = _unflatten(phi, "m", len(Yj.degm1), len(X.degm1))
        for r in range(len(Yj.deg0)):
            for c in range(len(X.deg0)):
                pi0[off0 + r][c] = f0[r][c]
        for r in range(len(Yj.degm1)):
            for c in range(len(X.degm1)):
                pim1[offm + r][c] = fm[r][c]
        off0 += len(Yj.deg0)
        offm += len(Yj.degm1)
    return Y_sum, pi0, pim1


def minimal_right_approximation(X, sources, cache=None):
    """Minimal right add(Y)-approximation Y' -> X, dual to the left case."""
    A = X.A
    kern = cache.kernel if cache else chain_map_kernel
    chosen = []
    homs = [kern(Y, X) for Y in sources]
    for j, Yj in enumerate(sources):
        ech = Echelon()
        for b in homotopy_boundaries(Yj, X):
            ech.add(b)
        # radical factorizations psi o rho with rho in rad(Y_j, Y_k)
        for k, Yk in enumerate(sources):
            if k == j:
                rads = cache.radical(Yj) if cache else end_radical_reps(Yj)
            else:
                rads = kern(Yj, Yk)
            if not rads:
                continue
            for psi in homs[k]:
                for rho in rads:
                    ech.add(_compose_chain_vecs(Yj, Yk, X, psi, rho))
        picked = []
        for phi in homs[j]:
            if ech.add(phi) is not None:
                picked.append(phi)
        if picked:
            div = cache.residue(Yj) if cache else local_residue_dim(Yj)
            if div != 1:
                raise NotImplementedError(
                    "approximations over non-split endomorphism rings")
            chosen.extend((Yj, phi) for phi in picked)
    Y_sum = direct_sum_all(A, [Yj for Yj, _ in chosen])
    rho0 = [[{} for _ in Y_sum.deg0] for _ in X.deg0]
    rhom1 = [[{} for _ in Y_sum.degm1] for _ in X.degm1]
    off0 = offm = 0
    for Yj, phi in chosen:
        f0 = _unflatten(phi, "0", len(X.deg0), len(Yj.deg0))
        fm = _unflatten(phi, "m", len(X.degm1), len(Yj.degm1))
        for r in range(len(X.deg0)):
            for c in range(len(Yj.deg0)):
                rho0[r][off0 + c] = f0[r][c]
        for r in range(len(X.degm1)):
            for c in range(len(Yj.degm1)):
                rhom1[r][offm + c] = fm[r][c]
        off0 += len(Yj.deg0)
        offm += len(Yj.degm1)
    return Y_sum, rho0, rhom1


def left_mutation(X, targets, cache=None):
    """Replace X by the minimal cone over its minimal left approximation
    into add(targets).  Returns the list of indecomposable summands of the
    new complex, or None if the cone fails to be two-term."""
    A = X.A
    Y, pi0, pim1 = minimal_left_approximation(X, targets, cache)
    # cone: C^0 = Y^0, C^{-1} = X^0 + Y^{-1}, C^{-2} = X^{-1}
    n_x0, n_ym = len(X.deg0), len(Y.degm1)
    dm1 = [[{} for _ in range(n_x0 + n_ym)] for _ in Y.deg0]
    for r in range(len(Y.deg0)):
        for c in range(n_x0):
            dm1[r][c] = dict(pi0[r][c])
        for c in range(n_ym):
            dm1[r][n_x0 + c] = dict(Y.d[r][c])
    dm2 = [[{} for _ in X.degm1] for _ in range(n_x0 + n_ym)]
    minus = -A.field.one
    for r in range(n_x0):
        for c in range(len(X.degm1)):
            dm2[r][c] = vec_scale(X.d[r][c], minus)
    for r in range(n_ym):
        for c in range(len(X.degm1)):
            dm2[n_x0 + r][c] = dict(pim1[r][c])
    cx = BoundedComplex(A, {-2: list(X.degm1),
                            -1: list(X.deg0) + list(Y.degm1),
                            0: list(Y.deg0)},
                        {-2: dm2, -1: dm1})
    two = to_two_term(minimize(cx))
    if two is None:
        return None
    return split_indecomposables(two)


def right_mutation(X, sources, cache=None):
    """Replace X by the minimal cocone over its minimal right approximation
    from add(sources); None if the cocone fails to be two-term."""
    A = X.A
    Y, rho0, rhom1 = minimal_right_approximation(X, sources, cache)
    # cocone W: W^{-1} = Y^{-1}, W^0 = Y^0 + X^{-1}, W^1 = X^0
    n_y0, n_xm = len(Y.deg0), len(X.degm1)
    dm1 = [[{} for _ in Y.degm1] for _ in range(n_y0 + n_xm)]
    for r in range(n_y0):
        for c in range(len(Y.degm1)):
            dm1[r][c] = dict(Y.d[r][c])
    minus = -A.field.one
    for r in range(n_xm):
        for c in range(len(Y.degm1)):
            dm1[n_y0 + r][c] = vec_scale(rhom1[r][c], minus)
    d0 = [[{} for _ in range(n_y0 + n_xm)] for _ in X.deg0]
    for r in range(len(X.deg0)):
        for c in range(n_y0):
            d0[r][c] = dict(rho0[r][c])
        for c in range(n_xm):
            d0[r][n_y0 + c] = dict(X.d[r][c])
    cx = BoundedComplex(A, {-1: list(Y.degm1),
                            0: list(Y.deg0) + list(X.degm1),
                            1: list(X.deg0)},
                        {-1: dm1, 0: d0})
    mini = minimize(cx)
    if 1 in mini.summands:
        return None
    return split_indecomposables(to_two_term(mini))


def mutate(summands, indices, direction="left", cache=None):
    """Mutate a silting complex (list of indecomposable summands) at the
    given summand index set.  Returns the new sorted summand list, or None
    if some mutated summand leaves the two-term world."""
    idx = set(indices)
    moving = [summands[i] for i in sorted(idx)]
    fixed = [Xk for i, Xk in enumerate(summands) if i not in idx]
    out = list(fixed)
    for X in moving:
        if direction == "left":
            new = left_mutation(X, fixed, cache)
        else:
            new = right_mutation(X, fixed, cache)
        if new is None:
            return None
        out.extend(new)
    out.sort(key=lambda Z: Z.g_vector(), reverse=True)
    return out


# --- silting predicates -----------------------------------------------------


def is_presilting(summands, cache=None):
    hom1 = cache.hom1 if cache else (lambda X, Y: hom_dim(X, Y, 1))
    return all(hom1(X, Y) == 0 for X in summands for Y in summands)


def is_silting(summands, cache=None):
    """Two-term silting: presilting with |A| pairwise non-isomorphic
    indecomposable summands (which is equivalent to generating)."""
    if not summands:
        return False
    A = summands[0].A
    gs = [X.g_vector() for X in summands]
    if len(set(gs)) != len(gs) or len(gs) != A.n:
        return False
    return is_presilting(summands, cache)


def is_tilting(summands):
    return is_silting(summands) and all(
        hom_dim(X, Y, -1) == 0 for X in summands for Y in summands)


def g_matrix(summands):
    """Canonical g-matrix: rows are summand g-vectors, sorted descending."""
    return tuple(sorted((X.g_vector() for X in summands), reverse=True))


def h0_dim_vector(T):
    """Dimension vector of H^0(T) = coker(d) as multiplicities of simples."""
    A = T.A
    dims = [0] * A.n
    for v in range(A.n):
        # e_v-column space of P^0 modulo image of d
        total = sum(len(A.block(w, v)) for w in T.deg0)
        ech = Echelon()
        for c in range(len(T.degm1)):
            for k in A.block(T.degm1[c], v):
                vec = {}
                for r in range(len(T.deg0)):
                    x = T.d[r][c]
                    if x:
                        for kk, coeff in A.mul(x, {k: A.field.one}).items():
                            vec[(r, kk)] = coeff
                if vec:
                    ech.add(vec)
        dims[v] = total - ech.dim
    return tuple(dims)


def projective_stalks(A):
    """The silting complex A itself: all P_v in degree 0."""
    return [TwoTermComplex.stalk(A, v) for v in range(A.n)]


def shifted_stalks(A):
    """The silting complex A[1]: all P_v in degree -1."""
    return [TwoTermComplex.shifted_stalk(A, v) for v in range(A.n)]


def end_algebra(summands):
    """Endomorphism algebra of the direct sum of `summands` in the homotopy
    category, as a BasedAlgebra with one vertex per summand.

    Requires every summand to have split local endomorphism ring (residue
    field K); the basis is the identity of each summand together with
    radical representatives."""
    if not summands:
        raise ValueError("empty summand list")
    A = summands[0].A
    field = A.field
    n = len(summands)
    reps = {}   # (i, j) -> list of chain maps spanning Hom(T_i, T_j) reps
    echs = {}   # (i, j) -> tracking echelon expressing maps in those reps
    for i, Ti in enumerate(summands):
        for j, Tj in enumerate(summands):
            if i == j:
                rads = end_radical_reps(Ti)
                ech = Echelon(track=True)
                for b in homotopy_boundaries(Ti, Ti):
                    ech.add(b)
                chosen = [_identity_chain_map(Ti)]
                if ech.add(chosen[0], label=0) is None:
                    raise ValueError("zero summand in endomorphism ring")
                for vec in rads:
                    if ech.add(vec, label=len(chosen)) is not None:
                        chosen.append(vec)
                full, _ = hom_quotient_reps(Ti, Ti)
                if len(full) != len(chosen):
                    raise NotImplementedError(
                        "endomorphism ring with non-split residue algebra")
            else:
                chosen, ech = hom_quotient_reps(Ti, Tj)
            reps[(i, j)] = chosen
            echs[(i, j)] = ech
    # assemble the based algebra: basis element (i, j, t) is the t-th
    # representative of Hom(T_i, T_j); as an element it has source j,
    # target i (maps P_i -> P_j live in e_j A e_i)
    basis = []
    for i in range(n):
        basis.append((i, i, 0))  # identities first
    for (i, j), chosen in sorted(reps.items()):
        for t in range(len(chosen)):
            if i == j and t == 0:
                continue
            basis.append((i, j, t))
    index = {key: k for k, key in enumerate(basis)}
    basis_source = [j for (i, j, t) in basis]
    basis_target = [i for (i, j, t) in basis]
    names = []
    for (i, j, t) in basis:
        if i == j and t == 0:
            names.append("e%d" % i)
        else:
            names.append("f%d_%d_%d" % (i, j, t))
    table = {}
    for ka, (i, j, ta) in enumerate(basis):
        for kb, (i2, j2, tb) in enumerate(basis):
            # product x*y with source(x)=j (i.e. x: P_i -> P_j as a map
            # f: T_i -> T_j); x*y corresponds to x o y where y: T_i2 -> T_j2
            # and the composite needs j2 == i... following the algebra
            # convention: x in e_j A e_i, y in e_j2 A e_i2, x*y defined when
            # target(x) == source(y), i.e. i == j2; result x o y: T_i2 -> T_j
            if i != j2:
                continue
            comp = _compose_chain_vecs(
                summands[i2], summands[i], summands[j],
                reps[(i, j)][ta], reps[(i2, j2)][tb])
            res, expr = echs[(i2, j)].reduce_tracked(comp)
            if res:
                raise AssertionError("composition escaped the hom basis")
            prod = {index[(i2, j, t)]: c for t, c in expr.items() if c}
            if prod:
                table[(ka, kb)] = prod
    return BasedAlgebra(field, [str(i) for i in range(n)], basis_source,
                        basis_target, names, list(range(n)), table)
