"""Exact sparse linear algebra over an exact field.

Vectors are dicts mapping hashable, mutually comparable coordinate keys to
nonzero field elements.  The workhorse is a fully reduced row echelon
(`Echelon`) supporting incremental span construction, membership reduction
and optional expression tracking (to express a vector as a combination of
labelled generators).
"""


def vec_add_scaled(dst, src, c):
    """dst += c * src, in place; dst is a sparse dict."""
    if not c:
        return dst
    for k, v in src.items():
        w = dst.get(k)
        if w is None:
            dst[k] = c * v
        else:
            w = w + c * v
            if w:
                dst[k] = w
            else:
                del dst[k]
    return dst


def vec_scale(src, c):
    return {k: c * v for k, v in src.items()}


class Echelon:
    """A subspace kept in fully reduced row-echelon form.

    Each stored row has a pivot coordinate with coefficient one, and no
    stored row has support on another row's pivot.  With ``track=True``
    every row also carries an expression of itself as a combination of
    the labelled generators passed to :meth:`add`.
    """

    def __init__(self, track=False):
        self.rows = {}  # pivot -> vector
        self.exprs = {} if track else None

    @property
    def dim(self):
        return len(self.rows)

    def _reduce(self, vec, expr):
        res = dict(vec)
        again = True
        while again:
            again = False
            for piv in list(res.keys()):
                row = self.rows.get(piv)
                if row is not None:
                    c = res[piv]
                    vec_add_scaled(res, row, -c)
                    if expr is not None:
                        vec_add_scaled(expr, self.exprs[piv], -c)
                    again = True
        return res

    def reduce(self, vec):
        """Return the residual of vec modulo the span (a fresh dict)."""
        return self._reduce(vec, None)

    def reduce_tracked(self, vec):
        """Return (residual, expr) with vec = residual + combination(expr)."""
        expr = {}
        res = self._reduce(vec, expr)
        return res, {k: -v for k, v in expr.items()}

    def add(self, vec, label=None):
        """Insert vec into the span.  Returns the new pivot coordinate, or
        None if vec was already in the span.  When tracking, ``label``
        names vec as a generator in subsequent expressions."""
        if self.exprs is None:
            res = self._reduce(vec, None)
            expr = None
        else:
            expr = {} if label is None else None
            if label is None:
                res = self._reduce(vec, expr)
                expr = {k: -v for k, v in expr.items()}
            else:
                tmp = {}
                res = self._reduce(vec, tmp)
                expr = {k: -v for k, v in tmp.items()}
                expr[label] = 1
        if not res:
            return None
        piv = min(res.keys())
        c = res[piv]
        res = {k: v / c for k, v in res.items()}
        if expr is not None:
            expr = {k: v / c for k, v in expr.items()}
        # back-reduce existing rows against the new pivot
        for p2, row2 in self.rows.items():
            c2 = row2.get(piv)
            if c2:
                vec_add_scaled(row2, res, -c2)
                if self.exprs is not None:
                    vec_add_scaled(self.exprs[p2], expr, -c2)
        self.rows[piv] = res
        if self.exprs is not None:
            self.exprs[piv] = expr
        return piv

    def contains(self, vec):
        return not self.reduce(vec)

    def basis(self):
        return [dict(r) for r in self.rows.values()]


def nullspace(rows, variables, one=1):
    """Kernel basis of the linear map given by constraint rows.

    rows: list of sparse dicts over keys from ``variables``; a solution x
    satisfies sum_k row[k]*x[k] = 0 for every row.  Returns a list of
    sparse dicts, one per free variable (that variable set to ``one`` --
    pass the field's one so all coefficients stay field-typed).
    """
    ech = Echelon()
    for row in rows:
        ech.add(row)
    pivots = ech.rows
    kernel = []
    for f in variables:
        if f in pivots:
            continue
        vec = {f: one}
        for p, row in pivots.items():
            c = row.get(f)
            if c:
                vec[p] = -c
        kernel.append(vec)
    return kernel
