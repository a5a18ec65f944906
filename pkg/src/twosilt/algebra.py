"""Based algebras: finite-dimensional basic algebras with a fixed basis.

Every basis element is vertex-homogeneous (it lies in e_u A e_v for a
single pair of vertices; as a path it starts at u and ends at v), and the
basis always consists of the primitive orthogonal idempotents e_0..e_{n-1}
together with elements of the radical.  Elements of the algebra are sparse
dicts basis-index -> scalar; multiplication reads left-to-right (x*y is
"first x, then y" on paths, i.e. defined when x ends where y starts).

Hom spaces between projectives follow Hom_A(P_i, P_j) = e_j A e_i for
right modules P_i = e_i A: its basis is the set of basis elements that
start at j and end at i.
"""

from .linalg import Echelon, nullspace, vec_add_scaled
from .presentation import Arrow, Quiver
from .rewriting import complete_rewrite_system


class BasisBudgetError(RuntimeError):
    pass


class BasedAlgebra:
    def __init__(self, field, vertex_labels, basis_source, basis_target,
                 basis_names, idem, table, generators=None, presentation=None):
        self.field = field
        self.vertex_labels = list(vertex_labels)
        self.basis_source = list(basis_source)
        self.basis_target = list(basis_target)
        self.basis_names = list(basis_names)
        self.idem = list(idem)  # idem[v] = basis index of e_v
        self.table = table      # (i, j) -> element dict, nonzero products only
        self.generators = dict(generators or {})  # name -> element
        self.presentation = presentation
        self._blocks = {}
        for k in range(len(basis_source)):
            self._blocks.setdefault(
                (basis_source[k], basis_target[k]), []).append(k)
        self._idem_set = set(idem)
        self._rad2 = None

    @property
    def n(self):
        return len(self.vertex_labels)

    @property
    def dim(self):
        return len(self.basis_source)

    def e(self, v):
        return {self.idem[v]: self.field.one}

    def block(self, u, v):
        """Basis indices of e_u A e_v (paths u -> v)."""
        return self._blocks.get((u, v), [])

    def hom_basis(self, i, j):
        """Basis indices of Hom(P_i, P_j) = e_j A e_i (paths j -> i)."""
        return self.block(j, i)

    def mul(self, x, y):
        out = {}
        table = self.table
        for i, ci in x.items():
            for j, cj in y.items():
                prod = table.get((i, j))
                if prod is not None:
                    vec_add_scaled(out, prod, ci * cj)
        return out

    def mul_basis(self, i, j):
        return self.table.get((i, j), {})

    def radical_basis(self):
        return [k for k in range(self.dim) if k not in self._idem_set]

    def rad2_echelons(self):
        """Per-block echelons of rad^2 (products of two radical elements)."""
        if self._rad2 is None:
            rad = self.radical_basis()
            ech = {}
            for i in rad:
                for j in rad:
                    prod = self.table.get((i, j))
                    if prod:
                        key = (self.basis_source[i], self.basis_target[j])
                        ech.setdefault(key, Echelon()).add(prod)
            self._rad2 = ech
        return self._rad2

    def arrow_matrix(self):
        """Arrow multiplicity matrix of the quiver (arrows u -> v counted by
        dim of the (u, v)-block of rad/rad^2)."""
        m = [[0] * self.n for _ in range(self.n)]
        rad2 = self.rad2_echelons()
        for (u, v), idxs in self._blocks.items():
            radidx = [k for k in idxs if k not in self._idem_set]
            if not radidx:
                continue
            r2 = rad2.get((u, v))
            m[u][v] = len(radidx) - (r2.dim if r2 else 0)
        return m

    def arrow_representatives(self):
        """List of (u, v, element) lifting a basis of rad/rad^2."""
        out = []
        rad2 = self.rad2_echelons()
        for (u, v), idxs in sorted(self._blocks.items()):
            radidx = [k for k in idxs if k not in self._idem_set]
            if not radidx:
                continue
            ech = Echelon()
            r2 = rad2.get((u, v))
            if r2:
                for row in r2.basis():
                    ech.add(row)
            for k in radidx:
                if ech.add({k: self.field.one}) is not None:
                    out.append((u, v, {k: self.field.one}))
        return out

    def quiver(self):
        arrows = []
        for u, v, elt in self.arrow_representatives():
            k = max(elt)  # representative basis index, for a readable name
            name = self.basis_names[k]
            base = name if name.isidentifier() else "x%d" % k
            while any(a.name == base for a in arrows):
                base += "_"
            arrows.append(Arrow(base, u, v))
        return Quiver(self.vertex_labels, arrows)

    def dim_table(self):
        """n x n matrix with entry (i, j) = dim Hom(P_i, P_j)."""
        return [[len(self.hom_basis(i, j)) for j in range(self.n)]
                for i in range(self.n)]

    def is_schurian(self):
        return all(len(idxs) <= 1 for idxs in self._blocks.values())

    def opposite(self):
        """Same basis, tags swapped, products reversed."""
        table = {}
        for (i, j), prod in self.table.items():
            table[(j, i)] = dict(prod)
        return BasedAlgebra(
            self.field, self.vertex_labels, self.basis_target,
            self.basis_source, self.basis_names, self.idem, table)

    def element_str(self, x):
        if not x:
            return "0"
        parts = []
        for k in sorted(x.keys()):
            c = x[k]
            name = self.basis_names[k]
            if c == 1:
                term = name
            elif c == -1:
                term = "-" + name
            else:
                term = "%s*%s" % (c, name)
            if parts and not term.startswith("-"):
                parts.append("+ " + term)
            elif parts:
                parts.append("- " + term[1:])
            else:
                parts.append(term)
        return " ".join(parts)

    def parse_element(self, text):
        """Parse a linear combination of generator/basis-element names."""
        from .presentation import _tokenize, _parse_relation_expr, DslError
        text = text.strip()
        if text == "0":
            return {}
        rel = _parse_relation_expr(_tokenize(text, 1), 1)
        names = dict(self.generators)
        for k, nm in enumerate(self.basis_names):
            # plain basis-element names parse directly (single-letter words)
            names.setdefault(nm, {k: self.field.one})
        out = {}
        for word, coeff in rel.items():
            val = None
            for letter in word:
                if letter not in names:
                    raise DslError("unknown element name %r" % letter)
                g = names[letter]
                val = g if val is None else self.mul(val, g)
            vec_add_scaled(out, val, self.field.of(coeff))
        return out

    def check_associativity(self):
        """Spot-check associativity on all basis triples (desk scale)."""
        for i in range(self.dim):
            for j in range(self.dim):
                ij = self.table.get((i, j), {})
                for k in range(self.dim):
                    left = self.mul(ij, {k: self.field.one})
                    jk = self.table.get((j, k), {})
                    right = self.mul({i: self.field.one}, jk)
                    if left != right:
                        return False
        return True


def build_based_algebra(pres, field, max_basis=200000, max_len=32):
    """Construct the based algebra of a normalized admissible presentation."""
    rs = complete_rewrite_system(pres, field, max_len=max_len)
    quiver = pres.quiver
    n = quiver.n
    arrows = quiver.arrows
    # enumerate normal-form words breadth-first by length
    out_arrows = {}
    for idx, a in enumerate(arrows):
        out_arrows.setdefault(a.source, []).append(idx)
    words = []   # (word, source, target)
    frontier = [((), v, v) for v in range(n)]
    while frontier:
        words.extend(frontier)
        if len(words) > max_basis:
            raise BasisBudgetError(
                "normal-form basis exceeds budget %d" % max_basis)
        nxt = []
        for word, src, tgt in frontier:
            if len(word) >= max_len:
                raise BasisBudgetError(
                    "normal-form path of length %d: ideal not admissible "
                    "within budget" % max_len)
            for aidx in out_arrows.get(tgt, ()):
                nw = word + (aidx,)
                if rs.reducible_suffix(nw) is None:
                    nxt.append((nw, src, arrows[aidx].target))
        frontier = nxt
    words.sort(key=lambda t: (len(t[0]), t[0]))
    # the empty word occurs once per vertex, so index by (source, word)
    index = {(t[1], t[0]): k for k, t in enumerate(words)}
    basis_source = [t[1] for t in words]
    basis_target = [t[2] for t in words]
    basis_names = []
    idem = [None] * n
    for k, (word, src, tgt) in enumerate(words):
        if not word:
            idem[src] = k
            basis_names.append("e%s" % quiver.vertex_labels[src])
        else:
            basis_names.append("*".join(arrows[a].name for a in word))
    table = {}
    for i, (wi, si, ti) in enumerate(words):
        for j, (wj, sj, tj) in enumerate(words):
            if ti != sj:
                continue
            nf = rs.normal_form_word(wi + wj)
            prod = {index[(si, w)]: c for w, c in nf.items()}
            if prod:
                table[(i, j)] = prod
    generators = {}
    for idx, a in enumerate(arrows):
        w = (idx,)
        nf = rs.normal_form_word(w)
        generators[a.name] = {index[(a.source, ww)]: c for ww, c in nf.items()}
    for v in range(n):
        generators.setdefault("e%s" % quiver.vertex_labels[v],
                              {idem[v]: field.one})
    A = BasedAlgebra(field, quiver.vertex_labels, basis_source, basis_target,
                     basis_names, idem, table, generators, pres)
    A.rewrite_system = rs
    return A


def quotient_by_ideal(A, gens):
    """Quotient of A by the two-sided ideal generated by elements of rad A."""
    field = A.field
    if not gens:
        return A
    rad2 = None
    # split generators into vertex-homogeneous components and check radicality
    homo = []
    for g in gens:
        comps = {}
        for k, c in g.items():
            if k in A._idem_set:
                raise ValueError("ideal generator not in the radical: %s"
                                 % A.element_str(g))
            comps.setdefault(
                (A.basis_source[k], A.basis_target[k]), {})[k] = c
        homo.extend(comps.values())
    ideal = Echelon()
    work = []
    for g in homo:
        if ideal.add(g) is not None:
            work.append(g)
    units = [{k: field.one} for k in range(A.dim)]
    while work:
        v = work.pop()
        for u in units:
            for prod in (A.mul(u, v), A.mul(v, u)):
                if prod and ideal.add(prod) is not None:
                    work.append(prod)
    pivots = set(ideal.rows.keys())
    keep = [k for k in range(A.dim) if k not in pivots]
    remap = {k: i for i, k in enumerate(keep)}

    def project(x):
        red = ideal.reduce(x)
        return {remap[k]: c for k, c in red.items()}

    table = {}
    for i, ki in enumerate(keep):
        for j, kj in enumerate(keep):
            prod = A.table.get((ki, kj))
            if prod is None:
                continue
            p = project(prod)
            if p:
                table[(i, j)] = p
    gens_out = {name: project(elt) for name, elt in A.generators.items()}
    return BasedAlgebra(
        field, A.vertex_labels,
        [A.basis_source[k] for k in keep],
        [A.basis_target[k] for k in keep],
        [A.basis_names[k] for k in keep],
        [remap[A.idem[v]] for v in range(A.n)],
        table, gens_out)


def idempotent_truncation(A, vertices):
    """Corner algebra eAe for e = sum of e_v over the kept vertex set."""
    vset = set(vertices)
    if not vset:
        raise ValueError("vertex set must be nonempty")
    order = sorted(vset)
    vmap = {v: i for i, v in enumerate(order)}
    keep = [k for k in range(A.dim)
            if A.basis_source[k] in vset and A.basis_target[k] in vset]
    remap = {k: i for i, k in enumerate(keep)}
    table = {}
    for i, ki in enumerate(keep):
        for j, kj in enumerate(keep):
            prod = A.table.get((ki, kj))
            if prod:
                table[(i, j)] = {remap[k]: c for k, c in prod.items()}
    gens_out = {}
    for name, elt in A.generators.items():
        if all(k in remap for k in elt):
            gens_out[name] = {remap[k]: c for k, c in elt.items()}
    return BasedAlgebra(
        A.field, [A.vertex_labels[v] for v in order],
        [vmap[A.basis_source[k]] for k in keep],
        [vmap[A.basis_target[k]] for k in keep],
        [A.basis_names[k] for k in keep],
        [remap[A.idem[v]] for v in order],
        table, gens_out)


def direct_sum(A, B):
    """Direct product of algebras (disjoint union of quivers)."""
    if A.field != B.field:
        raise ValueError("mismatched fields")
    off_v = A.n
    off_b = A.dim
    labels = A.vertex_labels + B.vertex_labels
    src = A.basis_source + [s + off_v for s in B.basis_source]
    tgt = A.basis_target + [t + off_v for t in B.basis_target]
    names = A.basis_names + ["r." + nm for nm in B.basis_names]
    idem = A.idem + [k + off_b for k in B.idem]
    table = dict(A.table)
    for (i, j), prod in B.table.items():
        table[(i + off_b, j + off_b)] = {k + off_b: c for k, c in prod.items()}
    return BasedAlgebra(A.field, labels, src, tgt, names, idem, table)


def semisimple_algebra(field, labels):
    n = len(labels)
    return BasedAlgebra(
        field, labels, list(range(n)), list(range(n)),
        ["e%s" % lab for lab in labels], list(range(n)),
        {(k, k): {k: field.one} for k in range(n)})


def verify_anti_automorphism(A, perm):
    """Check that the vertex permutation extends to an anti-automorphism
    of the Schurian algebra A, by mapping the basis element of the block
    e_u A e_v to the one of e_{perm(v)} A e_{perm(u)} and comparing all
    structure constants."""
    if not A.is_schurian():
        raise ValueError("verification implemented for Schurian algebras")
    phi = {}
    for k in range(A.dim):
        u, v = A.basis_source[k], A.basis_target[k]
        img = A.block(perm[v], perm[u])
        if len(img) != 1:
            return False
        phi[k] = img[0]
    for (i, j), prod in A.table.items():
        # phi(x * y) must equal phi(y) * phi(x)
        lhs = {phi[k]: c for k, c in prod.items()}
        rhs = A.mul({phi[j]: A.field.one}, {phi[i]: A.field.one})
        if lhs != rhs:
            return False
    # products that are zero must stay zero
    for i in range(A.dim):
        for j in range(A.dim):
            if (i, j) in A.table:
                continue
            if A.basis_target[i] != A.basis_source[j]:
                continue
            if A.mul({phi[j]: A.field.one}, {phi[i]: A.field.one}):
                return False
    return True


def minimal_relation_matrix(A):
    """Entry (u, v) = number of minimal relations from u to v, i.e. the
    dimension of e_u (I / (IR + RI)) e_v for the kernel I of the canonical
    surjection from the path algebra of the quiver of A onto A (R = arrow
    ideal).  Requires the quiver to be acyclic."""
    reps = A.arrow_representatives()
    n = A.n
    adj = {}
    for aidx, (u, v, elt) in enumerate(reps):
        adj.setdefault(u, []).append((aidx, v, elt))
    q = Quiver(A.vertex_labels,
               [Arrow("a%d" % i, u, v) for i, (u, v, _) in enumerate(reps)])
    if not q.is_acyclic():
        raise ValueError("relation counting requires an acyclic quiver")
    # enumerate all formal paths (word of arrow indices, start, end, image)
    paths = []
    frontier = [((), v, v, A.e(v)) for v in range(n)]
    while frontier:
        paths.extend(p for p in frontier if p[0])
        nxt = []
        for word, s, t, img in frontier:
            for aidx, v2, elt in adj.get(t, ()):
                nxt.append((word + (aidx,), s, v2, A.mul(img, elt)))
        frontier = nxt
    by_block = {}
    for word, s, t, img in paths:
        by_block.setdefault((s, t), []).append((word, img))
    kernels = {}
    for (s, t), items in by_block.items():
        # kernel of the evaluation map on formal paths s -> t
        rows = {}
        for word, img in items:
            for k, c in img.items():
                rows.setdefault(k, {})[word] = c
        kern = nullspace(list(rows.values()), [w for w, _ in items],
                         A.field.one)
        if kern:
            kernels[(s, t)] = kern
    out = [[0] * n for _ in range(n)]
    for (s, t), kern in kernels.items():
        # Since the kernel I is an ideal and vertex-homogeneous, the block
        # of IR (resp. RI) is spanned by single-arrow extensions k*a
        # (resp. a*k) of kernel vectors of adjacent blocks.
        boundary = Echelon()
        for (s2, t2), kern2 in kernels.items():
            if s2 == s:
                for aidx, v2, _elt in adj.get(t2, ()):
                    if v2 != t:
                        continue
                    for vec in kern2:
                        boundary.add({w + (aidx,): c for w, c in vec.items()})
            if t2 == t:
                for aidx, v2, _elt in adj.get(s, ()):
                    if v2 != s2:
                        continue
                    for vec in kern2:
                        boundary.add({(aidx,) + w: c for w, c in vec.items()})
        count = 0
        for vec in kern:
            if boundary.add(vec) is not None:
                count += 1
        out[s][t] = count
    return out
