"""Quivers, relation parsing and presentation normalization.

A presentation is a quiver together with a list of relations; a relation
is a linear combination of parallel paths, each path a tuple of arrow
names composed left-to-right (the word (a, b) is the path "first a,
then b", so target(a) == source(b)).

The text format ("DSL"):

    # comment
    vertices: 0 1 2 3 4
    arrow a3: 4 -> 3
    rel a3*a2                 # monomial relation
    rel a3*b1 - b2*a1         # binomial; integer/rational coefficients
    rel 2*a0*b0 - 1/2*b1*a1

Identifiers for arrows match [A-Za-z_][A-Za-z0-9_]*; bare numbers are
coefficients.  Vertices may carry arbitrary whitespace-free labels.
"""

import re
from fractions import Fraction


class DslError(ValueError):
    def __init__(self, message, line=None, col=None):
        loc = ""
        if line is not None:
            loc = " at line %d" % line
            if col is not None:
                loc += ", column %d" % col
        super().__init__(message + loc)
        self.line = line
        self.col = col


class NormalizationError(ValueError):
    pass


class Arrow:
    __slots__ = ("name", "source", "target")

    def __init__(self, name, source, target):
        self.name = name
        self.source = source
        self.target = target

    def __repr__(self):
        return "Arrow(%r, %d, %d)" % (self.name, self.source, self.target)


class Quiver:
    """Vertices with string labels (dense indices 0..n-1) plus named arrows."""

    def __init__(self, vertex_labels, arrows):
        self.vertex_labels = list(vertex_labels)
        self.arrows = list(arrows)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("duplicate arrow names")
        self.arrow_by_name = {a.name: a for a in self.arrows}

    @property
    def n(self):
        return len(self.vertex_labels)

    def arrow_matrix(self):
        m = [[0] * self.n for _ in range(self.n)]
        for a in self.arrows:
            m[a.source][a.target] += 1
        return m

    def is_acyclic(self):
        m = self.arrow_matrix()
        indeg = [sum(m[i][j] and 1 for i in range(self.n)) for j in range(self.n)]
        order = [v for v in range(self.n) if indeg[v] == 0]
        seen = 0
        while order:
            v = order.pop()
            seen += 1
            for w in range(self.n):
                if m[v][w]:
                    indeg[w] -= 1
                    if indeg[w] == 0:
                        order.append(w)
        return seen == self.n


class Presentation:
    """A quiver with relations; relations are dicts word -> coefficient,
    where a word is a tuple of arrow names composed left-to-right."""

    def __init__(self, quiver, relations):
        self.quiver = quiver
        self.relations = [dict(r) for r in relations]
        for rel in self.relations:
            self._check_relation(rel)

    def _check_relation(self, rel):
        if not rel:
            return
        ends = {self.word_endpoints(w) for w in rel}
        if len(ends) != 1:
            raise DslError("non-parallel relation: %s" % self.format_relation(rel))

    def word_endpoints(self, word):
        if not word:
            raise ValueError("empty word has no arrow endpoints")
        q = self.quiver
        prev = None
        for name in word:
            a = q.arrow_by_name.get(name)
            if a is None:
                raise DslError("unknown arrow %r" % name)
            if prev is not None and prev != a.source:
                raise DslError("non-composable word %s" % "*".join(word))
            prev = a.target
        return (q.arrow_by_name[word[0]].source, prev)

    def format_relation(self, rel):
        return format_lincomb(rel)

    def to_dsl(self):
        q = self.quiver
        lines = ["vertices: " + " ".join(q.vertex_labels)]
        for a in q.arrows:
            lines.append(
                "arrow %s: %s -> %s"
                % (a.name, q.vertex_labels[a.source], q.vertex_labels[a.target])
            )
        for rel in self.relations:
            lines.append("rel " + format_lincomb(rel))
        return "\n".join(lines) + "\n"


def format_lincomb(rel):
    """Deterministic text form of a dict word -> coefficient."""
    parts = []
    for word in sorted(rel.keys(), key=lambda w: (-len(w), w)):
        c = rel[word]
        path = "*".join(word)
        if c == 1:
            term = path
        elif c == -1:
            term = "-" + path
        else:
            term = "%s*%s" % (c, path)
        if parts and not term.startswith("-"):
            parts.append("+ " + term)
        elif parts:
            parts.append("- " + term[1:])
        else:
            parts.append(term)
    return " ".join(parts) if parts else "0"


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<arrowsym>->)|(?P<sym>[:*+\-]))"
)


def _tokenize(text, lineno):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].strip()
            if not rest:
                break
            raise DslError("unexpected input %r" % rest[:10], lineno, pos + 1)
        pos = m.end()
        if m.group("num"):
            out.append(("num", m.group("num"), m.start() + 1))
        elif m.group("ident"):
            out.append(("ident", m.group("ident"), m.start() + 1))
        elif m.group("arrowsym"):
            out.append(("sym", "->", m.start() + 1))
        else:
            out.append(("sym", m.group("sym"), m.start() + 1))
    return out


def _parse_relation_expr(tokens, lineno):
    """Parse `term ((+|-) term)*` where term = [coef *] ident (* ident)*."""
    rel = {}
    i = 0
    sign = Fraction(1)
    first = True
    while i < len(tokens):
        kind, val, col = tokens[i]
        if kind == "sym" and val in "+-":
            if first and rel:
                raise DslError("misplaced sign", lineno, col)
            sign = Fraction(1) if val == "+" else Fraction(-1)
            i += 1
            continue
        coef = sign
        if kind == "num":
            coef = sign * Fraction(val)
            i += 1
            if i < len(tokens) and tokens[i][:2] == ("sym", "*"):
                i += 1
            kind, val, col = tokens[i] if i < len(tokens) else (None, None, col)
        if kind != "ident":
            raise DslError("expected arrow name", lineno, col)
        word = [val]
        i += 1
        while i + 1 < len(tokens) and tokens[i][:2] == ("sym", "*") and tokens[i + 1][0] == "ident":
            word.append(tokens[i + 1][1])
            i += 2
        if i < len(tokens) and tokens[i][:2] == ("sym", "*"):
            raise DslError("dangling '*'", lineno, tokens[i][2])
        word = tuple(word)
        c = rel.get(word, Fraction(0)) + coef
        if c:
            rel[word] = c
        else:
            rel.pop(word, None)
        sign = Fraction(1)
        first = False
    if not rel and first:
        raise DslError("empty relation", lineno)
    return rel


def parse_presentation(text):
    """Parse DSL text into a Presentation."""
    vertex_labels = None
    label_index = {}
    arrows = []
    arrow_names = set()
    relations = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertices:"):
            if vertex_labels is not None:
                raise DslError("duplicate vertices declaration", lineno)
            vertex_labels = line[len("vertices:"):].split()
            if not vertex_labels:
                raise DslError("empty vertex list", lineno)
            if len(set(vertex_labels)) != len(vertex_labels):
                raise DslError("duplicate vertex label", lineno)
            label_index = {lab: i for i, lab in enumerate(vertex_labels)}
            continue
        if line.startswith("arrow"):
            if vertex_labels is None:
                raise DslError("arrow before vertices declaration", lineno)
            m = re.fullmatch(
                r"arrow\s+([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(\S+)\s*->\s*(\S+)", line
            )
            if m is None:
                raise DslError("malformed arrow declaration %r" % line, lineno)
            name, src, tgt = m.groups()
            if name in arrow_names:
                raise DslError("duplicate arrow name %r" % name, lineno)
            if src not in label_index or tgt not in label_index:
                raise DslError("unknown vertex in arrow %r" % name, lineno)
            arrow_names.add(name)
            arrows.append(Arrow(name, label_index[src], label_index[tgt]))
            continue
        if line.startswith("rel"):
            body = line[3:]
            if body and not body[0].isspace():
                raise DslError("malformed line %r" % line, lineno)
            tokens = _tokenize(body, lineno)
            rel = _parse_relation_expr(tokens, lineno)
            for word in rel:
                for name in word:
                    if name not in arrow_names:
                        raise DslError("unknown arrow %r in relation" % name, lineno)
            if rel:
                relations.append(rel)
            continue
        raise DslError("unrecognized line %r" % line, lineno)
    if vertex_labels is None:
        raise DslError("missing vertices declaration")
    pres = Presentation(Quiver(vertex_labels, arrows), relations)
    for rel in pres.relations:
        for word in rel:
            pres.word_endpoints(word)  # validates composability
    return pres


def normalize_presentation(pres):
    """Eliminate arrows that appear linearly in a relation and in no other
    term of that relation, substituting throughout, until the ideal lies
    in the square of the arrow ideal.  Returns a new Presentation."""
    quiver = pres.quiver
    arrows = list(quiver.arrows)
    relations = [dict(r) for r in pres.relations]

    while True:
        target = None
        for ri, rel in enumerate(relations):
            for word, coeff in rel.items():
                if len(word) != 1:
                    continue
                name = word[0]
                if any(name in w for w in rel if w != word):
                    continue
                others = {w: c for w, c in rel.items() if w != word}
                if others and all(len(w) == 1 for w in others):
                    raise NormalizationError(
                        "relation identifies parallel arrows: "
                        + format_lincomb(rel)
                    )
                target = (ri, name, coeff, others)
                break
            if target is not None:
                break
        if target is None:
            break
        ri, name, coeff, others = target
        # name = -(1/coeff) * others; substitute everywhere else
        subst = {w: -c / coeff for w, c in others.items()}
        new_relations = []
        for rj, rel in enumerate(relations):
            if rj == ri:
                continue
            new_rel = _substitute(rel, name, subst)
            if new_rel:
                new_relations.append(new_rel)
        relations = new_relations
        arrows = [a for a in arrows if a.name != name]

    for rel in relations:
        for word in rel:
            if len(word) < 2:
                raise NormalizationError(
                    "cannot make ideal admissible: stuck on "
                    + format_lincomb(rel)
                )
    return Presentation(Quiver(quiver.vertex_labels, arrows), relations)


def _substitute(rel, name, subst):
    """Replace every occurrence of arrow `name` in every word of rel by the
    linear combination `subst` (a dict word -> coeff), expanding products."""
    out = {}
    for word, coeff in rel.items():
        expansions = [((), coeff)]
        for letter in word:
            if letter != name:
                expansions = [(w + (letter,), c) for w, c in expansions]
            else:
                expansions = [
                    (w + sw, c * sc)
                    for w, c in expansions
                    for sw, sc in subst.items()
                ]
        for w, c in expansions:
            cc = out.get(w, 0) + c
            if cc:
                out[w] = cc
            else:
                out.pop(w, None)
    return out
