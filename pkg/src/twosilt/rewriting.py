"""Confluent path rewriting for admissible ideals.

Words are tuples of arrow indices, compared in degree-lexicographic order
with arrow precedence given by declaration order (earlier declaration =
larger letter); the leading term of a relation is its largest word.
Completion resolves all overlap ambiguities (Knuth-Bendix for path
algebras); this terminates quickly for the ideals in scope (monomials and
parallel-path binomials) and is guarded by budgets otherwise.
"""


class CompletionBudgetError(RuntimeError):
    pass


def word_key(word):
    """Sort key: larger key = larger word in deglex with earlier-declared
    arrows larger."""
    return (len(word), tuple(-a for a in word))


class RewriteSystem:
    """A confluent, terminating set of rules lhs -> rhs over path words."""

    def __init__(self, arrows, rules, field):
        self.arrows = arrows  # list of Arrow (with .source/.target as ints)
        self.rules = dict(rules)  # word -> dict word -> coeff
        self.field = field
        self._lhs_by_last = {}
        for lhs in self.rules:
            self._lhs_by_last.setdefault(lhs[-1], []).append(lhs)

    def reducible_suffix(self, word):
        """Return a rule lhs that is a suffix of word, or None."""
        if not word:
            return None
        for lhs in self._lhs_by_last.get(word[-1], ()):
            if len(lhs) <= len(word) and word[-len(lhs):] == lhs:
                return lhs
        return None

    def find_redex(self, word):
        """Leftmost position i and lhs with word[i:i+len(lhs)] == lhs."""
        for i in range(len(word)):
            for lhs in self.rules:
                L = len(lhs)
                if word[i:i + L] == lhs:
                    return i, lhs
        return None

    def normal_form(self, lincomb):
        """Fully reduce a dict word -> coeff; returns a new dict."""
        return _reduce(self.rules, lincomb)

    def normal_form_word(self, word):
        one = self.field.one
        return _reduce(self.rules, {word: one})


def _reduce(rules, lincomb):
    if not rules:
        return {w: c for w, c in lincomb.items() if c}
    maxlen = max(len(l) for l in rules)
    work = [(word_key(w), w, c) for w, c in lincomb.items() if c]
    out = {}
    while work:
        work.sort()
        key, word, coeff = work.pop()
        # merge duplicates of the current maximum
        while work and work[-1][1] == word:
            coeff = coeff + work.pop()[2]
        if not coeff:
            continue
        redex = None
        for i in range(len(word)):
            for L in range(1, min(maxlen, len(word) - i) + 1):
                cand = word[i:i + L]
                rhs = rules.get(cand)
                if rhs is not None:
                    redex = (i, cand, rhs)
                    break
            if redex:
                break
        if redex is None:
            c0 = out.get(word)
            c0 = coeff if c0 is None else c0 + coeff
            if c0:
                out[word] = c0
            else:
                out.pop(word, None)
            continue
        i, lhs, rhs = redex
        pre, suf = word[:i], word[i + len(lhs):]
        for w2, c2 in rhs.items():
            nw = pre + w2 + suf
            work.append((word_key(nw), nw, coeff * c2))
    return out


def complete_rewrite_system(pres, field, max_rules=2000, max_len=32):
    """Build a confluent rewrite system from a normalized presentation."""
    arrows = pres.quiver.arrows
    index = {a.name: i for i, a in enumerate(arrows)}
    queue = []
    for rel in pres.relations:
        lc = {}
        for word, coeff in rel.items():
            w = tuple(index[name] for name in word)
            lc[w] = field.of(coeff)
        queue.append(lc)

    rules = {}

    def orient_and_add(lc):
        lc = _reduce(rules, lc)
        if not lc:
            return False
        lead = max(lc, key=word_key)
        if len(lead) > max_len:
            raise CompletionBudgetError(
                "rule length %d exceeds budget %d" % (len(lead), max_len)
            )
        c = lc[lead]
        rhs = {w: -(v / c) for w, v in lc.items() if w != lead}
        rules[lead] = rhs
        if len(rules) > max_rules:
            raise CompletionBudgetError("rule count exceeds budget %d" % max_rules)
        return True

    for lc in queue:
        orient_and_add(lc)

    while True:
        added = False
        for pair in _critical_pairs(rules, field):
            if orient_and_add(pair):
                added = True
        if not added:
            return RewriteSystem(arrows, rules, field)


def _critical_pairs(rules, field):
    """All critical-pair differences of the current rules (overlap and
    containment ambiguities); each must reduce to zero for confluence."""
    pairs = []
    lhss = list(rules.keys())
    for l1 in lhss:
        rhs1 = rules[l1]
        for l2 in lhss:
            rhs2 = rules[l2]
            # containment: l2 a proper subword of l1
            if l1 != l2 and len(l2) <= len(l1):
                for i in range(len(l1) - len(l2) + 1):
                    if l1[i:i + len(l2)] == l2:
                        pre, suf = l1[:i], l1[i + len(l2):]
                        diff = dict(rhs1)
                        for w, v in rhs2.items():
                            nw = pre + w + suf
                            c = diff.get(nw, field.zero) - v
                            if c:
                                diff[nw] = c
                            else:
                                diff.pop(nw, None)
                        pairs.append(diff)
            # proper overlap: l1 = A.B, l2 = B.C with B nonempty proper
            for k in range(1, min(len(l1), len(l2))):
                if l1[-k:] == l2[:k]:
                    a, c = l1[:-k], l2[k:]
                    diff = {}
                    for w, v in rhs1.items():
                        nw = w + c
                        diff[nw] = diff.get(nw, field.zero) + v
                    for w, v in rhs2.items():
                        nw = a + w
                        cc = diff.get(nw, field.zero) - v
                        if cc:
                            diff[nw] = cc
                        else:
                            diff.pop(nw, None)
                    pairs.append({w: v for w, v in diff.items() if v})
    return pairs


def verify_confluence(rs):
    """Check that every critical pair of a completed system resolves."""
    for pair in _critical_pairs(rs.rules, rs.field):
        if _reduce(rs.rules, pair):
            return False
    return True
