"""Finitely presented groups.

Words are tuples of nonzero signed integers: +i is the i-th generator
(1-based), -i its inverse.  Words are freely reduced on ingestion and the
empty word is never stored as a relator.

The module provides abelianization via integer Smith normal form, bounded
HLT-style Todd-Coxeter coset enumeration, Tietze-move simplification,
identification against finite permutation groups, and amalgamated
pushouts of presentations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import CosetLimitExceeded, IllFormedMap, ParseError
from .perm import Perm, PermGroup, _closure_set

Word = tuple[int, ...]

DEFAULT_MAX_COSETS = 50000


# -- words ---------------------------------------------------------------


def free_reduce(word: Sequence[int]) -> Word:
    out: list[int] = []
    for x in word:
        if x == 0:
            raise ValueError("0 is not a generator index")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse_word(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def cyclic_reduce(word: Sequence[int]) -> Word:
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def _relator_sort_key(word: Word) -> tuple:
    # positive letters sort before their inverses: a < A < b < B < ...
    return tuple((abs(x), 0 if x > 0 else 1) for x in word)


def canonical_relator(word: Sequence[int]) -> Word:
    """Least rotation of the cyclic reduction of the word or its inverse."""
    w = cyclic_reduce(word)
    if not w:
        return ()
    best = None
    for cand in (w, inverse_word(w)):
        for k in range(len(cand)):
            rot = cand[k:] + cand[:k]
            if best is None or _relator_sort_key(rot) < _relator_sort_key(best):
                best = rot
    return best


def substitute(word: Sequence[int], replacements: dict[int, Word]) -> Word:
    """Replace generators by words; replacement for g also handles -g."""
    out: list[int] = []
    for x in word:
        g = abs(x)
        if g in replacements:
            rep = replacements[g] if x > 0 else inverse_word(replacements[g])
            out.extend(rep)
        else:
            out.append(x)
    return free_reduce(out)


def word_to_text(word: Sequence[int]) -> str:
    chars = []
    for x in word:
        g = abs(x) - 1
        if g >= 26:
            raise ValueError("letter format supports at most 26 generators")
        c = chr(ord("a") + g)
        chars.append(c if x > 0 else c.upper())
    return "".join(chars)


def word_from_text(text: str) -> Word:
    out = []
    for c in text:
        if c.islower():
            out.append(ord(c) - ord("a") + 1)
        elif c.isupper():
            out.append(-(ord(c) - ord("A") + 1))
        else:
            raise ParseError(f"bad letter {c!r} in word {text!r}")
    return free_reduce(out)


# -- presentations --------------------------------------------------------


@dataclass(frozen=True)
class FpGroup:
    """A finitely presented group: generator count plus relator words."""

    ngens: int
    relators: tuple[Word, ...] = ()
    name: Optional[str] = None

    def __post_init__(self):
        reduced = []
        for r in self.relators:
            w = free_reduce(r)
            if any(abs(x) > self.ngens for x in w):
                raise ValueError(f"relator {r!r} uses generator out of range")
            if w:
                reduced.append(w)
        object.__setattr__(self, "relators", tuple(reduced))

    def __repr__(self) -> str:
        label = self.name or f"{self.ngens} gens, {len(self.relators)} relators"
        return f"FpGroup({label})"

    def spec_text(self) -> str:
        """Presentation in fp:<k>:<relators> text form.

        Uses letters for up to 26 generators and the fpx: signed-integer
        form beyond that.
        """
        if self.ngens <= 26:
            body = ",".join(word_to_text(r) for r in self.relators)
            return f"fp:{self.ngens}:{body}"
        body = ",".join(" ".join(str(x) for x in r) for r in self.relators)
        return f"fpx:{self.ngens}:{body}"


def parse_fp(text: str) -> FpGroup:
    """Parse fp:<k>:<relator>,<relator>,... (letters a..z, A..Z inverse)."""
    parts = text.strip().split(":", 2)
    if len(parts) != 3 or parts[0] not in ("fp", "fpx"):
        raise ParseError(f"bad presentation text {text!r}")
    try:
        k = int(parts[1])
    except ValueError as exc:
        raise ParseError(f"bad generator count in {text!r}") from exc
    if k < 0:
        raise ParseError("generator count must be >= 0")
    relators = []
    for chunk in parts[2].split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if parts[0] == "fp":
            w = word_from_text(chunk)
        else:
            try:
                w = free_reduce([int(tok) for tok in chunk.split()])
            except ValueError as exc:
                raise ParseError(f"bad integer word {chunk!r}") from exc
        if any(abs(x) > k for x in w):
            raise ParseError(f"relator {chunk!r} out of range for {k} generators")
        if w:
            relators.append(w)
    return FpGroup(k, tuple(relators))


# -- abelianization / Smith normal form -----------------------------------


def smith_normal_form(rows: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the full diagonal d_1 | d_2 | ... (nonnegative, possibly with
    trailing zeros), of length min(nrows, ncols).
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return []
    nr, nc = len(m), len(m[0])
    diag = []
    t = 0
    while t < min(nr, nc):
        # find pivot of least absolute value in the remaining block
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                if m[i][j] != 0 and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        m[t], m[i] = m[i], m[t]
        for row in m:
            row[t], row[j] = row[j], row[t]
        # clear row and column t by remainder division
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, nr):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    for j in range(t, nc):
                        m[i][j] -= q * m[t][j]
                    if m[i][t] != 0:
                        m[t], m[i] = m[i], m[t]
                        dirty = True
            for j in range(t + 1, nc):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    for i in range(t, nr):
                        m[i][j] -= q * m[i][t]
                    if m[t][j] != 0:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
        # enforce divisibility of the remaining block by the pivot
        d = abs(m[t][t])
        for i in range(t + 1, nr):
            bad = next((j for j in range(t + 1, nc) if m[i][j] % d != 0), None)
            if bad is not None:
                for j in range(t, nc):
                    m[t][j] += m[i][j]
                break
        else:
            diag.append(d)
            t += 1
    while len(diag) < min(nr, nc):
        diag.append(0)
    return diag


def abelianization(F: FpGroup) -> list[int]:
    """Invariant factors of the abelianized group.

    Factors of 1 are dropped; a 0 denotes a free (infinite cyclic) factor.
    The nonzero factors form a divisibility chain d_1 | d_2 | ...
    """
    if F.ngens == 0:
        return []
    rows = [_exponent_vector(r, F.ngens) for r in F.relators]
    if not rows:
        return [0] * F.ngens
    diag = smith_normal_form(rows)
    rank = sum(1 for d in diag if d != 0)
    factors = [d for d in diag if d not in (0, 1)]
    factors.extend([0] * (F.ngens - rank))
    return factors


def _exponent_vector(word: Word, ngens: int) -> list[int]:
    v = [0] * ngens
    for x in word:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return v


def in_integer_row_span(rows: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    """True iff vec lies in the integer lattice spanned by the rows."""
    base = [list(r) for r in rows]
    if all(x == 0 for x in vec):
        return True
    if not base:
        return False
    d1 = smith_normal_form(base)
    d2 = smith_normal_form(base + [list(vec)])
    nz1 = [d for d in d1 if d != 0]
    nz2 = [d for d in d2 if d != 0]
    return len(nz1) == len(nz2) and nz1 == nz2


# -- Todd-Coxeter coset enumeration ---------------------------------------


class _CosetTable:
    """HLT-style coset table with first-definition coset numbering."""

    def __init__(self, ngens: int, max_cosets: int):
        self.ncols = 2 * ngens
        self.max_cosets = max_cosets
        self.table: list[list[Optional[int]]] = [[None] * self.ncols]
        self.p = [0]

    @staticmethod
    def col(x: int) -> int:
        return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1

    def rep(self, k: int) -> int:
        # union-find with path compression; the least coset survives
        root = k
        while self.p[root] != root:
            root = self.p[root]
        while self.p[k] != root:
            self.p[k], k = root, self.p[k]
        return root

    def define(self, alpha: int, c: int) -> None:
        if len(self.table) >= self.max_cosets:
            raise CosetLimitExceeded(
                f"coset table exceeded {self.max_cosets} cosets"
            )
        n = len(self.table)
        self.table.append([None] * self.ncols)
        self.p.append(n)
        self.table[alpha][c] = n
        self.table[n][c ^ 1] = alpha

    def _merge(self, k: int, lam: int, queue: list[int]) -> None:
        phi, psi = self.rep(k), self.rep(lam)
        if phi != psi:
            mu, nu = min(phi, psi), max(phi, psi)
            self.p[nu] = mu
            queue.append(nu)

    def coincidence(self, alpha: int, beta: int) -> None:
        queue: list[int] = []
        self._merge(alpha, beta, queue)
        while queue:
            y = queue.pop(0)
            for x in range(self.ncols):
                d = self.table[y][x]
                if d is None:
                    continue
                self.table[d][x ^ 1] = None
                mu, nu = self.rep(y), self.rep(d)
                t = self.table[mu][x]
                if t is not None:
                    self._merge(nu, t, queue)
                else:
                    t = self.table[nu][x ^ 1]
                    if t is not None:
                        self._merge(mu, t, queue)
                    else:
                        self.table[mu][x] = nu
                        self.table[nu][x ^ 1] = mu

    def scan_and_fill(self, alpha: int, word_cols: Sequence[int]) -> None:
        f, i = alpha, 0
        b, j = alpha, len(word_cols) - 1
        while True:
            while i <= j and self.table[f][word_cols[i]] is not None:
                f = self.table[f][word_cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.table[b][word_cols[j] ^ 1] is not None:
                b = self.table[b][word_cols[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                self.table[f][word_cols[i]] = b
                self.table[b][word_cols[i] ^ 1] = f
                return
            self.define(f, word_cols[i])

    def live_count(self) -> int:
        return sum(1 for k in range(len(self.p)) if self.p[k] == k)


def coset_enumeration(
    F: FpGroup,
    subgroup_words: Sequence[Sequence[int]] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> int:
    """Index of the subgroup generated by the given words (Todd-Coxeter).

    With no subgroup words this is the group order.  Raises
    CosetLimitExceeded if the table grows past max_cosets; the caller
    must treat that as inconclusive, never as a proof of infiniteness.
    """
    if max_cosets < 1:
        raise ValueError("max_cosets must be >= 1")
    if F.ngens == 0:
        return 1
    relators = sorted(
        {canonical_relator(r) for r in F.relators if canonical_relator(r)},
        key=lambda w: (len(w), w),
    )
    rel_cols = [[_CosetTable.col(x) for x in r] for r in relators]
    reduced_subs = [free_reduce(w) for w in subgroup_words]
    for w in reduced_subs:
        if any(abs(x) > F.ngens for x in w):
            raise ValueError(f"subgroup word {w!r} out of range")
    sub_cols = [[_CosetTable.col(x) for x in w] for w in reduced_subs if w]
    ct = _CosetTable(F.ngens, max_cosets)
    for w in sub_cols:
        ct.scan_and_fill(0, w)
    alpha = 0
    while alpha < len(ct.table):
        if ct.p[alpha] == alpha:
            for w in rel_cols:
                ct.scan_and_fill(alpha, w)
                if ct.p[alpha] != alpha:
                    break
            if ct.p[alpha] == alpha:
                for x in range(ct.ncols):
                    if ct.table[alpha][x] is None:
                        ct.define(alpha, x)
        alpha += 1
    return ct.live_count()


# -- Tietze simplification -------------------------------------------------


class _GenResolver:
    """Signed union-find over generators, with a 'dead' (trivial) state.

    Tracks the accumulated substitutions g := e or g := h^s coming from
    relators of length <= 2; higher-numbered generators are eliminated in
    favor of lower-numbered ones.
    """

    def __init__(self, ngens: int):
        # rep[g] = None (g is its own root), 0 (g := identity), or signed root
        self.rep: list[Optional[int]] = [None] * (ngens + 1)

    def resolve(self, g: int) -> int:
        """Return 0 if the generator dies, else the signed root generator."""
        sign = 1
        while True:
            r = self.rep[g]
            if r is None:
                return sign * g
            if r == 0:
                return 0
            sign = sign if r > 0 else -sign
            g = abs(r)

    def kill(self, g: int) -> bool:
        res = self.resolve(g)
        if res == 0:
            return False
        self.rep[abs(res)] = 0
        return True

    def identify(self, x: int, y: int) -> bool:
        """Record the relation x * y = e between signed generators."""
        rx, ry = self.resolve(abs(x)), self.resolve(abs(y))
        sx = (1 if x > 0 else -1) * (1 if rx > 0 else -1)
        sy = (1 if y > 0 else -1) * (1 if ry > 0 else -1)
        rx, ry = abs(rx) if rx else 0, abs(ry) if ry else 0
        if rx == 0 and ry == 0:
            return False
        if rx == 0:
            self.rep[ry] = 0
            return True
        if ry == 0:
            self.rep[rx] = 0
            return True
        if rx == ry:
            if sx == -sy:
                return False  # tautology x x^-1
            # x^2 = e: not an elimination; leave as a relator
            return False
        hi, lo = (rx, ry) if rx > ry else (ry, rx)
        # relation reads (sx rx)(sy ry) = e -> hi := lo^(-sx*sy)
        self.rep[hi] = -sx * sy * lo
        return True


def simplify(F: FpGroup) -> FpGroup:
    """Reduce a presentation by safe Tietze moves.

    Moves used: free and cyclic reduction of relators, deletion of empty
    and duplicate relators, and elimination of generators defined by
    relators of length <= 2.  Eliminations are batched through a signed
    union-find so large presentations reduce in few passes.  The result
    presents an isomorphic group.
    """
    resolver = _GenResolver(F.ngens)
    relators = {canonical_relator(r) for r in F.relators} - {()}
    while True:
        progress = False
        for w in sorted(relators, key=lambda w: (len(w), w)):
            if len(w) == 1:
                progress |= resolver.kill(abs(w[0]))
            elif len(w) == 2 and abs(w[0]) != abs(w[1]):
                progress |= resolver.identify(w[0], w[1])
        if not progress:
            break
        rewritten = set()
        for w in relators:
            out = []
            for x in w:
                r = resolver.resolve(abs(x))
                if r == 0:
                    continue
                out.append(r if x > 0 else -r)
            c = canonical_relator(out)
            if c:
                rewritten.add(c)
        relators = rewritten
    survivors = sorted(
        g for g in range(1, F.ngens + 1) if resolver.rep[g] is None
    )
    renumber = {g: i + 1 for i, g in enumerate(survivors)}
    final = set()
    for w in relators:
        out = tuple(
            renumber[abs(x)] if x > 0 else -renumber[abs(x)] for x in w
        )
        final.add(canonical_relator(out))
    final.discard(())
    return FpGroup(
        len(survivors),
        tuple(sorted(final, key=lambda w: (len(w), w))),
        name=F.name,
    )


# -- identification against finite groups ----------------------------------


IDENTIFIED = "Identified"
INCONCLUSIVE = "Inconclusive"
ORDER_EXCEEDED = "OrderExceeded"


@dataclass(frozen=True)
class IdentificationResult:
    """Outcome of matching a presentation against finite candidates.

    status is Identified with a witness when a relator-respecting
    surjection onto a candidate of certified equal order exists;
    Inconclusive when the order could not be certified or no candidate
    matched; OrderExceeded when the certified order is larger than every
    candidate supplied.
    """

    status: str
    match_name: Optional[str] = None
    witness: Optional[tuple[Perm, ...]] = None
    candidate: Optional[PermGroup] = None
    certified_order: Optional[int] = None

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "match": None
            if self.match_name is None
            else {
                "name": self.match_name,
                "images": [list(p.images) for p in (self.witness or ())],
            },
            "certified_order": self.certified_order,
        }


def _evaluate_word(word: Word, images: Sequence[Optional[Perm]], ident: Perm) -> Perm:
    out = ident
    for x in word:
        img = images[abs(x) - 1]
        assert img is not None
        out = out * (img if x > 0 else img.inverse())
    return out


def _surjection_witness(F: FpGroup, H: PermGroup) -> Optional[tuple[Perm, ...]]:
    """Backtracking search for generator images forming a surjection.

    Runs over the index multiplication table of the candidate; relators
    are checked as soon as their last generator is assigned, and pure
    power relators g^m constrain the candidate images of g up front.
    """
    import math

    k = F.ngens
    if k == 0:
        return () if H.order == 1 else None
    els = H.elements
    n = len(els)
    index = {g: i for i, g in enumerate(els)}
    mul = [[index[a * b] for b in els] for a in els]
    inv = [index[a.inverse()] for a in els]
    e = index[H.identity]
    orders = [a.order() for a in els]
    power_of: list[int] = [0] * (k + 1)
    by_last: dict[int, list[Word]] = {g: [] for g in range(1, k + 1)}
    for r in F.relators:
        gens_used = {abs(x) for x in r}
        if len(gens_used) == 1:
            g = next(iter(gens_used))
            power_of[g] = math.gcd(power_of[g], len(r))
        by_last[max(abs(x) for x in r)].append(r)
    cand_lists: list[list[int]] = []
    for g in range(1, k + 1):
        if power_of[g]:
            cand_lists.append(
                [i for i in range(n) if power_of[g] % orders[i] == 0]
            )
        else:
            cand_lists.append(list(range(n)))
    images: list[int] = [0] * k

    def evaluate(word: Word) -> int:
        acc = e
        for x in word:
            i = images[abs(x) - 1]
            acc = mul[acc][i] if x > 0 else mul[acc][inv[i]]
        return acc

    def generates_all() -> bool:
        seen = {e} | set(images)
        frontier = list(seen)
        while frontier:
            nxt = []
            for a in frontier:
                for b in images:
                    c = mul[a][b]
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return len(seen) == n

    def backtrack(depth: int) -> bool:
        if depth == k:
            return generates_all()
        for i in cand_lists[depth]:
            images[depth] = i
            if all(evaluate(r) == e for r in by_last[depth + 1]):
                if backtrack(depth + 1):
                    return True
        images[depth] = 0
        return False

    if backtrack(0):
        return tuple(els[i] for i in images)
    return None


def _abelianized_surjection_possible(
    factors: Sequence[int], target: PermGroup
) -> bool:
    """Necessary condition for a surjection, on abelianizations.

    ``factors`` are the invariant factors of the source abelianization
    (0 = free).  For each prime, the target's abelianized q-rank must not
    exceed the source's and its q-exponent must divide the source's.
    """
    free = sum(1 for d in factors if d == 0)
    for q, (rank, exponent) in target.abelianization_data().items():
        src_rank = free + sum(1 for d in factors if d and d % q == 0)
        if rank > src_rank:
            return False
        if free == 0:
            src_exp = 1
            for d in factors:
                e = 1
                dd = d
                while dd % q == 0:
                    e *= q
                    dd //= q
                src_exp = max(src_exp, e)
            if exponent > src_exp:
                return False
    return True


def identify_finite(
    F: FpGroup,
    candidates: Sequence[PermGroup],
    max_cosets: int = DEFAULT_MAX_COSETS,
    presimplify: bool = True,
) -> IdentificationResult:
    """Certify the presented group as one of the finite candidates.

    The order is certified first by coset enumeration over the trivial
    subgroup; only candidates of exactly that order pass to the witness
    search, after an abelianization compatibility precheck.
    """
    Fs = simplify(F) if presimplify else F
    try:
        order = coset_enumeration(Fs, (), max_cosets=max_cosets)
    except CosetLimitExceeded:
        return IdentificationResult(status=INCONCLUSIVE)
    ab_factors = abelianization(Fs)
    for cand in candidates:
        if cand.order != order:
            continue
        if not _abelianized_surjection_possible(ab_factors, cand):
            continue
        witness = _surjection_witness(Fs, cand)
        if witness is None:
            continue
        ident = cand.identity
        assert all(
            _evaluate_word(r, witness, ident) == ident for r in Fs.relators
        )
        assert len(_closure_set(set(witness) | {ident})) == cand.order
        return IdentificationResult(
            status=IDENTIFIED,
            match_name=cand.name or f"<order {cand.order}>",
            witness=witness,
            candidate=cand,
            certified_order=order,
        )
    if candidates and order > max(c.order for c in candidates):
        return IdentificationResult(status=ORDER_EXCEEDED, certified_order=order)
    return IdentificationResult(status=INCONCLUSIVE, certified_order=order)


# -- pushouts ---------------------------------------------------------------


@dataclass(frozen=True)
class FpMap:
    """A presentation map, given by an image word per source generator."""

    source: FpGroup
    target: FpGroup
    images: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        if len(self.images) != self.source.ngens:
            raise IllFormedMap("need one image word per source generator")
        object.__setattr__(
            self, "images", tuple(free_reduce(w) for w in self.images)
        )
        for w in self.images:
            if any(abs(x) > self.target.ngens for x in w):
                raise IllFormedMap(f"image word {w!r} out of range in target")

    def apply(self, word: Word) -> Word:
        mapping = {g + 1: self.images[g] for g in range(self.source.ngens)}
        return substitute(word, mapping)


def pushout(left: FpMap, right: FpMap) -> FpGroup:
    """Amalgamated pushout of presentations along a common source.

    Generators are the disjoint union of the target generators; relators
    are both targets' plus one glue relator f(x) g(x)^-1 per source
    generator.  Compatibility of the maps with the source relators is
    verified at abelianization level only (full word-problem checking is
    undecidable); failure raises IllFormedMap.
    """
    if left.source is not right.source and left.source != right.source:
        raise IllFormedMap("pushout legs must share a source presentation")
    F0 = left.source
    for leg in (left, right):
        rows = [_exponent_vector(r, leg.target.ngens) for r in leg.target.relators]
        for r in F0.relators:
            vec = _exponent_vector(leg.apply(r), leg.target.ngens)
            if not in_integer_row_span(rows, vec):
                raise IllFormedMap(
                    "map does not kill a source relator at abelianization level"
                )
    k1 = left.target.ngens
    k2 = right.target.ngens
    relators: list[Word] = list(left.target.relators)
    shift = {g + 1: (k1 + g + 1,) for g in range(k2)}
    relators.extend(substitute(r, shift) for r in right.target.relators)
    for g in range(F0.ngens):
        glue = left.images[g] + inverse_word(substitute(right.images[g], shift))
        relators.append(free_reduce(glue))
    return FpGroup(k1 + k2, tuple(r for r in relators if r))
