"""The family F_(n,3), its indexing by binary words, and the Boolean lattice.

Word positions are 1-based: bit ``b_l`` governs vertices ``l+1`` and ``l+2``.
"""
import itertools
from dataclasses import dataclass
from typing import NamedTuple

from .dag import Dag, EdgePair, Edge, NESTED, interchange, require_family, validate_family
from .errors import FamilyError, ResourceLimitError, MAX_FAMILY_N, MAX_BRUTE_FORCE_N


@dataclass(frozen=True, order=True)
class BinaryWord:
    bits: tuple

    def __post_init__(self):
        if len(self.bits) < 1:
            raise ValueError("a word needs at least one bit")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"bits must be 0/1, got {self.bits}")

    @classmethod
    def parse(cls, text):
        if isinstance(text, BinaryWord):
            return text
        if isinstance(text, str):
            if not text or set(text) - {"0", "1"}:
                raise ValueError(f"not a binary word: {text!r}")
            return cls(tuple(int(c) for c in text))
        return cls(tuple(int(b) for b in text))

    @property
    def n(self):
        return len(self.bits) + 2

    def __len__(self):
        return len(self.bits)

    def __getitem__(self, l):
        """1-based access: ``word[l]`` is b_l."""
        return self.bits[l - 1]

    def __str__(self):
        return "".join(map(str, self.bits))

    @property
    def ones(self):
        """J_b, the 1-positions in increasing order."""
        return [l for l, b in enumerate(self.bits, 1) if b == 1]

    @property
    def zeros(self):
        return [l for l, b in enumerate(self.bits, 1) if b == 0]

    @property
    def padded_ones(self):
        """J_b with sentinels 0 and n-1 added at the ends."""
        return [0] + self.ones + [self.n - 1]

    def with_bit(self, l, value):
        bits = list(self.bits)
        bits[l - 1] = value
        return BinaryWord(tuple(bits))


def all_words(n):
    check_family_n(n)
    return [BinaryWord(bits) for bits in itertools.product((0, 1), repeat=n - 2)]


def check_family_n(n, max_n=MAX_FAMILY_N):
    if n < 3:
        raise ValueError(f"F_(n,3) is indexed by words of length n-2 >= 1; got n={n}")
    if n > max_n:
        raise ResourceLimitError(f"n={n} exceeds the family guard max_n={max_n}")


def dag_from_word(word):
    """Build the member of F_(n,3) indexed by ``word``."""
    word = BinaryWord.parse(word)
    n = word.n
    pairs = [(i, i + 1) for i in range(1, n + 1)]
    pairs += [(1, 2), (n, n + 1)]
    pairs += [(l + 1, l + 2) for l in word.zeros]
    hat = word.padded_ones
    pairs += [(hat[k] + 1, hat[k + 1] + 2) for k in range(len(hat) - 1)]
    return Dag(n + 1, pairs)


def word_from_dag(dag):
    require_family(dag, 3)
    n = dag.n
    if n < 3:
        raise FamilyError("members with n < 3 carry no word")
    word = BinaryWord(tuple(0 if dag.multiplicity(l + 1, l + 2) == 2 else 1
                            for l in range(1, n - 1)))
    if dag_from_word(word) != dag:
        raise FamilyError("DAG passes the degree test but does not match its word")
    return word


def enumerate_family(n, max_n=MAX_FAMILY_N):
    check_family_n(n, max_n)
    return [dag_from_word(w) for w in all_words(n)]


def brute_force_family(n, k, max_n=MAX_BRUTE_FORCE_N):
    """Every DAG with the F_(n,k) degree sequences, by exhaustive stub matching.

    Each vertex carries labelled out-stubs and in-stubs.  In-stubs are
    filled in vertex order, each from any unused out-stub at a smaller
    vertex; distinct matchings that give the same multigraph are merged.
    """
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    if n > max_n:
        raise ResourceLimitError(f"stub matching is exhaustive; n={n} exceeds max_n={max_n}")
    vc = n + 1
    outd = [k] + [2] * (n - 1) + [0]
    ind = [0] + [2] * (n - 1) + [k]
    out_stubs = [(v, s) for v in range(1, vc + 1) for s in range(outd[v - 1])]
    in_stubs = [(v, s) for v in range(1, vc + 1) for s in range(ind[v - 1])]
    found = set()

    def extend(pos, used, pairs):
        if pos == len(in_stubs):
            found.add(Dag(vc, pairs))
            return
        v = in_stubs[pos][0]
        for stub in out_stubs:
            if stub[0] < v and stub not in used:
                used.add(stub)
                pairs.append((stub[0], v))
                extend(pos + 1, used, pairs)
                pairs.pop()
                used.discard(stub)

    extend(0, set(), [])
    return sorted(found, key=lambda g: g.pairs())


class Cover(NamedTuple):
    lower: BinaryWord
    upper: BinaryWord
    position: int
    pair: EdgePair

    @property
    def a(self):
        return self.pair.outer.tail

    @property
    def b(self):
        return self.pair.inner.tail

    @property
    def d(self):
        return self.pair.outer.head


@dataclass(frozen=True)
class HasseLattice:
    n: int
    nodes: tuple
    covers: tuple

    def up_covers(self, word):
        word = BinaryWord.parse(word)
        return [c for c in self.covers if c.lower == word]


def cover_pair(word, l):
    """The nested pair whose interchange turns b_l from 0 into 1.

    The inner edge is the second copy of (l+1, l+2); the outer edge is the
    1-chain edge passing over it, built from the nearest 1-positions on
    either side of ``l`` (with sentinels 0 and n-1).
    """
    word = BinaryWord.parse(word)
    if word[l] != 0:
        raise ValueError(f"b_{l} is already 1")
    hat = word.padded_ones
    left = max(j for j in hat if j < l)
    right = min(j for j in hat if j > l)
    dag = dag_from_word(word)
    outer = (left + 1, right + 2)
    inner = (l + 1, l + 2)
    return EdgePair(Edge(*outer, dag.multiplicity(*outer) - 1),
                    Edge(*inner, dag.multiplicity(*inner) - 1), NESTED)


def hasse_lattice(n, max_n=MAX_FAMILY_N):
    check_family_n(n, max_n)
    nodes = tuple(all_words(n))
    covers = []
    for w in nodes:
        for l in w.zeros:
            covers.append(Cover(w, w.with_bit(l, 1), l, cover_pair(w, l)))
    return HasseLattice(n, nodes, tuple(covers))


def apply_cover(cover):
    return interchange(dag_from_word(cover.lower), cover.pair)


__all__ = [
    "BinaryWord", "Cover", "HasseLattice", "all_words", "apply_cover", "brute_force_family",
    "cover_pair", "dag_from_word", "enumerate_family", "hasse_lattice", "validate_family",
    "word_from_dag",
]
