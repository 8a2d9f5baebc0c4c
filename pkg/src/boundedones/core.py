"""Shared types for codes whose codewords carry a bounded number of ones.

Symbols are addressed by 0-based index everywhere in this package. A code
is stored as a tuple of ASCII bit strings, one per symbol.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

__all__ = [
    "CodeError",
    "EmptyInput",
    "InvalidWeight",
    "NegativeWeight",
    "AllZero",
    "LabelCountMismatch",
    "SymbolMismatch",
    "UnknownSymbol",
    "DanglingSuffix",
    "NoMatch",
    "Infeasible",
    "Distribution",
    "CodeBook",
    "CodeTree",
    "Cost",
    "KraftSum",
    "validate_distribution",
    "parse_distribution",
    "ones_count",
    "average_cost",
    "kraft_sum",
    "encode",
    "decode",
]


class CodeError(ValueError):
    """Base class for all input and construction errors raised here."""


class EmptyInput(CodeError):
    pass


class InvalidWeight(CodeError):
    pass


class NegativeWeight(InvalidWeight):
    pass


class AllZero(CodeError):
    pass


class LabelCountMismatch(CodeError):
    pass


class SymbolMismatch(CodeError):
    pass


class UnknownSymbol(CodeError):
    pass


class Infeasible(CodeError):
    pass


class DecodeError(CodeError):
    def __init__(self, message: str, offset: int):
        super().__init__(message)
        self.offset = offset


class DanglingSuffix(DecodeError):
    pass


class NoMatch(DecodeError):
    pass


@dataclass(frozen=True)
class Distribution:
    """Ordered, unnormalized symbol weights.

    ``exact`` is True when every weight is a Python int; solvers then run
    in exact integer arithmetic. Otherwise weights are floats.
    """

    weights: tuple
    labels: tuple[str, ...] | None = None

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def exact(self) -> bool:
        return all(type(w) is int for w in self.weights)

    @property
    def total(self):
        return sum(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def permuted(self, order: Sequence[int]) -> "Distribution":
        labels = None if self.labels is None else tuple(self.labels[k] for k in order)
        return Distribution(tuple(self.weights[k] for k in order), labels)


def _coerce_weight(x):
    if isinstance(x, bool):
        raise InvalidWeight(f"weight must be a number, got {x!r}")
    if isinstance(x, numbers.Integral):
        return int(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    if isinstance(x, numbers.Real):
        x = float(x)
        if not math.isfinite(x):
            raise InvalidWeight(f"weight must be finite, got {x!r}")
        return x
    raise InvalidWeight(f"weight must be a number, got {x!r}")


def validate_distribution(
    weights: Iterable, labels: Sequence[str] | None = None
) -> Distribution:
    """Check raw weights and wrap them in a :class:`Distribution`.

    Integer inputs (including numpy integers) keep exact mode. Any float
    weight switches the whole distribution to float mode.
    """
    ws = [_coerce_weight(x) for x in weights]
    if not ws:
        raise EmptyInput("distribution has no weights")
    for i, w in enumerate(ws):
        if w < 0:
            raise NegativeWeight(f"weight {i} is negative: {w!r}")
    if not any(w > 0 for w in ws):
        raise AllZero("at least one weight must be positive")
    if not all(type(w) is int for w in ws):
        ws = [float(w) for w in ws]
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != len(ws):
            raise LabelCountMismatch(
                f"{len(labels)} labels given for {len(ws)} weights"
            )
    return Distribution(tuple(ws), labels)


DECIMAL_SCALE_CAP = 10**9


def parse_distribution(text: str) -> tuple[Distribution, bool]:
    """Parse the line-oriented distribution format.

    Each nonblank line is ``weight`` or ``label<TAB>weight``; lines starting
    with ``#`` are skipped. Decimal weights are scaled by the smallest power
    of ten that makes them all integers. If that power exceeds
    ``DECIMAL_SCALE_CAP`` the weights are kept as floats.

    Returns the distribution and a flag that is True when float mode was
    forced.
    """
    raw: list[Decimal] = []
    labels: list[str] = []
    has_label = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" in line:
            label, _, value = line.rpartition("\t")
            labels.append(label.strip())
            has_label.append(True)
        else:
            value = line
            labels.append(str(len(raw)))
            has_label.append(False)
        try:
            d = Decimal(value.strip())
        except InvalidOperation:
            raise InvalidWeight(f"line {lineno}: not a number: {value.strip()!r}") from None
        if not d.is_finite():
            raise InvalidWeight(f"line {lineno}: weight must be finite")
        raw.append(d)
    if not raw:
        raise EmptyInput("distribution has no weights")

    exponent = max(0, max(-d.normalize().as_tuple().exponent for d in raw))
    scale = 10**exponent
    float_mode = scale > DECIMAL_SCALE_CAP
    if float_mode:
        weights = [float(d) for d in raw]
    else:
        weights = [int(d * scale) for d in raw]
    out_labels = labels if any(has_label) else None
    return validate_distribution(weights, out_labels), float_mode


def ones_count(word: str) -> int:
    """Number of ``1`` symbols in a bit string."""
    if word.strip("01"):
        raise ValueError(f"not a binary string: {word!r}")
    return word.count("1")


class Cost(NamedTuple):
    raw: object
    normalized: object


class KraftSum(NamedTuple):
    total: Fraction
    is_full: bool


def kraft_sum(lengths: Iterable[int]) -> KraftSum:
    total = sum((Fraction(1, 2**length) for length in lengths), Fraction(0))
    return KraftSum(total, total == 1)


@dataclass(frozen=True)
class CodeBook:
    """Codeword per symbol index plus the mode and ones budget it was built for."""

    codewords: tuple[str, ...]
    mode: str = "prefix"
    D: int | None = None
    labels: tuple[str, ...] | None = None
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        for w in self.codewords:
            if w.strip("01"):
                raise ValueError(f"not a binary string: {w!r}")
        object.__setattr__(self, "codewords", tuple(self.codewords))
        object.__setattr__(
            self, "_index", {w: s for s, w in enumerate(self.codewords)}
        )

    @property
    def n(self) -> int:
        return len(self.codewords)

    def __len__(self) -> int:
        return len(self.codewords)

    def __getitem__(self, symbol: int) -> str:
        return self.codewords[symbol]

    @property
    def entries(self) -> list[tuple[int, str]]:
        return list(enumerate(self.codewords))

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.codewords)

    @property
    def ones(self) -> tuple[int, ...]:
        return tuple(w.count("1") for w in self.codewords)

    def max_ones(self) -> int:
        return max(self.ones)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def symbol_for(self, codeword: str) -> int:
        return self._index[codeword]

    def is_prefix_free(self) -> bool:
        # after sorting, any prefix relation shows up between neighbours
        words = sorted(self.codewords)
        if len(set(words)) != len(words):
            return False
        return not any(b.startswith(a) for a, b in zip(words, words[1:]))

    def is_alphabetic(self) -> bool:
        return all(a < b for a, b in zip(self.codewords, self.codewords[1:]))

    def to_dict(self, dist: Distribution | None = None) -> dict:
        entries = []
        for i, w in enumerate(self.codewords):
            entry = {"symbol": i}
            if self.labels is not None:
                entry["label"] = self.labels[i]
            entry.update(codeword=w, length=len(w), ones=w.count("1"))
            entries.append(entry)
        out = {"mode": self.mode, "D": self.D, "entries": entries}
        if dist is not None:
            cost = average_cost(self, dist)
            out["raw_cost"] = cost.raw
            out["normalized_cost"] = float(cost.normalized)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "CodeBook":
        try:
            entries = sorted(data["entries"], key=lambda e: int(e["symbol"]))
            symbols = [int(e["symbol"]) for e in entries]
            if symbols != list(range(len(entries))):
                raise ValueError("symbols must be 0..n-1")
            words = tuple(str(e["codeword"]) for e in entries)
            labels = None
            if any("label" in e for e in entries):
                labels = tuple(str(e.get("label", e["symbol"])) for e in entries)
            return cls(words, data.get("mode", "prefix"), data.get("D"), labels)
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed codebook: {exc}") from None


class CodeTree:
    """Binary code tree: left edge is 0, right edge is 1, leaves hold symbols.

    Nodes are assembled by the builders and treated as read-only afterwards.
    """

    __slots__ = ("symbol", "left", "right")

    def __init__(self, symbol=None, left=None, right=None):
        self.symbol = symbol
        self.left = left
        self.right = right

    @property
    def is_leaf(self) -> bool:
        return self.left is None and self.right is None

    def leaves(self) -> list[tuple[int, str]]:
        """(symbol, path) pairs in left-to-right order."""
        out = []
        stack = [(self, "")]
        while stack:
            node, path = stack.pop()
            if node.is_leaf:
                out.append((node.symbol, path))
                continue
            if node.right is not None:
                stack.append((node.right, path + "1"))
            if node.left is not None:
                stack.append((node.left, path + "0"))
        return out

    def codewords(self) -> tuple[str, ...]:
        pairs = self.leaves()
        words = [None] * len(pairs)
        for s, path in pairs:
            words[s] = path
        return tuple(words)

    def is_full(self) -> bool:
        stack = [self]
        while stack:
            node = stack.pop()
            if (node.left is None) != (node.right is None):
                return False
            if not node.is_leaf:
                stack.extend((node.left, node.right))
        return True

    def max_right_edges(self) -> int:
        return max(path.count("1") for _, path in self.leaves())

    @classmethod
    def from_codewords(cls, codewords: Sequence[str]) -> "CodeTree":
        root = cls()
        for s, word in enumerate(codewords):
            node = root
            for bit in word:
                if node.symbol is not None:
                    raise ValueError("codewords are not prefix-free")
                attr = "left" if bit == "0" else "right"
                if getattr(node, attr) is None:
                    setattr(node, attr, cls())
                node = getattr(node, attr)
            if not node.is_leaf or node.symbol is not None:
                raise ValueError("codewords are not prefix-free")
            node.symbol = s
        return root


def average_cost(book: CodeBook, dist: Distribution) -> Cost:
    """Weighted codeword length, raw and divided by the total weight."""
    if book.n != dist.n:
        raise SymbolMismatch(f"codebook has {book.n} symbols, distribution {dist.n}")
    raw = sum(w * len(c) for w, c in zip(dist.weights, book.codewords))
    if dist.exact:
        return Cost(raw, Fraction(raw, dist.total))
    return Cost(raw, raw / dist.total)


def encode(book: CodeBook, message: Iterable[int]) -> str:
    parts = []
    for s in message:
        if not isinstance(s, numbers.Integral) or not 0 <= s < book.n:
            raise UnknownSymbol(f"symbol {s!r} not in codebook")
        parts.append(book.codewords[s])
    return "".join(parts)


def _trie(book: CodeBook) -> dict:
    root: dict = {}
    for s, word in enumerate(book.codewords):
        node = root
        for bit in word:
            node = node.setdefault(bit, {})
        node[None] = s
    return root


def decode(book: CodeBook, bits: str) -> list[int]:
    """Parse ``bits`` into symbol indices using a prefix-free codebook."""
    if book.n == 1 and book.codewords[0] == "":
        if bits:
            raise NoMatch("single-symbol code has an empty codeword", 0)
        return []
    root = _trie(book)
    out = []
    node = root
    for offset, bit in enumerate(bits):
        nxt = node.get(bit)
        if nxt is None:
            raise NoMatch(f"no codeword matches at offset {offset}", offset)
        if None in nxt:
            out.append(nxt[None])
            node = root
        else:
            node = nxt
    if node is not root:
        raise DanglingSuffix(f"dangling suffix at offset {len(bits)}", len(bits))
    return out
