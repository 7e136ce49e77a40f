"""Free-group words over named generators, with exact free reduction.

A word is an immutable sequence of signed letters.  All constructors
reduce, so every ``Word`` in circulation is freely reduced and two words
are equal exactly when their reduced letter sequences agree.  The same
engine serves plain free-group certificates and the twist-word algebra,
which only needs a larger alphabet.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

# A letter is a generator name with a sign, e.g. ("x", 1) or ("x", -1).
Letter = tuple[str, int]


def free_reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    """Cancel adjacent inverse pairs until none remain (single stack pass)."""
    stack: list[Letter] = []
    for name, sign in letters:
        if sign not in (1, -1):
            raise ValueError(f"letter sign must be +1 or -1, got {sign!r}")
        if stack and stack[-1][0] == name and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((name, sign))
    return tuple(stack)


class Word:
    """A freely reduced word in the free group on named generators."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", free_reduce(letters))

    # Words are value types; never mutate them.
    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def _raw(cls, letters: tuple[Letter, ...]) -> "Word":
        """Wrap an already-reduced tuple without re-scanning."""
        w = cls.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def identity(cls) -> "Word":
        return _IDENTITY

    @classmethod
    def generator(cls, name: str, sign: int = 1) -> "Word":
        if not name or not all(c.isalnum() or c == "_" for c in name):
            raise ValueError(f"generator name must match [a-zA-Z0-9_]+, got {name!r}")
        return cls._raw(((name, sign),))

    def __mul__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return Word._raw(tuple((n, -s) for n, s in reversed(self.letters)))

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return _IDENTITY
        base = self if n > 0 else ~self
        result = base
        for _ in range(abs(n) - 1):
            result = result * base
        return result

    def conjugate(self, by: "Word") -> "Word":
        """Return ``by * self * by^-1``."""
        return by * self * ~by

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        parts = []
        for name, sign, count in run_length(self.letters):
            exp = sign * count
            parts.append(name if exp == 1 else f"{name}^{exp}")
        return " ".join(parts)


def run_length(letters: Sequence[Letter]) -> Iterator[tuple[str, int, int]]:
    """Group consecutive equal letters into (name, sign, count) runs."""
    i = 0
    while i < len(letters):
        name, sign = letters[i]
        j = i
        while j < len(letters) and letters[j] == (name, sign):
            j += 1
        yield name, sign, j - i
        i = j


_IDENTITY = Word._raw(())


def generators(*names: str) -> tuple[Word, ...]:
    """Convenience constructor: ``x, y = generators("x", "y")``."""
    return tuple(Word.generator(n) for n in names)


def parse_word(text: str) -> Word:
    """Parse a whitespace-separated word like ``"x y^-2 z"``.

    Each token is a generator name with an optional ``^<int>`` exponent.
    ``"1"`` (alone) denotes the identity.
    """
    text = text.strip()
    if text in ("", "1"):
        return Word.identity()
    letters: list[Letter] = []
    for token in text.split():
        name, _, exp_text = token.partition("^")
        if not name:
            raise ValueError(f"malformed token {token!r}")
        exp = 1
        if exp_text:
            try:
                exp = int(exp_text)
            except ValueError:
                raise ValueError(f"malformed exponent in token {token!r}") from None
            if exp == 0:
                raise ValueError(f"zero exponent in token {token!r}")
        Word.generator(name)  # validates the name
        letters.extend([(name, 1 if exp > 0 else -1)] * abs(exp))
    return Word(letters)


def commutator(a: Word, b: Word) -> Word:
    """Return ``a b a^-1 b^-1`` reduced."""
    return a * b * ~a * ~b


def multiply(*words: Word) -> Word:
    out = Word.identity()
    for w in words:
        out = out * w
    return out
