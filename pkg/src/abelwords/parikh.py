"""Words over an indexed alphabet, Parikh vectors, and block tests.

A word stores its letters as a numpy array of symbol indices so that
counting stays cheap on multi-megabyte inputs. Parikh vectors are plain
tuples of per-letter counts. The central primitive is the block test:
does every length-d block of a word have the same Parikh vector?
"""

from __future__ import annotations

import numpy as np

ParikhVector = tuple[int, ...]

# words at or below this size use the bytes-based block check, which
# short-circuits at the first mismatching block
_SMALL_WORD = 2048


class Word:
    """Immutable word over the alphabet {0, ..., alphabet_size - 1}.

    Text round-trips use a..z, capping textual alphabets at 26 letters;
    the in-memory representation has no such limit.
    """

    __slots__ = ("letters", "alphabet_size")

    def __init__(self, letters, alphabet_size: int):
        if alphabet_size < 1:
            raise ValueError("alphabet_size must be >= 1")
        arr = np.asarray(letters)
        if arr.ndim != 1:
            raise ValueError("letters must be one-dimensional")
        if arr.size:
            if not np.issubdtype(arr.dtype, np.integer):
                raise ValueError("letters must be integers")
            lo, hi = int(arr.min()), int(arr.max())
            if lo < 0 or hi >= alphabet_size:
                raise ValueError(
                    f"letter out of range for alphabet of size {alphabet_size}"
                )
        dtype = np.uint8 if alphabet_size <= 256 else np.int64
        arr = arr.astype(dtype, copy=False)
        if arr.flags.writeable:
            # never freeze or alias storage the caller still owns
            if arr is letters or arr.base is not None:
                arr = arr.copy()
            arr.setflags(write=False)
        object.__setattr__(self, "letters", arr)
        object.__setattr__(self, "alphabet_size", alphabet_size)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return self.letters.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return (
            self.alphabet_size == other.alphabet_size
            and self.letters.size == other.letters.size
            and bool(np.array_equal(self.letters, other.letters))
        )

    def __hash__(self) -> int:
        return hash((self.alphabet_size, self.letters.tobytes()))

    def __repr__(self) -> str:
        if self.alphabet_size <= 26 and len(self) <= 40:
            return f"Word({self.to_text()!r}, k={self.alphabet_size})"
        return f"Word(<{len(self)} letters>, k={self.alphabet_size})"

    @classmethod
    def from_text(cls, text: str, alphabet_size: int | None = None) -> "Word":
        """Parse a word over a..z; k defaults to the largest letter present."""
        raw = text.encode("ascii", errors="strict")
        arr = np.frombuffer(raw, dtype=np.uint8) - ord("a")
        if arr.size and (arr.min() < 0 or arr.max() > 25):
            raise ValueError("textual words must use letters a..z")
        if alphabet_size is None:
            alphabet_size = int(arr.max()) + 1 if arr.size else 1
        return cls(arr, alphabet_size)

    def to_text(self) -> str:
        if self.alphabet_size > 26:
            raise ValueError("only alphabets up to 26 letters serialize as text")
        return (self.letters.astype(np.uint8) + ord("a")).tobytes().decode("ascii")

    def prefix(self, d: int) -> "Word":
        if not 0 <= d <= len(self):
            raise ValueError(f"prefix length {d} out of range")
        return Word(self.letters[:d], self.alphabet_size)

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        k = max(self.alphabet_size, other.alphabet_size)
        return Word(np.concatenate([self.letters, other.letters]), k)


def parikh(w: Word) -> ParikhVector:
    """Per-letter occurrence counts of w."""
    counts = np.bincount(w.letters, minlength=w.alphabet_size)
    return tuple(int(c) for c in counts)


def _block_count_table(letters: np.ndarray, d: int, k: int) -> np.ndarray:
    """Per-block letter counts as an (n/d, k) int64 table."""
    m = letters.reshape(-1, d)
    if k <= 8:
        return np.stack([(m == c).sum(axis=1) for c in range(k)], axis=1)
    # wide alphabets: one bincount pass over block-tagged letters
    nblocks = m.shape[0]
    tags = np.repeat(np.arange(nblocks, dtype=np.int64), d) * k
    return np.bincount(tags + letters.astype(np.int64), minlength=nblocks * k).reshape(
        nblocks, k
    )


def block_parikhs(w: Word, d: int) -> list[ParikhVector]:
    """Parikh vectors of the consecutive length-d blocks of w, in order."""
    if d < 1 or len(w) % d:
        raise ValueError(f"block length {d} must be >= 1 and divide {len(w)}")
    table = _block_count_table(w.letters, d, w.alphabet_size)
    return [tuple(int(c) for c in row) for row in table]


def _blocks_equal_bytes(raw: bytes, n: int, d: int, k: int) -> bool:
    # count only k-1 letters: equal-length blocks pin the last count
    first = [raw.count(c, 0, d) for c in range(k - 1)]
    for off in range(d, n, d):
        for c in range(k - 1):
            if raw.count(c, off, off + d) != first[c]:
                return False
    return True


def _blocks_equal_table(letters: np.ndarray, d: int, k: int) -> bool:
    table = _block_count_table(letters, d, k)
    return bool((table[1:] == table[0]).all())


def has_a_root_of_length(w: Word, d: int) -> bool:
    """True iff all length-d blocks of w share one Parikh vector.

    d = |w| is the single-block reading and returns True; callers
    interested in proper roots must pass d < |w|.
    """
    n = len(w)
    if d < 1 or d > n or n % d:
        raise ValueError(f"root length {d} must satisfy 1 <= d <= |w| and d | |w|")
    if d == n:
        return True
    if n <= _SMALL_WORD and w.alphabet_size <= 8 and w.letters.dtype == np.uint8:
        return _blocks_equal_bytes(w.letters.tobytes(), n, d, w.alphabet_size)
    return _blocks_equal_table(w.letters, d, w.alphabet_size)
