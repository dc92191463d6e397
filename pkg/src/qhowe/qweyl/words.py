"""Letter-by-letter rewriting of generator words to normal form.

This is the literal rewrite system on words (``d mu -> {q gamma}_q`` and
``mu d -> {gamma}_q`` contract a multiplier against a derivative of the same
factor), independent of the memoised
product in :mod:`qhowe.qweyl.algebra`. The redex to contract next is chosen by
a strategy (leftmost, rightmost, or random), which makes it usable as a
confluence witness: every strategy must reach the same normal form.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence

from qhowe.qarith import ONE, ZERO, RatQ
from qhowe.qweyl.algebra import AlgebraElement
from qhowe.qweyl.monomial import FIELD_INDEX, NormalMonomial, canonical_name

_INV = (RatQ.q(1) - RatQ.q(-1)).inverse()

# letter = (kind, factor, sign); kind 0 = multiplier, 1 = group-like, 2 = derivative
Letter = tuple[int, int, int]
Word = tuple[Letter, ...]

_KIND = {"mu1": (0, 0), "mu2": (0, 1), "nu": (0, 2), "g1": (1, 0), "g2": (1, 1), "w": (1, 2),
         "d1": (2, 0), "d2": (2, 1), "nab": (2, 2)}


def letter(name: str, sign: int = 1) -> Letter:
    kind, factor = _KIND[canonical_name(name)]
    if kind != 1 and sign != 1:
        raise ValueError(f"{name} is not invertible")
    return (kind, factor, sign)


def _is_redex(x: Letter, y: Letter) -> bool:
    if (x[0], x[1]) > (y[0], y[1]):
        return True
    if x[1] != y[1]:
        return False
    if x[0] == 0 and y[0] == 2:
        return True
    return x[0] == 1 and y[0] == 1 and x[2] != y[2]


def _contract(x: Letter, y: Letter) -> list[tuple[Word, RatQ]]:
    """Replacement for the adjacent pair ``x y`` (a redex)."""
    if x[1] != y[1]:
        return [((y, x), ONE)]
    kx, ky = x[0], y[0]
    if kx == 1 and ky == 1:
        return [((), ONE)]
    if kx == 1 and ky == 0:  # gamma^s mu -> q^s mu gamma^s
        return [((y, x), RatQ.q(x[2]))]
    if kx == 2 and ky == 1:  # d gamma^s -> q^s gamma^s d
        return [((y, x), RatQ.q(y[2]))]
    if kx == 2 and ky == 0:  # d mu -> {q gamma}_q
        return [(((1, x[1], 1),), RatQ.q(1) * _INV), (((1, x[1], -1),), -RatQ.q(-1) * _INV)]
    if kx == 0 and ky == 2:  # mu d -> {gamma}_q
        return [(((1, x[1], 1),), _INV), (((1, x[1], -1),), -_INV)]
    raise AssertionError(f"not a redex: {x} {y}")


def normalize_words(
    words: dict[Word, RatQ],
    strategy: str = "leftmost",
    rng: Optional[random.Random] = None,
) -> AlgebraElement:
    """Rewrite a linear combination of words until every word is normal."""
    if strategy == "random" and rng is None:
        rng = random.Random(0)
    pending = {w: c for w, c in words.items() if c}
    done: dict[NormalMonomial, RatQ] = {}
    while pending:
        word = next(iter(pending)) if strategy != "random" else rng.choice(list(pending))
        coeff = pending.pop(word)
        redexes = [i for i in range(len(word) - 1) if _is_redex(word[i], word[i + 1])]
        if not redexes:
            split = _split_mu_d(word)
            if split is None:
                m = _word_to_monomial(word)
                done[m] = done.get(m, ZERO) + coeff
                continue
            for new, c in split:
                v = pending.get(new, ZERO) + coeff * c
                if v:
                    pending[new] = v
                else:
                    pending.pop(new, None)
            continue
        if strategy == "leftmost":
            i = redexes[0]
        elif strategy == "rightmost":
            i = redexes[-1]
        else:
            i = rng.choice(redexes)
        for middle, c in _contract(word[i], word[i + 1]):
            new = word[:i] + middle + word[i + 2:]
            v = pending.get(new, ZERO) + coeff * c
            if v:
                pending[new] = v
            else:
                pending.pop(new, None)
    return AlgebraElement({m: c for m, c in done.items() if c})


def _split_mu_d(word: Word) -> Optional[list[tuple[Word, RatQ]]]:
    """In a sorted word, contract the last ``mu_j`` with the first ``d_j``.

    Only group-likes and letters of other factors sit between them, so the
    multiplier is first carried rightwards (``mu gamma^s = q^-s gamma^s mu``).
    """
    for j in range(3):
        mus = [i for i, x in enumerate(word) if x[0] == 0 and x[1] == j]
        ds = [i for i, x in enumerate(word) if x[0] == 2 and x[1] == j]
        if not mus or not ds:
            continue
        i, k = mus[-1], ds[0]
        power = -sum(x[2] for x in word[i + 1:k] if x[0] == 1 and x[1] == j)
        head = word[:i] + word[i + 1:k]
        tail = word[k + 1:]
        c = RatQ.q(power) * _INV
        return [(head + ((1, j, 1),) + tail, c), (head + ((1, j, -1),) + tail, -c)]
    return None


def _word_to_monomial(word: Word) -> NormalMonomial:
    exps = [0] * 9
    for kind, factor, sign in word:
        exps[3 * kind + factor] += sign
    return NormalMonomial(*exps)


def normalize_word(word: Sequence[Letter], strategy: str = "leftmost", rng: Optional[random.Random] = None) -> AlgebraElement:
    return normalize_words({tuple(word): ONE}, strategy, rng)


def word_from_monomial(m: NormalMonomial) -> Word:
    """Spell a normal monomial as a word (already normal)."""
    out: list[Letter] = []
    for name, e in zip(("mu1", "mu2", "nu", "g1", "g2", "w", "d1", "d2", "nab"), m):
        kind, factor = _KIND[name]
        out.extend([(kind, factor, 1 if e > 0 else -1)] * abs(e))
    return tuple(out)


assert list(_KIND) == sorted(FIELD_INDEX, key=FIELD_INDEX.get)
