"""String rewriting for words in the generators of G_{r,s}.

This is deliberately independent of :mod:`grs.kernels`: it applies the
defining relations one adjacent pair at a time, so it can serve as the
oracle for the closed-form monomial products used everywhere else.

Letters are single characters internally::

    a d f F b c D E      (F = f^-1, D = Det, E = Det^-1)
"""

from __future__ import annotations

from ._kernels_py import poly_iadd, poly_mul

_R = {(2, 0): 1}
_RI = {(-2, 0): 1}
_S = {(0, 2): 1}
_SI = {(0, -2): 1}
_ONE = {(0, 0): 1}
_LAM = {(2, 0): 1, (-2, 0): -1}

RULES: dict[tuple[str, str], tuple[tuple[dict, tuple[str, ...]], ...]] = {
    ("d", "a"): ((_ONE, ("a", "d")), (_LAM, ("b", "c"))),
    ("a", "d"): ((_ONE, ("D",)), (_RI, ("b", "c"))),
    ("b", "a"): ((_R, ("a", "b")),),
    ("c", "a"): ((_R, ("a", "c")),),
    ("b", "d"): ((_RI, ("d", "b")),),
    ("c", "d"): ((_RI, ("d", "c")),),
    ("c", "b"): ((_ONE, ("b", "c")),),
    ("f", "a"): ((_ONE, ("a", "f")),),
    ("F", "a"): ((_ONE, ("a", "F")),),
    ("f", "d"): ((_ONE, ("d", "f")),),
    ("F", "d"): ((_ONE, ("d", "F")),),
    ("b", "f"): ((_SI, ("f", "b")),),
    ("c", "f"): ((_S, ("f", "c")),),
    ("b", "F"): ((_S, ("F", "b")),),
    ("c", "F"): ((_SI, ("F", "c")),),
    ("f", "F"): ((_ONE, ()),),
    ("F", "f"): ((_ONE, ()),),
    ("D", "E"): ((_ONE, ()),),
    ("E", "D"): ((_ONE, ()),),
}
for _x in "adfFbc":
    RULES[("D", _x)] = ((_ONE, (_x, "D")),)
    RULES[("E", _x)] = ((_ONE, (_x, "E")),)

LETTERS = "adfFbcDE"


def redexes(word: tuple[str, ...]) -> list[int]:
    return [i for i in range(len(word) - 1) if (word[i], word[i + 1]) in RULES]


def _pick(word, strategy: str):
    n = len(word)
    if strategy == "leftmost":
        for i in range(n - 1):
            if (word[i], word[i + 1]) in RULES:
                return i
        return None
    if strategy == "rightmost":
        for i in range(n - 2, -1, -1):
            if (word[i], word[i + 1]) in RULES:
                return i
        return None
    raise ValueError(f"unknown strategy {strategy!r}")


def rewrite(terms: dict[tuple[str, ...], dict], strategy: str = "leftmost"):
    """Rewrite a linear combination of words to normal words.

    ``strategy`` picks which redex is contracted first in each word:
    ``"leftmost"`` or ``"rightmost"``.  Returns ``{normal word: poly}``.
    """
    pending = {w: dict(p) for w, p in terms.items() if p}
    done: dict[tuple[str, ...], dict] = {}
    while pending:
        word, p = pending.popitem()
        i = _pick(word, strategy)
        if i is None:
            cur = done.setdefault(word, {})
            poly_iadd(cur, p)
            if not cur:
                del done[word]
            continue
        head, tail = word[:i], word[i + 2:]
        for coeff, repl in RULES[(word[i], word[i + 1])]:
            new = head + repl + tail
            cur = pending.setdefault(new, {})
            poly_iadd(cur, poly_mul(p, coeff))
            if not cur:
                del pending[new]
    return done


def word_to_monomial(word: tuple[str, ...]) -> tuple[int, int, int, int, int, int]:
    """Exponent tuple of a normal word."""
    k = word.count("a")
    l = word.count("d")
    t = word.count("f") - word.count("F")
    m = word.count("b")
    n = word.count("c")
    j = word.count("D") - word.count("E")
    return (k, l, t, m, n, j)
