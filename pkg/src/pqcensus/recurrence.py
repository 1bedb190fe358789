"""Linear recurrences extracted from rational generating functions.

If v(z) = P(z)/Q(z) with Q(0) = 1 and Q of degree d, then the coefficient
sequence satisfies v(n) = sum_i c_i v(n-i) with c_i = -Q_i as soon as n
exceeds deg P; the numerator only feeds the finitely many earlier terms.
Those early terms are always taken from exact series division, never from
closed forms, so the inhomogeneous prefix is handled uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass

from pqcensus.genfunc import derive, Schlafli
from pqcensus.polyarith import RationalGF, series_coeffs


@dataclass(frozen=True)
class LinRec:
    """Constant-coefficient recurrence with its exact launch window.

    ``initial_terms`` covers indices 0..max(deg P, d-1); the recurrence is
    trusted only beyond that.  ``inhomogeneous_prefix`` lists the indices
    where the numerator contributes a nonzero correction.
    """

    order: int
    rec_coeffs: tuple[int, ...]
    initial_terms: tuple[int, ...]
    inhomogeneous_prefix: tuple[int, ...]


def rec_from_gf(gf: RationalGF) -> LinRec:
    """Read the recurrence off a normalized rational function."""
    d = gf.den.degree
    coeffs = tuple(-gf.den[i] for i in range(1, d + 1))
    n_init = max(gf.num.degree, d - 1)
    initial = tuple(series_coeffs(gf, n_init)) if n_init >= 0 else ()
    prefix = tuple(n for n, c in enumerate(gf.num.coeffs) if c)
    return LinRec(d, coeffs, initial, prefix)


def rec_eval(rec: LinRec, n_max: int) -> list[int]:
    """Terms v(0..n_max), replaying the recurrence past the stored prefix."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    out = list(rec.initial_terms[: n_max + 1])
    cs = rec.rec_coeffs
    d = rec.order
    for n in range(len(out), n_max + 1):
        out.append(sum(cs[i - 1] * out[n - i] for i in range(1, d + 1)))
    return out


_FIBONACCI_SYMBOLS = {
    5: (4, 5),
    4: (6, 4),
    7: (3, 7),
}


def fibonacci_check(q0: int, n_max: int) -> bool:
    """Check v(n) = q * F(2n) for the three censuses one step past Euclidean.

    ``q0`` selects the symbol by its vertex degree: 5 -> {4,5}, 4 -> {6,4},
    7 -> {3,7}.  Fibonacci numbers are computed independently from the
    definition F(0)=0, F(1)=1, F(m)=F(m-1)+F(m-2).
    """
    if q0 not in _FIBONACCI_SYMBOLS:
        raise ValueError(f"no Fibonacci census for q0={q0!r}; expected one of 5, 4, 7")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    p, q = _FIBONACCI_SYMBOLS[q0]
    v = rec_eval(rec_from_gf(derive(Schlafli(p, q)).v), n_max)
    fib = [0, 1]
    while len(fib) <= 2 * n_max:
        fib.append(fib[-1] + fib[-2])
    return all(v[n] == q * fib[2 * n] for n in range(1, n_max + 1))
