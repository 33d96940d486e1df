"""Generators for the three unimodular sequence families.

Family A: MN sequences of length M*N^2 built from a non-affine permutation
of Z_N; zero ambiguity over (-floor(N/K), floor(N/K)) x (-K, K).

Family B: N sequences of length N*(K*N+P) with a comb-like spectrum; zero
ambiguity over (-N, N) x (-K, K), enforced by successive frequency nulls.

Family C: p sequences of length p*(p-1) from a shift-injective mapping
Z_{p-1} -> Z_p; ambiguity magnitudes bounded by p near the origin.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from math import gcd, lcm
from typing import Optional

import numpy as np

from .core import PhaseSequence, SequenceSet

__all__ = [
    "BRUTE_FORCE_CAP",
    "PermutationSigma",
    "MappingPi",
    "power_permutation",
    "find_primitive_element",
    "exp_mapping",
    "validate_mapping",
    "construct_a",
    "construct_b",
    "construct_c",
    "time_index_parts_a",
    "time_index_parts_b",
    "time_index_parts_c",
]

# Brute-force validators are quadratic in the modulus; above this size they
# only run when explicitly forced.
BRUTE_FORCE_CAP = 257


def _is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _is_primitive(g: int, p: int) -> bool:
    if g % p == 0:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q in _prime_factors(p - 1))


def _affine_witness(table: tuple[int, ...], n: int) -> Optional[tuple[int, int]]:
    """(a, b) with table[x] = a*x + b mod n for all x, or None.

    If such (a, b) exists then b = table[0], so one scan per slope suffices.
    """
    b = table[0]
    for a in range(n):
        if all(table[x] == (a * x + b) % n for x in range(n)):
            return a, b
    return None


@dataclass(frozen=True)
class PermutationSigma:
    """A permutation of Z_N that is not an affine map x -> a*x + b.

    Construction uses it to separate sequences; an affine permutation would
    collapse two set members onto cyclic shifts of each other. Non-affinity
    is brute-force checked on construction for n <= BRUTE_FORCE_CAP (pass
    ``check_non_affine`` to force or skip).
    """

    n: int
    table: tuple[int, ...]
    check_non_affine: InitVar[Optional[bool]] = None

    def __post_init__(self, check_non_affine):
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        object.__setattr__(self, "table", tuple(int(x) for x in self.table))
        if sorted(self.table) != list(range(self.n)):
            raise ValueError(f"table is not a permutation of Z_{self.n}")
        if check_non_affine is None:
            check_non_affine = self.n <= BRUTE_FORCE_CAP
        if check_non_affine:
            hit = _affine_witness(self.table, self.n)
            if hit is not None:
                raise ValueError(
                    f"permutation is affine: table[x] = {hit[0]}*x + {hit[1]} mod {self.n}"
                )

    def __call__(self, x: int) -> int:
        return self.table[x % self.n]


@dataclass(frozen=True)
class MappingPi:
    """A mapping Z_{p-1} -> Z_p used by the length-p(p-1) family.

    Shape is validated here; the shift-injectivity condition (for every
    shift a != 0 and offset b, pi(<x+a>) = pi(x) + b mod p has at most one
    solution) is checked by :func:`validate_mapping`.
    """

    p: int
    table: tuple[int, ...]

    def __post_init__(self):
        if not _is_odd_prime(self.p):
            raise ValueError(f"{self.p} is not an odd prime")
        object.__setattr__(self, "table", tuple(int(x) for x in self.table))
        if len(self.table) != self.p - 1:
            raise ValueError(f"table must have {self.p - 1} entries, got {len(self.table)}")
        if any(not 0 <= x < self.p for x in self.table):
            raise ValueError(f"table entries must lie in Z_{self.p}")

    def __call__(self, x: int) -> int:
        return self.table[x % (self.p - 1)]


def validate_mapping(
    pi: MappingPi, force: bool = False
) -> tuple[bool, Optional[tuple[int, int]]]:
    """Brute-force the shift-injectivity condition of a MappingPi.

    Returns (True, None) when for every a in Z*_{p-1} and b in Z_p the
    equation pi(<x+a>_{p-1}) = pi(x) + b mod p has at most one solution;
    otherwise (False, (a, b)) with the first offending pair. Equivalent to
    checking that no difference value repeats within any shift a, so the
    scan is quadratic rather than cubic.
    """
    p, m = pi.p, pi.p - 1
    if p > BRUTE_FORCE_CAP and not force:
        raise ValueError(
            f"refusing brute-force validation for p = {p} > {BRUTE_FORCE_CAP}; pass force=True"
        )
    for a in range(1, m):
        seen: dict[int, int] = {}
        for x in range(m):
            b = (pi.table[(x + a) % m] - pi.table[x]) % p
            if b in seen:
                return False, (a, b)
            seen[b] = x
    return True, None


def power_permutation(n: int, a: int) -> PermutationSigma:
    """The permutation x -> x^a mod n for an odd prime n.

    Requires 1 < a < n and gcd(a, n-1) = 1, which makes the map bijective
    on Z_n and never affine; non-affinity is still re-verified.
    """
    if not _is_odd_prime(n):
        raise ValueError(f"{n} is not an odd prime")
    if not 1 < a < n:
        raise ValueError(f"exponent must satisfy 1 < a < {n}, got {a}")
    if gcd(a, n - 1) != 1:
        raise ValueError(f"gcd({a}, {n - 1}) = {gcd(a, n - 1)}, must be 1")
    table = tuple(pow(x, a, n) for x in range(n))
    return PermutationSigma(n, table, check_non_affine=True)


def find_primitive_element(p: int, override: Optional[int] = None) -> int:
    """Smallest generator of the multiplicative group mod p, or a validated override."""
    if not _is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if override is not None:
        if not 1 <= override < p:
            raise ValueError(f"override {override} outside [1, {p})")
        if not _is_primitive(override, p):
            raise ValueError(f"{override} is not a primitive element mod {p}")
        return override
    for g in range(2, p):
        if _is_primitive(g, p):
            return g
    raise RuntimeError(f"no primitive element found mod {p}")  # unreachable for prime p


def exp_mapping(p: int, alpha: Optional[int] = None) -> MappingPi:
    """The mapping x -> alpha^x mod p for a primitive element alpha.

    Defaults to the smallest primitive element; pass ``alpha`` to pin a
    specific generator. Shift-injectivity is re-verified for p <= 101.
    """
    g = find_primitive_element(p, alpha)
    pi = MappingPi(p, tuple(pow(g, x, p) for x in range(p - 1)))
    if p <= 101:
        ok, witness = validate_mapping(pi)
        if not ok:  # cannot happen for a primitive element; defensive
            raise RuntimeError(f"exponential mapping failed validation at {witness}")
    return pi


def time_index_parts_a(t: int, m: int, n: int) -> tuple[int, int, int]:
    """(t2, t1, t0) with t = m*n*t2 + n*t1 + t0, t2 in Z_n, t1 in Z_m, t0 in Z_n."""
    return t // (m * n), (t // n) % m, t % n


def time_index_parts_b(t: int, n: int) -> tuple[int, int]:
    """(t1, t0) with t = n*t1 + t0 and t0 in Z_n."""
    return t // n, t % n


def time_index_parts_c(t: int, p: int) -> tuple[int, int]:
    """(t1, t0) with t = (p-1)*t1 + t0 and t0 in Z_{p-1}."""
    return t // (p - 1), t % (p - 1)


def construct_a(m: int, n: int, k: int, sigma: PermutationSigma) -> SequenceSet:
    """Family A: MN sequences of length M*N^2.

    Element t of sequence number ``N*n1 + n0`` is
    w_N^{K*t2*t0 + n0*sigma(t0)} * w_M^{n1*t1}; phases are stored exactly
    over the common order lcm(N, M).
    """
    if m < 1 or n < 1 or k < 1:
        raise ValueError("M, N, K must be positive integers")
    if k >= n:
        raise ValueError(f"K < N required, got K = {k}, N = {n}")
    if gcd(k, n) != 1:
        raise ValueError(f"gcd(K, N) must be 1, got gcd({k}, {n}) = {gcd(k, n)}")
    if sigma.n != n:
        raise ValueError(f"sigma modulus mismatch: permutation over Z_{sigma.n}, N = {n}")

    L = m * n * n
    D = lcm(n, m)
    t = np.arange(L, dtype=np.int64)
    t2 = t // (m * n)
    t1 = (t // n) % m
    t0 = t % n
    sig_t0 = np.asarray(sigma.table, dtype=np.int64)[t0]

    seqs = []
    for idx in range(m * n):
        n1, n0 = divmod(idx, n)
        phases = ((D // n) * (k * t2 * t0 + n0 * sig_t0) + (D // m) * (n1 * t1)) % D
        seqs.append(PhaseSequence(D, tuple(int(x) for x in phases)))
    provenance = {"family": "a", "M": m, "N": n, "K": k, "sigma": list(sigma.table)}
    return SequenceSet(tuple(seqs), provenance)


def construct_b(k: int, n: int, p_off: int, relaxed: bool = False) -> SequenceSet:
    """Family B: N comb-spectrum sequences of length N*(K*N+P).

    Element t of sequence number ``n`` is w_N^{n*t0} * w_{KN+P}^{K*t1*t0},
    stored exactly over the order N*(KN+P). Requires P < K; the coprimality
    gcd(P, N*K) = 1 is enforced unless ``relaxed`` is set.
    """
    if k < 1 or n < 1 or p_off < 1:
        raise ValueError("K, N, P must be positive integers")
    if p_off >= k:
        raise ValueError(f"P < K required, got P = {p_off}, K = {k}")
    if not relaxed and gcd(p_off, n * k) != 1:
        raise ValueError(
            f"gcd(P, N*K) must be 1, got gcd({p_off}, {n * k}) = {gcd(p_off, n * k)}"
            " (pass relaxed=True to waive)"
        )

    q = k * n + p_off
    L = n * q
    t = np.arange(L, dtype=np.int64)
    t1 = t // n
    t0 = t % n
    seqs = []
    for idx in range(n):
        phases = (q * idx * t0 + n * k * t1 * t0) % L
        seqs.append(PhaseSequence(L, tuple(int(x) for x in phases)))
    provenance = {"family": "b", "K": k, "N": n, "P": p_off}
    return SequenceSet(tuple(seqs), provenance)


def construct_c(p: int, pi: MappingPi, validate: Optional[bool] = None) -> SequenceSet:
    """Family C: p sequences of length p*(p-1) over the order-p phase lattice.

    Element t of sequence number ``n`` is w_p^{t1*pi(t0) + n*t0}. The
    mapping's shift-injectivity is verified by default for p <= BRUTE_FORCE_CAP.
    """
    if not _is_odd_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    if pi.p != p:
        raise ValueError(f"mapping modulus mismatch: mapping for p = {pi.p}, requested {p}")
    if validate is None:
        validate = p <= BRUTE_FORCE_CAP
    if validate:
        ok, witness = validate_mapping(pi, force=True)
        if not ok:
            raise ValueError(
                f"mapping fails the shift-injectivity condition at (a, b) = {witness}"
            )

    L = p * (p - 1)
    t = np.arange(L, dtype=np.int64)
    t1 = t // (p - 1)
    t0 = t % (p - 1)
    pi_t0 = np.asarray(pi.table, dtype=np.int64)[t0]
    seqs = []
    for idx in range(p):
        phases = (t1 * pi_t0 + idx * t0) % p
        seqs.append(PhaseSequence(p, tuple(int(x) for x in phases)))
    provenance = {"family": "c", "p": p, "pi": list(pi.table)}
    return SequenceSet(tuple(seqs), provenance)
