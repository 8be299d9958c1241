"""Exhaustive and randomized checks of the structural claims, plus the
counterexample search harness for the open conjecture at larger lengths.

Every check returns a :class:`VerifyReport`; a report with an empty
counterexample list means the checked statement held on the scanned
domain.  Reports serialize to JSON with a fixed field order so that
runs with equal parameters produce identical output (up to the wall
time field).
"""

from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass, field
from math import factorial
from random import Random

from .autgroup import (
    find_automorphism_outside,
    is_automorphism,
    is_group_code,
    is_quasi_group_code,
    paut,
    _automorphism_images,
)
from .census import (
    _invariant_range,
    enumerate_invariant,
    enumerate_sigma_invariant,
    enumerate_subspaces,
)
from .errors import InvalidInput, TooLarge
from .fixed import (
    alpha_x,
    extra_automorphism,
    fixed_point_witness,
    fixed_subcode,
    t_sigma,
)
from .gf2 import LinearCode, Word, _rref_ints
from .perm import (
    Perm,
    _apply_bits,
    canonical_sigma,
    fixed_points,
    generate,
    is_involution,
    pair_product,
)

CONJECTURE_LENGTH_GUARD = 12
_JOURNAL_UNITS = 16


@dataclass(frozen=True)
class Counterexample:
    code: LinearCode
    reason: str

    def to_dict(self) -> dict:
        return {
            "generators": [str(g) for g in self.code.gens],
            "reason": self.reason,
        }


@dataclass
class VerifyReport:
    theorem_id: str
    n: int
    k_range: tuple[int, int]
    scanned: int
    counterexamples: list[Counterexample] = field(default_factory=list)
    witnesses_checked: int = 0
    elapsed_ms: int = 0
    slice: tuple[int, int] = (0, 1)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "n": self.n,
            "k_range": list(self.k_range),
            "scanned": self.scanned,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "witnesses_checked": self.witnesses_checked,
            "elapsed_ms": self.elapsed_ms,
            "slice": {"index": self.slice[0], "total": self.slice[1]},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _finish(report: VerifyReport, t0: float) -> VerifyReport:
    report.elapsed_ms = int((time.monotonic() - t0) * 1000)
    return report


def _require_even(n: int) -> None:
    if n <= 0 or n % 2:
        raise InvalidInput(f"length {n} is not a positive even number")


def _random_involution(rng: Random, n: int) -> Perm:
    """Uniformly structured random involution: t >= 1 random disjoint swaps."""
    t = rng.randint(1, n // 2)
    pts = list(range(n))
    rng.shuffle(pts)
    imgs = list(range(n))
    for i in range(t):
        a, b = pts[2 * i], pts[2 * i + 1]
        imgs[a], imgs[b] = b, a
    return Perm(tuple(imgs))


def _random_invariant_code(rng: Random, n: int, p: Perm) -> LinearCode:
    """Random code invariant under p: span of orbit pairs and symmetrized
    vectors."""
    rows: list[int] = []
    for _ in range(rng.randint(1, max(2, n - 1))):
        w = rng.getrandbits(n)
        if rng.random() < 0.5:
            rows.append(w ^ _apply_bits(p.images, w))
        else:
            rows.append(w)
            rows.append(_apply_bits(p.images, w))
    return LinearCode(n, _rref_ints(rows))


def check_half_dim_bound(trials: int = 10000, n_max: int = 12, seed: int = 0) -> VerifyReport:
    """Planted-involution random codes: the fixed subcode always carries
    at least half the dimension."""
    t0 = time.monotonic()
    rng = Random(seed)
    rep = VerifyReport("lemma-2.1", n_max, (0, n_max), 0)
    for _ in range(trials):
        n = rng.randrange(2, n_max + 1)
        beta = _random_involution(rng, n)
        code = _random_invariant_code(rng, n, beta)
        rep.scanned += 1
        k = code.k
        f = fixed_subcode(code, beta).k
        rep.witnesses_checked += 1
        if 2 * f < k:
            rep.counterexamples.append(
                Counterexample(code, f"fixed dim {f} below half of k={k} under {beta}")
            )
    return _finish(rep, t0)


def check_fixed_upper_bound(n: int = 6) -> VerifyReport:
    """When a partial pairing involution generates the whole automorphism
    group, the fixed subcode is a proper subcode (dim <= k-1).
    Exhaustive over invariant codes of every dimension."""
    t0 = time.monotonic()
    _require_even(n)
    if not 4 <= n <= 8:
        raise TooLarge("exhaustive upper-bound scan limited to even lengths 4..8")
    rep = VerifyReport("lemma-2.2", n, (0, n), 0)
    ident = Perm.identity(n)
    for t in range(3, n, 2):
        beta = pair_product(n, range((t + 1) // 2))
        allowed = (ident, beta)
        for k in range(0, n + 1):
            for code in enumerate_invariant(n, k, beta):
                rep.scanned += 1
                if find_automorphism_outside(code, allowed) is None:
                    rep.witnesses_checked += 1
                    f = fixed_subcode(code, beta).k
                    if f > k - 1:
                        rep.counterexamples.append(
                            Counterexample(
                                code, f"wholly fixed code with group exactly <{beta}>"
                            )
                        )
    return _finish(rep, t0)


def check_dim1_codes(n: int = 6) -> VerifyReport:
    """Every 1-dimensional code: group order d!(n-d)!, never of order 2;
    even weight below n gives a quasi group code that is not a group
    code; at power-of-two lengths the quasi property is exactly even
    weight."""
    t0 = time.monotonic()
    _require_even(n)
    if not 4 <= n <= 8:
        raise TooLarge("dimension-1 scan limited to even lengths 4..8")
    rep = VerifyReport("prop-3.1", n, (1, 1), 0)
    power_of_two = n & (n - 1) == 0
    for v in range(1, 1 << n):
        code = LinearCode(n, (v,))
        rep.scanned += 1
        d = v.bit_count()
        report = paut(code)
        if report.order != factorial(d) * factorial(n - d):
            rep.counterexamples.append(
                Counterexample(code, f"order {report.order} != {d}!({n}-{d})!")
            )
            continue
        if report.order == 2:
            rep.counterexamples.append(Counterexample(code, "group of order 2"))
            continue
        if d % 2 == 0 and d != n:
            if not is_quasi_group_code(code) or is_group_code(code):
                rep.counterexamples.append(
                    Counterexample(code, "even weight below n must be quasi, not group")
                )
                continue
        if power_of_two and d != n:
            if is_quasi_group_code(code) != (d % 2 == 0):
                rep.counterexamples.append(
                    Counterexample(code, "quasi group property must equal even weight")
                )
                continue
        rep.witnesses_checked += 1
    return _finish(rep, t0)


def check_dim2_codes(n: int = 6) -> VerifyReport:
    """No 2-dimensional code of even length >= 6 has an automorphism
    group of order 2.  Exhaustive; co-dimension 2 follows by duality."""
    t0 = time.monotonic()
    _require_even(n)
    if n not in (6, 8):
        raise TooLarge("exhaustive dimension-2 scan limited to lengths 6 and 8")
    rep = VerifyReport("thm-3.2", n, (2, 2), 0)
    for code in enumerate_subspaces(n, 2):
        rep.scanned += 1
        count = 0
        for _ in _automorphism_images(code):
            count += 1
            if count == 3:
                break
        rep.witnesses_checked += 1
        if count == 2:
            rep.counterexamples.append(
                Counterexample(code, "automorphism group of order exactly 2")
            )
    return _finish(rep, t0)


def check_length4_codes() -> VerifyReport:
    """Length-4 characterization: a 2-dimensional code has automorphism
    group exactly a transposition iff the transposition fixes it
    pointwise and its weight distribution is (1,1,1,1,0); moreover each
    of the 6 transpositions has exactly 2 such codes."""
    t0 = time.monotonic()
    n = 4
    target_wd = (1, 1, 1, 1, 0)
    transpositions = []
    for a in range(n):
        for b in range(a + 1, n):
            imgs = list(range(n))
            imgs[a], imgs[b] = b, a
            transpositions.append(Perm(tuple(imgs)))
    counts = {p: 0 for p in transpositions}
    rep = VerifyReport("prop-3.4", n, (2, 2), 0)
    for code in enumerate_subspaces(n, 2):
        rep.scanned += 1
        wd = code.weight_distribution()
        report = paut(code)
        for beta in transpositions:
            pointwise = fixed_subcode(code, beta) == code
            expected = pointwise and wd == target_wd
            actual = report.order == 2 and is_automorphism(code, beta)
            rep.witnesses_checked += 1
            if actual != expected:
                rep.counterexamples.append(
                    Counterexample(
                        code,
                        f"group exactly <{beta}> is {actual} but the "
                        f"pointwise/weight characterization says {expected}",
                    )
                )
            if actual:
                counts[beta] += 1
    for beta, c in counts.items():
        if c != 2:
            rep.counterexamples.append(
                Counterexample(
                    LinearCode.zero(n), f"{c} codes with group exactly <{beta}>, expected 2"
                )
            )
    return _finish(rep, t0)


def check_fixed_dim_interval(n: int = 6) -> VerifyReport:
    """Codes whose automorphism group is exactly the pairing involution
    have fixed subcode dimension between ceil(k/2) and k-2; in
    particular no such code of dimension 3 exists."""
    t0 = time.monotonic()
    _require_even(n)
    if n not in (6, 8):
        raise TooLarge("exhaustive interval scan limited to lengths 6 and 8")
    sigma = canonical_sigma(n)
    ident = Perm.identity(n)
    allowed = (ident, sigma)
    rep = VerifyReport("thm-4.2", n, (3, n), 0)
    for k in range(3, n + 1):
        for code in enumerate_sigma_invariant(n, k):
            rep.scanned += 1
            if find_automorphism_outside(code, allowed) is None:
                rep.witnesses_checked += 1
                f = fixed_subcode(code, sigma).k
                if k == 3:
                    rep.counterexamples.append(
                        Counterexample(code, "3-dimensional code with pairing-only group")
                    )
                elif f >= k - 1:
                    rep.counterexamples.append(
                        Counterexample(code, f"fixed dim {f} in the forbidden band for k={k}")
                    )
    return _finish(rep, t0)


def check_dim4_codes(n: int = 6) -> VerifyReport:
    """No 4-dimensional invariant code has the pairing involution as its
    entire automorphism group, and a non-pairing involution witness is
    produced and validated for every scanned code."""
    t0 = time.monotonic()
    _require_even(n)
    if n not in (6, 8, 10):
        raise TooLarge("exhaustive dimension-4 scan limited to lengths 6, 8 and 10")
    sigma = canonical_sigma(n)
    ident = Perm.identity(n)
    allowed = (ident, sigma)
    rep = VerifyReport("thm-4.4", n, (4, 4), 0)
    for code in enumerate_sigma_invariant(n, 4):
        rep.scanned += 1
        extra = extra_automorphism(code, sigma)
        valid = (
            extra is not None
            and extra != sigma
            and is_involution(extra)
            and is_automorphism(code, extra)
        )
        if valid:
            rep.witnesses_checked += 1
            continue
        if find_automorphism_outside(code, allowed) is None:
            rep.counterexamples.append(
                Counterexample(code, "pairing involution is the entire automorphism group")
            )
        else:
            rep.counterexamples.append(
                Counterexample(code, "no involution witness found despite a larger group")
            )
    return _finish(rep, t0)


def check_fixed_point_witness(
    trials: int = 10000, n_max: int = 16, seed: int = 0
) -> VerifyReport:
    """Random invariant codes whose pair support is not full: the
    complement witness satisfies all five guarantees (non-identity,
    differs from the pairing, fixes the code, has at least two fixed
    points, spans a Klein four group with the pairing)."""
    t0 = time.monotonic()
    if n_max < 4:
        raise InvalidInput("need n_max >= 4")
    rng = Random(seed)
    rep = VerifyReport("thm-5.1", n_max, (0, n_max), 0)
    sigmas = {n: canonical_sigma(n) for n in range(4, n_max + 1, 2)}
    done = 0
    while done < trials:
        n = 2 * rng.randrange(2, n_max // 2 + 1)
        sigma = sigmas[n]
        code = _random_invariant_code(rng, n, sigma)
        if len(t_sigma(code, sigma)) == n // 2:
            continue
        done += 1
        rep.scanned += 1
        beta = fixed_point_witness(code, sigma)
        problems = []
        if beta is None:
            problems.append("no witness returned")
        else:
            if beta == Perm.identity(n):
                problems.append("witness is the identity")
            if beta == sigma:
                problems.append("witness equals the pairing involution")
            if not is_automorphism(code, beta):
                problems.append("witness is not an automorphism")
            if len(fixed_points(beta)) < 2:
                problems.append("witness has fewer than two fixed points")
            group = generate([sigma, beta])
            if len(group) != 4 or any(
                not is_involution(g) for g in group if g != Perm.identity(n)
            ):
                problems.append("witness does not span a Klein four group")
        if problems:
            rep.counterexamples.append(Counterexample(code, "; ".join(problems)))
        else:
            rep.witnesses_checked += 1
    return _finish(rep, t0)


def pairing_group_is_everything(code: LinearCode, sigma: Perm) -> bool:
    """True iff the automorphism group is exactly {identity, pairing}.

    Cheap constructive witnesses are tried before the exhaustive
    search: the complement witness when the pair support is not full,
    then the pair products attached to nonzero fixed words."""
    w = fixed_point_witness(code, sigma)
    if w is not None:
        if not is_automorphism(code, w):
            raise RuntimeError("fixed point witness failed validation")
        return False
    n = code.n
    fs = fixed_subcode(code, sigma)
    full = (1 << n) - 1
    for xb in fs._codeword_bits():
        if xb and xb != full:
            a = alpha_x(Word(n, xb), sigma)
            if is_automorphism(code, a):
                return False
    return find_automorphism_outside(code, (Perm.identity(n), sigma)) is None


def _scan_unit(args: tuple[int, int, int, int, int, int]) -> tuple[int, list[dict]]:
    """Scan one journal unit; returns (scanned, counterexample dicts).

    The unit's codes sit at stream positions sidx + (unit + m*units)*stotal,
    an arithmetic progression, so the range enumerator skips the rest of
    the census without building it.
    """
    n, k, unit, units, sidx, stotal = args
    sigma = canonical_sigma(n)
    scanned = 0
    ces: list[dict] = []
    for code in _invariant_range(
        n, k, sigma, sidx + unit * stotal, units * stotal
    ):
        scanned += 1
        if pairing_group_is_everything(code, sigma):
            ces.append(Counterexample(code, "automorphism group is exactly the pairing").to_dict())
    return scanned, ces


def _journal_config(n: int, lo: int, hi: int, slice_: tuple[int, int]) -> dict:
    return {
        "n": n,
        "k_lo": lo,
        "k_hi": hi,
        "slice": list(slice_),
        "units": _JOURNAL_UNITS,
    }


def _load_journal(path, config: dict):
    done: set[tuple[int, int]] = set()
    prior_scanned = 0
    prior_ces: list[dict] = []
    if path is None or not os.path.exists(path):
        return done, prior_scanned, prior_ces
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line for line in fh.read().splitlines() if line.strip()]
    if not lines:
        return done, prior_scanned, prior_ces
    head = json.loads(lines[0])
    if head.get("type") != "config" or head.get("config") != config:
        raise InvalidInput("journal belongs to a different configuration")
    for line in lines[1:]:
        rec = json.loads(line)
        if rec.get("type") != "unit":
            raise InvalidInput("malformed journal record")
        done.add((rec["k"], rec["unit"]))
        prior_scanned += rec["scanned"]
        prior_ces.extend(rec["counterexamples"])
    return done, prior_scanned, prior_ces


def _append_journal(path, record: dict) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record) + "\n")
        fh.flush()
        os.fsync(fh.fileno())


def conjecture_search(
    n: int,
    k_lo: int | None = None,
    k_hi: int | None = None,
    slice_: tuple[int, int] = (0, 1),
    journal_path=None,
    jobs: int = 1,
) -> VerifyReport:
    """Scan pairing-invariant codes in the unsettled dimension band for
    one whose automorphism group is exactly the pairing involution.

    Any hit would be a counterexample to the conjecture that no quasi
    group code has an automorphism group of order 2, and is reported
    with its generators.  Work is split into per-dimension units that
    are journaled as they complete, so an interrupted scan resumes
    without rescanning; ``scanned`` counts only this invocation's work
    while counterexamples aggregate the journal too.
    """
    t0 = time.monotonic()
    _require_even(n)
    if n > CONJECTURE_LENGTH_GUARD:
        raise TooLarge(f"search limited to length {CONJECTURE_LENGTH_GUARD}")
    lo = 5 if k_lo is None else k_lo
    hi = n - 5 if k_hi is None else k_hi
    if not 5 <= lo <= hi <= n - 5:
        raise InvalidInput(
            "dimension band is settled: only 5 <= k <= n-5 is worth scanning"
        )
    idx, total = slice_
    if total < 1 or not 0 <= idx < total:
        raise InvalidInput(f"invalid slice {slice_}")
    if jobs < 1:
        raise InvalidInput("jobs must be at least 1")

    config = _journal_config(n, lo, hi, (idx, total))
    done, prior_scanned, prior_ces = _load_journal(journal_path, config)
    if journal_path is not None and not os.path.exists(journal_path):
        _append_journal(journal_path, {"type": "config", "config": config})

    units = [
        (k, u) for k in range(lo, hi + 1) for u in range(_JOURNAL_UNITS)
    ]
    todo = [(k, u) for (k, u) in units if (k, u) not in done]
    work = [(n, k, u, _JOURNAL_UNITS, idx, total) for (k, u) in todo]

    rep = VerifyReport("conjecture", n, (lo, hi), 0, slice=(idx, total))
    results: list[tuple[tuple[int, int], tuple[int, list[dict]]]] = []
    if jobs > 1 and len(work) > 1:
        with multiprocessing.Pool(jobs) as pool:
            for (k, u), res in zip(todo, pool.imap(_scan_unit, work)):
                results.append(((k, u), res))
                if journal_path is not None:
                    _append_journal(
                        journal_path,
                        {
                            "type": "unit",
                            "k": k,
                            "unit": u,
                            "scanned": res[0],
                            "counterexamples": res[1],
                        },
                    )
    else:
        for (k, u), args in zip(todo, work):
            res = _scan_unit(args)
            results.append(((k, u), res))
            if journal_path is not None:
                _append_journal(
                    journal_path,
                    {
                        "type": "unit",
                        "k": k,
                        "unit": u,
                        "scanned": res[0],
                        "counterexamples": res[1],
                    },
                )

    all_ces = list(prior_ces)
    for _, (scanned, ces) in results:
        rep.scanned += scanned
        all_ces.extend(ces)
    rep.witnesses_checked = rep.scanned - sum(len(c[1]) for _, c in results)
    for ce in all_ces:
        code = LinearCode.from_strings(ce["generators"]) if ce["generators"] else LinearCode.zero(n)
        rep.counterexamples.append(Counterexample(code, ce["reason"]))
    return _finish(rep, t0)


CHECKS = {
    "lemma-2.1": check_half_dim_bound,
    "lemma-2.2": check_fixed_upper_bound,
    "prop-3.1": check_dim1_codes,
    "thm-3.2": check_dim2_codes,
    "prop-3.4": check_length4_codes,
    "thm-4.2": check_fixed_dim_interval,
    "thm-4.4": check_dim4_codes,
    "thm-5.1": check_fixed_point_witness,
}
