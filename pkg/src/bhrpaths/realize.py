"""Finding Hamiltonian paths that realize a target chord-type multiset.

Two solvers:

* hillclimb - randomized local search over full paths.  A move reverses
  a prefix (or suffix) of the path, which exchanges exactly one chord:
  reversing p[0..i] replaces the chord (p[i], p[i+1]) by (p[0], p[i+1]).
  Moves are sampled with weights by their effect on the number of
  chords matching the target (counted with multiplicity): worse 1,
  sideways 100, better 10000, and a move that completes the target is
  always taken immediately.  Warm-starting from the previous solution
  makes lexicographic sweeps cheap because consecutive targets are
  similar.

* lds_backtrack - depth-first construction one chord at a time from
  point 0 (any realizing path can be rotated to start there),
  children ordered by a fewest-exits / scarcest-type heuristic, with
  leaves visited in nondecreasing discrepancy (number of non-first
  children taken on the root-leaf path).  With max_discrepancy = n-1
  the search is complete for the anchored tree.

Campaigns sweep admissible multisets in rank order, mark the whole
coprime orbit whenever one member is realized, and persist progress in
a checkpoint bitmap.  Every success is re-checked by verify(), which
shares no code with the solvers.  Workers own private bitmaps that are
merged by bitwise OR (associative and idempotent, so replays and
crashes are safe); a single writer saves the merged checkpoint via
write-temp-then-rename.
"""

from __future__ import annotations

import concurrent.futures
import itertools
import math
import os
import random
import struct
import time
from dataclasses import dataclass, field, replace
from typing import Iterator, Sequence

from .core import (
    Multiset,
    Path,
    admissibility_violation,
    coprime_units,
    coprime_transform,
    num_types,
    rank,
    validate_multiset,
)
from .enumeration import EnumerationRange, count_admissible, count_all, full_range, iter_admissible


class AdmissibilityError(ValueError):
    """Target multiset violates a divisor bound; carries the divisor."""

    def __init__(self, n: int, divisor: int, counts):
        self.n = n
        self.divisor = divisor
        super().__init__(
            f"multiset {list(counts)} is inadmissible for n={n}: entries at "
            f"positions divisible by {divisor} sum past n-d = {n - divisor}"
        )


class CheckpointIntegrityError(RuntimeError):
    """Checkpoint file failed a structural or consistency check."""


class VerificationError(RuntimeError):
    """A solver returned a path that does not verify; always a bug."""


def _require_admissible(target, n: int) -> Multiset:
    ms = validate_multiset(target, n)
    d = admissibility_violation(ms, n)
    if d is not None:
        raise AdmissibilityError(n, d, ms)
    return ms


def _type_table(n: int) -> list[list[int]]:
    return [[min(abs(i - j), n - abs(i - j)) for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# Hill climbing.

@dataclass(frozen=True)
class HillClimbConfig:
    seed: int = 0
    max_iters: int = 200_000
    weight_worse: int = 1
    weight_sideways: int = 100
    weight_better: int = 10_000
    start: Path | None = None
    check_moves: bool = False

    def __post_init__(self):
        if min(self.weight_worse, self.weight_sideways, self.weight_better) <= 0:
            raise ValueError("move weights must be strictly positive")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")


@dataclass(frozen=True)
class HillClimbResult:
    path: Path | None
    iterations: int

    @property
    def found(self) -> bool:
        return self.path is not None


def hillclimb(n: int, target, cfg: HillClimbConfig = HillClimbConfig()) -> HillClimbResult:
    """Local search for a path realizing the target multiset."""
    tgt_ms = _require_admissible(target, n)
    m = n // 2
    rng = random.Random(cfg.seed)
    if cfg.start is not None:
        p = list(cfg.start)
        if sorted(p) != list(range(n)):
            raise ValueError("start must be a permutation of 0..n-1")
    else:
        p = rng.sample(range(n), n)

    tt = _type_table(n)
    # 1-based count arrays so chord types index directly
    tgt = [0] + list(tgt_ms)
    cnt = [0] * (m + 1)
    for a, b in zip(p, p[1:]):
        cnt[tt[a][b]] += 1
    match = sum(min(c, g) for c, g in zip(cnt, tgt))
    goal = n - 1
    if match == goal:
        return HillClimbResult(path=tuple(p), iterations=0)

    wb, ws, ww = cfg.weight_better, cfg.weight_sideways, cfg.weight_worse
    for it in range(1, cfg.max_iters + 1):
        better: list[tuple[int, int, int, int, int]] = []
        side: list[tuple[int, int, int, int, int]] = []
        worse: list[tuple[int, int, int, int, int]] = []
        winner = None
        first = p[0]
        last = p[-1]
        for i in range(1, n - 1):
            b = p[i + 1]
            t_out = tt[p[i]][b]
            t_in = tt[first][b]
            if t_out == t_in:
                delta = 0
            else:
                delta = (-1 if cnt[t_out] <= tgt[t_out] else 0) + (
                    1 if cnt[t_in] < tgt[t_in] else 0
                )
            if match + delta == goal:
                winner = (0, i, t_out, t_in, delta)
                break
            mv = (0, i, t_out, t_in, delta)
            (better if delta > 0 else side if delta == 0 else worse).append(mv)

            a = p[i - 1]
            t_out = tt[a][p[i]]
            t_in = tt[a][last]
            if t_out == t_in:
                delta = 0
            else:
                delta = (-1 if cnt[t_out] <= tgt[t_out] else 0) + (
                    1 if cnt[t_in] < tgt[t_in] else 0
                )
            if match + delta == goal:
                winner = (1, i, t_out, t_in, delta)
                break
            mv = (1, i, t_out, t_in, delta)
            (better if delta > 0 else side if delta == 0 else worse).append(mv)

        if winner is None:
            total = wb * len(better) + ws * len(side) + ww * len(worse)
            r = rng.randrange(total)
            if r < wb * len(better):
                winner = better[r // wb]
            else:
                r -= wb * len(better)
                if r < ws * len(side):
                    winner = side[r // ws]
                else:
                    winner = worse[(r - ws * len(side)) // ww]

        kind, i, t_out, t_in, delta = winner
        if kind == 0:
            p[: i + 1] = p[i::-1]
        else:
            p[i:] = p[: i - 1 : -1]
        cnt[t_out] -= 1
        cnt[t_in] += 1
        match += delta
        if cfg.check_moves:
            fresh = [0] * (m + 1)
            for a, b in zip(p, p[1:]):
                fresh[tt[a][b]] += 1
            assert fresh == cnt, "move bookkeeping drifted from the actual path"
            assert match == sum(min(c, g) for c, g in zip(cnt, tgt))
        if match == goal:
            return HillClimbResult(path=tuple(p), iterations=it)

    return HillClimbResult(path=None, iterations=cfg.max_iters)


# ---------------------------------------------------------------------------
# Heuristic ordering shared by the backtracking search.

class _SearchState:
    """Mutable partial-path state: used points, residual type counts,
    parity tallies for the even-n feasibility cut."""

    __slots__ = ("n", "m", "used", "residual", "unused_parity", "odd_left", "placed")

    def __init__(self, n: int, residual: Sequence[int], path: Sequence[int]):
        self.n = n
        self.m = n // 2
        self.used = [False] * n
        self.residual = [0] + list(residual)
        self.unused_parity = [0, 0]
        self.placed = 0
        for v in range(n):
            self.unused_parity[v & 1] += 1
        self.odd_left = sum(self.residual[1::2])
        for v in path:
            self.take_point(v)

    def take_point(self, v: int):
        self.used[v] = True
        self.unused_parity[v & 1] -= 1
        self.placed += 1

    def drop_point(self, v: int):
        self.used[v] = False
        self.unused_parity[v & 1] += 1
        self.placed -= 1

    def take_chord(self, t: int):
        self.residual[t] -= 1
        if t & 1:
            self.odd_left -= 1

    def drop_chord(self, t: int):
        self.residual[t] += 1
        if t & 1:
            self.odd_left += 1

    def candidates(self, u: int) -> list[tuple[int, int]]:
        n = self.n
        used = self.used
        out = []
        for t in range(1, self.m + 1):
            if not self.residual[t]:
                continue
            v = u + t
            if v >= n:
                v -= n
            w = u - t
            if w < 0:
                w += n
            if not used[v]:
                out.append((t, v))
            if w != v and not used[w]:
                out.append((t, w))
        return out

    def exits(self, v: int) -> int:
        n = self.n
        used = self.used
        total = 0
        for t in range(1, self.m + 1):
            if not self.residual[t]:
                continue
            a = v + t
            if a >= n:
                a -= n
            b = v - t
            if b < 0:
                b += n
            if not used[a]:
                total += 1
            if b != a and not used[b]:
                total += 1
        return total

    def feasible_after(self, v: int) -> bool:
        """Cheap necessary conditions once v is taken (state already
        reflects the move): no point stranded without a usable chord, at
        most one point with a single exit (the future far endpoint), and
        for even n enough parity flips among the residual odd types."""
        n = self.n
        if self.placed == n:
            return True
        if n % 2 == 0:
            same = self.unused_parity[v & 1]
            other = self.unused_parity[1 - (v & 1)]
            o = self.odd_left
            if same < o // 2 or other < (o + 1) // 2:
                return False
        used = self.used
        low_exit = 0
        for w in range(n):
            if used[w] and w != v:
                continue
            deg = self.exits(w) if w != v else None
            if w == v:
                continue
            if deg == 0:
                return False
            if deg == 1:
                low_exit += 1
                if low_exit > 1:
                    return False
        return self.exits(v) > 0

    def ordered_children(self, u: int) -> list[tuple[int, int]]:
        scored = []
        for t, v in self.candidates(u):
            self.take_chord(t)
            self.take_point(v)
            ok = self.feasible_after(v)
            ex = self.exits(v) if ok else 0
            self.drop_point(v)
            self.drop_chord(t)
            if ok:
                scored.append((ex, self.residual[t] - 1, t, v))
        scored.sort()
        return [(t, v) for _, _, t, v in scored]


def heuristic_order(n: int, path: Sequence[int], residual: Sequence[int]) -> list[tuple[int, int]]:
    """Feasible (chord type, next point) extensions of a partial path,
    best first: fewest exits left at the next point, then scarcest
    chord type, then smallest type and point index.  Extensions that
    strand a point or break parity feasibility are dropped."""
    if len(residual) != n // 2:
        raise ValueError(f"residual must have {n // 2} entries")
    if not path:
        raise ValueError("path must contain at least the starting point")
    if len(set(path)) != len(path) or any(not 0 <= v < n for v in path):
        raise ValueError("path points must be distinct and in range")
    state = _SearchState(n, residual, path)
    return state.ordered_children(path[-1])


# ---------------------------------------------------------------------------
# Limited discrepancy search.

@dataclass(frozen=True)
class LdsConfig:
    max_discrepancy: int = 14
    node_budget: int | None = None
    trace_leaves: bool = False


@dataclass(frozen=True)
class LdsResult:
    path: Path | None
    status: str  # "found" | "exhausted" | "budget_exceeded"
    nodes: int
    discrepancy: int | None = None
    leaf_discrepancies: tuple[int, ...] = ()

    @property
    def found(self) -> bool:
        return self.status == "found"


class _BudgetExceeded(Exception):
    pass


def lds_backtrack(n: int, target, cfg: LdsConfig = LdsConfig()) -> LdsResult:
    """Heuristic backtracking with leaves visited in nondecreasing
    discrepancy.  Inadmissible targets simply exhaust.

    Probes run with an exact discrepancy budget: the first (heuristic-
    best) child is free, any other child costs 1, and a leaf counts
    only when the budget is spent, so pass D visits exactly the leaves
    of discrepancy D and never revisits earlier ones.
    """
    tgt = validate_multiset(target, n)
    state = _SearchState(n, tgt, (0,))
    path = [0]
    nodes = 0
    budget_limit = cfg.node_budget
    leaves: list[int] = []
    max_d = min(cfg.max_discrepancy, n - 1)

    def probe(u: int, depth: int, budget: int) -> bool:
        nonlocal nodes
        if depth == n - 1:
            if cfg.trace_leaves:
                leaves.append(discrepancy_of_pass)
            return budget == 0
        remaining_choices = n - 2 - depth
        for idx, (t, v) in enumerate(state.ordered_children(u)):
            child_budget = budget if idx == 0 else budget - 1
            if child_budget < 0:
                break
            if child_budget > remaining_choices:
                continue
            nodes += 1
            if budget_limit is not None and nodes > budget_limit:
                raise _BudgetExceeded
            state.take_chord(t)
            state.take_point(v)
            path.append(v)
            if probe(v, depth + 1, child_budget):
                return True
            path.pop()
            state.drop_point(v)
            state.drop_chord(t)
        return False

    try:
        for discrepancy_of_pass in range(max_d + 1):
            if probe(0, 0, discrepancy_of_pass):
                return LdsResult(
                    path=tuple(path),
                    status="found",
                    nodes=nodes,
                    discrepancy=discrepancy_of_pass,
                    leaf_discrepancies=tuple(leaves),
                )
    except _BudgetExceeded:
        return LdsResult(path=None, status="budget_exceeded", nodes=nodes,
                         leaf_discrepancies=tuple(leaves))
    return LdsResult(path=None, status="exhausted", nodes=nodes,
                     leaf_discrepancies=tuple(leaves))


# ---------------------------------------------------------------------------
# Independent verification (deliberately shares no helpers above).

def verify(path: Sequence[int], target: Sequence[int], n: int) -> bool:
    """Recompute the multiset of a claimed realization from raw indices
    and compare with the target."""
    pts = list(path)
    if len(pts) != n:
        return False
    seen = [False] * n
    for x in pts:
        if not isinstance(x, int) or not 0 <= x < n or seen[x]:
            return False
        seen[x] = True
    counts = [0] * (n // 2)
    for k in range(n - 1):
        d = pts[k] - pts[k + 1]
        if d < 0:
            d = -d
        if d > n - d:
            d = n - d
        counts[d - 1] += 1
    return counts == list(target)


# ---------------------------------------------------------------------------
# Combined solver used by campaigns and the CLI.

def realize_multiset(
    n: int,
    target,
    method: str = "mixed",
    seed: int = 0,
    warm_start: Path | None = None,
    hill_iters: int = 20_000,
    max_discrepancy: int = 14,
) -> Path | None:
    """Find and verify a realizing path, or return None.

    mixed: a capped hill climb (warm-started when a previous solution
    is supplied), a fresh-start hill climb, then LDS with escalating
    discrepancy.  Every returned path has been re-verified.
    """
    tgt = _require_admissible(target, n)
    path = None
    if method in ("hillclimb", "mixed"):
        attempts = [warm_start, None] if warm_start is not None else [None, None]
        for i, start in enumerate(attempts):
            res = hillclimb(
                n,
                tgt,
                HillClimbConfig(seed=seed + i, max_iters=hill_iters, start=start),
            )
            if res.found:
                path = res.path
                break
    if path is None and method in ("lds", "mixed"):
        res = lds_backtrack(n, tgt, LdsConfig(max_discrepancy=max_discrepancy))
        if res.found:
            path = res.path
    if path is None:
        return None
    if not verify(path, tgt, n):
        raise VerificationError(f"solver produced a bad path for n={n}, {tgt}")
    return path


# ---------------------------------------------------------------------------
# Checkpoints.

_CKPT_MAGIC = b"BHRC"
_CKPT_VERSION = 1
_CKPT_HEADER = struct.Struct("<4sIIIQQ")  # magic, version, n, reserved, total, count


class CampaignCheckpoint:
    """Persistent bitmap over multiset ranks marking verified realizations."""

    def __init__(self, n: int, total: int | None = None, bitmap: bytearray | None = None):
        self.n = n
        self.total = count_all(n) if total is None else total
        nbytes = (self.total + 7) // 8
        self.bitmap = bytearray(nbytes) if bitmap is None else bitmap
        if len(self.bitmap) != nbytes:
            raise CheckpointIntegrityError("bitmap length does not match total")
        self.realized_count = int.from_bytes(self.bitmap, "little").bit_count()

    def is_marked(self, r: int) -> bool:
        return bool(self.bitmap[r >> 3] & (1 << (r & 7)))

    def mark(self, r: int) -> bool:
        """Set bit r; True when it was newly set."""
        byte, bit = r >> 3, 1 << (r & 7)
        if self.bitmap[byte] & bit:
            return False
        self.bitmap[byte] |= bit
        self.realized_count += 1
        return True

    def merge(self, other_bitmap: bytes):
        merged = (
            int.from_bytes(self.bitmap, "little")
            | int.from_bytes(other_bitmap, "little")
        )
        self.bitmap = bytearray(merged.to_bytes(len(self.bitmap), "little"))
        self.realized_count = int.from_bytes(self.bitmap, "little").bit_count()

    def save(self, path: str | os.PathLike):
        header = _CKPT_HEADER.pack(
            _CKPT_MAGIC, _CKPT_VERSION, self.n, 0, self.total, self.realized_count
        )
        tmp = f"{path}.tmp.{os.getpid()}"
        with open(tmp, "wb") as fh:
            fh.write(header)
            fh.write(self.bitmap)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "CampaignCheckpoint":
        with open(path, "rb") as fh:
            raw = fh.read()
        if len(raw) < _CKPT_HEADER.size:
            raise CheckpointIntegrityError("checkpoint shorter than its header")
        magic, version, n, reserved, total, stored = _CKPT_HEADER.unpack_from(raw)
        if magic != _CKPT_MAGIC:
            raise CheckpointIntegrityError(f"bad magic {magic!r}")
        if version != _CKPT_VERSION:
            raise CheckpointIntegrityError(f"unsupported version {version}")
        if reserved != 0:
            raise CheckpointIntegrityError("reserved field must be zero")
        bitmap = bytearray(raw[_CKPT_HEADER.size :])
        if len(bitmap) != (total + 7) // 8:
            raise CheckpointIntegrityError("bitmap length does not match total")
        ckpt = cls(n=n, total=total, bitmap=bitmap)
        if ckpt.realized_count != stored:
            raise CheckpointIntegrityError(
                f"stored count {stored} != bitmap population {ckpt.realized_count}"
            )
        if total != count_all(n):
            raise CheckpointIntegrityError(f"total {total} wrong for n={n}")
        return ckpt


# ---------------------------------------------------------------------------
# Campaigns.

@dataclass(frozen=True)
class CampaignReport:
    n: int
    from_rank: int
    to_rank: int
    admissible_seen: int
    solver_calls: int
    newly_realized: int
    realized_count: int
    admissible_total: int
    complete: bool
    failures: tuple[tuple[int, Multiset], ...]
    elapsed_s: float

    @property
    def conjecture_holds(self) -> bool | None:
        """All admissible multisets realized; None until the sweep is
        complete, False is a loud counterexample candidate."""
        if not self.complete:
            return None
        return self.realized_count == self.admissible_total and not self.failures


def _campaign_span(
    n: int,
    method: str,
    from_rank: int,
    to_rank: int,
    seed: int,
    bitmap: bytearray,
) -> tuple[bytearray, int, int, int, list[tuple[int, Multiset]]]:
    """Sweep one rank range, marking whole coprime orbits in `bitmap`."""
    solver_calls = 0
    admissible_seen = 0
    newly = 0
    failures: list[tuple[int, Multiset]] = []
    warm: Path | None = None
    units = coprime_units(n)
    for r, ms in iter_admissible(EnumerationRange(n, from_rank, to_rank)):
        admissible_seen += 1
        if bitmap[r >> 3] & (1 << (r & 7)):
            continue
        solver_calls += 1
        path = realize_multiset(
            n, ms, method=method, seed=seed ^ (r * 2654435761 & 0xFFFFFFFF),
            warm_start=warm,
        )
        if path is None:
            failures.append((r, ms))
            continue
        warm = path
        for k in units:
            image = coprime_transform(ms, k, n)
            ir = rank(image, n)
            byte, bit = ir >> 3, 1 << (ir & 7)
            if not bitmap[byte] & bit:
                bitmap[byte] |= bit
                newly += 1
    return bitmap, admissible_seen, solver_calls, newly, failures


def _campaign_worker(args) -> tuple[bytes, int, int, int, list[tuple[int, Multiset]]]:
    n, method, from_rank, to_rank, seed, snapshot = args
    bitmap = bytearray(snapshot)
    bitmap, seen, calls, newly, failures = _campaign_span(
        n, method, from_rank, to_rank, seed, bitmap
    )
    return bytes(bitmap), seen, calls, newly, failures


def campaign(
    n: int,
    method: str = "mixed",
    checkpoint: CampaignCheckpoint | None = None,
    rng: EnumerationRange | None = None,
    seed: int = 0,
    workers: int = 1,
    checkpoint_path: str | os.PathLike | None = None,
) -> CampaignReport:
    """Realize every admissible multiset in the range, with verification.

    When a realization of M is found, the bits of all coprime images of
    M are set too.  Unrealized admissible multisets are returned in
    `failures` (a candidate counterexample, never silently absorbed).
    """
    if checkpoint is None:
        checkpoint = CampaignCheckpoint(n)
    if checkpoint.n != n or checkpoint.total != count_all(n):
        raise CheckpointIntegrityError(
            f"checkpoint is for n={checkpoint.n}, campaign wants n={n}"
        )
    if rng is None:
        rng = full_range(n)
    if rng.n != n:
        raise ValueError("range and campaign disagree on n")
    start_time = time.perf_counter()
    seen = calls = newly = 0
    failures: list[tuple[int, Multiset]] = []
    if workers <= 1:
        _, seen, calls, newly, failures = _campaign_span(
            n, method, rng.from_rank, rng.to_rank, seed, checkpoint.bitmap
        )
        checkpoint.realized_count = int.from_bytes(checkpoint.bitmap, "little").bit_count()
    else:
        span = rng.to_rank - rng.from_rank
        step = (span + workers - 1) // workers
        jobs = []
        snapshot = bytes(checkpoint.bitmap)
        for w in range(workers):
            lo = rng.from_rank + w * step
            hi = min(rng.from_rank + (w + 1) * step, rng.to_rank)
            if lo < hi:
                jobs.append((n, method, lo, hi, seed + w, snapshot))
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            for bm, s, c, _, fails in pool.map(_campaign_worker, jobs):
                checkpoint.merge(bm)
                seen += s
                calls += c
                failures.extend(fails)
        newly = checkpoint.realized_count
    if checkpoint_path is not None:
        checkpoint.save(checkpoint_path)
    complete = rng.from_rank == 0 and rng.to_rank == count_all(n)
    return CampaignReport(
        n=n,
        from_rank=rng.from_rank,
        to_rank=rng.to_rank,
        admissible_seen=seen,
        solver_calls=calls,
        newly_realized=newly,
        realized_count=checkpoint.realized_count,
        admissible_total=count_admissible(n),
        complete=complete,
        failures=tuple(failures),
        elapsed_s=time.perf_counter() - start_time,
    )


# ---------------------------------------------------------------------------
# Small-n oracle and randomized spot checks.

def brute_force_realizable(n: int) -> set[Multiset]:
    """Multisets of every Hamiltonian path, by exhaustion; n <= 9 only.

    Paths are anchored at point 0 (rotation) with second point at most
    n/2 (reflection); both symmetries preserve the multiset.
    """
    if n > 9:
        raise ValueError(f"brute force is limited to n <= 9, got n={n}")
    m = num_types(n)
    out: set[Multiset] = set()
    for perm in itertools.permutations(range(1, n)):
        if perm[0] > n - perm[0]:
            continue
        counts = [0] * m
        prev = 0
        for v in perm:
            d = abs(prev - v)
            counts[min(d, n - d) - 1] += 1
            prev = v
        out.add(tuple(counts))
    return out


@dataclass(frozen=True)
class SpotCheckReport:
    n: int
    requested: int
    solved: int
    failures: tuple[Multiset, ...]
    elapsed_s: float


def spot_check(n: int, samples: int, seed: int = 0, method: str = "mixed") -> SpotCheckReport:
    """Realize `samples` distinct admissible multisets drawn uniformly
    at random (by rank, rejecting inadmissible ones), each verified.

    Targets are processed in rank order so consecutive ones stay
    similar and warm starts pay off, as in a full campaign sweep.
    """
    from .core import is_admissible, unrank

    rng = random.Random(seed)
    total = count_all(n)
    picked: dict[int, Multiset] = {}
    while len(picked) < samples:
        r = rng.randrange(total)
        if r in picked:
            continue
        ms = unrank(r, n)
        if is_admissible(ms, n):
            picked[r] = ms
    start_time = time.perf_counter()
    solved = 0
    failures: list[Multiset] = []
    warm: Path | None = None
    for r in sorted(picked):
        ms = picked[r]
        path = realize_multiset(
            n, ms, method=method, seed=seed ^ (r * 2654435761 & 0xFFFFFFFF),
            warm_start=warm,
        )
        if path is None:
            failures.append(ms)
        else:
            warm = path
            solved += 1
    return SpotCheckReport(
        n=n,
        requested=samples,
        solved=solved,
        failures=tuple(failures),
        elapsed_s=time.perf_counter() - start_time,
    )
