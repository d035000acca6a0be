"""Constructive discrepancy engines and search machinery.

* Beck-Fiala iterative rounding on coordinate profiles (l-infinity
  discrepancy <= 2 for columns of l1 mass <= 1).
* Exhaustive sign search (Gray-code enumeration with incremental operator
  updates) and exhaustive / simulated-annealing partition search for the
  min-max subset frame bound.
* Matroid union augmentation deciding whether a vector family splits into
  r parts each spanning C^k, with a counting certificate on failure.
* Gaussian median radius of the operator norm on self-adjoint matrices and
  a sign search keeping signed sums inside operator-norm radius 5R.
* Phase-quotient epsilon-nets on the unit sphere and net-certified frame
  bounds with additive error 2*N*mesh.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import BudgetExceededError, InvalidParameterError
from .frames import Partition, PartitionCertificate, VectorSystem, partition, partition_certificate
from .linalg import rank_one
from .rng import make_rng


# ---------------------------------------------------------------------------
# types


@dataclass(frozen=True)
class SignVector:
    """n signs, each +1 or -1."""

    signs: np.ndarray

    @property
    def n(self) -> int:
        return self.signs.size


def sign_vector(signs) -> SignVector:
    arr = np.asarray(signs, dtype=np.int64)
    if arr.ndim != 1 or not np.all(np.abs(arr) == 1):
        raise InvalidParameterError("signs must be a 1-d sequence of +1/-1")
    return SignVector(signs=arr)


@dataclass(frozen=True)
class CoordinateProfile:
    """Rows a_i in R^k with a_i[j] = |<e_j, v_i>|^2; each row has l1 mass <= 1."""

    a: np.ndarray

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @property
    def k(self) -> int:
        return self.a.shape[1]


@dataclass(frozen=True)
class BanaszczykContext:
    """Empirical median radius of the Gaussian operator-norm distribution
    on self-adjoint k x k matrices, and the balancing radius M = 5 R."""

    k: int
    R_hat: float
    M: float
    samples: int
    seed: int


@dataclass(frozen=True)
class EpsilonNet:
    """Unit vectors covering the phase-quotiented unit sphere of C^k to
    within `mesh` (certified for k <= 2, heuristic beyond)."""

    k: int
    mesh: float
    points: np.ndarray
    certified: bool


@dataclass(frozen=True)
class ViolatingSet:
    """Certificate that no partition into r spanning parts exists: with
    d = dim span of the complement, r*(k - d) > |X|."""

    indices: tuple
    complement_rank: int
    r: int
    k: int

    def deficiency(self) -> int:
        return self.r * (self.k - self.complement_rank) - len(self.indices)


@dataclass(frozen=True)
class SignSearchFailure:
    """Budgeted sign search ended without certifying the target; carries
    the best value and witness found."""

    best_value: float
    best_signs: SignVector
    evaluations: int


def _opnorm_h(h: np.ndarray) -> float:
    w = np.linalg.eigvalsh(h)
    return float(max(abs(w[0]), abs(w[-1])))


# ---------------------------------------------------------------------------
# Beck-Fiala


def coordinate_profile(vs: VectorSystem) -> CoordinateProfile:
    """Entrywise squared moduli of the system's vectors."""
    ns = vs.norms_squared()
    if np.any(ns > 1 + 1e-12):
        raise InvalidParameterError(
            f"all vectors must have norm <= 1; max squared norm is {np.max(ns):.12g}"
        )
    return CoordinateProfile(a=np.abs(vs.vectors) ** 2)


def _nullspace_direction(m: np.ndarray) -> np.ndarray:
    """A nonzero nullspace vector of m (rows < cols guaranteed by the caller),
    via reduced row echelon elimination with pivot threshold 1e-11."""
    m = np.array(m, dtype=np.float64)
    rows, cols = m.shape
    pivot_of_col: dict[int, int] = {}
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        p = int(np.argmax(np.abs(m[row:, col]))) + row
        if abs(m[p, col]) <= 1e-11:
            continue
        m[[row, p]] = m[[p, row]]
        m[row] /= m[row, col]
        others = np.arange(rows) != row
        m[others] -= np.outer(m[others, col], m[row])
        pivot_of_col[col] = row
        row += 1
    free = next(c for c in range(cols) if c not in pivot_of_col)
    d = np.zeros(cols)
    d[free] = 1.0
    for col, rw in pivot_of_col.items():
        d[col] = -m[rw, free]
    return d


def beck_fiala_signs(profile: CoordinateProfile) -> SignVector:
    """Signs with || sum_i s_i a_i ||_inf <= 2 for rows of l1 mass <= 1.

    Classical iterative rounding: fractional signs start at 0; coordinates
    whose floating l1 mass exceeds 1 are held constant by moving along a
    nullspace direction of the active constraint block until some variable
    hits +-1 and freezes.
    """
    a = profile.a
    if np.any(a < -1e-15):
        raise InvalidParameterError("coordinate profile entries must be nonnegative")
    if np.any(a.sum(axis=1) > 1 + 1e-12):
        raise InvalidParameterError("coordinate profile rows must have l1 mass <= 1")
    c = a.T  # constraint rows are coordinates, columns are sign variables
    n = profile.n
    x = np.zeros(n)
    floating = np.ones(n, dtype=bool)
    for _ in range(n + 1):
        fl = np.flatnonzero(floating)
        if fl.size == 0:
            break
        mass = c[:, fl].sum(axis=1)
        active = np.flatnonzero(mass > 1 + 1e-12)
        if active.size == 0:
            x[fl] = np.where(x[fl] >= 0, 1.0, -1.0)
            floating[fl] = False
            break
        if active.size >= fl.size:
            raise RuntimeError(
                "Beck-Fiala invariant violated: active rows >= floating variables"
            )
        d = _nullspace_direction(c[np.ix_(active, fl)])
        moving = np.abs(d) > 1e-14
        steps = np.where(d > 0, (1.0 - x[fl]) / np.where(moving, d, 1.0),
                         (-1.0 - x[fl]) / np.where(moving, d, 1.0))
        t = np.min(steps[moving])
        x[fl] += t * d
        hit = fl[np.abs(x[fl]) >= 1.0 - 1e-12]
        x[hit] = np.where(x[hit] >= 0, 1.0, -1.0)
        floating[hit] = False
    if floating.any():
        raise RuntimeError("Beck-Fiala rounding failed to freeze all variables")
    signs = np.where(x >= 0, 1, -1).astype(np.int64)
    disc = float(np.max(np.abs(c @ signs)))
    if disc > 2 + 1e-9:
        raise RuntimeError(f"Beck-Fiala bound violated: discrepancy {disc:.12g} > 2")
    return SignVector(signs=signs)


# ---------------------------------------------------------------------------
# exhaustive and annealed searches


def _gray_flips(bits: int):
    """Yield the bit flipped at each step of the bits-wide Gray code walk
    (2^bits - 1 flips)."""
    for i in range(1, 2**bits):
        yield (i & -i).bit_length() - 1


def exhaustive_sign_search(vs: VectorSystem, limit: int = 24) -> tuple[SignVector, float]:
    """Global minimum over sign patterns of ||sum_i s_i A_{v_i}||.

    The first sign is fixed +1 (global flip symmetry); enumeration walks a
    Gray code, updating the operator by +-2 A_{v_i} per step. Ties go to the
    lexicographically smallest sign vector.
    """
    n = vs.n
    if n > limit:
        raise BudgetExceededError(f"exhaustive sign search refuses n = {n} > limit = {limit}")
    mats = [rank_one(v) for v in vs.vectors]
    signs = np.ones(n, dtype=np.int64)
    s = np.sum(mats, axis=0)
    best_val = _opnorm_h(s)
    best_signs = tuple(signs)
    for bit in _gray_flips(n - 1):
        i = bit + 1
        s = s - 2 * signs[i] * mats[i]
        signs[i] = -signs[i]
        val = _opnorm_h(s)
        key = tuple(signs)
        if val < best_val or (val == best_val and key < best_signs):
            best_val, best_signs = val, key
    return SignVector(signs=np.array(best_signs, dtype=np.int64)), float(best_val)


def exhaustive_partition_search(
    vs: VectorSystem, r: int, N: float, limit: int = 2**24
) -> PartitionCertificate:
    """Globally minimal max_j subset frame bound over all r^n assignments.

    Lexicographically smallest optimal assignment wins ties. Refuses when
    r^n exceeds the enumeration limit.
    """
    n = vs.n
    if r < 1:
        raise InvalidParameterError(f"part count must be >= 1, got {r}")
    if r**n > limit:
        raise BudgetExceededError(
            f"exhaustive partition search refuses r^n = {r}^{n} > limit = {limit}"
        )
    mats = np.stack([rank_one(v) for v in vs.vectors])
    best_val = np.inf
    best_assign = None
    assignment = np.zeros(n, dtype=np.int64)

    def walk(i, sums):
        nonlocal best_val, best_assign
        if i == n:
            val = max(_opnorm_h(s) for s in sums)
            if val < best_val:
                best_val = val
                best_assign = assignment.copy()
            return
        for j in range(r):
            assignment[i] = j
            sums[j] += mats[i]
            walk(i + 1, sums)
            sums[j] -= mats[i]

    walk(0, [np.zeros((vs.k, vs.k), dtype=np.complex128) for _ in range(r)])
    part = partition(r, best_assign)
    return partition_certificate(vs, part, N)


@dataclass(frozen=True)
class AnnealSchedule:
    """Simulated annealing schedule: step count, initial temperature, and
    per-step geometric cooling factor."""

    steps: int = 2000
    t0: float = 0.5
    cooling: float = 0.995


def anneal_partition_search(
    vs: VectorSystem, r: int, N: float, seed: int, schedule: AnnealSchedule | None = None
) -> PartitionCertificate:
    """Heuristic partition search; deterministic given (seed, schedule).

    Single-index moves with Metropolis acceptance under geometric cooling;
    the best assignment ever seen is returned, so the result is never worse
    than the seeded initial random partition. Not claimed optimal.
    """
    if r < 2:
        raise InvalidParameterError(f"annealing needs r >= 2, got {r}")
    schedule = schedule or AnnealSchedule()
    rng = make_rng(seed)
    n = vs.n
    mats = np.stack([rank_one(v) for v in vs.vectors])
    assignment = rng.integers(0, r, size=n)
    sums = np.stack([mats[assignment == j].sum(axis=0) if np.any(assignment == j)
                     else np.zeros((vs.k, vs.k), dtype=np.complex128) for j in range(r)])

    def value(ss):
        return max(_opnorm_h(s) for s in ss)

    cur = value(sums)
    best_val, best_assign = cur, assignment.copy()
    temp = schedule.t0
    for _ in range(schedule.steps):
        i = int(rng.integers(0, n))
        old = int(assignment[i])
        new = int(rng.integers(0, r - 1))
        if new >= old:
            new += 1
        sums[old] -= mats[i]
        sums[new] += mats[i]
        cand = value(sums)
        delta = cand - cur
        if delta <= 0 or rng.random() < math.exp(-delta / max(temp, 1e-12)):
            assignment[i] = new
            cur = cand
            if cur < best_val:
                best_val, best_assign = cur, assignment.copy()
        else:
            sums[old] += mats[i]
            sums[new] -= mats[i]
        temp *= schedule.cooling
    part = partition(r, best_assign)
    return partition_certificate(vs, part, N)


# ---------------------------------------------------------------------------
# matroid spanning partition


def _rank_tol(vs: VectorSystem) -> float:
    norms = np.sqrt(vs.norms_squared())
    return 1e-10 * float(max(np.max(norms), 1e-30))


def _rank(cols: np.ndarray, tol: float) -> int:
    """Column rank by Gaussian elimination; pivot accepted when its modulus
    exceeds tol."""
    m = np.array(cols, dtype=np.complex128)
    rows, ncols = m.shape
    rank = 0
    for col in range(ncols):
        if rank >= rows:
            break
        p = int(np.argmax(np.abs(m[rank:, col]))) + rank
        if abs(m[p, col]) <= tol:
            continue
        m[[rank, p]] = m[[p, rank]]
        m[rank] /= m[rank, col]
        others = np.arange(rows) != rank
        m[others] -= np.outer(m[others, col], m[rank])
        rank += 1
    return rank


def matroid_spanning_partition(vs: VectorSystem, r: int):
    """Partition into r parts each spanning C^k, or a ViolatingSet.

    Matroid union augmentation over r copies of the linear matroid of the
    vectors: each element is inserted via an augmenting exchange path when
    possible. Success means r disjoint bases were assembled (leftover
    elements go to part 0). Otherwise the closure of the set reachable from
    the unplaceable elements yields X with r*(k - d) > |X| for d the span
    dimension of the complement of X.
    """
    if r < 2:
        raise InvalidParameterError(f"need r >= 2, got {r}")
    n, k = vs.n, vs.k
    tol = _rank_tol(vs)
    cols = vs.vectors.T  # column i is vector i

    def indep(idxs) -> bool:
        idxs = list(idxs)
        if not idxs:
            return True
        return _rank(cols[:, idxs], tol) == len(idxs)

    parts: list[set] = [set() for _ in range(r)]
    placed: dict[int, int] = {}

    def reachable_and_sink(x):
        """BFS over exchange arcs from x. Returns (parent, labels, sink, sink_part);
        sink is an element addable to a part, or None if none is reachable."""
        parent = {x: None}
        label = {}
        queue = deque([x])
        while queue:
            z = queue.popleft()
            for j in range(r):
                if z in parts[j]:
                    continue
                if len(parts[j]) < k and indep(parts[j] | {z}):
                    return parent, label, z, j
                for y in parts[j]:
                    if y in parent:
                        continue
                    if indep((parts[j] - {y}) | {z}):
                        parent[y] = z
                        label[y] = j
                        queue.append(y)
        return parent, label, None, None

    def augment(x) -> bool:
        parent, label, sink, sink_part = reachable_and_sink(x)
        if sink is None:
            return False
        parts[sink_part].add(sink)
        placed[sink] = sink_part
        cur = sink
        while parent[cur] is not None:
            prev = parent[cur]
            j = label[cur]
            parts[j].remove(cur)
            parts[j].add(prev)
            placed[prev] = j
            cur = prev
        return True

    def success_partition() -> Partition:
        assignment = np.zeros(n, dtype=np.int64)
        for elem, j in placed.items():
            assignment[elem] = j
        for part_set in parts:
            if _rank(cols[:, sorted(part_set)], tol) != k:
                raise RuntimeError("internal error: assembled part does not span C^k")
        return partition(r, assignment)

    total = 0
    unplaced = []
    for x in range(n):
        if total == r * k:
            break
        if augment(x):
            total += 1
        else:
            unplaced.append(x)

    if total == r * k:
        return success_partition()

    # Re-attempt unplaceable elements against the final state, then build the
    # counting certificate from the closure of everything still reachable.
    progressed = True
    while progressed and total < r * k:
        progressed = False
        still = []
        for x in unplaced:
            if augment(x):
                total += 1
                progressed = True
            else:
                still.append(x)
        unplaced = still
    if total == r * k:
        return success_partition()

    reach: set = set()
    for x in unplaced:
        parent, _, _, _ = reachable_and_sink(x)
        reach.update(parent.keys())
    base = sorted(reach)
    d = _rank(cols[:, base], tol) if base else 0
    in_closure = np.zeros(n, dtype=bool)
    for z in range(n):
        if z in reach:
            in_closure[z] = True
        else:
            in_closure[z] = _rank(cols[:, base + [z]], tol) == d
    x_set = tuple(int(i) for i in np.flatnonzero(~in_closure))
    violation = ViolatingSet(indices=x_set, complement_rank=d, r=r, k=k)
    if violation.deficiency() <= 0:
        raise RuntimeError("internal error: certificate does not violate the count")
    return violation


# ---------------------------------------------------------------------------
# Banaszczyk radius and sign balancing


def sample_selfadjoint_gaussian(k: int, count: int, rng) -> np.ndarray:
    """Standard Gaussian on the real space of self-adjoint k x k matrices:
    diagonal entries N(0,1); off-diagonal real and imaginary parts N(0, 1/2),
    so the Hilbert-Schmidt norm is the Euclidean norm of the Gaussian."""
    diag = rng.standard_normal((count, k))
    h = np.zeros((count, k, k), dtype=np.complex128)
    idx = np.arange(k)
    h[:, idx, idx] = diag
    for a in range(k):
        for b in range(a + 1, k):
            re = rng.standard_normal(count) / np.sqrt(2)
            im = rng.standard_normal(count) / np.sqrt(2)
            h[:, a, b] = re + 1j * im
            h[:, b, a] = re - 1j * im
    return h


def gaussian_median_radius(k: int, samples: int, seed: int) -> BanaszczykContext:
    """Empirical median of the operator norm of Gaussian self-adjoint
    matrices, and the balancing radius M = 5 R."""
    if samples < 1000:
        raise InvalidParameterError(f"need at least 1000 samples, got {samples}")
    rng = make_rng(seed)
    norms = np.empty(samples)
    done = 0
    chunk = 200_000 if k == 1 else max(1, 2_000_000 // (k * k))
    while done < samples:
        c = min(chunk, samples - done)
        if k == 1:
            norms[done:done + c] = np.abs(rng.standard_normal(c))
        else:
            h = sample_selfadjoint_gaussian(k, c, rng)
            w = np.linalg.eigvalsh(h)
            norms[done:done + c] = np.maximum(np.abs(w[:, 0]), np.abs(w[:, -1]))
        done += c
    r_hat = float(np.median(norms))
    return BanaszczykContext(k=k, R_hat=r_hat, M=5.0 * r_hat, samples=samples, seed=seed)


def banaszczyk_sign_search(matrices, M: float, budget: int = 20000, seed: int = 0):
    """Signs with ||sum_i s_i B_i|| <= M for Hilbert-Schmidt-small B_i.

    Exhaustive (Gray code, first sign fixed) for n <= 20; otherwise seeded
    random restarts with greedy single flips. Existence is guaranteed by
    Banaszczyk's theorem; the finder is heuristic above the exhaustive
    range, so a SignSearchFailure carries the best value found.
    """
    mats = [np.asarray(b, dtype=np.complex128) for b in matrices]
    n = len(mats)
    if n == 0:
        raise InvalidParameterError("need at least one matrix")
    for b in mats:
        hs = float(np.linalg.norm(b))
        if hs > 0.2 + 1e-12:
            raise InvalidParameterError(
                f"Hilbert-Schmidt norm {hs:.12g} exceeds 1/5; scale inputs first"
            )
    if n <= 20:
        signs = np.ones(n, dtype=np.int64)
        s = np.sum(mats, axis=0)
        best_val, best_signs, evals = _opnorm_h(s), signs.copy(), 1
        if best_val <= M:
            return SignVector(signs=best_signs)
        for bit in _gray_flips(n - 1):
            i = bit + 1
            s = s - 2 * signs[i] * mats[i]
            signs[i] = -signs[i]
            val = _opnorm_h(s)
            evals += 1
            if val < best_val:
                best_val, best_signs = val, signs.copy()
                if best_val <= M:
                    return SignVector(signs=best_signs)
        return SignSearchFailure(best_value=float(best_val),
                                 best_signs=SignVector(signs=best_signs),
                                 evaluations=evals)
    rng = make_rng(seed)
    stacked = np.stack(mats)
    best_val, best_signs, evals = np.inf, None, 0
    while evals < budget:
        signs = np.where(rng.random(n) < 0.5, 1, -1).astype(np.int64)
        s = np.tensordot(signs, stacked, axes=1)
        val = _opnorm_h(s)
        evals += 1
        improved = True
        while improved and evals < budget:
            improved = False
            for i in range(n):
                cand = s - 2 * signs[i] * stacked[i]
                cval = _opnorm_h(cand)
                evals += 1
                if cval < val - 1e-15:
                    s, val = cand, cval
                    signs[i] = -signs[i]
                    improved = True
        if val < best_val:
            best_val, best_signs = val, signs.copy()
        if best_val <= M:
            return SignVector(signs=best_signs)
    return SignSearchFailure(best_value=float(best_val),
                             best_signs=SignVector(signs=best_signs),
                             evaluations=evals)


# ---------------------------------------------------------------------------
# epsilon nets


def normalize_phase(u: np.ndarray) -> np.ndarray:
    """Phase-quotient representative: first entry of modulus > 1e-12 made
    real nonnegative."""
    nz = np.flatnonzero(np.abs(u) > 1e-12)
    if nz.size == 0:
        return u
    pivot = u[nz[0]]
    return u * (pivot.conjugate() / abs(pivot))


NET_POINT_LIMIT = 2**22


def build_epsilon_net(k: int, mesh: float, seed: int = 0) -> EpsilonNet:
    """Net of phase-normalized unit vectors in C^k.

    k = 1: the single point (1). k = 2: deterministic (theta, phi) lattice
    with certified covering radius <= mesh. k >= 3: seeded random
    oversampling, coverage heuristic only.
    """
    if mesh <= 0:
        raise InvalidParameterError(f"mesh must be positive, got {mesh}")
    if k < 1:
        raise InvalidParameterError(f"dimension must be >= 1, got {k}")
    if k == 1:
        return EpsilonNet(k=1, mesh=mesh, points=np.ones((1, 1), dtype=np.complex128),
                          certified=True)
    if k == 2:
        # u ~ (cos t, sin t e^{i p}), t in [0, pi/2], p in [0, 2pi); grid
        # half-spacings mesh/3 give covering radius <= mesh*sqrt(5)/3 < mesh.
        h = mesh / 3.0
        nt = math.ceil((np.pi / 2) / (2 * h))
        np_ = math.ceil((2 * np.pi) / (2 * h))
        count = (nt + 1) * np_
        if count > NET_POINT_LIMIT:
            raise BudgetExceededError(
                f"mesh {mesh} needs about {count} net points (limit {NET_POINT_LIMIT})"
            )
        thetas = np.linspace(0.0, np.pi / 2, nt + 1)
        phis = np.arange(np_) * (2 * np.pi / np_)
        tt, pp = np.meshgrid(thetas, phis, indexing="ij")
        pts = np.stack([np.cos(tt).ravel().astype(np.complex128),
                        (np.sin(tt) * np.exp(1j * pp)).ravel()], axis=1)
        return EpsilonNet(k=2, mesh=mesh, points=pts, certified=True)
    est = (4.0 / mesh) ** (2 * k - 2)
    if est > NET_POINT_LIMIT:
        raise BudgetExceededError(
            f"mesh {mesh} in dimension {k} needs about {est:.3g} net points "
            f"(limit {NET_POINT_LIMIT})"
        )
    count = int(math.ceil(est))
    rng = make_rng(seed)
    g = rng.standard_normal((count, k)) + 1j * rng.standard_normal((count, k))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    pts = np.array([normalize_phase(u) for u in g])
    return EpsilonNet(k=k, mesh=mesh, points=pts, certified=False)


def net_certified_bound(vs: VectorSystem, X, net: EpsilonNet, N: float) -> tuple[float, float]:
    """(net_max, net_max + 2*N*mesh): a sandwich for the subset frame bound
    whenever the net's covering radius really is <= mesh."""
    if net.k != vs.k:
        raise InvalidParameterError(f"net dimension {net.k} != system dimension {vs.k}")
    idx = np.asarray(sorted(X), dtype=np.int64)
    if idx.size and (idx[0] < 0 or idx[-1] >= vs.n):
        raise InvalidParameterError(f"subset indices out of range 0..{vs.n - 1}")
    if idx.size == 0:
        return 0.0, 2.0 * N * net.mesh
    inner = net.points @ vs.vectors[idx].conj().T  # <u, v_i> per net point u
    net_max = float(np.max(np.sum(np.abs(inner) ** 2, axis=1)))
    return net_max, net_max + 2.0 * N * net.mesh
