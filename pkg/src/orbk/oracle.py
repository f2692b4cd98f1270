"""Brute-force ground truth over the symmetric group.

Everything here enumerates ``S_n`` (or all standard tableaux of size n) and
checks the closed-form constructions of :mod:`orbk.richardson` against it.

The true geometric order on orbital varieties is not computed.  The only
relation available is the Duflo certificate: if some ``y`` in the cell of
``S`` and some ``x`` in the cell of ``T`` satisfy ``S(y) <= S(x)`` then
``V_T`` lies in the closure of ``V_S``.  Certificates are sound in that
direction only, so checks phrased as "no certified intermediate exists" are
asserted, while checks that would need the converse are reported.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import Callable, Iterable, Sequence

import networkx as nx
import numpy as np

from ._validation import check_bound
from .partitions import codim_in_nilradical, conjugate, nilradical_dim, orbit_covers, paper_leq
from .richardson import (
    SimpleRootSubset,
    box_move_descendant,
    bracket_representative,
    chain_stats,
    chains_from_subset,
    closure_contains,
    closure_members,
    descendants,
    first_violation,
    p_next,
    p_prev,
    psi_next_formula,
    psi_prev_formula,
    psi_subset,
    richardson_tableau,
    richardson_word,
    t_bracket_m,
    t_family,
    t_next,
    t_prev,
    tail_move,
)
from .tableaux import (
    Tableau,
    concat_horizontal,
    project,
    psi_tableau,
    reading_word,
    rs_pair,
    rs_tableau,
    shift,
    stack_vertical,
    standard_tableaux,
    tau_tableau,
    transpose,
)
from .words import (
    Word,
    all_permutations,
    colligate,
    duflo_leq,
    inversion_mask,
    pair_bit,
    psi_word,
    restrict_word,
    reverse,
    tau_word,
)

log = logging.getLogger(__name__)

__all__ = [
    "CellIndex",
    "Report",
    "build_cells",
    "duflo_leq_tableaux",
    "hook_length_count",
    "hasse_graph",
    "hasse_to_dot",
    "SUITES",
    "run_suite",
    "run_verification",
]


def hook_length_count(shape: Sequence[int]) -> int:
    """Number of standard tableaux of ``shape`` by the hook length formula."""
    shape = list(shape)
    n = sum(shape)
    cols = conjugate(shape).parts if shape else ()
    hooks = prod(
        (shape[i] - j - 1) + (cols[j] - i - 1) + 1 for i in range(len(shape)) for j in range(shape[i])
    )
    return factorial(n) // hooks


@dataclass(frozen=True, eq=False)
class CellIndex:
    """The partition of ``S_n`` into Robinson-Schensted cells.

    ``tableaux`` lists the standard tableaux in a fixed order; ``cells[T]`` is
    the tuple of permutations with insertion tableau ``T``.  Instances compare
    by identity (``build_cells`` memoizes one per n), which lets the derived
    relation matrices be cached per instance.
    """

    n: int
    tableaux: tuple[Tableau, ...]
    cells: dict

    @property
    def index(self) -> dict[Tableau, int]:
        return _index_of(self)

    def cell(self, T: Tableau) -> tuple[Word, ...]:
        return self.cells[T]

    def relation(self) -> np.ndarray:
        """``R[a, b]`` is True when some pair of representatives certifies tableau b above tableau a."""
        return _relation(self)

    def closure_relation(self) -> np.ndarray:
        """Transitive closure of :meth:`relation`; still a sound certificate."""
        return _closure(self)


@lru_cache(maxsize=None)
def _index_of(cells: CellIndex) -> dict[Tableau, int]:
    return {T: k for k, T in enumerate(cells.tableaux)}


@lru_cache(maxsize=None)
def _relation(cells: CellIndex) -> np.ndarray:
    order = [w for T in cells.tableaux for w in cells.cells[T]]
    masks = np.array([inversion_mask(w) for w in order], dtype=np.int64)
    starts = np.cumsum([0] + [len(cells.cells[T]) for T in cells.tableaux[:-1]])
    R = np.zeros((len(cells.tableaux), len(cells.tableaux)), dtype=bool)
    for a, T in enumerate(cells.tableaux):
        lo = starts[a]
        sub = masks[lo: lo + len(cells.cells[T])]
        covered = ((sub[:, None] & ~masks[None, :]) == 0).any(axis=0)
        R[a] = np.logical_or.reduceat(covered, starts)
    return R


@lru_cache(maxsize=None)
def _closure(cells: CellIndex) -> np.ndarray:
    R = _relation(cells).copy()
    for k in range(len(R)):
        R |= R[:, k: k + 1] & R[k: k + 1, :]
    return R


@lru_cache(maxsize=None)
def _build_cells(n: int) -> CellIndex:
    cells: dict[Tableau, list[Word]] = {T: [] for T in standard_tableaux(n)}
    for w in all_permutations(n):
        cells[rs_tableau(w)].append(w)
    return CellIndex(n, tuple(cells), {T: tuple(ws) for T, ws in cells.items()})


def build_cells(n: int, bound: int | None = None) -> CellIndex:
    check_bound(n, bound)
    return _build_cells(n)


def duflo_leq_tableaux(S: Tableau, T: Tableau, cells: CellIndex) -> bool:
    """True when representatives ``y`` of S and ``x`` of T exist with ``S(y) <= S(x)``."""
    idx = cells.index
    return bool(cells.relation()[idx[S], idx[T]])


@dataclass
class Report:
    check: str
    n: int
    violations: list = field(default_factory=list)
    reported: dict = field(default_factory=dict)
    checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def fail(self, **detail) -> None:
        self.violations.append(_jsonable(detail))

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "n": self.n,
            "checked": self.checked,
            "violations": self.violations,
            "reported": _jsonable(self.reported),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def summary(self) -> str:
        status = "PASS" if self.ok else f"FAIL ({len(self.violations)} violations)"
        return f"{self.check:<12} n={self.n:<2} checked={self.checked:<7} {status}"


def _jsonable(obj):
    if isinstance(obj, Tableau):
        return [list(r) for r in obj.rows]
    if isinstance(obj, Word):
        return list(obj.entries)
    if isinstance(obj, SimpleRootSubset):
        return sorted(obj.indices)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = [_jsonable(x) for x in obj]
        return sorted(items) if isinstance(obj, (set, frozenset)) else items
    if isinstance(obj, np.generic):
        return obj.item()
    return obj


# -- Theorem-level suites ---------------------------------------------------


def verify_descent_law(n: int) -> Report:
    """Descent law for the longest parabolic element, at word and tableau level."""
    rep = Report("descent_law", n)
    cells = build_cells(n)
    perms = [(w, inversion_mask(w), tau_word(w)) for w in all_permutations(n)]
    R = cells.relation()
    idx = cells.index
    for I in SimpleRootSubset.all_subsets(n):
        wI = richardson_word(I)
        TI = richardson_tableau(I)
        if rs_tableau(wI) != TI:
            rep.fail(I=I, reason="RS(w_I) != T_I", got=rs_tableau(wI), expected=TI)
        if tau_tableau(TI) != I.indices:
            rep.fail(I=I, reason="tau(T_I) != I")
        m = inversion_mask(wI)
        for w, mw, tw in perms:
            rep.checked += 1
            if (m & ~mw == 0) != (I.indices <= tw):
                rep.fail(I=I, w=w, reason="Duflo vs descent mismatch")
        for T in cells.tableaux:
            if bool(R[idx[TI], idx[T]]) != (I.indices <= tau_tableau(T)):
                rep.fail(I=I, T=T, reason="tableau-level Duflo vs tau mismatch")
    return rep


def _family_union(I: SimpleRootSubset) -> set[Tableau]:
    return {T for i in range(2, len(chains_from_subset(I)) + 1) for T in t_family(I, i)}


def verify_theorem26(n: int) -> Report:
    """Consistency of the descendant formula with Duflo certificates.

    Asserted: (a) descendants lie in the union of the ``T_I(i)``; (b) no
    certified member strictly between ``T_I`` and a descendant; (c) distinct
    descendants are certified-incomparable; plus psi-duality of the formula
    and the shape condition.  Reported: (d) whether every excluded member of
    the union has a certified intermediate, and collisions across chains.
    """
    rep = Report("descendants", n)
    cells = build_cells(n)
    Rc = cells.closure_relation()
    idx = cells.index
    d_failures = []
    collisions = 0
    undecided = 0
    for I in SimpleRootSubset.all_subsets(n):
        TI = richardson_tableau(I)
        a = idx[TI]
        members = [T for T in cells.tableaux if I.indices <= tau_tableau(T)]
        D = descendants(I)
        union = _family_union(I)
        rep.checked += 1
        if not D <= union:
            rep.fail(I=I, part="a", extra=D - union)
        for X in D:
            x = idx[X]
            if not closure_contains(I, X) or X == TI:
                rep.fail(I=I, part="membership", D=X)
            if not (paper_leq(TI.shape, X.shape) and TI.shape != X.shape):
                rep.fail(I=I, part="shape", D=X)
            for Tp in members:
                if Tp in (TI, X):
                    continue
                t = idx[Tp]
                if Rc[a, t] and Rc[t, x]:
                    rep.fail(I=I, part="b", D=X, intermediate=Tp)
        for X, Y in combinations(sorted(D, key=Tableau.sort_key), 2):
            if Rc[idx[X], idx[Y]] or Rc[idx[Y], idx[X]]:
                rep.fail(I=I, part="c", pair=[X, Y])
        for X in union - D:
            x = idx[X]
            if not any(Rc[a, idx[Tp]] and Rc[idx[Tp], x] for Tp in members if Tp not in (TI, X)):
                d_failures.append({"I": I, "T": X})
        per_chain = [
            T for i in range(1, len(chains_from_subset(I)) + 1) for T in (t_next(I, i), t_prev(I, i))
            if T in D
        ]
        collisions += len(per_chain) - len(set(per_chain))
        psiD = {psi_tableau(X) for X in D}
        if psiD != set(descendants(psi_subset(I))):
            rep.fail(I=I, part="psi-duality")
        for X in union:
            for S in members:
                if S != X and paper_leq(X.shape, S.shape) and not Rc[idx[X], idx[S]]:
                    undecided += 1
    rep.reported = {
        "d_uncertified": d_failures,
        "d_uncertified_count": len(d_failures),
        "cross_chain_collisions": collisions,
        "pairs_without_certificate": undecided,
    }
    return rep


def verify_family_nonempty(n: int) -> Report:
    rep = Report("family_nonempty", n)
    for I in SimpleRootSubset.all_subsets(n):
        for i in range(2, len(chains_from_subset(I)) + 1):
            rep.checked += 1
            if not t_family(I, i):
                rep.fail(I=I, i=i)
    return rep


def _shifted_subset(I: SimpleRootSubset, lo: int, hi: int) -> SimpleRootSubset:
    """``I`` cut down to the interval [lo, hi], renumbered to start at 1."""
    return SimpleRootSubset(hi - lo + 1, frozenset(i - lo + 1 for i in I.indices if lo <= i < hi))


def verify_projections(n: int) -> Report:
    """Projections of ``T_I(i)`` members onto ``[1, n-1]`` and ``[2, n]``.

    In the ``[2, n]`` case with ``p(T) > 1`` (or ``p(T) = 1`` and
    ``c_1 > c_i``) the projection is checked to be the same tail move applied
    to ``T_{I_1}``.  Shortening the first chain can create a new, shorter
    candidate for ``next_l`` over ``I_1``, so the projection need not be one
    of ``t_next``/``t_prev`` of ``I_1`` itself; those cases are reported.
    """
    rep = Report("projections", n)
    literal_misses = []
    for I in SimpleRootSubset.all_subsets(n):
        chains = chains_from_subset(I)
        st = chain_stats(chains)
        l = len(chains)
        c = chains.lengths
        I_n = _shifted_subset(I, 1, n - 1)
        I_1 = _shifted_subset(I, 2, n)
        drop_first = 1 if c[0] == 1 else 0
        for i in range(2, l + 1):
            nxt, prv = t_next(I, i), t_prev(I, i)
            for T, kind in ((nxt, "next"), (prv, "prev")):
                if not T:
                    continue
                rep.checked += 1
                low = project(T, 1, n - 1)
                if i < l:
                    if low not in t_family(I_n, i):
                        rep.fail(I=I, i=i, kind=kind, case="i", got=low)
                elif kind == "next":
                    if low != richardson_tableau(I_n):
                        rep.fail(I=I, i=i, kind=kind, case="ii", got=low)
                elif low not in t_family(I_n, l):
                    rep.fail(I=I, i=i, kind=kind, case="iii", got=low)
                high = shift(project(T, 2, n), -1)
                p = p_next(I, i) if kind == "next" else p_prev(I, i)
                if p > 1 or c[0] > c[i - 1]:
                    # the same tail move performed on T_{I_1}; when chain 1
                    # supplied the target row, that row index drops by one
                    depth = st.next_l[i - 1] if kind == "next" else st.sprev_l[i - 1]
                    start = c[i - 1] if kind == "next" else depth
                    moved = tail_move(I_1, depth if p > 1 else depth - 1, i - drop_first, start)
                    if high != moved:
                        rep.fail(I=I, i=i, kind=kind, case="iv", got=high, expected=moved)
                    if high not in t_family(I_1, i - drop_first):
                        literal_misses.append({"I": I, "i": i, "kind": kind, "got": high})
                elif high != richardson_tableau(I_1):
                    rep.fail(I=I, i=i, kind=kind, case="v", got=high)
    rep.reported = {
        "iv_not_in_family": literal_misses,
        "iv_not_in_family_count": len(literal_misses),
    }
    return rep


def verify_lemma32(n: int) -> Report:
    """Inversion-set inclusion under the three positional hypotheses."""
    rep = Report("positions", n)
    perms = [(w, w.positions(), inversion_mask(w)) for w in all_permutations(n)]
    for s in range(1, n):
        groups: dict[tuple[int, ...], list] = {}
        for w, pos, m in perms:
            # positions of n, n-1, ..., s+1 must increase
            if all(pos[j] < pos[j - 1] for j in range(n, s + 1, -1)):
                groups.setdefault(restrict_word(w, 1, s).entries, []).append((w, pos, m))
        for group in groups.values():
            for x, px, mx in group:
                for z, pz, mz in group:
                    if all(px[j] <= pz[j] for j in range(s + 1, n + 1)):
                        rep.checked += 1
                        if mz & ~mx:
                            rep.fail(x=x, z=z, s=s)
    return rep


def verify_colligation(n: int) -> Report:
    """Insertion tableaux of colligations of cell representatives."""
    rep = Report("colligation", n)
    for a in range(1, n):
        left = build_cells(a)
        right = build_cells(n - a)
        for P in left.tableaux:
            for Q0 in right.tableaux:
                Q = shift(Q0, a)
                side = concat_horizontal(P, Q)
                over = stack_vertical(P, Q)
                if transpose(over) != concat_horizontal(transpose(P), transpose(Q)):
                    rep.fail(P=P, Q=Q, reason="stack is not the transposed concatenation")
                for x in left.cells[P]:
                    for y0 in right.cells[Q0]:
                        y = Word(tuple(b + a for b in y0))
                        rep.checked += 1
                        if rs_tableau(colligate(x, y)) != side:
                            rep.fail(P=P, Q=Q, x=x, y=y, part="i")
                        if rs_tableau(colligate(y, x)) != over:
                            rep.fail(P=P, Q=Q, x=x, y=y, part="ii")
    return rep


def _psi_mask(mask: int, n: int) -> int:
    out = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if mask >> pair_bit(i, j) & 1:
                out |= 1 << pair_bit(n + 1 - j, n + 1 - i)
    return out


def verify_psi_cells(n: int) -> Report:
    """psi on words: involution, root-automorphism of inversion sets, well defined on cells."""
    rep = Report("psi_cells", n)
    cells = build_cells(n)
    for T in cells.tableaux:
        images = {rs_tableau(psi_word(w, n)) for w in cells.cells[T]}
        if len(images) != 1:
            rep.fail(T=T, images=images)
        elif images != {psi_tableau(T)}:
            rep.fail(T=T, reason="psi_tableau disagrees with the cell image")
        for w in cells.cells[T]:
            rep.checked += 1
            pw = psi_word(w, n)
            if psi_word(pw, n) != w:
                rep.fail(w=w, reason="not an involution")
            if inversion_mask(pw) != _psi_mask(inversion_mask(w), n):
                rep.fail(w=w, reason="inversion set not mapped by the diagram automorphism")
    return rep


def verify_psi_richardson(n: int) -> Report:
    rep = Report("psi_richardson", n)
    for I in SimpleRootSubset.all_subsets(n):
        rep.checked += 1
        got = psi_tableau(richardson_tableau(I))
        if got != richardson_tableau(psi_subset(I)):
            rep.fail(I=I, got=got)
    return rep


def verify_bracket_witness(n: int) -> Report:
    """Duflo witness for every closure member against its bracket tableau.

    Also reports whether the recording tableau of the representative equals
    the bracket tableau, the other possible reading of that statement.
    """
    rep = Report("bracket_witness", n)
    recording_matches = 0
    recording_total = 0
    for I in SimpleRootSubset.all_subsets(n):
        TI = richardson_tableau(I)
        chains = chains_from_subset(I)
        for T in closure_members(I, bound=n):
            if T == TI:
                continue
            rep.checked += 1
            target = t_bracket_m(I, T)
            i = chains.chain_of(first_violation(I, T))
            if target not in t_family(I, i):
                rep.fail(I=I, T=T, reason="bracket tableau not in T_I(i)")
            rep_word = bracket_representative(I, T)
            if rs_tableau(rep_word) != target:
                rep.fail(I=I, T=T, reason="insertion tableau of [w,x] != T_I[m]")
            recording_total += 1
            recording_matches += rs_pair(rep_word)[1] == target
            if not duflo_leq(rep_word, reading_word(T)):
                rep.fail(I=I, T=T, reason="S(w_r(T)) does not contain S([w,x])")
    rep.reported = {
        "recording_reading_holds": recording_matches,
        "recording_reading_total": recording_total,
    }
    return rep


def verify_last_chain(n: int) -> Report:
    rep = Report("last_chain", n)
    for I in SimpleRootSubset.all_subsets(n):
        l = len(chains_from_subset(I))
        if l < 2:
            continue
        D = descendants(I)
        for T in t_family(I, l):
            rep.checked += 1
            if T not in D:
                rep.fail(I=I, T=T)
    return rep


def verify_box_move(n: int) -> Report:
    """Box move of ``n``: no certified intermediate; direct certification reported."""
    rep = Report("box_move", n)
    cells = build_cells(n)
    Rc = cells.closure_relation()
    idx = cells.index
    certified = 0
    total = 0
    for T in cells.tableaux:
        S = box_move_descendant(T)
        if not S:
            continue
        total += 1
        rep.checked += 1
        t, s = idx[T], idx[S]
        certified += bool(Rc[t, s])
        for U in cells.tableaux:
            if U in (T, S):
                continue
            u = idx[U]
            if Rc[t, u] and Rc[u, s]:
                rep.fail(T=T, S=S, intermediate=U)
    rep.reported = {"certified_above": certified, "moves": total}
    return rep


def verify_psi_formulas(n: int) -> Report:
    rep = Report("psi_formulas", n)
    for I in SimpleRootSubset.all_subsets(n):
        for i in range(2, len(chains_from_subset(I)) + 1):
            for T, formula in ((t_next(I, i), psi_next_formula), (t_prev(I, i), psi_prev_formula)):
                if not T:
                    continue
                rep.checked += 1
                got = formula(I, i)
                if got != psi_tableau(T):
                    rep.fail(I=I, i=i, kind=formula.__name__, got=got, expected=psi_tableau(T))
                if psi_tableau(got) != T:
                    rep.fail(I=I, i=i, kind=formula.__name__, reason="double application")
    return rep


def verify_reversal(n: int) -> Report:
    """Reversing a word transposes its insertion tableau."""
    rep = Report("reversal", n)
    for w in all_permutations(n):
        rep.checked += 1
        if rs_tableau(reverse(w)) != transpose(rs_tableau(w)):
            rep.fail(w=w)
    return rep


def verify_cells(n: int) -> Report:
    rep = Report("cells", n)
    cells = build_cells(n)
    total = sum(len(ws) for ws in cells.cells.values())
    rep.checked = total
    if total != factorial(n):
        rep.fail(reason="cell sizes do not sum to n!", total=total)
    for T, ws in cells.cells.items():
        if len(ws) != hook_length_count(T.shape):
            rep.fail(T=T, size=len(ws), expected=hook_length_count(T.shape))
        if reading_word(T) not in ws:
            rep.fail(T=T, reason="reading word not in its own cell")
    return rep


# -- Fixed worked examples -------------------------------------------------

SL4_S = Tableau(((1, 3), (2, 4)))
SL4_T = Tableau(((1, 4), (2,), (3,)))

SL6_TABLEAUX = {
    "T": Tableau(((1, 4, 5), (2,), (3,), (6,))),
    "P": Tableau(((1, 4), (2, 5), (3,), (6,))),
    "Q": Tableau(((1, 5), (2, 6), (3,), (4,))),
    "S": Tableau(((1, 4), (2,), (3,), (5,), (6,))),
    "U": Tableau(((1, 5), (2,), (3,), (4,), (6,))),
    "Y": Tableau(((1,), (2,), (3,), (4,), (5,), (6,))),
}


def verify_sl4_example(n: int = 4) -> Report:
    """The sl_4 example: closure of the intersection is smaller than the intersection of closures."""
    rep = Report("sl4_example", 4)
    I = SimpleRootSubset.of(4, [1])
    lam = (2, 2)
    rep.checked = 5
    if richardson_tableau(I) != Tableau(((1, 3, 4), (2,))):
        rep.fail(reason="T_I mismatch")
    if SL4_S != richardson_tableau(SimpleRootSubset.of(4, [1, 3])):
        rep.fail(reason="S is not the Richardson tableau of {1,3}")
    if not closure_contains(I, SL4_T):
        rep.fail(reason="T not in closure of V_I")
    if not paper_leq(lam, SL4_T.shape):
        rep.fail(reason="sh(T) not in the closure of O_(2,2)")
    if closure_contains(SimpleRootSubset.of(4, [1, 3]), SL4_T):
        rep.fail(reason="T unexpectedly in closure of V_S")
    if descendants(I) != {SL4_S, SL4_T}:
        rep.fail(reason="descendants mismatch", got=descendants(I))
    cells = build_cells(4, bound=4)
    rep.reported = {
        "S_below_T_certified": duflo_leq_tableaux(SL4_S, SL4_T, cells),
        "T_below_S_certified": duflo_leq_tableaux(SL4_T, SL4_S, cells),
    }
    return rep


def verify_sl6_example(n: int = 6) -> Report:
    """The sl_6 example with a codimension-2 descendant."""
    rep = Report("sl6_example", 6)
    I = SimpleRootSubset.of(6, [1, 2, 5])
    chains = chains_from_subset(I)
    T = SL6_TABLEAUX["T"]
    rep.checked = 1
    if richardson_tableau(I) != Tableau(((1, 4, 5), (2, 6), (3,))):
        rep.fail(reason="T_I mismatch")
    if nilradical_dim(chains) != 11:
        rep.fail(reason="nilradical dimension", got=nilradical_dim(chains))
    if codim_in_nilradical(T, chains) != 2:
        rep.fail(reason="codimension", got=codim_in_nilradical(T, chains))
    if T not in descendants(I):
        rep.fail(reason="T is not a descendant")
    if tuple(T.shape) not in {mu.parts for mu in orbit_covers(richardson_tableau(I).shape)}:
        rep.fail(reason="sh(T) does not cover sh(T_I)")
    expected = {
        (3, 1, 1, 1): {"T"},
        (2, 2, 1, 1): {"P", "Q"},
        (2, 1, 1, 1, 1): {"S", "U"},
        (1, 1, 1, 1, 1, 1): {"Y"},
    }
    names = {v: k for k, v in SL6_TABLEAUX.items()}
    for shape, want in expected.items():
        got = {names.get(X, repr(X)) for X in closure_members(I, bound=6) if X.shape == shape}
        rep.checked += 1
        if got != want:
            rep.fail(shape=shape, got=got, expected=want)
    cells = build_cells(6, bound=6)
    for name in "PQSUY":
        rep.checked += 1
        if not duflo_leq_tableaux(T, SL6_TABLEAUX[name], cells):
            rep.fail(reason=f"{name} not certified above T")
    return rep


# -- Orchestration ---------------------------------------------------------


@dataclass(frozen=True)
class Suite:
    name: str
    func: Callable[[int], Report]
    min_n: int = 2
    fixed_n: int | None = None


SUITES: dict[str, Suite] = {
    s.name: s
    for s in (
        Suite("cells", verify_cells, 1),
        Suite("reversal", verify_reversal, 1),
        Suite("descent_law", verify_descent_law),
        Suite("descendants", verify_theorem26),
        Suite("family_nonempty", verify_family_nonempty),
        Suite("projections", verify_projections, 3),
        Suite("positions", verify_lemma32),
        Suite("colligation", verify_colligation),
        Suite("psi_cells", verify_psi_cells),
        Suite("psi_richardson", verify_psi_richardson),
        Suite("bracket_witness", verify_bracket_witness),
        Suite("last_chain", verify_last_chain),
        Suite("box_move", verify_box_move),
        Suite("psi_formulas", verify_psi_formulas),
        Suite("sl4_example", verify_sl4_example, fixed_n=4),
        Suite("sl6_example", verify_sl6_example, fixed_n=6),
    )
}


def run_suite(name: str, n: int) -> Report:
    log.info("running %s at n=%d", name, n)
    return SUITES[name].func(n)


def _tasks(names: Iterable[str], max_n: int) -> list[tuple[str, int]]:
    tasks = []
    for name in names:
        suite = SUITES[name]
        if suite.fixed_n is not None:
            tasks.append((name, suite.fixed_n))
        else:
            tasks.extend((name, n) for n in range(suite.min_n, max_n + 1))
    return tasks


def run_verification(
    max_n: int,
    suites: Sequence[str] | None = None,
    jobs: int = 1,
    bound: int | None = None,
) -> list[Report]:
    """Run the named suites (all by default) for every n up to ``max_n``."""
    names = list(suites) if suites else list(SUITES)
    unknown = [s for s in names if s not in SUITES]
    if unknown:
        raise KeyError(f"unknown suites: {unknown}")
    tasks = _tasks(names, max_n)
    for _, n in tasks:
        check_bound(n, bound)
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run_suite, *zip(*tasks)))
    return [run_suite(name, n) for name, n in tasks]


# -- Hasse diagram of the certified order ---------------------------------


def hasse_graph(I: SimpleRootSubset, bound: int | None = None) -> nx.DiGraph:
    """Covers of the Duflo-certified order on the closure members of ``V_I``.

    Edges point from the larger variety to the one in its closure, so the
    Richardson tableau is the unique source.
    """
    check_bound(I.n, bound)
    # the bound was enforced above; the inner calls must not re-read the environment
    cells = build_cells(I.n, bound=I.n)
    members = closure_members(I, bound=I.n)
    Rc = cells.closure_relation()
    idx = cells.index
    G = nx.DiGraph()
    G.add_nodes_from(members)
    G.add_edges_from(
        (S, T) for S in members for T in members if S != T and Rc[idx[S], idx[T]]
    )
    H = nx.transitive_reduction(G)
    root = richardson_tableau(I)
    D = descendants(I)
    for T in members:
        H.nodes[T]["root"] = T == root
        H.nodes[T]["descendant"] = T in D
    for S, T in H.edges:
        H.edges[S, T]["highlight"] = S == root and T in D
    return H


def _label(T: Tableau) -> str:
    return "".join("(" + ",".join(map(str, r)) + ")" for r in T.rows)


def hasse_to_dot(H: nx.DiGraph, name: str = "closure") -> str:
    nodes = sorted(H.nodes, key=Tableau.sort_key)
    ids = {T: f"t{k}" for k, T in enumerate(nodes)}
    lines = [f"digraph {name} {{", "  rankdir=TB;"]
    for T in nodes:
        attrs = [f'label="{_label(T)}"']
        if H.nodes[T].get("root"):
            attrs.append("shape=doubleoctagon")
        elif H.nodes[T].get("descendant"):
            attrs.append("style=filled, fillcolor=lightblue")
        lines.append(f"  {ids[T]} [{', '.join(attrs)}];")
    for S, T in sorted(H.edges, key=lambda e: (Tableau.sort_key(e[0]), Tableau.sort_key(e[1]))):
        extra = " [color=blue, penwidth=2]" if H.edges[S, T].get("highlight") else ""
        lines.append(f"  {ids[S]} -> {ids[T]}{extra};")
    lines.append("}")
    return "\n".join(lines)


def hasse_to_dict(H: nx.DiGraph) -> dict:
    nodes = sorted(H.nodes, key=Tableau.sort_key)
    return {
        "nodes": [
            {"rows": _jsonable(T), "shape": list(T.shape), "root": H.nodes[T]["root"],
             "descendant": H.nodes[T]["descendant"]}
            for T in nodes
        ],
        "edges": [
            {"from": _jsonable(S), "to": _jsonable(T), "highlight": H.edges[S, T]["highlight"]}
            for S, T in sorted(H.edges, key=lambda e: (Tableau.sort_key(e[0]), Tableau.sort_key(e[1])))
        ],
    }
