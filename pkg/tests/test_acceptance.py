"""Acceptance checks, one test per criterion.

Each test records a PASS/FAIL line that pytest prints in its terminal
summary. Running this file directly prints the same lines without pytest:

    python3 tests/test_acceptance.py
"""

from __future__ import annotations

import itertools
import sys
import time
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE_LINES, family_corpus, random_corpus  # noqa: E402

from asymcolor.automorphism import automorphisms, is_asymmetric  # noqa: E402
from asymcolor.colorer import all_red_vertices, color_graph, run_procedure  # noqa: E402
from asymcolor.colors import PAINTS  # noqa: E402
from asymcolor.errors import AsymColorError, Infeasible  # noqa: E402
from asymcolor.families import complete, complete_bipartite, cycle  # noqa: E402
from asymcolor.graph import satisfies_hypothesis  # noqa: E402
from asymcolor.oracle import (  # noqa: E402
    canonical_form,
    census,
    distinguishing_index,
    enumerate_connected_graphs,
    exists_asymmetric_coloring,
)
from asymcolor.palette import (  # noqa: E402
    is_uniform,
    split_palette,
    uniform_palette_seqs,
    uniform_palettes,
)


def _record(number, title, ok, detail, seconds):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail}; {seconds:.1f}s)"
    if line not in ACCEPTANCE_LINES:
        ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def _timed(fn):
    t = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t


# -- 1 ---------------------------------------------------------------------


def exception_census():
    expected = {
        "K3": complete(3), "K4": complete(4), "K5": complete(5), "C4": cycle(4),
        "C5": cycle(5), "K2,4": complete_bipartite(2, 4), "K3,3": complete_bipartite(3, 3),
    }
    names = {canonical_form(g)[0]: name for name, g in expected.items()}
    rows = census(6, hypothesis_only=True, n_min=3)
    threes = {canonical_form(r.graph)[0] for r in rows if r.dprime == 3}
    found = sorted(names.get(c, f"unexpected {c}") for c in threes)
    others_ok = all(
        r.dprime in (1, 2) and (r.dprime == 1) == (automorphisms(r.graph).order == 1)
        for r in rows
        if r.dprime != 3
    )
    ok = threes == set(names) and others_ok
    return ok, f"{len(rows)} hypothesis graphs, D'=3 set {found}, rest 1/2 as expected: {others_ok}"


def test_criterion_1_exception_census():
    ok, detail, s = _timed(exception_census)
    assert _record(1, "exception census n=3..6", ok, detail, s), detail


# -- 2 ---------------------------------------------------------------------


def k2_never():
    results = {r: exists_asymmetric_coloring(complete(2), r) for r in range(1, 5)}
    return all(v is None for v in results.values()), "no witness for r=1..4"


def test_criterion_2_k2():
    ok, detail, s = _timed(k2_never)
    assert _record(2, "K2 has no asymmetric coloring", ok, detail, s), detail


# -- 3 ---------------------------------------------------------------------


def complete_indices():
    got = {n: distinguishing_index(complete(n)) for n in range(3, 9)}
    want = {n: (3 if n <= 5 else 2) for n in range(3, 9)}
    return got == want, f"D'(K_n) for n=3..8: {[got[n] for n in range(3, 9)]}"


def test_criterion_3_complete_graphs():
    ok, detail, s = _timed(complete_indices)
    assert _record(3, "distinguishing index of K3..K8", ok, detail, s), detail


# -- 4 ---------------------------------------------------------------------


def palette_counts():
    bad = []
    for k in range(1, 61):
        m, odd = divmod(k, 2)
        closed = (m * m + 5 * m + 4) // 2 if odd else (m * m + 3 * m + 2) // 2
        pals = uniform_palettes(k)
        if not (len(pals) == len(set(pals)) == closed >= k + 1):
            bad.append(k)
        elif not all(is_uniform(p) and 2 * p.a <= k for p in pals):
            bad.append(k)
    return not bad, f"k=1..60, mismatches at {bad}"


def test_criterion_4_palette_counts():
    ok, detail, s = _timed(palette_counts)
    assert _record(4, "uniform palette counts", ok, detail, s), detail


# -- 5 ---------------------------------------------------------------------


def _compositions(total, parts):
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield [b - a for a, b in zip(bounds, bounds[1:])]


def sequence_counts():
    checked = 0
    bad = []
    for total in range(1, 13):
        for s in range(1, min(4, total) + 1):
            for sizes in _compositions(total, s):
                checked += 1
                if len(set(uniform_palette_seqs(sizes))) < total + 1:
                    bad.append(sizes)
    return not bad, f"{checked} size vectors, failures {bad[:3]}"


def test_criterion_5_sequence_bound():
    ok, detail, s = _timed(sequence_counts)
    assert _record(5, "palette sequence lower bound", ok, detail, s), detail


# -- 6 ---------------------------------------------------------------------


def split_soundness():
    cases = infeasible = wrong = 0
    for k in range(1, 15):
        for p in uniform_palettes(k):
            for s in range(1, min(3, k) + 1):
                for sizes in _compositions(k, s):
                    cases += 1
                    try:
                        parts = split_palette(p, sizes)
                    except Infeasible:
                        infeasible += 1
                        continue
                    total = tuple(map(sum, zip(*parts)))
                    if total != tuple(p) or [q.k for q in parts] != sizes or not all(map(is_uniform, parts)):
                        wrong += 1
    ok = infeasible == 0 and wrong == 0
    return ok, f"{cases} splits, {infeasible} infeasible, {wrong} unsound"


def test_criterion_6_split_soundness():
    ok, detail, s = _timed(split_soundness)
    assert _record(6, "palette split soundness", ok, detail, s), detail


# -- 7 and 8 -----------------------------------------------------------------


def end_to_end_corpus():
    out = []
    for n in range(2, 8):
        out += [(f"census n={n} #{i}", g) for i, g in enumerate(enumerate_connected_graphs(n))
                if satisfies_hypothesis(g)]
    return out + family_corpus() + random_corpus(200)


@lru_cache(maxsize=None)
def corpus_runs():
    runs = []
    for label, g in end_to_end_corpus():
        try:
            col = color_graph(g, paranoid=True)
            root = run_procedure(g).root
            runs.append((label, g, col, root, None))
        except AsymColorError as exc:
            runs.append((label, g, None, None, f"{type(exc).__name__}: {exc}"))
    return tuple(runs)


def procedure_end_to_end():
    runs = corpus_runs()
    errors = [(label, err) for label, _, _, _, err in runs if err]
    bad = [
        label for label, g, col, _, err in runs
        if not err and not (len(col) == g.m and set(col) <= set(PAINTS) and is_asymmetric(g, col))
    ]
    ok = not errors and not bad
    return ok, f"{len(runs)} graphs, {len(errors)} raised {errors[:2]}, {len(bad)} not asymmetric"


def test_criterion_7_end_to_end():
    ok, detail, s = _timed(procedure_end_to_end)
    assert _record(7, "procedure end to end, paranoid", ok, detail, s), detail


def root_only_all_red():
    misses = []
    shapes = set()
    for label, g, col, root, err in corpus_runs():
        if err:
            misses.append(f"{label} (no coloring)")
        elif all_red_vertices(g, col) != [root]:
            misses.append(f"{label} all-red={all_red_vertices(g, col)} root={root}")
            shapes.add(g.edges if g.n > 7 else canonical_form(g)[1].edges)
    detail = f"{len(corpus_runs())} colorings, {len(misses)} mismatches on {len(shapes)} distinct graph(s) {sorted(shapes)[:3]}"
    return not misses, detail


def test_criterion_8_root_is_only_all_red_vertex():
    ok, detail, s = _timed(root_only_all_red)
    assert _record(8, "root is the only all-red vertex", ok, detail, s), detail


if __name__ == "__main__":
    checks = [
        (1, "exception census n=3..6", exception_census),
        (2, "K2 has no asymmetric coloring", k2_never),
        (3, "distinguishing index of K3..K8", complete_indices),
        (4, "uniform palette counts", palette_counts),
        (5, "palette sequence lower bound", sequence_counts),
        (6, "palette split soundness", split_soundness),
        (7, "procedure end to end, paranoid", procedure_end_to_end),
        (8, "root is the only all-red vertex", root_only_all_red),
    ]
    results = [_record(num, title, *_timed(fn)) for num, title, fn in checks]
    sys.exit(0 if all(results) else 1)
