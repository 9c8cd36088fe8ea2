"""Randomized self-test harness tying all the pieces together.

Each section draws seeded random inputs and checks an exact identity:
structural invariance of flips, vanishing of the three cocycles on the
relation loops, preservation and topologicality of markings, coefficient
equivariance, and the word-algebra normal form.  Everything is
deterministic for a fixed seed.
"""

from __future__ import annotations

import random
from typing import Callable, Optional

from . import intlinalg
from .cocycles import induced_k_automorphism, path_sum, transform_value
from .fatgraph import canonical_iso
from .flips import (adjacent_flippable_pairs, commuting_loop,
                    disjoint_flippable_pairs, flip, flippable_edges,
                    involution_pair, pentagon_path)
from .markings import (check_marking, is_topological_h, propagate,
                       propagate_path, canonical_h_marking)
from .randgen import (random_coherent_marking, random_flip_path, random_gl,
                      random_graph)
from .words import parse_word, word_str
from .earle import (HElement, bp_m_phase_sums, d2, earle_f,
                    morita_normal_form, reconstruct,
                    reference_bp_automorphism)


class SelfTestFailure(AssertionError):
    pass


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise SelfTestFailure(message)


def _section_structural(rng: random.Random, trials: int, log) -> None:
    flips_done = 0
    for t in range(trials):
        genus = rng.randint(1, 3)
        g = random_graph(genus, rng, extra_flips=0)
        m = random_coherent_marking(g, rng.randint(2, 2 * genus), rng)
        b = g.boundary_number()
        for _ in range(10):
            g2, ctx = flip(g, rng.choice(flippable_edges(g)))
            m = propagate(m, ctx)
            _check(g2.num_vertices == g.num_vertices, "flip changed V")
            _check(g2.num_edges == g.num_edges, "flip changed E")
            _check(g2.boundary_number() == b, "flip changed boundary number")
            _check(g2.genus() == genus, "flip changed genus")
            check_marking(g2, m)
            g = g2
            flips_done += 1
    log("ok structural invariance (%d flips)" % flips_done)


def _section_relation_loops(rng: random.Random, trials: int, log) -> None:
    loops = 0
    for t in range(trials):
        genus = rng.randint(1, 3)
        g = random_graph(genus, rng)
        m = random_coherent_marking(g, rng.randint(2, 2 * genus), rng)
        batch = [involution_pair(g, rng.choice(flippable_edges(g)))]
        adj = adjacent_flippable_pairs(g)
        if adj:
            batch.append(pentagon_path(g, *rng.choice(adj)))
        dis = disjoint_flippable_pairs(g)
        if dis:
            batch.append(commuting_loop(g, *rng.choice(dis)))
        for loop in batch:
            _check(loop.is_closed(), "relation loop did not close")
            psi = canonical_iso(loop.start, loop.end)
            m_end = propagate_path(m, loop.steps)
            _check(all(m_end.value(psi[e]) == m.value(e)
                       for e in loop.start.oriented_edges()),
                   "marking did not return around a relation loop")
            for which in "mjs":
                total, _ = path_sum(loop, m, which)
                _check(total.is_zero(),
                       "cocycle %s nonzero on a relation loop" % which)
            t_mat = induced_k_automorphism(loop, m)
            _check(intlinalg.mat_eq(t_mat, intlinalg.identity(m.rank)),
                   "relation loop induced a nontrivial automorphism")
            loops += 1
    log("ok relation loops (%d loops, cocycles m j s)" % loops)


def _section_topological(rng: random.Random, trials: int, log) -> None:
    for t in range(trials):
        genus = rng.randint(1, 3)
        g = random_graph(genus, rng)
        m, form = canonical_h_marking(g)
        check_marking(g, m)
        _check(is_topological_h(g, m, form),
               "canonical marking fails the intersection criterion")
        path = random_flip_path(g, 12, rng)
        m_end = propagate_path(m, path.steps)
        _check(is_topological_h(path.end, m_end, form),
               "marking stopped being topological after flips")
    log("ok homology markings (%d graphs, 12 flips each)" % trials)


def _section_equivariance(rng: random.Random, trials: int, log) -> None:
    for t in range(trials):
        genus = rng.randint(1, 3)
        g = random_graph(genus, rng)
        r = rng.randint(2, 2 * genus)
        m = random_coherent_marking(g, r, rng)
        t_mat = random_gl(r, rng)
        path = random_flip_path(g, rng.randint(1, 8), rng)
        m_t = m.transform(t_mat)
        for which in "mjs":
            total, _ = path_sum(path, m, which)
            total_t, _ = path_sum(path, m_t, which)
            _check(total_t == transform_value(which, t_mat, total),
                   "cocycle %s is not equivariant" % which)
    log("ok equivariance (%d random transforms)" % trials)


def _section_words(rng: random.Random, trials: int, log) -> None:
    for t in range(trials):
        letters = [("ab"[rng.randrange(2)], rng.choice((1, -1)))
                   for _ in range(rng.randint(0, 14))]
        from .words import reduce_word
        w = reduce_word(letters)
        _check(reconstruct(morita_normal_form(w)) == w,
               "normal form does not reconstruct %s" % word_str(w))
    _check(d2(parse_word("b a b' a'")) == -2, "d(b a b' a') must be -2")
    phi = reference_bp_automorphism(2)
    _check(earle_f(phi, 2, rng=rng) == -2 * HElement.basis(2, "B", 2),
           "reference bounding-pair value is not -2*B2")
    totals, grand = bp_m_phase_sums()
    _check(grand.coords == (4, 0, 0, 0), "bounding-pair grand total is not 4a")
    log("ok word algebra and bounding-pair values (%d words)" % trials)


SECTIONS = (
    ("structural", _section_structural),
    ("relation-loops", _section_relation_loops),
    ("topological", _section_topological),
    ("equivariance", _section_equivariance),
    ("words", _section_words),
)


def run_selftest(seed: int = 0, trials: int = 25,
                 log: Optional[Callable[[str], None]] = None) -> int:
    """Run all sections; returns 0 on success, 1 on the first failure."""
    log = log or print
    rng = random.Random(seed)
    for name, section in SECTIONS:
        try:
            section(rng, trials, log)
        except SelfTestFailure as err:
            log("FAIL %s: %s" % (name, err))
            return 1
    return 0
