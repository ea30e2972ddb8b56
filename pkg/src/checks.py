# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Randomized property suites run by the ``check`` command."""

import functools
import logging
import typing

import numpy as np

from autos import automorphism_group
from cohomology import (
    GModule,
    coboundary,
    is_cocycle,
    random_cochain,
    trivial_module,
    wreath_module,
    xi,
)
from groups import FiniteGroup, cyclic, dihedral
from perm_two_group import sym_cell, sym_compose, sym_tensor
from state import Limits, default_limits
from two_group import TwoGroupPresentation, verify_coherence
from types_ import SymCell

logger = logging.getLogger(__name__)

Suite = typing.Callable[[np.random.Generator, Limits], bool]


def negation_module() -> GModule:
    """Z3 over Z2, the generator acting by negation."""
    return GModule(cyclic(2), cyclic(3), np.array([[0, 1, 2], [0, 2, 1]]))


def coboundary_squared(rng: np.random.Generator, limits: Limits) -> bool:
    """One instance of dd = 0 on a random 1- or 2-cochain of a nontrivial module.

    Args:
        rng: random source.
        limits: active limits.

    Returns:
        Whether the instance passed.
    """
    degree = int(rng.integers(1, 3))
    c = random_cochain(negation_module(), degree, rng)
    return coboundary(coboundary(c, limits), limits).is_zero


# (letters, order of the acting cyclic group) for the chain-map suite
CHAIN_MAP_CASES = ((2, 2), (2, 3), (3, 2))


@functools.lru_cache(maxsize=8)
def _wreath_case(n: int, acting: int, limits: Limits) -> typing.Tuple[GModule, GModule]:
    """A module over Z2 or Z3 and its permute-then-act module over S_n wr G.

    Z2 acts on Z3 by negation; Z3 acts trivially on Z2.
    """
    if acting == 2:
        base = negation_module()
    else:
        base = trivial_module(cyclic(3, limits), cyclic(2, limits))
    return base, wreath_module(n, base, limits)


def chain_map(rng: np.random.Generator, limits: Limits) -> bool:
    """One instance of d xi = xi d on a random 1- or 2-cochain of a random small wreath case.

    Args:
        rng: random source.
        limits: active limits.

    Returns:
        Whether the instance passed.
    """
    n, acting = CHAIN_MAP_CASES[int(rng.integers(len(CHAIN_MAP_CASES)))]
    base, module = _wreath_case(n, acting, limits)
    c = random_cochain(base, int(rng.integers(1, 3)), rng)
    transferred = coboundary(xi(n, c, module, limits), limits)
    return transferred == xi(n, coboundary(c, limits), module, limits)


def pentagon_cocycle(rng: np.random.Generator, limits: Limits) -> bool:
    """One instance of pentagon <=> cocycle over (Z3, Z3).

    Half of the instances are coboundaries, so both outcomes are exercised.

    Args:
        rng: random source.
        limits: active limits.

    Returns:
        Whether the pentagon verdict matched the cocycle condition.
    """
    module = trivial_module(cyclic(3), cyclic(3))
    if rng.integers(2):
        z = coboundary(random_cochain(module, 2, rng), limits)
    else:
        z = random_cochain(module, 3, rng)
    presentation = TwoGroupPresentation.unchecked(module.acting_group, module, z)
    return verify_coherence(presentation, limits).pentagon_ok == is_cocycle(z, limits)


def _random_cell(
    group: FiniteGroup, rng: np.random.Generator, source: int, limits: Limits
) -> SymCell:
    """A random cell of Sym(G) out of a given object.

    Args:
        group: the group G.
        rng: random source.
        source: Aut index of the source object.
        limits: active limits.

    Returns:
        tau(g; phi, c_g o phi) for a random g.
    """
    outer = automorphism_group(group, limits)
    g = int(rng.integers(group.order))
    return sym_cell(group, g, source, int(outer.aut.table[outer.inner_map[g], source]), limits)


def interchange(rng: np.random.Generator, limits: Limits) -> bool:
    """One instance of the interchange law of Sym(D4) on random composable cells.

    Args:
        rng: random source.
        limits: active limits.

    Returns:
        Whether ``(b' o b) (x) (a' o a) = (b' (x) a') o (b (x) a)``.
    """
    group = dihedral(4, limits)
    aut_order = automorphism_group(group, limits).aut.order
    b = _random_cell(group, rng, int(rng.integers(aut_order)), limits)
    b2 = _random_cell(group, rng, b.target, limits)
    a = _random_cell(group, rng, int(rng.integers(aut_order)), limits)
    a2 = _random_cell(group, rng, a.target, limits)
    left = sym_tensor(
        group, sym_compose(group, b2, b, limits), sym_compose(group, a2, a, limits), limits
    )
    right = sym_compose(
        group, sym_tensor(group, b2, a2, limits), sym_tensor(group, b, a, limits), limits
    )
    return left == right


SUITES: typing.Dict[str, Suite] = {
    "coboundary-squared": coboundary_squared,
    "chain-map": chain_map,
    "pentagon-cocycle": pentagon_cocycle,
    "interchange": interchange,
}


def run_suites(
    seed: int, trials: typing.Optional[int] = None, limits: typing.Optional[Limits] = None
) -> typing.Dict[str, int]:
    """Run every suite with one reproducible random source.

    Args:
        seed: seed of the random source.
        trials: instances per suite, ``random_trials`` when omitted.
        limits: active limits.

    Returns:
        Number of passed instances per suite.
    """
    limits = limits or default_limits()
    trials = trials or limits.random_trials
    rng = np.random.default_rng(seed)
    passed = {}
    for name, suite in SUITES.items():
        passed[name] = sum(bool(suite(rng, limits)) for _ in range(trials))
        logger.info("Suite %s: %d/%d passed", name, passed[name], trials)
    return passed
