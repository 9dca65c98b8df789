"""Reduced units for the hard-wall box.

Everything is expressed with hbar = m = L = 1.  Couplings are then
dimensionless multiples of g_tilde = hbar^2/(m L) = 1, lengths are fractions
of the box, and the single-particle ground state energy of the full box is
EPSILON_1 = pi^2/2.
"""

from __future__ import annotations

import math

G_TILDE = 1.0

#: Single-particle ground state energy of the barrier-free box, pi^2/2.
EPSILON_1 = math.pi**2 / 2.0

#: Repulsive infinite-coupling sentinel (Tonks-Girardeau backend).
TG_COUPLING = math.inf

#: Attractive infinite-coupling sentinel (bound-cluster limit).
CLUSTER_COUPLING = -math.inf


def single_particle_energy(i: int, length: float = 1.0) -> float:
    """Energy pi^2 i^2 / (2 length^2) of box level i >= 1."""
    return math.pi**2 * i * i / (2.0 * length * length)


def level_spacing(n_particles: int) -> float:
    """Spacing eps_{N+1} - eps_N = (2N+1) * EPSILON_1 of the full box."""
    return (2 * n_particles + 1) * EPSILON_1
