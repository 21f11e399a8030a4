# =========================================================================== #
#                              TEST FIXTURES                                  #
# =========================================================================== #
#%%
import numpy as np
from pytest import fixture

from lattice_studio.hypotheses.schedule import SampleSchedule
from lattice_studio.lattice.domain import LatticeDomain
from lattice_studio.lattice.field import LatticeField
from lattice_studio.potentials.base import InteractionTerm, MultibodyPotential
from lattice_studio.potentials.determinant import DeterminantPotential
from lattice_studio.potentials.lennard_jones import LJLinearizedPotential, LJRawPotential
from lattice_studio.potentials.pair import PairPotential

# --------------------------------------------------------------------------- #
#                               POTENTIALS                                    #
# --------------------------------------------------------------------------- #
@fixture(scope='session')
def nn_1d():
    return PairPotential.nearest_neighbour(N=1)

@fixture(scope='session')
def nn_2d():
    return PairPotential.nearest_neighbour(N=2, n=2)

@fixture(scope='session')
def chain():
    return PairPotential.two_spring_chain(1.0, 3.0)

@fixture(scope='session')
def window_potential():
    return PairPotential.next_nearest_window(1.0, 1.0)

@fixture(scope='session')
def determinant_2d():
    tuples = [(((1, 0), (0, 1)), 1.0), (((1, 1), (-1, 1)), 0.25)]
    return DeterminantPotential(tuples, N=2, n=2, p=2.0, q=1.0)

@fixture(scope='session')
def lj():
    return LJLinearizedPotential(k=2, N=3)

@fixture(scope='session')
def lj_raw():
    return LJRawPotential(k=2, N=3)

class OnsiteTerm(InteractionTerm):
    """|z(i)|^2, which changes under z -> z + w."""

    quadratic = True

    def density(self, stencil):
        return np.sum(stencil.shifted((0,) * stencil.N) ** 2, axis=-1)

    def majorant(self):
        return {((0,), (1,)): 1.0}

class OnsitePotential(MultibodyPotential):
    def __init__(self, period=1):
        super(OnsitePotential, self).__init__(1, 1, 2.0, period, None, 'onsite')

    def _build_terms(self):
        return [OnsiteTerm()]

@fixture(scope='session')
def onsite():
    return OnsitePotential()

@fixture(scope='session')
def aperiodic():
    return OnsitePotential(period=None)

# --------------------------------------------------------------------------- #
#                          SCHEDULES AND FIELDS                               #
# --------------------------------------------------------------------------- #
@fixture(scope='session')
def small_schedule():
    return SampleSchedule(epsilons=(0.25, 0.125), deltas=(0.5, 0.25, 0.125), samples=200,
                          seed=7)

@fixture(scope='function')
def rng():
    return np.random.default_rng(20191019)

@fixture(scope='session')
def square():
    return LatticeDomain.cell(6, N=2, n=2)

@fixture(scope='function')
def random_field(square):
    values = np.random.default_rng(5).normal(size=square.shape + (square.n,))
    return LatticeField(square, values)
