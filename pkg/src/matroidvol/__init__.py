"""Exact volumes of matroid base polytopes via cyclic flats, with a lattice-point oracle."""

from matroidvol.descent import (
    BinarySequence,
    InvalidSequence,
    PartitionInBox,
    delta,
    delta_leq,
    descent_sequence,
    down_set,
    dual_sequence,
    enumerate_sequences,
    eulerian,
    from_partition,
    seq_leq,
    seq_new,
    to_partition,
)
from matroidvol.engine import (
    build_chain_poset,
    chain_to_sequence,
    relaxation_volume,
    schubert_volume,
    sequence_to_chain,
    sparse_paving_volume,
    volume,
    volume_connected,
)
from matroidvol.kernels import BACKEND
from matroidvol.matroid import (
    Matroid,
    MatroidError,
    PreconditionError,
    direct_sum,
    graphic,
    schubert,
    sparse_paving,
    uniform,
)
from matroidvol.oracle import BudgetExceeded, oracle_volume

__version__ = "0.1.0"
