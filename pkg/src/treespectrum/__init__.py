"""Exact continuant arithmetic, Matrix-Tree determinants and the spectrum of
spanning-tree counts over twin-path anchor graphs."""

from treespectrum.continuants import (
    ContinuantPair,
    InvalidWord,
    NotAContinuantPair,
    as_word,
    continuant_pair,
    continuant_sequence,
    minus_cf,
    reconstruct_word,
)
from treespectrum.exact_linalg import (
    IntMatrix,
    delete_row_col,
    det,
    tridiagonal_matrix,
    two_copy_identity_sides,
)
from treespectrum.graph_model import (
    MultiGraph,
    Role,
    cofactor,
    decode_graph,
    encode_graph,
    is_connected,
    is_simple,
    laplacian,
)
from treespectrum.constructions import (
    ConstructionParams,
    build_multigraph,
    build_simple_graph,
    extract_blocks,
    pad_graph,
    path_degree,
)
from treespectrum.tree_count import tau_enumerate, tau_kirchhoff
from treespectrum.arithmetic import factorize, sigma0
from treespectrum.spectrum_lab import (
    compute_divisor,
    enumerate_words,
    lower_bound_estimate,
    run_spectrum,
    verify_word,
)

__version__ = "0.1.0"
