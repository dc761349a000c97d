"""Classical information over two uses of a Pauli channel with Markov-correlated noise."""

from .channels import (
    ChannelSpec,
    DepolarizingSpec,
    KrausSet,
    apply_channel,
    apply_depolarizing_bloch,
    eta_from_p,
    markov_weight,
    p_from_eta,
    two_use_kraus,
)
from .core import (
    TwoQubitBloch,
    bloch_from_density,
    check_density_matrix,
    density_from_bloch,
    eig_hermitian,
    kron2,
    pauli,
    spectrum_entropy,
    von_neumann_entropy,
)
from .info import (
    mutual_information,
    product_information_endpoint,
    signal_information,
    signal_kets,
    signal_output_eigenvalues,
    signal_states,
    threshold_memory,
)
from .optimize import (
    AngleOptimum,
    ProductSearchResult,
    locate_threshold,
    optimize_signal_angle,
    product_density,
    product_output_fidelity,
    product_output_purity,
    search_product_ensembles,
)

__version__ = "0.1.0"

__all__ = [
    "AngleOptimum",
    "ChannelSpec",
    "DepolarizingSpec",
    "KrausSet",
    "ProductSearchResult",
    "TwoQubitBloch",
    "apply_channel",
    "apply_depolarizing_bloch",
    "bloch_from_density",
    "check_density_matrix",
    "density_from_bloch",
    "eig_hermitian",
    "eta_from_p",
    "kron2",
    "locate_threshold",
    "markov_weight",
    "mutual_information",
    "optimize_signal_angle",
    "p_from_eta",
    "pauli",
    "product_density",
    "product_information_endpoint",
    "product_output_fidelity",
    "product_output_purity",
    "search_product_ensembles",
    "signal_information",
    "signal_kets",
    "signal_output_eigenvalues",
    "signal_states",
    "spectrum_entropy",
    "threshold_memory",
    "two_use_kraus",
    "von_neumann_entropy",
]
